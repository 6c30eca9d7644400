//! Synthetic testbed for adversarial perturbation attacks on fairness-aware
//! re-ranking.
//!
//! The pipeline: generate a deterministic synthetic query corpus, train a
//! small demographic-inference classifier on it, train a bounded perturbation
//! generator against that classifier, apply the perturbations to a fraction
//! of the corpus, re-rank with a fairness-aware re-ranker (FMMR or
//! DetConstSort), and measure how much unfair advantage the attack confers
//! via Skew, geometric Attention, NDCG, and the attack-effectiveness score.
//!
//! Core math is generic over the scalar type (see [`num::Real`]); the
//! concrete aliases below fix `f64` for the harness and CLI.

pub mod attack;
pub mod corpus;
pub mod error;
pub mod harness;
pub mod inference;
pub mod metrics;
pub mod num;
pub mod rerank;
pub mod rng;

pub use error::{Error, Result};

/// Scalar type used by the harness, the CLI, and all serialized artifacts.
pub type Scalar = f64;

pub type Corpus = corpus::Corpus<Scalar>;
pub type Item = corpus::Item<Scalar>;
pub type QueryProfile = corpus::QueryProfile<Scalar>;
