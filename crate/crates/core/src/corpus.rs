//! Synthetic query populations.
//!
//! A [`QueryProfile`] is a generative recipe for one query's retrieved set:
//! group weights, per-group utility distributions (truncated normals on
//! [0,1]), and per-group feature clusters (isotropic Gaussians in R^d).
//! [`generate_corpus`] realizes a profile into a [`Corpus`] deterministically
//! from a seed.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::Real;
use crate::rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SkinTone {
    Light,
    Dark,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gender {
    Man,
    Woman,
}

/// One demographic subgroup: the cross product of skin tone and gender.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Group {
    pub skin: SkinTone,
    pub gender: Gender,
}

pub const LIGHT_MAN: Group = Group { skin: SkinTone::Light, gender: Gender::Man };
pub const LIGHT_WOMAN: Group = Group { skin: SkinTone::Light, gender: Gender::Woman };
pub const DARK_MAN: Group = Group { skin: SkinTone::Dark, gender: Gender::Man };
pub const DARK_WOMAN: Group = Group { skin: SkinTone::Dark, gender: Gender::Woman };

impl Group {
    pub const COUNT: usize = 4;
    pub const ALL: [Group; 4] = [LIGHT_MAN, LIGHT_WOMAN, DARK_MAN, DARK_WOMAN];

    pub fn index(self) -> usize {
        match (self.skin, self.gender) {
            (SkinTone::Light, Gender::Man) => 0,
            (SkinTone::Light, Gender::Woman) => 1,
            (SkinTone::Dark, Gender::Man) => 2,
            (SkinTone::Dark, Gender::Woman) => 3,
        }
    }

    pub fn from_index(i: usize) -> Option<Group> {
        Group::ALL.get(i).copied()
    }

    pub fn label(self) -> &'static str {
        match self.index() {
            0 => "light_man",
            1 => "light_woman",
            2 => "dark_man",
            _ => "dark_woman",
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Group> {
        Group::ALL
            .into_iter()
            .find(|g| g.label() == s)
            .ok_or_else(|| Error::Parse(format!("unknown group `{s}`")))
    }
}

impl Serialize for Group {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

impl<'de> Deserialize<'de> for Group {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Group, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Dense map from [`Group`] to a value, with a fixed iteration order.
///
/// Used everywhere a `Group -> value` association crosses a module boundary;
/// the fixed order keeps every downstream computation deterministic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupMap<T>(pub [T; Group::COUNT]);

impl<T> GroupMap<T> {
    pub fn from_fn(f: impl FnMut(Group) -> T) -> Self {
        GroupMap(Group::ALL.map(f))
    }

    pub fn get(&self, g: Group) -> &T {
        &self.0[g.index()]
    }

    pub fn get_mut(&mut self, g: Group) -> &mut T {
        &mut self.0[g.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Group, &T)> {
        Group::ALL.iter().copied().zip(self.0.iter())
    }

    pub fn map<U>(&self, mut f: impl FnMut(Group, &T) -> U) -> GroupMap<U> {
        GroupMap(Group::ALL.map(|g| f(g, self.get(g))))
    }
}

impl<T: Default> Default for GroupMap<T> {
    fn default() -> Self {
        GroupMap::from_fn(|_| T::default())
    }
}

impl<T: Serialize> Serialize for GroupMap<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m: BTreeMap<&str, &T> = self.iter().map(|(g, v)| (g.label(), v)).collect();
        m.serialize(s)
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for GroupMap<T> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m: BTreeMap<String, T> = BTreeMap::deserialize(d)?;
        let mut slots: [Option<T>; Group::COUNT] = [None, None, None, None];
        for (k, v) in m {
            let g: Group = k.parse().map_err(serde::de::Error::custom)?;
            slots[g.index()] = Some(v);
        }
        let mut vals = Vec::with_capacity(Group::COUNT);
        for (i, slot) in slots.into_iter().enumerate() {
            let g = Group::from_index(i).expect("index in range");
            vals.push(slot.ok_or_else(|| {
                serde::de::Error::custom(format!("missing group `{}`", g.label()))
            })?);
        }
        Ok(GroupMap(
            <[T; Group::COUNT]>::try_from(vals).map_err(|_| serde::de::Error::custom("arity"))?,
        ))
    }
}

/// One corpus member. `features` is the attack surface; `utility` is the
/// fixed relevance score the baseline ranking sorts by.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Item<F> {
    pub id: u64,
    pub features: Vec<F>,
    pub group: Group,
    pub utility: F,
}

/// Mean and standard deviation of a normal truncated to [0, 1].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UtilityParams<F> {
    pub mean: F,
    pub stddev: F,
}

/// Isotropic Gaussian cluster for one group's features.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureParams<F> {
    pub centroid: Vec<F>,
    pub spread: F,
}

/// Generative recipe for one query's retrieved population.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QueryProfile<F> {
    pub name: String,
    pub list_size: usize,
    pub group_weights: GroupMap<F>,
    pub utility_params: GroupMap<UtilityParams<F>>,
    pub feature_params: GroupMap<FeatureParams<F>>,
}

impl<F: Real> QueryProfile<F> {
    /// Validates the profile invariants: nonnegative weights with a positive
    /// sum, positive stddevs and spreads, consistent feature dimension, and
    /// a list size of at least the number of active groups.
    pub fn validate(&self) -> Result<()> {
        let mut active = 0usize;
        let mut sum = F::zero();
        for (g, &w) in self.group_weights.iter() {
            if !w.is_finite() || w < F::zero() {
                return Err(Error::config(format!(
                    "group weight for {g} must be finite and nonnegative"
                )));
            }
            if w > F::zero() {
                active += 1;
            }
            sum += w;
        }
        if !(sum > F::zero()) {
            return Err(Error::config("group weights must not all be zero"));
        }
        for (g, p) in self.utility_params.iter() {
            if !(p.stddev > F::zero()) || !p.mean.is_finite() {
                return Err(Error::config(format!("utility params for {g} invalid")));
            }
        }
        let d = self.feature_dim();
        for (g, p) in self.feature_params.iter() {
            if p.centroid.len() != d {
                return Err(Error::config(format!(
                    "feature centroid for {g} has dimension {} != {d}",
                    p.centroid.len()
                )));
            }
            if !(p.spread > F::zero()) || p.centroid.iter().any(|c| !c.is_finite()) {
                return Err(Error::config(format!("feature params for {g} invalid")));
            }
        }
        if self.list_size < active.max(1) {
            return Err(Error::config(format!(
                "list_size {} is smaller than the {active} groups with positive weight",
                self.list_size
            )));
        }
        Ok(())
    }

    pub fn feature_dim(&self) -> usize {
        self.feature_params.get(LIGHT_MAN).centroid.len()
    }

    /// Group weights normalized to sum to 1.
    pub fn normalized_weights(&self) -> GroupMap<F> {
        let sum: F = self.group_weights.iter().map(|(_, &w)| w).sum();
        self.group_weights.map(|_, &w| w / sum)
    }
}

/// An immutable realized population plus the recipe and seed that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Corpus<F> {
    pub format_version: u32,
    pub seed: u64,
    pub profile: QueryProfile<F>,
    pub items: Vec<Item<F>>,
}

pub const CORPUS_FORMAT_VERSION: u32 = 1;

impl<F: Real> Corpus<F> {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn feature_dim(&self) -> usize {
        self.profile.feature_dim()
    }

    /// True demographic label per item id.
    pub fn labels(&self) -> BTreeMap<u64, Group> {
        self.items.iter().map(|it| (it.id, it.group)).collect()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(json: &str) -> Result<Self> {
        let c: Corpus<F> = serde_json::from_str(json)?;
        if c.format_version != CORPUS_FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "unsupported corpus format_version {}",
                c.format_version
            )));
        }
        c.profile.validate()?;
        for it in &c.items {
            if it.features.iter().any(|f| !f.is_finite()) {
                return Err(Error::Parse(format!("item {} has non-finite features", it.id)));
            }
        }
        Ok(c)
    }
}

/// Draws from a normal truncated to [0, 1] by rejection, capped at 1000
/// attempts and then clamped.
fn truncated_unit_normal<F: Real>(rng: &mut impl Rng, mean: F, stddev: F) -> F {
    let dist = Normal::new(mean.as_f64(), stddev.as_f64()).expect("validated stddev");
    for _ in 0..1000 {
        let v = dist.sample(rng);
        if (0.0..=1.0).contains(&v) {
            return F::of(v);
        }
    }
    F::of(dist.sample(rng).clamp(0.0, 1.0))
}

fn sample_group<F: Real>(rng: &mut impl Rng, weights: &GroupMap<F>) -> Group {
    let u: f64 = rng.gen();
    let mut acc = 0.0;
    for (g, &w) in weights.iter() {
        acc += w.as_f64();
        if u < acc {
            return g;
        }
    }
    // Guard against cumulative rounding; the last positive-weight group wins.
    let mut last = LIGHT_MAN;
    for (g, &w) in weights.iter() {
        if w > F::zero() {
            last = g;
        }
    }
    last
}

/// Generates a corpus from a profile, deterministically in `(profile, seed)`.
///
/// Each item draws its group from the normalized weights, its utility from
/// the group's truncated normal, and its features from the group's isotropic
/// Gaussian cluster.
pub fn generate_corpus<F: Real>(profile: &QueryProfile<F>, seed: u64) -> Result<Corpus<F>> {
    profile.validate()?;
    let weights = profile.normalized_weights();
    let mut rng = rng::stream(rng::mix_str(seed, "corpus"));
    let d = profile.feature_dim();
    let unit = Normal::new(0.0, 1.0).expect("unit normal");

    let mut items = Vec::with_capacity(profile.list_size);
    for id in 0..profile.list_size as u64 {
        let group = sample_group(&mut rng, &weights);
        let up = profile.utility_params.get(group);
        let utility = truncated_unit_normal(&mut rng, up.mean, up.stddev);
        let fp = profile.feature_params.get(group);
        let features = (0..d)
            .map(|j| fp.centroid[j] + fp.spread * F::of(unit.sample(&mut rng)))
            .collect();
        items.push(Item { id, features, group, utility });
    }
    Ok(Corpus {
        format_version: CORPUS_FORMAT_VERSION,
        seed,
        profile: profile.clone(),
        items,
    })
}

/// Splits a corpus into disjoint train/eval parts of sizes
/// `(floor(ratio * n), n - floor(ratio * n))`, deterministically in `seed`.
pub fn split_train_eval<F: Real>(
    corpus: &Corpus<F>,
    ratio: f64,
    seed: u64,
) -> Result<(Corpus<F>, Corpus<F>)> {
    if !(ratio > 0.0 && ratio < 1.0) {
        return Err(Error::config(format!("split ratio {ratio} must lie in (0, 1)")));
    }
    let n = corpus.len();
    let n_train = (ratio * n as f64).floor() as usize;
    let mut order: Vec<usize> = (0..n).collect();
    let mut rng = rng::stream(rng::mix_str(seed, "split"));
    // Fisher-Yates with the crate RNG, not rand's shuffle, so the permutation
    // is pinned by this code alone.
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        order.swap(i, j);
    }
    let make = |idx: &[usize]| {
        let items: Vec<Item<F>> = idx.iter().map(|&i| corpus.items[i].clone()).collect();
        let mut profile = corpus.profile.clone();
        profile.list_size = items.len();
        Corpus {
            format_version: CORPUS_FORMAT_VERSION,
            seed: corpus.seed,
            profile,
            items,
        }
    };
    Ok((make(&order[..n_train]), make(&order[n_train..])))
}

/// Fraction of the corpus in each group. Fractions sum to 1 within 1e-12.
pub fn group_proportions<F: Real>(corpus: &Corpus<F>) -> Result<GroupMap<F>> {
    if corpus.is_empty() {
        return Err(Error::domain("group_proportions of an empty corpus"));
    }
    let mut counts = GroupMap::<usize>::default();
    for it in &corpus.items {
        *counts.get_mut(it.group) += 1;
    }
    let n = F::of(corpus.len() as f64);
    Ok(counts.map(|_, &c| F::of(c as f64) / n))
}

/// Feature geometry shared by the bundled profiles.
///
/// Group centroids follow a sign pattern `a * (skin +/- gender * (-1)^j)` per
/// dimension, which puts every pair of groups at least `2 a sqrt(d)` apart
/// while keeping per-dimension gaps small relative to the cluster spread.
pub fn default_centroid<F: Real>(group: Group, dim: usize, scale: f64) -> Vec<F> {
    let s = match group.skin {
        SkinTone::Light => 1.0,
        SkinTone::Dark => -1.0,
    };
    let g = match group.gender {
        Gender::Man => 1.0,
        Gender::Woman => -1.0,
    };
    (0..dim)
        .map(|j| {
            let alt = if j % 2 == 0 { 1.0 } else { -1.0 };
            F::of(scale * (s + g * alt))
        })
        .collect()
}

pub const DEFAULT_FEATURE_DIM: usize = 64;
pub const DEFAULT_CENTROID_SCALE: f64 = 0.25;
pub const DEFAULT_FEATURE_SPREAD: f64 = 1.0;

/// Subgroup weights matching the published population counts.
pub fn default_group_weights<F: Real>() -> GroupMap<F> {
    let counts = [5216.0, 2536.0, 714.0, 226.0];
    GroupMap::from_fn(|g| F::of(counts[g.index()]))
}

fn profile_with_utilities<F: Real>(
    name: &str,
    list_size: usize,
    means: [f64; 4],
) -> QueryProfile<F> {
    QueryProfile {
        name: name.to_string(),
        list_size,
        group_weights: default_group_weights(),
        utility_params: GroupMap::from_fn(|g| UtilityParams {
            mean: F::of(means[g.index()]),
            stddev: F::of(0.08),
        }),
        feature_params: GroupMap::from_fn(|g| FeatureParams {
            centroid: default_centroid(g, DEFAULT_FEATURE_DIM, DEFAULT_CENTROID_SCALE),
            spread: F::of(DEFAULT_FEATURE_SPREAD),
        }),
    }
}

/// The three bundled query profiles. Utility means are qualitative mimics of
/// the published per-query score distributions, not measured values: "tennis"
/// has the widest majority advantage, "table" a moderate one, and "pizza"
/// gives the minority groups the higher means.
pub fn builtin_profile<F: Real>(name: &str) -> Option<QueryProfile<F>> {
    match name {
        "tennis" => Some(profile_with_utilities("tennis", 131, [0.74, 0.62, 0.50, 0.45])),
        "pizza" => Some(profile_with_utilities("pizza", 75, [0.58, 0.60, 0.68, 0.66])),
        "table" => Some(profile_with_utilities("table", 124, [0.68, 0.63, 0.58, 0.55])),
        "attack-train" => Some(profile_with_utilities("attack-train", 2000, [0.6, 0.6, 0.6, 0.6])),
        _ => None,
    }
}

pub fn builtin_profile_names() -> &'static [&'static str] {
    &["tennis", "pizza", "table", "attack-train"]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_group_profile(n: usize) -> QueryProfile<f64> {
        let mut p = builtin_profile::<f64>("tennis").unwrap();
        p.name = "single".into();
        p.list_size = n;
        p.group_weights = GroupMap::from_fn(|g| if g == DARK_WOMAN { 1.0 } else { 0.0 });
        p
    }

    #[test]
    fn default_weights_match_published_fractions() {
        let p = builtin_profile::<f64>("attack-train").unwrap();
        let c = generate_corpus(&p, 9).unwrap();
        let props = group_proportions(&c).unwrap();
        let expected = [0.600, 0.292, 0.082, 0.026];
        for (g, &f) in props.iter() {
            assert!(
                (f - expected[g.index()]).abs() <= 0.03,
                "{g}: {f} vs {}",
                expected[g.index()]
            );
        }
    }

    #[test]
    fn single_group_profile_yields_only_that_group() {
        let c = generate_corpus(&single_group_profile(50), 3).unwrap();
        assert!(c.items.iter().all(|it| it.group == DARK_WOMAN));
    }

    #[test]
    fn regeneration_is_byte_identical_and_seed_sensitive() {
        let p = builtin_profile::<f64>("pizza").unwrap();
        let a = generate_corpus(&p, 11).unwrap().to_json().unwrap();
        let b = generate_corpus(&p, 11).unwrap().to_json().unwrap();
        assert_eq!(a, b);

        let c = generate_corpus(&p, 12).unwrap();
        let d = generate_corpus(&p, 11).unwrap();
        let mut uc: Vec<f64> = c.items.iter().map(|i| i.utility).collect();
        let mut ud: Vec<f64> = d.items.iter().map(|i| i.utility).collect();
        uc.sort_by(f64::total_cmp);
        ud.sort_by(f64::total_cmp);
        assert_ne!(uc, ud, "different seeds must give different utility multisets");
    }

    #[test]
    fn split_has_floor_sizes_and_disjoint_ids() {
        let mut p = builtin_profile::<f64>("tennis").unwrap();
        p.list_size = 100;
        let c = generate_corpus(&p, 5).unwrap();
        let (tr, ev) = split_train_eval(&c, 0.8, 77).unwrap();
        assert_eq!((tr.len(), ev.len()), (80, 20));
        let tr_ids: std::collections::BTreeSet<u64> = tr.items.iter().map(|i| i.id).collect();
        assert!(ev.items.iter().all(|i| !tr_ids.contains(&i.id)));
    }

    #[test]
    fn split_of_two_items_is_one_one() {
        let c = generate_corpus(&single_group_profile(2), 1).unwrap();
        let (tr, ev) = split_train_eval(&c, 0.5, 0).unwrap();
        assert_eq!((tr.len(), ev.len()), (1, 1));
    }

    #[test]
    fn split_partition_is_exhaustive_over_random_trials() {
        let mut p = builtin_profile::<f64>("pizza").unwrap();
        p.list_size = 37;
        for trial in 0..100u64 {
            let c = generate_corpus(&p, trial).unwrap();
            let ratio = 0.1 + 0.8 * (trial as f64 / 100.0);
            let (tr, ev) = split_train_eval(&c, ratio, trial ^ 0xabc).unwrap();
            let mut ids: Vec<u64> = tr.items.iter().chain(&ev.items).map(|i| i.id).collect();
            ids.sort_unstable();
            let all: Vec<u64> = (0..37).collect();
            assert_eq!(ids, all);
        }
    }

    #[test]
    fn split_rejects_out_of_range_ratio() {
        let c = generate_corpus(&single_group_profile(4), 1).unwrap();
        assert!(split_train_eval(&c, 0.0, 0).is_err());
        assert!(split_train_eval(&c, 1.0, 0).is_err());
    }

    #[test]
    fn proportions_count_and_sum_to_one() {
        let mut p = builtin_profile::<f64>("tennis").unwrap();
        p.list_size = 10;
        // Force a 4/10 composition by relabeling after generation.
        let mut c = generate_corpus(&p, 2).unwrap();
        for (i, it) in c.items.iter_mut().enumerate() {
            it.group = if i < 4 { DARK_MAN } else { LIGHT_WOMAN };
        }
        let props = group_proportions(&c).unwrap();
        assert!((props.get(DARK_MAN) - 0.4).abs() < 1e-15);
        let sum: f64 = props.iter().map(|(_, &v)| v).sum();
        assert!((sum - 1.0).abs() < 1e-12);

        let single = generate_corpus(&single_group_profile(8), 4).unwrap();
        let props = group_proportions(&single).unwrap();
        assert_eq!(*props.get(DARK_WOMAN), 1.0);
        assert_eq!(*props.get(LIGHT_MAN), 0.0);
    }

    #[test]
    fn figure_population_two_thirds_one_third() {
        // 12 items: 8 light, 4 dark.
        let mut p = builtin_profile::<f64>("tennis").unwrap();
        p.list_size = 12;
        let mut c = generate_corpus(&p, 6).unwrap();
        for (i, it) in c.items.iter_mut().enumerate() {
            it.group = if i < 8 { LIGHT_MAN } else { DARK_MAN };
        }
        let props = group_proportions(&c).unwrap();
        assert!((props.get(LIGHT_MAN) - 2.0 / 3.0).abs() < 1e-12);
        assert!((props.get(DARK_MAN) - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn proportions_converge_to_weights_at_large_n() {
        let mut p = builtin_profile::<f64>("attack-train").unwrap();
        p.list_size = 10_000;
        let c = generate_corpus(&p, 1234).unwrap();
        let props = group_proportions(&c).unwrap();
        let w = p.normalized_weights();
        for (g, &f) in props.iter() {
            let q = *w.get(g);
            let sigma = (q * (1.0 - q) / 10_000.0).sqrt();
            assert!(
                (f - q).abs() <= 3.0 * sigma,
                "{g}: fraction {f} vs weight {q} (3 sigma = {})",
                3.0 * sigma
            );
        }
    }

    #[test]
    fn higher_utility_mean_shows_up_empirically() {
        let mut successes = 0;
        for seed in 0..100u64 {
            let p = builtin_profile::<f64>("tennis").unwrap();
            let mut p = p;
            p.list_size = 500;
            let c = generate_corpus(&p, seed).unwrap();
            let mean = |g: Group| {
                let vals: Vec<f64> = c
                    .items
                    .iter()
                    .filter(|i| i.group == g)
                    .map(|i| i.utility)
                    .collect();
                vals.iter().sum::<f64>() / vals.len().max(1) as f64
            };
            if mean(LIGHT_MAN) > mean(LIGHT_WOMAN) {
                successes += 1;
            }
        }
        assert!(successes >= 95, "only {successes}/100 seeds ordered the means");
    }

    #[test]
    fn invalid_profiles_are_rejected() {
        let mut p = builtin_profile::<f64>("tennis").unwrap();
        p.list_size = 0;
        assert!(matches!(generate_corpus(&p, 0), Err(Error::Config(_))));

        let mut p = builtin_profile::<f64>("tennis").unwrap();
        *p.group_weights.get_mut(LIGHT_MAN) = -1.0;
        assert!(matches!(generate_corpus(&p, 0), Err(Error::Config(_))));

        let mut p = builtin_profile::<f64>("tennis").unwrap();
        p.utility_params.get_mut(DARK_MAN).stddev = 0.0;
        assert!(matches!(generate_corpus(&p, 0), Err(Error::Config(_))));
    }

    #[test]
    fn corpus_json_roundtrip() {
        let mut p = builtin_profile::<f64>("pizza").unwrap();
        p.list_size = 12;
        let c = generate_corpus(&p, 3).unwrap();
        let json = c.to_json().unwrap();
        let back = Corpus::<f64>::from_json(&json).unwrap();
        assert_eq!(c, back);
    }

    #[test]
    fn group_serde_uses_labels() {
        let s = serde_json::to_string(&DARK_WOMAN).unwrap();
        assert_eq!(s, "\"dark_woman\"");
        let g: Group = serde_json::from_str(&s).unwrap();
        assert_eq!(g, DARK_WOMAN);
    }
}
