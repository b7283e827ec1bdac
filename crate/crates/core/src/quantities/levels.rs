// SPDX-License-Identifier: Apache-2.0

use serde::Serialize;

use super::{self_correlation, GroupSubset};

/// Shifts `x != 0` with `delta <= |A ∩ (A + x)| < 2 delta`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DyadicLevel {
    pub delta: u64,
    #[serde(serialize_with = "members")]
    pub set: GroupSubset,
}

fn members<S: serde::Serializer>(set: &GroupSubset, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(set.members())
}

impl DyadicLevel {
    /// `sum_{x ∈ P} |A_x|^exponent` is at most this.
    pub fn upper_mass(&self, exponent: f64) -> f64 {
        (2.0 * self.delta as f64).powf(exponent) * self.set.len() as f64
    }

    pub fn lower_mass(&self, exponent: f64) -> f64 {
        (self.delta as f64).powf(exponent) * self.set.len() as f64
    }
}

/// Nonempty dyadic levels of `x -> |A ∩ (A + x)|` over `x != 0`, by
/// increasing `delta`.
pub fn dyadic_level_sets(a: &GroupSubset) -> Vec<DyadicLevel> {
    let r = self_correlation(a);
    let mut buckets: Vec<Vec<usize>> = Vec::new();
    for (x, &v) in r.iter().enumerate().skip(1) {
        if v == 0 {
            continue;
        }
        let j = 63 - v.leading_zeros() as usize;
        if buckets.len() <= j {
            buckets.resize(j + 1, Vec::new());
        }
        buckets[j].push(x);
    }
    buckets
        .into_iter()
        .enumerate()
        .filter(|(_, b)| !b.is_empty())
        .map(|(j, b)| DyadicLevel {
            delta: 1 << j,
            set: GroupSubset::new(a.group(), b).expect("indices in range"),
        })
        .collect()
}

/// The level carrying the largest share of `sum_{x != 0} |A_x|^exponent`.
pub fn heavy_level(a: &GroupSubset, exponent: f64) -> Option<DyadicLevel> {
    let r = self_correlation(a);
    dyadic_level_sets(a)
        .into_iter()
        .map(|level| {
            let mass: f64 = level.set.members().iter().map(|&x| (r[x] as f64).powf(exponent)).sum();
            (mass, level)
        })
        .max_by(|x, y| x.0.total_cmp(&y.0))
        .map(|(_, level)| level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;
    use crate::quantities::energy_k;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn level_examples() {
        let g = GroupSpec::cyclic(5).unwrap();
        let a = GroupSubset::new(&g, [0, 1]).unwrap();
        let levels = dyadic_level_sets(&a);
        assert_eq!(levels.len(), 1);
        assert_eq!(levels[0].delta, 1);
        assert_eq!(levels[0].set.members(), &[1, 4]);

        let f = GroupSpec::binary(4).unwrap();
        let h = GroupSubset::new(&f, 0..4).unwrap();
        let levels = dyadic_level_sets(&h);
        assert_eq!(levels.len(), 1);
        assert_eq!(levels[0].delta, 4);
        assert_eq!(levels[0].set.members(), &[1, 2, 3]);
    }

    #[test]
    fn levels_partition_the_support() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = GroupSpec::cyclic(97).unwrap();
        for _ in 0..20 {
            let a = GroupSubset::from_predicate(&g, |_| rng.gen_bool(0.3));
            let r = self_correlation(&a);
            let levels = dyadic_level_sets(&a);
            let total: usize = levels.iter().map(|l| l.set.len()).sum();
            assert_eq!(total, r.iter().skip(1).filter(|&&v| v > 0).count());
            for level in &levels {
                for &x in level.set.members() {
                    assert!(level.delta <= r[x] && r[x] < 2 * level.delta);
                }
            }
        }
    }

    #[test]
    fn heavy_level_pigeonhole() {
        let e = 10.0 / 7.0;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in [31usize, 64, 200] {
            let g = GroupSpec::cyclic(n).unwrap();
            for _ in 0..20 {
                let a = GroupSubset::from_predicate(&g, |_| rng.gen_bool(0.4));
                if a.len() < 2 {
                    continue;
                }
                let off_zero = energy_k(&a, e).unwrap() - (a.len() as f64).powf(e);
                let buckets = ((a.len() as f64).log2() + 1.0).ceil();
                let level = heavy_level(&a, e).unwrap();
                assert!(level.upper_mass(e) >= off_zero / buckets * (1.0 - 1e-12));
                let witness = dyadic_level_sets(&a).iter().map(|l| l.lower_mass(e)).fold(0.0, f64::max);
                assert!(witness >= off_zero / buckets * (1.0 - 1e-12));
            }
        }
    }
}
