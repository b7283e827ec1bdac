// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{
    difference_set, energy, eps, fourier_bias, rho, sumset, t_k_count, GroupSubset, Sign,
};
use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct QuantityOptions {
    /// Orders `k` of `T_k(A)` to include.
    pub t_orders: Vec<usize>,
    /// Orders `n` of `eps_n` to include.
    pub eps_orders: Vec<usize>,
}

impl Default for QuantityOptions {
    fn default() -> Self {
        QuantityOptions {
            t_orders: vec![2, 3],
            eps_orders: vec![2],
        }
    }
}

/// The scalar summary of `A` (and optionally `B`) used by every law.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuantityReport {
    pub group: String,
    pub n: usize,
    pub size_a: usize,
    pub delta: f64,
    pub diff_size: usize,
    pub k: f64,
    pub rho: u64,
    pub m: f64,
    pub energy: u128,
    pub t: BTreeMap<String, u128>,
    pub eps: BTreeMap<String, f64>,
    /// `rho >= |A| / (2K)`, i.e. `2 rho |A - A| >= |A|^2`; vacuous for `|A| < 2`.
    pub simple_rho_bound: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<PairQuantities>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairQuantities {
    pub size_b: usize,
    pub zeta: f64,
    pub sum_size: usize,
    pub omega: f64,
    pub kappa: f64,
    pub b_diff_size: usize,
    pub k_star: f64,
}

impl QuantityReport {
    pub fn compute(
        a: &GroupSubset,
        b: Option<&GroupSubset>,
        options: &QuantityOptions,
        limits: &Limits,
    ) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::validation("quantity report needs a nonempty set"));
        }
        let group = a.group();
        let size_a = a.len();
        let d = difference_set(a);
        let k = d.len() as f64 / size_a as f64;
        let delta = size_a as f64 / group.size() as f64;
        let r = rho(a)?;
        let mut t = BTreeMap::new();
        for &order in &options.t_orders {
            t.insert(order.to_string(), t_k_count(a, order)?);
        }
        let mut eps_map = BTreeMap::new();
        for &order in &options.eps_orders {
            eps_map.insert(order.to_string(), eps(a, order, limits)?);
        }
        let pair = match b {
            None => None,
            Some(b) => {
                if b.is_empty() {
                    return Err(Error::validation("quantity report needs a nonempty B"));
                }
                let s = sumset(a, b, Sign::Plus)?;
                let bd = difference_set(b);
                let omega = s.len() as f64 / d.len() as f64;
                Some(PairQuantities {
                    size_b: b.len(),
                    zeta: b.len() as f64 / size_a as f64,
                    sum_size: s.len(),
                    omega,
                    kappa: k * delta * omega,
                    b_diff_size: bd.len(),
                    k_star: bd.len() as f64 / b.len() as f64,
                })
            }
        };
        Ok(QuantityReport {
            group: group.to_string(),
            n: group.size(),
            size_a,
            delta,
            diff_size: d.len(),
            k,
            rho: r,
            m: fourier_bias(a)?,
            energy: energy(a, a)?,
            t,
            eps: eps_map,
            simple_rho_bound: size_a < 2 || 2 * r as u128 * d.len() as u128 >= (size_a as u128).pow(2),
            pair,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn subgroup_report_is_exact() {
        let g = GroupSpec::binary(6).unwrap();
        let h = GroupSubset::new(&g, 0..8).unwrap();
        let r = QuantityReport::compute(&h, Some(&h), &QuantityOptions::default(), &Limits::default()).unwrap();
        assert_eq!(r.k, 1.0);
        assert_eq!(r.rho, 8);
        assert!((r.m - 8.0).abs() < 1e-9);
        assert_eq!(r.energy, 512);
        assert_eq!(r.t["3"], 8u128.pow(5));
        assert_eq!(r.eps["2"], 1.0);
        assert!(r.simple_rho_bound);
        let pair = r.pair.unwrap();
        assert_eq!((pair.zeta, pair.omega, pair.k_star), (1.0, 1.0, 1.0));
    }

    #[test]
    fn simple_rho_bound_always_holds() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let options = QuantityOptions {
            t_orders: vec![],
            eps_orders: vec![1, 2],
        };
        for n in [10usize, 33, 64] {
            let g = GroupSpec::cyclic(n).unwrap();
            for _ in 0..20 {
                let a = GroupSubset::from_predicate(&g, |_| rng.gen_bool(0.3));
                if a.len() < 2 {
                    continue;
                }
                let r = QuantityReport::compute(&a, None, &options, &Limits::default()).unwrap();
                assert!(r.simple_rho_bound);
                assert!(r.delta > 0.0 && r.delta <= 1.0 && r.k >= 1.0);
                for (order, &e) in &r.eps {
                    let n: i32 = order.parse().unwrap();
                    assert!(e <= 1.0 && e >= r.k.powi(-n) * (1.0 - 1e-12));
                }
            }
        }
    }
}
