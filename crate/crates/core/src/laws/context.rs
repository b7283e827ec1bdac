// SPDX-License-Identifier: Apache-2.0

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quantities::{difference_set, rho, sumset, GroupSubset, Sign};

/// Derived scalars shared by the `rho`/`M` bounds for a pair `(A, B)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremContext {
    pub size_a: usize,
    pub size_b: usize,
    pub n: usize,
    pub diff_a: usize,
    pub diff_b: usize,
    pub sum_ab: usize,
    pub rho: u64,
    pub delta: f64,
    pub k: f64,
    pub k_star: f64,
    pub zeta: f64,
    pub omega: f64,
    pub kappa: f64,
    pub kappa_star: f64,
    /// `ln |A|`.
    pub log_a: f64,
    /// `floor(log_K |A| / 2)`; `None` when `K = 1`.
    pub proof_n: Option<u32>,
}

impl TheoremContext {
    pub fn new(a: &GroupSubset, b: &GroupSubset) -> Result<Self> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::validation("theorem context needs nonempty A and B"));
        }
        let n = a.group().size();
        let diff_a = difference_set(a).len();
        let diff_b = difference_set(b).len();
        let sum_ab = sumset(a, b, Sign::Plus)?.len();
        let rho = rho(a)?;
        let (sa, sb) = (a.len() as f64, b.len() as f64);
        let delta = sa / n as f64;
        let k = diff_a as f64 / sa;
        let omega = sum_ab as f64 / diff_a as f64;
        let log_a = sa.ln();
        let proof_n = (diff_a > a.len()).then(|| (0.5 * log_a / k.ln()).floor() as u32);
        Ok(TheoremContext {
            size_a: a.len(),
            size_b: b.len(),
            n,
            diff_a,
            diff_b,
            sum_ab,
            rho,
            delta,
            k,
            k_star: diff_b as f64 / sb,
            zeta: sb / sa,
            omega,
            kappa: k * delta * omega,
            kappa_star: delta * k * k * rho as f64 / sa,
            log_a,
            proof_n,
        })
    }
}
