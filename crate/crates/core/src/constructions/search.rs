// SPDX-License-Identifier: Apache-2.0

use std::str::FromStr;

use rand::seq::index;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::rng_for;
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::laws::{eval_energy_bias, eval_energy_difference_product, eval_rho_bias_ratio};
use crate::quantities::GroupSubset;

/// A ratio to maximize.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    /// `M^2 rho K / |A|^3`.
    RhoBiasRatio,
    /// `rho^7 M^4 log^7|A| K^7 / |A|^11`.
    EnergyBias,
    /// `E_2(A) E(A, D)^2 K / |A|^9`.
    EnergyDifferenceProduct,
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rho_bias_ratio" | "cor" => Ok(Objective::RhoBiasRatio),
            "energy_bias" | "energy" => Ok(Objective::EnergyBias),
            "energy_difference_product" | "remark-energy" => Ok(Objective::EnergyDifferenceProduct),
            other => Err(Error::validation(format!("unknown objective {other:?}"))),
        }
    }
}

impl Objective {
    pub fn value(self, a: &GroupSubset) -> Result<f64> {
        let report = match self {
            Objective::RhoBiasRatio => eval_rho_bias_ratio(a)?,
            Objective::EnergyBias => eval_energy_bias(a)?,
            Objective::EnergyDifferenceProduct => eval_energy_difference_product(a, 2)?,
        };
        Ok(report.ratio.unwrap_or(f64::INFINITY))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HillClimb {
    #[serde(serialize_with = "members")]
    pub set: GroupSubset,
    pub best: f64,
    /// Objective after each iteration, starting with the initial set.
    pub trace: Vec<f64>,
    pub accepted: usize,
}

fn members<S: serde::Serializer>(set: &GroupSubset, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(set.members())
}

/// Single-swap hill climbing from a seeded random set of `target_size`
/// elements; a swap is kept only when it strictly improves the objective.
pub fn hill_climb_tightness(
    group: &GroupSpec,
    target_size: usize,
    objective: &str,
    seed: u64,
    iterations: usize,
) -> Result<HillClimb> {
    let objective: Objective = objective.parse()?;
    if target_size == 0 || target_size >= group.size() {
        return Err(Error::validation(format!(
            "target size must lie in 1..{}, got {target_size}",
            group.size()
        )));
    }
    let mut rng = rng_for(seed, 16);
    let mut members = index::sample(&mut rng, group.size(), target_size).into_vec();
    let mut set = GroupSubset::new(group, members.iter().copied())?;
    let mut best = objective.value(&set)?;
    let mut trace = Vec::with_capacity(iterations + 1);
    trace.push(best);
    let mut accepted = 0;
    for _ in 0..iterations {
        let out = rng.gen_range(0..members.len());
        let mut incoming = rng.gen_range(0..group.size());
        while set.contains(incoming) {
            incoming = rng.gen_range(0..group.size());
        }
        let previous = members[out];
        members[out] = incoming;
        let candidate = GroupSubset::new(group, members.iter().copied())?;
        let value = objective.value(&candidate)?;
        if value > best {
            best = value;
            set = candidate;
            accepted += 1;
        } else {
            members[out] = previous;
        }
        trace.push(best);
    }
    Ok(HillClimb {
        set,
        best,
        trace,
        accepted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_is_monotone_and_deterministic() {
        let g = GroupSpec::binary(8).unwrap();
        let run = hill_climb_tightness(&g, 16, "cor", 3, 500).unwrap();
        assert_eq!(run.trace.len(), 501);
        assert!(run.trace.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(run.set.len(), 16);
        assert_eq!(run, hill_climb_tightness(&g, 16, "cor", 3, 500).unwrap());
    }

    #[test]
    fn climbing_never_loses_ground() {
        let g = GroupSpec::cyclic(64).unwrap();
        for seed in 0..10 {
            let run = hill_climb_tightness(&g, 8, "rho_bias_ratio", seed, 100).unwrap();
            assert!(run.best >= run.trace[0]);
        }
        for objective in ["energy_bias", "energy_difference_product"] {
            let run = hill_climb_tightness(&g, 8, objective, 1, 30).unwrap();
            assert!(run.trace.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn bad_inputs() {
        let g = GroupSpec::cyclic(16).unwrap();
        assert!(hill_climb_tightness(&g, 4, "nope", 0, 1).is_err());
        assert!(hill_climb_tightness(&g, 16, "cor", 0, 1).is_err());
        assert!(hill_climb_tightness(&g, 0, "cor", 0, 1).is_err());
    }
}
