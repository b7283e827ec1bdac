// SPDX-License-Identifier: Apache-2.0

//! Set constructions: subgroups, `H + Λ`, quadratic residues, progressions
//! and seeded random sets, plus a hill climb for near-extremal sets.
//!
//! Randomness comes from ChaCha8 seeded with the set's seed, one stream per
//! purpose: 1 for `random`, 2 for `random_in_subgroup`, 3 for
//! `random_sized`, 16 for the hill climb.

mod search;
mod spec;

use std::collections::HashSet;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use search::{hill_climb_tightness, HillClimb, Objective};
pub use spec::{ElementRepr, SetKind, SetSpec};

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::quantities::{sumset, GroupSubset, Sign};
use crate::spectral::DenseFunction;

pub(crate) fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn resolve_all(list: &[ElementRepr], group: &GroupSpec) -> Result<Vec<usize>> {
    list.iter().map(|e| e.resolve(group)).collect()
}

/// The subgroup generated by `generators`.
pub fn span(group: &GroupSpec, generators: &[usize]) -> Result<GroupSubset> {
    let mut h = GroupSubset::singleton(group, 0)?;
    for &g in generators {
        let mut cyclic = vec![0];
        let mut x = g;
        while x != 0 {
            cyclic.push(x);
            x = group.add_idx(x, g);
        }
        h = sumset(&h, &GroupSubset::new(group, cyclic)?, Sign::Plus)?;
    }
    Ok(h)
}

/// Coset labels of `H`: `label[x] == label[y]` iff `x - y ∈ H`.
fn coset_labels(h: &GroupSubset) -> Vec<usize> {
    let group = h.group();
    let mut label = vec![usize::MAX; group.size()];
    let mut next = 0;
    for x in 0..group.size() {
        if label[x] != usize::MAX {
            continue;
        }
        for &m in h.members() {
            label[group.add_idx(x, m)] = next;
        }
        next += 1;
    }
    label
}

/// Subset sums of `reps` as coset labels; `None` if two coincide.
fn independent_sums(group: &GroupSpec, label: &[usize], reps: &[usize]) -> Option<Vec<usize>> {
    let mut sums = vec![0usize];
    for &r in reps {
        let shifted: Vec<usize> = sums.iter().map(|&s| group.add_idx(s, r)).collect();
        sums.extend(shifted);
    }
    let mut seen = HashSet::new();
    sums.iter().all(|&s| seen.insert(label[s])).then_some(sums)
}

fn h_plus_lambda(
    group: &GroupSpec,
    generators: &[usize],
    lambda_size: usize,
    reps: Option<Vec<usize>>,
) -> Result<GroupSubset> {
    if lambda_size == 0 {
        return Err(Error::validation("Λ needs at least one element"));
    }
    let h = span(group, generators)?;
    let label = coset_labels(&h);
    let reps = match reps {
        Some(r) => {
            if r.len() != lambda_size - 1 {
                return Err(Error::validation(format!(
                    "Λ of size {lambda_size} needs {} representatives, got {}",
                    lambda_size - 1,
                    r.len()
                )));
            }
            if independent_sums(group, &label, &r).is_none() {
                return Err(Error::validation("Λ representatives are not independent over H"));
            }
            r
        }
        None => {
            let units = (0..group.rank()).map(|axis| group.unit(axis).expect("axis in range"));
            let mut chosen: Vec<usize> = Vec::new();
            for candidate in units.chain(0..group.size()) {
                if chosen.len() + 1 == lambda_size {
                    break;
                }
                let mut trial = chosen.clone();
                trial.push(candidate);
                if independent_sums(group, &label, &trial).is_some() {
                    chosen = trial;
                }
            }
            if chosen.len() + 1 < lambda_size {
                return Err(Error::validation(format!(
                    "no {} representatives independent over a subgroup of order {}",
                    lambda_size - 1,
                    h.len()
                )));
            }
            chosen
        }
    };
    let lambda = GroupSubset::new(group, std::iter::once(0).chain(reps))?;
    sumset(&h, &lambda, Sign::Plus)
}

pub(crate) fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `{x^2 mod p : 1 <= x < p}` in `Z/p`.
pub fn quadratic_residues(group: &GroupSpec, p: usize) -> Result<GroupSubset> {
    if !is_prime(p) {
        return Err(Error::validation(format!("{p} is not prime")));
    }
    if group.orders() != [p] {
        return Err(Error::validation(format!("quadratic residues mod {p} live in Z/{p}, not {group}")));
    }
    GroupSubset::new(group, (1..p).map(|x| (x * x) % p))
}

/// Builds the set described by `spec` inside `group`.
pub fn build(spec: &SetSpec, group: &GroupSpec) -> Result<GroupSubset> {
    let check_q = |q: f64| {
        if (0.0..=1.0).contains(&q) {
            Ok(q)
        } else {
            Err(Error::validation(format!("density {q} outside [0, 1]")))
        }
    };
    match &spec.kind {
        SetKind::Explicit { elements } => GroupSubset::new(group, resolve_all(elements, group)?),
        SetKind::Subgroup { generators } => span(group, &resolve_all(generators, group)?),
        SetKind::RandomInSubgroup { generators, q } => {
            let q = check_q(*q)?;
            let h = span(group, &resolve_all(generators, group)?)?;
            let mut rng = rng_for(spec.seed, 2);
            GroupSubset::new(group, h.members().iter().copied().filter(|_| rng.gen_bool(q)))
        }
        SetKind::HPlusLambda {
            generators,
            lambda_size,
            representatives,
        } => {
            let reps = representatives.as_ref().map(|r| resolve_all(r, group)).transpose()?;
            h_plus_lambda(group, &resolve_all(generators, group)?, *lambda_size, reps)
        }
        SetKind::QuadraticResidues { p } => quadratic_residues(group, *p),
        SetKind::Progression { start, step, len } => {
            let (a, d) = (start.resolve(group)?, step.resolve(group)?);
            let mut x = a;
            let mut members = Vec::with_capacity(*len);
            for _ in 0..*len {
                members.push(x);
                x = group.add_idx(x, d);
            }
            GroupSubset::new(group, members)
        }
        SetKind::Random { q } => {
            let q = check_q(*q)?;
            let mut rng = rng_for(spec.seed, 1);
            Ok(GroupSubset::from_predicate(group, |_| rng.gen_bool(q)))
        }
        SetKind::RandomSized { size } => {
            if *size > group.size() {
                return Err(Error::validation(format!("cannot pick {size} elements from {group}")));
            }
            let mut rng = rng_for(spec.seed, 3);
            GroupSubset::new(group, index::sample(&mut rng, group.size(), *size))
        }
    }
}

/// `f = 1_A - |A| / N`.
pub fn balanced_function(a: &GroupSubset) -> Result<DenseFunction> {
    if a.is_empty() {
        return Err(Error::validation("balanced function needs a nonempty set"));
    }
    let mean = a.len() as f64 / a.group().size() as f64;
    let values: Vec<f64> = (0..a.group().size())
        .map(|i| if a.contains(i) { 1.0 - mean } else { -mean })
        .collect();
    DenseFunction::from_real(a.group(), &values)
}
