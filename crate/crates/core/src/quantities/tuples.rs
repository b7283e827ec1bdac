// SPDX-License-Identifier: Apache-2.0

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::limits::Limits;
use crate::quantities::GroupSubset;

/// A set of `k`-tuples of group elements. Tuples are packed into a single
/// base-`N` integer, first coordinate most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleSet {
    group: GroupSpec,
    arity: usize,
    tuples: HashSet<u128>,
}

impl TupleSet {
    pub fn new(group: &GroupSpec, arity: usize) -> Result<Self> {
        if arity == 0 {
            return Err(Error::validation("tuple arity must be at least 1"));
        }
        let bits = (group.size().max(2) as f64).log2().ceil() as usize * arity;
        if bits > 127 {
            return Err(Error::validation(format!("arity {arity} too large to encode over {group}")));
        }
        Ok(TupleSet {
            group: group.clone(),
            arity,
            tuples: HashSet::new(),
        })
    }

    /// `A` viewed as a set of 1-tuples.
    pub fn from_subset(a: &GroupSubset) -> Self {
        let mut t = TupleSet::new(a.group(), 1).expect("arity 1");
        t.tuples.extend(a.members().iter().map(|&m| m as u128));
        t
    }

    pub fn from_tuples(group: &GroupSpec, arity: usize, tuples: &[Vec<usize>]) -> Result<Self> {
        let mut t = TupleSet::new(group, arity)?;
        for tuple in tuples {
            t.insert(tuple)?;
        }
        Ok(t)
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub(crate) fn encode(&self, tuple: &[usize]) -> u128 {
        let n = self.group.size() as u128;
        tuple.iter().fold(0u128, |acc, &x| acc * n + x as u128)
    }

    pub fn decode(&self, code: u128) -> Vec<usize> {
        let n = self.group.size() as u128;
        let mut out = vec![0; self.arity];
        let mut c = code;
        for slot in out.iter_mut().rev() {
            *slot = (c % n) as usize;
            c /= n;
        }
        out
    }

    pub fn insert(&mut self, tuple: &[usize]) -> Result<bool> {
        if tuple.len() != self.arity || tuple.iter().any(|&x| x >= self.group.size()) {
            return Err(Error::validation(format!("invalid {}-tuple {tuple:?}", self.arity)));
        }
        Ok(self.tuples.insert(self.encode(tuple)))
    }

    pub fn contains(&self, tuple: &[usize]) -> bool {
        tuple.len() == self.arity && self.tuples.contains(&self.encode(tuple))
    }

    /// Tuples in ascending code order.
    pub fn sorted(&self) -> Vec<Vec<usize>> {
        let mut codes: Vec<u128> = self.tuples.iter().copied().collect();
        codes.sort_unstable();
        codes.into_iter().map(|c| self.decode(c)).collect()
    }

    /// Cartesian product `self x other`, of arity `k1 + k2`.
    pub fn product(&self, other: &TupleSet, limits: &Limits) -> Result<TupleSet> {
        self.group.ensure_same(&other.group)?;
        let count = self.len() as u128 * other.len() as u128;
        if count > limits.max_tuples {
            return Err(Error::resource("tuple product", limits.max_tuples));
        }
        let mut out = TupleSet::new(&self.group, self.arity + other.arity)?;
        let shift = (self.group.size() as u128).pow(other.arity as u32);
        out.tuples.reserve(count as usize);
        for &a in &self.tuples {
            for &b in &other.tuples {
                out.tuples.insert(a * shift + b);
            }
        }
        Ok(out)
    }
}

/// `S - Δ_k(T) = {(s_1 - t, ..., s_k - t) : s ∈ S, t ∈ T}`.
pub fn tuple_diff(s: &TupleSet, t: &GroupSubset, limits: &Limits) -> Result<TupleSet> {
    s.group.ensure_same(t.group())?;
    let count = s.len() as u128 * t.len() as u128;
    if count > limits.max_tuples {
        return Err(Error::resource("tuple difference", limits.max_tuples));
    }
    let group = &s.group;
    let mut out = TupleSet::new(group, s.arity)?;
    let mut buf = vec![0usize; s.arity];
    for &code in &s.tuples {
        let tuple = s.decode(code);
        for &x in t.members() {
            let neg = group.neg_idx(x);
            for (slot, &v) in buf.iter_mut().zip(&tuple) {
                *slot = group.add_idx(v, neg);
            }
            out.tuples.insert(out.encode(&buf));
        }
    }
    Ok(out)
}
