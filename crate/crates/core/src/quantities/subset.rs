// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::spectral::DenseFunction;

/// A subset of a group, kept both as a membership bit-vector and as the
/// sorted list of member indices.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupSubset {
    group: GroupSpec,
    bits: Vec<u64>,
    members: Vec<usize>,
}

impl fmt::Debug for GroupSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupSubset({:?}, {:?})", self.group, self.members)
    }
}

impl GroupSubset {
    pub fn new(group: &GroupSpec, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let n = group.size();
        let mut bits = vec![0u64; n.div_ceil(64)];
        for m in members {
            if m >= n {
                return Err(Error::validation(format!("element index {m} out of range for {group}")));
            }
            bits[m / 64] |= 1 << (m % 64);
        }
        Ok(Self::from_bits(group, bits))
    }

    fn from_bits(group: &GroupSpec, bits: Vec<u64>) -> Self {
        let members = bits
            .iter()
            .enumerate()
            .flat_map(|(w, &word)| {
                let mut word = word;
                std::iter::from_fn(move || {
                    if word == 0 {
                        return None;
                    }
                    let t = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(w * 64 + t)
                })
            })
            .collect();
        GroupSubset {
            group: group.clone(),
            bits,
            members,
        }
    }

    pub fn empty(group: &GroupSpec) -> Self {
        Self::from_bits(group, vec![0; group.size().div_ceil(64)])
    }

    pub fn full(group: &GroupSpec) -> Self {
        Self::new(group, 0..group.size()).expect("indices in range")
    }

    pub fn singleton(group: &GroupSpec, index: usize) -> Result<Self> {
        Self::new(group, [index])
    }

    pub fn from_predicate(group: &GroupSpec, mut pred: impl FnMut(usize) -> bool) -> Self {
        Self::new(group, (0..group.size()).filter(|&i| pred(i))).expect("indices in range")
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    /// Cardinality.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    #[inline]
    pub fn contains(&self, index: usize) -> bool {
        index < self.group.size() && self.bits[index / 64] >> (index % 64) & 1 == 1
    }

    pub fn indicator(&self) -> DenseFunction {
        DenseFunction::indicator(&self.group, &self.members)
    }

    /// `A + g`.
    pub fn translate(&self, g: usize) -> Self {
        let group = &self.group;
        Self::new(group, self.members.iter().map(|&a| group.add_idx(a, g))).expect("closed")
    }

    /// `-A`.
    pub fn negate(&self) -> Self {
        let group = &self.group;
        Self::new(group, self.members.iter().map(|&a| group.neg_idx(a))).expect("closed")
    }

    pub fn intersection(&self, other: &GroupSubset) -> Result<Self> {
        self.group.ensure_same(&other.group)?;
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect();
        Ok(Self::from_bits(&self.group, bits))
    }

    pub fn union(&self, other: &GroupSubset) -> Result<Self> {
        self.group.ensure_same(&other.group)?;
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a | b).collect();
        Ok(Self::from_bits(&self.group, bits))
    }

    pub fn is_subset(&self, other: &GroupSubset) -> bool {
        self.group == other.group && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn complement(&self) -> Self {
        Self::from_predicate(&self.group, |i| !self.contains(i))
    }

    /// `A_x = A ∩ (A + x)`.
    pub fn shift_intersection(&self, x: usize) -> Self {
        let group = &self.group;
        let neg = group.neg_idx(x);
        Self::new(group, self.members.iter().copied().filter(|&a| self.contains(group.add_idx(a, neg))))
            .expect("closed")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cardinality_tracks_bits() {
        let g = GroupSpec::cyclic(130).unwrap();
        let a = GroupSubset::new(&g, [0, 64, 129, 64, 3]).unwrap();
        assert_eq!(a.len(), 4);
        assert_eq!(a.members(), &[0, 3, 64, 129]);
        assert!(a.contains(129) && !a.contains(128));
        assert_eq!(a.complement().len(), 126);
        assert!(GroupSubset::new(&g, [130]).is_err());
    }

    #[test]
    fn shift_intersection_matches_definition() {
        let g = GroupSpec::cyclic(7).unwrap();
        let a = GroupSubset::new(&g, [0, 1, 3]).unwrap();
        assert_eq!(a.shift_intersection(1).members(), &[1]);
        assert_eq!(a.shift_intersection(0), a);
        let direct = a.intersection(&a.translate(2)).unwrap();
        assert_eq!(a.shift_intersection(2), direct);
    }
}
