// SPDX-License-Identifier: Apache-2.0

//! Finite abelian groups `Z/n_1 x ... x Z/n_r` in mixed-radix encoding.
//!
//! Elements are stored as linear indices with the first coordinate most
//! significant, so in `Z/2 x Z/2` the index order is `(0,0), (0,1), (1,0), (1,1)`.
//! The dual group is identified with the group itself through the symmetric
//! pairing `<xi, g> = sum_j xi_j g_j / n_j`.

use std::f64::consts::TAU;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::DEFAULT_MAX_N;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Layout {
    Trivial,
    Cyclic,
    Binary,
    Mixed,
}

#[derive(Debug, PartialEq, Eq)]
struct Inner {
    orders: Vec<usize>,
    strides: Vec<usize>,
    size: usize,
    layout: Layout,
}

/// A finite abelian group given as an explicit product of cyclic groups.
///
/// Cloning is cheap; the order data is shared.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupSpec {
    inner: Arc<Inner>,
}

impl fmt::Debug for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupSpec{:?}", self.inner.orders)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.orders.is_empty() {
            return write!(f, "{{0}}");
        }
        let parts: Vec<String> = self.inner.orders.iter().map(|n| format!("Z/{n}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.inner.orders.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let orders = Vec::<i64>::deserialize(d)?;
        make_group(&orders).map_err(serde::de::Error::custom)
    }
}

/// Builds a group with the default size limit of `2^20`.
pub fn make_group(orders: &[i64]) -> Result<GroupSpec> {
    GroupSpec::with_max(orders, DEFAULT_MAX_N)
}

impl GroupSpec {
    /// Builds a group from cyclic orders, dropping orders equal to 1.
    pub fn with_max(orders: &[i64], max_n: usize) -> Result<Self> {
        let mut kept = Vec::with_capacity(orders.len());
        let mut size: u128 = 1;
        for &n in orders {
            if n <= 0 {
                return Err(Error::validation(format!("cyclic order must be positive, got {n}")));
            }
            size = size.saturating_mul(n as u128);
            if n > 1 {
                kept.push(n as usize);
            }
        }
        if size > max_n as u128 {
            return Err(Error::Size { size, max: max_n });
        }
        Ok(Self::from_orders(kept))
    }

    fn from_orders(orders: Vec<usize>) -> Self {
        let size = orders.iter().product::<usize>();
        let mut strides = vec![1usize; orders.len()];
        for j in (0..orders.len().saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * orders[j + 1];
        }
        let layout = match orders.len() {
            0 => Layout::Trivial,
            1 => Layout::Cyclic,
            _ if orders.iter().all(|&n| n == 2) => Layout::Binary,
            _ => Layout::Mixed,
        };
        GroupSpec {
            inner: Arc::new(Inner {
                orders,
                strides,
                size,
                layout,
            }),
        }
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        make_group(&[n as i64])
    }

    /// `F_2^dim`.
    pub fn binary(dim: usize) -> Result<Self> {
        make_group(&vec![2; dim])
    }

    /// `G^k`, the k-fold direct power, used as the domain of representation
    /// functions. Only the size overflow is checked here; callers enforce
    /// their own tuple budgets.
    pub fn power(&self, k: usize) -> Result<Self> {
        let mut orders = Vec::with_capacity(self.rank() * k);
        let mut size: u128 = 1;
        for _ in 0..k {
            orders.extend_from_slice(&self.inner.orders);
            size = size.saturating_mul(self.size() as u128);
        }
        if size > usize::MAX as u128 {
            return Err(Error::Size {
                size,
                max: usize::MAX,
            });
        }
        Ok(Self::from_orders(orders))
    }

    pub fn orders(&self) -> &[usize] {
        &self.inner.orders
    }

    /// Cardinality `N`.
    pub fn size(&self) -> usize {
        self.inner.size
    }

    pub fn rank(&self) -> usize {
        self.inner.orders.len()
    }

    /// True when every cyclic factor has order 2.
    pub fn is_binary(&self) -> bool {
        matches!(self.inner.layout, Layout::Binary)
            || (self.inner.layout == Layout::Cyclic && self.inner.orders[0] == 2)
    }

    pub fn strides(&self) -> &[usize] {
        &self.inner.strides
    }

    pub fn coords(&self, index: usize) -> Vec<usize> {
        debug_assert!(index < self.size());
        self.inner
            .orders
            .iter()
            .zip(&self.inner.strides)
            .map(|(&n, &s)| (index / s) % n)
            .collect()
    }

    pub fn index_of(&self, coords: &[usize]) -> Result<usize> {
        if coords.len() != self.rank() {
            return Err(Error::validation(format!(
                "expected {} coordinates, got {}",
                self.rank(),
                coords.len()
            )));
        }
        let mut index = 0;
        for ((&c, &n), &s) in coords.iter().zip(&self.inner.orders).zip(&self.inner.strides) {
            if c >= n {
                return Err(Error::validation(format!("coordinate {c} out of range for Z/{n}")));
            }
            index += c * s;
        }
        Ok(index)
    }

    /// Index of the unit vector along coordinate `axis` (0-based).
    pub fn unit(&self, axis: usize) -> Result<usize> {
        self.inner
            .strides
            .get(axis)
            .copied()
            .ok_or_else(|| Error::validation(format!("axis {axis} out of range for {self}")))
    }

    #[inline]
    pub fn add_idx(&self, a: usize, b: usize) -> usize {
        match self.inner.layout {
            Layout::Trivial => 0,
            Layout::Binary => a ^ b,
            Layout::Cyclic => {
                let s = a + b;
                if s >= self.inner.size {
                    s - self.inner.size
                } else {
                    s
                }
            }
            Layout::Mixed => {
                let mut out = 0;
                for (&n, &s) in self.inner.orders.iter().zip(&self.inner.strides) {
                    let c = (a / s) % n + (b / s) % n;
                    out += if c >= n { c - n } else { c } * s;
                }
                out
            }
        }
    }

    #[inline]
    pub fn neg_idx(&self, a: usize) -> usize {
        match self.inner.layout {
            Layout::Trivial => 0,
            Layout::Binary => a,
            Layout::Cyclic => {
                if a == 0 {
                    0
                } else {
                    self.inner.size - a
                }
            }
            Layout::Mixed => {
                let mut out = 0;
                for (&n, &s) in self.inner.orders.iter().zip(&self.inner.strides) {
                    let c = (a / s) % n;
                    out += if c == 0 { 0 } else { n - c } * s;
                }
                out
            }
        }
    }

    #[inline]
    pub fn sub_idx(&self, a: usize, b: usize) -> usize {
        self.add_idx(a, self.neg_idx(b))
    }

    /// `<xi, g> * N` reduced mod `N`, i.e. the character value is
    /// `exp(2 pi i phase / N)`.
    pub fn phase(&self, xi: usize, g: usize) -> usize {
        let n_total = self.inner.size;
        let mut acc = 0usize;
        for (&n, &s) in self.inner.orders.iter().zip(&self.inner.strides) {
            let prod = ((xi / s) % n) * ((g / s) % n) % n;
            acc = (acc + prod * (n_total / n)) % n_total;
        }
        acc
    }

    pub fn element(&self, index: usize) -> Result<Element> {
        if index >= self.size() {
            return Err(Error::validation(format!("index {index} out of range for {self}")));
        }
        Ok(Element {
            group: self.clone(),
            index,
        })
    }

    pub fn element_from_coords(&self, coords: &[usize]) -> Result<Element> {
        let index = self.index_of(coords)?;
        Ok(Element {
            group: self.clone(),
            index,
        })
    }

    pub fn zero(&self) -> Element {
        Element {
            group: self.clone(),
            index: 0,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.size()).map(move |index| Element {
            group: self.clone(),
            index,
        })
    }

    pub(crate) fn ensure_same(&self, other: &GroupSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::GroupMismatch(format!("{self} vs {other}")))
        }
    }
}

/// An element of a [`GroupSpec`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    group: GroupSpec,
    index: usize,
}

impl Element {
    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn coords(&self) -> Vec<usize> {
        self.group.coords(self.index)
    }

    pub fn is_zero(&self) -> bool {
        self.index == 0
    }
}

/// A character label; shares the element encoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualElement(pub Element);

impl DualElement {
    pub fn index(&self) -> usize {
        self.0.index
    }
}

impl From<Element> for DualElement {
    fn from(e: Element) -> Self {
        DualElement(e)
    }
}

pub fn add(g: &Element, h: &Element) -> Result<Element> {
    g.group.ensure_same(&h.group)?;
    Ok(Element {
        group: g.group.clone(),
        index: g.group.add_idx(g.index, h.index),
    })
}

pub fn neg(g: &Element) -> Element {
    Element {
        group: g.group.clone(),
        index: g.group.neg_idx(g.index),
    }
}

pub fn sub(g: &Element, h: &Element) -> Result<Element> {
    add(g, &neg(h))
}

/// `xi(g) = exp(2 pi i sum_j xi_j g_j / n_j)`.
pub fn character(xi: &DualElement, g: &Element) -> Result<Complex64> {
    xi.0.group.ensure_same(&g.group)?;
    let n = g.group.size();
    let phase = g.group.phase(xi.index(), g.index);
    Ok(Complex64::from_polar(1.0, TAU * phase as f64 / n as f64))
}
