// SPDX-License-Identifier: Apache-2.0

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::tolerance::SUPPORT_REL;

#[derive(Debug, Clone, PartialEq)]
pub enum Values {
    /// Integer-valued; every operation that preserves integrality keeps this form.
    Exact(Vec<i128>),
    Complex(Vec<Complex64>),
}

/// A function `G -> C`, stored densely in index order.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseFunction {
    group: GroupSpec,
    values: Values,
}

impl DenseFunction {
    pub fn from_ints(group: &GroupSpec, values: Vec<i128>) -> Result<Self> {
        check_len(group, values.len())?;
        Ok(DenseFunction {
            group: group.clone(),
            values: Values::Exact(values),
        })
    }

    pub fn from_complex(group: &GroupSpec, values: Vec<Complex64>) -> Result<Self> {
        check_len(group, values.len())?;
        Ok(DenseFunction {
            group: group.clone(),
            values: Values::Complex(values),
        })
    }

    pub fn from_real(group: &GroupSpec, values: &[f64]) -> Result<Self> {
        Self::from_complex(group, values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    pub fn zeros(group: &GroupSpec) -> Self {
        DenseFunction {
            group: group.clone(),
            values: Values::Exact(vec![0; group.size()]),
        }
    }

    /// Point mass at the element with the given index.
    pub fn delta(group: &GroupSpec, index: usize) -> Self {
        let mut v = vec![0; group.size()];
        v[index] = 1;
        DenseFunction {
            group: group.clone(),
            values: Values::Exact(v),
        }
    }

    pub fn constant(group: &GroupSpec, c: i128) -> Self {
        DenseFunction {
            group: group.clone(),
            values: Values::Exact(vec![c; group.size()]),
        }
    }

    /// Characteristic function of a list of element indices.
    pub fn indicator(group: &GroupSpec, members: &[usize]) -> Self {
        let mut v = vec![0; group.size()];
        for &m in members {
            v[m] = 1;
        }
        DenseFunction {
            group: group.clone(),
            values: Values::Exact(v),
        }
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.group.size()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &Values {
        &self.values
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.values, Values::Exact(_))
    }

    pub fn ints(&self) -> Option<&[i128]> {
        match &self.values {
            Values::Exact(v) => Some(v),
            Values::Complex(_) => None,
        }
    }

    pub fn value(&self, index: usize) -> Complex64 {
        match &self.values {
            Values::Exact(v) => Complex64::new(v[index] as f64, 0.0),
            Values::Complex(v) => v[index],
        }
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        match &self.values {
            Values::Exact(v) => v.iter().map(|&x| Complex64::new(x as f64, 0.0)).collect(),
            Values::Complex(v) => v.clone(),
        }
    }

    /// True when every value is zero (exactly, for both representations).
    pub fn is_zero(&self) -> bool {
        match &self.values {
            Values::Exact(v) => v.iter().all(|&x| x == 0),
            Values::Complex(v) => v.iter().all(|x| x.re == 0.0 && x.im == 0.0),
        }
    }

    pub fn l1_norm(&self) -> f64 {
        match &self.values {
            Values::Exact(v) => v.iter().map(|x| x.unsigned_abs() as f64).sum(),
            Values::Complex(v) => v.iter().map(|x| x.norm()).sum(),
        }
    }

    pub fn sup_norm(&self) -> f64 {
        match &self.values {
            Values::Exact(v) => v.iter().map(|x| x.unsigned_abs() as f64).fold(0.0, f64::max),
            Values::Complex(v) => v.iter().map(|x| x.norm()).fold(0.0, f64::max),
        }
    }

    /// `max_{x != 0} |f(x)|`.
    pub fn sup_norm_off_zero(&self) -> f64 {
        (1..self.len()).map(|i| self.value(i).norm()).fold(0.0, f64::max)
    }

    pub fn l2_squared(&self) -> f64 {
        match &self.values {
            Values::Exact(v) => v.iter().map(|&x| (x as f64) * (x as f64)).sum(),
            Values::Complex(v) => v.iter().map(|x| x.norm_sqr()).sum(),
        }
    }

    /// Number of points where `|f| > SUPPORT_REL * ||f||_inf`; exact zero
    /// test on integer functions.
    pub fn support_size(&self) -> usize {
        match &self.values {
            Values::Exact(v) => v.iter().filter(|&&x| x != 0).count(),
            Values::Complex(v) => support_count(v),
        }
    }

    /// `y -> f(-y)`.
    pub fn reflect(&self) -> Self {
        let g = &self.group;
        let values = match &self.values {
            Values::Exact(v) => Values::Exact((0..v.len()).map(|i| v[g.neg_idx(i)]).collect()),
            Values::Complex(v) => Values::Complex((0..v.len()).map(|i| v[g.neg_idx(i)]).collect()),
        };
        DenseFunction {
            group: g.clone(),
            values,
        }
    }

    pub(crate) fn nonzero_ints(&self) -> Option<Vec<(usize, i128)>> {
        self.ints()
            .map(|v| v.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i, x)).collect())
    }
}

fn check_len(group: &GroupSpec, len: usize) -> Result<()> {
    if len != group.size() {
        return Err(Error::validation(format!(
            "function has {len} values but {group} has {} elements",
            group.size()
        )));
    }
    Ok(())
}

pub(crate) fn support_count(v: &[Complex64]) -> usize {
    let max = v.iter().map(|x| x.norm()).fold(0.0, f64::max);
    if max == 0.0 {
        return 0;
    }
    v.iter().filter(|x| x.norm() > SUPPORT_REL * max).count()
}

/// Fourier coefficients indexed by the dual group.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    group: GroupSpec,
    values: Vec<Complex64>,
}

impl Spectrum {
    pub fn new(group: &GroupSpec, values: Vec<Complex64>) -> Result<Self> {
        check_len(group, values.len())?;
        Ok(Spectrum {
            group: group.clone(),
            values,
        })
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    /// `max_{xi != 0} |F(xi)|`; zero on the trivial group.
    pub fn max_abs_off_zero(&self) -> f64 {
        self.values.iter().skip(1).map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn support_size(&self) -> usize {
        support_count(&self.values)
    }

    pub fn l2_squared(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum()
    }

    /// Pointwise product, the spectral side of the convolution theorem.
    pub fn mul(&self, other: &Spectrum) -> Result<Spectrum> {
        self.group.ensure_same(&other.group)?;
        Ok(Spectrum {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        })
    }
}
