// SPDX-License-Identifier: Apache-2.0

//! Exact identities and inclusions. These never report `report-only`: each
//! either holds or fails.

use num_bigint::BigUint;

use super::report::{big, big_f64, Builder, LawReport, Relation};
use crate::error::{Error, Result};
use crate::group::Element;
use crate::limits::Limits;
use crate::quantities::{
    difference_set, energy_kl, higher_diff_size, iterated_sumset, representation_fn, rho_k, sumset,
    t_k_count, t_k_fn, tuple_diff, GroupSubset, Moment, Sign, Tail, TupleSet,
};
use crate::spectral::{self, conv_power, convolve_star, DenseFunction};
use crate::tolerance::REL_TOL;

/// `|supp f| |supp f̂| >= N`.
pub fn check_support_uncertainty(f: &DenseFunction) -> Result<LawReport> {
    if f.is_zero() {
        return Err(Error::validation("support uncertainty needs a nonzero function"));
    }
    let group = f.group();
    let mut b = Builder::new("support_uncertainty", group, &[f.support_size()], Relation::Ge);
    let supp = f.support_size();
    let spec = spectral::dft(f).support_size();
    let lhs = supp as u128 * spec as u128;
    b.param("supp_f", supp as f64).param("supp_f_hat", spec as f64);
    b.exact(lhs, group.size());
    Ok(b.decided(lhs as f64, group.size() as f64, lhs >= group.size() as u128))
}

/// `N sum |f|^2 = sum |f̂|^2`.
pub fn check_parseval(f: &DenseFunction) -> Result<LawReport> {
    let group = f.group();
    let b = Builder::new("parseval", group, &[], Relation::Eq);
    let lhs = group.size() as f64 * f.l2_squared();
    let rhs = spectral::dft(f).l2_squared();
    let holds = (lhs - rhs).abs() <= REL_TOL * lhs.abs().max(rhs.abs());
    Ok(b.decided(lhs, rhs, holds))
}

/// `max |(f * g)^ - f̂ ĝ| <= tol ||f||_1 ||g||_1`.
pub fn check_convolution_theorem(f: &DenseFunction, g: &DenseFunction) -> Result<LawReport> {
    let conv = convolve_star(f, g)?;
    let mut b = Builder::new("convolution_theorem", f.group(), &[], Relation::Le);
    let product = spectral::dft(f).mul(&spectral::dft(g))?;
    let direct = spectral::dft(&conv);
    let residual = direct
        .values()
        .iter()
        .zip(product.values())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max);
    let bound = REL_TOL * f.l1_norm() * g.l1_norm();
    b.param("tolerance", REL_TOL);
    Ok(b.decided(residual, bound, residual <= bound))
}

/// `sum_x A^(k)(x)^l = T_{k/2}(R^(l)_A)`, the right side computed over
/// `G^{l-1}`.
pub fn check_moment_representation(a: &GroupSubset, k: usize, l: usize, limits: &Limits) -> Result<LawReport> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::validation(format!("moment representation needs even k >= 2, got {k}")));
    }
    if l < 2 {
        return Err(Error::validation("moment representation needs l >= 2"));
    }
    let mut b = Builder::new("moment_representation", a.group(), &[a.len()], Relation::Eq);
    b.param("k", k as f64).param("l", l as f64);
    let power = conv_power(&a.indicator(), k)?;
    let lhs: BigUint = power
        .ints()
        .expect("exact")
        .iter()
        .map(|&v| BigUint::from(v.unsigned_abs()).pow(l as u32))
        .sum();
    let r = representation_fn(a, l, limits)?;
    let rhs = match t_k_fn(&r, k / 2)? {
        Moment::Exact(v) => BigUint::from(v.unsigned_abs()),
        Moment::Real(_) => unreachable!("representation counts are integers"),
    };
    b.exact(&lhs, &rhs);
    Ok(b.decided(big_f64(&lhs), big_f64(&rhs), lhs == rhs))
}

/// `|W x X| |Y - Δ(Z)| <= |W x Y x Z - Δ(X)|`.
pub fn check_higher_triangle(
    w: &TupleSet,
    x: &GroupSubset,
    y: &TupleSet,
    z: &GroupSubset,
    limits: &Limits,
) -> Result<LawReport> {
    let mut b = Builder::new("higher_triangle", w.group(), &[w.len(), x.len(), y.len(), z.len()], Relation::Le);
    b.param("k1", w.arity() as f64).param("k2", y.arity() as f64);
    let lhs = w.len() as u128 * x.len() as u128 * tuple_diff(y, z, limits)?.len() as u128;
    let wyz = w.product(y, limits)?.product(&TupleSet::from_subset(z), limits)?;
    let rhs = tuple_diff(&wyz, x, limits)?.len() as u128;
    b.exact(lhs, rhs);
    Ok(b.decided(lhs as f64, rhs as f64, lhs <= rhs))
}

/// `|A| |B - B| <= |A + B|^2`.
pub fn check_ruzsa_triangle(a: &GroupSubset, bset: &GroupSubset) -> Result<LawReport> {
    let s = sumset(a, bset, Sign::Plus)?;
    let mut b = Builder::new("ruzsa_triangle", a.group(), &[a.len(), bset.len()], Relation::Le);
    let lhs = a.len() as u128 * difference_set(bset).len() as u128;
    let rhs = (s.len() as u128).pow(2);
    b.exact(lhs, rhs);
    Ok(b.decided(lhs as f64, rhs as f64, lhs <= rhs))
}

/// `B + A_x ⊆ (A + B)_x`.
pub fn check_katz_koester(a: &GroupSubset, bset: &GroupSubset, x: &Element) -> Result<LawReport> {
    a.group().ensure_same(bset.group())?;
    a.group().ensure_same(x.group())?;
    let mut b = Builder::new("katz_koester", a.group(), &[a.len(), bset.len()], Relation::Subset);
    b.param("x", x.index() as f64);
    let left = sumset(bset, &a.shift_intersection(x.index()), Sign::Plus)?;
    let right = sumset(a, bset, Sign::Plus)?.shift_intersection(x.index());
    Ok(b.decided(left.len() as f64, right.len() as f64, left.is_subset(&right)))
}

/// `E_{k,l}(A) = E_{l,k}(A)`.
pub fn check_energy_symmetry(a: &GroupSubset, k: usize, l: usize, limits: &Limits) -> Result<LawReport> {
    let mut b = Builder::new("energy_symmetry", a.group(), &[a.len()], Relation::Eq);
    b.param("k", k as f64).param("l", l as f64);
    let lhs = energy_kl(a, k, l as u32, limits)?;
    let rhs = energy_kl(a, l, k as u32, limits)?;
    b.exact(lhs, rhs);
    Ok(b.decided(lhs as f64, rhs as f64, lhs == rhs))
}

/// `|A|^k <= |A^k - Δ_k(A)| <= |A - A|^k`, i.e. `K^{-k} <= eps_k <= 1`.
pub fn check_eps_bounds(a: &GroupSubset, k: usize, limits: &Limits) -> Result<LawReport> {
    if a.is_empty() {
        return Err(Error::validation("eps bounds need a nonempty set"));
    }
    let mut b = Builder::new("eps_bounds", a.group(), &[a.len()], Relation::Ge);
    let size = higher_diff_size(a, k, limits)?;
    let d = difference_set(a).len() as u128;
    let lower = big(a.len() as u128).pow(k as u32);
    let upper = big(d).pow(k as u32);
    let s = big(size);
    b.param("k", k as f64).param("eps", size as f64 / big_f64(&upper));
    b.param("upper", big_f64(&upper));
    b.exact(size, &lower);
    Ok(b.decided(size as f64, big_f64(&lower), lower <= s && s <= upper))
}

/// `rho^(k)(A) >= (|A|^{k+2} / |sA ± A| - T_s(A) |A|) / |A|^2` with `k = 2s`,
/// compared exactly after clearing denominators.
pub fn check_rho_k_trivial(a: &GroupSubset, s: usize, sign: Sign) -> Result<LawReport> {
    if s == 0 || a.is_empty() {
        return Err(Error::validation("trivial rho_k bound needs s >= 1 and nonempty A"));
    }
    let k = 2 * s;
    let law = match sign {
        Sign::Plus => "rho_k_trivial_plus",
        Sign::Minus => "rho_k_trivial_minus",
    };
    let mut b = Builder::new(law, a.group(), &[a.len()], Relation::Ge);
    let tail = if sign == Sign::Plus { Tail::Plus } else { Tail::Minus };
    let q = iterated_sumset(a, s, tail)?.len() as u128;
    let rk = rho_k(a, k)?;
    let ts = t_k_count(a, s)?;
    let size = a.len() as u128;
    let lhs_big = big(q) * (big(ts) * big(size) + big(rk) * big(size * size));
    let rhs_big = big(size).pow(k as u32 + 2);
    let rhs = (big_f64(&rhs_big) / q as f64 - ts as f64 * size as f64) / (size * size) as f64;
    b.param("k", k as f64).param("q_size", q as f64).param("t_s", ts as f64);
    b.exact(rk, format!("({rhs_big}/{q} - {ts}*{size})/{}", size * size));
    Ok(b.decided(rk as f64, rhs, lhs_big >= rhs_big))
}
