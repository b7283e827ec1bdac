// SPDX-License-Identifier: Apache-2.0

//! Lower bounds for `rho`-type quantities in terms of the Fourier bias, and
//! the related energy inequalities.

use num_bigint::BigUint;

use super::context::TheoremContext;
use super::identities::check_rho_k_trivial;
use super::report::{big, big_f64, safe_div, Builder, LawReport, Relation};
use crate::constructions::{balanced_function, quadratic_residues};
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::limits::Limits;
use crate::quantities::{
    difference_set, dyadic_level_sets, energy, energy_k_exact, eps, fourier_bias, heavy_level, iterated_sumset,
    rho, rho_k, rho_l, sigma_star, sigma_sum, t_k_count, GroupSubset, Sign, Tail,
};
use crate::spectral;

fn nonempty(a: &GroupSubset, what: &str) -> Result<()> {
    if a.is_empty() {
        return Err(Error::validation(format!("{what} needs a nonempty set")));
    }
    Ok(())
}

/// `|A| >= (2K max{1, omega})^8`, i.e. `|A|^9 >= (2 max{|A-A|, |A+B|})^8`.
fn size_precondition(ctx: &TheoremContext) -> (bool, f64) {
    let top = 2 * ctx.diff_a.max(ctx.sum_ab) as u128;
    let holds = big(ctx.size_a as u128).pow(9) >= big(top).pow(8);
    let bound = (2.0 * ctx.k * ctx.omega.max(1.0)).powi(8);
    (holds, bound)
}

/// Both `rho`/`M` bounds for a pair `(A, B)`:
///
/// `M^2(B) rho(A) >= |A|^2 |B|^2 / |A+B| (1 - 6 log K log(zeta K K_*) / log|A| - (omega K)^2 delta)`
///
/// and `M(A-A) rho^2(A) >= |A|^3 / K (1 - 16 log^2(2K) / log|A| - K^3 delta)`.
pub fn eval_rho_bias(a: &GroupSubset, b: &GroupSubset, limits: &Limits) -> Result<[LawReport; 2]> {
    nonempty(a, "rho bias")?;
    nonempty(b, "rho bias")?;
    let ctx = TheoremContext::new(a, b)?;
    let (pre_holds, pre_bound) = size_precondition(&ctx);
    let sizes = [a.len(), b.len()];
    let sa = ctx.size_a as f64;
    let rho = ctx.rho as f64;

    let mut first = Builder::new("rho_bias", a.group(), &sizes, Relation::Ge);
    first.precondition("size_lower_bound", pre_holds, Some(pre_bound));
    let log_arg = ctx.zeta * ctx.k * ctx.k_star;
    let log_term = safe_div(6.0 * ctx.k.ln() * log_arg.ln(), ctx.log_a);
    let clamped_term = safe_div(6.0 * ctx.k.ln() * log_arg.ln().max(0.0), ctx.log_a);
    let tail = (ctx.omega * ctx.k).powi(2) * ctx.delta;
    let main = sa * sa * (ctx.size_b as f64).powi(2) / ctx.sum_ab as f64;
    let m_b = fourier_bias(b)?;
    add_context(&mut first, &ctx);
    first
        .param("m_b", m_b)
        .param("log_term", log_term)
        .param("rhs_log_clamped", main * (1.0 - clamped_term - tail))
        .param("sigma", sigma_sum(a, b)? as f64);
    if let Some(n) = ctx.proof_n.filter(|&n| n >= 2) {
        if let Ok(e) = eps(a, n as usize - 1, limits) {
            first.param("eps_n_minus_1", e);
        }
    }
    let first = first.inequality(m_b * m_b * rho, main * (1.0 - log_term - tail));

    let mut second = Builder::new("rho_bias_difference", a.group(), &sizes, Relation::Ge);
    second.precondition("size_lower_bound", pre_holds, Some(pre_bound));
    let d = difference_set(a);
    let m_d = fourier_bias(&d)?;
    let factor = 1.0 - safe_div(16.0 * (2.0 * ctx.k).ln().powi(2), ctx.log_a) - ctx.k.powi(3) * ctx.delta;
    add_context(&mut second, &ctx);
    second.param("m_diff", m_d).param("sigma_star", sigma_star(a) as f64);
    let second = second.inequality(m_d * rho * rho, sa.powi(3) / ctx.k * factor);
    Ok([first, second])
}

fn add_context(b: &mut Builder, ctx: &TheoremContext) {
    b.param("delta", ctx.delta)
        .param("k", ctx.k)
        .param("k_star", ctx.k_star)
        .param("zeta", ctx.zeta)
        .param("omega", ctx.omega)
        .param("kappa", ctx.kappa)
        .param("kappa_star", ctx.kappa_star)
        .param("zeta_k_star", ctx.zeta * ctx.k_star)
        .param("omega2_k2", (ctx.omega * ctx.k).powi(2))
        .param("rho", ctx.rho as f64);
    if let Some(n) = ctx.proof_n {
        b.param("proof_n", n as f64);
    }
}

/// `M^2(A) rho(A)` against `|A|^3 / K`. The bound carries a `1 - o(1)`
/// factor, so only the ratio is reported.
pub fn eval_rho_bias_ratio(a: &GroupSubset) -> Result<LawReport> {
    nonempty(a, "rho bias ratio")?;
    let sa = a.len() as f64;
    let k = difference_set(a).len() as f64 / sa;
    let delta = sa / a.group().size() as f64;
    let m = fourier_bias(a)?;
    let r = rho(a)? as f64;
    let mut b = Builder::new("rho_bias_ratio", a.group(), &[a.len()], Relation::Ge);
    b.param("k", k)
        .param("m", m)
        .param("rho", r)
        .param("k2_delta", k * k * delta)
        .param("log2_k_over_log_a", safe_div(k.ln().powi(2), sa.ln()));
    Ok(b.report_only(m * m * r, sa.powi(3) / k))
}

/// `M^{2(l-1)}(A) rho_l(A) >= |A|^{2l-1} / K^{l-1} (1 - 2l^2/sqrt|A|) (1 - 12(l-1) log^2 K / log|A| - K^2 delta)^{l-1}`.
pub fn eval_rho_l_bias(a: &GroupSubset, l: usize, limits: &Limits) -> Result<LawReport> {
    nonempty(a, "rho_l bias")?;
    if l < 2 {
        return Err(Error::validation("rho_l bias needs l >= 2"));
    }
    let size = a.len() as u128;
    let diff = difference_set(a).len() as u128;
    let sa = size as f64;
    let k = diff as f64 / sa;
    let delta = sa / a.group().size() as f64;
    let lm1 = (l - 1) as u32;
    let m = fourier_bias(a)?;
    let rl = rho_l(a, l, limits)? as f64;
    let mut b = Builder::new("rho_l_bias", a.group(), &[a.len()], Relation::Ge);
    let dim_ok = big(size).pow(8 * lm1 + 1) >= big(diff).pow(8 * lm1);
    b.precondition("size_vs_doubling", dim_ok, Some(k.powi(8 * lm1 as i32)));
    b.precondition("size_vs_l", size > 4 * (l as u128).pow(4), Some(4.0 * (l as f64).powi(4)));
    b.param("l", l as f64).param("k", k).param("m", m).param("rho_l", rl).param("delta", delta);
    let first = 1.0 - 2.0 * (l * l) as f64 / sa.sqrt();
    let second = 1.0 - safe_div(12.0 * (l - 1) as f64 * k.ln().powi(2), sa.ln()) - k * k * delta;
    let rhs = sa.powi(2 * l as i32 - 1) / k.powi(lm1 as i32) * first * second.powi(lm1 as i32);
    Ok(b.inequality(m.powi(2 * lm1 as i32) * rl, rhs))
}

/// Iterates `n -> floor(((nk - n + 1) ln|A| - n ln T_s) / (2 ln K_*))` from
/// `n = 2` until it is fixed, drops below 2, or `n_max` steps have run.
fn proof_parameter(size: f64, k: usize, t_s: f64, k_star: f64, n_max: u32) -> i64 {
    let mut n: i64 = 2;
    for _ in 0..n_max.max(1) {
        let nf = n as f64;
        let val = 0.5 * ((nf * k as f64 - nf + 1.0) * size.ln() - nf * t_s.ln()) / k_star.ln();
        let next = val.floor() as i64;
        if next == n || next < 2 {
            return next.min(n);
        }
        n = next;
    }
    n
}

/// `M^2(A) rho^(k)(A) >= |A|^{k+1} / K (1 - 14 log^2 K_* / log|A| - delta K K_*)` with
/// `k = 2s`, `K = |sA ± A| / |A|`, `K_* = |sA - sA| / |A|`, for both signs,
/// followed by the two trivial lower bounds for `rho^(k)`.
pub fn eval_rho_k_bias(a: &GroupSubset, s: usize) -> Result<Vec<LawReport>> {
    nonempty(a, "rho_k bias")?;
    if s == 0 {
        return Err(Error::validation("rho_k bias needs s >= 1"));
    }
    let k = 2 * s;
    let group = a.group();
    let size = a.len() as u128;
    let sa = size as f64;
    let delta = sa / group.size() as f64;
    let sum_s = iterated_sumset(a, s, Tail::None)?;
    let diff_s = crate::quantities::sumset(&sum_s, &sum_s, Sign::Minus)?.len() as u128;
    let k_star = diff_s as f64 / sa;
    let t_s = t_k_count(a, s)?;
    let m = fourier_bias(a)?;
    let rk = rho_k(a, k)?;
    let log_n_max = (group.size() as f64).log2().ceil() as u32;

    let mut pre: Vec<(&str, bool, Option<f64>, Option<&str>)> = vec![("size_gt_4", size > 4, Some(sa), None)];
    let mut proof_n = None;
    if diff_s <= size {
        pre.push(("size_vs_energy", true, None, Some("degenerate: K_* = 1, trivially satisfied")));
    } else {
        let n = proof_parameter(sa, k, t_s as f64, k_star, log_n_max);
        proof_n = Some(n);
        pre.push(("proof_n_at_least_2", n >= 2, Some(n as f64), None));
        let holds = n >= 1 && {
            let n = n as u32;
            let lhs = big(size).pow(n * k as u32 - n + 1 + 8);
            let rhs = big(diff_s).pow(8) * big(t_s).pow(n);
            lhs >= rhs
        };
        pre.push(("size_vs_energy", holds, None, None));
    }

    let mut reports = Vec::new();
    for (tail, law) in [(Tail::Plus, "rho_k_bias_plus"), (Tail::Minus, "rho_k_bias_minus")] {
        let q = iterated_sumset(a, s, tail)?.len() as f64;
        let kk = q / sa;
        let mut b = Builder::new(law, group, &[a.len()], Relation::Ge);
        for &(name, holds, value, note) in &pre {
            match note {
                Some(note) => b.precondition_note(name, holds, note),
                None => b.precondition(name, holds, value),
            };
        }
        b.param("s", s as f64)
            .param("k_order", k as f64)
            .param("doubling", kk)
            .param("k_star", k_star)
            .param("t_s", t_s as f64)
            .param("m", m)
            .param("rho_k", rk as f64)
            .param("delta", delta)
            .param("rho_k_vs_diff_ratio", rk as f64 * diff_s as f64 / (2.0 * sa.powi(k as i32)));
        if let Some(n) = proof_n {
            b.param("proof_n", n as f64);
        }
        let factor = 1.0 - safe_div(14.0 * k_star.ln().powi(2), sa.ln()) - delta * kk * k_star;
        reports.push(b.inequality(m * m * rk as f64, sa.powi(k as i32 + 1) / kk * factor));
    }
    reports.push(check_rho_k_trivial(a, s, Sign::Plus)?);
    reports.push(check_rho_k_trivial(a, s, Sign::Minus)?);
    Ok(reports)
}

/// `rho^7 M^4 log^7|A|` against `|A|^11 / K^7` with `K = |A|^3 / E(A)`; the
/// bound hides an absolute constant, so only the ratio is reported.
pub fn eval_energy_bias(a: &GroupSubset) -> Result<LawReport> {
    if a.len() < 2 {
        return Err(Error::validation("energy bias needs |A| >= 2"));
    }
    let size = a.len() as u128;
    let sa = size as f64;
    let e = energy(a, a)?;
    let k = sa.powi(3) / e as f64;
    let l = sa.ln();
    let delta = sa / a.group().size() as f64;
    let r = rho(a)? as f64;
    let m = fourier_bias(a)?;
    let mut b = Builder::new("energy_bias", a.group(), &[a.len()], Relation::Ge);
    let cond = big(e).pow(3) >= BigUint::from(8u32) * big(size).pow(8);
    b.precondition("size_vs_energy_doubling", cond, Some(8.0 * k.powi(3)));
    b.param("k", k)
        .param("energy", e as f64)
        .param("rho", r)
        .param("m", m)
        .param("smallness", delta.powi(3) * l.powi(28) * k.powi(25));
    if let Some(level) = heavy_level(a, 10.0 / 7.0) {
        b.param("heavy_delta", level.delta as f64)
            .param("heavy_size", level.set.len() as f64)
            .param("heavy_delta_predicted", sa.powf(7.0 / 3.0) / ((k * l).powf(7.0 / 3.0) * r.powf(4.0 / 3.0)))
            .param("levels", dyadic_level_sets(a).len() as f64);
    }
    Ok(b.report_only(r.powi(7) * m.powi(4) * l.powi(7), sa.powi(11) / k.powi(7)))
}

/// The uncertainty product `max_{xi != 0}|f̂| max_{x != 0}|f| |supp f|` of the
/// balanced function of `A`, against `||f||_1^2`.
pub fn eval_balanced_counterexample_for(a: &GroupSubset) -> Result<LawReport> {
    let f = balanced_function(a)?;
    let fh = spectral::dft(&f);
    let supp = f.support_size() as f64;
    let l1 = f.l1_norm();
    let mut b = Builder::new("balanced_counterexample", a.group(), &[a.len()], Relation::Ge);
    let sup_product = fh.values().iter().map(|v| v.norm()).fold(0.0, f64::max) * f.sup_norm() * supp;
    b.param("supp_f", supp).param("sup_norm_ratio", safe_div(sup_product, l1 * l1));
    let lhs = fh.max_abs_off_zero() * f.sup_norm_off_zero() * supp;
    Ok(b.report_only(lhs, l1 * l1))
}

/// [`eval_balanced_counterexample_for`] on the quadratic residues mod `p`.
pub fn eval_balanced_counterexample(p: usize, limits: &Limits) -> Result<LawReport> {
    if p > limits.max_n {
        return Err(Error::Size {
            size: p as u128,
            max: limits.max_n,
        });
    }
    let group = GroupSpec::cyclic(p)?;
    let a = quadratic_residues(&group, p)?;
    let mut r = eval_balanced_counterexample_for(&a)?;
    r.params.insert("p".into(), p as f64);
    Ok(r)
}

/// `E_k(A) E(A, D)^k >= |A|^{4k+1} / K`, compared exactly as
/// `E_k(A) E(A, D)^k |D| >= |A|^{4k+2}`.
pub fn eval_energy_difference_product(a: &GroupSubset, k: u32) -> Result<LawReport> {
    nonempty(a, "energy difference product")?;
    let d = difference_set(a);
    let size = a.len() as u128;
    let ek = energy_k_exact(a, k)?;
    let ead = energy(a, &d)?;
    let lhs = big(ek) * big(ead).pow(k);
    let rhs_scaled = big(size).pow(4 * k + 2);
    let lhs_scaled = &lhs * big(d.len() as u128);
    let kk = d.len() as f64 / size as f64;
    let mut b = Builder::new("energy_difference_product", a.group(), &[a.len()], Relation::Ge);
    b.param("k", k as f64)
        .param("doubling", kk)
        .param("energy_k", ek as f64)
        .param("energy_a_d", ead as f64)
        .param("energy_a_d_over_a3", ead as f64 / (size as f64).powi(3));
    b.exact(&lhs_scaled, &rhs_scaled);
    let lhs_f = big_f64(&lhs);
    let rhs_f = big_f64(&rhs_scaled) / d.len() as f64;
    Ok(b.exact_inequality(lhs_f, rhs_f, lhs_scaled >= rhs_scaled))
}
