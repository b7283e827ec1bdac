// SPDX-License-Identifier: Apache-2.0

//! Fourier transforms, convolution `*`, correlation `∘` and convolution
//! powers on a finite abelian group.
//!
//! Integer-valued functions stay integer-valued through [`convolve_star`],
//! [`correlate_circ`] and [`conv_power`]: small supports are summed directly,
//! larger ones go through a floating transform whose output is rounded only
//! when every entry lies within [`ROUNDING_RESIDUAL`] of an integer.

mod function;
pub mod transform;

pub use function::{DenseFunction, Spectrum, Values};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::tolerance::ROUNDING_RESIDUAL;

/// Automatic dispatch uses the O(N^2) reference only up to this order.
pub const NAIVE_CUTOFF: usize = 32;

/// Largest order for which the naive reference is considered affordable in
/// oracle comparisons.
pub const NAIVE_REFERENCE_LIMIT: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Auto,
    Naive,
    Fast,
}

fn transform(group: &GroupSpec, mut data: Vec<Complex64>, inverse: bool, method: Method) -> Vec<Complex64> {
    let n = group.size();
    let use_naive = match method {
        Method::Naive => true,
        Method::Fast => false,
        Method::Auto => n <= NAIVE_CUTOFF && !group.is_binary(),
    };
    if use_naive {
        return transform::naive(group, &data, inverse);
    }
    if group.is_binary() {
        transform::walsh_hadamard(&mut data);
    } else if n > 1 {
        transform::mixed_radix(group, &mut data, inverse);
    }
    data
}

/// `F(xi) = sum_g f(g) conj(xi(g))`.
pub fn dft(f: &DenseFunction) -> Spectrum {
    dft_with(f, Method::Auto)
}

pub fn dft_with(f: &DenseFunction, method: Method) -> Spectrum {
    let group = f.group();
    let values = transform(group, f.to_complex(), false, method);
    Spectrum::new(group, values).expect("length preserved")
}

/// `f(g) = N^{-1} sum_xi F(xi) xi(g)`.
pub fn idft(spectrum: &Spectrum) -> DenseFunction {
    idft_with(spectrum, Method::Auto)
}

pub fn idft_with(spectrum: &Spectrum, method: Method) -> DenseFunction {
    let group = spectrum.group();
    let scale = 1.0 / group.size() as f64;
    let mut values = transform(group, spectrum.values().to_vec(), true, method);
    for v in &mut values {
        *v *= scale;
    }
    DenseFunction::from_complex(group, values).expect("length preserved")
}

/// `(f * g)(x) = sum_y f(y) g(x - y)`.
pub fn convolve_star(f: &DenseFunction, g: &DenseFunction) -> Result<DenseFunction> {
    f.group().ensure_same(g.group())?;
    let group = f.group();
    match (f.nonzero_ints(), g.nonzero_ints()) {
        (Some(fs), Some(gs)) => {
            let values = exact_convolve(group, f, g, &fs, &gs)?;
            DenseFunction::from_ints(group, values)
        }
        _ => {
            let n = group.size();
            if n <= 64 {
                let fv = f.to_complex();
                let gv = g.to_complex();
                let mut out = vec![Complex64::new(0.0, 0.0); n];
                for (y, &a) in fv.iter().enumerate() {
                    if a == Complex64::new(0.0, 0.0) {
                        continue;
                    }
                    for (z, &b) in gv.iter().enumerate() {
                        out[group.add_idx(y, z)] += a * b;
                    }
                }
                DenseFunction::from_complex(group, out)
            } else {
                Ok(idft(&dft(f).mul(&dft(g))?))
            }
        }
    }
}

/// `(f ∘ g)(x) = sum_y f(y) g(y + x)`; equal to `f(-·) * g`.
pub fn correlate_circ(f: &DenseFunction, g: &DenseFunction) -> Result<DenseFunction> {
    f.group().ensure_same(g.group())?;
    convolve_star(&f.reflect(), g)
}

/// `f^(k)`: `f^(1) = f`, `f^(k) = f^(k-1) ∘ f`.
pub fn conv_power(f: &DenseFunction, k: usize) -> Result<DenseFunction> {
    if k == 0 {
        return Err(Error::validation("convolution power needs k >= 1"));
    }
    let mut acc = f.clone();
    for _ in 1..k {
        acc = correlate_circ(&acc, f)?;
    }
    Ok(acc)
}

/// `k`-fold `*`-power `f * f * ... * f` (k factors).
pub fn star_power(f: &DenseFunction, k: usize) -> Result<DenseFunction> {
    if k == 0 {
        return Err(Error::validation("star power needs k >= 1"));
    }
    let mut acc = f.clone();
    for _ in 1..k {
        acc = convolve_star(&acc, f)?;
    }
    Ok(acc)
}

/// `|N sum |f|^2 - sum |F|^2| / max(1, N sum |f|^2)`.
pub fn parseval_residual(f: &DenseFunction) -> f64 {
    let n = f.len() as f64;
    let time = n * f.l2_squared();
    let freq = dft(f).l2_squared();
    (time - freq).abs() / time.max(1.0)
}

/// Exact integer convolution. Direct summation over the supports when that
/// is cheap, otherwise a floating transform with a verified rounding step.
fn exact_convolve(
    group: &GroupSpec,
    f: &DenseFunction,
    g: &DenseFunction,
    fs: &[(usize, i128)],
    gs: &[(usize, i128)],
) -> Result<Vec<i128>> {
    let n = group.size();
    let pairs = fs.len() as u128 * gs.len() as u128;
    let log_n = usize::BITS - n.leading_zeros();
    let direct_budget = (8 * n as u128 * (log_n as u128 + 1)).max(4096);
    if pairs <= direct_budget {
        return direct_convolve(group, fs, gs);
    }

    // Every output lies below ||f||_1 ||g||_1; beyond 2^52 rounding is meaningless.
    let bound = f.l1_norm() * g.l1_norm();
    if bound < (1u64 << 52) as f64 {
        let product = dft(f).mul(&dft(g))?;
        let h = idft(&product);
        let mut out = Vec::with_capacity(n);
        let mut worst = 0.0f64;
        for i in 0..n {
            let v = h.value(i);
            let r = v.re.round();
            worst = worst.max((v.re - r).abs()).max(v.im.abs());
            out.push(r as i128);
        }
        if worst < ROUNDING_RESIDUAL {
            return Ok(out);
        }
    }

    if pairs <= 1u128 << 34 {
        return direct_convolve(group, fs, gs);
    }
    Err(Error::Exactness(format!(
        "convolution on {group} with {pairs} support pairs cannot be rounded reliably"
    )))
}

fn direct_convolve(group: &GroupSpec, fs: &[(usize, i128)], gs: &[(usize, i128)]) -> Result<Vec<i128>> {
    let mut out = vec![0i128; group.size()];
    for &(y, a) in fs {
        for &(z, b) in gs {
            let slot = &mut out[group.add_idx(y, z)];
            *slot = a
                .checked_mul(b)
                .and_then(|p| slot.checked_add(p))
                .ok_or_else(|| Error::Overflow("exact convolution".into()))?;
        }
    }
    Ok(out)
}
