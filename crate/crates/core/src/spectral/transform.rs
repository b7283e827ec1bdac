// SPDX-License-Identifier: Apache-2.0

//! Raw transform kernels over mixed-radix index arrays. All forward kernels
//! compute `F(xi) = sum_g f(g) exp(-2 pi i <xi, g>)`; inverse kernels are
//! unnormalized.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::group::GroupSpec;

/// O(N^2) reference evaluation using an exact integer phase table.
pub fn naive(group: &GroupSpec, data: &[Complex64], inverse: bool) -> Vec<Complex64> {
    let n = group.size();
    let sign = if inverse { 1.0 } else { -1.0 };
    let roots: Vec<Complex64> = (0..n)
        .map(|t| Complex64::from_polar(1.0, sign * TAU * t as f64 / n as f64))
        .collect();
    let rank = group.rank();
    let orders = group.orders();
    let weights: Vec<usize> = orders.iter().map(|&m| n / m).collect();
    let zero = Complex64::new(0.0, 0.0);

    let mut out = vec![zero; n];
    let mut gc = vec![0usize; rank];
    for (xi, slot) in out.iter_mut().enumerate() {
        let steps: Vec<usize> = group.coords(xi).iter().zip(&weights).map(|(&x, &w)| x * w % n).collect();
        gc.iter_mut().for_each(|c| *c = 0);
        let mut phase = 0usize;
        let mut acc = zero;
        for &v in data {
            if v != zero {
                acc += v * roots[phase];
            }
            // Odometer step; a wrapping axis has contributed `order * step ≡ 0`.
            for j in (0..rank).rev() {
                phase += steps[j];
                if phase >= n {
                    phase -= n;
                }
                gc[j] += 1;
                if gc[j] < orders[j] {
                    break;
                }
                gc[j] = 0;
            }
        }
        *slot = acc;
    }
    out
}

/// In-place Walsh-Hadamard transform; valid when every cyclic factor has
/// order 2. Self-inverse up to the factor `N`.
pub fn walsh_hadamard(data: &mut [Complex64]) {
    let n = data.len();
    debug_assert!(n.is_power_of_two());
    let mut h = 1;
    while h < n {
        for block in data.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
}

/// Row-column transform: a one-dimensional FFT along every cyclic axis.
pub fn mixed_radix(group: &GroupSpec, data: &mut [Complex64], inverse: bool) {
    let mut planner = FftPlanner::<f64>::new();
    let total = group.size();
    let mut line = Vec::new();
    for (&n, &stride) in group.orders().iter().zip(group.strides()) {
        let fft = if inverse {
            planner.plan_fft_inverse(n)
        } else {
            planner.plan_fft_forward(n)
        };
        let mut scratch = vec![Complex64::new(0.0, 0.0); fft.get_inplace_scratch_len()];
        if stride == 1 {
            fft.process_with_scratch(data, &mut scratch);
            continue;
        }
        line.resize(n, Complex64::new(0.0, 0.0));
        let block = n * stride;
        for base in (0..total).step_by(block) {
            for offset in 0..stride {
                let start = base + offset;
                for (t, slot) in line.iter_mut().enumerate() {
                    *slot = data[start + t * stride];
                }
                fft.process_with_scratch(&mut line, &mut scratch);
                for (t, v) in line.iter().enumerate() {
                    data[start + t * stride] = *v;
                }
            }
        }
    }
}
