// SPDX-License-Identifier: Apache-2.0

//! Numerical tolerances shared by the transforms, the identity checks and the
//! acceptance suite.

/// Relative tolerance for floating-point comparisons, scaled by the natural
/// magnitude of the compared quantity (an `l1`-type bound).
pub const REL_TOL: f64 = 1e-9;

/// Relative tolerance for power-moment identities, which raise spectra to
/// high powers before summing.
pub const MOMENT_REL_TOL: f64 = 1e-6;

/// Largest admissible distance to the nearest integer when an FFT result is
/// rounded back to an exact count.
pub const ROUNDING_RESIDUAL: f64 = 1e-6;

/// Support threshold: `|v| > SUPPORT_REL * max|v|` counts as nonzero.
pub const SUPPORT_REL: f64 = 1e-9;

/// Character values must have unit modulus to within this.
pub const UNIT_MODULUS_TOL: f64 = 1e-12;
