// SPDX-License-Identifier: Apache-2.0

//! Evaluation of identities and inequalities as [`LawReport`]s.
//!
//! Exact identities report `holds` or `fails`. Inequalities with explicit
//! error terms also record their preconditions; those whose constants are
//! unspecified are `report-only` and carry the ratio `lhs / rhs`.

mod bounds;
mod context;
mod identities;
mod report;

pub use bounds::{
    eval_balanced_counterexample, eval_balanced_counterexample_for, eval_energy_bias,
    eval_energy_difference_product, eval_rho_bias, eval_rho_bias_ratio, eval_rho_k_bias, eval_rho_l_bias,
};
pub use context::TheoremContext;
pub use identities::{
    check_convolution_theorem, check_energy_symmetry, check_eps_bounds, check_higher_triangle, check_katz_koester,
    check_moment_representation, check_parseval, check_rho_k_trivial, check_ruzsa_triangle,
    check_support_uncertainty,
};
pub use report::{LawReport, Precondition, Relation, Verdict};
