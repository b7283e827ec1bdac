// SPDX-License-Identifier: Apache-2.0

pub mod cli;
pub mod constructions;
pub mod error;
pub mod group;
pub mod laws;
pub mod limits;
pub mod quantities;
pub mod spectral;
pub mod tolerance;

pub use constructions::{build, SetSpec};
pub use error::{Error, Result};
pub use group::{make_group, DualElement, Element, GroupSpec};
pub use laws::{LawReport, Verdict};
pub use limits::Limits;
pub use spectral::{DenseFunction, Spectrum};
pub use quantities::{GroupSubset, QuantityReport, TupleSet};
