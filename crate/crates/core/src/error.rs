// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Validation(String),

    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("group of order {size} exceeds the configured maximum {max}")]
    Size { size: u128, max: usize },

    /// An enumeration or search budget ran out. `lower_bound` carries the best
    /// value found before giving up, when the operation is a maximization.
    #[error("budget exceeded for {what} (limit {limit}){}", lower_bound.map(|b| format!("; best value so far {b} is only a lower bound")).unwrap_or_default())]
    Resource {
        what: String,
        limit: u128,
        lower_bound: Option<u128>,
    },

    #[error("inexact integer result: {0}")]
    Exactness(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(String),
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn resource(what: impl Into<String>, limit: u128) -> Self {
        Error::Resource {
            what: what.into(),
            limit,
            lower_bound: None,
        }
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. } | Error::Size { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
