// SPDX-License-Identifier: Apache-2.0

//! Budgets for the operations whose cost grows exponentially in a parameter.

use serde::{Deserialize, Serialize};

pub const DEFAULT_MAX_N: usize = 1 << 20;
pub const DEFAULT_MAX_TUPLES: u128 = 10_000_000;
pub const DEFAULT_MAX_SEARCH_NODES: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Limits {
    /// Largest admissible group order.
    pub max_n: usize,
    /// Largest number of tuples a tuple set or dense function on `G^k` may hold.
    pub max_tuples: u128,
    /// Node budget for the `rho_l` branch-and-bound search.
    pub max_search_nodes: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: DEFAULT_MAX_N,
            max_tuples: DEFAULT_MAX_TUPLES,
            max_search_nodes: DEFAULT_MAX_SEARCH_NODES,
        }
    }
}
