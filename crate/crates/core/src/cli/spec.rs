// SPDX-License-Identifier: Apache-2.0

use serde::{Deserialize, Serialize};

use crate::constructions::SetSpec;
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    Compute,
    Verify,
    Theorem,
    Construct,
    Search,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Params {
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub laws: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub seeds: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iterations: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub objective: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_orders: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps_orders: Option<Vec<usize>>,
}

/// One experiment: a group, the sets, what to run, and how to print it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSpec {
    pub group: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set_a: Option<SetSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set_b: Option<SetSpec>,
    pub command: Command,
    #[serde(default)]
    pub params: Params,
    #[serde(default)]
    pub format: Format,
    #[serde(default)]
    pub limits: Limits,
}

impl ExperimentSpec {
    pub fn new(group: &[i64], command: Command) -> Self {
        ExperimentSpec {
            group: group.to_vec(),
            set_a: None,
            set_b: None,
            command,
            params: Params::default(),
            format: Format::Json,
            limits: Limits::default(),
        }
    }

    /// First seed, or 0.
    pub fn seed(&self) -> u64 {
        self.params.seeds.first().copied().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mut spec = ExperimentSpec::new(&[2, 2, 2, 2], Command::Theorem);
        spec.set_a = Some("subgroup:e1,e2".parse().unwrap());
        spec.params.laws = vec!["main".into(), "cor".into()];
        spec.params.seeds = vec![7];
        spec.format = Format::Csv;
        let json = serde_json::to_string(&spec).unwrap();
        let back: ExperimentSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(spec, back);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn minimal_document() {
        let spec: ExperimentSpec = serde_json::from_str(r#"{"group":[12],"command":"verify"}"#).unwrap();
        assert_eq!(spec.limits, Limits::default());
        assert!(serde_json::from_str::<ExperimentSpec>(r#"{"group":[12],"command":"verify","bogus":1}"#).is_err());
        assert!(serde_json::from_str::<ExperimentSpec>(r#"{"group":[12],"command":"explode"}"#).is_err());
    }
}
