// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupSpec;

/// An element written as an index, a coordinate list, or a token such as
/// `"e3"`, `"e1+e2"` or `"5"`. Unit vectors `e_i` are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRepr {
    Index(u64),
    Coords(Vec<u64>),
    Token(String),
}

impl ElementRepr {
    pub fn resolve(&self, group: &GroupSpec) -> Result<usize> {
        match self {
            ElementRepr::Index(i) => {
                let i = *i as usize;
                if i >= group.size() {
                    return Err(Error::validation(format!("element index {i} out of range for {group}")));
                }
                Ok(i)
            }
            ElementRepr::Coords(c) => {
                let c: Vec<usize> = c.iter().map(|&x| x as usize).collect();
                group.index_of(&c)
            }
            ElementRepr::Token(t) => parse_token(t, group),
        }
    }
}

impl fmt::Display for ElementRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementRepr::Index(i) => write!(f, "{i}"),
            ElementRepr::Coords(c) => write!(f, "{c:?}"),
            ElementRepr::Token(t) => f.write_str(t),
        }
    }
}

fn parse_token(token: &str, group: &GroupSpec) -> Result<usize> {
    let mut acc = 0;
    for part in token.split('+') {
        let part = part.trim();
        let term = if let Some(axis) = part.strip_prefix('e') {
            let axis: usize = axis
                .parse()
                .map_err(|_| Error::validation(format!("bad unit vector {part:?}")))?;
            if axis == 0 {
                return Err(Error::validation("unit vectors are numbered from e1"));
            }
            group.unit(axis - 1)?
        } else {
            ElementRepr::Index(part.parse().map_err(|_| Error::validation(format!("bad element {part:?}")))?)
                .resolve(group)?
        };
        acc = group.add_idx(acc, term);
    }
    Ok(acc)
}

fn half() -> f64 {
    0.5
}

/// A construction recipe. Identical specs (seed included) build identical sets.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SetSpec {
    #[serde(flatten)]
    pub kind: SetKind,
    #[serde(default)]
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SetKind {
    Explicit {
        elements: Vec<ElementRepr>,
    },
    Subgroup {
        generators: Vec<ElementRepr>,
    },
    RandomInSubgroup {
        generators: Vec<ElementRepr>,
        #[serde(default = "half")]
        q: f64,
    },
    /// `H + Λ` with `Λ = {0}` plus `lambda_size - 1` representatives.
    HPlusLambda {
        generators: Vec<ElementRepr>,
        lambda_size: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        representatives: Option<Vec<ElementRepr>>,
    },
    QuadraticResidues {
        p: usize,
    },
    Progression {
        start: ElementRepr,
        step: ElementRepr,
        len: usize,
    },
    Random {
        #[serde(default = "half")]
        q: f64,
    },
    /// A uniformly random subset of exactly `size` elements.
    RandomSized {
        size: usize,
    },
}

impl SetSpec {
    pub fn new(kind: SetKind) -> Self {
        SetSpec { kind, seed: 0 }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

fn tokens(list: &str) -> Vec<ElementRepr> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| match s.parse::<u64>() {
            Ok(i) => ElementRepr::Index(i),
            Err(_) => ElementRepr::Token(s.to_string()),
        })
        .collect()
}

fn number<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .trim()
        .parse()
        .map_err(|_| Error::validation(format!("bad value {value:?} for {key}")))
}

/// Text form `kind:args[;key=value...]`, for example `subgroup:e1,e2`,
/// `random_in_subgroup:e1,e2;q=0.25`, `h_plus_lambda:e1,e2,e3;k=3`,
/// `progression:0,3,10`, `qr:101` or `random:0.5;seed=4`.
impl FromStr for SetSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(';');
        let head = parts.next().unwrap_or_default();
        let (kind, args) = head.split_once(':').unwrap_or((head, ""));
        let mut seed = 0;
        let mut q = None;
        let mut k = None;
        let mut reps = None;
        for opt in parts {
            let (key, value) = opt
                .split_once('=')
                .ok_or_else(|| Error::validation(format!("expected key=value, got {opt:?}")))?;
            match key.trim() {
                "seed" => seed = number(key, value)?,
                "q" => q = Some(number(key, value)?),
                "k" | "lambda_size" => k = Some(number(key, value)?),
                "reps" | "representatives" => reps = Some(tokens(&value.replace('|', ","))),
                other => return Err(Error::validation(format!("unknown set option {other:?}"))),
            }
        }
        let kind = match kind.trim() {
            "explicit" => SetKind::Explicit { elements: tokens(args) },
            "subgroup" => SetKind::Subgroup { generators: tokens(args) },
            "random_in_subgroup" => SetKind::RandomInSubgroup {
                generators: tokens(args),
                q: q.unwrap_or(0.5),
            },
            "h_plus_lambda" => SetKind::HPlusLambda {
                generators: tokens(args),
                lambda_size: k.ok_or_else(|| Error::validation("h_plus_lambda needs k=<|Λ|>"))?,
                representatives: reps,
            },
            "qr" | "quadratic_residues" => SetKind::QuadraticResidues { p: number("p", args)? },
            "progression" => {
                let t = tokens(args);
                let [start, step, len] = <[ElementRepr; 3]>::try_from(t)
                    .map_err(|_| Error::validation("progression needs start,step,len"))?;
                let len = match len {
                    ElementRepr::Index(n) => n as usize,
                    other => return Err(Error::validation(format!("bad progression length {other}"))),
                };
                SetKind::Progression { start, step, len }
            }
            "random" => SetKind::Random {
                q: if args.is_empty() { q.unwrap_or(0.5) } else { number("q", args)? },
            },
            "random_size" | "random_sized" => SetKind::RandomSized { size: number("size", args)? },
            other => return Err(Error::validation(format!("unknown set kind {other:?}"))),
        };
        Ok(SetSpec { kind, seed })
    }
}
