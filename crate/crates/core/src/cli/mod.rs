// SPDX-License-Identifier: Apache-2.0

//! Experiment runner behind the `uncert` binary.

mod output;
mod spec;

use rand::Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

pub use output::{render, render_batch, round_floats, strip_timing};
pub use spec::{Command, ExperimentSpec, Format, Params};

use crate::constructions::{build, hill_climb_tightness, rng_for, SetSpec};
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::laws::{self, LawReport, Verdict};
use crate::quantities::{GroupSubset, QuantityOptions, QuantityReport, Sign, TupleSet};
use crate::spectral::DenseFunction;

/// Process exit status of a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Exit {
    Ok = 0,
    LawFailed = 1,
    Usage = 2,
    Resource = 3,
}

impl Exit {
    pub fn of_error(e: &Error) -> Exit {
        if e.is_resource() {
            Exit::Resource
        } else {
            Exit::Usage
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub value: Value,
    pub exit: Exit,
}

fn to_value<T: serde::Serialize>(v: &T) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::Overflow(format!("serialization: {e}")))
}

fn set_or_err(spec: &Option<SetSpec>, group: &GroupSpec, what: &str) -> Result<GroupSubset> {
    match spec {
        Some(s) => build(s, group),
        None => Err(Error::validation(format!("command needs {what}"))),
    }
}

fn reports_value(reports: &[LawReport]) -> Result<(Value, Exit)> {
    let exit = if reports.iter().any(|r| r.verdict == Verdict::Fails) {
        Exit::LawFailed
    } else {
        Exit::Ok
    };
    Ok((json!({ "reports": to_value(&reports)? }), exit))
}

/// Runs one experiment.
pub fn run(spec: &ExperimentSpec) -> Result<RunOutput> {
    let limits = &spec.limits;
    let group = GroupSpec::with_max(&spec.group, limits.max_n)?;
    let options = {
        let mut o = QuantityOptions::default();
        if let Some(t) = &spec.params.t_orders {
            o.t_orders = t.clone();
        }
        if let Some(e) = &spec.params.eps_orders {
            o.eps_orders = e.clone();
        }
        o
    };
    let (value, exit) = match spec.command {
        Command::Compute => {
            let a = set_or_err(&spec.set_a, &group, "set_a")?;
            let b = spec.set_b.as_ref().map(|s| build(s, &group)).transpose()?;
            (to_value(&QuantityReport::compute(&a, b.as_ref(), &options, limits)?)?, Exit::Ok)
        }
        Command::Construct => {
            let a = set_or_err(&spec.set_a, &group, "set_a")?;
            let report = QuantityReport::compute(&a, None, &options, limits)?;
            (json!({ "set": a.members(), "report": to_value(&report)? }), Exit::Ok)
        }
        Command::Theorem => {
            let a = set_or_err(&spec.set_a, &group, "set_a")?;
            let b = spec.set_b.as_ref().map(|s| build(s, &group)).transpose()?;
            let laws = if spec.params.laws.is_empty() {
                vec!["main".to_string(), "cor".to_string()]
            } else {
                spec.params.laws.clone()
            };
            let mut reports = Vec::new();
            for law in &laws {
                reports.extend(theorem(law, &a, b.as_ref(), spec)?);
            }
            reports_value(&reports)?
        }
        Command::Verify => {
            let seeds = if spec.params.seeds.is_empty() { vec![0] } else { spec.params.seeds.clone() };
            let mut reports = Vec::new();
            for seed in seeds {
                reports.extend(verify_suite(&group, spec, seed)?);
            }
            reports_value(&reports)?
        }
        Command::Search => {
            let target = spec.params.target_size.unwrap_or((group.size() / 4).max(1));
            let objective = spec.params.objective.as_deref().unwrap_or("rho_bias_ratio");
            let iterations = spec.params.iterations.unwrap_or(200);
            let run = hill_climb_tightness(&group, target, objective, spec.seed(), iterations)?;
            (to_value(&run)?, Exit::Ok)
        }
    };
    Ok(RunOutput { value, exit })
}

fn theorem(law: &str, a: &GroupSubset, b: Option<&GroupSubset>, spec: &ExperimentSpec) -> Result<Vec<LawReport>> {
    let p = &spec.params;
    let limits = &spec.limits;
    Ok(match law {
        "main" | "rho_bias" => laws::eval_rho_bias(a, b.unwrap_or(a), limits)?.to_vec(),
        "cor" | "rho_bias_ratio" => vec![laws::eval_rho_bias_ratio(a)?],
        "l" | "rho_l_bias" => vec![laws::eval_rho_l_bias(a, p.l.unwrap_or(2), limits)?],
        "k" | "rho_k_bias" => laws::eval_rho_k_bias(a, p.s.unwrap_or(1))?,
        "energy" | "energy_bias" => vec![laws::eval_energy_bias(a)?],
        "remark1" | "balanced_counterexample" => match p.p {
            Some(prime) => vec![laws::eval_balanced_counterexample(prime, limits)?],
            None => vec![laws::eval_balanced_counterexample_for(a)?],
        },
        "remark2" | "energy_difference_product" => {
            vec![laws::eval_energy_difference_product(a, p.k.unwrap_or(2) as u32)?]
        }
        other => return Err(Error::validation(format!("unknown law {other:?}"))),
    })
}

fn random_ints(group: &GroupSpec, rng: &mut impl Rng) -> DenseFunction {
    loop {
        let v: Vec<i128> = (0..group.size())
            .map(|_| if rng.gen_bool(0.5) { rng.gen_range(-3..=3) } else { 0 })
            .collect();
        if v.iter().any(|&x| x != 0) {
            return DenseFunction::from_ints(group, v).expect("length matches");
        }
    }
}

fn random_set(group: &GroupSpec, rng: &mut impl Rng) -> GroupSubset {
    loop {
        let a = GroupSubset::from_predicate(group, |_| rng.gen_bool(0.5));
        if !a.is_empty() {
            return a;
        }
    }
}

/// The identity suite for one seed. Sets not given are drawn at random from
/// stream 32 of that seed.
fn verify_suite(group: &GroupSpec, spec: &ExperimentSpec, seed: u64) -> Result<Vec<LawReport>> {
    let limits = &spec.limits;
    let mut rng = rng_for(seed, 32);
    let a = match &spec.set_a {
        Some(s) => build(s, group)?,
        None => random_set(group, &mut rng),
    };
    let b = match &spec.set_b {
        Some(s) => build(s, group)?,
        None => random_set(group, &mut rng),
    };
    let f = random_ints(group, &mut rng);
    let g = random_ints(group, &mut rng);
    let x = group.element(rng.gen_range(0..group.size()))?;
    let mut reports = vec![
        laws::check_parseval(&f)?,
        laws::check_convolution_theorem(&f, &g)?,
        laws::check_support_uncertainty(&f)?,
    ];
    for (k, l) in [(2, 2), (2, 3), (4, 2), (4, 3)] {
        match laws::check_moment_representation(&a, k, l, limits) {
            Ok(r) => reports.push(r),
            Err(e) if e.is_resource() && l > 2 => {}
            Err(e) => return Err(e),
        }
    }
    let ta = TupleSet::from_subset(&a);
    reports.push(laws::check_higher_triangle(&ta, &b, &ta, &b, limits)?);
    reports.push(laws::check_ruzsa_triangle(&a, &b)?);
    reports.push(laws::check_katz_koester(&a, &b, &x)?);
    match laws::check_energy_symmetry(&a, 2, 3, limits) {
        Ok(r) => reports.push(r),
        Err(e) if e.is_resource() => {}
        Err(e) => return Err(e),
    }
    reports.push(laws::check_eps_bounds(&a, 2, limits)?);
    if group.size() >= 2 {
        reports.push(laws::check_rho_k_trivial(&a, 1, Sign::Plus)?);
        reports.push(laws::check_rho_k_trivial(&a, 1, Sign::Minus)?);
    }
    Ok(reports.into_iter().map(|r| r.with_seed(seed)).collect())
}

/// Runs experiments concurrently; results keep input order.
pub fn run_batch(specs: &[ExperimentSpec]) -> Vec<Result<RunOutput>> {
    specs.par_iter().map(run).collect()
}

/// Parses one spec, an array of specs, or a stream of JSON documents.
pub fn parse_specs(text: &str) -> Result<Vec<ExperimentSpec>> {
    let mut out = Vec::new();
    for doc in serde_json::Deserializer::from_str(text).into_iter::<Value>() {
        let doc = doc.map_err(|e| Error::validation(format!("bad JSON: {e}")))?;
        let items = match doc {
            Value::Array(items) => items,
            other => vec![other],
        };
        for item in items {
            out.push(
                serde_json::from_value(item).map_err(|e| Error::validation(format!("bad experiment spec: {e}")))?,
            );
        }
    }
    if out.is_empty() {
        return Err(Error::validation("no experiment specs found"));
    }
    Ok(out)
}
