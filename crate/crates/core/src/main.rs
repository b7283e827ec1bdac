// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use serde_json::{json, Value};

use abelian_uncertainty::cli::{self, Command, ExperimentSpec, Exit, Format, Params};
use abelian_uncertainty::constructions::SetSpec;
use abelian_uncertainty::Limits;

/// Additive-combinatorial and Fourier quantities on finite abelian groups.
#[derive(Debug, Parser)]
#[command(name = "uncert", version)]
struct Args {
    /// JSON file with one experiment, an array, or a stream of documents.
    #[arg(long, conflicts_with_all = ["group", "cmd"])]
    spec: Option<PathBuf>,

    /// Cyclic orders, e.g. `2,2,2,2` or `12`.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    group: Option<Vec<i64>>,

    /// Set A, e.g. `subgroup:e1,e2`, `qr:101`, `random:0.5`.
    #[arg(long = "set")]
    set_a: Option<String>,

    #[arg(long = "set-b")]
    set_b: Option<String>,

    #[arg(long, value_enum)]
    cmd: Option<Command>,

    /// Laws for `theorem`, e.g. rho_bias, rho_bias_ratio, rho_l_bias, rho_k_bias,
    /// energy_bias, balanced_counterexample, energy_difference_product.
    #[arg(long, value_delimiter = ',')]
    laws: Vec<String>,

    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    iterations: Option<usize>,
    #[arg(long)]
    target_size: Option<usize>,
    #[arg(long)]
    objective: Option<String>,

    #[arg(long, value_enum)]
    format: Option<Format>,

    /// Seed for random sets without their own seed, and for `verify`/`search`.
    #[arg(long)]
    seed: Option<u64>,

    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    max_tuples: Option<u128>,
    #[arg(long)]
    max_search_nodes: Option<u128>,

    /// Leave out `wall_time_s` so reruns are byte-identical.
    #[arg(long)]
    no_timing: bool,
}

fn parse_set(text: &Option<String>, seed: Option<u64>) -> Result<Option<SetSpec>, String> {
    let Some(text) = text else { return Ok(None) };
    let mut spec: SetSpec = text.parse().map_err(|e| format!("--set {text:?}: {e}"))?;
    if let Some(seed) = seed {
        if !text.contains("seed=") {
            spec.seed = seed;
        }
    }
    Ok(Some(spec))
}

fn specs_from_args(args: &Args) -> Result<Vec<ExperimentSpec>, String> {
    let mut specs = match &args.spec {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            cli::parse_specs(&text).map_err(|e| e.to_string())?
        }
        None => {
            let group = args.group.clone().ok_or("--group is required without --spec")?;
            let command = args.cmd.ok_or("--cmd is required without --spec")?;
            vec![ExperimentSpec {
                group,
                set_a: parse_set(&args.set_a, args.seed)?,
                set_b: parse_set(&args.set_b, args.seed)?,
                command,
                params: Params {
                    laws: args.laws.clone(),
                    k: args.k,
                    l: args.l,
                    s: args.s,
                    p: args.p,
                    seeds: args.seed.into_iter().collect(),
                    iterations: args.iterations,
                    target_size: args.target_size,
                    objective: args.objective.clone(),
                    ..Params::default()
                },
                format: Format::Json,
                limits: Limits::default(),
            }]
        }
    };
    for spec in &mut specs {
        if let Some(f) = args.format {
            spec.format = f;
        }
        if let Some(n) = args.max_n {
            spec.limits.max_n = n;
        }
        if let Some(t) = args.max_tuples {
            spec.limits.max_tuples = t;
        }
        if let Some(s) = args.max_search_nodes {
            spec.limits.max_search_nodes = s;
        }
    }
    Ok(specs)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let specs = match specs_from_args(&args) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(Exit::Usage as u8);
        }
    };
    let mut exit = Exit::Ok;
    let values: Vec<Value> = cli::run_batch(&specs)
        .into_iter()
        .map(|result| match result {
            Ok(out) => {
                exit = exit.max(out.exit);
                if args.no_timing {
                    cli::strip_timing(out.value)
                } else {
                    out.value
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                exit = exit.max(Exit::of_error(&e));
                json!({ "error": e.to_string() })
            }
        })
        .collect();
    let format = specs[0].format;
    let rendered = if values.len() == 1 {
        cli::render(&values[0], format)
    } else {
        cli::render_batch(&values, format)
    };
    match rendered {
        Ok(text) => print!("{text}"),
        Err(e) => {
            eprintln!("error: {e}");
            exit = exit.max(Exit::Usage);
        }
    }
    ExitCode::from(exit as u8)
}
