//! Command-line interface: deterministic JSON reports over exact data.
//!
//! Every command echoes its inputs, reports results with all rational
//! values printed exactly, and lists the anchor tags of the statements it
//! exercises.  Output is byte-identical across runs with the same arguments
//! and seed; timing goes to standard error only.  Exit codes: `0` for
//! success, `1` for a failed verification, `2` for invalid input, `3` for
//! an exceeded size bound.

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::combinatorics::{Partition, SkewShape, StandardTableau};
use crate::exact_algebra::Rat;
use crate::fusion::{fuse_f_lambda, fuse_f_omega, fusion_oracle_family, restriction_family};
use crate::mixed_tensor::{
    g_exchange_family, rank_family, rmatrix_family, symmetrizer_family, MixedTensorSpace,
};
use crate::yangian::{
    check_rtt, exterior_family, g_series_family, intertwiner_family, module_equivalence_family,
    rho_for_tableaux, rtt_family, skew_reduction_family, verify_mixed_intertwiner,
    verify_module_equivalence, verify_skew_reduction,
};
use crate::{CheckReport, Error, Result};

/// Exact constructions and identity checks on mixed tensor spaces.
#[derive(Parser, Debug)]
#[command(name = "fusym", version)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Shape and filling arguments shared by the object-building commands.
#[derive(Args, Debug, Clone)]
struct ShapeArgs {
    /// Outer shape: comma-separated parts, for example `5,3,3`.
    #[arg(long, value_name = "PARTS")]
    outer: Option<String>,
    /// Inner shape subtracted from the outer shape.
    #[arg(long, value_name = "PARTS")]
    inner: Option<String>,
    /// Outer shape of the second (dual-side) pair.
    #[arg(long, value_name = "PARTS")]
    outer_tilde: Option<String>,
    /// Inner shape of the second (dual-side) pair.
    #[arg(long, value_name = "PARTS")]
    inner_tilde: Option<String>,
    /// Explicit standard filling of the first shape: a JSON array of
    /// `[row, column]` cells listed in entry order.  Defaults to the column
    /// filling.
    #[arg(long, value_name = "JSON")]
    tableau: Option<String>,
}

/// Sizes, seed, bounds preset, and output destination.
#[derive(Args, Debug, Clone)]
struct CommonArgs {
    /// Auxiliary space dimension.
    #[arg(short = 'N', value_name = "N", default_value_t = 2)]
    big_n: usize,
    /// Inner-pair size (the shift entering dual parameters).
    #[arg(short = 'M', value_name = "M", default_value_t = 0)]
    big_m: usize,
    /// Seed for sampled evaluation points.
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Bounds preset for suites: `default` or `tiny`.
    #[arg(long, default_value = "default")]
    bounds: String,
    /// Write the JSON report to a file instead of standard output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Contents and filling of a standard tableau of a skew shape.
    Tableau {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Use the column filling (the default when no filling is given).
        #[arg(long)]
        column: bool,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Group-algebra element produced by the fusion procedure.
    Fuse {
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Dimension, rank, and trace of the generalized symmetrizer.
    Symmetrizer {
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Check one named identity instance: rtt, prop14, thm15, prop16, sec44.
    Verify {
        /// Name of the check.
        check: String,
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run a family of checks: all, fusion, tensor, yangian.
    Suite {
        /// Name of the family.
        name: String,
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn parse_parts(text: &Option<String>) -> Result<Partition> {
    let Some(text) = text else {
        return Ok(Partition::empty());
    };
    if text.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for piece in text.split(',') {
        let part = piece.trim().parse::<usize>().map_err(|_| {
            Error::InvalidInput(format!("shape component `{piece}` is not a natural number"))
        })?;
        parts.push(part);
    }
    Partition::new(parts)
}

fn first_shape(args: &ShapeArgs) -> Result<SkewShape> {
    SkewShape::new(parse_parts(&args.outer)?, parse_parts(&args.inner)?)
}

fn second_shape(args: &ShapeArgs) -> Result<SkewShape> {
    SkewShape::new(parse_parts(&args.outer_tilde)?, parse_parts(&args.inner_tilde)?)
}

fn tableau_from(shape: &SkewShape, filling: &Option<String>) -> Result<StandardTableau> {
    let Some(text) = filling else {
        return Ok(StandardTableau::column_tableau(shape));
    };
    let cells: Vec<[usize; 2]> = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("tableau filling is not valid JSON: {e}")))?;
    StandardTableau::new(shape.clone(), cells.into_iter().map(|[r, c]| (r, c)).collect())
}

fn shape_inputs(args: &ShapeArgs, common: &CommonArgs) -> Value {
    json!({
        "bounds": common.bounds,
        "inner": parse_parts(&args.inner).map(|p| p.to_string()).unwrap_or_default(),
        "inner_tilde": parse_parts(&args.inner_tilde).map(|p| p.to_string()).unwrap_or_default(),
        "m": common.big_m,
        "n": common.big_n,
        "outer": parse_parts(&args.outer).map(|p| p.to_string()).unwrap_or_default(),
        "outer_tilde": parse_parts(&args.outer_tilde).map(|p| p.to_string()).unwrap_or_default(),
        "seed": common.seed,
        "tableau": args.tableau.clone().unwrap_or_default(),
    })
}

fn report_value(report: &CheckReport) -> Value {
    json!({
        "failures": report.failures(),
        "instances": report.instances(),
        "name": report.name(),
        "pass": report.pass(),
    })
}

fn rational_rows(m: &crate::exact_algebra::Matrix<Rat>) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect())
        .collect()
}

/// Size bounds used by each suite family.
struct Bounds {
    fusion_letters: usize,
    rank_cells: usize,
    rank_dims: Vec<usize>,
    rmatrix_n: usize,
    rmatrix_samples: usize,
    symmetrizer_cells: usize,
    symmetrizer_n: usize,
    exchange_cells: usize,
    exchange_nm: usize,
    heavy_series: bool,
    intertwiner: (usize, usize, usize),
    exterior_n: usize,
    g_letters: usize,
    equivalence_instances: usize,
}

fn bounds_preset(name: &str) -> Result<Bounds> {
    match name {
        "default" => Ok(Bounds {
            fusion_letters: 5,
            rank_cells: 4,
            rank_dims: vec![2, 3],
            rmatrix_n: 3,
            rmatrix_samples: 4,
            symmetrizer_cells: 4,
            symmetrizer_n: 3,
            exchange_cells: 4,
            exchange_nm: 4,
            heavy_series: true,
            intertwiner: (3, 3, 1),
            exterior_n: 3,
            g_letters: 5,
            equivalence_instances: 3,
        }),
        "tiny" => Ok(Bounds {
            fusion_letters: 4,
            rank_cells: 3,
            rank_dims: vec![2],
            rmatrix_n: 2,
            rmatrix_samples: 2,
            symmetrizer_cells: 3,
            symmetrizer_n: 3,
            exchange_cells: 3,
            exchange_nm: 3,
            heavy_series: false,
            intertwiner: (2, 2, 1),
            exterior_n: 2,
            g_letters: 3,
            equivalence_instances: 1,
        }),
        other => Err(Error::InvalidInput(format!(
            "unknown bounds preset `{other}`; use `default` or `tiny`"
        ))),
    }
}

fn fusion_reports(bounds: &Bounds) -> Result<Vec<CheckReport>> {
    Ok(vec![
        fusion_oracle_family(bounds.fusion_letters)?,
        restriction_family(bounds.fusion_letters)?,
    ])
}

fn tensor_reports(bounds: &Bounds, seed: u64) -> Result<Vec<CheckReport>> {
    Ok(vec![
        rank_family(bounds.rank_cells, &bounds.rank_dims)?,
        rmatrix_family(bounds.rmatrix_n, bounds.rmatrix_samples, seed)?,
        symmetrizer_family(bounds.symmetrizer_cells, bounds.symmetrizer_n)?,
        g_exchange_family(bounds.exchange_cells, bounds.exchange_nm)?,
    ])
}

fn yangian_reports(bounds: &Bounds, seed: u64) -> Result<Vec<CheckReport>> {
    let (cells, max_n, max_m) = bounds.intertwiner;
    Ok(vec![
        rtt_family(seed, bounds.heavy_series)?,
        intertwiner_family(cells, max_n, max_m)?,
        exterior_family(bounds.exterior_n)?,
        g_series_family(bounds.g_letters)?,
        module_equivalence_family(bounds.equivalence_instances)?,
        skew_reduction_family()?,
    ])
}

fn suite_anchors(name: &str) -> Vec<&'static str> {
    let fusion = vec!["Eq (2.01)", "Eq (2.6)", "Eq (2.9)", "Prop 2.4"];
    let tensor = vec![
        "Eq (3.5)",
        "Eq (3.75)",
        "Lemma 1.3",
        "Prop 3.3",
        "Prop 3.4",
    ];
    let yangian = vec![
        "Eq (1.32)",
        "Eq (fact)",
        "Prop 1.4",
        "Prop 1.6",
        "Sec 4.4",
        "Thm 1.5",
    ];
    match name {
        "fusion" => fusion,
        "tensor" => tensor,
        "yangian" => yangian,
        _ => {
            let mut all = fusion;
            all.extend(tensor);
            all.extend(yangian);
            all.sort_unstable();
            all
        }
    }
}

fn execute(cli: Cli) -> Result<(Value, bool, Option<PathBuf>)> {
    match cli.command {
        Command::Tableau {
            shape,
            column: _,
            common,
        } => {
            let skew = first_shape(&shape)?;
            let tableau = tableau_from(&skew, &shape.tableau)?;
            let contents: Vec<String> =
                tableau.contents().iter().map(|c| c.to_string()).collect();
            let filling: Vec<[usize; 3]> = tableau
                .filling()
                .iter()
                .map(|&(r, c, e)| [r, c, e])
                .collect();
            let value = json!({
                "anchors": ["Sec 1.2"],
                "check": "tableau",
                "inputs": shape_inputs(&shape, &common),
                "results": {
                    "contents": contents,
                    "filling": filling,
                    "shape": skew.to_string(),
                    "size": tableau.size(),
                },
            });
            Ok((value, true, common.out))
        }
        Command::Fuse { shape, common } => {
            let skew = first_shape(&shape)?;
            let tableau = tableau_from(&skew, &shape.tableau)?;
            let element = if skew.is_nonskew() {
                fuse_f_lambda(&tableau)?
            } else {
                fuse_f_omega(&tableau)?
            };
            let pairs: Vec<[String; 2]> = element
                .terms()
                .map(|(p, c)| [p.to_string(), c.to_string()])
                .collect();
            let value = json!({
                "anchors": ["Eq (2.6)"],
                "check": "fuse",
                "inputs": shape_inputs(&shape, &common),
                "results": {
                    "element": pairs,
                    "shape": skew.to_string(),
                    "support": element.support_len(),
                },
            });
            Ok((value, true, common.out))
        }
        Command::Symmetrizer { shape, common } => {
            let skew = first_shape(&shape)?;
            let skew_tilde = second_shape(&shape)?;
            let omega = tableau_from(&skew, &shape.tableau)?;
            let omega_tilde = StandardTableau::column_tableau(&skew_tilde);
            let space =
                MixedTensorSpace::new(common.big_n, omega.size(), omega_tilde.size())?;
            let f = space.mixed_symmetrizer_op(&omega, &omega_tilde, common.big_m)?;
            let mut trace = Rat::from_integer(0.into());
            for i in 0..f.rows() {
                trace += f.get(i, i);
            }
            let value = json!({
                "anchors": ["Prop 3.3", "Prop 3.4", "Sec 1.3"],
                "check": "symmetrizer",
                "inputs": shape_inputs(&shape, &common),
                "results": {
                    "dim": space.dim(),
                    "rank": f.rank(),
                    "trace": trace.to_string(),
                },
            });
            Ok((value, true, common.out))
        }
        Command::Verify {
            check,
            shape,
            common,
        } => {
            let value_pass = run_verify(&check, &shape, &common)?;
            Ok((value_pass.0, value_pass.1, common.out))
        }
        Command::Suite { name, common } => {
            let bounds = bounds_preset(&common.bounds)?;
            let reports = match name.as_str() {
                "fusion" => fusion_reports(&bounds)?,
                "tensor" => tensor_reports(&bounds, common.seed)?,
                "yangian" => yangian_reports(&bounds, common.seed)?,
                "all" => {
                    let mut all = fusion_reports(&bounds)?;
                    all.extend(tensor_reports(&bounds, common.seed)?);
                    all.extend(yangian_reports(&bounds, common.seed)?);
                    all
                }
                other => {
                    return Err(Error::InvalidInput(format!(
                        "unknown suite `{other}`; use all, fusion, tensor, or yangian"
                    )));
                }
            };
            let pass = reports.iter().all(CheckReport::pass);
            let value = json!({
                "anchors": suite_anchors(&name),
                "check": "suite",
                "inputs": {
                    "bounds": common.bounds,
                    "name": name,
                    "seed": common.seed,
                },
                "results": {
                    "pass": pass,
                    "reports": reports.iter().map(report_value).collect::<Vec<_>>(),
                },
            });
            Ok((value, pass, common.out))
        }
    }
}

fn run_verify(check: &str, shape: &ShapeArgs, common: &CommonArgs) -> Result<(Value, bool)> {
    let inputs = shape_inputs(shape, common);
    match check {
        "rtt" => {
            let omega = tableau_from(&first_shape(shape)?, &shape.tableau)?;
            let omega_tilde = StandardTableau::column_tableau(&second_shape(shape)?);
            let series = rho_for_tableaux(common.big_n, common.big_m, &omega, &omega_tilde)?;
            let pass = check_rtt(&series, 3, common.seed)?;
            let value = json!({
                "anchors": ["Eq (1.32)"],
                "check": "rtt",
                "inputs": inputs,
                "results": { "pass": pass },
            });
            Ok((value, pass))
        }
        "prop14" => {
            let omega = tableau_from(&first_shape(shape)?, &shape.tableau)?;
            let omega_tilde = StandardTableau::column_tableau(&second_shape(shape)?);
            let pass =
                verify_mixed_intertwiner(common.big_n, common.big_m, &omega, &omega_tilde)?;
            let value = json!({
                "anchors": ["Prop 1.4"],
                "check": "prop14",
                "inputs": inputs,
                "results": { "pass": pass },
            });
            Ok((value, pass))
        }
        "thm15" | "prop16" => {
            let lambda = parse_parts(&shape.outer)?;
            let mu = parse_parts(&shape.inner)?;
            let lambda_tilde = parse_parts(&shape.outer_tilde)?;
            let mu_tilde = parse_parts(&shape.inner_tilde)?;
            let (certificate, witness) = if check == "thm15" {
                verify_module_equivalence(
                    common.big_n,
                    common.big_m,
                    &lambda,
                    &lambda_tilde,
                    &mu,
                    &mu_tilde,
                )?
            } else {
                verify_skew_reduction(
                    common.big_n,
                    common.big_m,
                    &lambda,
                    &lambda_tilde,
                    &mu,
                    &mu_tilde,
                )?
            };
            let pass = certificate.pass();
            let anchors = if check == "thm15" {
                vec!["Cor 1.5", "Thm 1.5"]
            } else {
                vec!["Prop 1.6"]
            };
            let value = json!({
                "anchors": anchors,
                "check": check,
                "inputs": inputs,
                "results": {
                    "commutants": [certificate.commutant_left, certificate.commutant_right],
                    "dim": certificate.dim,
                    "intertwiner": rational_rows(&witness),
                    "invertible": certificate.intertwiner_invertible,
                    "pass": pass,
                    "series_identity": certificate.series_identity,
                    "solution_dim": certificate.solution_dim,
                    "stabilized_order": certificate.stabilized_order,
                },
            });
            Ok((value, pass))
        }
        "sec44" => {
            let report = exterior_family(common.big_n)?;
            let pass = report.pass();
            let value = json!({
                "anchors": ["Sec 4.4"],
                "check": "sec44",
                "inputs": inputs,
                "results": report_value(&report),
            });
            Ok((value, pass))
        }
        other => Err(Error::InvalidInput(format!(
            "unknown check `{other}`; use rtt, prop14, thm15, prop16, or sec44"
        ))),
    }
}

/// Parses the process arguments, runs the selected command, prints the JSON
/// report, and returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let start = Instant::now();
    match execute(cli) {
        Ok((value, pass, out)) => {
            let mut text =
                serde_json::to_string_pretty(&value).expect("reports serialize cleanly");
            text.push('\n');
            if let Some(path) = out {
                if let Err(e) = fs::write(&path, text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 2;
                }
            } else {
                print!("{text}");
            }
            eprintln!("elapsed: {:.3?}", start.elapsed());
            if pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
