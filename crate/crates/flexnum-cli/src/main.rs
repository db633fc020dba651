//! Command-line front end for the external-number calculus: evaluate scalar
//! expressions, compute determinants and Laplace expansions, inspect row
//! operations, near-inverses and ranks, and run the randomized law suites.
//!
//! Exit codes: 0 on success, 1 when a requested verdict is false (a failed
//! comparison or a suite with failures), 2 on usage, parse, or domain errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use flexnum::det::{self, MinorSelector};
use flexnum::external::SetRelation;
use flexnum::harness::{run_all, run_suite, GenConfig, SuiteReport, SUITES};
use flexnum::inverse;
use flexnum::parse::{parse_matrix, parse_scalar};
use flexnum::rank::{self, RankOptions, StrictRank};
use flexnum::{Error, FlexMatrix};
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "flexnum",
    about = "Exact calculus of external numbers (value + error neutrix) and their matrices",
    after_help = "Scalar grammar: rationals (3/2), eps, neutrix atoms o, L, R, 0n, \
                  operators + - * / ^ with rational exponents, parentheses. \
                  Matrices: [[1+o, 0], [eps, 1]]. Row and column flags are 1-based."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Input {
    /// Inline expression or matrix text.
    value: Option<String>,
    /// Read the input from a file instead.
    #[arg(long, conflicts_with = "value")]
    file: Option<std::path::PathBuf>,
}

impl Input {
    fn read(&self) -> Result<String, String> {
        match (&self.value, &self.file) {
            (Some(v), None) => Ok(v.clone()),
            (None, Some(path)) => std::fs::read_to_string(path)
                .map(|s| s.trim().to_string())
                .map_err(|e| format!("cannot read {}: {e}", path.display())),
            _ => Err("provide the input inline or with --file".into()),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a scalar expression and print its canonical form.
    Eval(Input),
    /// Determinant of a square matrix (permutation-sum semantics).
    Det(Input),
    /// Laplace expansion along a column, compared with the determinant.
    Laplace {
        #[command(flatten)]
        input: Input,
        /// Column to expand along (1-based).
        #[arg(long)]
        col: usize,
    },
    /// Row operations and their effect on the determinant.
    Rowop {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        op: RowOp,
        /// Target row (1-based).
        #[arg(long)]
        row: usize,
        /// Source row for --op addmul (1-based).
        #[arg(long)]
        src: Option<usize>,
        /// Scalar expression for --op scale / addmul.
        #[arg(long)]
        lambda: Option<String>,
        /// Second matrix for --op sum (differs only at --row).
        #[arg(long)]
        second: Option<String>,
    },
    /// Adjugate near-inverse with hypothesis flags and inclusion verdicts.
    Inv(Input),
    /// Minor rank, row-rank interval, and strict rank with certificates.
    Rank {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Representative matrices sampled for the strict-rank search.
        #[arg(long, default_value_t = 200)]
        samples: u32,
    },
    /// Run a randomized law suite (or `all`); prints one JSON report per
    /// suite.
    Check {
        /// Suite name or `all`.
        suite: String,
        #[arg(long, default_value_t = 100)]
        trials: u32,
        #[arg(long, default_value_t = 0xf1e5)]
        seed: u64,
    },
    /// Compare two scalar expressions.
    Compare {
        expr_a: String,
        expr_b: String,
        /// Set inclusion: A within B.
        #[arg(long, conflicts_with_all = ["eq", "leq"])]
        subset: bool,
        /// Set equality.
        #[arg(long, conflicts_with = "leq")]
        eq: bool,
        /// External order: A at most B.
        #[arg(long)]
        leq: bool,
    },
    /// List the available law suites.
    Suites,
}

#[derive(Clone, Copy, ValueEnum)]
enum RowOp {
    /// Scale one row by lambda; compares lambda det(A) with det(B).
    Scale,
    /// Add lambda times row --src to row --row; reports the spill bound.
    Addmul,
    /// Split a row as a sum: det of the combined matrix vs det(A) + det(B).
    Sum,
}

fn relation_name(r: SetRelation) -> &'static str {
    match r {
        SetRelation::Equal => "equal",
        SetRelation::StrictSubset => "strict-subset",
    }
}

fn run(cli: &Cli) -> Result<i32, Error> {
    match &cli.command {
        Command::Eval(input) => {
            let text = input.read().map_err(usage)?;
            let value = parse_scalar(&text)?;
            match cli.format {
                Format::Text => println!("{value}"),
                Format::Json => println!(
                    "{}",
                    json!({
                        "value": value.to_string(),
                        "zeroless": value.is_zeroless(),
                        "neutrix": value.neutrix().to_string(),
                    })
                ),
            }
            Ok(0)
        }
        Command::Det(input) => {
            let m = parse_matrix(&input.read().map_err(usage)?)?;
            let d = det::det(&m)?;
            match cli.format {
                Format::Text => println!("{d}"),
                Format::Json => println!(
                    "{}",
                    json!({
                        "det": d.to_string(),
                        "zeroless": d.is_zeroless(),
                    })
                ),
            }
            Ok(0)
        }
        Command::Laplace { input, col } => {
            let m = parse_matrix(&input.read().map_err(usage)?)?;
            let col0 = col
                .checked_sub(1)
                .ok_or_else(|| Error::BadIndex("columns are 1-based".into()))?;
            let report = det::laplace(&m, col0)?;
            match cli.format {
                Format::Text => {
                    println!("det: {}", report.det);
                    println!("expansion: {}", report.expansion);
                    println!("relation: {}", relation_name(report.relation));
                    println!("equality-condition: {}", report.equality_condition);
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "det": report.det.to_string(),
                        "expansion": report.expansion.to_string(),
                        "relation": relation_name(report.relation),
                        "equality_condition": report.equality_condition,
                    })
                ),
            }
            Ok(0)
        }
        Command::Rowop {
            input,
            op,
            row,
            src,
            lambda,
            second,
        } => {
            let m = parse_matrix(&input.read().map_err(usage)?)?;
            let row0 = row
                .checked_sub(1)
                .ok_or_else(|| Error::BadIndex("rows are 1-based".into()))?;
            run_rowop(cli.format, &m, *op, row0, src.as_ref(), lambda.as_deref(), second.as_deref())
        }
        Command::Inv(input) => {
            let m = parse_matrix(&input.read().map_err(usage)?)?;
            let report = inverse::near_inverse(&m)?;
            let hyp = &report.hypotheses;
            match cli.format {
                Format::Text => {
                    println!("nonsingular: {}", hyp.nonsingular);
                    println!("max-entry-zeroless: {}", hyp.abs_max_zeroless);
                    println!("uncertainty-not-absorber: {}", hyp.uncertainty_not_absorber);
                    println!("tolerance: {}", report.tolerance);
                    match &report.candidate {
                        Some(b) => println!("candidate: {b}"),
                        None => println!("candidate: none (determinant is not zeroless)"),
                    }
                    println!("AB-included: {}", report.ab_included);
                    println!("BA-included: {}", report.ba_included);
                    println!("verified: {}", report.verified());
                    for reason in hyp.failed() {
                        println!("hypothesis-failed: {reason}");
                    }
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "hypotheses": {
                            "nonsingular": hyp.nonsingular,
                            "max_entry_zeroless": hyp.abs_max_zeroless,
                            "uncertainty_not_absorber": hyp.uncertainty_not_absorber,
                        },
                        "tolerance": report.tolerance.to_string(),
                        "candidate": report.candidate.as_ref().map(|b| b.to_string()),
                        "ab_included": report.ab_included,
                        "ba_included": report.ba_included,
                        "verified": report.verified(),
                    })
                ),
            }
            Ok(0)
        }
        Command::Rank {
            input,
            seed,
            samples,
        } => {
            let m = parse_matrix(&input.read().map_err(usage)?)?;
            let opts = RankOptions {
                seed: *seed,
                samples: *samples,
            };
            let report = rank::rank_report(&m, &opts)?;
            print_rank(cli.format, &report);
            Ok(0)
        }
        Command::Check {
            suite,
            trials,
            seed,
        } => {
            let cfg = GenConfig {
                seed: *seed,
                trials: *trials,
                ..GenConfig::default()
            };
            let reports: Vec<SuiteReport> = if suite == "all" {
                run_all(&cfg)
            } else {
                vec![run_suite(suite, &cfg)?]
            };
            let mut failed = false;
            for r in &reports {
                println!("{}", serde_json::to_string(r).expect("serializable"));
                failed |= !r.passed();
            }
            Ok(if failed { 1 } else { 0 })
        }
        Command::Compare {
            expr_a,
            expr_b,
            subset,
            eq,
            leq,
        } => {
            let a = parse_scalar(expr_a)?;
            let b = parse_scalar(expr_b)?;
            let (relation, verdict) = if *subset {
                ("subset", a.is_subset(&b))
            } else if *eq {
                ("eq", a == b)
            } else if *leq {
                ("leq", a.leq(&b))
            } else {
                return Err(usage("choose one of --subset, --eq, --leq".into()));
            };
            match cli.format {
                Format::Text => println!("{verdict}"),
                Format::Json => println!(
                    "{}",
                    json!({
                        "relation": relation,
                        "lhs": a.to_string(),
                        "rhs": b.to_string(),
                        "verdict": verdict,
                    })
                ),
            }
            Ok(if verdict { 0 } else { 1 })
        }
        Command::Suites => {
            for s in SUITES {
                println!("{s}");
            }
            Ok(0)
        }
    }
}

fn run_rowop(
    format: Format,
    m: &FlexMatrix,
    op: RowOp,
    row0: usize,
    src: Option<&usize>,
    lambda: Option<&str>,
    second: Option<&str>,
) -> Result<i32, Error> {
    match op {
        RowOp::Scale => {
            let lambda = parse_scalar(
                lambda.ok_or_else(|| usage("--op scale needs --lambda".into()))?,
            )?;
            let report = det::det_row_scale(m, row0, &lambda)?;
            emit_rowop(
                format,
                "scale",
                &[
                    ("det-scaled", report.det_scaled.to_string()),
                    ("lambda-det", report.lambda_det.to_string()),
                    ("relation", relation_name(report.relation).to_string()),
                    (
                        "equality-condition",
                        report.equality_condition.to_string(),
                    ),
                ],
            );
        }
        RowOp::Addmul => {
            let lambda = parse_scalar(
                lambda.ok_or_else(|| usage("--op addmul needs --lambda".into()))?,
            )?;
            let src0 = src
                .ok_or_else(|| usage("--op addmul needs --src".into()))?
                .checked_sub(1)
                .ok_or_else(|| Error::BadIndex("rows are 1-based".into()))?;
            let report = det::add_multiple_row(m, src0, row0, &lambda)?;
            emit_rowop(
                format,
                "addmul",
                &[
                    ("result", report.result.to_string()),
                    ("det-before", report.det_before.to_string()),
                    ("det-after", report.det_after.to_string()),
                    ("bound", report.bound.to_string()),
                    (
                        "equality-condition",
                        report.equality_condition.to_string(),
                    ),
                    ("unchanged", report.unchanged.to_string()),
                ],
            );
        }
        RowOp::Sum => {
            let second = parse_matrix(
                second.ok_or_else(|| usage("--op sum needs --second".into()))?,
            )?;
            let report = det::det_row_sum(m, &second, row0)?;
            emit_rowop(
                format,
                "sum",
                &[
                    ("combined", report.combined.to_string()),
                    ("det-combined", report.det_combined.to_string()),
                    ("det-sum", report.det_sum.to_string()),
                    ("relation", relation_name(report.relation).to_string()),
                    (
                        "equality-condition",
                        report.equality_condition.to_string(),
                    ),
                    (
                        "not-nearly-opposite",
                        report.not_nearly_opposite.to_string(),
                    ),
                ],
            );
        }
    }
    Ok(0)
}

fn emit_rowop(format: Format, op: &str, fields: &[(&str, String)]) {
    match format {
        Format::Text => {
            for (k, v) in fields {
                println!("{k}: {v}");
            }
        }
        Format::Json => {
            let mut map = serde_json::Map::new();
            map.insert("op".into(), json!(op));
            for (k, v) in fields {
                map.insert(k.replace('-', "_"), json!(v));
            }
            println!("{}", serde_json::Value::Object(map));
        }
    }
}

fn selector_string(sel: &MinorSelector) -> String {
    let one_based = |v: &[usize]| -> Vec<usize> { v.iter().map(|i| i + 1).collect() };
    format!(
        "rows {:?} x cols {:?}",
        one_based(sel.rows()),
        one_based(sel.cols())
    )
}

fn print_rank(format: Format, report: &rank::RankReport) {
    let strict_desc = match &report.strict {
        StrictRank::Defined {
            value,
            representative,
        } => {
            let rows: Vec<String> = representative
                .iter()
                .map(|r| {
                    let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                    format!("[{}]", cells.join(", "))
                })
                .collect();
            (
                "defined",
                Some(*value),
                Some(format!("[{}]", rows.join(","))),
                None,
            )
        }
        StrictRank::UndefinedEvidence { samples } => {
            ("undefined-evidence", None, None, Some(*samples))
        }
        StrictRank::Unknown => ("unknown", None, None, None),
    };
    match format {
        Format::Text => {
            println!("minor-rank: {}", report.minor_rank);
            if let Some(sel) = &report.minor_witness {
                println!("minor-witness: {}", selector_string(sel));
            }
            println!(
                "row-rank: [{}, {}]{}",
                report.row_rank.lo,
                report.row_rank.hi,
                if report.row_rank.undecided_subsets > 0 {
                    format!(
                        " ({} undecided subsets)",
                        report.row_rank.undecided_subsets
                    )
                } else {
                    String::new()
                }
            );
            if let Some((subset, cert)) = &report.row_rank.independent_witness {
                let rows: Vec<usize> = subset.iter().map(|i| i + 1).collect();
                println!("independent-rows: {rows:?} via {cert}");
            }
            match strict_desc {
                ("defined", Some(v), Some(rep), _) => {
                    println!("strict-rank: defined({v})");
                    println!("strict-witness: {rep}");
                }
                ("undefined-evidence", _, _, Some(k)) => {
                    println!("strict-rank: undefined-evidence({k} samples, all exceed minor rank)")
                }
                _ => println!("strict-rank: unknown"),
            }
        }
        Format::Json => {
            let (kind, value, rep, samples) = strict_desc;
            println!(
                "{}",
                json!({
                    "minor_rank": report.minor_rank,
                    "minor_witness": report.minor_witness.as_ref().map(selector_string),
                    "row_rank": {
                        "lo": report.row_rank.lo,
                        "hi": report.row_rank.hi,
                        "undecided_subsets": report.row_rank.undecided_subsets,
                    },
                    "strict_rank": {
                        "kind": kind,
                        "value": value,
                        "representative": rep,
                        "samples": samples,
                    },
                })
            );
        }
    }
}

fn usage(msg: String) -> Error {
    Error::Syntax { pos: 0, msg }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // exact-arithmetic budget overruns abort loudly; surface them as ordinary
    // command errors
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| run(&cli))) {
        Ok(Ok(code)) => ExitCode::from(code as u8),
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "internal error".into());
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
