//! `nlk` — exact construction, verification, and classification of metric
//! n-Lie algebras.
//!
//! Every command prints a single JSON report to stdout:
//! `{"command", "status": "ok"|"violation"|"error", "payload"}`.
//! Exit codes: 0 all checks pass, 1 mathematical violation, 2 parse/IO
//! error. `NLK_WORKERS` (integer >= 1) partitions the law sweeps.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use nlk_cli::format::{emit_algebra_file, parse_algebra_file, AlgebraFile};
use nlk_cli::vectors::parse_span;
use nlk_cli::CliError;
use nlk_core::catalog::{
    build_abelian, build_case1, build_case2, build_case3, build_g0, build_simple,
    ortho_direct_sum,
};
use nlk_core::metric::{metric_quotient, ortho_split, reduce_by_center, verify_levi};
use nlk_core::{
    classify, invariant_form_space, LeviAnnotation, MetricAlgebra, Scalar, ViolationReport,
};

#[derive(Parser)]
#[command(
    name = "nlk",
    version,
    about = "Exact tools for metric n-Lie algebras",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the bracket and form law checkers on an algebra file
    Check {
        file: PathBuf,
        /// Threads for the law sweeps; overrides NLK_WORKERS
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Print structural invariants (center, derived algebra, solvability)
    Invariants { file: PathBuf },
    /// Build a catalog algebra and write it to a file
    Build {
        #[command(subcommand)]
        family: BuildCommand,
    },
    /// Classify a metric algebra of corank 2..=n+1 by its invariants
    Classify { file: PathBuf },
    /// Solve for all invariant symmetric bilinear forms
    Forms { file: PathBuf },
    /// Metric quotient by an isotropic ideal (perp of the ideal mod the ideal)
    Quotient {
        file: PathBuf,
        /// Spanning vectors of the ideal, e.g. "1,0,0,0,0;0,1,0,0,0"
        #[arg(long)]
        ideal: String,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Drop arity by bracketing in dual partners of central vectors
    Reduce {
        file: PathBuf,
        /// How many central directions to fold in
        #[arg(long)]
        l: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Split the algebra into a nondegenerate central ideal and its perp
    Orthosplit { file: PathBuf },
    /// Verify an annotated Levi decomposition
    VerifyLevi {
        file: PathBuf,
        /// Spanning vectors of one simple factor; repeat per factor
        #[arg(long = "s", required = true)]
        s_parts: Vec<String>,
        /// Spanning vectors of the solvable radical
        #[arg(long)]
        r: String,
        /// Spanning vectors of a claimed isotropic ideal
        #[arg(long = "iso-ideal")]
        iso_ideal: Option<String>,
    },
}

#[derive(Subcommand)]
enum BuildCommand {
    /// Abelian algebra with the identity form
    Abelian {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// The unique simple algebra (dimension n+1)
    Simple {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1")]
        c: String,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// The simple algebra doubled by its regular module (dimension 2n+2)
    G0 {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1")]
        lambda: String,
        #[arg(long, default_value = "1")]
        mu: String,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Corank-k family with isotropic center (2 <= k <= n+1)
    Case1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "1")]
        a: String,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Reductive corank-k family: nondegenerate center plus simple part
    Case2 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "1")]
        c: String,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Mixed family: rank-l nondegenerate center block plus case 1
    Case3 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, default_value = "1")]
        a: String,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Block-orthogonal sum of already built algebra files
    OrthoSum {
        #[arg(long, num_args = 1.., required = true)]
        parts: Vec<PathBuf>,
        #[arg(short, long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = command_name(&cli.command);
    match execute(cli.command) {
        Ok(outcome) => {
            let status = if outcome.violation { "violation" } else { "ok" };
            print_report(command, status, outcome.payload);
            ExitCode::from(if outcome.violation { 1 } else { 0 })
        }
        Err(err) => {
            let status = match err {
                CliError::Math(_) => "violation",
                CliError::Parse(_) => "error",
            };
            print_report(command, status, json!({ "message": err.message() }));
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn print_report(command: &str, status: &str, payload: Value) {
    let report = json!({
        "command": command,
        "status": status,
        "payload": payload,
    });
    println!("{}", serde_json::to_string_pretty(&report).expect("valid JSON"));
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Check { .. } => "check",
        Command::Invariants { .. } => "invariants",
        Command::Build { .. } => "build",
        Command::Classify { .. } => "classify",
        Command::Forms { .. } => "forms",
        Command::Quotient { .. } => "quotient",
        Command::Reduce { .. } => "reduce",
        Command::Orthosplit { .. } => "orthosplit",
        Command::VerifyLevi { .. } => "verify-levi",
    }
}

struct Outcome {
    payload: Value,
    violation: bool,
}

impl Outcome {
    fn ok(payload: Value) -> Self {
        Outcome {
            payload,
            violation: false,
        }
    }
}

fn workers(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("NLK_WORKERS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(1)
    .max(1)
}

fn read_file(path: &Path) -> Result<AlgebraFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    parse_algebra_file(&text)
}

/// Reads a file that must carry a form, verifies it, and fails with the
/// violation census if any law is broken.
fn read_verified_metric(path: &Path) -> Result<MetricAlgebra, CliError> {
    let parsed = read_file(path)?;
    let form = parsed.form.ok_or_else(|| {
        CliError::Parse(format!("{}: file carries no form", path.display()))
    })?;
    let mut ma = MetricAlgebra::new(parsed.algebra, form)?;
    let report = ma.verify_with_workers(workers(None));
    if !report.passed() {
        let first = &report.violations[0];
        return Err(CliError::Math(format!(
            "input fails verification: {} ({} witnesses)",
            first.kind.label(),
            report.len()
        )));
    }
    Ok(ma)
}

fn write_algebra(path: &Path, ma: &MetricAlgebra) -> Result<(), CliError> {
    std::fs::write(path, emit_algebra_file(ma.algebra(), Some(ma.form())))
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn violations_payload(report: &ViolationReport) -> Value {
    json!({
        "violations": report.violations,
        "count": report.len(),
    })
}

fn scalar_arg(text: &str) -> Result<Scalar, CliError> {
    Scalar::parse(text).map_err(CliError::from)
}

fn execute(cmd: Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Check { file, workers: w } => {
            let parsed = read_file(&file)?;
            let threads = workers(w);
            let report = match parsed.form {
                Some(form) => {
                    let mut ma = MetricAlgebra::new(parsed.algebra, form)?;
                    ma.verify_with_workers(threads)
                }
                None => parsed
                    .algebra
                    .check_fundamental_identity_with_workers(threads),
            };
            let passed = report.passed();
            Ok(Outcome {
                payload: violations_payload(&report),
                violation: !passed,
            })
        }
        Command::Invariants { file } => {
            let parsed = read_file(&file)?;
            let algebra = parsed.algebra;
            let center = algebra.center();
            let derived = algebra.derived_algebra();
            let (center_isotropic, derived_eq_center_perp) = match &parsed.form {
                Some(form) => (
                    Some(form.is_isotropic(&center)?),
                    Some(form.orthogonal_complement(&center)? == derived),
                ),
                None => (None, None),
            };
            Ok(Outcome::ok(json!({
                "dim": algebra.dim(),
                "arity": algebra.arity(),
                "dim_center": center.dim(),
                "dim_derived": derived.dim(),
                "center_isotropic": center_isotropic,
                "perfect": derived.dim() == algebra.dim(),
                "solvable": algebra.is_solvable(&algebra.full_space())?,
                "derived_eq_center_perp": derived_eq_center_perp,
            })))
        }
        Command::Build { family } => run_build(family),
        Command::Classify { file } => {
            let ma = read_verified_metric(&file)?;
            let report = classify(&ma)?;
            Ok(Outcome::ok(serde_json::to_value(report).expect("serializable report")))
        }
        Command::Forms { file } => {
            let parsed = read_file(&file)?;
            let (basis, dimension) = invariant_form_space(&parsed.algebra);
            let grams: Vec<Value> = basis
                .iter()
                .map(|f| serde_json::to_value(f.gram()).expect("serializable gram"))
                .collect();
            Ok(Outcome::ok(json!({
                "dimension": dimension,
                "basis": grams,
            })))
        }
        Command::Quotient { file, ideal, out } => {
            let ma = read_verified_metric(&file)?;
            let ideal = parse_span(&ideal, ma.dim())?;
            let quotient = metric_quotient(&ma, &ideal)?;
            write_algebra(&out, &quotient)?;
            Ok(Outcome::ok(json!({
                "path": out.display().to_string(),
                "dim": quotient.dim(),
                "arity": quotient.arity(),
            })))
        }
        Command::Reduce { file, l, out } => {
            let ma = read_verified_metric(&file)?;
            let reduced = reduce_by_center(&ma, l)?;
            write_algebra(&out, &reduced)?;
            Ok(Outcome::ok(json!({
                "path": out.display().to_string(),
                "dim": reduced.dim(),
                "arity": reduced.arity(),
            })))
        }
        Command::Orthosplit { file } => {
            let ma = read_verified_metric(&file)?;
            let (c1, g1) = ortho_split(&ma)?;
            Ok(Outcome::ok(json!({
                "c1": { "dim": c1.dim(), "basis": c1.basis_rows() },
                "g1": { "dim": g1.dim(), "basis": g1.basis_rows() },
            })))
        }
        Command::VerifyLevi {
            file,
            s_parts,
            r,
            iso_ideal,
        } => {
            let ma = read_verified_metric(&file)?;
            let d = ma.dim();
            let ann = LeviAnnotation {
                s_parts: s_parts
                    .iter()
                    .map(|text| parse_span(text, d))
                    .collect::<Result<_, _>>()?,
                r: parse_span(&r, d)?,
                iso_ideal: iso_ideal.as_deref().map(|t| parse_span(t, d)).transpose()?,
            };
            let report = verify_levi(&ma, &ann)?;
            let passed = report.passed();
            Ok(Outcome {
                payload: violations_payload(&report),
                violation: !passed,
            })
        }
    }
}

fn run_build(cmd: BuildCommand) -> Result<Outcome, CliError> {
    let (family, ma, out) = match cmd {
        BuildCommand::Abelian { n, d, out } => ("abelian", build_abelian(n, d, None)?, out),
        BuildCommand::Simple { n, c, out } => ("simple", build_simple(n, scalar_arg(&c)?)?, out),
        BuildCommand::G0 { n, lambda, mu, out } => (
            "g0",
            build_g0(n, scalar_arg(&lambda)?, scalar_arg(&mu)?)?,
            out,
        ),
        BuildCommand::Case1 { n, k, a, out } => ("case1", build_case1(n, k, scalar_arg(&a)?)?, out),
        BuildCommand::Case2 { n, k, c, out } => ("case2", build_case2(n, k, scalar_arg(&c)?)?, out),
        BuildCommand::Case3 { n, k, l, a, out } => {
            ("case3", build_case3(n, k, l, scalar_arg(&a)?)?, out)
        }
        BuildCommand::OrthoSum { parts, out } => {
            let summands: Vec<MetricAlgebra> = parts
                .iter()
                .map(|p| {
                    let parsed = read_file(p)?;
                    let form = parsed.form.ok_or_else(|| {
                        CliError::Parse(format!("{}: file carries no form", p.display()))
                    })?;
                    MetricAlgebra::new(parsed.algebra, form).map_err(CliError::from)
                })
                .collect::<Result<_, _>>()?;
            ("ortho_sum", ortho_direct_sum(&summands)?, out)
        }
    };
    write_algebra(&out, &ma)?;
    Ok(Outcome::ok(json!({
        "path": out.display().to_string(),
        "family": family,
        "arity": ma.arity(),
        "dim": ma.dim(),
    })))
}
