//! Argument parsing and dispatch. [`run`] never prints; it returns the exit
//! code and the text for standard output.

use std::ffi::OsString;
use std::path::PathBuf;

use alexq_core::cocycle::phi0;
use alexq_core::homology::{h2_brute_force, h2_closed_form, h2_eisermann};
use alexq_core::structure::{canonical_word, rewrite_trace, word_eval, Rule, Word};
use alexq_core::{AbelianInvariants, Error, FiniteQuandle, LinearAlexanderParams};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::report::{Context, ErrorInfo, Report, Status};
use crate::sample::DEFAULT_SEED;
use crate::suite::{run_sweep, summarize, SuiteOptions};
use crate::table::{parse_rows, TableError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "alexq",
    version,
    about = "Structure groups and second homology of Alexander quandles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a quandle table file against the quandle axioms.
    Axioms {
        #[arg(long)]
        table: PathBuf,
    },
    /// Orbit partition of Al(Z/n, t).
    Orbits {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: u64,
    },
    /// Second quandle homology of Al(Z/n, t).
    H2 {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: u64,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
    /// Packed form and canonical word of a structure group element.
    NormalForm {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: u64,
        /// Whitespace-separated letters such as "e1 e0^-2 e3".
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Include every rewriting step.
        #[arg(long)]
        trace: bool,
    },
    /// The table of phi0(a, b) for all a, b.
    PhiTable {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: u64,
    },
    /// Run the full check suite for every n <= n-max and every unit t.
    Verify {
        #[arg(long)]
        n_max: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random words per case for the sampled checks.
        #[arg(long, default_value_t = 200)]
        words: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Eisermann,
    Chain,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

/// A failure carrying the report fields and the exit code.
struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
    result: Option<Value>,
}

impl Failure {
    fn usage(kind: &'static str, message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            kind,
            message: message.into(),
            result: None,
        }
    }

    fn domain(kind: &'static str, message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_DOMAIN,
            kind,
            message: message.into(),
            result: None,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let kind = match e {
            Error::NotAUnit { .. } => "NotAUnit",
            Error::NotInImage { .. } => "NotInImage",
            Error::NotAQuandle(_) => "NotAQuandle",
            Error::NotAGroup(_) => "NotAGroup",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::NotAComplex => "NotAComplex",
            Error::ShapeMismatch { .. } => "ShapeMismatch",
        };
        Failure::domain(kind, e.to_string())
    }
}

pub fn run<I, A>(args: I) -> Outcome
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: EXIT_OK,
                    stdout: e.render().to_string(),
                };
            }
            let attempted = args
                .get(1)
                .and_then(|a| a.to_str())
                .filter(|a| !a.starts_with('-'))
                .unwrap_or("");
            let report = Report::error(attempted, None, "Usage", e.render().to_string().trim_end());
            return finish(report, EXIT_USAGE);
        }
    };
    let (name, context) = describe(&cli.command);
    match dispatch(cli.command) {
        Ok((status, result)) => {
            let code = if status == Status::Failed {
                EXIT_VERIFY_FAILED
            } else {
                EXIT_OK
            };
            let error = (status == Status::Failed).then(|| ErrorInfo {
                kind: "VerificationFailed".into(),
                message: "at least one check failed".into(),
            });
            let report = Report {
                command: name.into(),
                context,
                status,
                result: Some(result),
                error,
            };
            finish(report, code)
        }
        Err(f) => {
            let mut report = Report::error(name, context, f.kind, f.message);
            report.result = f.result;
            finish(report, f.code)
        }
    }
}

fn finish(report: Report, code: i32) -> Outcome {
    Outcome {
        code,
        stdout: report.to_json() + "\n",
    }
}

fn describe(cmd: &Command) -> (&'static str, Option<Context>) {
    let params = |n: &u64, t: &u64| Some(Context::Params { n: *n, t: *t });
    match cmd {
        Command::Axioms { table } => (
            "axioms",
            Some(Context::Table {
                table: table.display().to_string(),
            }),
        ),
        Command::Orbits { n, t } => ("orbits", params(n, t)),
        Command::H2 { n, t, .. } => ("h2", params(n, t)),
        Command::NormalForm { n, t, .. } => ("normal-form", params(n, t)),
        Command::PhiTable { n, t } => ("phi-table", params(n, t)),
        Command::Verify { n_max, seed, .. } => (
            "verify",
            Some(Context::Sweep {
                n_max: *n_max,
                seed: *seed,
            }),
        ),
    }
}

fn dispatch(cmd: Command) -> Result<(Status, Value), Failure> {
    let ok = |v: Value| Ok((Status::Ok, v));
    match cmd {
        Command::Axioms { table } => ok(axioms(&table)?),
        Command::Orbits { n, t } => {
            let p = LinearAlexanderParams::new(n, t)?;
            let m = p.orbit_count();
            let orbits: Vec<Vec<u64>> = (0..m)
                .map(|r| (r..n).step_by(m as usize).collect())
                .collect();
            ok(json!({ "m": m, "connected": m == 1, "orbits": orbits }))
        }
        Command::H2 { n, t, method } => {
            let p = LinearAlexanderParams::new(n, t)?;
            let h = match method {
                Method::Formula => h2_closed_form(&p),
                Method::Eisermann => h2_eisermann(&p),
                Method::Chain => h2_brute_force(&FiniteQuandle::alexander(&p))?,
            };
            ok(invariants_json(&h))
        }
        Command::NormalForm { n, t, word, trace } => {
            let p = LinearAlexanderParams::new(n, t)?;
            let w: Word = word
                .parse()
                .map_err(|e: alexq_core::structure::WordParseError| {
                    Failure::usage("WordSyntax", e.to_string())
                })?;
            if let Some(l) = w.letters().iter().find(|l| l.color >= n) {
                return Err(Failure::domain(
                    "ColorOutOfRange",
                    format!("color {} is not below n = {n}", l.color),
                ));
            }
            ok(normal_form(&p, &w, trace)?)
        }
        Command::PhiTable { n, t } => {
            let p = LinearAlexanderParams::new(n, t)?;
            let table: Vec<Vec<Vec<i64>>> = (0..n)
                .map(|a| (0..n).map(|b| phi0(&p, a, b).0).collect())
                .collect();
            ok(json!({ "m": p.orbit_count(), "phi0": table }))
        }
        Command::Verify { n_max, seed, words } => {
            let cases = run_sweep(SuiteOptions { n_max, seed, words });
            let summary = summarize(&cases);
            let status = if summary.failed == 0 {
                Status::Ok
            } else {
                Status::Failed
            };
            let result = json!({ "summary": summary, "cases": cases });
            Ok((status, result))
        }
    }
}

pub fn invariants_json(h: &AbelianInvariants) -> Value {
    let torsion: Vec<Value> = h
        .torsion()
        .iter()
        .map(|x| match u64::try_from(x) {
            Ok(v) => json!(v),
            Err(_) => json!(x.to_string()),
        })
        .collect();
    json!({ "rank": h.rank(), "torsion": torsion })
}

fn axioms(path: &PathBuf) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage("Io", format!("{}: {e}", path.display())))?;
    let rows = parse_rows(&text).map_err(|e| match e {
        TableError::Syntax { .. } => Failure::usage("TableSyntax", e.to_string()),
        _ => Failure::domain("TableOutOfRange", e.to_string()),
    })?;
    match FiniteQuandle::validate(&rows) {
        Ok(q) => {
            let orbits = q.orbits();
            Ok(json!({
                "valid": true,
                "size": q.size(),
                "connected": orbits.len() == 1,
                "orbits": orbits,
            }))
        }
        Err(v) => Err(Failure {
            code: EXIT_DOMAIN,
            kind: "NotAQuandle",
            message: v.to_string(),
            result: Some(json!({
                "valid": false,
                "violation": { "axiom": v.axiom(), "witness": v.witness() },
            })),
        }),
    }
}

fn normal_form(p: &LinearAlexanderParams, w: &Word, with_trace: bool) -> Result<Value, Failure> {
    let e = word_eval(p, w);
    let canon = canonical_word(p, &e)?;
    let mut out = json!({
        "input": w.to_string(),
        "packed": { "v": e.v, "a": e.weight },
        "canonical": canon.to_string(),
    });
    if with_trace {
        let r = rewrite_trace(p, w);
        debug_assert_eq!(r.word, canon);
        let steps: Vec<Value> = r
            .trace
            .iter()
            .map(|s| {
                let mut step = json!({ "rule": s.rule.name() });
                match s.rule {
                    Rule::Braiding { at } => step["at"] = json!(at),
                    Rule::FreeReduction => {}
                    Rule::CentralInsertion { at, power } => {
                        step["at"] = json!(at);
                        step["power"] = json!(power);
                    }
                    Rule::LinearRelation { at, gamma } => {
                        step["at"] = json!(at);
                        step["gamma"] = json!(gamma);
                    }
                    Rule::CentralCancellation { to } => step["to"] = json!(to),
                }
                step["word"] = json!(s.word.to_string());
                step
            })
            .collect();
        out["trace"] = json!(steps);
    }
    Ok(out)
}
