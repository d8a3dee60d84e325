//! Subcommands and their output.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use parafrob_core::linear::DEFAULT_BUDGET;
use parafrob_core::oracle::{frobenius_int, IntGenerators};
use parafrob_core::{solve, QuasiPolynomial, SolveOptions};
use serde::Serialize;
use thiserror::Error;

use crate::json::{self, JsonError, QpJson};
use crate::parse::{parse_generators, parse_integers, ParseError};
use crate::verify::{verify, Verification};

/// Length of the default verification sweep.
pub const DEFAULT_SWEEP: i64 = 100;

/// Mismatches listed in human-readable output.
const SHOWN_MISMATCHES: usize = 10;

#[derive(Debug, Parser)]
#[command(
    name = "parafrob",
    version,
    about = "Frobenius numbers of numerical semigroups whose generators are polynomials in t"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Sweep {
    /// First value of t (default: the threshold of the result)
    #[arg(long, allow_negative_numbers = true)]
    pub t_from: Option<i64>,
    /// Last value of t
    #[arg(long, allow_negative_numbers = true)]
    pub t_to: Option<i64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute F(t) as a quasi-polynomial and check it against the oracle
    Solve {
        /// Comma-separated generators such as "t, t+1, t+2", or "-" for stdin
        generators: String,
        #[command(flatten)]
        sweep: Sweep,
        /// Skip the verification sweep
        #[arg(long)]
        no_verify: bool,
        #[arg(long)]
        json: bool,
        /// Cap on the translate set and on division chain lengths
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Compare a symbolic answer with the oracle over a range of t
    Verify {
        generators: String,
        #[command(flatten)]
        sweep: Sweep,
        /// Check this quasi-polynomial (JSON) instead of solving
        #[arg(long)]
        qp: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Evaluate F(t) symbolically for a range of t
    Eval {
        /// Generators to solve; omit when --qp is given
        generators: Option<String>,
        #[command(flatten)]
        sweep: Sweep,
        /// Evaluate this quasi-polynomial (JSON) instead of solving
        #[arg(long)]
        qp: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Frobenius number of fixed positive integers
    Oracle {
        /// Comma-separated positive integers, or "-" for stdin
        generators: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unsupported instance: {0}")]
    Unsupported(String),
    #[error("{count} mismatches against the oracle")]
    Mismatch { count: usize },
    #[error(transparent)]
    Solve(parafrob_core::Error),
    #[error(transparent)]
    Json(#[from] JsonError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Unsupported(_) => 3,
            CliError::Mismatch { .. } => 4,
            _ => 1,
        }
    }
}

impl From<parafrob_core::Error> for CliError {
    fn from(e: parafrob_core::Error) -> Self {
        use parafrob_core::Error as E;
        match e {
            E::TooManyGenerators(n) => CliError::Unsupported(format!(
                "{n} generators, some of degree above 1. This is conjecture territory: \
                 no algorithm is known in general. Supported are any number of generators \
                 of degree at most 1, or at most three generators of any degree"
            )),
            E::ChainDoesNotTerminate(_) => CliError::Unsupported(e.to_string()),
            other => CliError::Solve(other),
        }
    }
}

fn io_error(path: &str) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.to_string(), source }
}

#[derive(Debug, Serialize)]
pub struct SolveReport {
    pub generators: Vec<String>,
    pub method: String,
    pub result: QpJson,
    pub verification: Option<Verification>,
}

#[derive(Debug, Serialize)]
struct EvalRow {
    t: i64,
    value: String,
}

struct Input {
    sources: Vec<String>,
    gens: Vec<QuasiPolynomial>,
}

fn read_argument(arg: &str, stdin: &mut dyn Read) -> Result<String, CliError> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    let mut text = String::new();
    stdin.read_to_string(&mut text).map_err(io_error("<stdin>"))?;
    Ok(text)
}

fn read_generators(arg: &str, stdin: &mut dyn Read) -> Result<Input, CliError> {
    let text = read_argument(arg, stdin)?;
    let parsed = parse_generators(&text)?;
    Ok(Input {
        sources: parsed.iter().map(|g| g.source.clone()).collect(),
        gens: parsed.iter().map(|g| g.to_quasi_polynomial()).collect(),
    })
}

fn read_qp(path: &PathBuf) -> Result<QuasiPolynomial, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(io_error(&shown))?;
    Ok(json::from_str(&text)?)
}

fn range(sweep: &Sweep, f: &QuasiPolynomial, default_len: i64) -> Result<(i64, i64), CliError> {
    let from = sweep.t_from.unwrap_or(f.threshold().max(1));
    let to = sweep.t_to.unwrap_or(from + default_len - 1);
    if to < from {
        return Err(CliError::Usage(format!("empty range: --t-from {from} is after --t-to {to}")));
    }
    Ok((from, to))
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(io_error("<stdout>"))
}

fn indented_cases(f: &QuasiPolynomial) -> String {
    let mut text = String::new();
    for (r, p) in f.components().iter().enumerate() {
        text.push_str(if r == 0 { "F(t) = " } else { "       " });
        if f.period() == 1 {
            text.push_str(&format!("{p}\n"));
        } else {
            text.push_str(&format!("{p}    if t ≡ {r} (mod {})\n", f.period()));
        }
    }
    text.push_str(&format!("valid for t >= {}\n", f.threshold()));
    text
}

fn human_report(r: &SolveReport, f: &QuasiPolynomial) -> String {
    let mut text = format!("generators: {}\nmethod: {}\n", r.generators.join(", "), r.method);
    text.push_str(&indented_cases(f));
    if let Some(v) = &r.verification {
        text.push_str(&format!(
            "oracle check for t = {}..{}: {} compared, {} skipped, {} mismatches\n",
            v.t_from,
            v.t_to,
            v.tested,
            v.skipped,
            v.mismatches.len()
        ));
        for m in v.mismatches.iter().take(SHOWN_MISMATCHES) {
            text.push_str(&format!("  t = {}: formula gives {}, oracle gives {}\n", m.t, m.symbolic, m.oracle));
        }
        if v.tested == 0 {
            text.push_str("warning: no value in the range could be compared\n");
        }
    }
    text
}

fn emit_report(
    out: &mut dyn Write,
    report: &SolveReport,
    f: &QuasiPolynomial,
    as_json: bool,
) -> Result<(), CliError> {
    let text = if as_json {
        serde_json::to_string_pretty(report).expect("plain data serializes") + "\n"
    } else {
        human_report(report, f)
    };
    write_out(out, &text)?;
    match &report.verification {
        Some(v) if !v.passed() => Err(CliError::Mismatch { count: v.mismatches.len() }),
        _ => Ok(()),
    }
}

pub fn run(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Solve { generators, sweep, no_verify, json, budget } => {
            let input = read_generators(&generators, stdin)?;
            let solution = solve(&input.gens, &SolveOptions { budget })?;
            let f = solution.frobenius;
            let verification = if no_verify {
                None
            } else {
                let (from, to) = range(&sweep, &f, DEFAULT_SWEEP)?;
                Some(verify(&input.gens, &f, from, to))
            };
            let report = SolveReport {
                generators: input.sources,
                method: solution.method.to_string(),
                result: QpJson::from_qp(&f),
                verification,
            };
            emit_report(out, &report, &f, json)
        }
        Command::Verify { generators, sweep, qp, json, budget } => {
            let input = read_generators(&generators, stdin)?;
            let (f, method) = match &qp {
                Some(path) => (read_qp(path)?, "given".to_string()),
                None => {
                    let s = solve(&input.gens, &SolveOptions { budget })?;
                    (s.frobenius, s.method.to_string())
                }
            };
            let (from, to) = range(&sweep, &f, DEFAULT_SWEEP)?;
            let report = SolveReport {
                generators: input.sources,
                method,
                result: QpJson::from_qp(&f),
                verification: Some(verify(&input.gens, &f, from, to)),
            };
            emit_report(out, &report, &f, json)
        }
        Command::Eval { generators, sweep, qp, json, budget } => {
            let f = match (&qp, &generators) {
                (Some(path), None) => read_qp(path)?,
                (None, Some(g)) => solve(&read_generators(g, stdin)?.gens, &SolveOptions { budget })?.frobenius,
                _ => return Err(CliError::Usage("eval needs either generators or --qp FILE".into())),
            };
            let (from, to) = range(&sweep, &f, 1)?;
            let rows = (from..=to)
                .map(|t| Ok(EvalRow { t, value: f.eval(t)?.to_string() }))
                .collect::<Result<Vec<_>, parafrob_core::Error>>()?;
            let text = if json {
                serde_json::to_string_pretty(&rows).expect("plain data serializes") + "\n"
            } else {
                rows.iter().map(|r| format!("{}\t{}\n", r.t, r.value)).collect()
            };
            write_out(out, &text)
        }
        Command::Oracle { generators, json } => {
            let text = read_argument(&generators, stdin)?;
            let ints = parse_integers(&text)?;
            let value = frobenius_int(&IntGenerators::new(ints).expect("parse_integers returns a nonempty list"));
            let text = if json { format!("{{\"frobenius\": {value}}}\n") } else { format!("{value}\n") };
            write_out(out, &text)
        }
    }
}
