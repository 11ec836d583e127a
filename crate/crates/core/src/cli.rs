//! Command-line front end.
//!
//! Exit codes: 0 when everything requested succeeded, 1 when an identity
//! check failed, 2 on a usage error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::combinatorics::{catalan, fibonacci};
use crate::error::Error;
use crate::golden::{
    check_reciprocal_form, check_theorem, phi_reciprocal_series, phi_series, ratio_series,
};
use crate::qfib::{check_proposition, qfib_closed, qfib_recursive};
use crate::report::{decimal, decimal_list, VerificationReport};
use crate::sw_identity::check_sw;

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

const DEFAULT_MAX_N: u64 = 60;
const DEFAULT_MAX_M: u64 = 14;

#[derive(Debug, Parser)]
#[command(
    name = "qgolden",
    version,
    about = "q-Fibonacci polynomials, the q-golden ratio, and exact identity checks"
)]
pub struct Cli {
    /// Emit JSON records instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficients of F_n(q), lowest degree first.
    Qfib {
        n: u64,
        /// Use the binomial closed form instead of the recurrence.
        #[arg(long)]
        closed_form: bool,
    },
    /// Fibonacci number F_n with F_0 = F_1 = 1.
    Fib { n: u64 },
    /// Catalan number C_k.
    Catalan { k: u64 },
    /// Coefficients of phi(q) or 1/phi(q) modulo q^order.
    Phi {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
        #[arg(long)]
        reciprocal: bool,
    },
    /// Coefficients of F_(n+1)(q) / F_n(q) modulo q^order (default order n + 1).
    Ratio {
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        order: Option<u64>,
    },
    /// Run a verification suite over bounded parameter ranges.
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: u64,
        /// Largest m for the sw suite; must not exceed --max-n [default: 14, clamped to --max-n].
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_m: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Proposition,
    Theorem,
    Corollary,
    Sw,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Proposition => "proposition",
            Suite::Theorem => "theorem",
            Suite::Corollary => "corollary",
            Suite::Sw => "sw",
            Suite::All => "all",
        }
    }
}

/// The individual checks behind `verify`. Tests substitute a sabotaged
/// implementation to exercise the failure exit code.
pub trait Verifier {
    fn proposition(&self, n: usize) -> VerificationReport {
        check_proposition(n)
    }

    fn theorem(&self, n: usize) -> VerificationReport {
        check_theorem(n)
    }

    fn corollary(&self, n: usize) -> VerificationReport {
        check_reciprocal_form(n)
    }

    fn sw(&self, n: u64, m: u64) -> Result<VerificationReport, Error> {
        check_sw(n, m)
    }
}

/// The real checks.
pub struct Exact;

impl Verifier for Exact {}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Output {
    Scalar(#[serde(with = "decimal")] BigInt),
    Coefficients(#[serde(with = "decimal_list")] Vec<BigInt>),
    Reports(Vec<VerificationReport>),
}

/// One line of JSON output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub result: Output,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub passed: Option<bool>,
}

impl OutputRecord {
    fn new(command: &str, parameters: &[(&str, Value)], result: Output) -> Self {
        OutputRecord {
            command: command.to_string(),
            parameters: parameters
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            result,
            passed: None,
        }
    }
}

fn join(coeffs: &[BigInt]) -> String {
    coeffs
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn emit(out: &mut dyn Write, json: bool, record: &OutputRecord) -> std::io::Result<()> {
    if json {
        return writeln!(
            out,
            "{}",
            serde_json::to_string(record).expect("record serializes")
        );
    }
    match &record.result {
        Output::Scalar(v) => writeln!(out, "{v}"),
        Output::Coefficients(cs) => writeln!(out, "{}", join(cs)),
        Output::Reports(reports) => {
            for r in reports {
                writeln!(out, "{r}")?;
            }
            let failed = reports.iter().filter(|r| !r.passed).count();
            writeln!(
                out,
                "{}: {} checks, {} passed, {} failed",
                record.command,
                reports.len(),
                reports.len() - failed,
                failed
            )
        }
    }
}

fn usage_error(err: &mut dyn Write, msg: impl std::fmt::Display) -> u8 {
    let _ = writeln!(err, "error: {msg}");
    EXIT_USAGE
}

/// Parse `args` (program name first) and execute, returning the exit code.
pub fn run_with<I, T>(
    args: I,
    verifier: &dyn Verifier,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code() as u8;
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, verifier, out) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => usage_error(err, msg),
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_CHECK_FAILED
        }
    }
}

enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn to_usize(name: &str, v: u64) -> Result<usize, CliError> {
    usize::try_from(v).map_err(|_| CliError::Usage(format!("{name} is too large")))
}

fn execute(cli: &Cli, verifier: &dyn Verifier, out: &mut dyn Write) -> Result<u8, CliError> {
    let json = cli.json;
    let record = match cli.command {
        Command::Qfib { n, closed_form } => {
            let idx = to_usize("n", n)?;
            let poly = if closed_form {
                qfib_closed(idx)
            } else {
                qfib_recursive::<BigInt>(idx)
            };
            let mut params = vec![("n", Value::from(n))];
            if closed_form {
                params.push(("closed_form", Value::from(true)));
            }
            OutputRecord::new("qfib", &params, Output::Coefficients(poly.into_coeffs()))
        }
        Command::Fib { n } => OutputRecord::new(
            "fib",
            &[("n", Value::from(n))],
            Output::Scalar(fibonacci(to_usize("n", n)?)),
        ),
        Command::Catalan { k } => OutputRecord::new(
            "catalan",
            &[("k", Value::from(k))],
            Output::Scalar(catalan(to_usize("k", k)?)),
        ),
        Command::Phi { order, reciprocal } => {
            let order_idx = to_usize("order", order)?;
            let series = if reciprocal {
                phi_reciprocal_series(order_idx)?
            } else {
                phi_series(order_idx)?
            };
            let mut params = vec![("order", Value::from(order))];
            if reciprocal {
                params.push(("reciprocal", Value::from(true)));
            }
            OutputRecord::new("phi", &params, Output::Coefficients(series.into_coeffs()))
        }
        Command::Ratio { n, order } => {
            let order = order.unwrap_or(n + 1);
            let series = ratio_series(to_usize("n", n)?, to_usize("order", order)?)?;
            OutputRecord::new(
                "ratio",
                &[("n", Value::from(n)), ("order", Value::from(order))],
                Output::Coefficients(series.into_coeffs()),
            )
        }
        Command::Verify {
            suite,
            max_n,
            max_m,
        } => {
            let record = verify(verifier, suite, max_n, max_m)?;
            let passed = record.passed == Some(true);
            emit(out, json, &record)?;
            return Ok(if passed { EXIT_OK } else { EXIT_CHECK_FAILED });
        }
    };
    emit(out, json, &record)?;
    Ok(EXIT_OK)
}

fn verify(
    verifier: &dyn Verifier,
    suite: Suite,
    max_n: u64,
    max_m: Option<u64>,
) -> Result<OutputRecord, CliError> {
    let max_m = match max_m {
        Some(m) if m > max_n => {
            return Err(Error::HypothesisViolated { n: max_n, m }.into());
        }
        Some(m) => m,
        None => DEFAULT_MAX_M.min(max_n),
    };
    let top = to_usize("max-n", max_n)?;
    let mut reports = Vec::new();
    let runs = |s: Suite| suite == s || suite == Suite::All;
    if runs(Suite::Proposition) {
        reports.extend((0..=top).map(|n| verifier.proposition(n)));
    }
    if runs(Suite::Theorem) {
        reports.extend((0..=top).map(|n| verifier.theorem(n)));
    }
    if runs(Suite::Corollary) {
        reports.extend((0..=top).map(|n| verifier.corollary(n)));
    }
    if runs(Suite::Sw) {
        for n in 1..=max_n {
            for m in 1..=n.min(max_m) {
                reports.push(verifier.sw(n, m)?);
            }
        }
    }
    let passed = reports.iter().all(|r| r.passed);
    let mut params = vec![
        ("suite", Value::from(suite.name())),
        ("max_n", Value::from(max_n)),
    ];
    if runs(Suite::Sw) {
        params.push(("max_m", Value::from(max_m)));
    }
    let mut record = OutputRecord::new("verify", &params, Output::Reports(reports));
    record.passed = Some(passed);
    Ok(record)
}

/// Entry point used by the binary.
pub fn run() -> std::process::ExitCode {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run_with(
        std::env::args_os(),
        &Exact,
        &mut stdout.lock(),
        &mut stderr.lock(),
    );
    std::process::ExitCode::from(code)
}
