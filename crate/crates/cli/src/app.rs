//! Argument parsing and command dispatch.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use zetaforge::corpus::{
    catalog_json, evaluate_suite_with, list_identities, registry, Filter, SuiteConfig,
    DEFAULT_MAX_TERMS,
};
use zetaforge::specfun::ConstantsCache;
use zetaforge::Error;

use crate::functions::{evaluate, FUNCTIONS};
use crate::report::{ConfigEcho, ReportDocument, ReportFormat};

/// Every check passed.
pub const EXIT_PASS: i32 = 0;
/// At least one check failed.
pub const EXIT_FAIL: i32 = 1;
/// Bad arguments, unknown ids, domain errors or I/O failures.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "zetaforge",
    version,
    about = "Verify zeta, harmonic and Stieltjes identities to double-double precision"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check identities by comparing independent evaluation routes.
    Verify(VerifyArgs),
    /// List registered identities, optionally those matching a prefix.
    List {
        /// Id prefix, exact id or alias, comma-separated ids, `fast` or `slow`.
        prefix: Option<String>,
        /// Print the full catalog as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Evaluate one function with its error bound.
    #[command(after_help = function_help())]
    Eval {
        name: String,
        #[arg(allow_negative_numbers = true)]
        args: Vec<String>,
    },
    /// Show the stored constants and validate them against their oracles.
    Constants {
        /// Print the validated cache as JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Ids or aliases (comma-separated), an id prefix, `fast` or `slow`.
    #[arg(long, env = "ZETAFORGE_IDS")]
    pub ids: Option<String>,
    /// Tolerance replacing every record's own.
    #[arg(long, env = "ZETAFORGE_TOL", value_parser = positive_tol)]
    pub tol: Option<f64>,
    /// Worker threads (default: all cores).
    #[arg(long, env = "ZETAFORGE_JOBS", value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: Option<u32>,
    /// Report format: json, markdown or plain.
    #[arg(long, env = "ZETAFORGE_REPORT", default_value = "plain", value_parser = report_format)]
    pub report: ReportFormat,
    /// Write the report here instead of standard output.
    #[arg(long, env = "ZETAFORGE_OUT")]
    pub out: Option<PathBuf>,
    /// Cap on directly summed terms of each series.
    #[arg(long, env = "ZETAFORGE_MAX_TERMS")]
    pub max_terms: Option<u64>,
}

fn positive_tol(s: &str) -> Result<f64, String> {
    match s.trim().parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(format!("tolerance must be a positive number, got `{s}`")),
    }
}

fn report_format(s: &str) -> Result<ReportFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn function_help() -> String {
    let mut s = String::from("Functions:\n");
    for f in FUNCTIONS {
        s.push_str(&format!("  {:<24} {}\n", f.usage(), f.summary));
    }
    s
}

/// Settings of a `verify` run.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub ids: Option<String>,
    pub tol: Option<f64>,
    pub jobs: Option<usize>,
    pub report_format: ReportFormat,
    pub out_path: Option<PathBuf>,
    pub max_terms: Option<u64>,
}

impl From<VerifyArgs> for RunConfig {
    fn from(a: VerifyArgs) -> Self {
        RunConfig {
            ids: a.ids,
            tol: a.tol,
            jobs: a.jobs.map(|j| j as usize),
            report_format: a.report,
            out_path: a.out,
            max_terms: a.max_terms,
        }
    }
}

/// Runs the suite selected by `config` and assembles its report.
pub fn run_verify(config: &RunConfig) -> zetaforge::Result<ReportDocument> {
    let filter = config
        .ids
        .as_deref()
        .map(str::parse::<Filter>)
        .transpose()?;
    let suite = SuiteConfig {
        jobs: config.jobs,
        tol: config.tol,
        max_terms: config.max_terms,
    };
    let start = Instant::now();
    let rows = evaluate_suite_with(filter.as_ref(), &suite)?;
    let echo = ConfigEcho {
        ids: config.ids.clone(),
        tol: config.tol,
        jobs: config.jobs,
        max_terms: config.max_terms.unwrap_or(DEFAULT_MAX_TERMS),
        report_format: config.report_format,
    };
    Ok(ReportDocument::new(
        echo,
        rows,
        start.elapsed().as_secs_f64(),
    ))
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let selects_ids = matches!(cli.command, Command::Verify(_) | Command::List { .. });
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        // A closed pipe downstream (`zetaforge list | head`) is not an error.
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_PASS,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: cannot write output: {e}");
            EXIT_USAGE
        }
        Err(Failure::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            if selects_ids && matches!(e, Error::Lookup(_) | Error::Usage(_)) {
                let ids: Vec<_> = registry().iter().map(|r| r.id).collect();
                let _ = writeln!(err, "valid ids: {}", ids.join(", "));
            }
            EXIT_USAGE
        }
    }
}

/// Why a command stopped: a library error, or a failed write of its output.
enum Failure {
    Core(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Verify(args) => {
            let config = RunConfig::from(args);
            let doc = run_verify(&config)?;
            let text = doc.render(config.report_format);
            match &config.out_path {
                Some(path) => {
                    std::fs::write(path, text).map_err(|e| {
                        std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))
                    })?;
                    writeln!(out, "{}", doc.summary_line())?;
                }
                None => out.write_all(text.as_bytes())?,
            }
            Ok(if doc.all_passed() {
                EXIT_PASS
            } else {
                EXIT_FAIL
            })
        }
        Command::List { prefix, json } => {
            if json {
                out.write_all(catalog_json().as_bytes())?;
                writeln!(out)?;
                return Ok(EXIT_PASS);
            }
            let filter = prefix.as_deref().map(str::parse::<Filter>).transpose()?;
            for r in list_identities(filter.as_ref())? {
                let aliases = if r.aliases.is_empty() {
                    String::new()
                } else {
                    format!(" ({})", r.aliases.join(", "))
                };
                writeln!(
                    out,
                    "{:<6}{:<9} {:<4} {:>2} sample(s)  {}",
                    r.id,
                    aliases,
                    r.cost_class,
                    r.params.len(),
                    r.statement
                )?;
            }
            Ok(EXIT_PASS)
        }
        Command::Eval { name, args } => {
            let v = evaluate(&name, &args)?;
            writeln!(out, "{}", v.value.to_decimal_string(32))?;
            writeln!(out, "± {:.3e}", v.err)?;
            Ok(EXIT_PASS)
        }
        Command::Constants { json } => {
            let (cache, checks) = ConstantsCache::standard().validate()?;
            if json {
                writeln!(out, "{}", cache.to_json())?;
            } else {
                for (name, rel) in &checks {
                    let entry = &cache.constants[name];
                    writeln!(
                        out,
                        "{:<7} {:<44} {} (rel. dev. {:.1e})  {}",
                        name,
                        entry.digits,
                        if entry.validated {
                            "validated"
                        } else {
                            "UNVALIDATED"
                        },
                        rel,
                        entry.provenance
                    )?;
                }
            }
            if cache.constants.values().all(|e| e.validated) {
                Ok(EXIT_PASS)
            } else {
                writeln!(err, "some constants failed validation")?;
                Ok(EXIT_FAIL)
            }
        }
    }
}
