//! Running identity suites: selection, parallel verification, reporting.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::Parser;
use globset::{Glob, GlobSet, GlobSetBuilder};
use rayon::prelude::*;
use serde::Serialize;

use mockq::catalog::builtin_identities;
use mockq::verify::DEFAULT_ORDER;
use mockq::{
    parse_identities, verify_identity, IdentityRecord, QError, Status, VerificationReport,
};

/// Verify q-series identities by exact expansion.
#[derive(Parser, Debug, Clone, Default)]
#[command(name = "mockq", version, about)]
pub struct Cli {
    /// Truncation order for every identity, overriding per-identity orders.
    #[arg(long, value_name = "N")]
    pub order: Option<u32>,

    /// Identity file to load; may be repeated.
    #[arg(long = "file", value_name = "PATH")]
    pub files: Vec<PathBuf>,

    /// Include the builtin catalog and its companion identities.
    #[arg(long)]
    pub catalog: bool,

    /// Only run identities whose name matches this glob; may be repeated.
    #[arg(long = "name", value_name = "GLOB")]
    pub names: Vec<String>,

    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, value_name = "K")]
    pub jobs: Option<usize>,

    /// Write a JSON report to PATH (`-` for stdout).
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,

    /// List the selected identities without evaluating them.
    #[arg(long)]
    pub list: bool,
}

/// One row of the JSON report.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct JsonReport {
    pub name: String,
    pub status: String,
    pub order: u32,
    pub first_mismatch: Option<String>,
    pub lhs_coeff: Option<String>,
    pub rhs_coeff: Option<String>,
    pub message: Option<String>,
    pub ms: u64,
}

impl From<&VerificationReport> for JsonReport {
    fn from(r: &VerificationReport) -> Self {
        JsonReport {
            name: r.name.clone(),
            status: r.status.to_string(),
            order: r.order,
            first_mismatch: r.first_mismatch.as_ref().map(ToString::to_string),
            lhs_coeff: r.lhs_coeff.clone(),
            rhs_coeff: r.rhs_coeff.clone(),
            message: r.message.clone(),
            ms: r.elapsed.as_millis() as u64,
        }
    }
}

#[derive(Debug)]
pub enum RunError {
    Io(PathBuf, io::Error),
    Parse(PathBuf, QError),
    DuplicateName(String),
    BadGlob(String, globset::Error),
    Pool(rayon::ThreadPoolBuildError),
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            RunError::Parse(p, QError::Parse { line, col, msg }) => {
                write!(f, "{}:{line}:{col}: {msg}", p.display())
            }
            RunError::Parse(p, e) => write!(f, "{}: {e}", p.display()),
            RunError::DuplicateName(n) => write!(f, "identity `{n}` is defined more than once"),
            RunError::BadGlob(g, e) => write!(f, "bad --name pattern `{g}`: {e}"),
            RunError::Pool(e) => write!(f, "cannot start worker pool: {e}"),
        }
    }
}

impl std::error::Error for RunError {}

/// Loads the inputs in command-line order (builtin catalog first, then
/// files) and applies the name filter.
pub fn select(cli: &Cli) -> Result<Vec<IdentityRecord>, RunError> {
    let mut all = Vec::new();
    if cli.catalog {
        all.extend(builtin_identities());
    }
    for path in &cli.files {
        let text = fs::read_to_string(path).map_err(|e| RunError::Io(path.clone(), e))?;
        all.extend(parse_identities(&text).map_err(|e| RunError::Parse(path.clone(), e))?);
    }
    let mut seen = std::collections::HashSet::new();
    for r in &all {
        if !seen.insert(r.name.as_str()) {
            return Err(RunError::DuplicateName(r.name.clone()));
        }
    }
    if cli.names.is_empty() {
        return Ok(all);
    }
    let set = glob_set(&cli.names)?;
    Ok(all.into_iter().filter(|r| set.is_match(&r.name)).collect())
}

fn glob_set(pats: &[String]) -> Result<GlobSet, RunError> {
    let mut b = GlobSetBuilder::new();
    for p in pats {
        b.add(Glob::new(p).map_err(|e| RunError::BadGlob(p.clone(), e))?);
    }
    b.build().map_err(|e| RunError::BadGlob(pats.join(","), e))
}

/// Verifies `records` on a pool of `jobs` threads. Reports come back in
/// input order.
pub fn verify_all(
    records: &[IdentityRecord],
    order: Option<u32>,
    jobs: Option<usize>,
) -> Result<Vec<VerificationReport>, RunError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(k) = jobs {
        b = b.num_threads(k.max(1));
    }
    let pool = b.build().map_err(RunError::Pool)?;
    Ok(pool.install(|| {
        records
            .par_iter()
            .map(|r| {
                let mut r = r.clone();
                if order.is_some() {
                    r.order = order;
                }
                verify_identity(&r, DEFAULT_ORDER)
            })
            .collect()
    }))
}

/// 0 if everything passed, 2 if anything errored, 1 otherwise.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Error) {
        2
    } else if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    }
}

pub fn to_json(reports: &[VerificationReport]) -> String {
    let rows: Vec<JsonReport> = reports.iter().map(JsonReport::from).collect();
    serde_json::to_string_pretty(&rows).expect("reports serialize")
}

pub fn write_table(out: &mut dyn Write, reports: &[VerificationReport]) -> io::Result<()> {
    let width = reports
        .iter()
        .map(|r| r.name.len())
        .max()
        .unwrap_or(4)
        .max(4);
    for r in reports {
        let ms = r.elapsed.as_millis();
        write!(
            out,
            "{:<5}  {:<width$}  order {:>4}  {:>7} ms",
            r.status, r.name, r.order, ms
        )?;
        match r.status {
            Status::Pass => writeln!(out)?,
            Status::Fail => writeln!(
                out,
                "  first mismatch at q^{}: lhs {} rhs {}",
                r.first_mismatch
                    .as_ref()
                    .map(ToString::to_string)
                    .unwrap_or_default(),
                r.lhs_coeff.as_deref().unwrap_or("?"),
                r.rhs_coeff.as_deref().unwrap_or("?"),
            )?,
            Status::Error => {
                let msg = r
                    .message
                    .as_deref()
                    .unwrap_or("")
                    .replace('\n', "\n        ");
                writeln!(out, "\n        {msg}")?
            }
        }
    }
    Ok(())
}

fn write_list(
    out: &mut dyn Write,
    records: &[IdentityRecord],
    order: Option<u32>,
) -> io::Result<()> {
    for r in records {
        let o = order.or(r.order).unwrap_or(DEFAULT_ORDER);
        let tags: Vec<&str> = r.tags.iter().map(String::as_str).collect();
        writeln!(out, "{}\torder {o}\t{}", r.name, tags.join(","))?;
    }
    Ok(())
}

/// Runs the command line and returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match run_inner(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn run_inner(
    cli: &Cli,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Box<dyn std::error::Error>> {
    let records = select(cli)?;
    if records.is_empty() {
        writeln!(
            err,
            "warning: no identities selected (use --catalog or --file, and check --name)"
        )?;
    }
    if cli.list {
        write_list(out, &records, cli.order)?;
        return Ok(0);
    }
    let start = Instant::now();
    let reports = verify_all(&records, cli.order, cli.jobs)?;
    write_table(out, &reports)?;
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    writeln!(
        out,
        "{} passed, {} failed, {} errors in {:.1} s",
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Error),
        start.elapsed().as_secs_f64()
    )?;
    if let Some(path) = &cli.json {
        let text = to_json(&reports);
        if path.as_os_str() == "-" {
            writeln!(out, "{text}")?;
        } else {
            fs::write(path, text + "\n").map_err(|e| RunError::Io(path.clone(), e))?;
        }
    }
    Ok(exit_code(&reports))
}
