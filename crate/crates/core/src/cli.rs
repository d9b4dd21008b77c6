//! Command-line driver: JSON in, JSON out.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::io::{
    from_json, param_poly_to_json, to_json, ConditionsJson, InstanceJson, OracleCaseJson,
    ParamInstanceJson, RealNonrealJson, TermJson,
};
use crate::oracle::{check_case, seeded_cases, OracleCase};
use crate::parametric::helim;
use crate::queries::{Backend, LedgerStats, ZeroSetHandle};
use crate::realnonreal::real_nonreal_determination;
use crate::signdet::sign_determination;
use crate::znz::zero_nonzero_determination;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Znz,
    Sign,
    RealNonreal,
    Helim,
    Verify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BackendArg {
    Sturm,
    Hermite,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Backend {
        match b {
            BackendArg::Sturm => Backend::Sturm,
            BackendArg::Hermite => Backend::Hermite,
        }
    }
}

/// Zero-nonzero, sign and real-nonreal determination for univariate systems.
#[derive(Clone, Debug, Parser)]
#[command(name = "signcond", version)]
pub struct RunConfig {
    #[arg(long, value_enum)]
    pub mode: Mode,
    #[arg(long, value_enum, default_value = "sturm")]
    pub backend: BackendArg,
    /// Input JSON file; standard input when omitted.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Output JSON file; standard output when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Generator seed for `verify` without `--input`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of generated `verify` instances.
    #[arg(long, default_value_t = 200)]
    pub cases: usize,
    /// Attach query ledger statistics.
    #[arg(long)]
    pub stats: bool,
}

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Parse(String),
    Invalid(String),
    Mismatch(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Invalid(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::Parse(m) => write!(f, "malformed input: {m}"),
            CliError::Invalid(m) => write!(f, "invalid instance: {m}"),
            CliError::Mismatch(n) => write!(f, "verification failed on {n} instance(s)"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(m) => CliError::Parse(m),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

#[derive(Serialize)]
struct Failure {
    index: usize,
    mismatches: Vec<String>,
    instance: OracleCaseJson,
}

#[derive(Serialize)]
struct VerifyReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    backend: &'static str,
    cases: usize,
    passed: usize,
    failed: usize,
    failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    stats: Option<Vec<LedgerStats>>,
}

fn read_input(cfg: &RunConfig) -> Result<String, CliError> {
    let mut text = String::new();
    match &cfg.input {
        Some(path) => {
            text = fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?
        }
        None => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::Io(e.to_string()))?;
        }
    }
    Ok(text)
}

fn write_output(cfg: &RunConfig, text: &str) -> Result<(), CliError> {
    match &cfg.output {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

fn read_cases(text: &str) -> Result<Vec<OracleCase>, CliError> {
    let value: serde_json::Value = from_json(text)?;
    let cases: Vec<OracleCaseJson> = if value.is_array() {
        serde_json::from_value(value)
    } else {
        serde_json::from_value(value).map(|c| vec![c])
    }
    .map_err(|e| CliError::Parse(e.to_string()))?;
    Ok(cases.iter().map(OracleCaseJson::case).collect())
}

/// Runs one invocation and returns the JSON text it wrote.
pub fn run(cfg: &RunConfig) -> Result<String, CliError> {
    let backend = Backend::from(cfg.backend);
    let output = match cfg.mode {
        Mode::Znz | Mode::Sign | Mode::RealNonreal => {
            let inst: InstanceJson = from_json(&read_input(cfg)?)?;
            let system = inst.system();
            let mut h = ZeroSetHandle::new(&inst.polynomial(), backend)?;
            let stats = |h: &ZeroSetHandle| cfg.stats.then(|| h.ledger().stats());
            match cfg.mode {
                Mode::Znz => {
                    let out = zero_nonzero_determination(&mut h, &system)?;
                    let mut json = ConditionsJson::bits(&out.feas, &out.counts);
                    json.stats = stats(&h);
                    to_json(&json)
                }
                Mode::Sign => {
                    let out = sign_determination(&mut h, &system)?;
                    let mut json = ConditionsJson::signs(&out.feas, &out.counts);
                    json.stats = stats(&h);
                    to_json(&json)
                }
                _ => {
                    let out = real_nonreal_determination(&mut h, &system)?;
                    let mut json = RealNonrealJson::new(&out);
                    json.stats = stats(&h);
                    to_json(&json)
                }
            }
        }
        Mode::Helim => {
            let inst: ParamInstanceJson = from_json(&read_input(cfg)?)?;
            let family = helim(&inst.polynomial()?, &inst.system()?, inst.bound)?;
            let json: Vec<Vec<TermJson>> = family.iter().map(param_poly_to_json).collect();
            to_json(&json)
        }
        Mode::Verify => {
            let (cases, seed) = match &cfg.input {
                Some(_) => (read_cases(&read_input(cfg)?)?, None),
                None => (seeded_cases(cfg.seed, cfg.cases), Some(cfg.seed)),
            };
            let reports = cases
                .par_iter()
                .map(|c| check_case(c, backend))
                .collect::<Result<Vec<_>, Error>>()?;
            let failures: Vec<Failure> = reports
                .iter()
                .enumerate()
                .filter(|(_, r)| !r.passed)
                .map(|(index, r)| Failure {
                    index,
                    mismatches: r.mismatches.clone(),
                    instance: OracleCaseJson::new(&cases[index]),
                })
                .collect();
            let report = VerifyReport {
                seed,
                backend: match cfg.backend {
                    BackendArg::Sturm => "sturm",
                    BackendArg::Hermite => "hermite",
                },
                cases: cases.len(),
                passed: cases.len() - failures.len(),
                failed: failures.len(),
                failures,
                stats: cfg
                    .stats
                    .then(|| reports.iter().map(|r| r.stats.clone()).collect()),
            };
            let text = to_json(&report);
            if report.failed > 0 {
                write_output(cfg, &text)?;
                return Err(CliError::Mismatch(report.failed));
            }
            text
        }
    };
    write_output(cfg, &output)?;
    Ok(output)
}

/// Entry point for the binary: runs, reports errors on stderr, returns the
/// process exit code.
pub fn main_with(cfg: RunConfig) -> i32 {
    match run(&cfg) {
        Ok(_) => 0,
        Err(e) => {
            eprintln!("signcond: {e}");
            e.exit_code()
        }
    }
}
