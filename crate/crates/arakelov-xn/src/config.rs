//! Command-line arguments, the pipeline parameters file, and their validation into a [`RunConfig`].

use crate::verify::Suite;
use crate::CliError;
use clap::{Parser, ValueEnum};
use serde::Deserialize;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use xn_arith::{level_rejection, Level};
use xn_spectral::{PipelineParams, Tagged};
use xn_zeta::Kappa;

/// Largest number of fractional digits that can be requested.
pub const MAX_PRECISION: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Invariants,
    Geometry,
    Hyperbolic,
    Spectral,
    Pipeline,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "arakelov-xn", version, about = "Invariants of X(N) and the e(Γ(N)) decomposition")]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    /// Comma-separated levels, or the suite name for `verify`.
    pub target: Option<String>,
    /// Comma-separated levels (default 15).
    #[arg(long)]
    pub levels: Option<String>,
    /// Pipeline parameters file: a flat JSON object with optional C1, selberg_limit, G_const, kappa.
    #[arg(long)]
    pub params: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file (default: standard output).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Displayed digits: fractional digits for exact values, significant digits for floats.
    #[arg(long, default_value_t = 30)]
    pub precision: usize,
    /// Height bound of the truncated ζ_{γ,u}(2) sums (hyperbolic).
    #[arg(long)]
    pub bound: Option<u64>,
    /// Trace l of the hyperbolic classes (default N² - 2).
    #[arg(long)]
    pub trace: Option<i64>,
    /// Comma-separated values of T (spectral; default 0.5,1,2,4,8).
    #[arg(long = "t-grid")]
    pub t_grid: Option<String>,
}

/// A validated run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub levels: Vec<i64>,
    pub suite: Option<Suite>,
    pub params: PipelineParams,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub precision: usize,
    pub bound: u64,
    pub trace: Option<i128>,
    pub t_grid: Vec<f64>,
}

pub const DEFAULT_BOUND: u64 = 100_000;
pub const DEFAULT_T_GRID: [f64; 5] = [0.5, 1.0, 2.0, 4.0, 8.0];

/// The parameters file. Absent fields stay tagged `default0`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParamsFile {
    #[serde(rename = "C1")]
    c1: Option<f64>,
    selberg_limit: Option<f64>,
    #[serde(rename = "G_const")]
    g_const: Option<f64>,
    kappa: Option<KappaSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum KappaSpec {
    Name(String),
    Table(BTreeMap<String, f64>),
}

fn config(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

fn parse_list<T: std::str::FromStr>(what: &str, s: &str) -> Result<Vec<T>, CliError> {
    s.split(',')
        .map(|item| item.trim().parse::<T>().map_err(|_| config(format!("invalid {what} `{}`", item.trim()))))
        .collect()
}

fn reject(flag: &str, present: bool, command: Command) -> Result<(), CliError> {
    if present {
        return Err(config(format!("--{flag} does not apply to `{}`", command_name(command))));
    }
    Ok(())
}

pub fn command_name(c: Command) -> &'static str {
    match c {
        Command::Invariants => "invariants",
        Command::Geometry => "geometry",
        Command::Hyperbolic => "hyperbolic",
        Command::Spectral => "spectral",
        Command::Pipeline => "pipeline",
        Command::Verify => "verify",
    }
}

impl RunConfig {
    pub fn from_args(args: Args) -> Result<Self, CliError> {
        let command = args.command;
        if args.precision > MAX_PRECISION {
            return Err(config(format!("--precision {} exceeds {MAX_PRECISION}", args.precision)));
        }
        reject("params", args.params.is_some() && command != Command::Pipeline, command)?;
        reject("bound", args.bound.is_some() && command != Command::Hyperbolic, command)?;
        reject("trace", args.trace.is_some() && command != Command::Hyperbolic, command)?;
        reject("t-grid", args.t_grid.is_some() && command != Command::Spectral, command)?;
        let level_free = matches!(command, Command::Spectral | Command::Verify);
        reject("levels", args.levels.is_some() && level_free, command)?;

        let mut suite = None;
        let mut levels = Vec::new();
        match command {
            Command::Verify => {
                let name = args.target.as_deref().ok_or(CliError::MissingField {
                    field: "suite",
                    hint: format!("`verify` needs one of {}", Suite::names().join(", ")),
                })?;
                suite = Some(Suite::from_str(name, false).map_err(|_| {
                    config(format!("unknown suite `{name}`; expected one of {}", Suite::names().join(", ")))
                })?);
            }
            Command::Spectral => {
                if let Some(t) = &args.target {
                    return Err(config(format!("unexpected argument `{t}` for `spectral`")));
                }
            }
            _ => {
                let list = match (&args.target, &args.levels) {
                    (Some(_), Some(_)) => return Err(config("levels given both positionally and with --levels")),
                    (Some(s), None) | (None, Some(s)) => s.clone(),
                    (None, None) => "15".to_string(),
                };
                levels = parse_list::<i64>("level", &list)?;
                levels.sort_unstable();
                levels.dedup();
                if command != Command::Pipeline {
                    for &n in &levels {
                        if let Some(reason) = level_rejection(n) {
                            return Err(config(format!("level {n} rejected: {reason}")));
                        }
                    }
                }
            }
        }

        let params = if command == Command::Pipeline {
            let path = args.params.as_deref().ok_or(CliError::MissingField {
                field: "params",
                hint: "`pipeline` needs --params <file.json>; write {} to run with every constant tagged default0"
                    .into(),
            })?;
            load_params(path, &levels)?
        } else {
            PipelineParams::default()
        };

        let t_grid = match &args.t_grid {
            Some(s) => parse_list::<f64>("T", s)?,
            None => DEFAULT_T_GRID.to_vec(),
        };
        if let Some(t) = t_grid.iter().find(|t| !(**t > 0.0 && t.is_finite())) {
            return Err(config(format!("T = {t} must be positive")));
        }
        if args.bound == Some(0) {
            return Err(config("--bound must be positive"));
        }

        Ok(RunConfig {
            command,
            levels,
            suite,
            params,
            format: args.format,
            out: args.out,
            precision: args.precision,
            bound: args.bound.unwrap_or(DEFAULT_BOUND),
            trace: args.trace.map(i128::from),
            t_grid,
        })
    }
}

/// Reads and validates a parameters file for the given levels.
pub fn load_params(path: &Path, levels: &[i64]) -> Result<PipelineParams, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| config(format!("params file {}: {e}", path.display())))?;
    let file: ParamsFile =
        serde_json::from_str(&text).map_err(|e| config(format!("params file {}: {e}", path.display())))?;
    let tag = |v: Option<f64>, name: &str| -> Result<Tagged<f64>, CliError> {
        match v {
            Some(x) if x.is_finite() => Ok(Tagged::user(x)),
            Some(x) => Err(config(format!("{name} = {x} is not finite"))),
            None => Ok(Tagged::default0()),
        }
    };
    let kappa = match file.kappa {
        None => Tagged::default0(),
        Some(KappaSpec::Name(s)) if s == "zero" => Tagged::user(Kappa::Zero),
        Some(KappaSpec::Name(s)) => return Err(config(format!("kappa = \"{s}\"; expected \"zero\" or a table"))),
        Some(KappaSpec::Table(map)) => {
            let [n] = levels else {
                return Err(config("a kappa table applies to a single level"));
            };
            let level = Level::new(*n).map_err(|e| config(format!("kappa table: {e}")))?;
            let mut values = BTreeMap::new();
            for (k, v) in map {
                let xi = k.parse::<u64>().map_err(|_| config(format!("kappa key `{k}` is not a residue")))?;
                values.insert(xi, v);
            }
            Tagged::user(Kappa::table(level, values).map_err(|e| config(format!("kappa table: {e}")))?)
        }
    };
    Ok(PipelineParams {
        c1: tag(file.c1, "C1")?,
        selberg_limit: tag(file.selberg_limit, "selberg_limit")?,
        g_const: tag(file.g_const, "G_const")?,
        kappa,
    })
}
