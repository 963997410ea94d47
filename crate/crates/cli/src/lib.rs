//! Command-line front end for `reflect-endo`.
//!
//! Every command returns an [`Outcome`] instead of printing, so the binary
//! stays a thin wrapper and tests can drive commands in-process.
//!
//! Exit codes: 0 success, 1 verification mismatch (or I/O failure),
//! 2 usage error, 3 oracle budget exceeded.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use reflect_endo::counting::{self, CountingError};
use reflect_endo::groups::GROUP_SPEC_GRAMMAR;
use reflect_endo::oracle::{self, Budget, OracleError, VerifyOptions, SMALL_SUITE};
use reflect_endo::tables::{self, HomTable};
use reflect_endo::{Family, GroupId};
use thiserror::Error;

pub mod figure;

pub use figure::{FigureDataset, FigureId, FigureParams};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "reflect-endo",
    version,
    about = "Count endomorphisms of irreducible spherical reflection groups",
    after_help = concat!(
        "Group specs: FAMILY[:param], e.g. A:4, C:3, D:5, I2:7, H3, H4, F4, E6, E7, E8.\n",
        "Exit codes: 0 ok, 1 verification mismatch, 2 usage error, 3 budget exceeded."
    )
)]
pub struct Cli {
    /// Worker threads for the oracle (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print |End(W)|, or a homomorphism count with --hom / --hom-dihedral.
    Count(CountArgs),
    /// Print the endomorphism table of W, or Hom(I2(p), W) with --hom.
    Table(TableArgs),
    /// Compare closed forms with brute-force enumeration; prints JSON.
    Verify(VerifyArgs),
    /// Export the data behind a figure.
    Figure(FigureArgs),
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// Target group, FAMILY[:param].
    pub group: GroupId,
    /// Count Hom(I2(p), W) for an odd prime p; W must be C:n or A:n.
    #[arg(long, value_name = "I2:p", value_parser = parse_dihedral_source, conflicts_with = "hom_dihedral")]
    pub hom: Option<u32>,
    /// Count Hom(I2(l), W) for W = I2:m.
    #[arg(long, value_name = "l", value_parser = clap::value_parser!(u32).range(1..))]
    pub hom_dihedral: Option<u32>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    pub group: GroupId,
    /// Hom(I2(p), W) for an odd prime p; W must be C:n or A:n.
    #[arg(long, value_name = "I2:p", value_parser = parse_dihedral_source)]
    pub hom: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Group to verify; omit when using --suite.
    #[arg(required_unless_present = "suite", conflicts_with = "suite")]
    pub group: Option<GroupId>,
    /// Named suite; only `small` exists.
    #[arg(long)]
    pub suite: Option<String>,
    /// Search budget: largest (1 + involutions)^generators to attempt.
    #[arg(long)]
    pub budget: Option<u128>,
    /// Largest group the oracle will materialise.
    #[arg(long)]
    pub max_order: Option<usize>,
    /// Record elapsed times in the report.
    #[arg(long, value_enum, default_value_t = Switch::On)]
    pub timestamp: Switch,
    /// Allow H3 and F4.
    #[arg(long)]
    pub stretch: bool,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    pub figure: FigureId,
    /// Inclusive rank range `a..b`.
    #[arg(long, value_name = "a..b", value_parser = parse_range)]
    pub n: Option<(u32, u32)>,
    /// Largest odd prime for fig3.
    #[arg(long, value_name = "p")]
    pub p_max: Option<u32>,
    /// Decimal places in the float column.
    #[arg(long)]
    pub digits: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Switch {
    On,
    Off,
}

fn parse_dihedral_source(s: &str) -> Result<u32, String> {
    let id: GroupId = s.parse().map_err(|e| format!("{e}"))?;
    match (id.family(), id.param()) {
        (Family::I2, Some(p)) => Ok(p),
        _ => Err(format!("expected I2:p, got {s}")),
    }
}

/// `a..b` or `a..=b`, both inclusive.
pub fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got {s}"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: u32 = a.trim().parse().map_err(|_| format!("bad range start in {s}"))?;
    let b: u32 = b.trim().parse().map_err(|_| format!("bad range end in {s}"))?;
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Counting(#[from] CountingError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Counting(_) => EXIT_USAGE,
            CliError::Oracle(OracleError::OrderTooLarge { .. } | OracleError::SearchTooLarge { .. }) => EXIT_BUDGET,
            CliError::Oracle(_) => EXIT_USAGE,
            CliError::Io(_) => EXIT_MISMATCH,
        }
    }
}

/// What a command printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn error(e: &CliError) -> Self {
        let mut stderr = format!("error: {e}\n");
        if matches!(e, CliError::Usage(_) | CliError::Counting(_)) {
            stderr.push_str(&format!("group specs: {GROUP_SPEC_GRAMMAR}\n"));
        }
        Outcome { stdout: String::new(), stderr, code: e.exit_code() }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code }
            } else {
                Outcome { stdout: text, stderr: String::new(), code }
            }
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    let go = || match cli.command {
        Command::Count(a) => cmd_count(&a).map(Outcome::ok),
        Command::Table(a) => cmd_table(&a).map(Outcome::ok),
        Command::Verify(a) => cmd_verify(&a),
        Command::Figure(a) => cmd_figure(&a),
    };
    let result = match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t as usize).build() {
            Ok(pool) => pool.install(go),
            Err(e) => Err(CliError::Usage(format!("cannot start {t} threads: {e}"))),
        },
        None => go(),
    };
    result.unwrap_or_else(|e| Outcome::error(&e))
}

pub fn cmd_count(a: &CountArgs) -> Result<String, CliError> {
    let n = match (a.hom, a.hom_dihedral) {
        (Some(p), _) => counting::hom_count_i2p(p, a.group)?,
        (None, Some(l)) => match (a.group.family(), a.group.param()) {
            (Family::I2, Some(m)) => counting::hom_count_dihedral(l, m),
            _ => return Err(CliError::Usage(format!("--hom-dihedral needs an I2:m target, got {}", a.group))),
        },
        (None, None) => counting::endo_count(a.group),
    };
    Ok(format!("{n}\n"))
}

pub fn cmd_table(a: &TableArgs) -> Result<String, CliError> {
    let t: HomTable = match a.hom {
        Some(p) => tables::hom_table_i2p(p, a.group)?,
        None => tables::endomorphism_table(a.group),
    };
    Ok(match a.format {
        Format::Csv => t.to_csv(),
        Format::Json => t.to_json() + "\n",
    })
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    let mut budget = Budget::from_env();
    if let Some(s) = a.budget {
        budget = budget.with_search(s);
    }
    if let Some(m) = a.max_order {
        budget.max_order = m;
    }
    let opts = VerifyOptions { budget, stretch: a.stretch, timestamps: a.timestamp == Switch::On };
    let (json, passed) = match (&a.suite, a.group) {
        (Some(name), _) if name == "small" => {
            let ids: Vec<GroupId> = SMALL_SUITE.iter().map(|s| s.parse().expect("suite ids parse")).collect();
            let r = oracle::verify_suite(name, &ids, &opts)?;
            (serde_json::to_string_pretty(&r), r.passed)
        }
        (Some(name), _) => return Err(CliError::Usage(format!("unknown suite {name:?}; available: small"))),
        (None, Some(id)) => {
            let r = oracle::verify(id, &opts)?;
            (serde_json::to_string_pretty(&r), r.passed())
        }
        (None, None) => return Err(CliError::Usage("verify needs a group spec or --suite".into())),
    };
    let stdout = json.expect("report serializes") + "\n";
    Ok(Outcome { stdout, stderr: String::new(), code: if passed { EXIT_OK } else { EXIT_MISMATCH } })
}

pub fn cmd_figure(a: &FigureArgs) -> Result<Outcome, CliError> {
    let params = FigureParams::for_figure(a.figure, a.n, a.p_max, a.digits).map_err(CliError::Usage)?;
    let data = figure::generate(&params);
    let text = match a.format {
        Format::Csv => data.to_csv(),
        Format::Json => data.to_json() + "\n",
    };
    match &a.out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            Ok(Outcome { stdout: String::new(), stderr: format!("wrote {}\n", path.display()), code: EXIT_OK })
        }
        None => Ok(Outcome::ok(text)),
    }
}
