//! Argument parsing and subcommand dispatch.
//!
//! Exit codes: 0 success, 1 verification mismatch or failed check, 2 bad
//! input, 3 pattern cap exceeded.

use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use hochster_core::{
    phi_ideal, CohomologyTable, FieldSpec, InvariantReport, MonomialIdeal, SubstitutionMap,
    DEFAULT_PATTERN_CAP,
};
use thiserror::Error;

use crate::corpus::random_ideals;
use crate::format::{self, parse_ideal, OutputFormat, ParseError};
use crate::parallel::cohomology_table_par;
use crate::verify::verify_table;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Pretty,
    Tsv,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Pretty => OutputFormat::Pretty,
            FormatArg::Tsv => OutputFormat::Tsv,
        }
    }
}

/// Local cohomology of monomial ideals.
#[derive(Debug, Parser)]
#[command(name = "hochster", version)]
pub struct Cli {
    /// Field characteristic: 0 or a prime below 2^32.
    #[arg(long = "char", global = true, default_value_t = 0)]
    pub characteristic: u64,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Pretty)]
    pub format: FormatArg,
    /// Seed for `verify --random`.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Oracle window: every a with -window <= a_j <= rho_j.
    #[arg(long, global = true, default_value_t = 2,
        value_parser = clap::value_parser!(u32).range(1..))]
    pub window: u32,
    /// Maximum number of degree patterns.
    #[arg(long, global = true, default_value_t = DEFAULT_PATTERN_CAP,
        value_parser = clap::value_parser!(u64).range(1..))]
    pub cap: u64,
    /// Report only i <= max-i.
    #[arg(long = "max-i", global = true)]
    pub max_i: Option<usize>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert series of every nonzero H^i.
    Series { file: PathBuf },
    /// dim, depth, a_i, b_i, Buchsbaum bounds, regularity and checks.
    Invariants { file: PathBuf },
    /// Compare the formula with the Čech complex on a window of degrees.
    Verify {
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        file: Option<PathBuf>,
        /// Verify this many seeded random ideals instead of a file.
        #[arg(long)]
        random: Option<usize>,
    },
    /// Apply x_j -> x_j^e_j and print the resulting ideal.
    Phi {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        exp: Vec<u32>,
    },
    /// Full table as tab-separated rows.
    Table { file: PathBuf },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error(transparent)]
    Core(#[from] hochster_core::Error),
    #[error(transparent)]
    Write(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(hochster_core::Error::PatternCapExceeded { .. }) => 3,
            CliError::Write(_) => 1,
            _ => 2,
        }
    }
}

/// Reads an ideal file; `-` is stdin.
pub fn load_ideal(path: &Path) -> Result<MonomialIdeal, CliError> {
    let shown = path.display().to_string();
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|source| CliError::Read {
        path: shown.clone(),
        source,
    })?;
    parse_ideal(&text).map_err(|source| CliError::Parse {
        path: shown,
        source,
    })
}

impl Cli {
    fn field(&self) -> Result<FieldSpec, CliError> {
        Ok(FieldSpec::new(self.characteristic)?)
    }

    fn threads(&self) -> Option<usize> {
        self.threads.map(|t| t as usize)
    }

    fn table(&self, ideal: &MonomialIdeal) -> Result<CohomologyTable, CliError> {
        Ok(cohomology_table_par(
            ideal,
            self.field()?,
            self.cap,
            self.threads(),
        )?)
    }
}

/// Runs the command, writing results to `out`; returns the exit code.
pub fn run(cli: &Cli, out: &mut impl Write) -> Result<u8, CliError> {
    let field = cli.field()?;
    let fmt: OutputFormat = cli.format.into();
    match &cli.command {
        Command::Series { file } => {
            let table = cli.table(&load_ideal(file)?)?;
            out.write_all(format::render_series(&table, cli.max_i).as_bytes())?;
            Ok(0)
        }
        Command::Table { file } => {
            let table = cli.table(&load_ideal(file)?)?;
            out.write_all(format::render_table(&table, cli.max_i).as_bytes())?;
            Ok(0)
        }
        Command::Invariants { file } => {
            let ideal = load_ideal(file)?;
            let report = InvariantReport::new(&ideal, &cli.table(&ideal)?);
            out.write_all(format::render_invariants(&report, cli.max_i, fmt).as_bytes())?;
            Ok(if report.all_checks_pass() { 0 } else { 1 })
        }
        Command::Phi { file, exp } => {
            let ideal = load_ideal(file)?;
            let phi = SubstitutionMap::new(exp.clone())?;
            out.write_all(format::write_ideal(&phi_ideal(&ideal, &phi)?).as_bytes())?;
            Ok(0)
        }
        Command::Verify {
            file: Some(file), ..
        } => {
            let ideal = load_ideal(file)?;
            let report = verify_table(&ideal, &cli.table(&ideal)?, cli.window);
            for m in &report.mismatches {
                writeln!(out, "{m}")?;
            }
            if report.classical_agrees == Some(true) {
                writeln!(out, "classical = generalized: PASS")?;
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Verify { file: None, random } => {
            let count = random.expect("clap requires a file or --random");
            let pool = cli.threads().map(|t| {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build()
                    .expect("thread pool")
            });
            let mut failed = false;
            for (k, ideal) in random_ideals(cli.seed, count).iter().enumerate() {
                let table = hochster_core::cohomology_table(ideal, field, cli.cap)?;
                let check = || verify_table(ideal, &table, cli.window);
                let report = match &pool {
                    Some(p) => p.install(check),
                    None => check(),
                };
                if !report.passed() {
                    failed = true;
                    let text = format::write_ideal(ideal).replace('\n', " ");
                    writeln!(out, "ideal {k}: {}", text.trim_end())?;
                    for m in &report.mismatches {
                        writeln!(out, "{m}")?;
                    }
                }
            }
            Ok(if failed { 1 } else { 0 })
        }
    }
}
