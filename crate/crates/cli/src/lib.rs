//! Command-line front end for `poincare-rep`: generate, verify, compare and
//! export matrix bundles.

pub mod bundle;
pub mod commands;
pub mod error;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use poincare_rep::lyubarskii::{CouplingOrientation, LambdaParams};
use poincare_rep::{FreeParams, RadicalScalar, SpinSum};

pub use bundle::{Block, ExportFormat, MatrixBundle, Source};
pub use error::CliError;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_NO_SOLUTION: u8 = 2;
pub const EXIT_IO: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "poincare-rep", version, about = "Exact finite-dimensional Poincaré algebra representations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate generators and vector or momentum matrices for (A,B)⊕(C,D).
    Gen {
        /// Doubled spins 2A,2B,2C,2D, e.g. 1,1,0,0.
        #[arg(long, value_parser = commands::parse_spins)]
        spins: SpinSum,
        /// Free parameter of the 12-block (λ12 for the lyubarskii source).
        #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = commands::parse_scalar)]
        t12: RadicalScalar,
        /// Free parameter of the 21-block (λ21 for the lyubarskii source).
        #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = commands::parse_scalar)]
        t21: RadicalScalar,
        #[arg(long, value_enum, default_value = "appendixA")]
        source: Source,
        #[arg(long, value_enum, default_value = "both")]
        block: Block,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check all 45 commutation rules on a bundle, or sweep every quadruple.
    Verify {
        #[arg(required_unless_present = "sweep", conflicts_with = "sweep")]
        file: Option<PathBuf>,
        /// Largest doubled spin in the sweep.
        #[arg(long)]
        sweep: Option<u32>,
    },
    /// Fit the scalars relating the Clebsch-Gordan construction to the closed forms.
    Equiv {
        #[arg(long, value_parser = commands::parse_spins)]
        spins: SpinSum,
        #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = commands::parse_scalar)]
        t12: RadicalScalar,
        #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = commands::parse_scalar)]
        t21: RadicalScalar,
        #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = commands::parse_scalar)]
        lambda12: RadicalScalar,
        #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = commands::parse_scalar)]
        lambda21: RadicalScalar,
        #[arg(long, value_enum, default_value = "raising")]
        orientation: Orientation,
    },
    /// Re-emit a bundle as canonical exact JSON, float JSON or plain text.
    Export {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Orientation {
    Raising,
    Printed,
}

impl From<Orientation> for CouplingOrientation {
    fn from(o: Orientation) -> Self {
        match o {
            Orientation::Raising => CouplingOrientation::Raising,
            Orientation::Printed => CouplingOrientation::Printed,
        }
    }
}

fn read(path: &Path) -> Result<MatrixBundle, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    MatrixBundle::from_json_str(&text)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            })
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize") + "\n"
}

/// Runs one command and returns the process exit status.
pub fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Gen {
            spins,
            t12,
            t21,
            source,
            block,
            out,
        } => {
            let bundle = commands::generate(spins, &FreeParams::new(t12, t21), source, block)?;
            emit(out.as_deref(), &bundle.to_exact_json())?;
            Ok(EXIT_OK)
        }
        Command::Verify { file: Some(path), .. } => {
            let report = commands::verify_bundle(&read(&path)?)?;
            emit(None, &pretty(&report.to_json()))?;
            if !report.all_hold() {
                eprintln!("failing rules: {}", report.failing().join(", "));
                return Ok(EXIT_FAILURE);
            }
            Ok(EXIT_OK)
        }
        Command::Verify { sweep, .. } => {
            let report = commands::sweep(sweep.unwrap_or_default());
            emit(None, &pretty(&report.to_json()))?;
            Ok(if report.all_hold() { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Equiv {
            spins,
            t12,
            t21,
            lambda12,
            lambda21,
            orientation,
        } => {
            let result = commands::equivalence(
                spins,
                &FreeParams::new(t12, t21),
                &LambdaParams::new(lambda12, lambda21),
                orientation.into(),
            )?;
            match result {
                Ok(r) => {
                    let show = |x: &Option<RadicalScalar>| x.as_ref().map_or(String::from("none"), |v| v.to_string());
                    emit(None, &format!("ratio12 = {}\nratio21 = {}\n", show(&r.ratio12), show(&r.ratio21)))?;
                    Ok(EXIT_OK)
                }
                Err(m) => {
                    eprintln!("not proportional: {m}");
                    Ok(EXIT_FAILURE)
                }
            }
        }
        Command::Export { file, format, out } => {
            let bundle = read(&file)?;
            let text = match format {
                ExportFormat::ExactJson => bundle.to_exact_json(),
                ExportFormat::FloatJson => bundle.to_float_json(),
                ExportFormat::Plain => bundle.to_plain(),
            };
            emit(out.as_deref(), &text)?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args`, runs the command and maps every outcome to an exit status.
pub fn main_with_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_IO } else { EXIT_OK };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
