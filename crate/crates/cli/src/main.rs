use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod config;
mod error;

#[derive(Debug, Parser)]
#[command(name = "mubkit", version, about = "Construct and measure (approximately) mutually unbiased bases")]
pub struct Cli {
    /// Directory for outputs whose path is not given explicitly.
    #[arg(long, global = true, env = "MUBKIT_OUT_DIR", default_value = ".")]
    pub out_dir: PathBuf,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a basis set and write it as JSON.
    Construct(ConstructArgs),
    /// Compute the measure report (JSON + CSV) of a basis-set file.
    Measure(MeasureArgs),
    /// Run the invariant suite; exits with 1 on any violation.
    Verify(VerifyArgs),
    /// Intercept-resend QKD figures for a basis-set file.
    Qkd(QkdArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    MubPrime,
    Weak,
    Rtd,
    Q2m1,
    Kts15,
    FromDesignFile,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct FlatArgs {
    /// Use a real Hadamard when one is known, else fall back to Fourier (default).
    #[arg(long)]
    pub real: bool,
    /// Require a real Hadamard; fail if none is known.
    #[arg(long)]
    pub strict_real: bool,
    /// Always use the Fourier matrix.
    #[arg(long)]
    pub complex: bool,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    /// Block size for `rtd`.
    #[arg(long)]
    pub k: Option<usize>,
    /// Number of blocks per class for `rtd`.
    #[arg(long)]
    pub s: Option<usize>,
    /// Design JSON for `from-design-file`.
    #[arg(long)]
    pub design: Option<PathBuf>,
    #[command(flatten)]
    pub flat: FlatArgs,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    #[arg(short, long)]
    pub input: PathBuf,
    /// Exponents t for Ω_t (t = 2 is always reported).
    #[arg(long = "t", default_values_t = [2.0])]
    pub t_values: Vec<f64>,
    #[arg(long = "frame-order", default_values_t = [1u32, 2, 3])]
    pub frame_orders: Vec<u32>,
    #[arg(long, default_value_t = 1e-7)]
    pub cluster_tol: f64,
    /// Skip the volume terms.
    #[arg(long)]
    pub no_volume: bool,
    /// JSON report path; the CSV goes next to it.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(short, long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct QkdArgs {
    #[arg(short, long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Use only the first N bases of the set.
    #[arg(long)]
    pub bases: Option<usize>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
