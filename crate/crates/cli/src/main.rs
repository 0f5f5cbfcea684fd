//! `lyid`: command-line driver for the Lie-Yamaguti identity pipeline.
//!
//! Exit codes: 0 success, 1 error, 2 result differs from the expected
//! one, 3 some partition aborted on a resource cap.

mod analyze;
mod golden;
mod semantic;
mod tables;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ly_polyid::Error;

pub const EXIT_MISMATCH: u8 = 2;
pub const EXIT_ABORTED: u8 = 3;

#[derive(Parser)]
#[command(name = "lyid", version, about = "Polynomial identities for the bilinear operation of Lie-Yamaguti algebras")]
struct Cli {
    /// Worker threads; defaults to one per core.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List association types of one degree in deglex order.
    Types(TypesArgs),
    /// Tabulate type, monomial and generator counts.
    Counts(CountsArgs),
    /// Decide, per irreducible representation, whether the lifted identities
    /// imply anything for the bracket beyond anticommutativity.
    Analyze(AnalyzeArgs),
    /// Print the lowest-degree identity for the bracket that does not follow
    /// from anticommutativity.
    Identity(IdentityArgs),
    /// Check that an identity is a consequence of the defining identities
    /// and not of anticommutativity alone (alternating identities only).
    Certify(CertifyArgs),
    /// Evaluate an identity on an algebra.
    Verify(VerifyArgs),
    /// Check the Lie-Yamaguti axioms on an algebra.
    ValidateAlgebra(ValidateArgs),
    /// Print a bundled algebra as an algebra file.
    Algebra(AlgebraArgs),
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ClassArg {
    All,
    Ternary,
    Mixed,
    Binary,
}

#[derive(Args)]
pub struct TypesArgs {
    #[arg(long)]
    pub degree: usize,
    #[arg(long, value_enum, default_value = "all")]
    pub class: ClassArg,
    /// Label leaves with letters instead of dashes.
    #[arg(long)]
    pub render: bool,
    /// List the skew-symmetry generators instead of the types.
    #[arg(long)]
    pub skew: bool,
}

#[derive(Args)]
pub struct CountsArgs {
    #[arg(long, default_value_t = 12)]
    pub max_degree: usize,
}

#[derive(Args)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub degree: usize,
    /// 0 for the rationals, otherwise a prime larger than the degree.
    #[arg(long = "char", default_value_t = 101)]
    pub characteristic: u64,
    /// `all`, `sign`, `trivial`, or partitions such as `4+2+1+1` or `2^3+1^2`.
    #[arg(long, num_args = 1.., default_value = "all")]
    pub partitions: Vec<String>,
    /// Lift from rank-filtered generators of the two previous degrees.
    #[arg(long)]
    pub filtered: bool,
    /// Write the JSON report here.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Write per-partition wall times (JSON) here.
    #[arg(long)]
    pub timings: Option<PathBuf>,
    /// Write the canonical forms of both matrices for each partition here.
    #[arg(long)]
    pub dump_dir: Option<PathBuf>,
    /// Abort a partition once its reduced matrix exceeds this many rows.
    #[arg(long)]
    pub max_rows: Option<usize>,
    /// Abort a partition after this many seconds.
    #[arg(long)]
    pub max_seconds: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Text,
    File,
}

#[derive(Args)]
pub struct IdentityArgs {
    #[arg(long, default_value_t = 8)]
    pub degree: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: FormatArg,
}

#[derive(Args)]
pub struct CertifyArgs {
    /// Identity file.
    #[arg(long)]
    pub identity: PathBuf,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Identity file.
    #[arg(long)]
    pub identity: PathBuf,
    /// Algebra file, or `bundled:<name>`.
    #[arg(long)]
    pub algebra: String,
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args)]
pub struct ValidateArgs {
    /// Algebra file, or `bundled:<name>`.
    pub algebra: String,
}

#[derive(Args)]
pub struct AlgebraArgs {
    /// Name of a bundled algebra; omit to list them.
    pub name: Option<String>,
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Types(a) => tables::types(&a),
        Command::Counts(a) => tables::counts(&a),
        Command::Analyze(a) => analyze::analyze(&a),
        Command::Identity(a) => analyze::identity(&a),
        Command::Certify(a) => semantic::certify(&a),
        Command::Verify(a) => semantic::verify(&a),
        Command::ValidateAlgebra(a) => semantic::validate_algebra(&a),
        Command::Algebra(a) => semantic::algebra(&a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("lyid: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("lyid: {e}");
            ExitCode::from(1)
        }
    }
}
