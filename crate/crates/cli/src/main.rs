mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperroot::multiplicity::CACHE_DIR_ENV;
use hyperroot::Error;

use output::Format;

/// Exact root multiplicities of Kac-Moody algebras.
#[derive(Parser, Debug)]
#[command(name = "hyperroot", version, about)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    output: Format,

    /// Directory for persisted multiplicity tables.
    #[arg(long, env = CACHE_DIR_ENV, default_value = "cache", global = true)]
    cache_dir: PathBuf,

    /// Do not read or write the table cache.
    #[arg(long, global = true)]
    no_cache: bool,

    /// Truncation order for q-series.
    #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u32).range(1..), global = true)]
    order: u32,

    /// Default height bound for table, check and verify-denominator.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(i64).range(1..), global = true)]
    height_limit: i64,

    /// Worker threads for the Peterson recursion (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

/// A matrix given as text (`2,-1;-1,2`), JSON (`{"matrix": ...}`) or preset name.
#[derive(Args, Debug, Clone)]
pub struct MatrixArg {
    /// Cartan matrix as text or JSON, or a preset name.
    #[arg(conflicts_with = "preset", required_unless_present = "preset")]
    matrix: Option<String>,

    /// Preset: F, E9, E10, E11, A1(a,b), a finite type such as D4, or with suffix ^(1) or ^++.
    #[arg(long)]
    preset: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Peterson,
    Bm,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExtendMode {
    /// Affinization by the highest root.
    Affine,
    /// Attach a vertex to the affine node (requires an untwisted affine matrix).
    Over,
    /// Attach a vertex by a single edge to `--attach`.
    Node,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a matrix (finite, affine, indefinite; hyperbolic and Lorentzian flags).
    Classify {
        #[command(flatten)]
        gcm: MatrixArg,
    },
    /// Extend a matrix by one vertex.
    Extend {
        #[command(flatten)]
        gcm: MatrixArg,
        #[arg(long, value_enum, default_value_t = ExtendMode::Affine)]
        mode: ExtendMode,
        /// Vertex to attach to with `--mode node`.
        #[arg(long)]
        attach: Option<usize>,
    },
    /// Multiplicity of one root.
    Mult {
        #[command(flatten)]
        gcm: MatrixArg,
        /// Root coordinates, e.g. 7,7,2.
        #[arg(long, allow_hyphen_values = true)]
        root: String,
        #[arg(long, value_enum, default_value_t = Engine::Peterson)]
        engine: Engine,
    },
    /// All positive roots up to a height, with norms and bounds.
    Table {
        #[command(flatten)]
        gcm: MatrixArg,
        #[arg(long)]
        height: Option<i64>,
        /// Lattice dimension for the bounds (default: rank).
        #[arg(long)]
        d: Option<u32>,
    },
    /// Compare multiplicities of imaginary roots with the bounds.
    Check {
        #[command(flatten)]
        gcm: MatrixArg,
        #[arg(long)]
        height: Option<i64>,
        /// Lattice dimension (default: rank).
        #[arg(long)]
        d: Option<u32>,
    },
    /// Coefficients of a named q-series.
    Series {
        /// One of p, p_l, xi, ff_level2, p_sigma, tau.
        #[arg(long)]
        name: String,
        /// Number of colors for p_l.
        #[arg(long, default_value_t = 1)]
        colors: u32,
    },
    /// Main term of the p_sigma asymptotic against the exact value.
    Asympt {
        #[arg(long, conflicts_with = "norm", required_unless_present = "norm")]
        n: Option<u64>,
        /// Root norm (a|a); uses n = -(a|a)/2.
        #[arg(long, allow_hyphen_values = true)]
        norm: Option<i64>,
    },
    /// Check the denominator identity up to a height.
    VerifyDenominator {
        #[command(flatten)]
        gcm: MatrixArg,
        #[arg(long)]
        height: Option<i64>,
    },
}

/// Failure classes and their exit codes.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Compute(String),
    Domain(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Compute(_) => 3,
            Failure::Domain(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Compute(m) | Failure::Domain(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::InvalidMatrix(_)
            | Error::NotGcm(_)
            | Error::UnknownPreset(_)
            | Error::IndexOutOfRange { .. }
            | Error::RankMismatch { .. }
            | Error::ParseVector(_) => Failure::Input(msg),
            Error::NotPositive(_)
            | Error::NotSymmetrizable
            | Error::NotSymmetric
            | Error::Decomposable(_)
            | Error::WrongType { .. }
            | Error::WrongAlgebra
            | Error::OddNorm(_)
            | Error::InvalidDimension(_) => Failure::Domain(msg),
            Error::DegenerateDivisor(_) | Error::Integrality { .. } | Error::Cache(_) | Error::Io(_) | Error::Json(_) => {
                Failure::Compute(msg)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli).and_then(|r| r.render(cli.output).map_err(Failure::Compute)) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
