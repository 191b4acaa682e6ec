mod commands;
mod error;
mod schema;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use egcert::cert::Which;

use error::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "egcert",
    version,
    about = "Certify the X_m surfaces as counterexamples to the Eisenbud-Goto bound"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format; csv applies to `matrices` only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Groebner budget as PAIRS or PAIRS,SECONDS.
    #[arg(long, global = true, env = "EGCERT_BUDGET", default_value = "10000000,1800", value_parser = parse_budget)]
    pub budget: BudgetSpec,
    /// Thread ceiling for parallel work.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Include wall-clock timings (makes output run-dependent).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BudgetSpec {
    pub pairs: u64,
    pub time: Duration,
}

fn parse_budget(s: &str) -> Result<BudgetSpec, String> {
    let mut parts = s.split(',').map(str::trim);
    let pairs = parts
        .next()
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| format!("bad pair count in {s:?}"))?;
    let secs = match parts.next() {
        Some(t) => t.parse::<u64>().map_err(|_| format!("bad seconds in {s:?}"))?,
        None => 1800,
    };
    if parts.next().is_some() {
        return Err(format!("expected PAIRS[,SECONDS], got {s:?}"));
    }
    Ok(BudgetSpec {
        pairs,
        time: Duration::from_secs(secs),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    ClosedForm,
    Expansion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Block,
    Lex,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Certify X_m: degree, maxdeg lower bound, invertibility of L(m/6), W(m/6).
    Certify {
        #[arg(long)]
        m: u64,
        /// Number of primes below 2^62 for the modular determinant.
        #[arg(long, default_value_t = 3)]
        primes: usize,
        /// Largest dimension for the exact fallback.
        #[arg(long, default_value_t = 600)]
        exact_limit: usize,
    },
    /// Build a certificate matrix.
    Matrices {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        which: Which,
        /// Reduce modulo this prime; 0 keeps exact integers.
        #[arg(long = "mod", default_value_t = 0)]
        modulus: u64,
        #[arg(long, value_enum, default_value_t = Mode::ClosedForm)]
        mode: Mode,
    },
    /// Compare L(1), W(1) mod 3 with the bundled fixtures and check the
    /// column certificates.
    Fixtures {
        #[arg(long)]
        which: Option<Which>,
    },
    /// Kernel of a ring map given as a section-map file.
    Kernel {
        #[arg(long)]
        map: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Block)]
        method: Method,
        /// Coefficient characteristic: 0 for the rationals, or a prime.
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        /// Also count minimal generators by degree.
        #[arg(long)]
        mingens: bool,
    },
    /// Partial elimination ideals with respect to one variable. A file with
    /// a map is replaced by the kernel of the map first.
    Pei {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        var: String,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
    },
    /// Hilbert function of the image of a map, or its Hilbert polynomial.
    Hilbert {
        #[arg(long)]
        map: PathBuf,
        /// Degrees at which to compute dim (S/I)_d.
        #[arg(long, value_delimiter = ',')]
        degree: Vec<u32>,
        /// First sample degree for the polynomial fit.
        #[arg(long)]
        fit_start: Option<u32>,
        #[arg(long, default_value_t = 3)]
        count: usize,
        /// Primes below 2^31 to use.
        #[arg(long, default_value_t = 2)]
        primes: usize,
    },
    /// Degree of a toric surface from its lattice points, or of Y_m.
    Degree {
        #[arg(long, conflicts_with = "points", required_unless_present = "points")]
        m: Option<u32>,
        /// Points as "a,b a,b ...".
        #[arg(long)]
        points: Option<String>,
    },
    /// Degree formulas and the general regularity bound for X_m.
    Bound {
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long, default_value_t = 4)]
        r: u32,
    },
    /// Print the report schema, or validate a report against it.
    Schema {
        #[arg(long, default_value_t = 1)]
        version: u32,
        #[arg(long)]
        validate: Option<PathBuf>,
        /// Report kind to validate against.
        #[arg(long, default_value = "cert_report")]
        kind: String,
    },
}

fn emit(global: &Global, text: &str) -> Result<(), CliError> {
    match &global.out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Internal(e.to_string())),
                _ => Ok(()),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return CliError::Usage(e.to_string().trim_end().to_string()).report(),
    };
    if let Some(n) = cli.global.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global() {
            return CliError::Internal(e.to_string()).report();
        }
    }
    let result = commands::run(&cli.command, &cli.global);
    let outcome = match result {
        Ok(out) => emit(&cli.global, &out.text).map(|_| out.negative),
        Err(e) => Err(e),
    };
    match outcome {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(reason)) => CliError::Negative(reason).report(),
        Err(e) => e.report(),
    }
}
