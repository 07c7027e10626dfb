use std::path::PathBuf;
use std::process::exit;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use bgform::cli::{self, GenKind, ReduceCmd};
use bgform::{
    BenchConfig, HouseholderSign, ReduceOptions, Variant, DEFAULT_STEP_TOL, DEFAULT_STRUCT_TOL,
};

#[derive(Parser)]
#[command(
    name = "bgform",
    version,
    about = "Symplectic similarity reduction to Bunse-Gerstner form and antisymmetric Riccati solving"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print structure metrics (Hamiltonian / skew-Hamiltonian) of a matrix file as JSON
    Check {
        file: PathBuf,
        /// Relative tolerance for the structure flags
        #[arg(long, default_value_t = DEFAULT_STRUCT_TOL)]
        tol: f64,
    },
    /// Reduce a 2n x 2n matrix file; writes s_prime.txt, left.txt, y.txt (and u.txt with --emit-u)
    Reduce {
        file: PathBuf,
        /// Step family: elementary or householder
        #[arg(long, default_value = "householder")]
        variant: Variant,
        /// Relative step tolerance (skip and breakdown thresholds)
        #[arg(long, default_value_t = DEFAULT_STEP_TOL)]
        tol: f64,
        /// Number of reduction sweeps (transforms compose)
        #[arg(long, default_value_t = 1)]
        passes: usize,
        /// Householder reflected-value convention: paper or stable
        #[arg(long, default_value = "stable")]
        householder_sign: HouseholderSign,
        /// Directory for the output matrix files
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        /// Also write the dense 2n x 2n transform U
        #[arg(long)]
        emit_u: bool,
    },
    /// Solve the antisymmetric Riccati equation of a skew-Hamiltonian matrix file; writes y.txt
    SolveArme {
        file: PathBuf,
        #[arg(long, default_value = "householder")]
        variant: Variant,
        #[arg(long, default_value_t = DEFAULT_STEP_TOL)]
        tol: f64,
        #[arg(long, default_value_t = 1)]
        passes: usize,
        #[arg(long, default_value = "stable")]
        householder_sign: HouseholderSign,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Generate a deterministic random structured matrix file
    Gen {
        /// skew-hamiltonian or hamiltonian
        #[arg(long)]
        kind: GenKind,
        /// Half dimension n (the file holds a 2n x 2n matrix)
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Residual-growth sweep over random skew-Hamiltonian inputs; emits CSV
    Bench {
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// Trials per size; seeds run seed..seed+trials
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value = "householder")]
        variant: Variant,
        #[arg(long, default_value_t = 1)]
        passes: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "stable")]
        householder_sign: HouseholderSign,
        /// Output CSV path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    exit(run());
}

fn run() -> i32 {
    let parsed = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => cli::EXIT_OK,
                _ => cli::EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match parsed.command {
        Command::Check { file, tol } => cli::cmd_check(&file, tol),
        Command::Reduce {
            file,
            variant,
            tol,
            passes,
            householder_sign,
            out_dir,
            emit_u,
        } => cli::cmd_reduce(&ReduceCmd {
            file,
            out_dir,
            opts: ReduceOptions {
                variant,
                tol,
                passes,
                householder_sign,
            },
            emit_u,
        }),
        Command::SolveArme {
            file,
            variant,
            tol,
            passes,
            householder_sign,
            out_dir,
        } => cli::cmd_solve_arme(
            &file,
            &out_dir,
            &ReduceOptions {
                variant,
                tol,
                passes,
                householder_sign,
            },
        ),
        Command::Gen { kind, n, seed, out } => cli::cmd_gen(kind, n, seed, &out),
        Command::Bench {
            n_min,
            n_max,
            trials,
            variant,
            passes,
            seed,
            householder_sign,
            out,
        } => cli::cmd_bench(
            &BenchConfig {
                n_min,
                n_max,
                trials,
                variant,
                passes,
                seed,
                householder_sign,
            },
            out.as_deref(),
        ),
    }
}
