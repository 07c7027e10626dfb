//! Implementations behind the `bgform` binary's subcommands.
//!
//! Each command returns a process exit code from the stable contract:
//! 0 ok, 2 breakdown, 3 degraded quality, 64 parse/usage error,
//! 65 structural precondition failure. Reports go to stdout as JSON
//! (CSV for `bench`); diagnostics go to stderr.

use std::fs;
use std::path::{Path, PathBuf};

use crate::arme::{arme_solve, ArmeProblem, DEGRADED_FACTOR};
use crate::bench::{run_bench, to_csv, BenchConfig};
use crate::error::Error;
use crate::gen::{gen_hamiltonian, gen_skew_hamiltonian};
use crate::reduction::{reduce, ReduceOptions};
use crate::structured::{classify, BlockMat, DEFAULT_STRUCT_TOL};
use crate::textio::{read_matrix, write_matrix};

pub const EXIT_OK: i32 = 0;
pub const EXIT_BREAKDOWN: i32 = 2;
pub const EXIT_DEGRADED: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_STRUCTURE: i32 = 65;

/// Map an error to its exit code (64 for input that could not be read,
/// 65 for input that parsed but violates a structural precondition,
/// 2 for algorithmic breakdown).
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Io(_) | Error::Parse { .. } => EXIT_USAGE,
        Error::OddDimension { .. }
        | Error::NotSquare { .. }
        | Error::NotSkewHamiltonian { .. }
        | Error::NotHamiltonian { .. }
        | Error::NotSymmetric { .. }
        | Error::IllConditioned { .. }
        | Error::Singular => EXIT_STRUCTURE,
        Error::Breakdown { .. } => EXIT_BREAKDOWN,
    }
}

fn fail(err: &Error) -> i32 {
    eprintln!("error: {err}");
    exit_code(err)
}

fn load_blocks(path: &Path) -> Result<BlockMat, Error> {
    let m = read_matrix(path)?;
    BlockMat::from_dense(&m)
}

/// `check`: print the structure report of a matrix file as JSON.
pub fn cmd_check(path: &Path, tol: f64) -> i32 {
    let s = match load_blocks(path) {
        Ok(s) => s,
        Err(e) => return fail(&e),
    };
    let report = classify(&s, tol);
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    EXIT_OK
}

pub struct ReduceCmd {
    pub file: PathBuf,
    pub out_dir: PathBuf,
    pub opts: ReduceOptions,
    pub emit_u: bool,
}

/// `reduce`: run the reduction, write `s_prime.txt`, `left.txt`,
/// `y.txt` (and `u.txt` on request) into the output directory, print
/// the reduction report as JSON.
pub fn cmd_reduce(cmd: &ReduceCmd) -> i32 {
    let s = match load_blocks(&cmd.file) {
        Ok(s) => s,
        Err(e) => return fail(&e),
    };
    let red = reduce(&s, &cmd.opts);
    if let Err(e) = fs::create_dir_all(&cmd.out_dir) {
        return fail(&Error::Io(e));
    }
    let writes = [
        ("s_prime.txt", red.reduced.to_dense()),
        ("left.txt", red.transform.explicit_left.clone()),
        ("y.txt", red.transform.y.clone()),
    ];
    for (name, m) in &writes {
        if let Err(e) = write_matrix(&cmd.out_dir.join(name), m) {
            return fail(&e);
        }
    }
    if cmd.emit_u {
        if let Err(e) = write_matrix(&cmd.out_dir.join("u.txt"), &red.transform.assemble()) {
            return fail(&e);
        }
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&red.report).expect("report serializes")
    );
    if red.report.breakdown.is_some() {
        return EXIT_BREAKDOWN;
    }
    let scale = s.frobenius_norm().max(1.0);
    let degraded = red.report.s21_below_diag_norm > DEGRADED_FACTOR * scale
        || red.report.s11_below_subdiag_norm > DEGRADED_FACTOR * scale;
    if degraded {
        EXIT_DEGRADED
    } else {
        EXIT_OK
    }
}

/// `solve-arme`: solve for Y, write it to `y.txt`, print the solve
/// report as JSON.
pub fn cmd_solve_arme(file: &Path, out_dir: &Path, opts: &ReduceOptions) -> i32 {
    let s = match load_blocks(file) {
        Ok(s) => s,
        Err(e) => return fail(&e),
    };
    let problem = match ArmeProblem::new(s, DEFAULT_STRUCT_TOL) {
        Ok(p) => p,
        Err(e) => return fail(&e),
    };
    let sol = match arme_solve(&problem, opts) {
        Ok(sol) => sol,
        Err(e) => return fail(&e),
    };
    if let Err(e) = fs::create_dir_all(out_dir) {
        return fail(&Error::Io(e));
    }
    if let Err(e) = write_matrix(&out_dir.join("y.txt"), &sol.y) {
        return fail(&e);
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&sol.summary()).expect("report serializes")
    );
    if sol.degraded {
        EXIT_DEGRADED
    } else {
        EXIT_OK
    }
}

/// What `gen` produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    SkewHamiltonian,
    Hamiltonian,
}

impl std::str::FromStr for GenKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "skew-hamiltonian" => Ok(GenKind::SkewHamiltonian),
            "hamiltonian" => Ok(GenKind::Hamiltonian),
            other => Err(format!(
                "unknown kind {other:?}, expected 'skew-hamiltonian' or 'hamiltonian'"
            )),
        }
    }
}

/// `gen`: write a deterministic random structured matrix file.
pub fn cmd_gen(kind: GenKind, n: usize, seed: u64, out: &Path) -> i32 {
    if n < 1 {
        eprintln!("error: n must be at least 1");
        return EXIT_USAGE;
    }
    let s = match kind {
        GenKind::SkewHamiltonian => gen_skew_hamiltonian(n, seed),
        GenKind::Hamiltonian => gen_hamiltonian(n, seed),
    };
    match write_matrix(out, &s.to_dense()) {
        Ok(()) => EXIT_OK,
        Err(e) => fail(&e),
    }
}

/// `bench`: run the residual sweep and write CSV (stdout when no path
/// is given).
pub fn cmd_bench(cfg: &BenchConfig, out: Option<&Path>) -> i32 {
    if cfg.trials < 1 {
        eprintln!("error: trials must be at least 1");
        return EXIT_USAGE;
    }
    if cfg.n_min < 1 || cfg.n_min > cfg.n_max {
        eprintln!("error: need 1 <= n-min <= n-max");
        return EXIT_USAGE;
    }
    let rows = run_bench(cfg);
    let csv = to_csv(&rows);
    match out {
        Some(path) => {
            if let Err(e) = fs::write(path, csv) {
                return fail(&Error::Io(e));
            }
        }
        None => print!("{csv}"),
    }
    EXIT_OK
}
