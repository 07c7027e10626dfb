//! Residual-growth benchmark over random skew-Hamiltonian inputs.
//!
//! For every `(n, seed)` cell: generate, reduce, solve, and record how
//! far the reduced (2,1) block and the substituted Riccati residual are
//! from zero. The interesting regime is n > 10, where the reduced block
//! stops being numerically zero; extra sweeps (`passes > 1`) push it
//! back down.

use std::time::Instant;

use serde::Serialize;

use crate::arme::arme_residual;
use crate::gen::gen_skew_hamiltonian;
use crate::reduction::{reduce, HouseholderSign, ReduceOptions, Variant};

pub const CSV_HEADER: &str =
    "n,seed,variant,passes,s21_residual,symplectic_dev,arme_residual,breakdown,wall_time_ms";

/// One benchmark cell.
#[derive(Debug, Clone, Serialize)]
pub struct BenchRecord {
    pub n: usize,
    pub seed: u64,
    pub variant: Variant,
    pub passes: usize,
    /// `||S21'||_F` of the reduced matrix (zero in exact arithmetic).
    pub s21_residual: f64,
    pub symplectic_dev: f64,
    /// Residual of the accumulated Y substituted into the original ARME.
    pub arme_residual: f64,
    pub breakdown: bool,
    pub wall_time_ms: f64,
}

/// Benchmark parameters.
#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub trials: usize,
    pub variant: Variant,
    pub passes: usize,
    pub seed: u64,
    pub householder_sign: HouseholderSign,
}

/// Run the sweep. Rows come out sorted by `(n, seed)`; every cell is
/// independent, so the ordering is stable regardless of how the work
/// would be scheduled.
pub fn run_bench(cfg: &BenchConfig) -> Vec<BenchRecord> {
    assert!(cfg.n_min >= 1 && cfg.n_min <= cfg.n_max, "bad n range");
    assert!(cfg.trials >= 1, "at least one trial per size");
    let mut rows = Vec::with_capacity((cfg.n_max - cfg.n_min + 1) * cfg.trials);
    for n in cfg.n_min..=cfg.n_max {
        for t in 0..cfg.trials {
            let seed = cfg.seed + t as u64;
            rows.push(run_cell(n, seed, cfg));
        }
    }
    rows.sort_by_key(|r| (r.n, r.seed));
    rows
}

fn run_cell(n: usize, seed: u64, cfg: &BenchConfig) -> BenchRecord {
    let s = gen_skew_hamiltonian(n, seed);
    let opts = ReduceOptions {
        variant: cfg.variant,
        passes: cfg.passes,
        householder_sign: cfg.householder_sign,
        ..Default::default()
    };
    let start = Instant::now();
    let red = reduce(&s, &opts);
    let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    let (_, arme_res) = arme_residual(&red.transform.y, &s);
    BenchRecord {
        n,
        seed,
        variant: cfg.variant,
        passes: cfg.passes,
        s21_residual: red.reduced.s21.frobenius_norm(),
        symplectic_dev: red.report.symplectic_dev,
        arme_residual: arme_res,
        breakdown: red.report.breakdown.is_some(),
        wall_time_ms,
    }
}

/// Render records as CSV with the fixed header.
pub fn to_csv(rows: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{:e},{:e},{:e},{},{:.3}\n",
            r.n,
            r.seed,
            r.variant,
            r.passes,
            r.s21_residual,
            r.symplectic_dev,
            r.arme_residual,
            r.breakdown,
            r.wall_time_ms
        ));
    }
    out
}

/// Median of a sample (mean of the middle pair for even sizes).
pub fn median(values: &[f64]) -> f64 {
    assert!(!values.is_empty(), "median of empty sample");
    let mut v = values.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).expect("residuals are finite"));
    let mid = v.len() / 2;
    if v.len() % 2 == 1 {
        v[mid]
    } else {
        0.5 * (v[mid - 1] + v[mid])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_cfg() -> BenchConfig {
        BenchConfig {
            n_min: 2,
            n_max: 4,
            trials: 3,
            variant: Variant::Householder,
            passes: 1,
            seed: 1,
            householder_sign: HouseholderSign::Stable,
        }
    }

    #[test]
    fn produces_one_row_per_cell_with_small_residuals() {
        let rows = run_bench(&small_cfg());
        assert_eq!(rows.len(), 9);
        for r in &rows {
            assert!(!r.breakdown);
            assert!(r.s21_residual <= 1e-9, "s21 {:.3e}", r.s21_residual);
            assert!(r.arme_residual <= 1e-9, "arme {:.3e}", r.arme_residual);
        }
    }

    #[test]
    fn csv_header_and_shape_are_stable() {
        let rows = run_bench(&small_cfg());
        let csv = to_csv(&rows);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        let first = lines.next().unwrap();
        assert_eq!(first.split(',').count(), 9);
        assert!(first.starts_with("2,1,householder,1,"));
    }

    #[test]
    fn numeric_columns_are_deterministic() {
        let a = run_bench(&small_cfg());
        let b = run_bench(&small_cfg());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.s21_residual, y.s21_residual);
            assert_eq!(x.arme_residual, y.arme_residual);
            assert_eq!(x.symplectic_dev, y.symplectic_dev);
        }
    }

    #[test]
    fn median_of_samples() {
        assert_eq!(median(&[3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&[4.0, 1.0, 2.0, 3.0]), 2.5);
        assert_eq!(median(&[7.0]), 7.0);
    }
}
