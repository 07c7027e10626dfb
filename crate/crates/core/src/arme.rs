//! The antisymmetric Riccati matrix equation
//!
//! ```text
//! -Y S12 Y + S22 Y - Y S11 + S21 = 0
//! ```
//!
//! with skew-Hamiltonian coefficient blocks and a symmetric unknown Y.
//! Reducing a skew-Hamiltonian S with a group-G transform zeroes the
//! whole (2,1) block (a skew-symmetric upper-triangular matrix is zero),
//! and the transform's Y is then a solution with zero first row and
//! column. The solver always re-verifies by direct substitution instead
//! of trusting that argument: for larger n the reduced (2,1) block is
//! known to drift away from zero, and that has to be surfaced, not
//! hidden.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lu::{rcond, Lu};
use crate::mat::Mat;
use crate::reduction::{reduce, GTransform, ReduceOptions, Reduction, ReductionReport};
use crate::structured::{classify, offdiag_norm, BlockMat, DEFAULT_STRUCT_TOL};

/// Residuals above `DEGRADED_FACTOR * max(1, ||S||_F)` mark a solution
/// as numerically degraded rather than solved.
pub const DEGRADED_FACTOR: f64 = 1e-6;

/// Reciprocal condition estimate below which a shift matrix N is
/// rejected as effectively singular.
pub const MIN_SHIFT_RCOND: f64 = 1e-12;

/// A validated ARME instance: the coefficient matrix is required to be
/// skew-Hamiltonian within `tol * max(1, ||S||_F)` at construction.
#[derive(Debug, Clone)]
pub struct ArmeProblem {
    s: BlockMat,
}

impl ArmeProblem {
    pub fn new(s: BlockMat, tol: f64) -> Result<Self> {
        let rep = classify(&s, tol);
        if !rep.is_skew_hamiltonian {
            return Err(Error::NotSkewHamiltonian {
                deviation: rep.skew_hamiltonian_dev,
                tolerance: tol * s.frobenius_norm().max(1.0),
            });
        }
        Ok(ArmeProblem { s })
    }

    pub fn coefficients(&self) -> &BlockMat {
        &self.s
    }
}

/// Evaluate the residual `R = -Y S12 Y + S22 Y - Y S11 + S21` and its
/// Frobenius norm.
pub fn arme_residual(y: &Mat, s: &BlockMat) -> (Mat, f64) {
    assert!(
        y.rows() == s.n && y.cols() == s.n,
        "Y must be {0}x{0}, got {1}x{2}",
        s.n,
        y.rows(),
        y.cols()
    );
    let ys12 = y.matmul(&s.s12);
    let r = s
        .s21
        .sub(&ys12.matmul(y))
        .add(&s.s22.matmul(y))
        .sub(&y.matmul(&s.s11));
    let norm = r.frobenius_norm();
    (r, norm)
}

/// Outcome of [`arme_solve`].
#[derive(Debug, Clone)]
pub struct ArmeSolution {
    /// Symmetric solution with exactly zero first row and column.
    pub y: Mat,
    pub transform: GTransform,
    pub report: ReductionReport,
    /// `||R||_F` of `y` substituted into the original equation.
    pub residual_norm: f64,
    /// Frobenius norm of the reduced (2,1) block (zero in theory).
    pub s21_norm: f64,
    /// `|| S22' - S11'^T ||_F` of the reduced matrix.
    pub form_dev: f64,
    /// Set when the residual exceeds `DEGRADED_FACTOR * max(1, ||S||_F)`.
    pub degraded: bool,
}

/// Serializable summary of an [`ArmeSolution`].
#[derive(Debug, Clone, Serialize)]
pub struct ArmeSolveReport {
    pub residual_norm: f64,
    pub s21_norm: f64,
    pub form_dev: f64,
    pub degraded: bool,
    pub reduction: ReductionReport,
}

impl ArmeSolution {
    pub fn summary(&self) -> ArmeSolveReport {
        ArmeSolveReport {
            residual_norm: self.residual_norm,
            s21_norm: self.s21_norm,
            form_dev: self.form_dev,
            degraded: self.degraded,
            reduction: self.report.clone(),
        }
    }
}

/// Solve the ARME by reduction. Breakdown propagates as an error (the
/// step's rank-one system has no solution, so no Y with zero first row
/// and column exists down this path); a finished reduction always
/// returns a solution, flagged as degraded when the substituted
/// residual is out of tolerance.
pub fn arme_solve(p: &ArmeProblem, opts: &ReduceOptions) -> Result<ArmeSolution> {
    let red = reduce(&p.s, opts);
    if let Some(b) = &red.report.breakdown {
        return Err(Error::Breakdown {
            step: b.step,
            inner_product: b.inner_product,
        });
    }
    let Reduction {
        transform,
        reduced,
        report,
    } = red;
    let y = transform.y.clone();
    let (_, residual_norm) = arme_residual(&y, &p.s);
    let s21_norm = reduced.s21.frobenius_norm();
    let form_dev = reduced.s22.sub(&reduced.s11.transpose()).frobenius_norm();
    let degraded = residual_norm > DEGRADED_FACTOR * p.s.frobenius_norm().max(1.0);
    Ok(ArmeSolution {
        y,
        transform,
        report,
        residual_norm,
        s21_norm,
        form_dev,
        degraded,
    })
}

/// Outcome of [`reduce_hamiltonian`].
#[derive(Debug, Clone)]
pub struct HamiltonianReduction {
    pub reduced: BlockMat,
    pub transform: GTransform,
    pub report: ReductionReport,
    /// Off-diagonal norm of the reduced (2,1) block. For Hamiltonian
    /// input the reduced block is symmetric and upper triangular, hence
    /// diagonal; this measures how far the computation drifted.
    pub offdiag_dev_21: f64,
}

/// Reduce a Hamiltonian matrix. The (2,1) block of the result is
/// diagonal up to roundoff; its off-diagonal norm is reported.
pub fn reduce_hamiltonian(s: &BlockMat, opts: &ReduceOptions) -> Result<HamiltonianReduction> {
    let rep = classify(s, DEFAULT_STRUCT_TOL);
    if !rep.is_hamiltonian {
        return Err(Error::NotHamiltonian {
            deviation: rep.hamiltonian_dev,
            tolerance: DEFAULT_STRUCT_TOL * s.frobenius_norm().max(1.0),
        });
    }
    let red = reduce(s, opts);
    if let Some(b) = &red.report.breakdown {
        return Err(Error::Breakdown {
            step: b.step,
            inner_product: b.inner_product,
        });
    }
    let offdiag_dev_21 = offdiag_norm(&red.reduced.s21);
    Ok(HamiltonianReduction {
        reduced: red.reduced,
        transform: red.transform,
        report: red.report,
        offdiag_dev_21,
    })
}

/// The substitution `Y = M + N^{-T} X N^{-1}` with symmetric M and
/// nonsingular N, turning one ARME into another.
#[derive(Debug, Clone)]
pub struct ShiftSpec {
    m: Mat,
    n_mat: Mat,
    n_lu: Lu,
    n_inv: Mat,
}

impl ShiftSpec {
    /// Validate: M symmetric exactly, N square with a reciprocal
    /// condition estimate above [`MIN_SHIFT_RCOND`]. N is factored once
    /// here; left divisions use the factors, right divisions the
    /// inverse derived from them.
    pub fn new(m: Mat, n_mat: Mat) -> Result<Self> {
        assert!(
            m.is_square() && n_mat.is_square(),
            "shift matrices must be square"
        );
        assert_eq!(m.rows(), n_mat.rows(), "shift matrices must agree in size");
        let mut max_asym = 0.0f64;
        for r in 0..m.rows() {
            for c in 0..r {
                max_asym = max_asym.max((m[(r, c)] - m[(c, r)]).abs());
            }
        }
        if max_asym > 0.0 {
            return Err(Error::NotSymmetric {
                max_asymmetry: max_asym,
            });
        }
        let rc = rcond(&n_mat);
        if rc <= MIN_SHIFT_RCOND {
            return Err(Error::IllConditioned {
                rcond: rc,
                min_rcond: MIN_SHIFT_RCOND,
            });
        }
        let n_lu = Lu::factor(&n_mat)?;
        let n_inv = n_lu.inverse();
        Ok(ShiftSpec {
            m,
            n_mat,
            n_lu,
            n_inv,
        })
    }

    pub fn m(&self) -> &Mat {
        &self.m
    }

    pub fn n_mat(&self) -> &Mat {
        &self.n_mat
    }

    /// Map a solution X of the shifted equation back to the original
    /// unknown: `Y = M + N^{-T} X N^{-1}`.
    pub fn map_back(&self, x: &Mat) -> Mat {
        let mapped = self.n_inv.transpose().matmul(x).matmul(&self.n_inv);
        self.m.add(&mapped).symmetrized()
    }
}

/// Transform the coefficient blocks under the shift substitution:
///
/// ```text
/// S11' = N^{-1} (S11 + S12 M) N        S12' = N^{-1} S12 N^{-T}
/// S21' = N^T (S21 + S22 M - M S11 - M S12 M) N
/// S22' = N^T (S22 - M S12) N^{-T}
/// ```
///
/// The output is again skew-Hamiltonian-shaped: `S22' = S11'^T` and
/// `S12'`, `S21'` skew-symmetric, up to roundoff.
pub fn arme_shift(s: &BlockMat, spec: &ShiftSpec) -> Result<BlockMat> {
    assert_eq!(spec.m.rows(), s.n, "shift size must match the block size");
    let rep = classify(s, DEFAULT_STRUCT_TOL);
    if !rep.is_skew_hamiltonian {
        return Err(Error::NotSkewHamiltonian {
            deviation: rep.skew_hamiltonian_dev,
            tolerance: DEFAULT_STRUCT_TOL * s.frobenius_norm().max(1.0),
        });
    }
    let m = &spec.m;
    let lu = &spec.n_lu;
    let nt = spec.n_mat.transpose();

    let n_inv_t = spec.n_inv.transpose();

    // S11' = N^{-1} (S11 + S12 M) N
    let b = s.s11.add(&s.s12.matmul(m));
    let s11p = lu.solve_mat(&b.matmul(&spec.n_mat));

    // S12' = N^{-1} S12 N^{-T}
    let s12p = lu.solve_mat(&s.s12).matmul(&n_inv_t);

    // S21' = N^T (S21 + S22 M - M S11 - M S12 M) N
    let inner = s
        .s21
        .add(&s.s22.matmul(m))
        .sub(&m.matmul(&s.s11))
        .sub(&m.matmul(&s.s12).matmul(m));
    let s21p = nt.matmul(&inner).matmul(&spec.n_mat);

    // S22' = N^T (S22 - M S12) N^{-T}
    let s22p = nt.matmul(&s.s22.sub(&m.matmul(&s.s12))).matmul(&n_inv_t);

    Ok(BlockMat::new(s11p, s12p, s21p, s22p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{gen_hamiltonian, gen_skew_hamiltonian, SplitMix64};
    use crate::reduction::Variant;

    #[test]
    fn residual_of_zero_y_is_s21() {
        let s = gen_skew_hamiltonian(4, 3);
        let (r, norm) = arme_residual(&Mat::zeros(4, 4), &s);
        assert_eq!(r, s.s21);
        assert_eq!(norm, s.s21.frobenius_norm());
    }

    #[test]
    fn solve_then_substitute_is_small() {
        let s = gen_skew_hamiltonian(6, 21);
        let p = ArmeProblem::new(s.clone(), DEFAULT_STRUCT_TOL).unwrap();
        let sol = arme_solve(&p, &ReduceOptions::default()).unwrap();
        let bound = 1e-9 * s.frobenius_norm();
        assert!(
            sol.residual_norm <= bound,
            "residual {:.3e}",
            sol.residual_norm
        );
        assert!(!sol.degraded);
        assert_eq!(sol.y, sol.y.transpose());
        for i in 0..6 {
            assert_eq!(sol.y[(0, i)], 0.0);
            assert_eq!(sol.y[(i, 0)], 0.0);
        }
    }

    #[test]
    fn identity_input_has_zero_solution() {
        let s = BlockMat::from_dense(&Mat::identity(8)).unwrap();
        let p = ArmeProblem::new(s, DEFAULT_STRUCT_TOL).unwrap();
        let sol = arme_solve(&p, &ReduceOptions::default()).unwrap();
        assert_eq!(sol.y, Mat::zeros(4, 4));
        assert_eq!(sol.residual_norm, 0.0);
    }

    #[test]
    fn hamiltonian_input_is_rejected() {
        let s = gen_hamiltonian(3, 4);
        assert!(matches!(
            ArmeProblem::new(s, DEFAULT_STRUCT_TOL),
            Err(Error::NotSkewHamiltonian { .. })
        ));
    }

    #[test]
    fn breakdown_propagates_with_step() {
        let s11 = Mat::from_rows(&[vec![1.0, 2.0], vec![0.0, 3.0]]);
        // skew-Hamiltonian by construction, with r21 = 0 and t21 != 0
        let s12 = Mat::from_rows(&[vec![0.0, 0.5], vec![-0.5, 0.0]]);
        let s21 = Mat::from_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]]);
        let s = BlockMat::new(s11.clone(), s12, s21, s11.transpose());
        let p = ArmeProblem::new(s, DEFAULT_STRUCT_TOL).unwrap();
        match arme_solve(&p, &ReduceOptions::default()) {
            Err(Error::Breakdown { step, .. }) => assert_eq!(step, 1),
            other => panic!("expected breakdown, got {other:?}"),
        }
    }

    #[test]
    fn hamiltonian_reduction_yields_diagonal_block() {
        for seed in 0..5u64 {
            let s = gen_hamiltonian(4, 50 + seed);
            let out = reduce_hamiltonian(&s, &ReduceOptions::default()).unwrap();
            let bound = 1e-9 * s.frobenius_norm();
            assert!(
                out.offdiag_dev_21 <= bound,
                "seed {seed}: offdiag {:.3e} bound {:.3e}",
                out.offdiag_dev_21,
                bound
            );
        }
    }

    #[test]
    fn hamiltonian_reduction_rejects_skew_input() {
        let s = gen_skew_hamiltonian(3, 8);
        assert!(matches!(
            reduce_hamiltonian(&s, &ReduceOptions::default()),
            Err(Error::NotHamiltonian { .. })
        ));
    }

    #[test]
    fn hamiltonian_already_reduced_is_fixed_point() {
        // S21 = -I (diagonal), S11 Hessenberg, Hamiltonian assembly:
        // s12 symmetric, s21 symmetric, s22 = -s11^T
        let s11 = Mat::from_rows(&[vec![0.2, 0.7], vec![0.4, 0.9]]);
        let s = BlockMat::new(
            s11.clone(),
            Mat::zeros(2, 2),
            Mat::identity(2).scale(-1.0),
            s11.transpose().scale(-1.0),
        );
        let out = reduce_hamiltonian(&s, &ReduceOptions::default()).unwrap();
        assert_eq!(out.reduced, s);
        assert_eq!(out.transform.explicit_left, Mat::identity(2));
    }

    #[test]
    fn j_itself_needs_no_transform() {
        // J has s21 = -I, already diagonal, and a zero (1,1) block
        let n = 3;
        let mut j = Mat::zeros(2 * n, 2 * n);
        for i in 0..n {
            j[(i, n + i)] = 1.0;
            j[(n + i, i)] = -1.0;
        }
        let s = BlockMat::from_dense(&j).unwrap();
        let out = reduce_hamiltonian(&s, &ReduceOptions::default()).unwrap();
        assert_eq!(out.reduced, s);
        assert_eq!(out.transform.explicit_left, Mat::identity(n));
        assert_eq!(out.offdiag_dev_21, 0.0);
    }

    #[test]
    fn trivial_shift_is_identity() {
        let s = gen_skew_hamiltonian(4, 2);
        let spec = ShiftSpec::new(Mat::zeros(4, 4), Mat::identity(4)).unwrap();
        let shifted = arme_shift(&s, &spec).unwrap();
        let err = shifted.to_dense().sub(&s.to_dense()).frobenius_norm();
        assert_eq!(err, 0.0);
    }

    #[test]
    fn shift_by_a_solution_removes_the_constant_term() {
        // M = solution Y makes the shifted S21 block vanish
        let s = gen_skew_hamiltonian(5, 13);
        let p = ArmeProblem::new(s.clone(), DEFAULT_STRUCT_TOL).unwrap();
        let sol = arme_solve(&p, &ReduceOptions::default()).unwrap();
        let spec = ShiftSpec::new(sol.y.clone(), Mat::identity(5)).unwrap();
        let shifted = arme_shift(&s, &spec).unwrap();
        let bound = 1e-9 * s.frobenius_norm();
        assert!(
            shifted.s21.frobenius_norm() <= bound,
            "s21 after shift: {:.3e}",
            shifted.s21.frobenius_norm()
        );
    }

    #[test]
    fn shift_output_satisfies_block_symmetries() {
        let s = gen_skew_hamiltonian(4, 99);
        let mut rng = SplitMix64::new(7);
        let mut m = Mat::zeros(4, 4);
        for r in 0..4 {
            for c in 0..=r {
                let v = rng.uniform01() - 0.5;
                m[(r, c)] = v;
                m[(c, r)] = v;
            }
        }
        let spec = ShiftSpec::new(m, Mat::identity(4)).unwrap();
        let sp = arme_shift(&s, &spec).unwrap();
        let scale = sp.frobenius_norm();
        assert!(sp.s22.sub(&sp.s11.transpose()).frobenius_norm() <= 1e-12 * scale);
        assert!(sp.s12.add(&sp.s12.transpose()).frobenius_norm() <= 1e-12 * scale);
        assert!(sp.s21.add(&sp.s21.transpose()).frobenius_norm() <= 1e-12 * scale);
    }

    #[test]
    fn shift_solve_map_back_round_trip() {
        let s = gen_skew_hamiltonian(4, 55);
        let mut rng = SplitMix64::new(56);
        let mut m = Mat::zeros(4, 4);
        for r in 0..4 {
            for c in 0..=r {
                let v = rng.uniform01() - 0.5;
                m[(r, c)] = v;
                m[(c, r)] = v;
            }
        }
        let spec = ShiftSpec::new(m, Mat::identity(4)).unwrap();
        let shifted = arme_shift(&s, &spec).unwrap();
        let p = ArmeProblem::new(shifted, 1e-8).unwrap();
        let sol = arme_solve(&p, &ReduceOptions::default()).unwrap();
        let y = spec.map_back(&sol.y);
        let (_, residual) = arme_residual(&y, &s);
        let bound = 1e-8 * s.frobenius_norm();
        assert!(residual <= bound, "round-trip residual {residual:.3e}");
    }

    #[test]
    fn shift_spec_validates_inputs() {
        let mut asym = Mat::zeros(3, 3);
        asym[(0, 1)] = 1.0;
        assert!(matches!(
            ShiftSpec::new(asym, Mat::identity(3)),
            Err(Error::NotSymmetric { .. })
        ));
        let singular = Mat::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]);
        assert!(matches!(
            ShiftSpec::new(Mat::zeros(2, 2), singular),
            Err(Error::IllConditioned { .. })
        ));
    }

    #[test]
    fn elementary_variant_also_solves() {
        let s = gen_skew_hamiltonian(5, 303);
        let p = ArmeProblem::new(s.clone(), DEFAULT_STRUCT_TOL).unwrap();
        let sol = arme_solve(&p, &ReduceOptions::with_variant(Variant::Elementary)).unwrap();
        assert!(sol.residual_norm <= 1e-9 * s.frobenius_norm());
    }
}
