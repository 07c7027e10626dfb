//! Block view of 2n x 2n matrices and structural predicates.
//!
//! A `BlockMat` splits a 2n x 2n matrix into four n x n blocks. The
//! canonical antisymmetric form `J = [[0, I], [-I, 0]]` is never stored
//! densely: conjugations by `J` reduce to block swaps and sign flips,
//! which are exact. The dense-J route survives only as a test oracle.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mat::Mat;

/// Default relative tolerance for the structural flags.
pub const DEFAULT_STRUCT_TOL: f64 = 1e-10;

/// A 2n x 2n matrix viewed as four n x n blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockMat {
    pub n: usize,
    pub s11: Mat,
    pub s12: Mat,
    pub s21: Mat,
    pub s22: Mat,
}

impl BlockMat {
    /// Assemble from four n x n blocks. Panics on shape mismatch.
    pub fn new(s11: Mat, s12: Mat, s21: Mat, s22: Mat) -> Self {
        let n = s11.rows();
        for (name, b) in [("s11", &s11), ("s12", &s12), ("s21", &s21), ("s22", &s22)] {
            assert!(
                b.rows() == n && b.cols() == n,
                "block {name} is {}x{}, expected {n}x{n}",
                b.rows(),
                b.cols()
            );
        }
        BlockMat {
            n,
            s11,
            s12,
            s21,
            s22,
        }
    }

    /// Split a square even-dimension matrix into blocks.
    pub fn from_dense(m: &Mat) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if !m.rows().is_multiple_of(2) {
            return Err(Error::OddDimension { dim: m.rows() });
        }
        let n = m.rows() / 2;
        let mut blocks = [
            Mat::zeros(n, n),
            Mat::zeros(n, n),
            Mat::zeros(n, n),
            Mat::zeros(n, n),
        ];
        for r in 0..2 * n {
            for c in 0..2 * n {
                let b = (r / n) * 2 + c / n;
                blocks[b][(r % n, c % n)] = m[(r, c)];
            }
        }
        let [s11, s12, s21, s22] = blocks;
        Ok(BlockMat {
            n,
            s11,
            s12,
            s21,
            s22,
        })
    }

    pub fn to_dense(&self) -> Mat {
        let n = self.n;
        let mut m = Mat::zeros(2 * n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                m[(r, c)] = self.s11[(r, c)];
                m[(r, n + c)] = self.s12[(r, c)];
                m[(n + r, c)] = self.s21[(r, c)];
                m[(n + r, n + c)] = self.s22[(r, c)];
            }
        }
        m
    }

    pub fn frobenius_norm(&self) -> f64 {
        let mut acc = 0.0;
        for b in [&self.s11, &self.s12, &self.s21, &self.s22] {
            let f = b.frobenius_norm();
            acc += f * f;
        }
        acc.sqrt()
    }

    /// `J^T S J` by the closed-form block shuffle: `[[s22, -s21], [-s12, s11]]`.
    pub fn j_conjugate(&self) -> BlockMat {
        BlockMat {
            n: self.n,
            s11: self.s22.clone(),
            s12: self.s21.scale(-1.0),
            s21: self.s12.scale(-1.0),
            s22: self.s11.clone(),
        }
    }
}

/// Structure metrics for a 2n x 2n block matrix.
///
/// Deviations are Frobenius norms; flags compare against
/// `tol * max(1, ||S||_F)`.
#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    /// `|| J^T S J + S^T ||_F`
    pub hamiltonian_dev: f64,
    /// `|| J^T S J - S^T ||_F`
    pub skew_hamiltonian_dev: f64,
    pub is_hamiltonian: bool,
    pub is_skew_hamiltonian: bool,
    /// Norm of s11 below its first subdiagonal.
    pub hessenberg_dev_11: f64,
    /// Norm of s21 strictly below the diagonal.
    pub upper_triangular_dev_21: f64,
    /// Norm of all off-diagonal entries of s21.
    pub diagonal_dev_21: f64,
}

/// Norm of the strictly-below-diagonal part.
pub fn below_diag_norm(m: &Mat) -> f64 {
    let mut acc = 0.0;
    for r in 0..m.rows() {
        for c in 0..r.min(m.cols()) {
            let v = m[(r, c)];
            acc += v * v;
        }
    }
    acc.sqrt()
}

/// Norm of the part below the first subdiagonal (Hessenberg deviation).
pub fn below_subdiag_norm(m: &Mat) -> f64 {
    let mut acc = 0.0;
    for r in 2..m.rows() {
        for c in 0..(r - 1).min(m.cols()) {
            let v = m[(r, c)];
            acc += v * v;
        }
    }
    acc.sqrt()
}

/// Norm of all off-diagonal entries.
pub fn offdiag_norm(m: &Mat) -> f64 {
    let mut acc = 0.0;
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if r != c {
                let v = m[(r, c)];
                acc += v * v;
            }
        }
    }
    acc.sqrt()
}

/// Compute all structure metrics of `s` and set the flags at `tol`.
pub fn classify(s: &BlockMat, tol: f64) -> StructureReport {
    assert!(tol > 0.0, "tolerance must be positive");
    let jtsj = s.j_conjugate();
    let st11 = s.s11.transpose();
    let st12 = s.s12.transpose();
    let st21 = s.s21.transpose();
    let st22 = s.s22.transpose();
    // S^T in block form is [[s11^T, s21^T], [s12^T, s22^T]]
    let ham = [
        jtsj.s11.add(&st11),
        jtsj.s12.add(&st21),
        jtsj.s21.add(&st12),
        jtsj.s22.add(&st22),
    ];
    let skew = [
        jtsj.s11.sub(&st11),
        jtsj.s12.sub(&st21),
        jtsj.s21.sub(&st12),
        jtsj.s22.sub(&st22),
    ];
    let hamiltonian_dev = block_norm(&ham);
    let skew_hamiltonian_dev = block_norm(&skew);
    let scale = s.frobenius_norm().max(1.0);
    StructureReport {
        hamiltonian_dev,
        skew_hamiltonian_dev,
        is_hamiltonian: hamiltonian_dev <= tol * scale,
        is_skew_hamiltonian: skew_hamiltonian_dev <= tol * scale,
        hessenberg_dev_11: below_subdiag_norm(&s.s11),
        upper_triangular_dev_21: below_diag_norm(&s.s21),
        diagonal_dev_21: offdiag_norm(&s.s21),
    }
}

fn block_norm(blocks: &[Mat; 4]) -> f64 {
    let mut acc = 0.0;
    for b in blocks {
        let f = b.frobenius_norm();
        acc += f * f;
    }
    acc.sqrt()
}

/// Result of the symplecticity test `|| U^T J U - J ||_F`.
#[derive(Debug, Clone, Serialize)]
pub struct SymplecticCheck {
    pub deviation: f64,
    pub is_symplectic: bool,
}

/// Check `U^T J U = J`. Errors on odd dimension.
pub fn is_symplectic(u: &Mat, tol: f64) -> Result<SymplecticCheck> {
    if !u.is_square() {
        return Err(Error::NotSquare {
            rows: u.rows(),
            cols: u.cols(),
        });
    }
    if !u.rows().is_multiple_of(2) {
        return Err(Error::OddDimension { dim: u.rows() });
    }
    let n = u.rows() / 2;
    // J U without a dense J: top block rows of JU are the bottom rows
    // of U, bottom block rows are the negated top rows.
    let mut ju = Mat::zeros(2 * n, 2 * n);
    for r in 0..n {
        for c in 0..2 * n {
            ju[(r, c)] = u[(n + r, c)];
            ju[(n + r, c)] = -u[(r, c)];
        }
    }
    let mut m = u.transpose().matmul(&ju);
    for i in 0..n {
        m[(i, n + i)] -= 1.0; // J has +I in the (1,2) block
        m[(n + i, i)] += 1.0; // and -I in the (2,1) block
    }
    let deviation = m.frobenius_norm();
    Ok(SymplecticCheck {
        deviation,
        is_symplectic: deviation <= tol * u.frobenius_norm().max(1.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{gen_hamiltonian, gen_skew_hamiltonian, SplitMix64};

    fn j_mat(n: usize) -> Mat {
        let mut j = Mat::zeros(2 * n, 2 * n);
        for i in 0..n {
            j[(i, n + i)] = 1.0;
            j[(n + i, i)] = -1.0;
        }
        j
    }

    #[test]
    fn j_is_hamiltonian_not_skew() {
        let j = BlockMat::from_dense(&j_mat(1)).unwrap();
        let rep = classify(&j, DEFAULT_STRUCT_TOL);
        assert!(rep.is_hamiltonian);
        assert!(!rep.is_skew_hamiltonian);
        assert_eq!(rep.hamiltonian_dev, 0.0);
    }

    #[test]
    fn identity_is_skew_hamiltonian_not_hamiltonian() {
        let s = BlockMat::from_dense(&Mat::identity(6)).unwrap();
        let rep = classify(&s, DEFAULT_STRUCT_TOL);
        assert!(rep.is_skew_hamiltonian);
        assert!(!rep.is_hamiltonian);
        assert_eq!(rep.skew_hamiltonian_dev, 0.0);
    }

    #[test]
    fn j_conjugate_matches_dense_j_multiplication_exactly() {
        let s = gen_skew_hamiltonian(4, 7);
        let shuffle = s.j_conjugate().to_dense();
        let j = j_mat(4);
        let dense = j.transpose().matmul(&s.to_dense()).matmul(&j);
        assert_eq!(shuffle, dense);

        let h = gen_hamiltonian(3, 9);
        let shuffle = h.j_conjugate().to_dense();
        let j = j_mat(3);
        let dense = j.transpose().matmul(&h.to_dense()).matmul(&j);
        assert_eq!(shuffle, dense);
    }

    #[test]
    fn identity_is_symplectic() {
        let chk = is_symplectic(&Mat::identity(8), DEFAULT_STRUCT_TOL).unwrap();
        assert_eq!(chk.deviation, 0.0);
        assert!(chk.is_symplectic);
    }

    #[test]
    fn scaled_identity_is_not_symplectic() {
        let n = 3;
        let u = Mat::identity(2 * n).scale(2.0);
        let chk = is_symplectic(&u, DEFAULT_STRUCT_TOL).unwrap();
        let expected = 3.0 * j_mat(n).frobenius_norm();
        assert!((chk.deviation - expected).abs() < 1e-12);
        assert!(!chk.is_symplectic);
    }

    #[test]
    fn group_form_matrices_are_symplectic() {
        // U = [[Q, 0], [Y Q, Q]] with Q a product of reflectors and Y symmetric
        let n = 5;
        let mut rng = SplitMix64::new(42);
        let mut q = Mat::identity(n);
        for _ in 0..3 {
            let raw: Vec<f64> = (0..n).map(|_| rng.uniform01() - 0.5).collect();
            let norm: f64 = raw.iter().map(|x| x * x).sum::<f64>().sqrt();
            let w: Vec<f64> = raw.iter().map(|x| x / norm).collect();
            q.house_right(&w);
        }
        let mut y = Mat::zeros(n, n);
        for r in 0..n {
            for c in 0..=r {
                let v = rng.uniform01() * 2.0 - 1.0;
                y[(r, c)] = v;
                y[(c, r)] = v;
            }
        }
        let yq = y.matmul(&q);
        let mut u = Mat::zeros(2 * n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                u[(r, c)] = q[(r, c)];
                u[(n + r, c)] = yq[(r, c)];
                u[(n + r, n + c)] = q[(r, c)];
            }
        }
        let chk = is_symplectic(&u, DEFAULT_STRUCT_TOL).unwrap();
        assert!(chk.deviation <= 1e-12, "dev = {:.3e}", chk.deviation);
        assert!(chk.is_symplectic);
    }

    #[test]
    fn odd_dimension_rejected() {
        assert!(matches!(
            is_symplectic(&Mat::identity(5), 1e-10),
            Err(Error::OddDimension { dim: 5 })
        ));
        assert!(matches!(
            BlockMat::from_dense(&Mat::identity(7)),
            Err(Error::OddDimension { dim: 7 })
        ));
    }

    #[test]
    fn dense_round_trip() {
        let s = gen_skew_hamiltonian(3, 11);
        let back = BlockMat::from_dense(&s.to_dense()).unwrap();
        assert_eq!(back, s);
    }
}
