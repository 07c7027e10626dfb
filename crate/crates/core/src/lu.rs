//! Pivoted LU factorization.
//!
//! Used for the shift substitution's N^{-1} applications and for the
//! dense `U^{-1} S U` oracles in the test suite. Partial pivoting,
//! packed storage.

use crate::error::{Error, Result};
use crate::mat::Mat;

/// Packed LU factors of a square matrix with row pivoting: `P A = L U`.
#[derive(Debug, Clone)]
pub struct Lu {
    lu: Mat,
    perm: Vec<usize>,
}

impl Lu {
    /// Factor `a`. Fails with `Error::Singular` on an exactly zero pivot.
    pub fn factor(a: &Mat) -> Result<Lu> {
        if !a.is_square() {
            return Err(Error::NotSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        let n = a.rows();
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let mut piv = k;
            let mut best = lu[(k, k)].abs();
            for r in k + 1..n {
                let v = lu[(r, k)].abs();
                if v > best {
                    best = v;
                    piv = r;
                }
            }
            if best == 0.0 {
                return Err(Error::Singular);
            }
            if piv != k {
                lu.swap_rows(piv, k);
                perm.swap(piv, k);
            }
            let pivot = lu[(k, k)];
            for r in k + 1..n {
                let m = lu[(r, k)] / pivot;
                lu[(r, k)] = m;
                for c in k + 1..n {
                    let adj = m * lu[(k, c)];
                    lu[(r, c)] -= adj;
                }
            }
        }
        Ok(Lu { lu, perm })
    }

    pub fn order(&self) -> usize {
        self.lu.rows()
    }

    /// Solve `A x = b`.
    pub fn solve_vec(&self, b: &[f64]) -> Vec<f64> {
        let n = self.order();
        assert_eq!(b.len(), n, "rhs length mismatch");
        let mut x: Vec<f64> = self.perm.iter().map(|&p| b[p]).collect();
        for r in 1..n {
            let row = self.lu.row(r);
            let mut acc = x[r];
            for (l, xv) in row[..r].iter().zip(&x[..r]) {
                acc -= l * xv;
            }
            x[r] = acc;
        }
        for r in (0..n).rev() {
            let row = self.lu.row(r);
            let mut acc = x[r];
            for (l, xv) in row[r + 1..].iter().zip(&x[r + 1..]) {
                acc -= l * xv;
            }
            x[r] = acc / row[r];
        }
        x
    }

    /// Solve `A X = B` column by column.
    pub fn solve_mat(&self, b: &Mat) -> Mat {
        let n = self.order();
        assert_eq!(b.rows(), n, "rhs row count mismatch");
        let mut out = Mat::zeros(n, b.cols());
        for c in 0..b.cols() {
            let col = self.solve_vec(&b.col(c));
            for r in 0..n {
                out[(r, c)] = col[r];
            }
        }
        out
    }

    pub fn inverse(&self) -> Mat {
        self.solve_mat(&Mat::identity(self.order()))
    }
}

/// Reciprocal condition estimate in the 1-norm, via the explicit
/// inverse (matrices here are small). Returns 0.0 for singular input.
pub fn rcond(a: &Mat) -> f64 {
    let lu = match Lu::factor(a) {
        Ok(lu) => lu,
        Err(_) => return 0.0,
    };
    let inv = lu.inverse();
    let na = one_norm(a);
    let ni = one_norm(&inv);
    if na == 0.0 || ni == 0.0 {
        return 0.0;
    }
    1.0 / (na * ni)
}

fn one_norm(a: &Mat) -> f64 {
    let mut best = 0.0f64;
    for c in 0..a.cols() {
        let s: f64 = (0..a.rows()).map(|r| a[(r, c)].abs()).sum();
        best = best.max(s);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_known_system() {
        let a = Mat::from_rows(&[vec![2.0, 1.0], vec![5.0, 3.0]]);
        let lu = Lu::factor(&a).unwrap();
        let x = lu.solve_vec(&[4.0, 11.0]);
        assert!((x[0] - 1.0).abs() < 1e-12);
        assert!((x[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let a = Mat::from_rows(&[
            vec![4.0, -2.0, 1.0],
            vec![1.0, 6.0, -3.0],
            vec![-2.0, 1.0, 5.0],
        ]);
        let inv = Lu::factor(&a).unwrap().inverse();
        let err = a.matmul(&inv).sub(&Mat::identity(3)).frobenius_norm();
        assert!(err < 1e-13, "err = {err:.3e}");
    }

    #[test]
    fn detects_singular() {
        let a = Mat::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]);
        assert!(matches!(Lu::factor(&a), Err(Error::Singular)));
    }

    #[test]
    fn rcond_of_identity_is_one() {
        assert!((rcond(&Mat::identity(5)) - 1.0).abs() < 1e-15);
        let near_singular = Mat::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0 + 1e-14]]);
        assert!(rcond(&near_singular) < 1e-13);
    }
}
