//! Dense real matrix kernel.
//!
//! Everything downstream (block views, reduction steps, Riccati solver)
//! is built on this one type. Storage is row-major `Vec<f64>`. Inner
//! products accumulate strictly left to right so repeated runs are
//! bit-reproducible; performance at the target sizes (n up to a few
//! hundred) is not a concern.
//!
//! Dimension mismatches panic: they are programming errors, not data
//! errors. Anything reachable from user input is validated earlier.

use std::ops::{Index, IndexMut};

/// Which side a Householder reflector is applied from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Dense real matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Mat {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    /// Identity of order `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// Build from a row-major flat vector. Panics if the length is wrong.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), rows * cols, "flat data length mismatch");
        Mat { rows, cols, data }
    }

    /// Build from row slices. Panics on ragged input.
    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Mat {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row `r` as a slice (rows are contiguous in storage).
    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Column `c` copied out.
    pub fn col(&self, c: usize) -> Vec<f64> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Matrix product, fixed left-to-right accumulation per entry.
    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(
            self.cols, other.rows,
            "matmul dimension mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self[(i, k)];
                if aik == 0.0 {
                    continue;
                }
                let brow = other.row(k);
                let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for j in 0..other.cols {
                    orow[j] += aik * brow[j];
                }
            }
        }
        out
    }

    /// Matrix-vector product `A x`.
    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, x.len(), "matvec dimension mismatch");
        let mut out = vec![0.0; self.rows];
        for (r, slot) in out.iter_mut().enumerate() {
            let mut acc = 0.0;
            for (a, b) in self.row(r).iter().zip(x) {
                acc += a * b;
            }
            *slot = acc;
        }
        out
    }

    /// Transposed product `A^T x`.
    pub fn tr_matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(self.rows, x.len(), "tr_matvec dimension mismatch");
        let mut out = vec![0.0; self.cols];
        for (r, &xr) in x.iter().enumerate() {
            if xr == 0.0 {
                continue;
            }
            for (slot, a) in out.iter_mut().zip(self.row(r)) {
                *slot += xr * a;
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)];
            }
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        let mut acc = 0.0;
        for v in &self.data {
            acc += v * v;
        }
        acc.sqrt()
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn trace(&self) -> f64 {
        assert!(self.is_square(), "trace of non-square matrix");
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "add shape mismatch"
        );
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "sub shape mismatch"
        );
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, s: f64) -> Mat {
        let data = self.data.iter().map(|a| a * s).collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// In-place rank-one update `A += alpha * u * v^T`.
    pub fn rank_one_update(&mut self, alpha: f64, u: &[f64], v: &[f64]) {
        assert_eq!(u.len(), self.rows, "rank_one_update u length");
        assert_eq!(v.len(), self.cols, "rank_one_update v length");
        for (r, &ur_raw) in u.iter().enumerate() {
            let ur = alpha * ur_raw;
            if ur == 0.0 {
                continue;
            }
            let row = &mut self.data[r * self.cols..(r + 1) * self.cols];
            for (slot, b) in row.iter_mut().zip(v) {
                *slot += ur * b;
            }
        }
    }

    /// In-place `A[:, c] += s * x`.
    pub fn add_scaled_col(&mut self, c: usize, x: &[f64], s: f64) {
        assert_eq!(x.len(), self.rows, "add_scaled_col length");
        for r in 0..self.rows {
            self[(r, c)] += s * x[r];
        }
    }

    /// In-place `A[r, :] += s * x`.
    pub fn add_scaled_row(&mut self, r: usize, x: &[f64], s: f64) {
        assert_eq!(x.len(), self.cols, "add_scaled_row length");
        let row = &mut self.data[r * self.cols..(r + 1) * self.cols];
        for c in 0..self.cols {
            row[c] += s * x[c];
        }
    }

    pub fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(r1 * self.cols + c, r2 * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, c1: usize, c2: usize) {
        if c1 == c2 {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + c1, r * self.cols + c2);
        }
    }

    /// Apply a Householder reflector `Q = I - 2 w w^T` from the given side
    /// as a rank-one update; `Q` is never formed. An all-zero `w` means
    /// `Q = I`. For nonzero `w`, unit norm is the caller's obligation.
    pub fn apply_householder(&self, w: &[f64], side: Side) -> Mat {
        let mut out = self.clone();
        match side {
            Side::Left => out.house_left(w),
            Side::Right => out.house_right(w),
        }
        out
    }

    /// In-place `A <- (I - 2 w w^T) A`.
    pub fn house_left(&mut self, w: &[f64]) {
        assert_eq!(w.len(), self.rows, "house_left dimension mismatch");
        debug_assert!(householder_vector_ok(w), "reflector must be unit or zero");
        if w.iter().all(|&x| x == 0.0) {
            return;
        }
        let wta = self.tr_matvec(w);
        self.rank_one_update(-2.0, w, &wta);
    }

    /// In-place `A <- A (I - 2 w w^T)`.
    pub fn house_right(&mut self, w: &[f64]) {
        assert_eq!(w.len(), self.cols, "house_right dimension mismatch");
        debug_assert!(householder_vector_ok(w), "reflector must be unit or zero");
        if w.iter().all(|&x| x == 0.0) {
            return;
        }
        let aw = self.matvec(w);
        self.rank_one_update(-2.0, &aw, w);
    }

    /// `(A + A^T) / 2`, entrywise symmetric by construction.
    pub fn symmetrized(&self) -> Mat {
        assert!(self.is_square(), "symmetrized of non-square matrix");
        let n = self.rows;
        let mut out = Mat::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                out[(r, c)] = 0.5 * (self[(r, c)] + self[(c, r)]);
            }
        }
        out
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}

fn householder_vector_ok(w: &[f64]) -> bool {
    let norm2: f64 = w.iter().map(|x| x * x).sum();
    norm2 == 0.0 || (norm2.sqrt() - 1.0).abs() <= 1e-13
}

impl Index<(usize, usize)> for Mat {
    type Output = f64;

    fn index(&self, (r, c): (usize, usize)) -> &f64 {
        debug_assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut f64 {
        debug_assert!(r < self.rows && c < self.cols, "index out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

/// Left-to-right dot product, same accumulation order as `matmul`.
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len(), "dot length mismatch");
    let mut acc = 0.0;
    for i in 0..a.len() {
        acc += a[i] * b[i];
    }
    acc
}
