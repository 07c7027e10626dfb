//! Shared helpers for the integration suites: fixture loading and the
//! dense conjugation oracle, kept independent of the library's factored
//! update path.

// each integration target compiles this module separately and uses a
// different subset of it
#![allow(dead_code)]

use std::path::PathBuf;

use bgform::{BlockMat, GTransform, Lu, Mat, StepFactors, Variant};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn load_fixture(name: &str) -> Mat {
    bgform::read_matrix(&fixture_path(name)).expect("fixture parses")
}

pub fn load_fixture_blocks(name: &str) -> BlockMat {
    BlockMat::from_dense(&load_fixture(name)).expect("fixture has even dimension")
}

/// Dense 2n x 2n assembly of one step's transform, built from scratch:
/// permutation times elementary/Householder factor, Y as the permuted
/// rank-one matrix, and the (2,2) block via a generic inverse.
pub fn dense_step_u(f: &StepFactors, n: usize) -> Mat {
    let mut l = Mat::identity(n);
    if let Some(k) = f.pivot {
        l.swap_cols(f.step, k - 1);
    }
    let mut lbar = Mat::identity(n);
    if f.w.iter().any(|&x| x != 0.0) {
        match f.variant {
            Variant::Elementary => {
                for r in 0..n {
                    if f.w[r] != 0.0 {
                        lbar[(r, f.step)] = f.w[r];
                    }
                }
            }
            Variant::Householder => {
                lbar.rank_one_update(-2.0, &f.w, &f.w);
            }
        }
    }
    let l = l.matmul(&lbar);
    let mut y = Mat::zeros(n, n);
    if let Some(alpha) = f.alpha {
        let mut pv = f.v.clone();
        if let Some(k) = f.pivot {
            pv.swap(f.step, k - 1);
        }
        y.rank_one_update(alpha, &pv, &pv);
    }
    assemble_u(&l, &y)
}

/// Dense `U = [[L, 0], [Y L, L^{-T}]]` with `L^{-T}` from a generic LU
/// inverse.
pub fn assemble_u(l: &Mat, y: &Mat) -> Mat {
    let n = l.rows();
    let linv_t = Lu::factor(l)
        .expect("left factor invertible")
        .inverse()
        .transpose();
    let yl = y.matmul(l);
    let mut u = Mat::zeros(2 * n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            u[(r, c)] = l[(r, c)];
            u[(n + r, c)] = yl[(r, c)];
            u[(n + r, n + c)] = linv_t[(r, c)];
        }
    }
    u
}

/// `U^{-1} S U` through a generic linear solve; the oracle route.
pub fn dense_conjugate(s: &BlockMat, u: &Mat) -> BlockMat {
    let su = s.to_dense().matmul(u);
    let conj = Lu::factor(u).expect("transform invertible").solve_mat(&su);
    BlockMat::from_dense(&conj).expect("even dimension")
}

/// Dense transform of an accumulated `GTransform`, assembled through
/// the oracle's own inverse rather than the library's running one.
pub fn dense_transform_u(g: &GTransform) -> Mat {
    assemble_u(&g.explicit_left, &g.y)
}
