//! Deterministic test-matrix generators.
//!
//! The PRNG is SplitMix64 with the float conversion
//! `u = ((x >> 11) + 0.5) * 2^-53`, which yields doubles strictly inside
//! (0, 1). Both the algorithm and the block fill order below are part of
//! the fixture contract and must not change: files produced by `gen` for
//! a given `(kind, n, seed)` are expected to be reproducible anywhere.
//!
//! Fill order:
//! - `gen_skew_hamiltonian`: s11 row-major, then the strict upper
//!   triangle of s12 row-major, then the strict upper triangle of s21
//!   row-major; lower triangles are mirrored negated, diagonals zero,
//!   and s22 = s11^T.
//! - `gen_hamiltonian`: s11 row-major, then for each of s12 and s21 the
//!   diagonal-and-above entries row-major, mirrored below; s22 = -s11^T.

use crate::mat::Mat;
use crate::structured::BlockMat;

/// SplitMix64 (Steele, Lea, Flood 2014). State advances by the golden
/// gamma; output is finalized with two xor-shift-multiply rounds.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform double strictly inside (0, 1): the 53 high bits plus a
    /// half-ulp offset, so neither endpoint is reachable.
    pub fn uniform01(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }
}

/// Random skew-Hamiltonian 2n x 2n matrix: s22 = s11^T, s12 and s21
/// skew-symmetric. Exact by construction, deterministic per seed.
pub fn gen_skew_hamiltonian(n: usize, seed: u64) -> BlockMat {
    assert!(n >= 1, "n must be at least 1");
    let mut rng = SplitMix64::new(seed);
    let mut s11 = Mat::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            s11[(r, c)] = rng.uniform01();
        }
    }
    let s22 = s11.transpose();
    let s12 = skew_from_rng(n, &mut rng);
    let s21 = skew_from_rng(n, &mut rng);
    BlockMat::new(s11, s12, s21, s22)
}

/// Random Hamiltonian 2n x 2n matrix: s22 = -s11^T, s12 and s21
/// symmetric. Exact by construction, deterministic per seed.
pub fn gen_hamiltonian(n: usize, seed: u64) -> BlockMat {
    assert!(n >= 1, "n must be at least 1");
    let mut rng = SplitMix64::new(seed);
    let mut s11 = Mat::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            s11[(r, c)] = rng.uniform01();
        }
    }
    let s22 = s11.transpose().scale(-1.0);
    let s12 = sym_from_rng(n, &mut rng);
    let s21 = sym_from_rng(n, &mut rng);
    BlockMat::new(s11, s12, s21, s22)
}

/// Random general 2n x 2n matrix with uniform(0,1) entries, row-major
/// over the dense assembly. No structure; used to exercise the reducer
/// on unstructured input.
pub fn gen_general(n: usize, seed: u64) -> BlockMat {
    assert!(n >= 1, "n must be at least 1");
    let mut rng = SplitMix64::new(seed);
    let mut m = Mat::zeros(2 * n, 2 * n);
    for r in 0..2 * n {
        for c in 0..2 * n {
            m[(r, c)] = rng.uniform01();
        }
    }
    BlockMat::from_dense(&m).expect("even dimension by construction")
}

fn skew_from_rng(n: usize, rng: &mut SplitMix64) -> Mat {
    let mut m = Mat::zeros(n, n);
    for r in 0..n {
        for c in r + 1..n {
            let v = rng.uniform01();
            m[(r, c)] = v;
            m[(c, r)] = -v;
        }
    }
    m
}

fn sym_from_rng(n: usize, rng: &mut SplitMix64) -> Mat {
    let mut m = Mat::zeros(n, n);
    for r in 0..n {
        for c in r..n {
            let v = rng.uniform01();
            m[(r, c)] = v;
            m[(c, r)] = v;
        }
    }
    m
}
