//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by file parsing, structural validation and the solvers.
///
/// Dimension mismatches in the low-level matrix kernel are programming
/// errors and panic instead; everything that can be triggered by user
/// input or by the numerics of a particular problem lands here.
#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Matrix text format violation. `line` is 1-based within the file.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A 2n x 2n block view was requested for an odd-dimension matrix.
    #[error("matrix dimension {dim} is odd; a 2n x 2n matrix is required")]
    OddDimension { dim: usize },

    #[error("matrix is not square: {rows} x {cols}")]
    NotSquare { rows: usize, cols: usize },

    /// Input failed the skew-Hamiltonian structure check.
    #[error("matrix is not skew-Hamiltonian: deviation {deviation:.3e} exceeds tolerance {tolerance:.3e}")]
    NotSkewHamiltonian { deviation: f64, tolerance: f64 },

    /// Input failed the Hamiltonian structure check.
    #[error(
        "matrix is not Hamiltonian: deviation {deviation:.3e} exceeds tolerance {tolerance:.3e}"
    )]
    NotHamiltonian { deviation: f64, tolerance: f64 },

    /// The rank-one similarity step has no solution: the inner product of
    /// the step's subdiagonal column segments vanished.
    #[error("breakdown at step {step}: subdiagonal inner product {inner_product:.3e} is below the breakdown threshold")]
    Breakdown { step: usize, inner_product: f64 },

    /// Shift matrix N rejected by the conditioning guard.
    #[error("shift matrix is ill-conditioned: reciprocal condition estimate {rcond:.3e} <= {min_rcond:.3e}")]
    IllConditioned { rcond: f64, min_rcond: f64 },

    #[error("matrix is singular")]
    Singular,

    /// Shift matrix M must be symmetric exactly.
    #[error("shift matrix M is not symmetric: max asymmetry {max_asymmetry:.3e}")]
    NotSymmetric { max_asymmetry: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
