//! Symplectic similarity reduction of real 2n x 2n matrices to
//! Bunse-Gerstner form (upper-Hessenberg (1,1) block, upper-triangular
//! (2,1) block), using transformations from the group
//! `G = { [[L, 0], [Y L, L^{-T}]] : Y = Y^T }`, and a solver for the
//! antisymmetric Riccati matrix equation
//! `-Y S12 Y + S22 Y - Y S11 + S21 = 0` over skew-Hamiltonian
//! coefficients.
//!
//! Two step families are implemented: pivoted elementary factors with
//! multipliers bounded by 1, and Householder reflectors (orthogonal
//! accumulated left factor). For skew-Hamiltonian input the reduction
//! zeroes the whole (2,1) block and the transform's Y solves the ARME
//! with zero first row and column; for Hamiltonian input the reduced
//! (2,1) block is diagonal.
//!
//! # Quick start
//!
//! ```
//! use bgform::{arme_solve, arme_residual, gen_skew_hamiltonian, ArmeProblem, ReduceOptions};
//!
//! let s = gen_skew_hamiltonian(6, 42);
//! let problem = ArmeProblem::new(s.clone(), 1e-10).unwrap();
//! let sol = arme_solve(&problem, &ReduceOptions::default()).unwrap();
//! let (_, residual) = arme_residual(&sol.y, &s);
//! assert!(residual <= 1e-9 * s.frobenius_norm());
//! ```
//!
//! # Examples directory
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p bgform --example check_structure
//! cargo run -p bgform --example reduce_general
//! cargo run -p bgform --example solve_arme
//! cargo run -p bgform --example hamiltonian_diagonal
//! cargo run -p bgform --example shift_substitution
//! cargo run -p bgform --example residual_sweep
//! ```
//!
//! The same functionality is scriptable through the `bgform` binary
//! (`check`, `reduce`, `solve-arme`, `gen`, `bench` subcommands); see
//! the README for the file formats and exit codes.

pub mod arme;
pub mod bench;
pub mod cli;
pub mod error;
pub mod gen;
pub mod lu;
pub mod mat;
pub mod reduction;
pub mod structured;
pub mod textio;

pub use arme::{
    arme_residual, arme_shift, arme_solve, reduce_hamiltonian, ArmeProblem, ArmeSolution,
    HamiltonianReduction, ShiftSpec, DEGRADED_FACTOR, MIN_SHIFT_RCOND,
};
pub use bench::{median, run_bench, to_csv, BenchConfig, BenchRecord, CSV_HEADER};
pub use error::{Error, Result};
pub use gen::{gen_general, gen_hamiltonian, gen_skew_hamiltonian, SplitMix64};
pub use lu::{rcond, Lu};
pub use mat::{dot, Mat, Side};
pub use reduction::{
    accumulate, apply_step, compute_elementary_w, compute_householder_w, compute_pivot,
    compute_y_step, reduce, BreakdownInfo, GTransform, HouseholderSign, HouseholderW,
    ReduceOptions, Reduction, ReductionReport, StepFactors, Variant, YStep, DEFAULT_STEP_TOL,
};
pub use structured::{
    below_diag_norm, below_subdiag_norm, classify, is_symplectic, offdiag_norm, BlockMat,
    StructureReport, SymplecticCheck, DEFAULT_STRUCT_TOL,
};
pub use textio::{format_matrix, parse_matrix, read_matrix, write_matrix};
