//! Solve the antisymmetric Riccati matrix equation
//! `-Y S12 Y + S22 Y - Y S11 + S21 = 0` for a random skew-Hamiltonian
//! coefficient matrix and verify the solution by direct substitution.
//!
//! ```bash
//! cargo run -p bgform --example solve_arme
//! ```

use bgform::{
    arme_residual, arme_solve, gen_skew_hamiltonian, ArmeProblem, ReduceOptions, DEFAULT_STRUCT_TOL,
};

fn main() {
    let n = 6;
    let s = gen_skew_hamiltonian(n, 2024);
    let problem = ArmeProblem::new(s.clone(), DEFAULT_STRUCT_TOL)
        .expect("generator output is skew-Hamiltonian");

    let sol =
        arme_solve(&problem, &ReduceOptions::default()).expect("random input does not break down");

    println!(
        "skew-Hamiltonian coefficients, n = {n}, ||S||_F = {:.3}",
        s.frobenius_norm()
    );
    println!();
    println!(
        "reduced (2,1) block norm   {:.3e} (zero in exact arithmetic)",
        sol.s21_norm
    );
    println!("form deviation S22'-S11'^T {:.3e}", sol.form_dev);
    println!("substituted residual ||R|| {:.3e}", sol.residual_norm);
    println!("degraded quality           {}", sol.degraded);
    println!();

    println!("Y (symmetric, first row and column exactly zero):");
    for r in 0..n {
        let row: Vec<String> = (0..n).map(|c| format!("{:>9.5}", sol.y[(r, c)])).collect();
        println!("  {}", row.join(" "));
    }
    println!();

    // independent verification: substitute Y back into the equation
    let (_, check) = arme_residual(&sol.y, &s);
    println!("independent substitution check: ||R||_F = {check:.3e}");
}
