//! Reduce a Hamiltonian matrix: symplectic similarity preserves the
//! Hamiltonian structure, so the reduced (2,1) block is symmetric and
//! upper triangular at once, hence diagonal.
//!
//! ```bash
//! cargo run -p bgform --example hamiltonian_diagonal
//! ```

use bgform::{gen_hamiltonian, reduce_hamiltonian, ReduceOptions};

fn main() {
    let n = 5;
    let s = gen_hamiltonian(n, 77);
    let out = reduce_hamiltonian(&s, &ReduceOptions::default())
        .expect("random input does not break down");

    println!(
        "Hamiltonian input, n = {n}, ||S||_F = {:.3}",
        s.frobenius_norm()
    );
    println!();
    println!("reduced (2,1) block:");
    for r in 0..n {
        let row: Vec<String> = (0..n)
            .map(|c| format!("{:>10.2e}", out.reduced.s21[(r, c)]))
            .collect();
        println!("  {}", row.join(" "));
    }
    println!();
    println!("off-diagonal norm of the block: {:.3e}", out.offdiag_dev_21);
    println!(
        "s11 below-subdiagonal norm:     {:.3e}",
        out.report.s11_below_subdiag_norm
    );
    println!(
        "symplectic deviation of U:      {:.3e}",
        out.report.symplectic_dev
    );
}
