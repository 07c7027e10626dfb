//! Reduce a random unstructured 2n x 2n matrix to Bunse-Gerstner form
//! with both step families and compare the diagnostics.
//!
//! ```bash
//! cargo run -p bgform --example reduce_general
//! ```

use bgform::{gen_general, reduce, ReduceOptions, Variant};

fn main() {
    let n = 6;
    let s = gen_general(n, 42);
    let scale = s.frobenius_norm();
    println!(
        "random general matrix, 2n = {}, ||S||_F = {scale:.3}",
        2 * n
    );
    println!();

    for variant in [Variant::Elementary, Variant::Householder] {
        let red = reduce(&s, &ReduceOptions::with_variant(variant));
        let rep = &red.report;
        println!("{variant} variant:");
        println!("  steps completed             {}", rep.steps_completed);
        println!(
            "  s21 below-diagonal norm     {:>10.3e}",
            rep.s21_below_diag_norm
        );
        println!(
            "  s11 below-subdiagonal norm  {:>10.3e}",
            rep.s11_below_subdiag_norm
        );
        println!(
            "  symplectic deviation of U   {:>10.3e}",
            rep.symplectic_dev
        );
        println!(
            "  trace power errors          {:.1e} / {:.1e} / {:.1e}",
            rep.trace_power_errors[0], rep.trace_power_errors[1], rep.trace_power_errors[2]
        );
        let max_mult = red
            .transform
            .factor_list
            .iter()
            .flat_map(|f| f.w.iter())
            .fold(0.0f64, |m, w| m.max(w.abs()));
        match variant {
            Variant::Elementary => {
                println!("  largest multiplier |w_j|    {max_mult:.3} (pivoting bounds it by 1)")
            }
            Variant::Householder => {
                println!("  reflector entries bounded   {max_mult:.3} (unit vectors)")
            }
        }
        println!();
    }

    println!("the reduced (1,1) block is upper Hessenberg and the (2,1) block");
    println!("upper triangular; for structured inputs see the other examples");
}
