//! Residual growth across problem sizes: how far the reduced (2,1)
//! block of skew-Hamiltonian inputs is from zero, with one and two
//! reduction sweeps.
//!
//! ```bash
//! cargo run -p bgform --example residual_sweep --release
//! ```

use bgform::{median, run_bench, BenchConfig, HouseholderSign, Variant};

fn main() {
    let mut cfg = BenchConfig {
        n_min: 4,
        n_max: 24,
        trials: 7,
        variant: Variant::Householder,
        passes: 1,
        seed: 1,
        householder_sign: HouseholderSign::Stable,
    };
    let one = run_bench(&cfg);
    cfg.passes = 2;
    let two = run_bench(&cfg);

    println!(
        "median residuals over {} trials per size (householder variant)",
        cfg.trials
    );
    println!();
    println!(
        "{:>4} {:>14} {:>14} {:>14}",
        "n", "s21 (1 pass)", "s21 (2 passes)", "arme resid"
    );
    for n in cfg.n_min..=cfg.n_max {
        let m1 = median(
            &one.iter()
                .filter(|r| r.n == n)
                .map(|r| r.s21_residual)
                .collect::<Vec<_>>(),
        );
        let m2 = median(
            &two.iter()
                .filter(|r| r.n == n)
                .map(|r| r.s21_residual)
                .collect::<Vec<_>>(),
        );
        let ma = median(
            &one.iter()
                .filter(|r| r.n == n)
                .map(|r| r.arme_residual)
                .collect::<Vec<_>>(),
        );
        println!("{n:>4} {m1:>14.3e} {m2:>14.3e} {ma:>14.3e}");
    }
    println!();
    println!("a second sweep re-runs the reduction on the output and composes");
    println!("the transforms; it keeps the (2,1) residual at the roundoff floor");
}
