//! Classify matrices as Hamiltonian / skew-Hamiltonian and inspect the
//! structure metrics, including a text-format round trip.
//!
//! ```bash
//! cargo run -p bgform --example check_structure
//! ```

use bgform::{
    classify, format_matrix, gen_hamiltonian, gen_skew_hamiltonian, parse_matrix, BlockMat, Mat,
    DEFAULT_STRUCT_TOL,
};

fn show(label: &str, s: &BlockMat) {
    let rep = classify(s, DEFAULT_STRUCT_TOL);
    println!("{label}");
    println!(
        "  hamiltonian deviation       {:>10.3e}  -> {}",
        rep.hamiltonian_dev, rep.is_hamiltonian
    );
    println!(
        "  skew-hamiltonian deviation  {:>10.3e}  -> {}",
        rep.skew_hamiltonian_dev, rep.is_skew_hamiltonian
    );
    println!(
        "  s11 below-subdiagonal norm  {:>10.3e}",
        rep.hessenberg_dev_11
    );
    println!(
        "  s21 below-diagonal norm     {:>10.3e}",
        rep.upper_triangular_dev_21
    );
    println!();
}

fn main() {
    show(
        "random skew-Hamiltonian (n = 5, seed 7):",
        &gen_skew_hamiltonian(5, 7),
    );
    show(
        "random Hamiltonian (n = 5, seed 7):",
        &gen_hamiltonian(5, 7),
    );
    show(
        "identity (skew-Hamiltonian, trivially):",
        &BlockMat::from_dense(&Mat::identity(10)).unwrap(),
    );

    // the square of a Hamiltonian matrix is skew-Hamiltonian
    let h = gen_hamiltonian(4, 11).to_dense();
    let square = BlockMat::from_dense(&h.matmul(&h)).unwrap();
    show("square of a Hamiltonian matrix:", &square);

    // matrices round-trip exactly through the text format
    let s = gen_skew_hamiltonian(3, 1).to_dense();
    let text = format_matrix(&s);
    let back = parse_matrix(&text).unwrap();
    println!("text format round trip exact: {}", back == s);
    println!(
        "first line of the serialized form: {}",
        text.lines().next().unwrap()
    );
}
