//! Numeric Seidel spectra, main angles and the rank-one determinant identity.
//!
//! Reads a tournament file (or `-` for stdin); without an argument it uses
//! the quadratic-residue tournament of order 7 with vertex 0 removed.
//!
//! ```text
//! cargo run --example seidel_spectrum
//! cargo run --bin seidel-skew -- gen random 9 --seed 3 | cargo run --example seidel_spectrum -- -
//! ```

use std::io::Read;

use num_complex::Complex64;
use seidel_skew::numeric::{
    almost_regular_spectral_test, corollary1_check, rank_one_update_direct, rank_one_update_eval,
    relative_error, seidel_eigen, seidel_matrix, DEFAULT_GROUPING_TOL,
};
use seidel_skew::Tournament;

fn main() {
    let t = match std::env::args().nth(1) {
        None => Tournament::paley(7).unwrap().delete_vertex(0).unwrap(),
        Some(path) => {
            let mut text = String::new();
            if path == "-" {
                std::io::stdin().read_to_string(&mut text).unwrap();
            } else {
                text = std::fs::read_to_string(&path).unwrap();
            }
            text.parse().unwrap_or_else(|e| panic!("{path}: {e}"))
        }
    };

    let sd = seidel_eigen(&t, DEFAULT_GROUPING_TOL).expect("well separated spectrum");
    println!("{:>22} {:>5} {:>22}", "eigenvalue", "mult", "main angle");
    for ((value, mult), angle) in sd
        .distinct_eigenvalues
        .iter()
        .zip(&sd.multiplicities)
        .zip(&sd.main_angles)
    {
        println!("{value:>22.16} {mult:>5} {angle:>22.16}");
    }
    println!("Σβ² = {:.16}", sd.angle_square_sum());
    println!(
        "almost regular (spectral test): {}",
        almost_regular_spectral_test(&t, 1e-8)
    );

    let s = seidel_matrix(&t);
    let c = Complex64::new(0.7, -1.1);
    let x = Complex64::new(0.3, 0.45);
    let via_angles = rank_one_update_eval(&sd, c, x).unwrap();
    let direct = rank_one_update_direct(&s, c, x);
    println!(
        "det(S + cJ − xI): {via_angles:.12} vs {direct:.12}, relative error {:.2e}",
        relative_error(via_angles, direct)
    );

    let samples = [
        Complex64::new(0.25, 0.5),
        Complex64::new(-1.5, 0.1),
        Complex64::new(2.0, -0.3),
    ];
    println!(
        "adjacency identity residual: {:.2e}",
        corollary1_check(&t, &samples).unwrap()
    );
}
