//! Bordering a doubly regular tournament into a skew Hadamard matrix and back.
//!
//! ```text
//! cargo run --example skew_hadamard -- 11
//! ```

use seidel_skew::exact::certify_skew_hadamard;
use seidel_skew::hadamard::{drt_to_skew_hadamard, skew_hadamard_to_drt};
use seidel_skew::Tournament;

fn main() {
    let q: u64 = std::env::args()
        .nth(1)
        .map_or(7, |a| a.parse().expect("order must be an integer"));
    let t = Tournament::paley(q).expect("prime congruent to 3 mod 4");
    let h = drt_to_skew_hadamard(&t).expect("quadratic-residue tournaments are doubly regular");
    print!("{h}");
    let report = certify_skew_hadamard(&h);
    println!("HHᵀ = {}I and H + Hᵀ = 2I: {}", q + 1, report.pass);

    let back = skew_hadamard_to_drt(&h).expect("normalizable");
    println!("recovered the tournament: {}", back == t);

    // Any skew Hadamard matrix normalizes; flip a row and column sign pair to see it.
    let mut rows = h.to_rows();
    let last = rows.len() - 1;
    for entry in rows[last].iter_mut() {
        *entry = -*entry;
    }
    for row in rows.iter_mut() {
        row[last] = -row[last];
    }
    let twisted = seidel_skew::SkewHadamard::from_rows(&rows).unwrap();
    let recovered = skew_hadamard_to_drt(&twisted).expect("still skew Hadamard");
    println!(
        "after a signed conjugation: doubly regular = {}",
        recovered.is_doubly_regular()
    );
}
