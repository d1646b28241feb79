//! Labeled census of small tournaments.
//!
//! ```text
//! cargo run --release --example census -- 2 3 4 5 6
//! ```

use seidel_skew::search::census;

fn main() {
    let sizes: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("size must be an integer"))
        .collect();
    let sizes = if sizes.is_empty() {
        vec![2, 3, 4, 5, 6]
    } else {
        sizes
    };
    println!(
        "{:>3} {:>9} {:>8} {:>8} {:>6} {:>7} {:>7}",
        "n", "total", "regular", "almost", "DRT", "seidel", "adj"
    );
    for n in sizes {
        match census(n, 0) {
            Ok(c) => println!(
                "{:>3} {:>9} {:>8} {:>8} {:>6} {:>7} {:>7}   ({:.2}s)",
                c.n,
                c.total,
                c.regular,
                c.almost_regular,
                c.doubly_regular,
                c.thm1_pass,
                c.thm3_pass,
                c.elapsed.as_secs_f64()
            ),
            Err(e) => println!("{n:>3} {e}"),
        }
    }
}
