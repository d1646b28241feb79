//! Deleting one vertex of a doubly regular tournament and adding it back.
//!
//! Every deletion is certified exactly, the border eigenvector
//! `y = 1 + (i − 1)v` is checked over the Gaussian integers, and the
//! one-vertex extension is checked for double regularity.
//!
//! ```text
//! cargo run --example vertex_deletion -- 11
//! ```

use seidel_skew::exact::{certify_thm1_spectrum, certify_thm3_adjacency, seidel_char_poly};
use seidel_skew::numeric::{thm1_conjugate_check, thm1_eigvec_check};
use seidel_skew::Tournament;

fn main() {
    let q: u64 = std::env::args()
        .nth(1)
        .map_or(7, |a| a.parse().expect("order must be an integer"));
    let t = Tournament::paley(q).expect("prime congruent to 3 mod 4");
    for v in 0..t.size() {
        let d = t.delete_vertex(v).unwrap();
        let border = t.border_vector(v).unwrap();
        let seidel = certify_thm1_spectrum(&d);
        let adjacency = certify_thm3_adjacency(&d);
        let residual = thm1_eigvec_check(&d, &border).unwrap();
        let conjugate = thm1_conjugate_check(&d, &border).unwrap();
        let extended = d.extend_to_regular().unwrap();
        println!(
            "vertex {v:>2}: seidel {} adjacency {} eigvec residual {residual} conjugate {conjugate} extension DRT {}",
            seidel.pass, adjacency.pass, extended.is_doubly_regular()
        );
    }
    let d = t.delete_vertex(0).unwrap();
    println!("P_S of the deletion: {}", seidel_char_poly(&d).unwrap());
    println!(
        "P_S of its extension: {}",
        seidel_char_poly(&d.extend_to_regular().unwrap()).unwrap()
    );
}
