//! Searching for tournaments with the deleted-DRT Seidel spectrum, and the
//! exhaustive deletion/extension correspondence at order 7.
//!
//! ```text
//! cargo run --release --example spectrum_search -- 7
//! ```

use seidel_skew::search::{equivalence_experiment, search_thm1, SearchMode};

fn main() {
    let n_drt: usize = std::env::args()
        .nth(1)
        .map_or(7, |a| a.parse().expect("order must be an integer"));

    let random = search_thm1(n_drt - 1, SearchMode::Random, 20_000, 1, 0).unwrap();
    println!(
        "random search, size {}: {} distinct hits in {} samples",
        n_drt - 1,
        random.hit_count,
        random.examined
    );

    let report = equivalence_experiment(n_drt, 0).unwrap();
    println!(
        "labeled DRTs of order {}: {}",
        report.n_drt, report.drt_count
    );
    println!("vertex deletions certified: {}", report.deletions_checked);
    println!("distinct deletion images: {}", report.deletion_images);
    println!(
        "size-{} tournaments passing the certificate: {}",
        n_drt - 1,
        report.thm1_hits
    );
    println!(
        "images coincide with the hits: {}",
        report.images_equal_hits
    );
    for (hit, ext) in report.extension_map.iter().take(5) {
        println!("  {hit} extends to DRT code {ext}");
    }
}
