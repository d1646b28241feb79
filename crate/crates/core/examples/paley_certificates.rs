//! Exact Seidel-spectrum certificates for quadratic-residue tournaments.
//!
//! ```text
//! cargo run --example paley_certificates -- 3 7 11 19 23
//! ```

use seidel_skew::exact::{
    certify_drt_combinatorial, certify_drt_spectrum, seidel_char_poly, CertPoly,
};
use seidel_skew::Tournament;

fn main() {
    let orders: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("order must be an integer"))
        .collect();
    let orders = if orders.is_empty() {
        vec![3, 7, 11, 19, 23]
    } else {
        orders
    };
    for q in orders {
        let t = match Tournament::paley(q) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("{q}: {e}");
                continue;
            }
        };
        let spectral = certify_drt_spectrum(&t);
        let combinatorial = certify_drt_combinatorial(&t);
        println!("order {q}");
        println!(
            "  P_S(x) = {}",
            seidel_char_poly(&t).expect("skew-symmetric")
        );
        if let Some(CertPoly::Integer(target)) = &spectral.target_poly {
            println!("  target = {target}");
        }
        println!("  spectral certificate: {}", verdict(spectral.pass));
        println!("  pair counts:          {}", verdict(combinatorial.pass));
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}
