//! Structural invariants, exhaustive at small orders and property-based above.

use num_bigint::BigInt;
use num_complex::Complex64;
use proptest::prelude::*;
use seidel_skew::exact::{
    adjacency_char_poly, certify_drt_combinatorial, certify_drt_spectrum, certify_thm1_spectrum,
    seidel_char_poly,
};
use seidel_skew::hadamard::{drt_to_skew_hadamard, skew_hadamard_to_drt};
use seidel_skew::numeric::{det_complex, relative_error, seidel_eigen, DEFAULT_GROUPING_TOL};
use seidel_skew::search::{
    census, enumerate_tournaments, equivalence_experiment, random_tournament, SplitMix64,
    TournamentCode,
};
use seidel_skew::{SkewHadamard, Tournament};

#[test]
fn score_bound_holds_with_equality_on_almost_regular() {
    for n in [2, 4, 6] {
        let mut equal = 0;
        for code in enumerate_tournaments(n).unwrap() {
            let t = code.decode();
            let excess = t.score_vector().excess_over_bound();
            assert!(excess >= 0, "n = {n}, code {}", code.code);
            assert_eq!(excess == 0, t.is_almost_regular());
            equal += (excess == 0) as u32;
        }
        assert_eq!(equal, [2, 24, 2640][n / 2 - 1]);
    }
    // the transitive tournament of order 4 has scores (3, 2, 1, 0)
    assert_eq!(
        Tournament::transitive(4).score_vector().excess_over_bound(),
        56 - 40
    );
}

#[test]
fn skew_part_kills_ones_exactly_when_regular() {
    for n in 1..=6 {
        for code in enumerate_tournaments(n).unwrap() {
            let t = code.decode();
            let kills = t.skew_part().times_ones().iter().all(|&x| x == 0);
            assert_eq!(kills, t.is_regular(), "n = {n}, code {}", code.code);
        }
    }
}

#[test]
fn drt_certificates_agree_with_pair_counts() {
    for n in 1..=6 {
        for code in enumerate_tournaments(n).unwrap() {
            let t = code.decode();
            let drt = t.is_doubly_regular();
            assert_eq!(
                certify_drt_spectrum(&t).pass,
                drt,
                "n = {n}, code {}",
                code.code
            );
            assert_eq!(certify_drt_combinatorial(&t).pass, drt);
        }
    }
    for q in [3, 7, 11, 19, 23] {
        let t = Tournament::paley(q).unwrap();
        assert!(certify_drt_spectrum(&t).pass && t.is_doubly_regular());
    }
    // Regular circulants of order 7 and 11: only the quadratic-residue
    // connection sets (and their negatives) are doubly regular.
    for (n, sets) in [
        (
            7usize,
            vec![vec![1, 2, 4], vec![3, 5, 6], vec![1, 2, 3], vec![1, 3, 5]],
        ),
        (
            11,
            vec![
                vec![1, 3, 4, 5, 9],
                vec![1, 2, 3, 4, 5],
                vec![1, 2, 3, 4, 6],
            ],
        ),
    ] {
        for s in sets {
            let t = Tournament::circulant(n, &s).unwrap();
            assert!(t.is_regular());
            assert_eq!(
                certify_drt_spectrum(&t).pass,
                t.is_doubly_regular(),
                "n = {n}, {s:?}"
            );
        }
    }
}

#[test]
fn deletion_images_are_the_certified_set() {
    // Order 3: both labeled 2-tournaments come from deleting a vertex of a 3-cycle.
    let r3 = equivalence_experiment(3, 1).unwrap();
    assert!(r3.images_equal_hits);
    assert_eq!((r3.drt_count, r3.deletion_images, r3.thm1_hits), (2, 2, 2));
    // Order 5 has no DRT and order 4 has no certified tournament.
    assert_eq!(census(5, 1).unwrap().doubly_regular, 0);
    assert_eq!(census(4, 1).unwrap().thm1_pass, 0);
    // Order 7: 240 labeled DRTs, 1680 deletions, 240 distinct images.
    let r7 = equivalence_experiment(7, 0).unwrap();
    assert_eq!(
        (
            r7.drt_count,
            r7.deletions_checked,
            r7.deletion_images,
            r7.thm1_hits
        ),
        (240, 1680, 240, 240)
    );
    assert!(r7.images_equal_hits);
    assert_eq!(
        &r7.extension_map
            .iter()
            .map(|e| e.0)
            .take(5)
            .collect::<Vec<_>>(),
        &[1332, 1337, 1363, 1368, 1426]
    );
}

#[test]
fn census_counts() {
    let c6 = census(6, 0).unwrap();
    assert_eq!(
        (
            c6.total,
            c6.regular,
            c6.almost_regular,
            c6.doubly_regular,
            c6.thm1_pass,
            c6.thm3_pass
        ),
        (32768, 0, 2640, 0, 240, 240)
    );
    let c3 = census(3, 2).unwrap();
    assert_eq!(
        (c3.total, c3.regular, c3.almost_regular, c3.doubly_regular),
        (8, 2, 0, 2)
    );
}

#[test]
fn codes_round_trip() {
    let mut rng = SplitMix64::new(1000);
    for _ in 0..1000 {
        let n = 2 + (rng.next_u64() % 7) as usize;
        let bits = n * (n - 1) / 2;
        let code = rng.next_u64() & ((1u64 << bits) - 1);
        let c = TournamentCode::new(n, code).unwrap();
        let t = c.decode();
        assert_eq!(TournamentCode::encode(&t).unwrap(), c);
        assert_eq!(t.size(), n);
    }
}

#[test]
fn seidel_spectrum_is_symmetric_with_symmetric_angles() {
    // Conjugating S gives −S, so θ and −θ share multiplicity and main angle.
    let mut rng = SplitMix64::new(200);
    for case in 0..200 {
        let n = 1 + (rng.next_u64() % 12) as usize;
        let t = random_tournament(n, rng.next_u64());
        let sd = seidel_eigen(&t, DEFAULT_GROUPING_TOL).unwrap();
        let k = sd.distinct_eigenvalues.len();
        for i in 0..k {
            let j = k - 1 - i;
            assert!(
                (sd.distinct_eigenvalues[i] + sd.distinct_eigenvalues[j]).abs() < 1e-9,
                "case {case}"
            );
            assert_eq!(sd.multiplicities[i], sd.multiplicities[j]);
            assert!(
                (sd.main_angles[i] - sd.main_angles[j]).abs() < 1e-9,
                "case {case}"
            );
        }
        assert!((sd.angle_square_sum() - 1.0).abs() < 1e-9);
        assert_eq!(sd.multiplicities.iter().sum::<usize>(), n);
    }
}

#[test]
fn numeric_eigenvalues_are_roots_of_the_exact_polynomial() {
    let mut rng = SplitMix64::new(12);
    for _ in 0..60 {
        let n = 1 + (rng.next_u64() % 12) as usize;
        let t = random_tournament(n, rng.next_u64());
        let p = seidel_char_poly(&t).unwrap();
        let sd = seidel_eigen(&t, DEFAULT_GROUPING_TOL).unwrap();
        for &theta in &sd.distinct_eigenvalues {
            let scale: f64 = p
                .coeffs()
                .iter()
                .enumerate()
                .map(|(j, c)| {
                    c.to_string().parse::<f64>().unwrap().abs()
                        * theta.abs().max(1.0).powi(j as i32)
                })
                .sum();
            let value = p.eval_complex(Complex64::new(theta, 0.0)).norm();
            assert!(
                value <= 1e-8 * scale,
                "P_S({theta}) = {value}, scale {scale}"
            );
        }
    }
}

#[test]
fn seidel_determinant_matches_constant_term() {
    let mut rng = SplitMix64::new(77);
    for _ in 0..40 {
        let n = 1 + (rng.next_u64() % 10) as usize;
        let t = random_tournament(n, rng.next_u64());
        let p = seidel_char_poly(&t).unwrap();
        let k: Vec<Vec<Complex64>> = t
            .skew_part()
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|&x| Complex64::new(0.0, x as f64)).collect())
            .collect();
        let det = det_complex(&k);
        let c0: f64 = p.coeff(0).to_string().parse().unwrap();
        assert!(
            (det.re - c0).abs() < 1e-6 * c0.abs().max(1.0)
                && det.im.abs() < 1e-6 * c0.abs().max(1.0)
        );
        if n % 2 == 1 {
            assert_eq!(c0, 0.0);
        }
    }
}

#[test]
fn every_certified_six_vertex_tournament_is_almost_regular() {
    for code in enumerate_tournaments(6).unwrap() {
        let t = code.decode();
        if certify_thm1_spectrum(&t).pass {
            assert!(t.is_almost_regular());
        }
    }
}

fn arb_tournament(max: usize) -> impl Strategy<Value = Tournament> {
    (1..=max, any::<u64>()).prop_map(|(n, seed)| random_tournament(n, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn seidel_polynomial_parity_and_second_coefficient(t in arb_tournament(14)) {
        let n = t.size();
        let p = seidel_char_poly(&t).unwrap();
        prop_assert_eq!(p.degree(), Some(n));
        for j in 0..=n {
            if (n - j) % 2 == 1 {
                prop_assert_eq!(p.coeff(j), BigInt::from(0));
            }
        }
        let sign: i64 = if n % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(p.coeff(n), BigInt::from(sign));
        if n >= 2 {
            // tr S² = n(n − 1), so the x^{n−2} coefficient is −(−1)ⁿ n(n − 1)/2
            prop_assert_eq!(p.coeff(n - 2), BigInt::from(-sign * (n * (n - 1) / 2) as i64));
        }
    }

    #[test]
    fn trace_identity_and_skew_symmetry(t in arb_tournament(40)) {
        let n = t.size() as i64;
        let k = t.skew_part();
        prop_assert_eq!(k.trace_k_kt(), n * n - n);
        for x in 0..t.size() {
            prop_assert_eq!(k.get(x, x), 0);
            for y in 0..t.size() {
                prop_assert_eq!(k.get(x, y), -k.get(y, x));
            }
        }
    }

    #[test]
    fn text_format_round_trips(t in arb_tournament(70)) {
        let text = t.to_string();
        prop_assert_eq!(text.parse::<Tournament>().unwrap(), t);
    }

    #[test]
    fn adjacency_polynomial_matches_direct_determinant(t in arb_tournament(12), re in -2.0f64..2.0, im in 0.1f64..2.0) {
        let x = Complex64::new(re, im);
        let shifted: Vec<Vec<Complex64>> = t.adjacency().iter().enumerate()
            .map(|(i, r)| r.iter().enumerate()
                .map(|(j, &a)| Complex64::new(a as f64, 0.0) - if i == j { x } else { Complex64::new(0.0, 0.0) })
                .collect())
            .collect();
        let direct = det_complex(&shifted);
        let exact = adjacency_char_poly(&t).eval_complex(x);
        prop_assert!(relative_error(direct, exact) < 1e-10, "{} vs {}", direct, exact);
    }

    #[test]
    fn signed_conjugations_normalize_back(q_index in 0usize..3, signs in any::<u32>()) {
        let q = [3u64, 7, 11][q_index];
        let h = drt_to_skew_hadamard(&Tournament::paley(q).unwrap()).unwrap();
        let m = h.size();
        let d: Vec<i8> = (0..m).map(|j| if j > 0 && (signs >> (j % 32)) & 1 == 1 { -1 } else { 1 }).collect();
        let rows: Vec<Vec<i8>> = h.to_rows().iter().enumerate()
            .map(|(x, r)| r.iter().enumerate().map(|(y, &v)| d[x] * v * d[y]).collect())
            .collect();
        let twisted = SkewHadamard::from_rows(&rows).unwrap();
        prop_assert!(twisted.is_skew_hadamard());
        let t = skew_hadamard_to_drt(&twisted).unwrap();
        prop_assert!(t.is_doubly_regular());
        prop_assert!(certify_drt_spectrum(&t).pass);
    }
}
