//! Labeled enumeration, censuses and the deletion/extension experiments.
//!
//! A labeled tournament of size `n` is identified with an integer code below
//! `2^{n(n−1)/2}`: bit `k` orients the `k`-th pair `(i, j)`, `i < j`, in
//! lexicographic order, and a set bit means `i → j`. Searches split the code
//! range into chunks of `2^16`, hand chunks to workers, and merge results in
//! chunk order, so output never depends on the worker count.

use std::collections::BTreeSet;
use std::ops::Range;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{passes_thm1, passes_thm3, trace_identity_check};
use crate::numeric::thm1_eigvec_check;
use crate::tournament::Tournament;

/// Codes must fit in 62 bits.
pub const MAX_CODE_BITS: u32 = 62;

/// Code-space limit for [`equivalence_experiment`], which enumerates the
/// doubly regular side exhaustively.
pub const EXPERIMENT_MAX_BITS: u32 = 32;

pub const CHUNK_SIZE: u64 = 1 << 16;

/// Number of unordered pairs, `n(n − 1)/2`, saturating.
pub fn code_bits(n: usize) -> u64 {
    (n as u64).saturating_mul(n.saturating_sub(1) as u64) / 2
}

fn check_bits(n: usize, limit: u32) -> Result<u32> {
    let bits = code_bits(n);
    if bits > limit as u64 {
        return Err(Error::TooLarge {
            bits: bits.min(u32::MAX as u64) as u32,
            limit,
        });
    }
    Ok(bits as u32)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TournamentCode {
    pub n: usize,
    pub code: u64,
}

impl TournamentCode {
    pub fn new(n: usize, code: u64) -> Result<Self> {
        let bits = check_bits(n, MAX_CODE_BITS)?;
        if code >> bits != 0 {
            return Err(Error::InvalidArgument(format!(
                "code {code} needs more than {bits} bits"
            )));
        }
        Ok(TournamentCode { n, code })
    }

    pub fn encode(t: &Tournament) -> Result<Self> {
        check_bits(t.size(), MAX_CODE_BITS)?;
        let n = t.size();
        let mut code = 0u64;
        let mut k = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if t.beats(i, j) {
                    code |= 1 << k;
                }
                k += 1;
            }
        }
        Ok(TournamentCode { n, code })
    }

    pub fn decode(&self) -> Tournament {
        let mut k = 0;
        Tournament::from_pairs(self.n, |_, _| {
            let bit = (self.code >> k) & 1 == 1;
            k += 1;
            bit
        })
    }
}

/// All codes of size `n`, ascending.
pub fn enumerate_tournaments(n: usize) -> Result<impl Iterator<Item = TournamentCode>> {
    let bits = check_bits(n, MAX_CODE_BITS)?;
    Ok((0..1u64 << bits).map(move |code| TournamentCode { n, code }))
}

/// SplitMix64 (Steele, Lea and Flood), used in counter form: output `k` of
/// the stream seeded with `s` is `mix(s + (k + 1)·0x9E3779B97F4A7C15)`.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn mix(mut z: u64) -> u64 {
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Output number `k` (0-based) of the stream seeded with `seed`.
    pub fn at(seed: u64, k: u64) -> u64 {
        SplitMix64::mix(seed.wrapping_add(k.wrapping_add(1).wrapping_mul(Self::GAMMA)))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(Self::GAMMA);
        SplitMix64::mix(self.state)
    }
}

/// Orients the `k`-th lexicographic pair `i → j` iff the top bit of
/// SplitMix64 output `k` is set.
pub fn random_tournament(n: usize, seed: u64) -> Tournament {
    let mut rng = SplitMix64::new(seed);
    Tournament::from_pairs(n, |_, _| rng.next_u64() >> 63 == 1)
}

fn resolve_workers(workers: usize) -> usize {
    if workers > 0 {
        workers
    } else {
        std::thread::available_parallelism().map_or(1, |n| n.get())
    }
}

/// Applies `job` to consecutive `CHUNK_SIZE` ranges of `0..total` on
/// `workers` threads and returns the results in range order.
fn run_chunked<R, F>(total: u64, workers: usize, job: F) -> Vec<R>
where
    R: Send,
    F: Fn(Range<u64>) -> R + Sync,
{
    let chunks = total.div_ceil(CHUNK_SIZE) as usize;
    let range_of = |c: usize| {
        let start = c as u64 * CHUNK_SIZE;
        start..(start + CHUNK_SIZE).min(total)
    };
    let workers = resolve_workers(workers).min(chunks.max(1));
    if workers <= 1 {
        return (0..chunks).map(|c| job(range_of(c))).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<R>>> = Mutex::new((0..chunks).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let c = next.fetch_add(1, Ordering::Relaxed);
                if c >= chunks {
                    break;
                }
                let r = job(range_of(c));
                slots.lock().expect("worker panicked")[c] = Some(r);
            });
        }
    });
    slots
        .into_inner()
        .expect("worker panicked")
        .into_iter()
        .map(|r| r.expect("every chunk ran"))
        .collect()
}

/// Predicate counts over every labeled tournament of one size.
///
/// Only the counts are serialized; timing and worker count vary between
/// runs and are kept out of the JSON.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub n: usize,
    pub total: u64,
    pub regular: u64,
    pub almost_regular: u64,
    pub doubly_regular: u64,
    pub thm1_pass: u64,
    pub thm3_pass: u64,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub workers: usize,
}

/// Checks the Seidel-spectrum condition after the cheap filters: almost
/// regular scores, then the trace identity, then the exact certificate.
pub fn thm1_filtered(t: &Tournament) -> bool {
    t.is_almost_regular() && trace_identity_check(t) && passes_thm1(t)
}

pub fn census(n: usize, workers: usize) -> Result<CensusReport> {
    let bits = check_bits(n, MAX_CODE_BITS)?;
    let start = Instant::now();
    let total = 1u64 << bits;
    let parts = run_chunked(total, workers, |range| {
        let mut part = CensusReport::default();
        for code in range {
            let t = TournamentCode { n, code }.decode();
            if t.is_regular() {
                part.regular += 1;
                if t.is_doubly_regular() {
                    part.doubly_regular += 1;
                }
            }
            if t.is_almost_regular() {
                part.almost_regular += 1;
                if trace_identity_check(&t) && passes_thm1(&t) {
                    part.thm1_pass += 1;
                }
            }
            if n.is_multiple_of(2) && passes_thm3(&t) {
                part.thm3_pass += 1;
            }
        }
        part
    });
    let mut report = CensusReport {
        n,
        total,
        workers: resolve_workers(workers),
        ..Default::default()
    };
    for p in parts {
        report.regular += p.regular;
        report.almost_regular += p.almost_regular;
        report.doubly_regular += p.doubly_regular;
        report.thm1_pass += p.thm1_pass;
        report.thm3_pass += p.thm3_pass;
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub n: usize,
    pub mode: SearchMode,
    pub budget: Option<u64>,
    pub seed: Option<u64>,
    pub examined: u64,
    pub hit_count: usize,
    /// Ascending, without duplicates.
    pub hits: Vec<u64>,
}

impl SearchReport {
    pub fn tournaments(&self) -> impl Iterator<Item = Tournament> + '_ {
        self.hits
            .iter()
            .map(|&code| TournamentCode { n: self.n, code }.decode())
    }
}

/// Seed of sample `k` in a random search.
pub fn sample_seed(seed: u64, k: u64) -> u64 {
    SplitMix64::at(seed, k)
}

/// Codes of size-`n` tournaments passing the Seidel-spectrum certificate,
/// either over the whole code space or over `budget` seeded random samples.
pub fn search_thm1(
    n: usize,
    mode: SearchMode,
    budget: u64,
    seed: u64,
    workers: usize,
) -> Result<SearchReport> {
    let bits = check_bits(n, MAX_CODE_BITS)?;
    match mode {
        SearchMode::Exhaustive => {
            let total = 1u64 << bits;
            let hits: Vec<u64> = run_chunked(total, workers, |range| {
                range
                    .filter(|&code| thm1_filtered(&TournamentCode { n, code }.decode()))
                    .collect::<Vec<u64>>()
            })
            .into_iter()
            .flatten()
            .collect();
            Ok(SearchReport {
                n,
                mode,
                budget: None,
                seed: None,
                examined: total,
                hit_count: hits.len(),
                hits,
            })
        }
        SearchMode::Random => {
            if budget == 0 {
                return Err(Error::InvalidArgument(
                    "random search needs a budget of at least 1".into(),
                ));
            }
            let found: BTreeSet<u64> = run_chunked(budget, workers, |range| {
                range
                    .filter_map(|k| {
                        let t = random_tournament(n, sample_seed(seed, k));
                        thm1_filtered(&t)
                            .then(|| TournamentCode::encode(&t).expect("size checked").code)
                    })
                    .collect::<Vec<u64>>()
            })
            .into_iter()
            .flatten()
            .collect();
            let hits: Vec<u64> = found.into_iter().collect();
            Ok(SearchReport {
                n,
                mode,
                budget: Some(budget),
                seed: Some(seed),
                examined: budget,
                hit_count: hits.len(),
                hits,
            })
        }
    }
}

/// Both directions of the deletion/extension correspondence at one order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub n_drt: usize,
    /// Labeled doubly regular tournaments of size `n_drt`.
    pub drt_count: usize,
    /// `(tournament, vertex)` deletions certified.
    pub deletions_checked: usize,
    /// Distinct codes among the deletion images.
    pub deletion_images: usize,
    /// Size-`(n_drt − 1)` tournaments passing the Seidel-spectrum certificate.
    pub thm1_hits: usize,
    /// Whether the deletion images are exactly the certificate hits.
    pub images_equal_hits: bool,
    /// `(hit code, code of its one-vertex extension)`, ascending by hit.
    pub extension_map: Vec<(u64, u64)>,
}

/// Deletes every vertex of every labeled doubly regular tournament of size
/// `n_drt` and certifies the result; then extends every certified
/// tournament of size `n_drt − 1` and checks double regularity.
pub fn equivalence_experiment(n_drt: usize, workers: usize) -> Result<EquivalenceReport> {
    if n_drt % 4 != 3 {
        return Err(Error::InvalidArgument(format!(
            "order {n_drt} is not congruent to 3 mod 4"
        )));
    }
    let bits = check_bits(n_drt, EXPERIMENT_MAX_BITS)?;
    let drts: Vec<u64> = run_chunked(1u64 << bits, workers, |range| {
        range
            .filter(|&code| {
                TournamentCode { n: n_drt, code }
                    .decode()
                    .is_doubly_regular()
            })
            .collect::<Vec<u64>>()
    })
    .into_iter()
    .flatten()
    .collect();

    let mut images = BTreeSet::new();
    let mut deletions_checked = 0;
    for &code in &drts {
        let d = TournamentCode { n: n_drt, code }.decode();
        for v in 0..n_drt {
            let deleted = d.delete_vertex(v)?;
            if !passes_thm1(&deleted) {
                return Err(Error::CounterexampleFound(format!(
                    "deleting vertex {v} of DRT code {code} fails the Seidel-spectrum certificate"
                )));
            }
            let residual = thm1_eigvec_check(&deleted, &d.border_vector(v)?)?;
            if residual != 0.0 {
                return Err(Error::CounterexampleFound(format!(
                    "border eigenvector of vertex {v} in DRT code {code} has residual {residual}"
                )));
            }
            images.insert(TournamentCode::encode(&deleted)?.code);
            deletions_checked += 1;
        }
    }

    let hits = search_thm1(n_drt - 1, SearchMode::Exhaustive, 0, 0, workers)?;
    let mut extension_map = Vec::with_capacity(hits.hits.len());
    for (&code, t) in hits.hits.iter().zip(hits.tournaments()) {
        let e = t.extend_to_regular()?;
        if !e.is_doubly_regular() {
            return Err(Error::CounterexampleFound(format!(
                "extension of certified code {code} is not doubly regular"
            )));
        }
        extension_map.push((code, TournamentCode::encode(&e)?.code));
    }
    let hit_set: BTreeSet<u64> = hits.hits.iter().copied().collect();

    Ok(EquivalenceReport {
        n_drt,
        drt_count: drts.len(),
        deletions_checked,
        deletion_images: images.len(),
        thm1_hits: hits.hits.len(),
        images_equal_hits: images == hit_set,
        extension_map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_round_trip_and_bit_order() {
        // bit 0 is pair (0,1), bit 1 is (0,2), bit 2 is (1,2)
        let t = TournamentCode::new(3, 0b101).unwrap().decode();
        assert!(t.beats(0, 1) && t.beats(2, 0) && t.beats(1, 2));
        assert_eq!(TournamentCode::encode(&t).unwrap().code, 0b101);
        assert_eq!(
            TournamentCode::encode(&Tournament::transitive(4))
                .unwrap()
                .code,
            0b111111
        );
        assert!(TournamentCode::new(3, 8).is_err());
        assert_eq!(
            TournamentCode::new(12, 0),
            Err(Error::TooLarge {
                bits: 66,
                limit: 62
            })
        );
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_tournaments(2).unwrap().count(), 2);
        assert_eq!(enumerate_tournaments(4).unwrap().count(), 64);
        assert_eq!(enumerate_tournaments(6).unwrap().count(), 32768);
        let codes: Vec<u64> = enumerate_tournaments(3).unwrap().map(|c| c.code).collect();
        assert_eq!(codes, (0..8).collect::<Vec<_>>());
        assert!(matches!(
            enumerate_tournaments(12),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn splitmix_reference_values() {
        // First outputs for seed 0 from the reference implementation.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(SplitMix64::at(0, 1), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn random_tournaments_are_deterministic() {
        assert_eq!(random_tournament(5, 42), random_tournament(5, 42));
        assert_ne!(random_tournament(8, 1), random_tournament(8, 2));
        assert_eq!(random_tournament(1, 99).size(), 1);
        let t = random_tournament(10, 7);
        assert!(t.to_string().parse::<Tournament>().is_ok());
    }

    #[test]
    fn small_censuses() {
        let c3 = census(3, 1).unwrap();
        assert_eq!((c3.total, c3.regular, c3.doubly_regular), (8, 2, 2));
        let c4 = census(4, 1).unwrap();
        assert_eq!(
            (c4.total, c4.almost_regular, c4.thm1_pass, c4.thm3_pass),
            (64, 24, 0, 0)
        );
        let c2 = census(2, 1).unwrap();
        assert_eq!((c2.almost_regular, c2.thm1_pass, c2.thm3_pass), (2, 2, 2));
        let c5 = census(5, 1).unwrap();
        assert_eq!(
            (c5.regular, c5.doubly_regular, c5.almost_regular),
            (24, 0, 0)
        );
    }

    #[test]
    fn chunking_is_worker_independent() {
        let one = run_chunked(300_000, 1, |r| r.start);
        let many = run_chunked(300_000, 4, |r| r.start);
        assert_eq!(one, many);
        assert_eq!(one.len(), 5);
        assert!(run_chunked(0, 3, |r| r.start).is_empty());
    }

    #[test]
    fn small_searches() {
        let s2 = search_thm1(2, SearchMode::Exhaustive, 0, 0, 1).unwrap();
        assert_eq!(s2.hits, vec![0, 1]);
        assert!(search_thm1(4, SearchMode::Exhaustive, 0, 0, 2)
            .unwrap()
            .hits
            .is_empty());
        let r = search_thm1(2, SearchMode::Random, 16, 5, 1).unwrap();
        assert_eq!(r.hits, vec![0, 1]);
        assert!(search_thm1(4, SearchMode::Random, 0, 5, 1).is_err());
        assert!(matches!(
            search_thm1(12, SearchMode::Exhaustive, 0, 0, 1),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn experiment_order_three() {
        let r = equivalence_experiment(3, 1).unwrap();
        assert_eq!(r.drt_count, 2);
        assert_eq!(r.thm1_hits, 2);
        assert!(r.images_equal_hits);
        assert_eq!(r.extension_map.len(), 2);
        assert!(matches!(
            equivalence_experiment(11, 1),
            Err(Error::TooLarge { bits: 55, .. })
        ));
        assert!(matches!(
            equivalence_experiment(5, 1),
            Err(Error::InvalidArgument(_))
        ));
    }
}
