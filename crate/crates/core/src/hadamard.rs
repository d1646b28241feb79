//! Skew Hadamard matrices and their correspondence with doubly regular tournaments.

use crate::error::{Error, Result};
use crate::tournament::Tournament;

/// Square ±1 matrix. Validity as a skew Hadamard matrix is a predicate,
/// not a construction-time invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewHadamard {
    n: usize,
    entries: Vec<i8>,
}

impl SkewHadamard {
    /// Accepts any square matrix with entries ±1.
    pub fn from_rows<R: AsRef<[i8]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (x, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            if let Some(y) = row.iter().position(|&e| e != 1 && e != -1) {
                return Err(Error::Parse {
                    line: x + 2,
                    message: format!("entry ({x},{y}) is {} (expected ±1)", row[y]),
                });
            }
            entries.extend_from_slice(row);
        }
        Ok(SkewHadamard { n, entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> i8 {
        self.entries[x * self.n + y]
    }

    pub fn to_rows(&self) -> Vec<Vec<i8>> {
        self.entries
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[i8]>::to_vec)
            .collect()
    }

    /// `H·Hᵀ = nI` and `H + Hᵀ = 2I`, checked exactly over the integers.
    pub fn is_skew_hadamard(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let sym = self.get(x, y) as i32 + self.get(y, x) as i32;
                if sym != if x == y { 2 } else { 0 } {
                    return false;
                }
            }
        }
        for x in 0..n {
            for y in x..n {
                let dot: i64 = (0..n)
                    .map(|k| (self.get(x, k) as i64) * (self.get(y, k) as i64))
                    .sum();
                if dot != if x == y { n as i64 } else { 0 } {
                    return false;
                }
            }
        }
        true
    }

    /// Negates row `j` together with column `j` for every `j` whose first-row
    /// entry is −1. Both defining identities are preserved and the first row
    /// becomes all ones.
    pub fn normalize(&self) -> Result<SkewHadamard> {
        let n = self.n;
        if n == 0 {
            return Ok(self.clone());
        }
        let sign: Vec<i8> = (0..n)
            .map(|j| if j == 0 { 1 } else { self.get(0, j) })
            .collect();
        let mut entries = self.entries.clone();
        for x in 0..n {
            for y in 0..n {
                entries[x * n + y] *= sign[x] * sign[y];
            }
        }
        let h = SkewHadamard { n, entries };
        if (0..n).any(|j| h.get(0, j) != 1) {
            return Err(Error::NormalizationFailed);
        }
        Ok(h)
    }
}

/// Borders `t` with a vertex 0 that loses to every other vertex and returns
/// `H = J − 2A` for the bordered adjacency matrix `A`.
pub fn drt_to_skew_hadamard(t: &Tournament) -> Result<SkewHadamard> {
    if !t.is_doubly_regular() {
        return Err(Error::NotDoublyRegular);
    }
    let n = t.size() + 1;
    let mut entries = vec![1i8; n * n];
    for x in 0..n {
        for y in 0..n {
            let a = match (x, y) {
                (0, _) => false,
                (_, 0) => true,
                _ => t.beats(x - 1, y - 1),
            };
            if x != y && a {
                entries[x * n + y] = -1;
            }
        }
    }
    Ok(SkewHadamard { n, entries })
}

/// Normalizes `h`, forms `A = (J − H)/2` and drops vertex 0.
pub fn skew_hadamard_to_drt(h: &SkewHadamard) -> Result<Tournament> {
    if !h.is_skew_hadamard() {
        return Err(Error::NotSkewHadamard);
    }
    if h.size() == 0 {
        return Err(Error::NotSkewHadamard);
    }
    let h = h.normalize()?;
    let grid: Vec<Vec<u8>> = (1..h.size())
        .map(|x| {
            (1..h.size())
                .map(|y| ((1 - h.get(x, y)) / 2) as u8)
                .collect()
        })
        .collect();
    Tournament::from_adjacency(&grid)
}
