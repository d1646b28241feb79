//! Tournaments, their skew parts and the combinatorial predicates on scores.
//!
//! A [`Tournament`] stores one out-neighbor bitset per vertex. Every
//! constructor checks `A + Aᵀ = J − I`, so a value of this type is always a
//! complete oriented graph and never changes after construction.

use crate::error::{Error, Result};

/// Largest vertex count accepted by the text parsers.
pub const MAX_VERTICES: usize = 4096;

/// A complete oriented graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for Tournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut list = f.debug_list();
        for x in 0..self.n {
            let row: String = (0..self.n)
                .map(|y| if self.beats(x, y) { '1' } else { '0' })
                .collect();
            list.entry(&row);
        }
        list.finish()
    }
}

impl Tournament {
    fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        Tournament {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    fn set(&mut self, x: usize, y: usize) {
        self.rows[x * self.words + y / 64] |= 1u64 << (y % 64);
    }

    /// Builds a tournament from a 0/1 adjacency grid.
    pub fn from_adjacency<R: AsRef<[u8]>>(grid: &[R]) -> Result<Self> {
        let n = grid.len();
        for (x, row) in grid.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::NotATournament(format!(
                    "row {x} has length {} in a grid of size {n}",
                    row.len()
                )));
            }
            if row[x] != 0 {
                return Err(Error::NotATournament(format!(
                    "diagonal entry {x} is nonzero"
                )));
            }
        }
        let mut t = Tournament::empty(n);
        for x in 0..n {
            for y in (x + 1)..n {
                match (grid[x].as_ref()[y], grid[y].as_ref()[x]) {
                    (1, 0) => t.set(x, y),
                    (0, 1) => t.set(y, x),
                    (a, b) => {
                        return Err(Error::NotATournament(format!(
                            "pair ({x},{y}) has entries {a} and {b}"
                        )))
                    }
                }
            }
        }
        Ok(t)
    }

    /// Builds a tournament by asking `i_beats_j(i, j)` for every pair `i < j`.
    pub fn from_pairs(n: usize, mut i_beats_j: impl FnMut(usize, usize) -> bool) -> Self {
        let mut t = Tournament::empty(n);
        for i in 0..n {
            for j in (i + 1)..n {
                if i_beats_j(i, j) {
                    t.set(i, j);
                } else {
                    t.set(j, i);
                }
            }
        }
        t
    }

    /// The transitive tournament in which `i` beats `j` whenever `i < j`.
    pub fn transitive(n: usize) -> Self {
        Tournament::from_pairs(n, |_, _| true)
    }

    /// Cyclic tournament on `Z_n` where `x → y` iff `y − x mod n` lies in `connection`.
    ///
    /// `connection` must contain exactly one of `d` and `n − d` for every
    /// nonzero residue `d`.
    pub fn circulant(n: usize, connection: &[usize]) -> Result<Self> {
        let mut in_set = vec![false; n];
        for &d in connection {
            if d == 0 || d >= n {
                return Err(Error::NotATournament(format!(
                    "connection element {d} not a nonzero residue mod {n}"
                )));
            }
            in_set[d] = true;
        }
        for d in 1..n {
            if in_set[d] == in_set[n - d] {
                return Err(Error::NotATournament(format!(
                    "connection set must contain exactly one of {d} and {}",
                    n - d
                )));
            }
        }
        Ok(Tournament::from_pairs(n, |i, j| in_set[j - i]))
    }

    /// The quadratic-residue tournament on `Z_q`: `x → y` iff `y − x` is a
    /// nonzero square mod `q`. Requires `q` prime with `q ≡ 3 (mod 4)`.
    pub fn paley(q: u64) -> Result<Self> {
        if q % 4 != 3 || !is_prime(q) || q as usize > MAX_VERTICES {
            return Err(Error::BadModulus(q));
        }
        let q = q as usize;
        let mut residue = vec![false; q];
        for x in 1..q {
            residue[x * x % q] = true;
        }
        let squares: Vec<usize> = (1..q).filter(|&d| residue[d]).collect();
        Tournament::circulant(q, &squares)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `A_{xy}`: whether `x` beats `y`.
    #[inline]
    pub fn beats(&self, x: usize, y: usize) -> bool {
        (self.rows[x * self.words + y / 64] >> (y % 64)) & 1 == 1
    }

    fn row(&self, x: usize) -> &[u64] {
        &self.rows[x * self.words..(x + 1) * self.words]
    }

    /// 0/1 adjacency matrix, row-major.
    pub fn adjacency(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.beats(x, y) as u8).collect())
            .collect()
    }

    /// Indicator of the out-neighbors of `x`, one entry per vertex.
    pub fn out_indicator(&self, x: usize) -> Vec<u8> {
        (0..self.n).map(|y| self.beats(x, y) as u8).collect()
    }

    /// Out-neighbor indicator of `v` restricted to the other vertices, in
    /// the order [`Tournament::delete_vertex`] keeps them.
    pub fn border_vector(&self, v: usize) -> Result<Vec<u8>> {
        if v >= self.n {
            return Err(Error::IndexOutOfRange {
                index: v,
                size: self.n,
            });
        }
        Ok((0..self.n)
            .filter(|&y| y != v)
            .map(|y| self.beats(v, y) as u8)
            .collect())
    }

    pub fn out_degree(&self, x: usize) -> usize {
        self.row(x).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `|N⁺(u) ∩ N⁺(v)|`.
    pub fn common_out_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn score_vector(&self) -> ScoreVector {
        ScoreVector((0..self.n).map(|x| self.out_degree(x)).collect())
    }

    /// All scores equal `(n − 1)/2`; false for even `n`.
    pub fn is_regular(&self) -> bool {
        self.n % 2 == 1 && (0..self.n).all(|x| self.out_degree(x) == (self.n - 1) / 2)
    }

    /// `n ≥ 2` even, with exactly `n/2` scores equal to `n/2` and the rest
    /// equal to `(n − 2)/2`.
    pub fn is_almost_regular(&self) -> bool {
        self.n >= 2 && self.n.is_multiple_of(2) && self.score_vector().is_almost_regular()
    }

    /// Regular, and every pair of distinct vertices has the same number of
    /// common out-neighbors (necessarily `(n − 3)/4`).
    pub fn is_doubly_regular(&self) -> bool {
        if !self.is_regular() {
            return false;
        }
        if self.n < 3 {
            return true;
        }
        let lambda = self.common_out_neighbors(0, 1);
        (0..self.n).all(|u| ((u + 1)..self.n).all(|v| self.common_out_neighbors(u, v) == lambda))
    }

    /// Principal subtournament on all vertices except `v`, in the original order.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        if v >= self.n {
            return Err(Error::IndexOutOfRange {
                index: v,
                size: self.n,
            });
        }
        let keep: Vec<usize> = (0..self.n).filter(|&x| x != v).collect();
        Ok(Tournament::from_pairs(self.n - 1, |i, j| {
            self.beats(keep[i], keep[j])
        }))
    }

    /// Adds vertex `m` (placed last) beating exactly the vertices of score
    /// `m/2`, which turns an almost regular tournament of even size `m` into
    /// a regular one.
    pub fn extend_to_regular(&self) -> Result<Self> {
        if !self.is_almost_regular() {
            return Err(Error::NotAlmostRegular);
        }
        let m = self.n;
        let scores = self.score_vector();
        let mut t = Tournament::empty(m + 1);
        for x in 0..m {
            for y in 0..m {
                if self.beats(x, y) {
                    t.set(x, y);
                }
            }
            if scores.0[x] == m / 2 {
                t.set(m, x);
            } else {
                t.set(x, m);
            }
        }
        Ok(t)
    }

    /// The skew part `K = A − Aᵀ`; the Seidel matrix is `S = iK`.
    pub fn skew_part(&self) -> SkewPart {
        let n = self.n;
        let mut entries = vec![0i8; n * n];
        for x in 0..n {
            for y in 0..n {
                if x != y {
                    entries[x * n + y] = if self.beats(x, y) { 1 } else { -1 };
                }
            }
        }
        SkewPart { n, entries }
    }
}

/// Score vector `s = A·1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreVector(Vec<usize>);

impl ScoreVector {
    pub fn scores(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `sᵀs`.
    pub fn sum_of_squares(&self) -> u64 {
        self.0.iter().map(|&s| (s * s) as u64).sum()
    }

    /// `4·sᵀs − n(n² − 2n + 2)`, which is non-negative for even `n` and zero
    /// exactly on almost regular score vectors.
    pub fn excess_over_bound(&self) -> i64 {
        let n = self.0.len() as i64;
        4 * self.sum_of_squares() as i64 - n * (n * n - 2 * n + 2)
    }

    fn is_almost_regular(&self) -> bool {
        let n = self.0.len();
        if n % 2 == 1 {
            return false;
        }
        let high = self.0.iter().filter(|&&s| s == n / 2).count();
        if n == 0 {
            return false;
        }
        let low = self.0.iter().filter(|&&s| s == (n - 2) / 2).count();
        high == n / 2 && low == n / 2
    }
}

/// Real skew-symmetric matrix `K = A − Aᵀ` with entries in {−1, 0, 1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewPart {
    n: usize,
    entries: Vec<i8>,
}

impl SkewPart {
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> i8 {
        self.entries[x * self.n + y]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.get(x, y) as i64).collect())
            .collect()
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.get(x, y) as i64 * v[y]).sum())
            .collect()
    }

    /// `K·1`; zero exactly when the tournament is regular.
    pub fn times_ones(&self) -> Vec<i64> {
        self.apply(&vec![1; self.n])
    }

    /// `K²·1`.
    pub fn squared_times_ones(&self) -> Vec<i64> {
        self.apply(&self.times_ones())
    }

    /// `trace(K·Kᵀ)`, the sum of squared entries.
    pub fn trace_k_kt(&self) -> i64 {
        self.entries.iter().map(|&e| (e as i64) * (e as i64)).sum()
    }
}

pub(crate) fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
