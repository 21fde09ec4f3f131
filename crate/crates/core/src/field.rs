//! Matrices over prime fields GF(q) and the exact linear algebra needed to
//! turn them into matroids: column-subset rank, row-space comparison and
//! codeword enumeration for brute-force minimum distance.

use std::fmt;

use crate::error::{Error, Result};
use crate::set::{ElementSet, MAX_LABEL};

/// Largest supported field modulus.
pub const MAX_MODULUS: u32 = 251;

/// Default cap on the number of codewords an enumeration may visit.
pub const DEFAULT_CODEWORD_CAP: u64 = 1 << 24;

pub fn is_prime(q: u32) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

fn inverse_mod(a: u32, q: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(q));
    // Fermat: a^(q-2) mod q.
    let (mut base, mut exp, mut acc) = (a % q, q - 2, 1u32);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        exp >>= 1;
    }
    acc
}

/// A generator matrix over GF(q) with columns labelled `1..=cols`.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    q: u32,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
    /// Column `c` as a bit word (bit `r` = entry `(r, c)`); only for q = 2
    /// with at most 64 rows.
    packed: Option<Vec<u64>>,
}

impl FieldMatrix {
    /// Builds a matrix from rows of residues. Rejects non-prime moduli,
    /// ragged rows and entries outside `0..q`.
    pub fn new(q: u32, rows: Vec<Vec<u32>>) -> Result<Self> {
        if !is_prime(q) || q > MAX_MODULUS {
            return Err(Error::InvalidMatrix(format!(
                "field size {q} is not a prime in 2..={MAX_MODULUS}"
            )));
        }
        let row_count = rows.len();
        let cols = rows.first().map_or(0, Vec::len);
        if row_count == 0 || cols == 0 {
            return Err(Error::InvalidMatrix("matrix must have at least one row and one column".into()));
        }
        if cols > MAX_LABEL {
            return Err(Error::InvalidMatrix(format!("at most {MAX_LABEL} columns are supported")));
        }
        let mut entries = Vec::with_capacity(row_count * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::InvalidMatrix(format!(
                    "row {} has {} entries, expected {cols}",
                    i + 1,
                    row.len()
                )));
            }
            if let Some(&e) = row.iter().find(|&&e| e >= q) {
                return Err(Error::InvalidMatrix(format!("entry {e} is not a residue mod {q}")));
            }
            entries.extend_from_slice(row);
        }
        let packed = (q == 2 && row_count <= 64).then(|| {
            (0..cols)
                .map(|c| {
                    (0..row_count).fold(0u64, |w, r| w | (u64::from(entries[r * cols + c]) << r))
                })
                .collect()
        });
        Ok(FieldMatrix {
            q,
            rows: row_count,
            cols,
            entries,
            packed,
        })
    }

    /// Vandermonde matrix with rows `x^0, …, x^(k-1)` over the given points.
    pub fn vandermonde(q: u32, k: usize, points: &[u32]) -> Result<Self> {
        let rows = (0..k)
            .map(|i| {
                points
                    .iter()
                    .map(|&x| (0..i).fold(1u32, |acc, _| acc * (x % q) % q))
                    .collect()
            })
            .collect();
        Self::new(q, rows)
    }

    /// Binary simplex code generator: all nonzero columns of length `k`,
    /// column `j` being the binary expansion of `j`.
    pub fn binary_simplex(k: usize) -> Result<Self> {
        let n = (1usize << k) - 1;
        let rows = (0..k)
            .map(|r| (1..=n).map(|j| ((j >> r) & 1) as u32).collect())
            .collect();
        Self::new(2, rows)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn columns(&self) -> ElementSet {
        ElementSet::full(self.cols)
    }

    /// Entry at 0-based row `r` and 1-based column label `c`.
    pub fn entry(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.cols + (c - 1)]
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    fn check_columns(&self, s: ElementSet) -> Result<()> {
        if s.is_subset(self.columns()) {
            Ok(())
        } else {
            Err(Error::InvalidSubset(format!(
                "{s} is not a subset of the columns 1..={}",
                self.cols
            )))
        }
    }

    /// Rank over GF(q) of the submatrix formed by the columns in `s`.
    pub fn rank_of_columns(&self, s: ElementSet) -> Result<usize> {
        self.check_columns(s)?;
        Ok(self.column_rank(s))
    }

    pub(crate) fn column_rank(&self, s: ElementSet) -> usize {
        match &self.packed {
            Some(words) => binary_rank(s.iter().map(|c| words[c - 1])),
            None => self.column_rank_modular(s),
        }
    }

    /// Column-subset rank through modular elimination regardless of q.
    pub fn column_rank_modular(&self, s: ElementSet) -> usize {
        let cols: Vec<usize> = s.iter().collect();
        let mut m: Vec<Vec<u32>> = (0..self.rows)
            .map(|r| cols.iter().map(|&c| self.entry(r, c)).collect())
            .collect();
        eliminate(&mut m, self.q)
    }

    /// Rank of the whole matrix.
    pub fn rank(&self) -> usize {
        self.column_rank(self.columns())
    }

    /// Reduced row-echelon form with zero rows dropped.
    pub fn rref_rows(&self) -> Vec<Vec<u32>> {
        let mut m: Vec<Vec<u32>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let rank = eliminate(&mut m, self.q);
        m.truncate(rank);
        m
    }

    /// True iff both matrices generate the same code.
    pub fn row_space_equal(&self, other: &FieldMatrix) -> Result<bool> {
        if self.q != other.q || self.cols != other.cols {
            return Err(Error::IncompatibleMatrices(format!(
                "GF({})^{} vs GF({})^{}",
                self.q, self.cols, other.q, other.cols
            )));
        }
        Ok(self.rref_rows() == other.rref_rows())
    }

    /// Number of codewords, `q^rank`, saturating.
    pub fn codeword_count(&self) -> u64 {
        (0..self.rank()).fold(1u64, |acc, _| acc.saturating_mul(u64::from(self.q)))
    }

    /// Every codeword of the row space exactly once, the zero word first.
    pub fn codewords(&self, cap: u64) -> Result<Codewords> {
        let count = self.codeword_count();
        if count > cap {
            return Err(Error::ResourceLimit(format!(
                "code has {count} codewords, cap is {cap}"
            )));
        }
        let basis = self.rref_rows();
        Ok(Codewords {
            q: self.q,
            coefficients: vec![0; basis.len()],
            word: vec![0; self.cols],
            basis,
            done: false,
        })
    }

    /// Minimum Hamming weight of the nonzero codewords of the code punctured
    /// to the columns `s`.
    pub fn min_distance_bruteforce(&self, s: ElementSet, cap: u64) -> Result<usize> {
        self.check_columns(s)?;
        let cols: Vec<usize> = s.iter().map(|c| c - 1).collect();
        let best = self
            .codewords(cap)?
            .map(|w| cols.iter().filter(|&&c| w[c] != 0).count())
            .filter(|&wt| wt > 0)
            .min();
        best.ok_or_else(|| Error::DegenerateCode(format!("the code punctured to {s} is zero")))
    }

    /// The matrix in the text format read by [`crate::input`].
    pub fn to_text(&self) -> String {
        let mut out = format!("q {}\n", self.q);
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(u32::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldMatrix(GF({}) {}x{})", self.q, self.rows, self.cols)
    }
}

/// Gauss-Jordan elimination in place; returns the rank. Pivot rows end up
/// first, normalised to leading coefficient 1.
fn eliminate(m: &mut [Vec<u32>], q: u32) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let inv = inverse_mod(m[rank][c], q);
        for v in m[rank].iter_mut() {
            *v = *v * inv % q;
        }
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (v, &p) in row.iter_mut().zip(&pivot) {
                *v = (*v + q - f * p % q) % q;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Rank of a family of GF(2) vectors packed into words, via an XOR basis
/// keyed by leading bit.
fn binary_rank(vectors: impl Iterator<Item = u64>) -> usize {
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for mut v in vectors {
        while v != 0 {
            let top = 63 - v.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = v;
                rank += 1;
                break;
            }
            v ^= basis[top];
        }
    }
    rank
}

/// Iterator over the codewords of a [`FieldMatrix`].
pub struct Codewords {
    q: u32,
    basis: Vec<Vec<u32>>,
    coefficients: Vec<u32>,
    word: Vec<u32>,
    done: bool,
}

impl Iterator for Codewords {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out = self.word.clone();
        // Odometer increment of the coefficients; the word is kept in sync by
        // adding the basis row of the digit that moved.
        let q = self.q;
        let mut i = 0;
        loop {
            if i == self.coefficients.len() {
                self.done = true;
                break;
            }
            self.coefficients[i] += 1;
            let wraps = self.coefficients[i] == q;
            if wraps {
                self.coefficients[i] = 0;
            }
            for (w, &b) in self.word.iter_mut().zip(&self.basis[i]) {
                *w = (*w + b) % q;
            }
            if !wraps {
                break;
            }
            i += 1;
        }
        Some(out)
    }
}
