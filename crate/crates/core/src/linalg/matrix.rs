use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rational = BigRational;

/// Shorthand for a small integer constant as a [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A sparse vector, sorted by index, with no explicit zeros.
pub type SparseVec = Vec<(usize, Rational)>;

/// `a + c * b` on sorted sparse vectors, dropping zeros.
pub fn add_scaled(a: &[(usize, Rational)], b: &[(usize, Rational)], c: &Rational) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = c * &b[j].1;
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 + c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// An exact rational sparse matrix between based vector spaces.
///
/// Entries are kept in a `BTreeMap` so that iteration order, and hence
/// every downstream computation and report, is reproducible run to run.
/// The zero invariant is maintained by [`SparseMatrix::set`].
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SparseMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sets an entry, removing it when `v` is zero.
    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    /// Adds `v` to the entry at `(r, c)`.
    pub fn add_to(&mut self, r: usize, c: usize, v: &Rational) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        if v.is_zero() {
            return;
        }
        let cur = self.entries.remove(&(r, c)).unwrap_or_else(Rational::zero);
        let next = cur + v;
        if !next.is_zero() {
            self.entries.insert((r, c), next);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut t = SparseMatrix::zero(self.cols, self.rows);
        for (r, c, v) in self.iter() {
            t.entries.insert((c, r), v.clone());
        }
        t
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let other_rows = other.row_major();
        let mut out = SparseMatrix::zero(self.rows, other.cols);
        for (r, c, v) in self.iter() {
            for (cc, w) in &other_rows[c] {
                out.add_to(r, *cc, &(v * w));
            }
        }
        out
    }

    /// `self + c * other`.
    pub fn add_scaled_mat(&self, other: &SparseMatrix, c: &Rational) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (r, cc, v) in other.iter() {
            out.add_to(r, cc, &(c * v));
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> SparseMatrix {
        let mut out = SparseMatrix::zero(self.rows, self.cols);
        if c.is_zero() {
            return out;
        }
        for (r, cc, v) in self.iter() {
            out.entries.insert((r, cc), c * v);
        }
        out
    }

    /// Vertical stack: `self` on top of `other`.
    pub fn stack(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.cols, "column mismatch in stack");
        let mut out = SparseMatrix::zero(self.rows + other.rows, self.cols);
        for (r, c, v) in self.iter() {
            out.entries.insert((r, c), v.clone());
        }
        for (r, c, v) in other.iter() {
            out.entries.insert((r + self.rows, c), v.clone());
        }
        out
    }

    /// Horizontal concatenation: `self` to the left of `other`.
    pub fn hcat(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hcat");
        let mut out = SparseMatrix::zero(self.rows, self.cols + other.cols);
        for (r, c, v) in self.iter() {
            out.entries.insert((r, c), v.clone());
        }
        for (r, c, v) in other.iter() {
            out.entries.insert((r, c + self.cols), v.clone());
        }
        out
    }

    /// Applies `self` to a sparse column vector.
    pub fn apply(&self, v: &[(usize, Rational)]) -> SparseVec {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        let cols = self.col_major();
        for (c, x) in v {
            for (r, w) in &cols[*c] {
                let e = acc.entry(*r).or_insert_with(Rational::zero);
                *e += x * w;
            }
        }
        acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
    }

    /// Rows as sorted sparse vectors.
    pub fn row_major(&self) -> Vec<SparseVec> {
        let mut rows = vec![Vec::new(); self.rows];
        for (r, c, v) in self.iter() {
            rows[r].push((c, v.clone()));
        }
        rows
    }

    /// Columns as sorted sparse vectors.
    pub fn col_major(&self) -> Vec<SparseVec> {
        let mut cols = vec![Vec::new(); self.cols];
        for (r, c, v) in self.iter() {
            cols[c].push((r, v.clone()));
        }
        cols
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<SparseVec>) -> Self {
        assert_eq!(data.len(), rows);
        let mut m = SparseMatrix::zero(rows, cols);
        for (r, row) in data.into_iter().enumerate() {
            for (c, v) in row {
                m.set(r, c, v);
            }
        }
        m
    }

    /// Dense construction helper for tests and small fixtures.
    pub fn from_dense(rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols);
        let mut m = SparseMatrix::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if data[r * cols + c] != 0 {
                    m.set(r, c, rat(data[r * cols + c]));
                }
            }
        }
        m
    }

    /// Reindexes rows and columns by the given permutations
    /// (`new_index = perm[old_index]`).
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> SparseMatrix {
        assert_eq!(row_perm.len(), self.rows);
        assert_eq!(col_perm.len(), self.cols);
        let mut out = SparseMatrix::zero(self.rows, self.cols);
        for (r, c, v) in self.iter() {
            out.entries.insert((row_perm[r], col_perm[c]), v.clone());
        }
        out
    }

    /// Largest absolute value of any numerator or denominator, as bit length.
    /// Used only for diagnostics in benches.
    pub fn coeff_bits(&self) -> u64 {
        self.entries
            .values()
            .map(|v| v.numer().abs().bits().max(v.denom().bits()))
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMatrix {}x{} ({} nnz)", self.rows, self.cols, self.nnz())?;
        if self.rows <= 16 && self.cols <= 16 {
            for r in 0..self.rows {
                let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
                writeln!(f, "  [{}]", row.join(", "))?;
            }
        }
        Ok(())
    }
}
