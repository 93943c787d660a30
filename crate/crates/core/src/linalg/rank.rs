use std::collections::BTreeMap;

use num::{BigInt, One, Signed, Zero};

use super::matrix::{add_scaled, Rational, SparseMatrix, SparseVec};

type IntRow = Vec<(usize, BigInt)>;

/// Clears denominators and divides out the content of a row.
/// Row scaling leaves the rank unchanged.
fn integerize(row: &[(usize, Rational)]) -> IntRow {
    if row.is_empty() {
        return Vec::new();
    }
    let mut lcm = BigInt::one();
    for (_, v) in row {
        lcm = num::integer::lcm(lcm, v.denom().clone());
    }
    let mut out: IntRow = row.iter().map(|(c, v)| (*c, v.numer() * (&lcm / v.denom()))).collect();
    let mut g = BigInt::zero();
    for (_, v) in &out {
        g = num::integer::gcd(g, v.clone());
    }
    if !g.is_one() && !g.is_zero() {
        for (_, v) in &mut out {
            *v /= &g;
        }
    }
    out
}

/// Exact rank over the rationals.
///
/// Fraction-free sparse Gaussian elimination. The pivot is chosen by a
/// Markowitz-style score `(row_nnz - 1) * (col_nnz - 1)` with a strong
/// preference for unit entries, which keeps coefficient growth down on the
/// near-unimodular matrices this crate produces. Rows are gcd-normalized
/// after every update.
pub fn rank(m: &SparseMatrix) -> usize {
    let mut rows: Vec<IntRow> =
        m.row_major().iter().map(|r| integerize(r)).filter(|r| !r.is_empty()).collect();
    rank_int_rows(&mut rows)
}

pub(crate) fn rank_int_rows(rows: &mut Vec<IntRow>) -> usize {
    let mut rank = 0;
    let mut active: Vec<bool> = vec![true; rows.len()];

    loop {
        // Column occupancy among active rows.
        let mut col_count: BTreeMap<usize, usize> = BTreeMap::new();
        for (i, row) in rows.iter().enumerate() {
            if !active[i] {
                continue;
            }
            for (c, _) in row {
                *col_count.entry(*c).or_insert(0) += 1;
            }
        }
        if col_count.is_empty() {
            break;
        }

        // Markowitz pivot search; unit entries first.
        let mut best: Option<(bool, usize, usize, usize)> = None; // (non_unit, score, row, col)
        for (i, row) in rows.iter().enumerate() {
            if !active[i] || row.is_empty() {
                continue;
            }
            let rn = row.len() - 1;
            for (c, v) in row {
                let cn = col_count[c] - 1;
                let key = (!v.abs().is_one(), rn * cn, i, *c);
                if best.map_or(true, |b| key < b) {
                    best = Some(key);
                }
            }
        }
        let (_, _, pi, pc) = best.unwrap();

        let pivot_row = rows[pi].clone();
        let pivot_val = pivot_row.iter().find(|(c, _)| *c == pc).unwrap().1.clone();
        active[pi] = false;
        rank += 1;

        for (i, row) in rows.iter_mut().enumerate() {
            if !active[i] {
                continue;
            }
            let coeff = match row.iter().find(|(c, _)| *c == pc) {
                Some((_, v)) => v.clone(),
                None => continue,
            };
            // row := pivot_val * row - coeff * pivot_row, then divide by content.
            let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (c, v) in row.iter() {
                acc.insert(*c, v * &pivot_val);
            }
            for (c, v) in &pivot_row {
                let e = acc.entry(*c).or_insert_with(BigInt::zero);
                *e -= v * &coeff;
            }
            let mut next: IntRow = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            let mut g = BigInt::zero();
            for (_, v) in &next {
                g = num::integer::gcd(g, v.clone());
            }
            if !g.is_zero() && !g.is_one() {
                for (_, v) in &mut next {
                    *v /= &g;
                }
            }
            if next.is_empty() {
                active[i] = false;
            }
            *row = next;
        }
    }
    rank
}

/// A row-echelon accumulator over the rationals.
///
/// Rows are reduced against earlier pivots at insertion time; full reduction
/// happens lazily in [`Echelon::reduce`]. Pivots are leftmost nonzero
/// columns, so the caller controls elimination priority by column numbering.
#[derive(Default, Clone)]
pub struct Echelon {
    // pivot column -> row with leading coefficient 1, sorted by column
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_cols(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Fully reduces `v` against the echelon rows.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        loop {
            let hit = v.iter().find(|(c, _)| self.rows.contains_key(c)).map(|(c, x)| (*c, x.clone()));
            match hit {
                None => return v,
                Some((c, x)) => {
                    let coeff = -x;
                    v = add_scaled(&v, &self.rows[&c], &coeff);
                }
            }
        }
    }

    /// Reduces and inserts; returns the new pivot column if the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> Option<usize> {
        let v = self.reduce(v);
        if v.is_empty() {
            return None;
        }
        let (pc, lead) = (v[0].0, v[0].1.clone());
        let inv = Rational::one() / lead;
        let row: SparseVec = v.into_iter().map(|(c, x)| (c, &x * &inv)).collect();
        self.rows.insert(pc, row);
        Some(pc)
    }
}

/// Basis of the kernel of `m`, one sparse vector per free column.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<SparseVec> {
    // Echelonize the rows, then back-solve pivots in decreasing order.
    let mut ech = Echelon::new();
    for row in m.row_major() {
        ech.insert(row);
    }
    let pivots: Vec<usize> = ech.pivot_cols().collect();
    let mut basis = Vec::new();
    for c in 0..m.cols() {
        if pivots.binary_search(&c).is_ok() {
            continue;
        }
        let mut x: BTreeMap<usize, Rational> = BTreeMap::new();
        x.insert(c, Rational::one());
        // Each echelon row has leading coefficient 1 at its pivot and tail
        // support strictly to the right, so decreasing pivot order resolves
        // every pivot coordinate from already-known ones.
        for &p in pivots.iter().rev() {
            let mut s = Rational::zero();
            for (col, v) in &ech.rows[&p] {
                if *col > p {
                    if let Some(xv) = x.get(col) {
                        s += v * xv;
                    }
                }
            }
            if !s.is_zero() {
                x.insert(p, -s);
            }
        }
        let v: SparseVec = x.into_iter().collect();
        debug_assert!(m.apply(&v).is_empty());
        basis.push(v);
    }
    basis
}

/// Expresses vectors in the span of a fixed generating set, with exact
/// failure when a target is outside the span.
pub struct SpanSolver {
    dim: usize,
    // echelon rows augmented with combination coordinates at dim + i
    ech: Echelon,
    n_gens: usize,
}

impl SpanSolver {
    pub fn new(dim: usize, generators: &[SparseVec]) -> Self {
        let mut ech = Echelon::new();
        for (i, g) in generators.iter().enumerate() {
            let mut aug = g.clone();
            aug.push((dim + i, Rational::one()));
            ech.insert(aug);
        }
        SpanSolver { dim, ech, n_gens: generators.len() }
    }

    /// Returns coefficients `c` with `sum c_i gen_i = v`, or `None` if `v`
    /// lies outside the span.
    pub fn solve(&self, v: &SparseVec) -> Option<SparseVec> {
        let red = self.ech.reduce(v.clone());
        if red.iter().any(|(c, _)| *c < self.dim) {
            return None;
        }
        // v - sum(combo) = 0, so v = -combo in generator coordinates.
        Some(
            red.into_iter()
                .map(|(c, x)| {
                    debug_assert!(c >= self.dim && c < self.dim + self.n_gens);
                    (c - self.dim, -x)
                })
                .collect(),
        )
    }
}
