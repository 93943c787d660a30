//! Pullback matrices of the Kontsevich-operad structure maps, per weight.
//!
//! Cofaces double a configuration point (the doubled pair's direction is
//! the fixed linear direction, so its generator dies); codegeneracies
//! forget a point; operadic insertions collapse a block of points. All
//! three are algebra maps, computed on the admissible basis and normalized.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num::One;
use once_cell::sync::Lazy;

use crate::linalg::{rat, Rational, SparseMatrix};

use super::tables::{canon_product, table};
use super::Parity;

/// Pullback of the coface d^i: K_d(n) -> K_d(n+1), as a matrix from the
/// weight-k part of H*(Conf(n+1)) to the weight-k part of H*(Conf(n)).
///
/// On generators, with sigma the index collapse: g_ab dies when {a, b} is
/// the doubled pair or touches the point created at the boundary (i = 0 or
/// n + 1); otherwise g_ab maps to g_{sigma(a) sigma(b)}.
pub fn coface_pullback(parity: Parity, i: usize, n: usize, k: usize) -> Arc<SparseMatrix> {
    static CACHE: Lazy<RwLock<HashMap<(Parity, usize, usize, usize), Arc<SparseMatrix>>>> =
        Lazy::new(|| RwLock::new(HashMap::new()));
    if let Some(m) = CACHE.read().unwrap().get(&(parity, i, n, k)) {
        return Arc::clone(m);
    }
    assert!(i <= n + 1, "coface index {i} out of range at arity {n}");

    let src = table(parity, n + 1, k);
    let tgt = table(parity, n, k);
    let mut m = SparseMatrix::zero(tgt.basis.len(), src.basis.len());

    // kill(a, b) and the collapse sigma on surviving indices.
    let killed = |a: usize, b: usize| -> bool {
        if i == 0 {
            a == 1 || b == 1
        } else if i == n + 1 {
            a == n + 1 || b == n + 1
        } else {
            (a, b) == (i, i + 1)
        }
    };
    let sigma = |t: usize| -> usize {
        if i == 0 {
            t - 1
        } else if t > i {
            t - 1
        } else {
            t
        }
    };

    'src: for (col, mono) in src.basis.iter().enumerate() {
        let mut factors: Vec<(usize, usize)> = Vec::with_capacity(mono.factors.len());
        for g in &mono.factors {
            if killed(g.i, g.j) {
                continue 'src;
            }
            factors.push((sigma(g.i), sigma(g.j)));
        }
        let image = super::normalize(parity, n, &factors);
        for (row, c) in image.terms {
            m.add_to(row, col, &c);
        }
    }
    let arc = Arc::new(m);
    let mut w = CACHE.write().unwrap();
    Arc::clone(w.entry((parity, i, n, k)).or_insert(arc))
}

/// Pullback of the codegeneracy s^j: K_d(n) -> K_d(n-1) (forget the j-th
/// point), as a matrix from the weight-k part of H*(Conf(n-1)) to the
/// weight-k part of H*(Conf(n)): the injective index-shift algebra map.
pub fn codegeneracy_pullback(parity: Parity, j: usize, n: usize, k: usize) -> Arc<SparseMatrix> {
    static CACHE: Lazy<RwLock<HashMap<(Parity, usize, usize, usize), Arc<SparseMatrix>>>> =
        Lazy::new(|| RwLock::new(HashMap::new()));
    if let Some(m) = CACHE.read().unwrap().get(&(parity, j, n, k)) {
        return Arc::clone(m);
    }
    assert!(j >= 1 && j <= n, "codegeneracy index {j} out of range at arity {n}");

    let src = table(parity, n - 1, k);
    let tgt = table(parity, n, k);
    let mut m = SparseMatrix::zero(tgt.basis.len(), src.basis.len());
    let tau = |t: usize| if t < j { t } else { t + 1 };
    for (col, mono) in src.basis.iter().enumerate() {
        // A monotone injection sends admissible monomials to admissible
        // monomials, so no rewriting is needed.
        let factors: Vec<(usize, usize)> = mono.factors.iter().map(|g| (tau(g.i), tau(g.j))).collect();
        let image = super::normalize(parity, n, &factors);
        debug_assert_eq!(image.terms.len(), 1);
        for (row, c) in image.terms {
            debug_assert!(c == Rational::one());
            m.add_to(row, col, &c);
        }
    }
    let arc = Arc::new(m);
    let mut w = CACHE.write().unwrap();
    Arc::clone(w.entry((parity, j, n, k)).or_insert(arc))
}

/// Row layout of the weight-k part of H*(Conf(p)) (x) H*(Conf(q)):
/// for each left weight `a = 0..=k` a tuple (offset, dim_left, dim_right)
/// with rows `offset + l * dim_right + r`.
pub fn tensor_offsets(parity: Parity, p: usize, q: usize, k: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::with_capacity(k + 1);
    let mut off = 0;
    for a in 0..=k {
        let dl = table(parity, p, a).basis.len();
        let dr = table(parity, q, k - a).basis.len();
        out.push((off, dl, dr));
        off += dl * dr;
    }
    out
}

/// Pullback of the operadic insertion o_i: K_d(p) x K_d(q) -> K_d(p+q-1),
/// as a matrix from the weight-k part of H*(Conf(p+q-1)) to the weight-k
/// part of H*(Conf(p)) (x) H*(Conf(q)), rows laid out by [`tensor_offsets`].
///
/// With the inserted block B = {i, ..., i+q-1} and collapse c: generators
/// inside B go to 1 (x) g, all others to g (x) 1.
pub fn insertion_pullback(parity: Parity, i: usize, p: usize, q: usize, k: usize) -> Arc<SparseMatrix> {
    static CACHE: Lazy<RwLock<HashMap<(Parity, usize, usize, usize, usize), Arc<SparseMatrix>>>> =
        Lazy::new(|| RwLock::new(HashMap::new()));
    if let Some(m) = CACHE.read().unwrap().get(&(parity, i, p, q, k)) {
        return Arc::clone(m);
    }
    assert!(i >= 1 && i <= p, "insertion slot {i} out of range at arity {p}");

    let n = p + q - 1;
    let src = table(parity, n, k);
    let offsets = tensor_offsets(parity, p, q, k);
    let rows: usize = offsets.iter().map(|(_, dl, dr)| dl * dr).sum();
    let mut m = SparseMatrix::zero(rows, src.basis.len());

    let in_block = |t: usize| t >= i && t <= i + q - 1 && q > 0;
    let collapse = |t: usize| -> usize {
        if t < i {
            t
        } else if in_block(t) {
            i
        } else {
            t - q + 1
        }
    };

    for (col, mono) in src.basis.iter().enumerate() {
        let mut left: Vec<(usize, usize)> = Vec::new();
        let mut right: Vec<(usize, usize)> = Vec::new();
        let mut sign = 1i64;
        for g in &mono.factors {
            if in_block(g.i) && in_block(g.j) {
                right.push((g.i - i + 1, g.j - i + 1));
            } else {
                // Moving a left factor past the right factors accumulated so
                // far costs a Koszul sign when generators have odd degree.
                if parity == Parity::Even && right.len() % 2 == 1 {
                    sign = -sign;
                }
                left.push((collapse(g.i), collapse(g.j)));
            }
        }
        let a = left.len();
        let b = right.len();
        let lclass = super::normalize(parity, p, &left);
        let rclass = super::normalize(parity, q, &right);
        let (off, _dl, dr) = offsets[a];
        debug_assert_eq!(a + b, k);
        for (lix, lc) in &lclass.terms {
            for (rix, rc) in &rclass.terms {
                let row = off + lix * dr + rix;
                m.add_to(row, col, &(lc * rc * rat(sign)));
            }
        }
    }
    let arc = Arc::new(m);
    let mut w = CACHE.write().unwrap();
    Arc::clone(w.entry((parity, i, p, q, k)).or_insert(arc))
}
