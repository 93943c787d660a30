//! The cohomology algebras H*(Conf(n, R^d); Q) in the Arnold presentation:
//! normal-form bases, normalization of arbitrary generator products,
//! multiplication, and the cosimplicial structure maps (coface,
//! codegeneracy and operadic insertion pullbacks) of the Kontsevich operad.
//!
//! Only the parity of the ambient dimension d matters for the sign regime:
//! for even d the generators anticommute and g_ji = g_ij, for odd d they
//! commute, g^2 = 0 is imposed as a relation, and g_ji = -g_ij. The
//! explicit generator formulas for the pullback maps are fixed here and
//! certified by the cosimplicial-identity and delta^2 = 0 suites, not taken
//! on faith.

mod pullbacks;
mod tables;

pub use pullbacks::{coface_pullback, codegeneracy_pullback, insertion_pullback, tensor_offsets};
pub use tables::{canon_product, generator_pairs, table, BasisTable, FreeMonomial};

use std::collections::BTreeMap;

use num::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::linalg::Rational;

/// Sign regime selector; everything in this module depends on `d` only
/// through it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

/// Global ambient-dimension configuration, d >= 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GlobalConfig {
    pub d: usize,
}

impl GlobalConfig {
    pub fn new(d: usize) -> Result<Self, ConfalgError> {
        if d < 3 {
            return Err(ConfalgError::DimensionTooSmall { d });
        }
        Ok(GlobalConfig { d })
    }

    pub fn parity(&self) -> Parity {
        if self.d % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Degree of a single generator.
    pub fn gen_degree(&self) -> usize {
        self.d - 1
    }
}

/// A direction generator g_{i,j}, stored with i < j.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Generator {
    pub i: usize,
    pub j: usize,
}

/// A normal-form basis monomial: factors with i_t < j_t and strictly
/// increasing second indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct AdmissibleMonomial {
    pub factors: Vec<Generator>,
}

impl AdmissibleMonomial {
    pub fn weight(&self) -> usize {
        self.factors.len()
    }
}

/// An element of H*(Conf(n)) in a fixed weight, expressed in the admissible
/// basis of its (parity, arity, weight) table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohClass {
    pub parity: Parity,
    pub arity: usize,
    pub weight: usize,
    /// basis index -> nonzero coefficient
    pub terms: BTreeMap<usize, Rational>,
}

impl CohClass {
    pub fn zero(parity: Parity, arity: usize, weight: usize) -> Self {
        CohClass { parity, arity, weight, terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, ix: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(ix).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&ix);
        }
    }

    /// Terms resolved to monomials, for display and tests.
    pub fn monomial_terms(&self) -> Vec<(AdmissibleMonomial, Rational)> {
        let t = table(self.parity, self.arity, self.weight);
        self.terms.iter().map(|(&ix, c)| (t.basis[ix].clone(), c.clone())).collect()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfalgError {
    #[error("ambient dimension d = {d} is below the supported range d >= 3")]
    DimensionTooSmall { d: usize },
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("index {index} out of range at arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },
}

/// The full normal-form basis of the weight-k part of H*(Conf(n)), in
/// deterministic lexicographic order. Empty when k > n - 1 (except the
/// empty monomial at k = 0).
pub fn basis(parity: Parity, n: usize, k: usize) -> Vec<AdmissibleMonomial> {
    table(parity, n, k).basis.clone()
}

/// Dimension of the weight-k part.
pub fn dim(parity: Parity, n: usize, k: usize) -> usize {
    table(parity, n, k).basis.len()
}

/// Expresses an arbitrary product of generators (any index order, i != j)
/// in the normal-form basis, applying g_ji = (-1)^d g_ij, Koszul signs,
/// g^2 = 0 and Arnold rewriting. Returns the zero class for degenerate
/// products.
pub fn normalize(parity: Parity, n: usize, factors: &[(usize, usize)]) -> CohClass {
    let k = factors.len();
    let mut out = CohClass::zero(parity, n, k);
    let t = table(parity, n, k);
    let mut sign = 1i8;
    let mut idxs = Vec::with_capacity(k);
    for &(a, b) in factors {
        assert!(a != b && a >= 1 && b >= 1 && a <= n && b <= n, "generator indices out of range");
        let (i, j) = if a < b {
            (a, b)
        } else {
            if parity == Parity::Odd {
                sign = -sign;
            }
            (b, a)
        };
        // Generator index within the lex-ordered pair list.
        let ix = t.gens().iter().position(|g| g.i == i && g.j == j).expect("pair in range");
        idxs.push(ix);
    }
    let Some((mono, s)) = canon_product(parity, &idxs) else {
        return out;
    };
    for (ix, c) in t.rewrite(&mono) {
        out.add_term(ix, c * crate::linalg::rat((sign * s) as i64));
    }
    out
}

/// Graded-commutative product, normalized.
pub fn multiply(a: &CohClass, b: &CohClass) -> Result<CohClass, ConfalgError> {
    if a.arity != b.arity {
        return Err(ConfalgError::ArityMismatch { left: a.arity, right: b.arity });
    }
    assert_eq!(a.parity, b.parity, "mixed sign regimes");
    let n = a.arity;
    let k = a.weight + b.weight;
    let ta = table(a.parity, n, a.weight);
    let tb = table(b.parity, n, b.weight);
    let t = table(a.parity, n, k);
    let gen_ix = |g: &Generator| t.gens().iter().position(|h| h == g).unwrap();
    let mut out = CohClass::zero(a.parity, n, k);
    for (&ia, ca) in &a.terms {
        for (&ib, cb) in &b.terms {
            let mut factors: Vec<usize> =
                ta.basis[ia].factors.iter().map(&gen_ix).collect();
            factors.extend(tb.basis[ib].factors.iter().map(&gen_ix));
            if let Some((mono, s)) = canon_product(a.parity, &factors) {
                let coeff = ca * cb * crate::linalg::rat(s as i64);
                for (ix, c) in t.rewrite(&mono) {
                    out.add_term(ix, c * &coeff);
                }
            }
        }
    }
    Ok(out)
}

/// The unit class 1 in weight 0.
pub fn unit(parity: Parity, n: usize) -> CohClass {
    let mut c = CohClass::zero(parity, n, 0);
    c.add_term(0, num::One::one());
    c
}

/// A single-generator class.
pub fn generator_class(parity: Parity, n: usize, i: usize, j: usize) -> CohClass {
    normalize(parity, n, &[(i, j)])
}

#[cfg(test)]
mod tests;
