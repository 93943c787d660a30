//! Degreewise bookkeeping for graded vector spaces and the degree-preserving
//! maps between them. Internal degrees are nonnegative and sparse, so both
//! types are keyed maps with zero blocks omitted.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::linalg::SparseMatrix;

/// Dimensions of a graded vector space, by internal degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GradedDims(pub BTreeMap<usize, usize>);

impl GradedDims {
    pub fn zero() -> Self {
        GradedDims(BTreeMap::new())
    }

    pub fn concentrated(degree: usize, dim: usize) -> Self {
        let mut m = BTreeMap::new();
        if dim > 0 {
            m.insert(degree, dim);
        }
        GradedDims(m)
    }

    pub fn dim(&self, degree: usize) -> usize {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    pub fn set(&mut self, degree: usize, dim: usize) {
        if dim == 0 {
            self.0.remove(&degree);
        } else {
            self.0.insert(degree, dim);
        }
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

/// A degree-preserving linear map between graded vector spaces, one sparse
/// block per degree. Blocks that are zero maps may be omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    pub source: GradedDims,
    pub target: GradedDims,
    pub blocks: BTreeMap<usize, SparseMatrix>,
}

impl GradedMatrix {
    pub fn zero(source: GradedDims, target: GradedDims) -> Self {
        GradedMatrix { source, target, blocks: BTreeMap::new() }
    }

    pub fn identity(space: &GradedDims) -> Self {
        let mut blocks = BTreeMap::new();
        for (&q, &d) in &space.0 {
            blocks.insert(q, SparseMatrix::identity(d));
        }
        GradedMatrix { source: space.clone(), target: space.clone(), blocks }
    }

    pub fn set_block(&mut self, degree: usize, m: SparseMatrix) {
        assert_eq!(m.cols(), self.source.dim(degree), "block source dim mismatch");
        assert_eq!(m.rows(), self.target.dim(degree), "block target dim mismatch");
        if m.is_zero() {
            self.blocks.remove(&degree);
        } else {
            self.blocks.insert(degree, m);
        }
    }

    /// The block at `degree`, materializing zero blocks on demand.
    pub fn block(&self, degree: usize) -> SparseMatrix {
        self.blocks
            .get(&degree)
            .cloned()
            .unwrap_or_else(|| SparseMatrix::zero(self.target.dim(degree), self.source.dim(degree)))
    }

    /// Composite `self ∘ other`.
    pub fn compose(&self, other: &GradedMatrix) -> GradedMatrix {
        assert_eq!(self.source, other.target, "composition shape mismatch");
        let mut out = GradedMatrix::zero(other.source.clone(), self.target.clone());
        for q in degrees_union(&out.source, &out.target) {
            let m = self.block(q).mul(&other.block(q));
            out.set_block(q, m);
        }
        out
    }

    pub fn add_scaled(&self, other: &GradedMatrix, c: &crate::linalg::Rational) -> GradedMatrix {
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        let mut out = GradedMatrix::zero(self.source.clone(), self.target.clone());
        for q in degrees_union(&self.source, &self.target) {
            out.set_block(q, self.block(q).add_scaled_mat(&other.block(q), c));
        }
        out
    }

    pub fn transpose(&self) -> GradedMatrix {
        let mut out = GradedMatrix::zero(self.target.clone(), self.source.clone());
        for (&q, m) in &self.blocks {
            out.set_block(q, m.transpose());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(|m| m.is_zero())
    }

    /// Degrees where either side is nonzero.
    pub fn active_degrees(&self) -> Vec<usize> {
        degrees_union(&self.source, &self.target)
    }
}

fn degrees_union(a: &GradedDims, b: &GradedDims) -> Vec<usize> {
    let mut out: Vec<usize> = a.degrees().chain(b.degrees()).collect();
    out.sort_unstable();
    out.dedup();
    out
}
