use super::matrix::SparseMatrix;
use super::{rank, rank_modular, LinalgError};

/// A chain complex recorded as dimensions and differentials.
///
/// `maps[p]` is the differential from position `p` to position `p + 1`
/// (matrix shape `dims[p+1] x dims[p]`). Construction asserts, rather than
/// assumes, that consecutive composites vanish.
#[derive(Clone, Debug)]
pub struct ChainComplexDims {
    dims: Vec<usize>,
    maps: Vec<SparseMatrix>,
}

impl ChainComplexDims {
    pub fn new(dims: Vec<usize>, maps: Vec<SparseMatrix>) -> Result<Self, LinalgError> {
        assert_eq!(maps.len() + 1, dims.len(), "need one differential per consecutive pair");
        for (p, m) in maps.iter().enumerate() {
            if m.rows() != dims[p + 1] || m.cols() != dims[p] {
                return Err(LinalgError::ShapeMismatch {
                    position: p,
                    rows: m.rows(),
                    cols: m.cols(),
                    expected_rows: dims[p + 1],
                    expected_cols: dims[p],
                });
            }
        }
        for p in 0..maps.len().saturating_sub(1) {
            if !maps[p + 1].mul(&maps[p]).is_zero() {
                return Err(LinalgError::NotAComplex { position: p });
            }
        }
        Ok(ChainComplexDims { dims, maps })
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn map(&self, p: usize) -> &SparseMatrix {
        &self.maps[p]
    }

    /// Truncation at level `n`: positions above `n` are dropped and the
    /// differential out of level `n` is zeroed.
    pub fn truncate(&self, n: usize) -> ChainComplexDims {
        if n + 1 >= self.dims.len() {
            return self.clone();
        }
        let dims = self.dims[..=n].to_vec();
        let maps = self.maps[..n].to_vec();
        ChainComplexDims { dims, maps }
    }

    /// The transpose-reversed complex; it has the same homology dimensions.
    pub fn transposed(&self) -> ChainComplexDims {
        let dims: Vec<usize> = self.dims.iter().rev().copied().collect();
        let maps: Vec<SparseMatrix> = self.maps.iter().rev().map(|m| m.transpose()).collect();
        ChainComplexDims { dims, maps }
    }

    /// Homology dimension at every position, over the rationals:
    /// `dim_p - rank(d into p) - rank(d out of p)`.
    pub fn homology_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.maps.iter().map(rank).collect();
        self.assemble(&ranks)
    }

    /// Homology dimensions with every rank computed modulo `prime`.
    pub fn homology_dims_modular(&self, prime: u64) -> Result<Vec<usize>, LinalgError> {
        let mut ranks = Vec::with_capacity(self.maps.len());
        for m in &self.maps {
            ranks.push(rank_modular(m, prime)?);
        }
        Ok(self.assemble(&ranks))
    }

    /// Ranks of all differentials (exact).
    pub fn ranks(&self) -> Vec<usize> {
        self.maps.iter().map(rank).collect()
    }

    fn assemble(&self, ranks: &[usize]) -> Vec<usize> {
        (0..self.dims.len())
            .map(|p| {
                let r_in = if p > 0 { ranks[p - 1] } else { 0 };
                let r_out = if p < ranks.len() { ranks[p] } else { 0 };
                self.dims[p] - r_in - r_out
            })
            .collect()
    }
}
