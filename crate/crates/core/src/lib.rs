//! Exact rational computation of the homology of spaces of long knots in
//! codimension > 2, through the pages of the Vassiliev / Bousfield-Kan
//! spectral sequence.
//!
//! The pipeline runs over the cohomology of configuration spaces in the
//! Arnold presentation ([`confalg`]), assembles the Hochschild complex of
//! the Poisson operad from coface pullbacks and computes its homology with
//! exact sparse linear algebra ([`linalg`], [`hochschild`]). Around the main
//! pipeline sit the combinatorial consistency suites: fan categories and
//! cofinal functors ([`fans`]), admissible graph complexes ([`graphcx`]),
//! cosimplicial machinery and derived limits over finite categories
//! ([`cosimp`]), and fanic diagrams of operad morphisms ([`fanic`]).
//!
//! All computations are over the rationals and deterministic: the same
//! inputs (including the prime-selection seed) reproduce identical output
//! bytes.

pub mod confalg;
pub mod cosimp;
pub mod fanic;
pub mod fans;
pub mod graded;
pub mod graphcx;
pub mod hochschild;
pub mod linalg;

pub use graded::{GradedDims, GradedMatrix};
pub use linalg::{rat, ChainComplexDims, Rational, SparseMatrix};
