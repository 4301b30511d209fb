//! Exact-arithmetic engine for cluster algebras of quivers.
//!
//! The crate mutates quivers and seeds, enumerates exchange graphs and
//! quiver mutation classes, classifies finite type, and, for simply-laced
//! Dynkin quivers, builds the Auslander-Reiten and cluster-category
//! combinatorics needed to check the denominator correspondence and the
//! cluster-tilting exchange structure.
//!
//! All arithmetic is exact: quiver entries are machine integers guarded by
//! explicit multiplicity limits, Laurent-polynomial coefficients are
//! arbitrary-precision integers, and representation-theoretic linear algebra
//! runs over exact rationals.
//!
//! Vertex indices are `0`-based throughout the public API. The text and
//! JSON file formats (and the CLI) use `1`-based vertex numbers; the
//! parsers and writers translate at that boundary. The sign convention is
//! fixed project-wide: `b[i][j] > 0` means `b[i][j]` arrows from `i` to `j`.

// index-based loops over dense matrices are the local idiom
#![allow(clippy::needless_range_loop)]

pub mod cache;
pub mod exchange;
pub mod laurent;
pub mod quiver;
pub mod rep;
pub mod seed;

pub use exchange::{ExchangeGraph, InfiniteWitness, Limits, MutationClass, TypeVerdict};
pub use laurent::{Exponents, LaurentPoly, ReducedFraction};
pub use quiver::{DiagramType, Quiver};
pub use seed::{Seed, SeedKey};

use std::path::PathBuf;

/// Crate-wide error type.
///
/// The `*Violation` and `InternalInconsistency` variants signal that a
/// structural fact guaranteed by the theory failed to hold; they indicate
/// an engine bug (or corrupted input), never a routine user error.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("loop at vertex {vertex} is not allowed in a cluster quiver")]
    Loop { vertex: usize },
    #[error("2-cycle between vertices {a} and {b} is not allowed in a cluster quiver")]
    TwoCycle { a: usize, b: usize },
    #[error("vertex {vertex} out of range for a quiver on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid exchange matrix: {0}")]
    InvalidMatrix(String),
    #[error("non-exact division of Laurent polynomials")]
    NonExactDivision,
    #[error("the zero polynomial has no reduced form")]
    ZeroPolynomial,
    #[error("operation requires all exponents to be nonnegative")]
    NegativeExponent,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("quiver has an oriented cycle")]
    NotAcyclic,
    #[error("quiver is not an acyclic simply-laced Dynkin quiver")]
    NotDynkin,
    #[error("representations live over different quivers")]
    ShapeMismatch,
    #[error("negative Ext dimension ({value}); hereditary Euler form violated")]
    NegativeExt { value: i64 },
    #[error("operation requires a complete (fully enumerated) graph")]
    GraphIncomplete,
    #[error("cluster entries are not pairwise distinct")]
    DuplicateClusterEntries,
    #[error("maximality violated: {0}")]
    MaximalityViolation(String),
    #[error("complement count violated: {0}")]
    ComplementCountViolation(String),
    #[error("theorem-level check failed: {0}")]
    TheoremViolation(String),
    #[error("tilting-seed propagation is cycle-inconsistent: {0}")]
    CycleInconsistency(String),
    #[error("no indecomposable module matches denominator vector {denominator:?}")]
    NoMatchingModule { denominator: Vec<i64> },
    #[error("denominator correspondence is not a bijection: {0}")]
    NotBijective(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("I/O error on {path}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
