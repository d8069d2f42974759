//! Exact combinatorics of the central degeneration of the affine Grassmannian
//! in type A.
//!
//! The crate works over the lattice picture of `Gr = G(K)/G(O)` and
//! `Fl = G(K)/I` for `G = SL_n` (stored in `GL_n` coordinates):
//!
//! * [`weyl`] — root data, the affine Weyl group, Bruhat order and the
//!   moment-map embedding of fixed points into the coweight plane;
//! * [`orders`] — dominance and the semi-infinite (periodic) closure order,
//!   in both the lattice-flag and the alcove-cone characterisation;
//! * [`polytope`] — exact convex geometry: hulls, lattice points,
//!   root-direction dimension counts, Minkowski sums, SL3 MV polytopes and
//!   a regular-subdivision checker backed by an exact rational LP;
//! * [`degeneration`] — the special-fibre limit rules for fixed points,
//!   invariant P¹s, root-subgroup orbit products, semi-infinite orbits,
//!   admissible sets, and component-count bounds;
//! * [`dims`] — closed-form dimension formulas for Iwahori orbits and for
//!   intersections of Iwahori and `U⁻` orbits;
//! * [`corpus`] — the golden SL3 example suite with known component counts.
//!
//! All arithmetic is exact (integers and arbitrary-precision rationals);
//! there is no floating point anywhere. Every operation is a pure function
//! over immutable values and safe to call from multiple threads. With the
//! default `parallel` feature the heavier enumerations fan out over a rayon
//! pool while returning results that are byte-identical to the sequential
//! fallback (`--no-default-features`).

pub mod corpus;
pub mod degeneration;
pub mod dims;
pub mod exec;
pub mod json;
pub mod lp;
pub mod orders;
pub mod polytope;
pub mod svg;
pub mod weyl;

/// Errors shared by all modules.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(usize),
    #[error("rank {rank} exceeds the supported limit {limit} for this operation")]
    RankUnsupported { rank: usize, limit: usize },
    #[error("coweight {0:?} is not in the coroot lattice (coordinate sum must be 0)")]
    NotSumZero(Vec<i64>),
    #[error("invalid root indices ({0}, {1})")]
    BadRoot(usize, usize),
    #[error("generator index {0} out of range for rank {1}")]
    BadGenerator(usize, usize),
    #[error("not a permutation: {0:?}")]
    BadPermutation(Vec<usize>),
    #[error("coweight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("empty point set")]
    EmptyInput,
    #[error("point {0} is not a lattice point")]
    NotLatticePoint(String),
    #[error("point {0} is not a vertex of the polytope")]
    NotAVertex(String),
    #[error("root-direction counts disagree across vertices: {0:?}")]
    VertexDisagreement(Vec<(String, u64)>),
    #[error("coefficients must be nonnegative")]
    NegativeCoefficient,
    #[error("invalid subdivision: {0}")]
    InvalidSubdivision(String),
    #[error("duplicate affine root in orbit product")]
    DuplicateRoot,
    #[error("empty intersection: {0}")]
    EmptyCycle(String),
    #[error("fixed points must differ by a positive multiple of a coroot")]
    NotCorootMultiple,
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
