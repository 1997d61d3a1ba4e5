//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Crate-wide error enum. Every fallible operation returns one of these
/// variants; none of them is recoverable by retrying.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `divide_by_q` was called on a polynomial with nonzero constant term,
    /// which would produce a Laurent polynomial.
    #[error("polynomial has nonzero constant term {0}, not divisible by q")]
    NonzeroConstantTerm(String),

    /// Reflection closure exceeded the safety bound, so the Cartan matrix is
    /// not of finite type.
    #[error("reflection closure exceeded {bound} roots; Cartan matrix is not of finite type")]
    NotFiniteType { bound: usize },

    /// A matrix failed the Cartan-matrix axioms.
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    /// Two coweights (or a coweight and a root system) have different ranks.
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    /// A reductive group must contain the maximal torus of its derived
    /// subgroup, so the torus rank cannot be smaller than the semisimple rank.
    #[error("torus rank {torus_rank} is smaller than the semisimple rank {rank}")]
    TorusRankTooSmall { torus_rank: usize, rank: usize },

    /// The brute-force enumeration guard was hit.
    #[error("height {height} exceeds the brute-force bound {bound}")]
    HeightBoundExceeded { height: i64, bound: i64 },

    /// A coweight was expected to lie in the nonnegative coroot monoid.
    #[error("coweight {0} has a negative coordinate; expected a nonnegative coroot combination")]
    NotDominantSum(String),

    /// The parts of a partition do not sum to the stated coweight.
    #[error("partition parts sum to {sum}, expected {expected}")]
    PartitionSumMismatch { sum: String, expected: String },

    /// A strictly dominant (nonzero, nonnegative) coweight was expected.
    #[error("coweight {0} is not strictly positive in the coroot order")]
    NotStrictlyDominant(String),

    /// A check that only makes sense for one side of a table was invoked on
    /// the other side.
    #[error("table has side `{found}`, but this check requires side `{expected}`")]
    WrongSide { expected: String, found: String },

    /// Tables being compared do not describe the same space and strata.
    #[error("tables do not share an ambient descriptor: {0}")]
    AmbientMismatch(String),

    /// Partition enumeration would exceed the hard cap.
    #[error("partition enumeration exceeded the cap of {cap} partitions")]
    PartitionCapExceeded { cap: usize },

    /// A colored divisor has a repeated support point or an invalid weight.
    #[error("invalid colored divisor: {0}")]
    InvalidDivisor(String),

    /// A partition part is zero or has a negative coordinate.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// Matrix dimensions do not match the data or the operation.
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A chain complex failed validation (shape chain or d∘d ≠ 0).
    #[error("invalid chain complex: {0}")]
    InvalidComplex(String),

    /// A residue characteristic that is not prime was supplied.
    #[error("{0} is not a prime number")]
    NotPrime(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
