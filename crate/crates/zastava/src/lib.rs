//! Exact combinatorial invariants of Zastava schemes and Drinfeld
//! compactifications.
//!
//! The crate computes, in exact integer arithmetic:
//!
//! - the q-analogue of Kostant's partition function over the positive
//!   coroots of a finite root system ([`qkostant`]);
//! - partitions of nonnegative coweights and Jordan types of colored
//!   divisors ([`partitions`]);
//! - stratification catalogs with dimension formulas for symmetric powers,
//!   Zastava schemes and Drinfeld compactifications ([`strata`]);
//! - stalk and costalk tables of intersection cohomology complexes on those
//!   spaces, together with parity, support and duality validators
//!   ([`stalks`]);
//! - Smith normal form of integer matrices, homology of bounded integer
//!   complexes with torsion invariant factors, and the universal-coefficient
//!   and Euler-characteristic cross-checks over ℤ ([`snf`], [`homology`]).
//!
//! All polynomial coefficients are unbounded integers; overflow is
//! impossible by construction.

pub mod error;
pub mod homology;
pub mod matrix;
pub mod partitions;
pub mod poly;
pub mod qkostant;
pub mod rootdata;
pub mod snf;
pub mod stalks;
pub mod strata;

pub use error::{Error, Result};
pub use matrix::IntMatrix;
pub use poly::QPolynomial;
pub use rootdata::{coweight_box, CartanMatrix, Coweight, GroupDims, RootSystem};
