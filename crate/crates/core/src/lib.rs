//! Exact arithmetic in the ring of arithmetical functions with unitary
//! convolution, truncated to a finite index range `[1..N]`.
//!
//! - [`numtheory`]: sieve-backed factorization, unitary divisors, leading
//!   primes and the monomial codec.
//! - [`algebra`]: the truncated ring itself, norms, units and inverses.
//! - [`structure`]: decompositions, ideals, retracts, endomorphisms, bases
//!   and exact kernels.
//! - [`factorization`]: factorization certificates, associates and a
//!   bounded factor search.

pub mod algebra;
mod error;
pub mod factorization;
pub mod linalg;
pub mod numtheory;
pub mod structure;

pub use algebra::{ArithFunc, Coefficient, Degree, FieldKind, GaussianRational, OrderValue, Rational};
pub use error::{Error, Result};
