//! The truncated ring `A_N` of arithmetical functions under unitary
//! convolution, with exact coefficients.

mod coefficient;
mod function;
pub mod text;

pub use coefficient::{Coefficient, FieldKind, GaussianRational, Rational};
pub use function::{ArithFunc, Degree, OrderValue, MAX_BOUND};
