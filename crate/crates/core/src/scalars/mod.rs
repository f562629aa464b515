//! Exact arithmetic: arbitrary-precision rationals, sparse polynomials in the
//! parameter symbols, their fraction field in canonical form, and univariate
//! polynomial gcd / extended Euclid over that field.

pub mod parampoly;
pub mod rat;
pub mod scalar;
pub mod unipoly;

pub use parampoly::{Param, ParamPoly};
pub use rat::Rat;
pub use scalar::{Scalar, ScalarError};
pub use unipoly::{UniPoly, UniPolyError};
