//! Exact computations for quotients of complex tori by finite groups.

pub mod corpus;
pub mod crystal;
pub mod exactla;
pub mod groupcore;
pub mod hodge;
pub mod orbpi;
pub mod quotient;
pub mod schema;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use exactla::Matrix;

/// Integer matrix with arbitrary-precision entries.
pub type IntMatrix = Matrix<BigInt>;
/// Rational matrix with arbitrary-precision entries.
pub type RatMatrix = Matrix<BigRational>;
