//! Exact arithmetic kernel: coefficient fields, sparse multivariate
//! polynomials, factored rational functions, resultants and a text format.

pub mod error;
pub mod expr;
pub mod monomial;
pub mod poly;
pub mod ratfunc;
pub mod resultant;
pub mod scalar;
pub mod text;

pub use error::{AlgebraError, Result};
pub use expr::{parse_polynomial, parse_rational_function};
pub use monomial::Monomial;
pub use poly::MultiPoly;
pub use ratfunc::{substitute, Composition, RationalFunction};
pub use resultant::{discriminant, resultant};
pub use scalar::{check_prime, ExtField, Fp, FromRational, GfExt, QuadExt, Rational, Scalar};
pub use text::{from_text, to_text};
