//! Coefficient domains.
//!
//! Every element carries enough information to recover its domain (the prime
//! for `Fp`, the radicand for `QuadExt`, the field description for `GfExt`),
//! so that polynomials can check that their operands live in the same ring
//! before combining them.

mod extfield;
mod prime;
mod quad;
mod rational;

use std::fmt;

use crate::error::Result;

pub use extfield::{ExtField, GfExt};
pub use prime::{check_prime, Fp};
pub use quad::QuadExt;
pub use rational::Rational;

/// An element of an exact field.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Runtime description of the field the element lives in.
    type Domain: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn domain(&self) -> Self::Domain;
    fn zero(domain: &Self::Domain) -> Self;
    fn one(domain: &Self::Domain) -> Self;
    fn from_i64(n: i64, domain: &Self::Domain) -> Self;

    /// 0 for characteristic zero.
    fn characteristic(domain: &Self::Domain) -> u64;

    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn inverse(&self) -> Option<Self>;

    /// Parses the textual form produced by `Display`.
    fn parse(text: &str, domain: &Self::Domain) -> Result<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one(&self.domain())
    }

    fn divide(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|inv| self.times(&inv))
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.domain());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.times(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

/// Domains that receive the image of a rational number.
///
/// For prime characteristic this is reduction, which fails when the
/// denominator is divisible by the characteristic.
pub trait FromRational: Scalar {
    fn from_rational(q: &Rational, domain: &Self::Domain) -> Result<Self>;
}
