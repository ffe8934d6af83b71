use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{FromRational, Rational, Scalar};
use crate::error::{AlgebraError, Result};

/// Largest supported modulus; products of two residues must fit in `u64`.
const MAX_PRIME: u64 = u32::MAX as u64;

/// Checks that `p` is a prime small enough for single-word arithmetic.
pub fn check_prime(p: u64) -> Result<()> {
    if !(2..=MAX_PRIME).contains(&p) {
        return Err(AlgebraError::NotPrime(p));
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return Err(AlgebraError::NotPrime(p));
        }
        d += 1;
    }
    Ok(())
}

/// Element of the prime field GF(p).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    p: u64,
}

impl Fp {
    /// `p` is trusted to be prime; use [`check_prime`] on untrusted input.
    pub fn new(value: i64, p: u64) -> Self {
        Fp {
            value: value.rem_euclid(p as i64) as u64,
            p,
        }
    }

    pub fn from_u64(value: u64, p: u64) -> Self {
        Fp { value: value % p, p }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_big(n: &BigInt, p: u64) -> u64 {
        n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
    }

    fn check_same(&self, rhs: &Fp) {
        assert_eq!(
            self.p, rhs.p,
            "GF({}) and GF({}) elements cannot be combined",
            self.p, rhs.p
        );
    }
}

impl Scalar for Fp {
    type Domain = u64;

    fn domain(&self) -> u64 {
        self.p
    }
    fn zero(p: &u64) -> Self {
        Fp { value: 0, p: *p }
    }
    fn one(p: &u64) -> Self {
        Fp { value: 1 % *p, p: *p }
    }
    fn from_i64(n: i64, p: &u64) -> Self {
        Fp::new(n, *p)
    }
    fn characteristic(p: &u64) -> u64 {
        *p
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        Fp {
            value: (self.value + rhs.value) % self.p,
            p: self.p,
        }
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        Fp {
            value: (self.value + self.p - rhs.value) % self.p,
            p: self.p,
        }
    }
    fn times(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        Fp {
            value: self.value * rhs.value % self.p,
            p: self.p,
        }
    }
    fn negate(&self) -> Self {
        Fp {
            value: (self.p - self.value) % self.p,
            p: self.p,
        }
    }
    fn inverse(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // Extended Euclid on (value, p).
        let (mut r0, mut r1) = (self.p as i64, self.value as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(Fp::new(t0, self.p))
    }
    fn parse(text: &str, p: &u64) -> Result<Self> {
        let q: Rational = text.parse()?;
        Fp::from_rational(&q, p)
    }
}

impl FromRational for Fp {
    fn from_rational(q: &Rational, p: &u64) -> Result<Self> {
        let den = Fp::reduce_big(q.denom(), *p);
        if den == 0 {
            return Err(AlgebraError::DenominatorNotUnit { prime: *p });
        }
        let num = Fp::reduce_big(q.numer(), *p);
        let num = Fp { value: num, p: *p };
        let den = Fp { value: den, p: *p };
        Ok(num.times(&den.inverse().expect("nonzero residue")))
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.p)
    }
}
