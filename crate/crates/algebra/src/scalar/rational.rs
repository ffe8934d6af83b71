use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{FromRational, Scalar};
use crate::error::{AlgebraError, Result};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let d = denom.into();
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), d)))
    }

    /// Panics on a zero denominator; meant for literals.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Rational::new(numer, denom).expect("literal fraction with zero denominator")
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn from_big(q: BigRational) -> Self {
        Rational(q)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn signum(&self) -> i32 {
        match self.0.numer().sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    pub fn recip(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn powi(&self, exp: i32) -> Self {
        Rational(num_traits::pow::Pow::pow(&self.0, exp))
    }

    /// Nonnegative square root when `self` is the square of a rational.
    pub fn sqrt(&self) -> Option<Self> {
        if self.signum() < 0 {
            return None;
        }
        let n = self.0.numer().sqrt();
        let d = self.0.denom().sqrt();
        (&n * &n == *self.0.numer() && &d * &d == *self.0.denom()).then(|| Rational(BigRational::new(n, d)))
    }
}

impl Scalar for Rational {
    type Domain = ();

    fn domain(&self) {}
    fn zero(_: &()) -> Self {
        Rational(BigRational::zero())
    }
    fn one(_: &()) -> Self {
        Rational(BigRational::one())
    }
    fn from_i64(n: i64, _: &()) -> Self {
        Rational::integer(n)
    }
    fn characteristic(_: &()) -> u64 {
        0
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn plus(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }
    fn minus(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }
    fn times(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }
    fn negate(&self) -> Self {
        Rational(-&self.0)
    }
    fn inverse(&self) -> Option<Self> {
        self.recip()
    }
    fn parse(text: &str, _: &()) -> Result<Self> {
        text.parse()
    }
}

impl FromRational for Rational {
    fn from_rational(q: &Rational, _: &()) -> Result<Self> {
        Ok(q.clone())
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::integer(n)
    }
}

impl FromStr for Rational {
    type Err = AlgebraError;

    /// Accepts `n`, `n/d` or a decimal `i.f`, with an optional sign in front.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((int, frac)) = s.split_once('.') {
            if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
                return Err(AlgebraError::parse(int.len() + 1, format!("invalid decimal `{s}`")));
            }
            let negative = int.starts_with('-');
            let int = match int.trim_start_matches(['+', '-']) {
                "" => "0",
                rest => rest,
            };
            let digits: Rational = format!("{int}{frac}").parse()?;
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            let value = Rational(BigRational::new(digits.0.to_integer(), scale));
            return Ok(if negative { -value } else { value });
        }
        let parse_int = |t: &str, offset: usize| -> Result<BigInt> {
            let digits = t.strip_prefix('+').unwrap_or(t);
            if digits.is_empty()
                || !digits.trim_start_matches('-').chars().all(|c| c.is_ascii_digit())
                || digits.trim_start_matches('-').is_empty()
            {
                return Err(AlgebraError::parse(offset, format!("invalid integer `{t}`")));
            }
            BigInt::from_str(digits).map_err(|e| AlgebraError::parse(offset, e.to_string()))
        };
        match s.split_once('/') {
            None => Ok(Rational::integer(parse_int(s, 0)?)),
            Some((n, d)) => {
                let numer = parse_int(n, 0)?;
                let denom = parse_int(d, n.len() + 1)?;
                if denom.is_zero() {
                    return Err(AlgebraError::parse(n.len() + 1, "zero denominator"));
                }
                Ok(Rational(BigRational::new(numer, denom)))
            }
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
    };
}

forward_binop!(Add, add, +);
forward_binop!(Sub, sub, -);
forward_binop!(Mul, mul, *);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    /// Panics on division by zero, like integer division.
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.0.is_zero(), "rational division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0.is_integer() && *self.0.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_parse_exactly() {
        assert_eq!("0.5".parse::<Rational>().unwrap(), Rational::frac(1, 2));
        assert_eq!("-10.25".parse::<Rational>().unwrap(), Rational::frac(-41, 4));
        assert_eq!("-.5".parse::<Rational>().unwrap(), Rational::frac(-1, 2));
        assert!("1.".parse::<Rational>().is_err());
        assert!("1.2.3".parse::<Rational>().is_err());
        assert!("1/0".parse::<Rational>().is_err());
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(Rational::frac(49, 4).sqrt(), Some(Rational::frac(7, 2)));
        assert_eq!(Rational::frac(0, 1).sqrt(), Some(Rational::frac(0, 1)));
        assert_eq!(Rational::frac(2, 9).sqrt(), None);
        assert_eq!(Rational::frac(-4, 9).sqrt(), None);
    }

    #[test]
    fn parses_and_reduces() {
        let q: Rational = "-6/4".parse().unwrap();
        assert_eq!(q, Rational::frac(-3, 2));
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!("7".parse::<Rational>().unwrap(), Rational::from(7));
        assert_eq!("+7/1".parse::<Rational>().unwrap(), Rational::from(7));
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(
            "1/0".parse::<Rational>(),
            Err(AlgebraError::Parse { position: 2, .. })
        ));
        assert!("".parse::<Rational>().is_err());
        assert!("1/2/3".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
        assert!("-".parse::<Rational>().is_err());
    }

    #[test]
    fn zero_is_canonical() {
        let z = Rational::frac(0, -5);
        assert_eq!(z.denom(), &BigInt::from(1));
        assert!(z.is_zero());
    }
}
