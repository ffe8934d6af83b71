use std::fmt;

use super::{FromRational, Rational, Scalar};
use crate::error::{AlgebraError, Result};

/// Element a + b·√d of the quadratic field ℚ(√d), d square-free and ≠ 0, 1.
///
/// Elements with different radicands are incompatible: the `Scalar`
/// arithmetic panics on them and the polynomial layer reports
/// `DomainMismatch` before any coefficient arithmetic happens.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: i64,
}

/// Splits `n = k²·s` with `s` square-free. Returns `(s, k)`.
fn squarefree_split(n: i64) -> (i64, i64) {
    let sign = n.signum();
    let mut m = n.unsigned_abs();
    let (mut s, mut k) = (1u64, 1u64);
    let mut p = 2u64;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        k *= p.pow(e / 2);
        if e % 2 == 1 {
            s *= p;
        }
        p += 1;
    }
    s *= m;
    (sign * s as i64, k as i64)
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, d: i64) -> Result<Self> {
        Self::check_radicand(d)?;
        Ok(QuadExt { a, b, d })
    }

    pub fn check_radicand(d: i64) -> Result<()> {
        if d == 0 || d == 1 || squarefree_split(d).1 != 1 {
            return Err(AlgebraError::InvalidRadicand(d));
        }
        Ok(())
    }

    /// The embedding of a rational number.
    pub fn rational(a: Rational, d: i64) -> Self {
        QuadExt {
            a,
            b: Rational::from(0),
            d,
        }
    }

    /// √d itself.
    pub fn sqrt_d(d: i64) -> Result<Self> {
        QuadExt::new(Rational::from(0), Rational::from(1), d)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> i64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }

    pub fn conjugate(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d,
        }
    }

    /// N(a + b√d) = a² − d·b².
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &Rational::from(self.d) * &(&self.b * &self.b)
    }

    fn check_same(&self, rhs: &QuadExt) {
        assert_eq!(
            self.d, rhs.d,
            "elements of Q(sqrt({})) and Q(sqrt({})) cannot be combined",
            self.d, rhs.d
        );
    }

    pub fn checked_plus(&self, rhs: &Self) -> Result<Self> {
        self.compatible(rhs)?;
        Ok(self.plus(rhs))
    }

    pub fn checked_times(&self, rhs: &Self) -> Result<Self> {
        self.compatible(rhs)?;
        Ok(self.times(rhs))
    }

    fn compatible(&self, rhs: &Self) -> Result<()> {
        if self.d != rhs.d {
            return Err(AlgebraError::DomainMismatch {
                left: format!("Q(sqrt({}))", self.d),
                right: format!("Q(sqrt({}))", rhs.d),
            });
        }
        Ok(())
    }

    /// Parses `a`, `a+b*sqrt(d)`, `b*sqrt(d)`, `-sqrt(d)` and similar forms,
    /// returning the radicand found in the text (if any). A non-square-free
    /// radicand is normalized: `sqrt(20)` reads as `2*sqrt(5)`.
    pub fn parse_any(text: &str) -> Result<(Rational, Rational, Option<i64>)> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(start) = s.find("sqrt(") else {
            return Ok((s.parse()?, Rational::from(0), None));
        };
        let close = s[start..]
            .find(')')
            .map(|i| i + start)
            .ok_or_else(|| AlgebraError::parse(start, "unclosed sqrt("))?;
        if close + 1 != s.len() {
            return Err(AlgebraError::parse(close + 1, "trailing input after sqrt(...)"));
        }
        let radicand: i64 = s[start + 5..close]
            .parse()
            .map_err(|_| AlgebraError::parse(start + 5, "radicand must be an integer"))?;
        let prefix = &s[..start];
        let prefix = match prefix.strip_suffix('*') {
            Some(p) if !p.is_empty() && !p.ends_with(['+', '-']) => p,
            Some(_) => return Err(AlgebraError::parse(start - 1, "dangling `*`")),
            None => prefix,
        };
        // The rational part ends at the last sign that is not leading and
        // does not follow a `/`.
        let split = prefix
            .char_indices()
            .filter(|&(i, c)| (c == '+' || c == '-') && i > 0)
            .map(|(i, _)| i)
            .next_back();
        let (a_text, b_text) = match split {
            Some(i) => (&prefix[..i], &prefix[i..]),
            None => ("", prefix),
        };
        let a = if a_text.is_empty() {
            Rational::from(0)
        } else {
            a_text.parse()?
        };
        let b = match b_text {
            "" | "+" => Rational::from(1),
            "-" => Rational::from(-1),
            t => t.parse()?,
        };
        if radicand == 0 {
            return Err(AlgebraError::InvalidRadicand(0));
        }
        let (d, k) = squarefree_split(radicand);
        let b = b * Rational::from(k);
        if d == 1 {
            // Perfect square: the value is rational.
            return Ok((a + b, Rational::from(0), None));
        }
        Ok((a, b, Some(d)))
    }
}

impl Scalar for QuadExt {
    type Domain = i64;

    fn domain(&self) -> i64 {
        self.d
    }
    fn zero(d: &i64) -> Self {
        QuadExt::rational(Rational::from(0), *d)
    }
    fn one(d: &i64) -> Self {
        QuadExt::rational(Rational::from(1), *d)
    }
    fn from_i64(n: i64, d: &i64) -> Self {
        QuadExt::rational(Rational::from(n), *d)
    }
    fn characteristic(_: &i64) -> u64 {
        0
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        QuadExt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            d: self.d,
        }
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        QuadExt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            d: self.d,
        }
    }
    fn times(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        let d = Rational::from(self.d);
        QuadExt {
            a: &self.a * &rhs.a + &d * &(&self.b * &rhs.b),
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            d: self.d,
        }
    }
    fn negate(&self) -> Self {
        QuadExt {
            a: -&self.a,
            b: -&self.b,
            d: self.d,
        }
    }
    fn inverse(&self) -> Option<Self> {
        // d is not a square, so the norm vanishes only at zero.
        let n = self.norm().recip()?;
        Some(QuadExt {
            a: &self.a * &n,
            b: -(&self.b * &n),
            d: self.d,
        })
    }
    fn parse(text: &str, d: &i64) -> Result<Self> {
        let (a, b, found) = QuadExt::parse_any(text)?;
        match found {
            Some(e) if e != *d => Err(AlgebraError::DomainMismatch {
                left: format!("Q(sqrt({d}))"),
                right: format!("Q(sqrt({e}))"),
            }),
            _ => Ok(QuadExt { a, b, d: *d }),
        }
    }
}

impl FromRational for QuadExt {
    fn from_rational(q: &Rational, d: &i64) -> Result<Self> {
        Ok(QuadExt::rational(q.clone(), *d))
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let b_abs = self.b.abs();
        let coeff = if b_abs == 1 { String::new() } else { format!("{b_abs}*") };
        let neg = self.b.signum() < 0;
        if self.a.is_zero() {
            write!(f, "{}{coeff}sqrt({})", if neg { "-" } else { "" }, self.d)
        } else {
            write!(f, "{}{}{coeff}sqrt({})", self.a, if neg { "-" } else { "+" }, self.d)
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QuadExt {
        let (a, b, d) = QuadExt::parse_any(s).unwrap();
        QuadExt::new(a, b, d.unwrap()).unwrap()
    }

    #[test]
    fn parses_table_style_coordinates() {
        let z = q("27-77/2*sqrt(-1)");
        assert_eq!(z.a(), &Rational::from(27));
        assert_eq!(z.b(), &Rational::frac(-77, 2));
        assert_eq!(z.radicand(), -1);
        let w = q("-15/8+35/8*sqrt(5)");
        assert_eq!(w.a(), &Rational::frac(-15, 8));
        assert_eq!(w.b(), &Rational::frac(35, 8));
        assert_eq!(q("-sqrt(5)").b(), &Rational::from(-1));
        assert_eq!(q("sqrt(20)").b(), &Rational::from(2));
        assert_eq!(q("sqrt(20)").radicand(), 5);
        assert_eq!(QuadExt::parse_any("3/4").unwrap().2, None);
        assert_eq!(QuadExt::parse_any("1+sqrt(4)").unwrap().0, Rational::from(3));
    }

    #[test]
    fn display_round_trips() {
        for s in ["27-77/2*sqrt(-1)", "-15/8+35/8*sqrt(5)", "sqrt(5)", "-sqrt(-1)", "2/3"] {
            let v = QuadExt::parse(s, &if s.contains("-1)") { -1 } else { 5 }).unwrap();
            assert_eq!(v.to_string(), s);
        }
    }

    #[test]
    fn rejects_bad_radicands() {
        assert!(QuadExt::new(Rational::from(1), Rational::from(1), 4).is_err());
        assert!(QuadExt::new(Rational::from(1), Rational::from(1), 12).is_err());
        assert!(QuadExt::new(Rational::from(1), Rational::from(1), 1).is_err());
        assert!(QuadExt::parse("sqrt(7)", &5).is_err());
    }

    #[test]
    fn mixed_radicands_are_an_error() {
        let a = QuadExt::sqrt_d(5).unwrap();
        let b = QuadExt::sqrt_d(-1).unwrap();
        assert!(matches!(a.checked_plus(&b), Err(AlgebraError::DomainMismatch { .. })));
        assert!(a.checked_times(&a).unwrap() == QuadExt::from_i64(5, &5));
    }

    #[test]
    fn inverse_and_norm() {
        let z = q("27-77/2*sqrt(-1)");
        let one = z.times(&z.inverse().unwrap());
        assert!(one.is_one());
        assert_eq!(z.times(&z.conjugate()).to_rational().unwrap(), z.norm());
    }
}
