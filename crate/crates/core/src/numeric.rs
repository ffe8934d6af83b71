//! Fixed-precision decimal evaluation of rational polynomials.

use std::str::FromStr;

use dashu_float::ops::{Abs, SquareRoot};
use dashu_float::DBig;
use splitjac_algebra::{MultiPoly, Rational};

use crate::error::{CoreError, Result};

/// Smallest working precision accepted by the numeric checks.
pub const MIN_PRECISION: usize = 50;

pub fn check_precision(digits: usize) -> Result<()> {
    if digits < MIN_PRECISION {
        return Err(CoreError::DegenerateParameters(format!(
            "precision must be at least {MIN_PRECISION} digits, got {digits}"
        )));
    }
    Ok(())
}

fn integer(n: &impl ToString, digits: usize) -> DBig {
    DBig::from_str(&n.to_string())
        .expect("decimal integer")
        .with_precision(digits)
        .value()
}

pub fn to_float(q: &Rational, digits: usize) -> DBig {
    integer(q.numer(), digits) / integer(q.denom(), digits)
}

pub fn sqrt(x: &DBig) -> DBig {
    x.sqrt()
}

pub fn to_f64(x: &DBig) -> f64 {
    x.to_f64().value()
}

/// 10^(-digits/2).
pub fn tolerance(digits: usize) -> DBig {
    let one = integer(&1, digits);
    let ten = integer(&10, digits);
    let mut scale = one.clone();
    for _ in 0..digits / 2 {
        scale *= &ten;
    }
    one / scale
}

/// A polynomial value together with the largest term magnitude in the sum.
#[derive(Clone, Debug)]
pub struct ScaledValue {
    pub value: DBig,
    pub scale: DBig,
}

impl ScaledValue {
    /// |value| / scale, or 0 when every term vanishes.
    pub fn relative(&self) -> DBig {
        if self.scale == DBig::ZERO {
            return DBig::ZERO;
        }
        self.value.clone().abs() / &self.scale
    }
}

pub fn evaluate(p: &MultiPoly<Rational>, point: &[DBig], digits: usize) -> Result<ScaledValue> {
    if point.len() != p.vars().len() {
        return Err(splitjac_algebra::AlgebraError::UnboundVariable(format!(
            "{} coordinates for {} variables",
            point.len(),
            p.vars().len()
        ))
        .into());
    }
    let mut value = DBig::ZERO.with_precision(digits).value();
    let mut scale = DBig::ZERO;
    for (m, c) in p.terms() {
        let mut t = to_float(c, digits);
        for (x, &e) in point.iter().zip(m.exponents()) {
            for _ in 0..e {
                t *= x;
            }
        }
        let size = t.clone().abs();
        if size > scale {
            scale = size;
        }
        value += t;
    }
    Ok(ScaledValue { value, scale })
}

#[cfg(test)]
mod tests {
    use super::*;
    use splitjac_algebra::parse_polynomial;

    #[test]
    fn cancellation_is_measured_against_the_largest_term() {
        let p = parse_polynomial::<Rational>("x^2 - 2", &["x"], &()).unwrap();
        let two = to_float(&Rational::integer(2), 60);
        let r = evaluate(&p, &[sqrt(&two)], 60).unwrap();
        assert!(r.relative() < tolerance(60));
        let r = evaluate(&p, &[to_float(&Rational::frac(7, 5), 60)], 60).unwrap();
        assert!(r.relative() > tolerance(60));
    }

    #[test]
    fn thirds_round_trip() {
        let third = to_float(&Rational::frac(1, 3), 60);
        let back = third * to_float(&Rational::integer(3), 60);
        let err = (back - to_float(&Rational::integer(1), 60)).abs();
        assert!(err < tolerance(100));
    }

    #[test]
    fn low_precision_is_rejected() {
        assert!(check_precision(49).is_err());
        assert!(check_precision(50).is_ok());
    }
}
