//! Parsing of command-line coordinates.

use std::fmt;

use dashu_float::DBig;
use splitjac_algebra::{check_prime, Fp, FromRational, QuadExt, Rational};
use splitjac_core::catalog::ExactPoint;
use splitjac_core::numeric;

/// Malformed input; reported with exit code 2.
#[derive(Debug)]
pub struct UsageError(String);

impl UsageError {
    pub fn new(msg: impl Into<String>) -> Self {
        UsageError(msg.into())
    }
}

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Coordinates in ℚ, a quadratic field or GF(p).
pub enum Point {
    Rational(Vec<Rational>),
    Quad(Vec<QuadExt>),
    Mod(Vec<Fp>),
}

/// Runs `$body` with `$p` bound to the coordinate vector, whatever its field.
macro_rules! on_point {
    ($point:expr, $p:ident => $body:expr) => {
        match $point {
            $crate::input::Point::Rational($p) => $body,
            $crate::input::Point::Quad($p) => $body,
            $crate::input::Point::Mod($p) => $body,
        }
    };
}
pub(crate) use on_point;

impl Point {
    pub fn field(&self) -> String {
        match self {
            Point::Rational(_) => "Q".into(),
            Point::Quad(v) => format!("Q(sqrt({}))", v[0].radicand()),
            Point::Mod(v) => format!("GF({})", v[0].modulus()),
        }
    }

    pub fn exact(&self) -> Option<ExactPoint> {
        match self {
            Point::Rational(v) => Some(ExactPoint::Rational(v.clone())),
            Point::Quad(v) => Some(ExactPoint::Quad(v.clone())),
            Point::Mod(_) => None,
        }
    }

    /// Decimal approximation; only real points qualify.
    pub fn decimals(&self, digits: usize) -> Result<Vec<DBig>, UsageError> {
        match self {
            Point::Rational(v) => Ok(v.iter().map(|x| numeric::to_float(x, digits)).collect()),
            Point::Quad(v) => {
                let d = v[0].radicand();
                if d < 0 {
                    return Err(UsageError::new(format!(
                        "sqrt({d}) is not real; numeric evaluation needs real input"
                    )));
                }
                let root = numeric::sqrt(&numeric::to_float(&Rational::integer(d), digits));
                Ok(v.iter()
                    .map(|x| numeric::to_float(x.a(), digits) + numeric::to_float(x.b(), digits) * &root)
                    .collect())
            }
            Point::Mod(_) => Err(UsageError::new("numeric evaluation is not available over GF(p)")),
        }
    }
}

/// Parses each argument as `a`, `n/d`, a decimal or `a+b*sqrt(d)`, and
/// reduces modulo `prime` when one is given.
pub fn parse_point(args: &[String], prime: Option<u64>) -> anyhow::Result<Point> {
    for (i, a) in args.iter().enumerate() {
        QuadExt::parse_any(a).map_err(|e| UsageError::new(format!("argument {} `{a}`: {e}", i + 1)))?;
    }
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    let exact = ExactPoint::parse(&refs).map_err(|e| UsageError::new(e.to_string()))?;
    let Some(p) = prime else {
        return Ok(match exact {
            ExactPoint::Rational(v) => Point::Rational(v),
            ExactPoint::Quad(v) => Point::Quad(v),
        });
    };
    check_prime(p).map_err(|e| UsageError::new(e.to_string()))?;
    let ExactPoint::Rational(v) = exact else {
        return Err(UsageError::new("quadratic irrationals cannot be combined with --prime").into());
    };
    let reduced = v
        .iter()
        .map(|x| Fp::from_rational(x, &p))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Point::Mod(reduced))
}

/// A positive rational grid step.
pub fn parse_step(text: &str) -> anyhow::Result<Rational> {
    let step: Rational = text
        .parse()
        .map_err(|e| UsageError::new(format!("step `{text}`: {e}")))?;
    if step <= Rational::integer(0) {
        return Err(UsageError::new(format!("step must be positive, got {text}")).into());
    }
    Ok(step)
}
