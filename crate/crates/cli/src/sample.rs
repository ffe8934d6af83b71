//! Point clouds of (i1, i2, i3) over parameter grids.

use std::fmt;
use std::str::FromStr;

use clap::ValueEnum;
use serde_json::{json, Value};
use splitjac_algebra::{Rational, Scalar};
use splitjac_core::surfaces::theta_checked;
use splitjac_core::{absolute_from_igusa, igusa_from_sextic, numeric, CoreError, SexticForm};

/// Significant digits of the exported decimals.
pub const DEFAULT_DIGITS: usize = 40;

pub const HEADER: &str = "i1,i2,i3,param1,param2";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SampleSurface {
    /// theta(u, v) over a (u, v) grid
    #[value(name = "s3_via_theta")]
    S3ViaTheta,
    /// Invariants of x^6 + a*x^4 + b*x^2 + 1 over an (a, b) grid
    #[value(name = "s2_via_oracle")]
    S2ViaOracle,
}

impl SampleSurface {
    fn name(self) -> &'static str {
        match self {
            SampleSurface::S3ViaTheta => "s3_via_theta",
            SampleSurface::S2ViaOracle => "s2_via_oracle",
        }
    }

    fn parameters(self) -> [&'static str; 2] {
        match self {
            SampleSurface::S3ViaTheta => ["u", "v"],
            SampleSurface::S2ViaOracle => ["a", "b"],
        }
    }

    fn invariants(self, p1: &Rational, p2: &Rational) -> Result<[Rational; 3], CoreError> {
        match self {
            SampleSurface::S3ViaTheta => Ok(theta_checked(p1, p2)?.as_array()),
            SampleSurface::S2ViaOracle => {
                let (zero, one) = (Rational::integer(0), Rational::integer(1));
                let coeffs = vec![
                    one.clone(),
                    zero.clone(),
                    p2.clone(),
                    zero.clone(),
                    p1.clone(),
                    zero,
                    one,
                ];
                let j = igusa_from_sextic(&SexticForm::new(coeffs)?)?;
                if j.j10.is_zero() {
                    return Err(CoreError::NoGenus2Curve);
                }
                Ok(absolute_from_igusa(&j)?.as_array())
            }
        }
    }
}

/// Closed parameter range `LO:HI`.
#[derive(Clone, Debug)]
pub struct Grid {
    lo: Rational,
    hi: Rational,
}

impl FromStr for Grid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = s.split_once(':').ok_or_else(|| format!("expected LO:HI, got `{s}`"))?;
        let parse = |t: &str| t.parse::<Rational>().map_err(|e| format!("`{t}`: {e}"));
        Ok(Grid {
            lo: parse(lo)?,
            hi: parse(hi)?,
        })
    }
}

impl Grid {
    pub fn with_step(&self, step: Rational) -> Axis {
        Axis {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
            step,
        }
    }
}

/// Grid values `lo, lo + step, …` up to and including `hi`.
pub struct Axis {
    lo: Rational,
    hi: Rational,
    step: Rational,
}

impl Axis {
    fn values(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        let mut x = self.lo.clone();
        while x <= self.hi {
            out.push(x.clone());
            x = &x + &self.step;
        }
        out
    }
}

pub struct Skip {
    names: [&'static str; 2],
    params: [Rational; 2],
    reason: String,
}

impl fmt::Display for Skip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}={}, {}={}: {}",
            self.names[0], self.params[0], self.names[1], self.params[1], self.reason
        )
    }
}

pub struct Cloud {
    surface: SampleSurface,
    digits: usize,
    pub rows: Vec<[String; 5]>,
    pub skipped: Vec<Skip>,
}

impl Cloud {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(HEADER);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let keys: Vec<&str> = HEADER.split(',').collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| Value::Object(keys.iter().zip(r).map(|(k, v)| (k.to_string(), json!(v))).collect()))
            .collect();
        json!({
            "surface": self.surface.name(),
            "parameters": self.surface.parameters(),
            "precision": self.digits,
            "rows": rows,
            "skipped": self.skipped.iter().map(ToString::to_string).collect::<Vec<_>>(),
        })
    }
}

fn decimal(q: &Rational, digits: usize) -> String {
    numeric::to_float(q, digits).to_string()
}

pub fn sample(surface: SampleSurface, first: &Axis, second: &Axis, digits: usize) -> anyhow::Result<Cloud> {
    let mut cloud = Cloud {
        surface,
        digits,
        rows: Vec::new(),
        skipped: Vec::new(),
    };
    let second = second.values();
    for p1 in first.values() {
        for p2 in &second {
            match surface.invariants(&p1, p2) {
                Ok(i) => cloud.rows.push([
                    decimal(&i[0], digits),
                    decimal(&i[1], digits),
                    decimal(&i[2], digits),
                    decimal(&p1, digits),
                    decimal(p2, digits),
                ]),
                Err(e) => cloud.skipped.push(Skip {
                    names: surface.parameters(),
                    params: [p1.clone(), p2.clone()],
                    reason: e.to_string(),
                }),
            }
        }
    }
    Ok(cloud)
}
