//! Parsed form of the transcribed equations.

pub mod transcription;

use std::sync::OnceLock;

use splitjac_algebra::{
    parse_polynomial, parse_rational_function, Fp, MultiPoly, QuadExt, Rational, RationalFunction, Scalar,
};

use crate::error::{CoreError, Result};
use transcription as t;

pub const XYZ: [&str; 3] = ["x", "y", "z"];
pub const XY: [&str; 2] = ["x", "y"];
pub const UV: [&str; 2] = ["u", "v"];
pub const R1R2: [&str; 2] = ["r1", "r2"];

/// A point with rational or quadratic-irrational coordinates.
#[derive(Clone, Debug, PartialEq)]
pub enum ExactPoint {
    Rational(Vec<Rational>),
    Quad(Vec<QuadExt>),
}

impl ExactPoint {
    /// Parses coordinates such as `25/2` or `-15/8+35/8*sqrt(5)`. All
    /// irrational coordinates must share one radicand.
    pub fn parse(coords: &[&str]) -> Result<Self> {
        let parsed = coords
            .iter()
            .map(|c| QuadExt::parse_any(c))
            .collect::<splitjac_algebra::Result<Vec<_>>>()?;
        let mut radicand = None;
        for (_, b, d) in &parsed {
            if let Some(d) = d {
                if b.is_zero() {
                    continue;
                }
                match radicand {
                    None => radicand = Some(*d),
                    Some(r) if r == *d => {}
                    Some(r) => {
                        return Err(splitjac_algebra::AlgebraError::DomainMismatch {
                            left: format!("Q(sqrt({r}))"),
                            right: format!("Q(sqrt({d}))"),
                        }
                        .into())
                    }
                }
            }
        }
        Ok(match radicand {
            None => ExactPoint::Rational(parsed.into_iter().map(|(a, _, _)| a).collect()),
            Some(d) => ExactPoint::Quad(
                parsed
                    .into_iter()
                    .map(|(a, b, _)| QuadExt::new(a, b, d))
                    .collect::<splitjac_algebra::Result<_>>()?,
            ),
        })
    }

    pub fn to_strings(&self) -> Vec<String> {
        match self {
            ExactPoint::Rational(v) => v.iter().map(ToString::to_string).collect(),
            ExactPoint::Quad(v) => v.iter().map(ToString::to_string).collect(),
        }
    }
}

/// Group label attached to a point of the (2,2) surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum AutGroup {
    D4,
    D6,
}

impl AutGroup {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "D4" => Some(AutGroup::D4),
            "D6" => Some(AutGroup::D6),
            _ => None,
        }
    }
}

impl std::fmt::Display for AutGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            AutGroup::D4 => "D4",
            AutGroup::D6 => "D6",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Table1Record {
    /// Coordinates exactly as printed.
    pub printed: Vec<[&'static str; 2]>,
    pub points: Vec<ExactPoint>,
    pub expected: Option<[Rational; 3]>,
    pub aut: Option<AutGroup>,
    pub e3: u32,
}

/// A printed table coordinate that does not map to its row, with the value
/// that does. Established by exact evaluation of θ and of the Jacobian
/// minors at both candidates.
#[derive(Clone, Debug)]
pub struct Correction {
    pub row: usize,
    pub printed: [&'static str; 2],
    pub corrected: [&'static str; 2],
    pub note: &'static str,
}

pub const TABLE1_CORRECTIONS: [Correction; 3] = [
    Correction {
        row: 1,
        printed: ["-775/8", "125/96"],
        corrected: ["-775/8", "125/36"],
        note: "v denominator printed as 96; 36 reproduces the row",
    },
    Correction {
        row: 3,
        printed: ["-15+35/8*sqrt(5)", "25/2+35/6*sqrt(5)"],
        corrected: ["-15/8+35/8*sqrt(5)", "25/2+35/6*sqrt(5)"],
        note: "rational part of u printed as -15; -15/8 reproduces the row",
    },
    Correction {
        row: 3,
        printed: ["-15-35/8*sqrt(5)", "25/2-35/6*sqrt(5)"],
        corrected: ["-15/8-35/8*sqrt(5)", "25/2-35/6*sqrt(5)"],
        note: "rational part of u printed as -15; -15/8 reproduces the row",
    },
];

pub struct Catalog {
    pub s2: MultiPoly<Rational>,
    pub s3_mod5: MultiPoly<Fp>,
    pub phi1: MultiPoly<Rational>,
    pub phi2: MultiPoly<Rational>,
    pub c1: MultiPoly<Rational>,
    pub c2: MultiPoly<Rational>,
    pub c3: [MultiPoly<Rational>; 2],
    pub c3_y: RationalFunction<Rational>,
    pub c3_cubic: MultiPoly<Rational>,
    pub theta_quadratic: MultiPoly<Rational>,
    pub theta: [RationalFunction<Rational>; 3],
    pub eqr: [RationalFunction<Rational>; 2],
    pub rho_quadratic: MultiPoly<Rational>,
    pub rho: [RationalFunction<Rational>; 3],
    pub r1r2_system: [MultiPoly<Rational>; 3],
    pub iso1: MultiPoly<Rational>,
    pub j2_locus: MultiPoly<Rational>,
    pub c3_points: Vec<[Rational; 2]>,
    pub s2_special_point: [Rational; 3],
    pub r1r2_points: Vec<[Rational; 2]>,
    pub t3_points: Vec<[Rational; 3]>,
    pub t3_groups: Vec<AutGroup>,
    pub table1: Vec<Table1Record>,
}

fn poly(text: &str, vars: &[&str]) -> MultiPoly<Rational> {
    parse_polynomial(text, vars, &()).unwrap_or_else(|e| panic!("transcription does not parse: {e}"))
}

fn ratfunc(text: &str, vars: &[&str]) -> RationalFunction<Rational> {
    parse_rational_function(text, vars, &()).unwrap_or_else(|e| panic!("transcription does not parse: {e}"))
}

fn rationals<const N: usize>(texts: [&str; N]) -> [Rational; N] {
    texts.map(|s| s.parse().expect("rational literal"))
}

/// Replaces the one-letter abbreviation `name` by the parenthesized body.
fn expand_abbreviation(text: &str, name: char, body: &str) -> String {
    let mut out = String::with_capacity(text.len() + 8 * body.len());
    let chars: Vec<char> = text.chars().collect();
    for (i, &c) in chars.iter().enumerate() {
        let isolated = |j: Option<&char>| j.map_or(true, |c| !c.is_alphanumeric());
        if c == name && isolated(i.checked_sub(1).and_then(|j| chars.get(j))) && isolated(chars.get(i + 1)) {
            out.push('(');
            out.push_str(body.trim());
            out.push(')');
        } else {
            out.push(c);
        }
    }
    out
}

impl Catalog {
    /// The parsed catalog, built on first use.
    pub fn get() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(Catalog::build)
    }

    fn build() -> Catalog {
        let theta = |text: &str| ratfunc(&expand_abbreviation(text, 'Q', t::THETA_QUADRATIC), &UV);
        let rho = |text: &str| ratfunc(&expand_abbreviation(text, 'P', t::RHO_QUADRATIC), &R1R2);
        let table1 = t::TABLE1
            .iter()
            .map(|row| Table1Record {
                printed: row.points.to_vec(),
                points: row
                    .points
                    .iter()
                    .map(|p| ExactPoint::parse(p).expect("table coordinate"))
                    .collect(),
                expected: row.invariants.map(rationals),
                aut: row.aut.and_then(AutGroup::parse),
                e3: row.e3,
            })
            .collect();
        Catalog {
            s2: poly(t::S2, &XYZ),
            s3_mod5: parse_polynomial(t::S3_MOD5, &XYZ, &5).expect("transcription does not parse"),
            phi1: poly(t::PHI1, &XY),
            phi2: poly(t::PHI2, &XY),
            c1: poly(t::C1, &XY),
            c2: poly(t::C2, &XY),
            c3: [poly(t::C3_FIRST, &XY), poly(t::C3_SECOND, &XY)],
            c3_y: ratfunc(t::C3_Y, &["x"]),
            c3_cubic: poly(t::C3_CUBIC, &["x"]),
            theta_quadratic: poly(t::THETA_QUADRATIC, &UV),
            theta: [theta(t::THETA_I1), theta(t::THETA_I2), theta(t::THETA_I3)],
            eqr: [ratfunc(t::EQR_R1, &UV), ratfunc(t::EQR_R2, &UV)],
            rho_quadratic: poly(t::RHO_QUADRATIC, &R1R2),
            rho: [rho(t::RHO_I1), rho(t::RHO_I2), rho(t::RHO_I3)],
            r1r2_system: [
                poly(t::R1R2_SYSTEM_1, &R1R2),
                poly(t::R1R2_SYSTEM_2, &R1R2),
                poly(t::R1R2_SYSTEM_3, &R1R2),
            ],
            iso1: poly(t::ISO1, &UV),
            j2_locus: poly(t::J2_LOCUS, &R1R2),
            c3_points: t::C3_POINTS.iter().map(|p| rationals(*p)).collect(),
            s2_special_point: rationals(t::S2_SPECIAL_POINT),
            r1r2_points: t::R1R2_POINTS.iter().map(|p| rationals(*p)).collect(),
            t3_points: t::T3_POINTS.iter().map(|p| rationals(*p)).collect(),
            t3_groups: t::T3_GROUPS
                .iter()
                .map(|g| AutGroup::parse(g).expect("group"))
                .collect(),
            table1,
        }
    }

    /// Every stored polynomial by name, for export.
    pub fn named_polynomials(&self) -> Vec<(&'static str, String)> {
        use splitjac_algebra::to_text;
        let mut out = vec![
            ("S2", to_text(&self.s2)),
            ("S3mod5", to_text(&self.s3_mod5)),
            ("phi1", to_text(&self.phi1)),
            ("phi2", to_text(&self.phi2)),
            ("C1", to_text(&self.c1)),
            ("C2", to_text(&self.c2)),
            ("C3a", to_text(&self.c3[0])),
            ("C3b", to_text(&self.c3[1])),
            ("C3cubic", to_text(&self.c3_cubic)),
            ("iso1", to_text(&self.iso1)),
            ("J2locus", to_text(&self.j2_locus)),
        ];
        for (i, p) in self.r1r2_system.iter().enumerate() {
            out.push((["E1", "E2", "E3"][i], to_text(p)));
        }
        out
    }
}

/// Looks up a correction for a printed table coordinate.
pub fn correction_for(printed: &[&str; 2]) -> Option<&'static Correction> {
    TABLE1_CORRECTIONS.iter().find(|c| c.printed == *printed)
}

pub(crate) fn require_char5(p: u64) -> Result<()> {
    if p != 5 {
        return Err(CoreError::UnsupportedCharacteristic(p));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use splitjac_algebra::Scalar;

    #[test]
    fn term_counts() {
        let c = Catalog::get();
        assert_eq!(c.s2.num_terms(), 24);
        assert_eq!(c.s3_mod5.num_terms(), 146);
        assert_eq!(c.s3_mod5.total_degree(), Some(20));
        assert!(c.s3_mod5.constant_term().is_zero());
        assert_eq!(c.phi1.num_terms(), 14);
        assert_eq!(c.phi2.num_terms(), 8);
        assert_eq!(c.table1.len(), 4);
    }

    #[test]
    fn denominators_stay_factored() {
        let c = Catalog::get();
        for f in &c.theta {
            assert_eq!(f.denominator_factors().len(), 2, "{f}");
        }
        assert_eq!(c.rho[2].denominator_factors().len(), 2);
        assert_eq!(c.eqr[1].denominator_factors().len(), 2);
    }

    #[test]
    fn s2_derivative_in_z() {
        let s2 = &Catalog::get().s2;
        let dz = s2.partial_derivative("z").unwrap();
        assert_eq!(s2.coefficient(&[0, 0, 3]), Rational::integer(-264180754022400000i64));
        assert_eq!(dz.coefficient(&[0, 0, 2]), Rational::integer(-792542262067200000i64));
    }

    #[test]
    fn mixed_radicands_are_rejected() {
        assert!(ExactPoint::parse(&["sqrt(5)", "sqrt(-1)"]).is_err());
        assert!(matches!(
            ExactPoint::parse(&["1/2", "3"]).unwrap(),
            ExactPoint::Rational(_)
        ));
        assert!(matches!(
            ExactPoint::parse(&["1/2", "3+sqrt(5)"]).unwrap(),
            ExactPoint::Quad(_)
        ));
    }

    #[test]
    fn abbreviation_expansion_is_whole_word() {
        assert_eq!(expand_abbreviation("Q^2*Qx", 'Q', "a+b"), "(a+b)^2*Qx");
    }
}
