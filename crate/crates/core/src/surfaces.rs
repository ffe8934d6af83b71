//! Evaluation of the stored parametrizations and surfaces.

use serde::Serialize;
use splitjac_algebra::{Fp, FromRational, MultiPoly, QuadExt, Rational, RationalFunction, Scalar};

use crate::catalog::{transcription as t, Catalog, ExactPoint};
use crate::error::{CoreError, Result};
use crate::invariants::{curve_from_uv, igusa_from_sextic, AbsoluteInvariants};

const EQR_CUBIC: &str = "4*v^2 - 18*u*v + 27*v - u^2*v + 4*u^3";

fn eval<F: FromRational>(p: &MultiPoly<Rational>, point: &[F]) -> Result<F> {
    Ok(p.evaluate_in(point, &point[0].domain())?)
}

fn eval_rf<F: FromRational>(f: &RationalFunction<Rational>, point: &[F]) -> Result<F> {
    Ok(f.evaluate_in(point, &point[0].domain())?)
}

fn j2_factor(text: &str) -> String {
    format!("{} (J2 = 0)", text.trim())
}

/// θ(u, v) = (i1, i2, i3) from the stored rational functions.
pub fn theta<F: FromRational>(u: &F, v: &F) -> Result<AbsoluteInvariants<F>> {
    let c = Catalog::get();
    let pt = [u.clone(), v.clone()];
    if v.is_zero() {
        return Err(CoreError::ThetaUndefined { factor: "v".into() });
    }
    if eval(&c.theta_quadratic, &pt)?.is_zero() {
        return Err(CoreError::ThetaUndefined {
            factor: j2_factor(t::THETA_QUADRATIC),
        });
    }
    Ok(AbsoluteInvariants {
        i1: eval_rf(&c.theta[0], &pt)?,
        i2: eval_rf(&c.theta[1], &pt)?,
        i3: eval_rf(&c.theta[2], &pt)?,
    })
}

/// θ restricted to parameters that define a genus 2 curve.
pub fn theta_checked<F: FromRational>(u: &F, v: &F) -> Result<AbsoluteInvariants<F>> {
    let (sextic, _) = curve_from_uv(u, v)?;
    if igusa_from_sextic(&sextic)?.j10.is_zero() {
        return Err(CoreError::NoGenus2Curve);
    }
    theta(u, v)
}

/// (r1, r2) as functions of (u, v).
pub fn uv_to_r<F: FromRational>(u: &F, v: &F) -> Result<(F, F)> {
    let c = Catalog::get();
    let pt = [u.clone(), v.clone()];
    let cubic = &c.eqr[0].denominator_factors()[0].0;
    if eval(cubic, &pt)?.is_zero() {
        return Err(CoreError::EqRUndefined {
            factor: EQR_CUBIC.into(),
        });
    }
    if v.minus(&F::from_i64(27, &v.domain())).is_zero() {
        return Err(CoreError::EqRUndefined {
            factor: "v - 27".into(),
        });
    }
    Ok((eval_rf(&c.eqr[0], &pt)?, eval_rf(&c.eqr[1], &pt)?))
}

/// ρ(r1, r2) = (i1, i2, i3).
pub fn rho<F: FromRational>(r1: &F, r2: &F) -> Result<AbsoluteInvariants<F>> {
    let c = Catalog::get();
    let pt = [r1.clone(), r2.clone()];
    if r1.is_zero() {
        return Err(CoreError::RhoUndefined { factor: "r1".into() });
    }
    if eval(&c.rho_quadratic, &pt)?.is_zero() {
        return Err(CoreError::RhoUndefined {
            factor: j2_factor(t::RHO_QUADRATIC),
        });
    }
    Ok(AbsoluteInvariants {
        i1: eval_rf(&c.rho[0], &pt)?,
        i2: eval_rf(&c.rho[1], &pt)?,
        i3: eval_rf(&c.rho[2], &pt)?,
    })
}

/// Stored polynomials that can be evaluated by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SurfaceId {
    S2,
    S3Mod5,
    Phi1,
    Phi2,
    C1,
    C2,
    C3a,
    C3b,
    C3Cubic,
    Iso1,
    J2Locus,
    E1,
    E2,
    E3,
}

impl SurfaceId {
    pub const ALL: [SurfaceId; 14] = [
        SurfaceId::S2,
        SurfaceId::S3Mod5,
        SurfaceId::Phi1,
        SurfaceId::Phi2,
        SurfaceId::C1,
        SurfaceId::C2,
        SurfaceId::C3a,
        SurfaceId::C3b,
        SurfaceId::C3Cubic,
        SurfaceId::Iso1,
        SurfaceId::J2Locus,
        SurfaceId::E1,
        SurfaceId::E2,
        SurfaceId::E3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SurfaceId::S2 => "S2",
            SurfaceId::S3Mod5 => "S3mod5",
            SurfaceId::Phi1 => "phi1",
            SurfaceId::Phi2 => "phi2",
            SurfaceId::C1 => "C1",
            SurfaceId::C2 => "C2",
            SurfaceId::C3a => "C3a",
            SurfaceId::C3b => "C3b",
            SurfaceId::C3Cubic => "C3cubic",
            SurfaceId::Iso1 => "iso1",
            SurfaceId::J2Locus => "J2locus",
            SurfaceId::E1 => "E1",
            SurfaceId::E2 => "E2",
            SurfaceId::E3 => "E3",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.name().eq_ignore_ascii_case(name))
    }

    /// The stored polynomial over ℚ; `None` for the mod-5 surface.
    pub fn rational_poly(self) -> Option<&'static MultiPoly<Rational>> {
        let c = Catalog::get();
        Some(match self {
            SurfaceId::S2 => &c.s2,
            SurfaceId::S3Mod5 => return None,
            SurfaceId::Phi1 => &c.phi1,
            SurfaceId::Phi2 => &c.phi2,
            SurfaceId::C1 => &c.c1,
            SurfaceId::C2 => &c.c2,
            SurfaceId::C3a => &c.c3[0],
            SurfaceId::C3b => &c.c3[1],
            SurfaceId::C3Cubic => &c.c3_cubic,
            SurfaceId::Iso1 => &c.iso1,
            SurfaceId::J2Locus => &c.j2_locus,
            SurfaceId::E1 => &c.r1r2_system[0],
            SurfaceId::E2 => &c.r1r2_system[1],
            SurfaceId::E3 => &c.r1r2_system[2],
        })
    }

    pub fn vars(self) -> Vec<String> {
        match self.rational_poly() {
            Some(p) => p.vars().to_vec(),
            None => Catalog::get().s3_mod5.vars().to_vec(),
        }
    }
}

/// Result of evaluating a stored polynomial.
#[derive(Clone, Debug, PartialEq)]
pub enum ExactValue {
    Rational(Rational),
    Quad(QuadExt),
    Mod(Fp),
}

impl ExactValue {
    pub fn is_zero(&self) -> bool {
        match self {
            ExactValue::Rational(x) => x.is_zero(),
            ExactValue::Quad(x) => x.is_zero(),
            ExactValue::Mod(x) => x.is_zero(),
        }
    }
}

impl std::fmt::Display for ExactValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExactValue::Rational(x) => write!(f, "{x}"),
            ExactValue::Quad(x) => write!(f, "{x}"),
            ExactValue::Mod(x) => write!(f, "{x}"),
        }
    }
}

/// Evaluates the mod-5 surface at a point of any field of characteristic 5.
pub fn eval_s3_mod5<G: Scalar>(point: &[G], embed: impl Fn(&Fp) -> G) -> Result<G> {
    let dom = point
        .first()
        .map(Scalar::domain)
        .ok_or_else(|| splitjac_algebra::AlgebraError::UnboundVariable("x".into()))?;
    crate::catalog::require_char5(G::characteristic(&dom))?;
    Ok(Catalog::get().s3_mod5.evaluate_with(point, &dom, |c| Ok(embed(c)))?)
}

/// Evaluates a stored polynomial at an exact point. Rational points are
/// reduced modulo 5 for the mod-5 surface.
pub fn surface_eval(id: SurfaceId, point: &ExactPoint) -> Result<ExactValue> {
    let nvars = id.vars().len();
    let len = match point {
        ExactPoint::Rational(v) => v.len(),
        ExactPoint::Quad(v) => v.len(),
    };
    if len != nvars {
        return Err(splitjac_algebra::AlgebraError::UnboundVariable(format!(
            "{} expects {nvars} coordinates, got {len}",
            id.name()
        ))
        .into());
    }
    match (id.rational_poly(), point) {
        (Some(p), ExactPoint::Rational(x)) => Ok(ExactValue::Rational(p.evaluate(x)?)),
        (Some(p), ExactPoint::Quad(x)) => Ok(ExactValue::Quad(eval(p, x)?)),
        (None, ExactPoint::Rational(x)) => {
            let reduced = x
                .iter()
                .map(|c| Fp::from_rational(c, &5))
                .collect::<splitjac_algebra::Result<Vec<_>>>()?;
            Ok(ExactValue::Mod(eval_s3_mod5(&reduced, Clone::clone)?))
        }
        (None, ExactPoint::Quad(_)) => Err(splitjac_algebra::AlgebraError::DomainMismatch {
            left: "GF(5)".into(),
            right: "quadratic field".into(),
        }
        .into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn theta_at_one_one() {
        let a = theta(&q(1, 1), &q(1, 1)).unwrap();
        assert_eq!(
            a.as_array(),
            [q(77472, 2809), q(-19951488, 148877), q(-25272, 418195493)]
        );
    }

    #[test]
    fn theta_table_row_two() {
        let a = theta(&q(25, 2), &q(250, 9)).unwrap();
        assert_eq!(a.as_array(), [q(-8019, 20), q(-1240029, 200), q(-531441, 100000)]);
    }

    #[test]
    fn theta_rejects_its_denominators() {
        assert_eq!(
            theta(&q(1, 1), &q(0, 1)),
            Err(CoreError::ThetaUndefined { factor: "v".into() })
        );
        // The quadratic factor restricts to 4(u − 9)² on v = 27.
        let err = theta(&q(9, 1), &q(27, 1)).unwrap_err();
        assert!(matches!(err, CoreError::ThetaUndefined { factor } if factor.contains("J2 = 0")));
    }

    #[test]
    fn degenerate_row_has_no_curve() {
        assert_eq!(theta_checked(&q(-7, 2), &q(2, 1)), Err(CoreError::NoGenus2Curve));
        assert!(theta(&q(-7, 2), &q(2, 1)).is_ok());
    }

    #[test]
    fn uv_to_r_examples() {
        assert_eq!(uv_to_r(&q(1, 1), &q(1, 1)).unwrap(), (q(-3375, 2), q(405000, 13)));
        let (r1, r2) = uv_to_r(&q(2, 1), &q(13, 1)).unwrap();
        assert!(r1.is_zero() && r2.is_zero());
        assert_eq!(
            uv_to_r(&q(1, 1), &q(27, 1)),
            Err(CoreError::EqRUndefined {
                factor: "v - 27".into()
            })
        );
    }

    #[test]
    fn rho_examples() {
        let a = rho(&q(1, 1), &q(0, 1)).unwrap();
        assert!(a.i3.is_zero());
        assert_eq!(
            rho(&q(0, 1), &q(1, 1)),
            Err(CoreError::RhoUndefined { factor: "r1".into() })
        );
        // ρ is written in the unnormalized pair invariants, so the values from
        // uv_to_r at (1, 1) land elsewhere.
        let a = rho(&q(-3375, 2), &q(405000, 13)).unwrap();
        assert_ne!(a, theta(&q(1, 1), &q(1, 1)).unwrap());
        let a = rho(&q(-125, 54), &q(625, 33696)).unwrap();
        assert_eq!(a, theta(&q(1, 1), &q(1, 1)).unwrap());
    }

    #[test]
    fn surface_values() {
        let c = Catalog::get();
        let p = ExactPoint::Rational(c.s2_special_point.to_vec());
        assert!(surface_eval(SurfaceId::S2, &p).unwrap().is_zero());
        let origin = ExactPoint::Rational(vec![q(0, 1); 3]);
        assert!(surface_eval(SurfaceId::S3Mod5, &origin).unwrap().is_zero());
        let c1 = ExactPoint::Rational(vec![q(0, 1), q(729, 50)]);
        assert!(surface_eval(SurfaceId::C1, &c1).unwrap().is_zero());
        let quad = ExactPoint::parse(&["1+sqrt(6)", "0", "0"]).unwrap();
        assert!(surface_eval(SurfaceId::S3Mod5, &quad).is_err());
    }

    #[test]
    fn j2_locus_has_quadratic_irrational_roots() {
        // r1/r2 = −48 ± 24√6 are the roots of t² + 96t − 1152.
        let p = ExactPoint::parse(&["-48+24*sqrt(6)", "1"]).unwrap();
        assert!(surface_eval(SurfaceId::J2Locus, &p).unwrap().is_zero());
        let p = ExactPoint::Rational(vec![q(96, 1), q(8, 1)]);
        assert_eq!(
            surface_eval(SurfaceId::J2Locus, &p).unwrap(),
            ExactValue::Rational(q(9216, 1))
        );
    }
}
