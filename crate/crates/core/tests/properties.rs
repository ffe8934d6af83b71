use proptest::prelude::*;
use splitjac_algebra::{from_text, to_text, MultiPoly, Rational, Scalar};
use splitjac_core::catalog::Catalog;
use splitjac_core::invariants::{pair_h, CubicPair};
use splitjac_core::{absolute_from_igusa, igusa_from_sextic, rho, theta, CoreError, SexticForm};

fn q(n: i64) -> Rational {
    Rational::integer(n)
}

fn sextic(coeffs: &[i64]) -> Option<SexticForm<Rational>> {
    SexticForm::new(coeffs.iter().map(|&c| q(c)).collect()).ok()
}

/// (c·x + d)⁶ · f((a·x + b)/(c·x + d)).
fn mobius(f: &SexticForm<Rational>, [a, b, c, d]: [i64; 4]) -> Option<SexticForm<Rational>> {
    let x = MultiPoly::<Rational>::variable(&["x"], "x", &()).unwrap();
    let num = &x.scale(&q(a)) + &MultiPoly::constant(&["x"], q(b));
    let den = &x.scale(&q(c)) + &MultiPoly::constant(&["x"], q(d));
    let mut out = MultiPoly::zero(&["x"], &());
    for (k, coeff) in f.coeffs.iter().enumerate() {
        let term = &num.pow(k as u32) * &den.pow(6 - k as u32);
        out = &out + &term.scale(coeff);
    }
    let coeffs = (0..=6u32).map(|k| out.coefficient(&[k])).collect();
    SexticForm::new(coeffs).ok()
}

fn coefficients() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-9i64..=9, 7)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn absolute_invariants_are_gl2_invariant(
        coeffs in coefficients(),
        m in prop::collection::vec(prop::array::uniform4(-4i64..=4), 5),
    ) {
        let f = sextic(&coeffs);
        prop_assume!(f.is_some());
        let f = f.unwrap();
        let j = igusa_from_sextic(&f).unwrap();
        prop_assume!(!j.j10.is_zero());
        let Ok(base) = absolute_from_igusa(&j) else { return Ok(()) };
        for g in m {
            if g[0] * g[3] - g[1] * g[2] == 0 {
                continue;
            }
            let Some(h) = mobius(&f, g) else { continue };
            let moved = absolute_from_igusa(&igusa_from_sextic(&h).unwrap()).unwrap();
            prop_assert_eq!(&moved, &base);
        }
    }

    #[test]
    fn absolute_invariants_ignore_scaling(coeffs in coefficients(), n in 1i64..20, d in 1i64..20) {
        let f = sextic(&coeffs);
        prop_assume!(f.is_some());
        let f = f.unwrap();
        let Ok(base) = absolute_from_igusa(&igusa_from_sextic(&f).unwrap()) else { return Ok(()) };
        let lambda = Rational::frac(n, d);
        let scaled = SexticForm::new(f.coeffs.iter().map(|c| c * &lambda).collect()).unwrap();
        prop_assert_eq!(absolute_from_igusa(&igusa_from_sextic(&scaled).unwrap()).unwrap(), base);
    }

    #[test]
    fn pair_invariant_h_is_antisymmetric(f in prop::array::uniform4(-9i64..=9), g in prop::array::uniform4(-9i64..=9)) {
        let forward = CubicPair { f: f.map(q), g: g.map(q) };
        let backward = CubicPair { f: g.map(q), g: f.map(q) };
        prop_assert_eq!(pair_h(&forward), -pair_h(&backward));
    }

    #[test]
    fn planted_double_root_kills_j10(r in -9i64..=9, quartic in prop::collection::vec(-9i64..=9, 5)) {
        prop_assume!(quartic[4] != 0);
        let x = MultiPoly::<Rational>::variable(&["x"], "x", &()).unwrap();
        let lin = &x - &MultiPoly::constant(&["x"], q(r));
        let rest = MultiPoly::from_terms(&["x"], &(), quartic.iter().enumerate().map(|(i, &c)| (vec![i as u32], q(c)))).unwrap();
        let f = &(&lin * &lin) * &rest;
        let s = SexticForm::new((0..=6u32).map(|k| f.coefficient(&[k])).collect()).unwrap();
        prop_assert!(igusa_from_sextic(&s).unwrap().j10.is_zero());
    }
}

#[test]
fn theta_and_rho_reject_exactly_their_denominators() {
    let c = Catalog::get();
    // A 50×50 integer grid through (9, 27), where the quadratic factor of θ
    // has a double zero.
    for u in -20..30 {
        for v in -10..40 {
            let (u, v) = (q(u), q(v));
            let quad = c.theta_quadratic.evaluate(&[u.clone(), v.clone()]).unwrap();
            let expected_bad = v.is_zero() || quad.is_zero();
            match theta(&u, &v) {
                Ok(_) => assert!(!expected_bad, "theta accepted ({u}, {v})"),
                Err(CoreError::ThetaUndefined { .. }) => assert!(expected_bad, "theta rejected ({u}, {v})"),
                Err(e) => panic!("unexpected error at ({u}, {v}): {e}"),
            }
        }
    }
    assert!(theta(&q(9), &q(27)).is_err());
    for r1 in -25..25 {
        for r2 in -25..25 {
            let (r1, r2) = (Rational::frac(r1, 3), Rational::frac(r2, 5));
            let quad = c.rho_quadratic.evaluate(&[r1.clone(), r2.clone()]).unwrap();
            let expected_bad = r1.is_zero() || quad.is_zero();
            match rho(&r1, &r2) {
                Ok(_) => assert!(!expected_bad, "rho accepted ({r1}, {r2})"),
                Err(CoreError::RhoUndefined { .. }) => assert!(expected_bad, "rho rejected ({r1}, {r2})"),
                Err(e) => panic!("unexpected error at ({r1}, {r2}): {e}"),
            }
        }
    }
    // (96, 8) is not on the J2 = 0 locus; (-48 + 24·sqrt(6))·r2 = r1 would be.
    assert!(rho(&q(96), &q(8)).is_ok());
}

#[test]
fn stored_polynomials_round_trip_through_text() {
    let c = Catalog::get();
    for (name, text) in c.named_polynomials() {
        if name == "S3mod5" {
            let back = from_text::<splitjac_algebra::Fp>(&text, &5).unwrap();
            assert_eq!(back, c.s3_mod5);
            continue;
        }
        let back = from_text::<Rational>(&text, &()).unwrap();
        assert_eq!(to_text(&back), text, "{name}");
    }
}
