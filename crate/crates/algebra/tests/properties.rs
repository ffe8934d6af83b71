use proptest::prelude::*;
use splitjac_algebra::{
    discriminant, from_text, resultant, to_text, Composition, ExtField, Fp, FromRational, MultiPoly, QuadExt, Rational,
    Scalar,
};

const VARS: [&str; 3] = ["x", "y", "z"];

type RawPoly = Vec<(Vec<u32>, i64, i64)>;

fn raw_poly(max_terms: usize, max_exp: u32) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, 3), -50i64..=50, 1i64..=12),
        0..=max_terms,
    )
}

fn rational_poly(raw: &RawPoly) -> MultiPoly<Rational> {
    MultiPoly::from_terms(
        &VARS,
        &(),
        raw.iter().map(|(e, n, d)| (e.clone(), Rational::frac(*n, *d))),
    )
    .unwrap()
}

fn in_domain<F: FromRational>(raw: &RawPoly, domain: &F::Domain) -> MultiPoly<F> {
    rational_poly(raw).embed(domain).unwrap()
}

/// Coefficients with the irrational part switched on, so QuadExt is exercised.
fn quad_poly(raw: &RawPoly, d: i64) -> MultiPoly<QuadExt> {
    MultiPoly::from_terms(
        &VARS,
        &d,
        raw.iter().map(|(e, n, den)| {
            let b = Rational::frac(*n % 7, *den + 1);
            (e.clone(), QuadExt::new(Rational::frac(*n, *den), b, d).unwrap())
        }),
    )
    .unwrap()
}

fn distributive<F: Scalar>(p: &MultiPoly<F>, q: &MultiPoly<F>, r: &MultiPoly<F>) -> bool {
    &(p + q) * r == &(p * r) + &(q * r)
}

fn product_rule<F: Scalar>(p: &MultiPoly<F>, q: &MultiPoly<F>) -> bool {
    VARS.iter().all(|v| {
        let lhs = (p * q).partial_derivative(v).unwrap();
        let rhs = &(p * &q.partial_derivative(v).unwrap()) + &(q * &p.partial_derivative(v).unwrap());
        let linear = (p + q).partial_derivative(v).unwrap()
            == &p.partial_derivative(v).unwrap() + &q.partial_derivative(v).unwrap();
        lhs == rhs && linear
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn ring_axioms_over_rationals(p in raw_poly(6, 3), q in raw_poly(6, 3), r in raw_poly(6, 3)) {
        let (p, q, r) = (rational_poly(&p), rational_poly(&q), rational_poly(&r));
        prop_assert!(distributive(&p, &q, &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn ring_axioms_over_prime_field(p in raw_poly(6, 3), q in raw_poly(6, 3), r in raw_poly(6, 3)) {
        let (p, q, r) = (in_domain::<Fp>(&p, &10007), in_domain::<Fp>(&q, &10007), in_domain::<Fp>(&r, &10007));
        prop_assert!(distributive(&p, &q, &r));
    }

    #[test]
    fn ring_axioms_over_quadratic_fields(p in raw_poly(5, 3), q in raw_poly(5, 3), r in raw_poly(5, 3), d in prop::sample::select(vec![-1i64, 5, 6, -3])) {
        let (p, q, r) = (quad_poly(&p, d), quad_poly(&q, d), quad_poly(&r, d));
        prop_assert!(distributive(&p, &q, &r));
    }

    #[test]
    fn ring_axioms_over_extension_field(p in raw_poly(5, 3), q in raw_poly(5, 3), r in raw_poly(5, 3)) {
        let integral = |raw: &RawPoly| raw.iter().map(|(e, n, _)| (e.clone(), *n, 1)).collect::<RawPoly>();
        let field = ExtField::new(5, 4).unwrap();
        let (a, b, c) = (in_domain(&integral(&p), &field), in_domain(&integral(&q), &field), in_domain(&integral(&r), &field));
        prop_assert!(distributive::<splitjac_algebra::GfExt>(&a, &b, &c));
        let field = ExtField::new(13, 2).unwrap();
        let (a, b, c) = (in_domain(&p, &field), in_domain(&q, &field), in_domain(&r, &field));
        prop_assert!(distributive::<splitjac_algebra::GfExt>(&a, &b, &c));
    }

    #[test]
    fn derivative_is_a_derivation(p in raw_poly(6, 4), q in raw_poly(6, 4)) {
        prop_assert!(product_rule(&rational_poly(&p), &rational_poly(&q)));
        prop_assert!(product_rule(&in_domain::<Fp>(&p, &13), &in_domain::<Fp>(&q, &13)));
    }

    #[test]
    fn resultant_antisymmetry(f in prop::collection::vec(-9i64..=9, 2..=5), g in prop::collection::vec(-9i64..=9, 2..=5)) {
        let make = |c: &[i64]| MultiPoly::from_terms(&["x"], &(), c.iter().enumerate().map(|(i, &a)| (vec![i as u32], Rational::from(a)))).unwrap();
        let (pf, pg) = (make(&f), make(&g));
        prop_assume!(pf.degree_in(0) >= 1 && pg.degree_in(0) >= 1);
        let sign = if pf.degree_in(0) * pg.degree_in(0) % 2 == 1 { -1 } else { 1 };
        let rfg = resultant(&pf, &pg, "x").unwrap();
        let rgf = resultant(&pg, &pf, "x").unwrap();
        prop_assert_eq!(rfg, rgf.scale(&Rational::from(sign)));
    }

    #[test]
    fn resultant_detects_common_roots(a in -6i64..=6, f in prop::collection::vec(-9i64..=9, 1..=3), g in prop::collection::vec(-9i64..=9, 1..=3)) {
        let make = |c: &[i64]| {
            let base = MultiPoly::from_terms(&["x"], &(), c.iter().enumerate().map(|(i, &k)| (vec![i as u32], Rational::from(k)))).unwrap();
            let lin = MultiPoly::from_terms(&["x"], &(), [(vec![1], Rational::from(1)), (vec![0], Rational::from(-a))]).unwrap();
            &base * &lin
        };
        let (pf, pg) = (make(&f), make(&g));
        prop_assume!(!pf.is_zero() && !pg.is_zero());
        prop_assert!(resultant(&pf, &pg, "x").unwrap().is_zero());
        if pf.degree_in(0) >= 2 {
            let sq = &pf * &MultiPoly::from_terms(&["x"], &(), [(vec![1], Rational::from(1)), (vec![0], Rational::from(-a))]).unwrap();
            prop_assert!(discriminant(&sq, "x").unwrap().is_zero());
        }
    }

    #[test]
    fn quadratic_norm_is_multiplicative(a in -99i64..=99, b in -99i64..=99, c in -99i64..=99, e in -99i64..=99, d in prop::sample::select(vec![-1i64, 2, 5, -7, 15])) {
        let x = QuadExt::new(Rational::frac(a, 3), Rational::frac(b, 4), d).unwrap();
        let y = QuadExt::new(Rational::from(c), Rational::frac(e, 5), d).unwrap();
        prop_assert_eq!(x.times(&y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn reduction_is_a_homomorphism(p in raw_poly(6, 3), q in raw_poly(6, 3), prime in prop::sample::select(vec![13u64, 17, 10007])) {
        let (p, q) = (rational_poly(&p), rational_poly(&q));
        let r = |x: &MultiPoly<Rational>| x.reduce_mod_p(prime).unwrap();
        prop_assert_eq!(r(&(&p + &q)), &r(&p) + &r(&q));
        prop_assert_eq!(r(&(&p * &q)), &r(&p) * &r(&q));
    }

    #[test]
    fn text_round_trip(p in raw_poly(8, 5)) {
        let p = rational_poly(&p);
        let t = to_text(&p);
        let back = from_text::<Rational>(&t, &()).unwrap();
        prop_assert_eq!(to_text(&back), t);
        prop_assert_eq!(back, p);
    }

    #[test]
    fn composition_agrees_with_pointwise_evaluation(p in raw_poly(4, 2), u in -20i64..=20, v in 1i64..=20) {
        let vars = ["u", "v"];
        let f = splitjac_algebra::parse_rational_function::<Rational>("(u^2 - v)/(v + 1)", &vars, &()).unwrap();
        let g = splitjac_algebra::parse_rational_function::<Rational>("u/(u - 2*v)", &vars, &()).unwrap();
        let h = splitjac_algebra::parse_rational_function::<Rational>("3/v", &vars, &()).unwrap();
        prop_assume!(u != 2 * v);
        let pt = [Rational::from(u), Rational::from(v)];
        let outer = rational_poly(&p);
        let direct = outer
            .evaluate(&[f.evaluate(&pt).unwrap(), g.evaluate(&pt).unwrap(), h.evaluate(&pt).unwrap()])
            .unwrap();
        let comp = Composition::new(&outer, &[f.clone(), g.clone(), h.clone()]).unwrap();
        prop_assert_eq!(comp.expand().unwrap().evaluate(&pt).unwrap(), direct);

        // (x − y)·P composed with x = y = f vanishes identically, so its
        // numerator vanishes at every point.
        let vanishing = &splitjac_algebra::parse_polynomial::<Rational>("x - y", &VARS, &()).unwrap() * &outer;
        let comp = Composition::new(&vanishing, &[f.clone(), f, h]).unwrap();
        prop_assert!(comp.expand().unwrap().is_zero());
        prop_assert!(comp.numerator_at(&pt, &(), |c| Ok(c.clone())).unwrap().is_zero());
    }
}
