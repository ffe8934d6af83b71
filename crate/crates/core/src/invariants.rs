//! Invariants of binary sextics and of pairs of cubics.
//!
//! The Igusa invariants used throughout are the Igusa–Clebsch invariants
//! `I2, I4, I6, I10` (with `I10` the discriminant of the sextic), computed from
//! transvectants. With this normalization the absolute invariants
//! `i1 = 144·I4/I2²`, `i2 = −1728·(I2·I4 − 3·I6)/I2³`, `i3 = 486·I10/I2⁵`
//! agree exactly with the `(u, v)` parametrization stored in the catalog.

use serde::Serialize;
use splitjac_algebra::{discriminant, resultant, FromRational, MultiPoly, Rational, Scalar};

use crate::error::{CoreError, Result};

/// Binary form `Σ c[k]·X^(n−k)·Z^k` of degree `n = c.len() − 1`.
#[derive(Clone, Debug, PartialEq)]
struct BinaryForm<F: Scalar> {
    c: Vec<F>,
}

impl<F: Scalar> BinaryForm<F> {
    fn degree(&self) -> usize {
        self.c.len() - 1
    }

    fn d_x(&self) -> Self {
        let n = self.degree();
        let dom = self.c[0].domain();
        if n == 0 {
            return BinaryForm { c: vec![F::zero(&dom)] };
        }
        BinaryForm {
            c: (0..n)
                .map(|k| self.c[k].times(&F::from_i64((n - k) as i64, &dom)))
                .collect(),
        }
    }

    fn d_z(&self) -> Self {
        let n = self.degree();
        let dom = self.c[0].domain();
        if n == 0 {
            return BinaryForm { c: vec![F::zero(&dom)] };
        }
        BinaryForm {
            c: (1..=n).map(|k| self.c[k].times(&F::from_i64(k as i64, &dom))).collect(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let dom = self.c[0].domain();
        let mut c = vec![F::zero(&dom); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                c[i + j] = c[i + j].plus(&a.times(b));
            }
        }
        BinaryForm { c }
    }

    fn add_assign(&mut self, other: &Self) {
        for (a, b) in self.c.iter_mut().zip(&other.c) {
            *a = a.plus(b);
        }
    }

    fn scale(&self, s: &F) -> Self {
        BinaryForm {
            c: self.c.iter().map(|a| a.times(s)).collect(),
        }
    }

    fn constant(&self) -> F {
        debug_assert_eq!(self.degree(), 0);
        self.c[0].clone()
    }
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

fn binomial(n: usize, k: usize) -> i64 {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// k-th transvectant
/// `(f, g)_k = (m−k)!(n−k)!/(m!n!) · Σ_i (−1)^i C(k,i) ∂^k f/∂X^(k−i)∂Z^i · ∂^k g/∂X^i∂Z^(k−i)`.
fn transvectant<F: Scalar>(f: &BinaryForm<F>, g: &BinaryForm<F>, k: usize) -> BinaryForm<F> {
    let (m, n) = (f.degree(), g.degree());
    let dom = f.c[0].domain();
    // derivs[a][b] = ∂X^a ∂Z^b
    let table = |h: &BinaryForm<F>| -> Vec<BinaryForm<F>> {
        (0..=k)
            .map(|i| {
                let mut d = h.clone();
                for _ in 0..k - i {
                    d = d.d_x();
                }
                for _ in 0..i {
                    d = d.d_z();
                }
                d
            })
            .collect()
    };
    let fd = table(f);
    let gd = table(g);
    let mut acc = BinaryForm {
        c: vec![F::zero(&dom); m + n - 2 * k + 1],
    };
    for i in 0..=k {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let term = fd[i].mul(&gd[k - i]).scale(&F::from_i64(sign * binomial(k, i), &dom));
        acc.add_assign(&term);
    }
    let num = F::from_i64(factorial(m - k) * factorial(n - k), &dom);
    let den = F::from_i64(factorial(m) * factorial(n), &dom);
    acc.scale(&num.divide(&den).expect("characteristic checked by caller"))
}

/// Sextic `a6·X⁶ + … + a0`, coefficients stored in ascending order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SexticForm<F: Scalar> {
    pub coeffs: Vec<F>,
}

impl<F: Scalar> SexticForm<F> {
    /// Accepts degree 5 or 6 (a degree-5 form has a branch point at infinity).
    pub fn new(coeffs: Vec<F>) -> Result<Self> {
        if coeffs.len() != 7 {
            return Err(CoreError::InvalidSextic(format!(
                "expected 7 coefficients, got {}",
                coeffs.len()
            )));
        }
        if coeffs.iter().all(Scalar::is_zero) {
            return Err(splitjac_algebra::AlgebraError::ZeroPolynomial.into());
        }
        if coeffs[6].is_zero() && coeffs[5].is_zero() {
            return Err(CoreError::InvalidSextic("degree below 5".into()));
        }
        let d = coeffs[0].domain();
        if coeffs.iter().any(|c| c.domain() != d) {
            return Err(CoreError::InvalidSextic("coefficients from different domains".into()));
        }
        Ok(SexticForm { coeffs })
    }

    fn binary_form(&self) -> BinaryForm<F> {
        BinaryForm {
            c: self.coeffs.iter().rev().cloned().collect(),
        }
    }

    /// The sextic as a polynomial in `x`.
    pub fn to_poly(&self) -> MultiPoly<F> {
        let dom = self.coeffs[0].domain();
        MultiPoly::from_terms(
            &["x"],
            &dom,
            self.coeffs.iter().enumerate().map(|(i, c)| (vec![i as u32], c.clone())),
        )
        .expect("well-formed terms")
    }
}

/// Igusa–Clebsch invariants `(I2, I4, I6, I10)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IgusaInvariants<F: Scalar> {
    pub j2: F,
    pub j4: F,
    pub j6: F,
    pub j10: F,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AbsoluteInvariants<F: Scalar> {
    pub i1: F,
    pub i2: F,
    pub i3: F,
}

impl<F: Scalar> AbsoluteInvariants<F> {
    pub fn as_array(&self) -> [F; 3] {
        [self.i1.clone(), self.i2.clone(), self.i3.clone()]
    }
}

fn check_characteristic(p: u64) -> Result<()> {
    // Transvectant normalization divides by 6!·6!.
    if p != 0 && p <= 7 {
        return Err(CoreError::UnsupportedCharacteristic(p));
    }
    Ok(())
}

pub fn igusa_from_sextic<F: Scalar>(f: &SexticForm<F>) -> Result<IgusaInvariants<F>> {
    let dom = f.coeffs[0].domain();
    check_characteristic(F::characteristic(&dom))?;
    let n = |k: i64| F::from_i64(k, &dom);
    let form = f.binary_form();
    let i = transvectant(&form, &form, 4);
    let delta = transvectant(&i, &i, 2);
    let y1 = transvectant(&form, &i, 4);
    let y2 = transvectant(&i, &y1, 2);
    let y3 = transvectant(&i, &y2, 2);
    let a = transvectant(&form, &form, 6).constant();
    let b = transvectant(&i, &i, 4).constant();
    let c = transvectant(&i, &delta, 4).constant();
    let d = transvectant(&y3, &y1, 2).constant();

    let a2 = a.times(&a);
    let a3 = a2.times(&a);
    let j2 = n(-120).times(&a);
    let j4 = n(-720).times(&a2).plus(&n(6750).times(&b));
    let j6 = n(8640)
        .times(&a3)
        .minus(&n(108000).times(&a).times(&b))
        .plus(&n(202500).times(&c));
    let j10 = n(-62208)
        .times(&a3)
        .times(&a2)
        .plus(&n(972000).times(&a3).times(&b))
        .plus(&n(1620000).times(&a2).times(&c))
        .minus(&n(3037500).times(&a).times(&b).times(&b))
        .minus(&n(6075000).times(&b).times(&c))
        .minus(&n(4556250).times(&d));
    Ok(IgusaInvariants { j2, j4, j6, j10 })
}

pub fn absolute_from_igusa<F: Scalar>(j: &IgusaInvariants<F>) -> Result<AbsoluteInvariants<F>> {
    let inv = j.j2.inverse().ok_or(CoreError::J2Vanishes)?;
    let dom = j.j2.domain();
    let n = |k: i64| F::from_i64(k, &dom);
    let inv2 = inv.times(&inv);
    let inv3 = inv2.times(&inv);
    let inv5 = inv3.times(&inv2);
    Ok(AbsoluteInvariants {
        i1: n(144).times(&j.j4).times(&inv2),
        i2: n(-1728)
            .times(&j.j2.times(&j.j4).minus(&n(3).times(&j.j6)))
            .times(&inv3),
        i3: n(486).times(&j.j10).times(&inv5),
    })
}

/// Pair of cubics `F = a3·X³ + … + a0`, `G = b3·X³ + … + b0`, ascending.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CubicPair<F: Scalar> {
    pub f: [F; 4],
    pub g: [F; 4],
}

/// Normalizing constants relating the classical Sylvester resultant and
/// discriminant to the conventions under which the `(u, v)` formulas for
/// `r1`, `r2` hold: `r1 = H³/(λ_R·Res)`, `r2 = H⁴/(λ_D·D(F)·D(G))`.
pub fn lambda_r() -> Rational {
    Rational::frac(-1, 729)
}

pub fn lambda_d() -> Rational {
    Rational::frac(1, 1_679_616)
}

impl<F: Scalar> CubicPair<F> {
    pub fn product(&self) -> SexticForm<F> {
        let dom = self.f[0].domain();
        let mut c = vec![F::zero(&dom); 7];
        for (i, a) in self.f.iter().enumerate() {
            for (j, b) in self.g.iter().enumerate() {
                c[i + j] = c[i + j].plus(&a.times(b));
            }
        }
        SexticForm { coeffs: c }
    }

    fn cubic(coeffs: &[F; 4]) -> MultiPoly<F> {
        let dom = coeffs[0].domain();
        MultiPoly::from_terms(
            &["x"],
            &dom,
            coeffs.iter().enumerate().map(|(i, c)| (vec![i as u32], c.clone())),
        )
        .expect("well-formed terms")
    }

    pub fn f_poly(&self) -> MultiPoly<F> {
        Self::cubic(&self.f)
    }

    pub fn g_poly(&self) -> MultiPoly<F> {
        Self::cubic(&self.g)
    }
}

/// `H(F,G) = a3·b0 − a2·b1/3 + a1·b2/3 − a0·b3`.
pub fn pair_h<F: Scalar>(pair: &CubicPair<F>) -> F {
    let (a, b) = (&pair.f, &pair.g);
    let dom = a[0].domain();
    let three = F::from_i64(3, &dom);
    let third = |x: F| x.divide(&three).expect("characteristic is not 3");
    a[3].times(&b[0])
        .minus(&third(a[2].times(&b[1])))
        .plus(&third(a[1].times(&b[2])))
        .minus(&a[0].times(&b[3]))
}

fn constant_of<F: Scalar>(p: &MultiPoly<F>) -> F {
    p.constant_term()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairInvariants<F: Scalar> {
    pub h: F,
    pub resultant: F,
    pub disc_f: F,
    pub disc_g: F,
    pub r1: F,
    pub r2: F,
}

/// `r1`, `r2` of a cubic pair, together with the classical quantities used.
pub fn pair_r1_r2<F: FromRational>(pair: &CubicPair<F>) -> Result<PairInvariants<F>> {
    let dom = pair.f[0].domain();
    let (fp, gp) = (pair.f_poly(), pair.g_poly());
    let (df, dg) = match (discriminant(&fp, "x"), discriminant(&gp, "x")) {
        (Ok(df), Ok(dg)) => (constant_of(&df), constant_of(&dg)),
        _ => return Err(CoreError::DiscriminantVanishes),
    };
    if df.is_zero() || dg.is_zero() {
        return Err(CoreError::DiscriminantVanishes);
    }
    let res = constant_of(&resultant(&fp, &gp, "x")?);
    if res.is_zero() {
        return Err(CoreError::ResultantVanishes);
    }
    let h = pair_h(pair);
    let lr = F::from_rational(&lambda_r(), &dom)?;
    let ld = F::from_rational(&lambda_d(), &dom)?;
    let h2 = h.times(&h);
    let r1 = h2.times(&h).divide(&lr.times(&res)).expect("nonzero");
    let r2 = h2.times(&h2).divide(&ld.times(&df).times(&dg)).expect("nonzero");
    Ok(PairInvariants {
        h,
        resultant: res,
        disc_f: df,
        disc_g: dg,
        r1,
        r2,
    })
}

/// `r3 = H²/J2(F·G)`.
pub fn pair_r3<F: Scalar>(pair: &CubicPair<F>) -> Result<F> {
    let j = igusa_from_sextic(&pair.product())?;
    let h = pair_h(pair);
    h.times(&h).divide(&j.j2).ok_or(CoreError::J2Vanishes)
}

/// The curve `y² = (4v²x³ + v²x² + 2vx + 1)(v²x³ + uv·x² + vx + 1)` as a
/// sextic and as its cubic pair.
pub fn curve_from_uv<F: Scalar>(u: &F, v: &F) -> Result<(SexticForm<F>, CubicPair<F>)> {
    if v.is_zero() {
        return Err(CoreError::DegenerateParameters("v = 0".into()));
    }
    let dom = v.domain();
    let one = F::one(&dom);
    let v2 = v.times(v);
    let f = [
        one.clone(),
        F::from_i64(2, &dom).times(v),
        v2.clone(),
        F::from_i64(4, &dom).times(&v2),
    ];
    let g = [one, v.clone(), u.times(v), v2];
    let pair = CubicPair { f, g };
    Ok((pair.product(), pair))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn sextic_from_roots(roots: &[Rational]) -> SexticForm<Rational> {
        let mut c = vec![Rational::from(1)];
        for r in roots {
            let mut next = vec![Rational::from(0); c.len() + 1];
            for (i, a) in c.iter().enumerate() {
                next[i + 1] = &next[i + 1] + a;
                next[i] = &next[i] - &(a * r);
            }
            c = next;
        }
        SexticForm::new(c).unwrap()
    }

    #[test]
    fn frozen_values_for_known_roots() {
        let roots = [q(1, 1), q(2, 1), q(-3, 1), q(5, 1), q(1, 2), q(7, 1)];
        let j = igusa_from_sextic(&sextic_from_roots(&roots)).unwrap();
        assert_eq!(j.j2, Rational::from(72534));
        assert_eq!(j.j4, Rational::from(97851600));
        assert_eq!(j.j6, Rational::integer(2423054224800i64));
        assert_eq!(j.j10, Rational::integer(7823756304000000i64));
    }

    #[test]
    fn repeated_root_kills_j10() {
        // X²·(X⁴ + 1)
        let f = SexticForm::new([0, 0, 1, 0, 0, 0, 1].map(Rational::from).to_vec()).unwrap();
        assert!(igusa_from_sextic(&f).unwrap().j10.is_zero());
    }

    #[test]
    fn small_characteristic_is_rejected() {
        let f = SexticForm::new([1, 0, 0, 0, 0, 0, 1].map(|k| splitjac_algebra::Fp::new(k, 5)).to_vec()).unwrap();
        assert_eq!(igusa_from_sextic(&f), Err(CoreError::UnsupportedCharacteristic(5)));
    }

    #[test]
    fn absolute_invariant_definitions() {
        let j = IgusaInvariants {
            j2: Rational::from(1),
            j4: Rational::from(0),
            j6: Rational::from(0),
            j10: Rational::from(0),
        };
        let a = absolute_from_igusa(&j).unwrap();
        assert_eq!(a.as_array(), [0, 0, 0].map(Rational::from));
        let j = IgusaInvariants {
            j2: Rational::from(12),
            j4: Rational::from(1),
            j6: Rational::from(0),
            j10: Rational::from(0),
        };
        assert_eq!(absolute_from_igusa(&j).unwrap().i1, Rational::from(1));
        let zero = IgusaInvariants {
            j2: Rational::from(0),
            ..j
        };
        assert_eq!(absolute_from_igusa(&zero), Err(CoreError::J2Vanishes));
    }

    #[test]
    fn curve_at_one_one() {
        let (sextic, pair) = curve_from_uv(&Rational::from(1), &Rational::from(1)).unwrap();
        assert_eq!(pair.f, [1, 2, 1, 4].map(Rational::from));
        assert_eq!(pair.g, [1, 1, 1, 1].map(Rational::from));
        assert_eq!(pair_h(&pair), q(10, 3));
        let inv = pair_r1_r2(&pair).unwrap();
        assert_eq!(inv.resultant, Rational::from(16));
        assert_eq!(inv.disc_f, Rational::from(-416));
        assert_eq!(inv.disc_g, Rational::from(-16));
        assert_eq!(inv.r1, q(-3375, 2));
        assert_eq!(inv.r2, q(405000, 13));
        let j = igusa_from_sextic(&sextic).unwrap();
        assert_eq!(
            [j.j2.clone(), j.j4.clone(), j.j6.clone(), j.j10.clone()],
            [-424, 34432, -2895872, 1703936].map(Rational::from)
        );
        assert_eq!(pair_r3(&pair).unwrap(), q(-25, 954));
        let a = absolute_from_igusa(&j).unwrap();
        assert_eq!(
            a.as_array(),
            [q(77472, 2809), q(-19951488, 148877), q(-25272, 418195493)]
        );
    }

    #[test]
    fn degenerate_parameters() {
        assert!(matches!(
            curve_from_uv(&Rational::from(3), &Rational::from(0)),
            Err(CoreError::DegenerateParameters(_))
        ));
        let (sextic, _) = curve_from_uv(&q(-7, 2), &Rational::from(2)).unwrap();
        assert!(igusa_from_sextic(&sextic).unwrap().j10.is_zero());
        let (_, pair) = curve_from_uv(&Rational::from(0), &Rational::from(5)).unwrap();
        assert_eq!(pair.g, [1, 5, 0, 25].map(Rational::from));
    }

    #[test]
    fn oracle_family_values() {
        // y² = x⁶ + a·x⁴ + b·x² + 1
        let cases = [
            (
                (1, 1),
                (2, 1),
                [q(2385, 1156), q(-155061, 39304), q(128547, 11631468544)],
            ),
            (
                (1, 3),
                (-2, 1),
                [q(31905, 7396), q(3582009, 636056), q(2653641, 1204293165056)],
            ),
        ];
        for ((an, ad), (bn, bd), want) in cases {
            let c = vec![q(1, 1), q(0, 1), q(bn, bd), q(0, 1), q(an, ad), q(0, 1), q(1, 1)];
            let j = igusa_from_sextic(&SexticForm::new(c).unwrap()).unwrap();
            assert_eq!(absolute_from_igusa(&j).unwrap().as_array(), want);
        }
    }
}
