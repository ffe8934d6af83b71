//! Identity checks between the stored formulas and independent computations.

use serde_json::{json, Value};
use splitjac_algebra::{
    discriminant, parse_polynomial, resultant, Composition, ExtField, Fp, FromRational, GfExt, MultiPoly, Rational,
    RationalFunction, Scalar,
};

use crate::catalog::{Catalog, UV};
use crate::error::{CoreError, Result};
use crate::invariants::{
    absolute_from_igusa, curve_from_uv, igusa_from_sextic, lambda_d, lambda_r, pair_r1_r2, SexticForm,
};
use crate::report::{IdentityReport, Status};
use crate::sampling::{random_element, random_rational, rng, valid_uv_sample, RATIONAL_BOUND};
use crate::surfaces::{eval_s3_mod5, rho, theta, uv_to_r};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityId {
    ThetaConsistency,
    EqrConsistency,
    RhoFactorsTheta,
    S3Mod5VanishesOnTheta,
}

impl IdentityId {
    pub const ALL: [IdentityId; 4] = [
        IdentityId::ThetaConsistency,
        IdentityId::EqrConsistency,
        IdentityId::RhoFactorsTheta,
        IdentityId::S3Mod5VanishesOnTheta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::ThetaConsistency => "theta_consistency",
            IdentityId::EqrConsistency => "eqr_consistency",
            IdentityId::RhoFactorsTheta => "rho_factors_theta",
            IdentityId::S3Mod5VanishesOnTheta => "s3mod5_vanishes_on_theta",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|i| i.name() == name)
    }
}

/// Sampling parameters for the identity checks.
#[derive(Clone, Copy, Debug)]
pub struct IdentityOptions {
    pub seed: u64,
    pub samples: usize,
    /// Run the exact symbolic part where one exists.
    pub symbolic: bool,
}

impl Default for IdentityOptions {
    fn default() -> Self {
        IdentityOptions {
            seed: crate::sampling::DEFAULT_SEED,
            samples: 100,
            symbolic: true,
        }
    }
}

pub fn check_identity(id: IdentityId, opts: &IdentityOptions) -> Result<IdentityReport> {
    match id {
        IdentityId::ThetaConsistency => theta_consistency(opts),
        IdentityId::EqrConsistency => eqr_consistency(opts),
        IdentityId::RhoFactorsTheta => rho_factors_theta(opts),
        IdentityId::S3Mod5VanishesOnTheta => s3mod5_vanishes_on_theta(opts),
    }
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn finish(
    identity: IdentityId,
    method: String,
    samples: usize,
    witnesses: Vec<Value>,
    notes: Vec<Value>,
) -> IdentityReport {
    IdentityReport {
        identity: identity.name().to_string(),
        method,
        samples,
        status: Status::from_ok(witnesses.is_empty()),
        witnesses,
        notes,
    }
}

/// The Igusa pipeline on the curve family agrees with θ.
fn theta_consistency(opts: &IdentityOptions) -> Result<IdentityReport> {
    let sample = valid_uv_sample(opts.seed, opts.samples);
    let mut witnesses = Vec::new();
    for (u, v) in &sample {
        let (sextic, _) = curve_from_uv(u, v)?;
        let lhs = absolute_from_igusa(&igusa_from_sextic(&sextic)?)?.as_array();
        let rhs = theta(u, v)?.as_array();
        if lhs != rhs {
            witnesses.push(json!({"point": strings(&[u, v]), "pipeline": strings(&lhs), "theta": strings(&rhs)}));
        }
    }
    Ok(finish(
        IdentityId::ThetaConsistency,
        format!("exact evaluation at {} seeded rational points", sample.len()),
        sample.len(),
        witnesses,
        Vec::new(),
    ))
}

/// Symbolic r1, r2 of the cubic pair over ℚ(u, v), with the normalizing
/// constants applied.
pub fn symbolic_r1_r2() -> Result<[RationalFunction<Rational>; 2]> {
    let vars = ["x", "u", "v"];
    let f = parse_polynomial::<Rational>("4*v^2*x^3 + v^2*x^2 + 2*v*x + 1", &vars, &())?;
    let g = parse_polynomial::<Rational>("v^2*x^3 + u*v*x^2 + v*x + 1", &vars, &())?;
    let (a, b) = (f.coefficients_in("x")?, g.coefficients_in("x")?);
    let third = Rational::frac(1, 3);
    let h = &(&(&a[3] * &b[0]) - &(&a[2] * &b[1]).scale(&third)) + &(&(&a[1] * &b[2]).scale(&third) - &(&a[0] * &b[3]));
    let res = resultant(&f, &g, "x")?;
    let disc = &discriminant(&f, "x")? * &discriminant(&g, "x")?;
    let uv = |p: MultiPoly<Rational>| -> Result<RationalFunction<Rational>> {
        let names: Vec<String> = UV.iter().map(|s| s.to_string()).collect();
        Ok(RationalFunction::from_poly(p.with_vars(&names)?))
    };
    let hr = uv(h)?;
    let r1 = hr.pow(3)?.checked_div(&uv(res.scale(&lambda_r()))?)?;
    let r2 = hr.pow(4)?.checked_div(&uv(disc.scale(&lambda_d()))?)?;
    Ok([r1, r2])
}

/// The cubic-pair invariants on the curve family agree with the stored
/// (u, v) formulas for r1, r2, with constant normalizations.
fn eqr_consistency(opts: &IdentityOptions) -> Result<IdentityReport> {
    let c = Catalog::get();
    let mut notes = Vec::new();
    let mut witnesses = Vec::new();
    let mut method = String::new();
    if opts.symbolic {
        let [r1, r2] = symbolic_r1_r2()?;
        let ok1 = r1 == c.eqr[0];
        let ok2 = r2 == c.eqr[1];
        notes.push(json!({"symbolic_r1": ok1, "symbolic_r2": ok2}));
        if !(ok1 && ok2) {
            witnesses.push(json!({"symbolic": {"r1": ok1, "r2": ok2}}));
        }
        method.push_str("symbolic equality over Q(u,v) and ");
    }
    let sample = valid_uv_sample(opts.seed, opts.samples);
    let (mut lr_seen, mut ld_seen) = (Vec::new(), Vec::new());
    for (u, v) in &sample {
        let (_, pair) = curve_from_uv(u, v)?;
        let inv = pair_r1_r2(&pair)?;
        let (r1, r2) = uv_to_r(u, v)?;
        // Constants each sample would force, given the stored formulas.
        let h = &inv.h;
        let lr = &(&(h * h) * h) / &(&r1 * &inv.resultant);
        let ld = &(&(h * h) * &(h * h)) / &(&(&r2 * &inv.disc_f) * &inv.disc_g);
        if !lr_seen.contains(&lr) {
            lr_seen.push(lr);
        }
        if !ld_seen.contains(&ld) {
            ld_seen.push(ld);
        }
        if inv.r1 != r1 || inv.r2 != r2 {
            witnesses.push(json!({
                "point": strings(&[u, v]),
                "pair": strings(&[&inv.r1, &inv.r2]),
                "eqr": strings(&[&r1, &r2]),
            }));
        }
    }
    notes.push(json!({"lambda_R": strings(&lr_seen), "lambda_D": strings(&ld_seen)}));
    if lr_seen.len() > 1 || ld_seen.len() > 1 {
        witnesses.push(json!({"non_constant_normalization": true}));
    }
    method.push_str(&format!("exact evaluation at {} seeded rational points", sample.len()));
    Ok(finish(
        IdentityId::EqrConsistency,
        method,
        sample.len(),
        witnesses,
        notes,
    ))
}

/// Factors taking the normalized (r1, r2) of `uv_to_r` to the unnormalized
/// invariants -H³/Res and H⁴/(D(F)·D(G)) in which ρ is written.
pub fn rho_rescaling() -> [Rational; 2] {
    [-lambda_r(), lambda_d()]
}

/// ρ composed with the (u, v) → (r1, r2) map, each r scaled by `scale`.
pub fn symbolic_rho_of_eqr(component: usize, scale: &[Rational; 2]) -> Result<RationalFunction<Rational>> {
    let c = Catalog::get();
    let bindings = [c.eqr[0].scale(&scale[0]), c.eqr[1].scale(&scale[1])];
    Ok(c.rho[component].compose(&bindings)?)
}

/// ρ ∘ (u, v ↦ r1, r2) = θ, taken literally. The rescaled composition is
/// checked alongside and recorded in the notes.
fn rho_factors_theta(opts: &IdentityOptions) -> Result<IdentityReport> {
    let c = Catalog::get();
    let one = [Rational::integer(1), Rational::integer(1)];
    let scale = rho_rescaling();
    let mut witnesses = Vec::new();
    let mut notes = Vec::new();
    let mut method = String::new();
    if opts.symbolic {
        // The i3 component: a pure r2⁹ numerator over r1²·P⁵.
        let literal = symbolic_rho_of_eqr(2, &one)? == c.theta[2];
        let rescaled = symbolic_rho_of_eqr(2, &scale)? == c.theta[2];
        notes.push(json!({"symbolic_i3": literal, "symbolic_i3_rescaled": rescaled}));
        if !literal {
            witnesses.push(json!({"symbolic_i3": false}));
        }
        method.push_str("symbolic cross-multiplication for i3 and ");
    }
    let sample = valid_uv_sample(opts.seed, opts.samples);
    let mut rescaled_failures = 0;
    for (u, v) in &sample {
        let (r1, r2) = uv_to_r(u, v)?;
        let lhs = rho(&r1, &r2)?.as_array();
        let rhs = theta(u, v)?.as_array();
        if lhs != rhs {
            witnesses.push(json!({"point": strings(&[u, v]), "rho": strings(&lhs), "theta": strings(&rhs)}));
        }
        let scaled = rho(&(&r1 * &scale[0]), &(&r2 * &scale[1]))?.as_array();
        if scaled != rhs {
            rescaled_failures += 1;
        }
    }
    notes.push(json!({
        "rescaling": strings(&scale),
        "rescaled_sample_failures": rescaled_failures,
    }));
    method.push_str(&format!("exact evaluation at {} seeded rational points", sample.len()));
    let rescaled_holds = rescaled_failures == 0 && notes[0].get("symbolic_i3_rescaled") != Some(&json!(false));
    let mut report = finish(IdentityId::RhoFactorsTheta, method, sample.len(), witnesses, notes);
    // The displayed ρ and (u, v) → (r1, r2) formulas disagree by constant
    // factors; the factorization itself holds once those are applied.
    if report.status == Status::Fail && rescaled_holds {
        report.status = Status::Discrepancy;
    }
    Ok(report)
}

/// θ with coefficients reduced modulo 5.
pub fn theta_mod5() -> Result<[RationalFunction<Fp>; 3]> {
    let c = Catalog::get();
    let reduce = |f: &RationalFunction<Rational>| f.map_coeffs(&5u64, |q| Fp::from_rational(q, &5));
    Ok([reduce(&c.theta[0])?, reduce(&c.theta[1])?, reduce(&c.theta[2])?])
}

/// Composition of the mod-5 surface with θ mod 5.
pub fn s3mod5_composition() -> Result<Composition<Fp>> {
    Ok(Composition::new(&Catalog::get().s3_mod5, &theta_mod5()?)?)
}

/// Evaluates θ mod 5 at a point of GF(5^k); `None` where θ is undefined.
fn theta_mod5_at(theta5: &[RationalFunction<Fp>; 3], point: &[GfExt; 2]) -> Option<[GfExt; 3]> {
    let field = point[0].field().clone();
    let embed = |c: &Fp| Ok(field.embed(c));
    let mut out = Vec::with_capacity(3);
    for f in theta5 {
        out.push(f.evaluate_with(point, &field, embed).ok()?);
    }
    out.try_into().ok()
}

/// Outcome of the exhaustive grid evaluation of the composed numerator.
#[derive(Clone, Debug, serde::Serialize)]
pub struct GridProof {
    pub field: String,
    pub degree_bounds: [u32; 2],
    pub grid: [usize; 2],
    pub nonzero: usize,
}

/// Proves that the numerator of S3mod5 ∘ θ vanishes identically over GF(5):
/// a polynomial of degree at most `d_u` in u and `d_v` in v that vanishes on
/// an `S_u × S_v` grid with `|S_u| > d_u` and `|S_v| > d_v` is zero.
pub fn s3mod5_grid_proof() -> Result<GridProof> {
    grid_proof(&Catalog::get().s3_mod5)
}

fn grid_proof(outer: &MultiPoly<Fp>) -> Result<GridProof> {
    let comp = Composition::new(outer, &theta_mod5()?)?;
    let bounds = [comp.degree_bound(0), comp.degree_bound(1)];
    let mut k = 1;
    while 5u64.pow(k) <= bounds[0].max(bounds[1]) as u64 {
        k += 1;
    }
    let field = ExtField::new(5, k as usize)?;
    let su: Vec<GfExt> = (0..=bounds[0] as u64).map(|i| field.element(i)).collect();
    let sv: Vec<GfExt> = (0..=bounds[1] as u64).map(|i| field.element(i)).collect();
    let embed = |c: &Fp| Ok(field.embed(c));
    // Each inner polynomial as a list of v-coefficients, themselves polynomials in u.
    let sliced: Vec<Vec<MultiPoly<GfExt>>> = comp
        .inner_polynomials()
        .map(|p| p.map_coeffs(&field, embed)?.coefficients_in("v"))
        .collect::<splitjac_algebra::Result<_>>()?;
    let zero = GfExt::zero(&field);
    let mut nonzero = 0;
    for u in &su {
        let at_u: Vec<Vec<GfExt>> = sliced
            .iter()
            .map(|cs| cs.iter().map(|c| c.evaluate(&[u.clone(), zero.clone()])).collect())
            .collect::<splitjac_algebra::Result<_>>()?;
        for v in &sv {
            let mut values: Vec<GfExt> = at_u
                .iter()
                .map(|cs| cs.iter().rev().fold(zero.clone(), |acc, c| acc.times(v).plus(c)))
                .collect();
            let common = values.pop().expect("common denominator");
            if !comp.combine(&values, &common, &field, embed)?.is_zero() {
                nonzero += 1;
            }
        }
    }
    Ok(GridProof {
        field: format!("GF(5^{k})"),
        degree_bounds: bounds,
        grid: [su.len(), sv.len()],
        nonzero,
    })
}

/// S3mod5(θ(u, v)) = 0 over GF(5^k).
fn s3mod5_vanishes_on_theta(opts: &IdentityOptions) -> Result<IdentityReport> {
    let theta5 = theta_mod5()?;
    let mut r = rng(opts.seed);
    let fields: Vec<_> = (1..=4)
        .map(|k| ExtField::new(5, k))
        .collect::<splitjac_algebra::Result<_>>()?;
    let mut witnesses = Vec::new();
    let mut tested = 0;
    let mut attempts = 0;
    while tested < opts.samples {
        attempts += 1;
        if attempts > 100 * opts.samples + 1000 {
            return Err(CoreError::InsufficientPoints {
                found: tested,
                required: opts.samples,
            });
        }
        // Cycle through GF(5), GF(25), GF(125), GF(625), favouring the largest.
        let field = &fields[if tested % 4 == 0 { tested / 4 % 4 } else { 3 }];
        let pt = [random_element(&mut r, field), random_element(&mut r, field)];
        let Some(image) = theta_mod5_at(&theta5, &pt) else {
            continue;
        };
        tested += 1;
        let value = eval_s3_mod5(&image, |c| field.embed(c))?;
        if !value.is_zero() {
            witnesses.push(json!({"point": strings(&pt), "theta": strings(&image), "value": value.to_string()}));
        }
    }
    let mut notes = Vec::new();
    let mut method = format!("evaluation at {tested} seeded points over GF(5^k), k <= 4");
    if opts.symbolic {
        let proof = s3mod5_grid_proof()?;
        if proof.nonzero > 0 {
            witnesses.push(json!({"grid_nonzero": proof.nonzero}));
        }
        method = format!(
            "{method}; numerator vanishes on a {}x{} grid over {} exceeding its degree bounds {:?}",
            proof.grid[0], proof.grid[1], proof.field, proof.degree_bounds
        );
        notes.push(serde_json::to_value(&proof).expect("serializable"));
    }
    Ok(finish(
        IdentityId::S3Mod5VanishesOnTheta,
        method,
        tested,
        witnesses,
        notes,
    ))
}

/// Curves y² = x⁶ + a·x⁴ + b·x² + 1 carry an extra involution, so their
/// invariants lie on the (2,2) surface. Draws `n` nondegenerate members.
pub fn s2_oracle_membership(seed: u64, n: usize) -> Result<IdentityReport> {
    let s2 = &Catalog::get().s2;
    let mut r = rng(seed);
    let mut witnesses = Vec::new();
    let mut tested = 0;
    let mut attempts = 0;
    while tested < n {
        attempts += 1;
        if attempts > 100 * n + 1000 {
            return Err(CoreError::InsufficientPoints {
                found: tested,
                required: n,
            });
        }
        let a = random_rational(&mut r, RATIONAL_BOUND);
        let b = random_rational(&mut r, RATIONAL_BOUND);
        let zero = Rational::integer(0);
        let one = Rational::integer(1);
        let sextic = SexticForm::new(vec![
            one.clone(),
            zero.clone(),
            b.clone(),
            zero.clone(),
            a.clone(),
            zero,
            one,
        ])?;
        let igusa = igusa_from_sextic(&sextic)?;
        if igusa.j10.is_zero() {
            continue;
        }
        let Ok(abs) = absolute_from_igusa(&igusa) else { continue };
        tested += 1;
        let value = s2.evaluate(&abs.as_array())?;
        if !value.is_zero() {
            witnesses.push(json!({"a": a.to_string(), "b": b.to_string(), "value": value.to_string()}));
        }
    }
    Ok(IdentityReport {
        identity: "s2_oracle_membership".into(),
        method: format!("exact evaluation on {tested} curves y^2 = x^6 + a*x^4 + b*x^2 + 1"),
        samples: tested,
        status: Status::from_ok(witnesses.is_empty()),
        witnesses,
        notes: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(samples: usize, symbolic: bool) -> IdentityOptions {
        IdentityOptions {
            seed: 2,
            samples,
            symbolic,
        }
    }

    #[test]
    fn theta_matches_pipeline() {
        let r = check_identity(IdentityId::ThetaConsistency, &quick(10, false)).unwrap();
        assert_eq!(r.status, Status::Pass, "{:?}", r.witnesses);
    }

    #[test]
    fn eqr_matches_pair_invariants() {
        let r = check_identity(IdentityId::EqrConsistency, &quick(10, true)).unwrap();
        assert_eq!(r.status, Status::Pass, "{:?}", r.witnesses);
    }

    #[test]
    fn rho_composes_to_theta_only_after_rescaling() {
        let r = check_identity(IdentityId::RhoFactorsTheta, &quick(10, true)).unwrap();
        assert_eq!(r.status, Status::Discrepancy);
        assert_eq!(r.witnesses.len(), 11);
        assert_eq!(r.notes[0], json!({"symbolic_i3": false, "symbolic_i3_rescaled": true}));
        assert_eq!(r.notes[1]["rescaled_sample_failures"], json!(0));
    }

    #[test]
    fn rescaled_rho_matches_theta_in_every_component() {
        let c = Catalog::get();
        for k in 0..3 {
            assert_eq!(
                symbolic_rho_of_eqr(k, &rho_rescaling()).unwrap(),
                c.theta[k],
                "component {k}"
            );
        }
    }

    #[test]
    fn s3mod5_random_points() {
        let r = check_identity(IdentityId::S3Mod5VanishesOnTheta, &quick(20, false)).unwrap();
        assert_eq!(r.status, Status::Pass, "{:?}", r.witnesses);
    }

    #[test]
    fn identity_names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(IdentityId::from_name(id.name()), Some(id));
        }
        assert_eq!(IdentityId::from_name("nope"), None);
    }

    #[test]
    fn s2_contains_the_involution_family() {
        let r = s2_oracle_membership(7, 10).unwrap();
        assert_eq!(r.status, Status::Pass, "{:?}", r.witnesses);
        assert_eq!(r.samples, 10);
    }

    #[test]
    fn s3mod5_grid_proof_is_exhaustive() {
        let proof = s3mod5_grid_proof().unwrap();
        assert_eq!(proof.nonzero, 0);
        assert!(proof.grid[0] > proof.degree_bounds[0] as usize);
        assert!(proof.grid[1] > proof.degree_bounds[1] as usize);
    }

    #[test]
    fn grid_proof_detects_a_perturbed_surface() {
        let s3 = &Catalog::get().s3_mod5;
        let x = MultiPoly::variable(&crate::catalog::XYZ, "x", &5).unwrap();
        let proof = grid_proof(&(s3 + &x)).unwrap();
        assert!(proof.nonzero > 0);
    }
}
