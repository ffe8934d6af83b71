//! Singular points of the (2,2) and (3,3) surfaces and the automorphism
//! loci through them.

use std::sync::OnceLock;

use dashu_float::DBig;
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};
use splitjac_algebra::{discriminant, Fp, FromRational, MultiPoly, QuadExt, Rational, RationalFunction, Scalar};

use crate::catalog::{correction_for, Catalog, ExactPoint, Table1Record, XYZ};
use crate::error::{CoreError, Result};
use crate::invariants::{curve_from_uv, igusa_from_sextic};
use crate::numeric::{self, ScaledValue};
use crate::report::{CheckReport, Status};
use crate::sampling::{random_rational, rng, RATIONAL_BOUND};
use crate::surfaces::{rho, theta};

/// Coefficient linking z to φ1/φ2 along the singular locus of the (2,2) surface.
const Z_RELATION: i64 = 82944;

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn eval<F: FromRational>(p: &MultiPoly<Rational>, point: &[F]) -> Result<F> {
    Ok(p.evaluate_in(point, &point[0].domain())?)
}

fn partials(surface: &MultiPoly<Rational>) -> Result<[MultiPoly<Rational>; 3]> {
    Ok([
        surface.partial_derivative("x")?,
        surface.partial_derivative("y")?,
        surface.partial_derivative("z")?,
    ])
}

fn s2_partials() -> &'static [MultiPoly<Rational>; 3] {
    static CELL: OnceLock<[MultiPoly<Rational>; 3]> = OnceLock::new();
    CELL.get_or_init(|| partials(&Catalog::get().s2).expect("S2 is a polynomial in x, y, z"))
}

fn require_xyz(surface: &MultiPoly<Rational>) -> Result<()> {
    if surface.vars() != XYZ {
        return Err(CoreError::DegenerateParameters(format!(
            "surface variables {:?}, expected x, y, z",
            surface.vars()
        )));
    }
    Ok(())
}

/// Surface value and gradient at an exact point.
#[derive(Clone, Debug, PartialEq)]
pub struct GradientReport<F> {
    pub point: [F; 3],
    pub value: F,
    pub gradient: [F; 3],
    pub is_singular: bool,
}

impl<F: Scalar> GradientReport<F> {
    pub fn to_json(&self) -> Value {
        json!({
            "point": strings(&self.point),
            "value": self.value.to_string(),
            "gradient": strings(&self.gradient),
            "is_singular": self.is_singular,
        })
    }
}

pub fn gradient<F: FromRational>(surface: &MultiPoly<Rational>, point: &[F; 3]) -> Result<GradientReport<F>> {
    require_xyz(surface)?;
    let d = if std::ptr::eq(surface, &Catalog::get().s2) {
        s2_partials().clone()
    } else {
        partials(surface)?
    };
    let value = eval(surface, point)?;
    let gradient = [eval(&d[0], point)?, eval(&d[1], point)?, eval(&d[2], point)?];
    let is_singular = value.is_zero() && gradient.iter().all(Scalar::is_zero);
    Ok(GradientReport {
        point: point.clone(),
        value,
        gradient,
        is_singular,
    })
}

/// Surface value and gradient at a decimal point, each relative to the
/// largest term of its own sum.
#[derive(Clone, Debug)]
pub struct NumericGradient {
    pub point: [DBig; 3],
    pub value: ScaledValue,
    pub gradient: [ScaledValue; 3],
    pub precision: usize,
    pub is_singular: bool,
}

impl NumericGradient {
    pub fn value_residual(&self) -> f64 {
        numeric::to_f64(&self.value.relative())
    }

    pub fn gradient_residual(&self) -> f64 {
        self.gradient
            .iter()
            .map(|g| numeric::to_f64(&g.relative()))
            .fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "point": self.point.iter().map(numeric::to_f64).collect::<Vec<_>>(),
            "precision": self.precision,
            "value_residual": self.value_residual(),
            "gradient_residual": self.gradient_residual(),
            "is_singular": self.is_singular,
        })
    }
}

pub fn numeric_gradient(surface: &MultiPoly<Rational>, point: &[DBig; 3], digits: usize) -> Result<NumericGradient> {
    require_xyz(surface)?;
    numeric::check_precision(digits)?;
    let d = if std::ptr::eq(surface, &Catalog::get().s2) {
        s2_partials().clone()
    } else {
        partials(surface)?
    };
    let value = numeric::evaluate(surface, point, digits)?;
    let gradient = [
        numeric::evaluate(&d[0], point, digits)?,
        numeric::evaluate(&d[1], point, digits)?,
        numeric::evaluate(&d[2], point, digits)?,
    ];
    let tol = numeric::tolerance(digits);
    let is_singular = value.relative() < tol && gradient.iter().all(|g| g.relative() < tol);
    Ok(NumericGradient {
        point: point.clone(),
        value,
        gradient,
        precision: digits,
        is_singular,
    })
}

/// z = -φ1(x, y) / (82944·φ2(x, y)).
pub fn z_from_xy<F: FromRational>(x: &F, y: &F) -> Result<F> {
    let c = Catalog::get();
    let pt = [x.clone(), y.clone()];
    let phi2 = eval(&c.phi2, &pt)?;
    if phi2.is_zero() {
        return Err(CoreError::Phi2Vanishes);
    }
    let phi1 = eval(&c.phi1, &pt)?;
    let den = phi2.times(&F::from_i64(Z_RELATION, &x.domain()));
    Ok(phi1.negate().divide(&den).expect("nonzero denominator"))
}

pub fn z_from_xy_numeric(x: &DBig, y: &DBig, digits: usize) -> Result<DBig> {
    let c = Catalog::get();
    let pt = [x.clone(), y.clone()];
    let phi2 = numeric::evaluate(&c.phi2, &pt, digits)?.value;
    if phi2 == DBig::ZERO {
        return Err(CoreError::Phi2Vanishes);
    }
    let phi1 = numeric::evaluate(&c.phi1, &pt, digits)?.value;
    let k = numeric::to_float(&Rational::integer(Z_RELATION), digits);
    Ok(-(phi1 / (phi2 * k)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    #[serde(rename = "D4")]
    D4,
    #[serde(rename = "D6")]
    D6,
    Generic,
    Inconclusive,
}

impl std::fmt::Display for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Group::D4 => "D4",
            Group::D6 => "D6",
            Group::Generic => "generic",
            Group::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassificationResult<F> {
    pub point: [F; 3],
    pub group: Group,
    pub c1: F,
    pub c2: F,
    /// z - z_from_xy(x, y), or `None` where φ2 vanishes.
    pub z_residual: Option<F>,
}

impl<F: Scalar> ClassificationResult<F> {
    pub fn to_json(&self) -> Value {
        json!({
            "point": strings(&self.point),
            "group": self.group,
            "c1": self.c1.to_string(),
            "c2": self.c2.to_string(),
            "z_residual": self.z_residual.as_ref().map(ToString::to_string),
        })
    }
}

/// Places a point of the (2,2) surface on the D4 locus (C1 and the z
/// relation), the D6 locus (C2 and the z relation), both, or neither.
pub fn classify_automorphism<F: FromRational>(point: &[F; 3]) -> Result<ClassificationResult<F>> {
    let c = Catalog::get();
    let xy = [point[0].clone(), point[1].clone()];
    let c1 = eval(&c.c1, &xy)?;
    let c2 = eval(&c.c2, &xy)?;
    let z_residual = match z_from_xy(&point[0], &point[1]) {
        Ok(z) => Some(point[2].minus(&z)),
        Err(CoreError::Phi2Vanishes) => None,
        Err(e) => return Err(e),
    };
    let on_z = z_residual.as_ref().is_some_and(Scalar::is_zero);
    let group = match (c1.is_zero(), c2.is_zero()) {
        (true, true) => Group::Inconclusive,
        (true, false) if on_z => Group::D4,
        (false, true) if on_z => Group::D6,
        (true, false) | (false, true) if z_residual.is_none() => Group::Inconclusive,
        _ => Group::Generic,
    };
    Ok(ClassificationResult {
        point: point.clone(),
        group,
        c1,
        c2,
        z_residual,
    })
}

/// Coefficients of S2(x0, y0, z) in z, ascending.
fn s2_fiber(x: &Rational, y: &Rational) -> Result<Vec<Rational>> {
    let zero = Rational::integer(0);
    Catalog::get()
        .s2
        .coefficients_in("z")?
        .iter()
        .map(|c| Ok(c.evaluate(&[x.clone(), y.clone(), zero.clone()])?))
        .collect()
}

/// Checks each listed solution of the third component's system against
/// both equations, the y relation and the cubic, then lifts it to the surface.
pub fn verify_c3_system() -> Result<CheckReport> {
    let c = Catalog::get();
    let mut report = CheckReport::new("verify_c3_system");
    for (index, [x, y]) in c.c3_points.iter().enumerate() {
        let pt = [x.clone(), y.clone()];
        let first = c.c3[0].evaluate(&pt)?;
        let second = c.c3[1].evaluate(&pt)?;
        let y_rel = c.c3_y.evaluate(std::slice::from_ref(x)).map(|yy| &yy - y);
        let cubic = c.c3_cubic.evaluate(std::slice::from_ref(x))?;
        let satisfied = json!({
            "c3_first": first.is_zero(),
            "c3_second": second.is_zero(),
            "y_relation": y_rel.as_ref().is_ok_and(Scalar::is_zero),
            "cubic": cubic.is_zero(),
        });
        let all = first.is_zero() && second.is_zero() && cubic.is_zero() && y_rel.as_ref().is_ok_and(Scalar::is_zero);
        let mut detail = json!({
            "point": strings(&pt),
            "residuals": {
                "c3_first": first.to_string(),
                "c3_second": second.to_string(),
                "y_relation": match &y_rel {
                    Ok(r) => r.to_string(),
                    Err(e) => format!("undefined: {e}"),
                },
                "cubic": cubic.to_string(),
            },
            "satisfied": satisfied,
        });
        let mut status = if all { Status::Pass } else { Status::Discrepancy };
        match z_from_xy(x, y) {
            Ok(z) => {
                let g = gradient(&c.s2, &[x.clone(), y.clone(), z.clone()])?;
                detail["lift"] = g.to_json();
                detail["z_lift_on_surface"] = json!(g.value.is_zero());
                // Only the first listed point is claimed to lift onto the surface.
                if g.value.is_zero() != (index == 0) {
                    status = status.merge(Status::Discrepancy);
                }
                if index == 0 && z != c.s2_special_point[2] {
                    status = status.merge(Status::Discrepancy);
                }
            }
            Err(CoreError::Phi2Vanishes) => {
                let phi1 = c.phi1.evaluate(&pt)?;
                let fiber = s2_fiber(x, y)?;
                detail["lift"] = json!({"phi1": phi1.to_string(), "phi2": "0", "z": "undefined"});
                detail["z_lift_on_surface"] = json!(false);
                detail["fiber"] = fiber_json(x, y, &fiber)?;
                if index == 0 {
                    status = status.merge(Status::Discrepancy);
                }
            }
            Err(e) => return Err(e),
        }
        detail["status"] = json!(status);
        report.push(status, detail);
    }
    Ok(report)
}

/// Describes S2 restricted to the line over (x, y); a cube of a linear
/// factor is reported with the singularity test at its root.
fn fiber_json(x: &Rational, y: &Rational, fiber: &[Rational]) -> Result<Value> {
    let mut out = json!({"z_coefficients": strings(fiber)});
    if fiber.len() == 4 && !fiber[3].is_zero() {
        let z0 = -(&fiber[2] / &(&fiber[3] * &Rational::integer(3)));
        let mut cube = vec![Rational::integer(0); 4];
        // c3·(z - z0)³
        cube[3] = fiber[3].clone();
        cube[2] = &(&fiber[3] * &Rational::integer(-3)) * &z0;
        cube[1] = &(&(&fiber[3] * &Rational::integer(3)) * &z0) * &z0;
        cube[0] = -(&(&(&fiber[3] * &z0) * &z0) * &z0);
        if cube == fiber {
            let g = gradient(&Catalog::get().s2, &[x.clone(), y.clone(), z0.clone()])?;
            out["triple_root"] = json!(z0.to_string());
            out["triple_root_point"] = g.to_json();
        }
    }
    Ok(out)
}

/// Position of `triple` in the listed singular points of the (3,3) surface.
fn t3_index(triple: &[Rational; 3]) -> Option<usize> {
    Catalog::get().t3_points.iter().position(|t| t == triple)
}

/// Checks the (r1, r2) solutions of the singular-point system, their images
/// under ρ and the automorphism groups of those images.
pub fn verify_t3_points() -> Result<CheckReport> {
    let c = Catalog::get();
    let mut report = CheckReport::new("verify_t3_points");
    let mut computed = vec![None; c.t3_points.len()];
    for (index, r) in c.r1r2_points.iter().enumerate() {
        let residuals: Vec<Rational> = c
            .r1r2_system
            .iter()
            .map(|p| p.evaluate(r))
            .collect::<splitjac_algebra::Result<_>>()?;
        let j2 = c.j2_locus.evaluate(r)?;
        let image = rho(&r[0], &r[1])?.as_array();
        let target = t3_index(&image);
        let s2 = gradient(&c.s2, &image)?;
        let class = classify_automorphism(&image)?;
        let mut status = Status::from_ok(residuals.iter().all(Scalar::is_zero) && !j2.is_zero());
        status = status.merge(Status::from_ok(s2.value.is_zero()));
        match target {
            Some(k) => computed[k] = Some(class.group),
            None => status = status.merge(Status::Discrepancy),
        }
        report.push(
            status,
            json!({
                "r": strings(r),
                "system_residuals": strings(&residuals),
                "j2_locus": j2.to_string(),
                "image": strings(&image),
                "listed_index": target,
                "listed_in_order": target == Some(index),
                "s2": s2.to_json(),
                "classification": class.to_json(),
                "status": status,
            }),
        );
    }
    // Groups attached to the listed points, against the computed ones.
    let mut listed: Vec<String> = c.t3_groups.iter().map(ToString::to_string).collect();
    let mut found: Vec<String> = computed
        .iter()
        .map(|g| g.map_or("missing".to_string(), |g| g.to_string()))
        .collect();
    let mut order = Status::Pass;
    let mut mismatches = Vec::new();
    for (k, (l, f)) in listed.iter().zip(&found).enumerate() {
        if l != f {
            order = Status::Discrepancy;
            mismatches.push(json!({"point": strings(&c.t3_points[k]), "listed": l, "computed": f}));
        }
    }
    let table_groups: Vec<Value> = c
        .t3_points
        .iter()
        .zip(&found)
        .filter_map(|(t, f)| {
            c.table1
                .iter()
                .find(|row| row.expected.as_ref().is_some_and(|e| e[..2] == t[..2]))
                .and_then(|row| row.aut)
                .map(|a| json!({"point": strings(t), "table": a.to_string(), "computed": f, "agree": a.to_string() == *f}))
        })
        .collect();
    listed.sort();
    found.sort();
    let multiset = Status::from_ok(listed == found);
    report.push(
        order.merge(multiset),
        json!({
            "groups_listed": c.t3_groups.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "groups_computed": computed.iter().map(|g| g.map(|g| g.to_string())).collect::<Vec<_>>(),
            "multiset_agrees": listed == found,
            "order_mismatches": mismatches,
            "table_agreement": table_groups,
        }),
    );
    Ok(report)
}

/// The three 2×2 minors of the Jacobian of θ, row pairs (1,2), (1,3), (2,3).
pub fn theta_minors() -> &'static [RationalFunction<Rational>; 3] {
    static CELL: OnceLock<[RationalFunction<Rational>; 3]> = OnceLock::new();
    CELL.get_or_init(|| {
        let theta = &Catalog::get().theta;
        let d: Vec<[RationalFunction<Rational>; 2]> = theta
            .iter()
            .map(|f| {
                [
                    f.partial_derivative("u").expect("u"),
                    f.partial_derivative("v").expect("v"),
                ]
            })
            .collect();
        let minor = |i: usize, j: usize| {
            let a = d[i][0].checked_mul(&d[j][1]).expect("shared variables");
            let b = d[i][1].checked_mul(&d[j][0]).expect("shared variables");
            a.checked_sub(&b).expect("shared variables")
        };
        [minor(0, 1), minor(0, 2), minor(1, 2)]
    })
}

fn minors_at<F: FromRational>(point: &[F; 2]) -> Result<[F; 3]> {
    let m = theta_minors();
    let dom = point[0].domain();
    Ok([
        m[0].evaluate_in(point, &dom)?,
        m[1].evaluate_in(point, &dom)?,
        m[2].evaluate_in(point, &dom)?,
    ])
}

enum RowValue {
    Rational([Rational; 3]),
    Irrational(Vec<String>),
}

fn theta_exact(point: &ExactPoint) -> Result<(RowValue, Vec<String>)> {
    match point {
        ExactPoint::Rational(p) => {
            let t = theta(&p[0], &p[1])?.as_array();
            let m = minors_at(&[p[0].clone(), p[1].clone()])?;
            Ok((RowValue::Rational(t), strings(&m)))
        }
        ExactPoint::Quad(p) => {
            let t = theta(&p[0], &p[1])?.as_array();
            let m = minors_at::<QuadExt>(&[p[0].clone(), p[1].clone()])?;
            let rational: Option<Vec<Rational>> = t.iter().map(QuadExt::to_rational).collect();
            let value = match rational {
                Some(r) => RowValue::Rational(r.try_into().expect("three components")),
                None => RowValue::Irrational(strings(&t)),
            };
            Ok((value, strings(&m)))
        }
    }
}

fn verify_degenerate_row(row: &Table1Record, report: &mut CheckReport) -> Result<()> {
    for (printed, point) in row.printed.iter().zip(&row.points) {
        let ExactPoint::Rational(p) = point else {
            return Err(CoreError::DegenerateParameters(
                "degenerate row must be rational".into(),
            ));
        };
        let (sextic, _) = curve_from_uv(&p[0], &p[1])?;
        let disc = discriminant(&sextic.to_poly(), "x")?;
        let j10 = igusa_from_sextic(&sextic)?.j10;
        let status = Status::from_ok(disc.is_zero() && j10.is_zero());
        report.push(
            status,
            json!({"row": 0, "point": printed, "sextic_discriminant": disc.to_string(), "j10": j10.to_string(), "status": status}),
        );
    }
    Ok(())
}

/// Re-evaluates θ, the automorphism group and the Jacobian minors at every
/// point of the table of exceptional points.
pub fn verify_table1() -> Result<CheckReport> {
    let c = Catalog::get();
    let mut report = CheckReport::new("verify_table1");
    for (index, row) in c.table1.iter().enumerate() {
        let Some(expected) = &row.expected else {
            verify_degenerate_row(row, &mut report)?;
            continue;
        };
        let mut images: Vec<[Rational; 3]> = Vec::new();
        for (printed, point) in row.printed.iter().zip(&row.points) {
            let mut detail = json!({"row": index, "point": printed});
            let mut status = Status::Pass;
            let attempt = theta_exact(point);
            let matches = |v: &RowValue| match v {
                RowValue::Rational(t) => t[..2] == expected[..2] && t[2].abs() == expected[2].abs(),
                RowValue::Irrational(_) => false,
            };
            let (value, minors) = match attempt {
                Ok((v, m)) if matches(&v) => (v, m),
                other => {
                    detail["printed_result"] = match &other {
                        Ok((RowValue::Rational(t), _)) => json!(strings(t)),
                        Ok((RowValue::Irrational(t), _)) => json!(t),
                        Err(e) => json!(format!("error: {e}")),
                    };
                    let Some(fix) = correction_for(printed) else {
                        report.push(Status::Fail, detail);
                        continue;
                    };
                    let fixed = ExactPoint::parse(&fix.corrected)?;
                    let (v, m) = theta_exact(&fixed)?;
                    detail["corrected_point"] = json!(fix.corrected);
                    detail["correction"] = json!(fix.note);
                    status = if matches(&v) { Status::Discrepancy } else { Status::Fail };
                    (v, m)
                }
            };
            let RowValue::Rational(t) = value else {
                report.push(Status::Fail, detail);
                continue;
            };
            detail["theta"] = json!(strings(&t));
            detail["minors"] = json!(minors);
            if !minors.iter().all(|m| m == "0") {
                status = status.merge(Status::Fail);
            }
            let class = classify_automorphism(&t)?;
            let agrees = match (row.aut, class.group) {
                (_, Group::Inconclusive) => true,
                (Some(a), g) => a.to_string() == g.to_string(),
                (None, _) => true,
            };
            if !agrees {
                status = status.merge(Status::Discrepancy);
            }
            detail["classification"] = class.to_json();
            detail["aut_listed"] = json!(row.aut.map(|a| a.to_string()));
            detail["e3"] = json!(row.e3);
            detail["status"] = json!(status);
            report.push(status, detail);
            images.push(t);
        }
        // Conjugate points share one rational image.
        if images.windows(2).any(|w| w[0] != w[1]) {
            report.push(Status::Fail, json!({"row": index, "conjugates_disagree": true}));
        }
        if let Some(t) = images.first() {
            if t[2] != expected[2] {
                let listed = t3_index(t).is_some();
                let status = if listed { Status::Discrepancy } else { Status::Fail };
                report.push(
                    status,
                    json!({
                        "row": index,
                        "i3_sign": {
                            "printed": expected[2].to_string(),
                            "computed": t[2].to_string(),
                            "agrees_with_listed_singular_point": listed,
                        },
                    }),
                );
            }
        }
    }
    Ok(report)
}

/// Number of `i3_sign` conflicts recorded by [`verify_table1`].
pub fn i3_sign_conflicts(report: &CheckReport) -> usize {
    report.details.iter().filter(|d| d.get("i3_sign").is_some()).count()
}

/// Checks that the Jacobian minors of θ vanish on the curve of pairs with
/// isomorphic degree-3 elliptic subcovers, over GF(p).
pub fn verify_minors_on_iso1(prime: u64, samples: usize, seed: u64) -> Result<CheckReport> {
    splitjac_algebra::check_prime(prime)?;
    if prime <= 7 {
        return Err(CoreError::UnsupportedCharacteristic(prime));
    }
    let c = Catalog::get();
    let reduce = |f: &RationalFunction<Rational>| f.map_coeffs(&prime, |q| Fp::from_rational(q, &prime));
    let minors = theta_minors()
        .iter()
        .map(reduce)
        .collect::<splitjac_algebra::Result<Vec<_>>>()?;
    let iso = c.iso1.reduce_mod_p(prime)?;
    let iso_du = iso.partial_derivative("u")?;
    let iso_dv = iso.partial_derivative("v")?;
    let fp = |n: u64| Fp::new(n as i64, prime);
    let eval_minors = |pt: &[Fp; 2]| -> Option<Vec<Fp>> { minors.iter().map(|m| m.evaluate(pt).ok()).collect() };

    let mut report = CheckReport::new("verify_minors_on_iso1");
    let mut r = rng(seed);
    let mut on_curve = 0;
    let mut scanned = 0;
    while on_curve < samples {
        if scanned >= prime {
            return Err(CoreError::InsufficientPoints {
                found: on_curve,
                required: samples,
            });
        }
        scanned += 1;
        let u = fp(r.gen_range(1..prime));
        for v in 1..prime {
            let pt = [u, fp(v)];
            if !iso.evaluate(&pt)?.is_zero() {
                continue;
            }
            let smooth = !(iso_du.evaluate(&pt)?.is_zero() && iso_dv.evaluate(&pt)?.is_zero());
            if !smooth || theta(&pt[0], &pt[1]).is_err() {
                continue;
            }
            let Some(values) = eval_minors(&pt) else { continue };
            let status = Status::from_ok(values.iter().all(Scalar::is_zero));
            report.push(
                status,
                json!({"point": strings(&pt), "on_iso1": true, "minors": strings(&values), "status": status}),
            );
            on_curve += 1;
            if on_curve == samples {
                break;
            }
        }
    }
    let mut off_curve = 0;
    let mut attempts = 0;
    while off_curve < samples {
        attempts += 1;
        if attempts > 100 * samples {
            return Err(CoreError::InsufficientPoints {
                found: off_curve,
                required: samples,
            });
        }
        let pt = [fp(r.gen_range(1..prime)), fp(r.gen_range(1..prime))];
        if iso.evaluate(&pt)?.is_zero() || theta(&pt[0], &pt[1]).is_err() {
            continue;
        }
        let Some(values) = eval_minors(&pt) else { continue };
        let status = Status::from_ok(values.iter().any(|m| !m.is_zero()));
        report.push(
            status,
            json!({"point": strings(&pt), "on_iso1": false, "minors": strings(&values), "status": status}),
        );
        off_curve += 1;
    }
    Ok(report)
}

/// Roots in y of a component quadratic at a fixed x, exact when the
/// discriminant is a rational square.
enum YRoot {
    Exact(Rational),
    Numeric(DBig),
}

fn solve_component_y(
    component: &MultiPoly<Rational>,
    x: &Rational,
    plus: bool,
    digits: usize,
) -> Result<Option<YRoot>> {
    let zero = Rational::integer(0);
    let coeffs: Vec<Rational> = component
        .coefficients_in("y")?
        .iter()
        .map(|p| p.evaluate(&[x.clone(), zero.clone()]))
        .collect::<splitjac_algebra::Result<_>>()?;
    let [c, b, a] = coeffs.as_slice() else {
        return Ok(None);
    };
    if a.is_zero() {
        return Ok(None);
    }
    let disc = &(b * b) - &(&(a * c) * &Rational::integer(4));
    if disc.signum() < 0 {
        return Ok(None);
    }
    let two_a = a * &Rational::integer(2);
    let sign = if plus { 1 } else { -1 };
    if let Some(s) = disc.sqrt() {
        let s = &s * &Rational::integer(sign);
        return Ok(Some(YRoot::Exact(&(&s - b) / &two_a)));
    }
    let s = numeric::sqrt(&numeric::to_float(&disc, digits));
    let s = if plus { s } else { -s };
    let y = (s - numeric::to_float(b, digits)) / numeric::to_float(&two_a, digits);
    Ok(Some(YRoot::Numeric(y)))
}

/// Samples points on the D4 and D6 components of the singular locus of the
/// (2,2) surface and measures the surface value and gradient there.
pub fn sample_c1_c2_singularity(samples: usize, digits: usize, seed: u64) -> Result<CheckReport> {
    numeric::check_precision(digits)?;
    let c = Catalog::get();
    let mut report = CheckReport::new("sample_c1_c2_singularity");
    let special = gradient(&c.s2, &c.s2_special_point)?;
    report.push(
        Status::from_ok(special.is_singular),
        json!({"exact_special_point": special.to_json()}),
    );
    let tol = numeric::tolerance(digits);
    let mut r = rng(seed);
    for (name, component) in [("C1", &c.c1), ("C2", &c.c2)] {
        let (mut found, mut attempts, mut exact) = (0, 0, 0);
        let (mut max_value, mut max_gradient) = (0.0f64, 0.0f64);
        let mut status = Status::Pass;
        while found < samples {
            attempts += 1;
            if attempts > 100 * samples + 100 {
                return Err(CoreError::InsufficientPoints {
                    found,
                    required: samples,
                });
            }
            let x = random_rational(&mut r, RATIONAL_BOUND);
            let Some(y) = solve_component_y(component, &x, found % 2 == 0, digits)? else {
                continue;
            };
            match y {
                YRoot::Exact(y) => {
                    let Ok(z) = z_from_xy(&x, &y) else { continue };
                    let g = gradient(&c.s2, &[x, y, z])?;
                    if !g.is_singular {
                        status = Status::Fail;
                        report
                            .details
                            .push(json!({"component": name, "exact_failure": g.to_json()}));
                    }
                    exact += 1;
                }
                YRoot::Numeric(y) => {
                    let xf = numeric::to_float(&x, digits);
                    let Ok(z) = z_from_xy_numeric(&xf, &y, digits) else {
                        continue;
                    };
                    let g = numeric_gradient(&c.s2, &[xf, y, z], digits)?;
                    max_value = max_value.max(g.value_residual());
                    max_gradient = max_gradient.max(g.gradient_residual());
                    if !(g.value.relative() < tol && g.gradient.iter().all(|d| d.relative() < tol)) {
                        status = Status::Fail;
                        report
                            .details
                            .push(json!({"component": name, "numeric_failure": g.to_json()}));
                    }
                }
            }
            found += 1;
        }
        report.push(
            status,
            json!({
                "component": name,
                "samples": found,
                "exact_samples": exact,
                "precision": digits,
                "tolerance": format!("1e-{}", digits / 2),
                "max_value_residual": max_value,
                "max_gradient_residual": max_gradient,
                "status": status,
            }),
        );
    }
    Ok(report)
}
