//! Point-wise subcommands: invariants, parametrizations and surface values.

use serde_json::{json, Value};
use splitjac_algebra::{FromRational, MultiPoly, Rational, Scalar};
use splitjac_core::invariants::{pair_r3, CubicPair};
use splitjac_core::singular::{numeric_gradient, z_from_xy_numeric};
use splitjac_core::surfaces::{eval_s3_mod5, theta_checked};
use splitjac_core::{
    absolute_from_igusa, classify_automorphism, gradient, igusa_from_sextic, numeric, pair_r1_r2, z_from_xy, CoreError,
    SexticForm, SurfaceId,
};

use crate::input::{on_point, parse_point, UsageError};

type CoreResult<T> = Result<T, CoreError>;

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn with_field(mut value: Value, field: String) -> Value {
    value["field"] = json!(field);
    value
}

fn invariants_of<F: FromRational>(coeffs: &[F]) -> CoreResult<Value> {
    let sextic = SexticForm::new(coeffs.to_vec())?;
    let j = igusa_from_sextic(&sextic)?;
    let abs = match absolute_from_igusa(&j) {
        Ok(a) => Some(a),
        Err(CoreError::J2Vanishes) => None,
        Err(e) => return Err(e),
    };
    Ok(json!({
        "sextic": strings(coeffs),
        "J2": j.j2.to_string(),
        "J4": j.j4.to_string(),
        "J6": j.j6.to_string(),
        "J10": j.j10.to_string(),
        "genus2": !j.j10.is_zero(),
        "J2_vanishes": abs.is_none(),
        "i1": abs.as_ref().map(|a| a.i1.to_string()),
        "i2": abs.as_ref().map(|a| a.i2.to_string()),
        "i3": abs.as_ref().map(|a| a.i3.to_string()),
    }))
}

pub fn invariants(args: &[String], prime: Option<u64>) -> anyhow::Result<Value> {
    let p = parse_point(args, prime)?;
    Ok(with_field(on_point!(&p, c => invariants_of(c))?, p.field()))
}

fn cubic_pair_of<F: FromRational>(c: &[F]) -> CoreResult<Value> {
    let pair = CubicPair {
        f: [c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()],
        g: [c[4].clone(), c[5].clone(), c[6].clone(), c[7].clone()],
    };
    let inv = pair_r1_r2(&pair)?;
    let r3 = match pair_r3(&pair) {
        Ok(r3) => Some(r3.to_string()),
        Err(CoreError::J2Vanishes) => None,
        Err(e) => return Err(e),
    };
    Ok(json!({
        "F": strings(&pair.f),
        "G": strings(&pair.g),
        "H": inv.h.to_string(),
        "resultant": inv.resultant.to_string(),
        "disc_F": inv.disc_f.to_string(),
        "disc_G": inv.disc_g.to_string(),
        "r1": inv.r1.to_string(),
        "r2": inv.r2.to_string(),
        "r3": r3,
    }))
}

pub fn cubic_pair(args: &[String], prime: Option<u64>) -> anyhow::Result<Value> {
    let p = parse_point(args, prime)?;
    Ok(with_field(on_point!(&p, c => cubic_pair_of(c))?, p.field()))
}

fn theta_of<F: FromRational>(p: &[F]) -> CoreResult<Value> {
    let a = match theta_checked(&p[0], &p[1]) {
        Err(CoreError::UnsupportedCharacteristic(_)) => splitjac_core::theta(&p[0], &p[1])?,
        other => other?,
    };
    Ok(
        json!({"u": p[0].to_string(), "v": p[1].to_string(), "i1": a.i1.to_string(), "i2": a.i2.to_string(), "i3": a.i3.to_string()}),
    )
}

pub fn theta(args: &[String], prime: Option<u64>) -> anyhow::Result<Value> {
    let p = parse_point(args, prime)?;
    Ok(with_field(on_point!(&p, c => theta_of(c))?, p.field()))
}

fn rho_of<F: FromRational>(p: &[F]) -> CoreResult<Value> {
    let a = splitjac_core::rho(&p[0], &p[1])?;
    Ok(
        json!({"r1": p[0].to_string(), "r2": p[1].to_string(), "i1": a.i1.to_string(), "i2": a.i2.to_string(), "i3": a.i3.to_string()}),
    )
}

pub fn rho(args: &[String], prime: Option<u64>) -> anyhow::Result<Value> {
    let p = parse_point(args, prime)?;
    Ok(with_field(on_point!(&p, c => rho_of(c))?, p.field()))
}

fn uv_to_r_of<F: FromRational>(p: &[F]) -> CoreResult<Value> {
    let (r1, r2) = splitjac_core::uv_to_r(&p[0], &p[1])?;
    Ok(json!({"u": p[0].to_string(), "v": p[1].to_string(), "r1": r1.to_string(), "r2": r2.to_string()}))
}

pub fn uv_to_r(args: &[String], prime: Option<u64>) -> anyhow::Result<Value> {
    let p = parse_point(args, prime)?;
    Ok(with_field(on_point!(&p, c => uv_to_r_of(c))?, p.field()))
}

fn surface_id(name: &str) -> anyhow::Result<SurfaceId> {
    SurfaceId::from_name(name).ok_or_else(|| {
        let names: Vec<&str> = SurfaceId::ALL.iter().map(|s| s.name()).collect();
        UsageError::new(format!(
            "unknown surface `{name}`; valid surfaces: {}",
            names.join(", ")
        ))
        .into()
    })
}

fn numeric_digits(precision: usize) -> anyhow::Result<usize> {
    numeric::check_precision(precision).map_err(|e| UsageError::new(e.to_string()))?;
    Ok(precision)
}

fn real_surface(id: SurfaceId) -> anyhow::Result<&'static MultiPoly<Rational>> {
    id.rational_poly()
        .ok_or_else(|| UsageError::new(format!("{} is defined over GF(5) only", id.name())).into())
}

pub fn surface_eval(
    name: &str,
    args: &[String],
    prime: Option<u64>,
    precision: Option<usize>,
) -> anyhow::Result<Value> {
    let id = surface_id(name)?;
    let vars = id.vars();
    if args.len() != vars.len() {
        return Err(UsageError::new(format!(
            "{} takes {} coordinates ({}), got {}",
            id.name(),
            vars.len(),
            vars.join(", "),
            args.len()
        ))
        .into());
    }
    let p = parse_point(args, prime)?;
    if let Some(precision) = precision {
        let digits = numeric_digits(precision)?;
        let poly = real_surface(id)?;
        let value = numeric::evaluate(poly, &p.decimals(digits)?, digits)?;
        let relative = value.relative();
        return Ok(json!({
            "surface": id.name(),
            "point": args,
            "precision": digits,
            "value": value.value.to_string(),
            "relative_residual": numeric::to_f64(&relative),
            "vanishes": relative < numeric::tolerance(digits),
        }));
    }
    let value = match (p.exact(), &p) {
        (Some(exact), _) => splitjac_core::surface_eval(id, &exact)?.to_string(),
        (None, crate::input::Point::Mod(v)) => match id.rational_poly() {
            Some(poly) => poly.evaluate_in(v, &v[0].domain())?.to_string(),
            None => eval_s3_mod5(v, Clone::clone)?.to_string(),
        },
        (None, _) => unreachable!("only GF(p) points lack an exact form"),
    };
    Ok(json!({
        "surface": id.name(),
        "field": p.field(),
        "point": on_point!(&p, c => strings(c)),
        "value": value,
        "zero": value == "0",
    }))
}

/// Completes (x, y) to (x, y, z) on the (2,2) surface's singular locus.
fn lift<F: FromRational>(c: &[F]) -> CoreResult<([F; 3], bool)> {
    match c {
        [x, y] => Ok(([x.clone(), y.clone(), z_from_xy(x, y)?], true)),
        [x, y, z] => Ok(([x.clone(), y.clone(), z.clone()], false)),
        _ => unreachable!("clap admits two or three coordinates"),
    }
}

fn singular_of<F: FromRational>(surface: &MultiPoly<Rational>, c: &[F]) -> CoreResult<Value> {
    let (point, lifted) = lift(c)?;
    let mut out = gradient(surface, &point)?.to_json();
    out["z_lifted"] = json!(lifted);
    Ok(out)
}

pub fn singular(name: &str, args: &[String], prime: Option<u64>, precision: Option<usize>) -> anyhow::Result<Value> {
    let id = surface_id(name)?;
    let surface = real_surface(id)?;
    if args.len() == 2 && id != SurfaceId::S2 {
        return Err(UsageError::new("z can only be lifted on S2; give all three coordinates").into());
    }
    let p = parse_point(args, prime)?;
    let mut out = match precision {
        Some(precision) => {
            let digits = numeric_digits(precision)?;
            let d = p.decimals(digits)?;
            let z = match d.get(2) {
                Some(z) => z.clone(),
                None => z_from_xy_numeric(&d[0], &d[1], digits)?,
            };
            let mut out = numeric_gradient(surface, &[d[0].clone(), d[1].clone(), z], digits)?.to_json();
            out["z_lifted"] = json!(args.len() == 2);
            out
        }
        None => with_field(on_point!(&p, c => singular_of(surface, c))?, p.field()),
    };
    out["surface"] = json!(id.name());
    Ok(out)
}

fn classify_of<F: FromRational>(c: &[F]) -> CoreResult<Value> {
    let (point, lifted) = lift(c)?;
    let mut out = classify_automorphism(&point)?.to_json();
    out["z_lifted"] = json!(lifted);
    Ok(out)
}

pub fn classify(args: &[String], prime: Option<u64>) -> anyhow::Result<Value> {
    let p = parse_point(args, prime)?;
    Ok(with_field(on_point!(&p, c => classify_of(c))?, p.field()))
}
