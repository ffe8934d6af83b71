//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use serde_json::{json, Value};
use splitjac_algebra::Rational;
use splitjac_core::catalog::Catalog;
use splitjac_core::identities::{rho_rescaling, s2_oracle_membership, symbolic_rho_of_eqr};
use splitjac_core::invariants::{lambda_d, lambda_r};
use splitjac_core::sampling::{valid_uv_sample, DEFAULT_SEED};
use splitjac_core::singular::i3_sign_conflicts;
use splitjac_core::{
    check_identity, gradient, rho, sample_c1_c2_singularity, theta, uv_to_r, verify_c3_system, verify_minors_on_iso1,
    verify_t3_points, verify_table1, IdentityId, IdentityOptions, Status,
};

const SEED: u64 = DEFAULT_SEED;
const SAMPLES: usize = 100;
const ORACLE_CURVES: usize = 50;
const SINGULAR_SAMPLES: usize = 20;
const PRECISION: usize = 60;
const RESIDUAL_BOUND: f64 = 1e-30;
const MINOR_PRIME: u64 = 10007;
const MINOR_POINTS: usize = 25;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn options() -> IdentityOptions {
    IdentityOptions {
        seed: SEED,
        samples: SAMPLES,
        symbolic: true,
    }
}

fn theta_consistency() -> Outcome {
    let r = check_identity(IdentityId::ThetaConsistency, &options()).map_err(err)?;
    ensure(r.samples == SAMPLES, format!("{} samples", r.samples))?;
    ensure(r.status == Status::Pass, format!("{} mismatches", r.witnesses.len()))?;
    Ok(format!("{} points, pipeline equals theta exactly", r.samples))
}

fn eqr_consistency() -> Outcome {
    let r = check_identity(IdentityId::EqrConsistency, &options()).map_err(err)?;
    ensure(r.samples == SAMPLES, format!("{} samples", r.samples))?;
    ensure(r.status == Status::Pass, format!("{} witnesses", r.witnesses.len()))?;
    let constants = r
        .notes
        .iter()
        .find(|n| n.get("lambda_R").is_some())
        .ok_or("no constants recorded")?;
    ensure(
        constants["lambda_R"] == json!([lambda_r().to_string()])
            && constants["lambda_D"] == json!([lambda_d().to_string()]),
        format!("normalizations vary: {constants}"),
    )?;
    Ok(format!(
        "{} points, lambda_R = {}, lambda_D = {} on every sample",
        r.samples,
        lambda_r(),
        lambda_d()
    ))
}

fn rho_factorization() -> Outcome {
    let sample = valid_uv_sample(SEED, SAMPLES);
    let mut mismatches = 0;
    for (u, v) in &sample {
        let (r1, r2) = uv_to_r(u, v).map_err(err)?;
        if rho(&r1, &r2).map_err(err)? != theta(u, v).map_err(err)? {
            mismatches += 1;
        }
    }
    let one = [Rational::integer(1), Rational::integer(1)];
    let theta3 = &Catalog::get().theta[2];
    let literal = symbolic_rho_of_eqr(2, &one).map_err(err)? == *theta3;
    let rescaled = symbolic_rho_of_eqr(2, &rho_rescaling()).map_err(err)? == *theta3;
    let scale = rho_rescaling();
    ensure(
        mismatches == 0 && literal,
        format!(
            "rho(uv_to_r) differs from theta at {mismatches}/{} points, symbolic i3 equal: {literal}; \
             with r1 scaled by {} and r2 by {} the symbolic i3 identity holds: {rescaled}",
            sample.len(),
            scale[0],
            scale[1]
        ),
    )?;
    Ok(format!("{} points and symbolic i3", sample.len()))
}

fn s3_mod5() -> Outcome {
    let r = check_identity(IdentityId::S3Mod5VanishesOnTheta, &options()).map_err(err)?;
    ensure(r.samples == SAMPLES, format!("{} samples", r.samples))?;
    ensure(
        r.status == Status::Pass,
        format!("{} nonzero values", r.witnesses.len()),
    )?;
    Ok(r.method)
}

fn s2_oracle() -> Outcome {
    let r = s2_oracle_membership(SEED, ORACLE_CURVES).map_err(err)?;
    ensure(r.samples == ORACLE_CURVES, format!("{} curves", r.samples))?;
    ensure(
        r.status == Status::Pass,
        format!("{} curves off the surface", r.witnesses.len()),
    )?;
    Ok(format!("{} curves on S2 exactly", r.samples))
}

fn singular_points() -> Outcome {
    let c = Catalog::get();
    let g = gradient(&c.s2, &c.s2_special_point).map_err(err)?;
    ensure(g.is_singular, format!("special point: {}", g.to_json()))?;
    let r = sample_c1_c2_singularity(SINGULAR_SAMPLES, PRECISION, SEED).map_err(err)?;
    ensure(r.status == Status::Pass, format!("{}", json!(r.details)))?;
    let mut worst = 0.0f64;
    for d in r
        .details
        .iter()
        .filter(|d| d.get("component").is_some() && d.get("samples").is_some())
    {
        ensure(d["samples"] == json!(SINGULAR_SAMPLES), format!("short sample: {d}"))?;
        let v = d["max_value_residual"].as_f64().unwrap_or(f64::INFINITY);
        let gr = d["max_gradient_residual"].as_f64().unwrap_or(f64::INFINITY);
        worst = worst.max(v).max(gr);
    }
    ensure(worst < RESIDUAL_BOUND, format!("residual {worst:e}"))?;
    Ok(format!(
        "special point exact; {SINGULAR_SAMPLES} points each on C1, C2 at {PRECISION} digits, worst residual {worst:.1e}"
    ))
}

fn table1() -> Outcome {
    let r = verify_table1().map_err(err)?;
    ensure(r.status != Status::Fail, format!("{}", json!(r.details)))?;
    let c = Catalog::get();
    let reproduced = r
        .details
        .iter()
        .filter(|d| {
            let (Some(row), Some(t)) = (d["row"].as_u64(), d.get("theta")) else {
                return false;
            };
            let Some(expected) = &c.table1[row as usize].expected else {
                return false;
            };
            let abs: Vec<String> = expected.iter().map(|x| x.abs().to_string()).collect();
            let got: Vec<String> = t
                .as_array()
                .map(|a| {
                    a.iter()
                        .map(|x| x.as_str().unwrap_or("").trim_start_matches('-').to_string())
                        .collect()
                })
                .unwrap_or_default();
            t[0] == json!(expected[0].to_string()) && t[1] == json!(expected[1].to_string()) && got == abs
        })
        .count();
    ensure(reproduced == 6, format!("{reproduced} of 6 points reproduced"))?;
    let degenerate = r
        .details
        .iter()
        .any(|d| d.get("sextic_discriminant") == Some(&json!("0")));
    ensure(degenerate, "sextic discriminant at (-7/2, 2) is nonzero")?;
    let conflicts = i3_sign_conflicts(&r);
    ensure(conflicts == 1, format!("{conflicts} i3 sign conflicts"))?;
    let corrections = r.details.iter().filter(|d| d.get("corrected_point").is_some()).count();
    Ok(format!(
        "6 points reproduced ({corrections} after correcting printed coordinates), degenerate row has zero discriminant, one i3 sign conflict"
    ))
}

fn t3_points() -> Outcome {
    let r = verify_t3_points().map_err(err)?;
    ensure(r.status != Status::Fail, format!("{}", json!(r.details)))?;
    let points: Vec<&Value> = r.details.iter().filter(|d| d.get("r").is_some()).collect();
    ensure(points.len() == 3, "expected three points")?;
    let mut hit: Vec<u64> = Vec::new();
    for p in &points {
        ensure(
            p["system_residuals"] == json!(["0", "0", "0"]),
            format!("system: {}", p["system_residuals"]),
        )?;
        ensure(p["s2"]["value"] == json!("0"), "image off S2")?;
        let group = p["classification"]["group"].as_str().unwrap_or("");
        ensure(group == "D4" || group == "D6", format!("classified {group}"))?;
        hit.push(p["listed_index"].as_u64().ok_or("image not among listed points")?);
    }
    hit.sort();
    ensure(hit == [0, 1, 2], "rho is not a bijection onto the listed points")?;
    let summary = r.details.last().ok_or("no summary")?;
    ensure(summary["multiset_agrees"] == json!(true), "group multiset differs")?;
    Ok(format!(
        "system exact, rho bijective, on S2, groups {} (listed {})",
        summary["groups_computed"], summary["groups_listed"]
    ))
}

fn minors() -> Outcome {
    let r = verify_minors_on_iso1(MINOR_PRIME, MINOR_POINTS, SEED).map_err(err)?;
    ensure(r.status == Status::Pass, format!("{}", json!(r.details)))?;
    let on = r.details.iter().filter(|d| d["on_iso1"] == json!(true)).count();
    let off = r.details.iter().filter(|d| d["on_iso1"] == json!(false)).count();
    ensure(
        on >= MINOR_POINTS && off >= MINOR_POINTS,
        format!("{on} on-curve, {off} off-curve"),
    )?;
    Ok(format!(
        "{on} points over GF({MINOR_PRIME}) with all minors zero, {off} off-curve points with a nonzero minor"
    ))
}

fn c3() -> Outcome {
    let r = verify_c3_system().map_err(err)?;
    ensure(r.details.len() == 3, "expected three points")?;
    for d in &r.details {
        for key in ["c3_first", "c3_second", "cubic"] {
            ensure(d["residuals"][key].is_string(), format!("missing residual {key}"))?;
        }
    }
    let first = &r.details[0];
    ensure(
        first["satisfied"]["cubic"] == json!(false),
        "(0, 729/50) satisfies the cubic",
    )?;
    ensure(
        first["status"] == json!("discrepancy"),
        "cubic inconsistency not flagged",
    )?;
    let lifts: Vec<bool> = r
        .details
        .iter()
        .map(|d| d["z_lift_on_surface"] == json!(true))
        .collect();
    ensure(lifts == [true, false, false], format!("lifts on S2: {lifts:?}"))?;
    ensure(
        first["lift"]["point"]
            == json!(Catalog::get()
                .s2_special_point
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()),
        "lift differs from the listed point",
    )?;
    Ok(format!(
        "residuals reported; cubic at x = 0 is {}; only (0, 729/50) lifts onto S2",
        first["residuals"]["cubic"].as_str().unwrap_or("?")
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("theta consistency", theta_consistency),
        ("eq_r consistency", eqr_consistency),
        ("rho factorization", rho_factorization),
        ("S3 mod 5", s3_mod5),
        ("S2 oracle membership", s2_oracle),
        ("singular point exactness", singular_points),
        ("table reproduction", table1),
        ("T3 verification", t3_points),
        ("minor vanishing on iso1", minors),
        ("C3 adjudication", c3),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {} {name}: PASS ({secs:.1}s) {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({secs:.1}s) {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
