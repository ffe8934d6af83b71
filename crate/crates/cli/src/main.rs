//! `splitjac`: exact invariants, surface evaluation and verification reports
//! for genus 2 curves with split Jacobians.

mod input;
mod points;
mod sample;
mod verify;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use splitjac_core::sampling::DEFAULT_SEED;
use splitjac_core::CoreError;

use crate::input::UsageError;
use crate::sample::{Grid, SampleSurface};

#[derive(Parser)]
#[command(name = "splitjac", version)]
#[command(about = "Exact invariants, surfaces and singular loci of genus 2 curves with split Jacobians")]
struct Cli {
    /// Seed for every randomized check
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Working precision in decimal digits (numeric evaluation)
    #[arg(long, global = true)]
    precision: Option<usize>,

    /// Work over GF(p) instead of the rationals
    #[arg(long, global = true)]
    prime: Option<u64>,

    /// Emit JSON (the default except for `sample`)
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,

    /// Emit CSV (only `sample`, where it is the default)
    #[arg(long, global = true)]
    csv: bool,

    /// Write the output to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Igusa-Clebsch and absolute invariants of a0 + a1*x + ... + a6*x^6
    Invariants {
        #[arg(num_args = 7, required = true, allow_hyphen_values = true, value_name = "A")]
        coeffs: Vec<String>,
    },
    /// H, resultant, discriminants and r1, r2, r3 of F = f0 + ... + f3*x^3, G = g0 + ... + g3*x^3
    CubicPair {
        #[arg(num_args = 8, required = true, allow_hyphen_values = true, value_name = "F0 .. G3")]
        coeffs: Vec<String>,
    },
    /// Absolute invariants (i1, i2, i3) of the (u, v) family
    Theta {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Absolute invariants (i1, i2, i3) as functions of (r1, r2)
    Rho {
        #[arg(allow_hyphen_values = true)]
        r1: String,
        #[arg(allow_hyphen_values = true)]
        r2: String,
    },
    /// (r1, r2) as functions of (u, v)
    UvToR {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Evaluate a stored surface at a point
    SurfaceEval {
        /// Surface name, e.g. S2, S3mod5, C1, iso1, J2locus
        surface: String,
        #[arg(num_args = 1.., required = true, allow_hyphen_values = true)]
        coords: Vec<String>,
    },
    /// Value and gradient of a surface in (x, y, z); z is lifted when omitted
    Singular {
        #[arg(num_args = 2..=3, required = true, allow_hyphen_values = true, value_name = "X Y [Z]")]
        coords: Vec<String>,
        #[arg(long, default_value = "S2")]
        surface: String,
    },
    /// Automorphism group of a point on the (2,2) surface; z is lifted when omitted
    Classify {
        #[arg(num_args = 2..=3, required = true, allow_hyphen_values = true, value_name = "X Y [Z]")]
        coords: Vec<String>,
    },
    /// Run one check or all of them and print a suite report
    Verify {
        #[arg(default_value = "all")]
        check: String,
    },
    /// Export (i1, i2, i3) point clouds over a parameter grid
    Sample {
        surface: SampleSurface,
        /// First parameter range LO:HI
        #[arg(long, default_value = "-10:10", allow_hyphen_values = true)]
        range1: Grid,
        /// Second parameter range LO:HI
        #[arg(long, default_value = "-10:10", allow_hyphen_values = true)]
        range2: Grid,
        /// Grid step for both parameters
        #[arg(long, default_value = "0.5")]
        step: String,
        /// Grid step for the second parameter, if different
        #[arg(long)]
        step2: Option<String>,
    },
}

fn write_output(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    let out = cli.out.as_deref();
    if cli.csv && !matches!(cli.command, Command::Sample { .. }) {
        return Err(UsageError::new("--csv is only available for `sample`").into());
    }
    let value = match &cli.command {
        Command::Invariants { coeffs } => points::invariants(coeffs, cli.prime)?,
        Command::CubicPair { coeffs } => points::cubic_pair(coeffs, cli.prime)?,
        Command::Theta { u, v } => points::theta(&[u.clone(), v.clone()], cli.prime)?,
        Command::Rho { r1, r2 } => points::rho(&[r1.clone(), r2.clone()], cli.prime)?,
        Command::UvToR { u, v } => points::uv_to_r(&[u.clone(), v.clone()], cli.prime)?,
        Command::SurfaceEval { surface, coords } => points::surface_eval(surface, coords, cli.prime, cli.precision)?,
        Command::Singular { coords, surface } => points::singular(surface, coords, cli.prime, cli.precision)?,
        Command::Classify { coords } => points::classify(coords, cli.prime)?,
        Command::Verify { check } => {
            let opts = verify::SuiteOptions::new(cli.seed, cli.prime, cli.precision)?;
            let report = verify::run_suite(check, &opts)?;
            write_output(out, &pretty(&serde_json::to_value(&report)?))?;
            eprintln!("{}", report.summary_line());
            return Ok(if report.has_failures() {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            });
        }
        Command::Sample {
            surface,
            range1,
            range2,
            step,
            step2,
        } => {
            let step1 = input::parse_step(step)?;
            let step2 = step2
                .as_deref()
                .map(input::parse_step)
                .transpose()?
                .unwrap_or_else(|| step1.clone());
            let digits = cli.precision.unwrap_or(sample::DEFAULT_DIGITS);
            let cloud = sample::sample(*surface, &range1.with_step(step1), &range2.with_step(step2), digits)?;
            for skip in &cloud.skipped {
                eprintln!("skipped {}", skip);
            }
            let text = if cli.json {
                pretty(&cloud.to_json())
            } else {
                cloud.to_csv()
            };
            write_output(out, &text)?;
            eprintln!("{} rows, {} skipped", cloud.rows.len(), cloud.skipped.len());
            return Ok(ExitCode::SUCCESS);
        }
    };
    write_output(out, &pretty(&value))?;
    Ok(ExitCode::SUCCESS)
}

fn error_kind(e: &CoreError) -> &'static str {
    match e {
        CoreError::Algebra(_) => "algebra",
        CoreError::J2Vanishes => "j2_vanishes",
        CoreError::NoGenus2Curve => "no_genus2_curve",
        CoreError::ResultantVanishes => "resultant_vanishes",
        CoreError::DiscriminantVanishes => "discriminant_vanishes",
        CoreError::DegenerateParameters(_) => "degenerate_parameters",
        CoreError::InvalidSextic(_) => "invalid_sextic",
        CoreError::ThetaUndefined { .. } => "theta_undefined",
        CoreError::RhoUndefined { .. } => "rho_undefined",
        CoreError::EqRUndefined { .. } => "eqr_undefined",
        CoreError::Phi2Vanishes => "phi2_vanishes",
        CoreError::InsufficientPoints { .. } => "insufficient_points",
        CoreError::UnsupportedCharacteristic(_) => "unsupported_characteristic",
        CoreError::UnknownCheck { .. } => "unknown_check",
    }
}

/// Long options that take a separate value.
const VALUE_OPTIONS: [&str; 9] = [
    "--seed",
    "--precision",
    "--prime",
    "--out",
    "--surface",
    "--range1",
    "--range2",
    "--step",
    "--step2",
];

/// Moves long options after the subcommand ahead of its positional
/// arguments, so coordinates such as `-7/2` may be followed by options.
fn hoist_options(args: Vec<String>) -> Vec<String> {
    let mut sub = None;
    let mut i = 1;
    while i < args.len() {
        if VALUE_OPTIONS.contains(&args[i].as_str()) {
            i += 1;
        } else if !args[i].starts_with('-') {
            sub = Some(i);
            break;
        }
        i += 1;
    }
    let Some(sub) = sub else {
        return args;
    };
    let mut head = args[..=sub].to_vec();
    let mut positional = Vec::new();
    let mut rest = args[sub + 1..].iter();
    while let Some(a) = rest.next() {
        if a == "--" {
            positional.push(a.clone());
            positional.extend(rest.by_ref().cloned());
        } else if a.starts_with("--") {
            head.push(a.clone());
            if VALUE_OPTIONS.contains(&a.as_str()) {
                head.extend(rest.next().cloned());
            }
        } else {
            positional.push(a.clone());
        }
    }
    head.extend(positional);
    head
}

fn main() -> ExitCode {
    let cli = Cli::parse_from(hoist_options(std::env::args().collect()));
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            if let Some(usage) = e.downcast_ref::<UsageError>() {
                eprintln!("error: {usage}");
                return ExitCode::from(2);
            }
            let kind = e.downcast_ref::<CoreError>().map_or("io", error_kind);
            print!(
                "{}",
                pretty(&json!({"error": {"kind": kind, "message": e.to_string()}}))
            );
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
