//! Seeded random inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use splitjac_algebra::{ExtField, GfExt, Rational, Scalar};
use std::sync::Arc;

use crate::invariants::{curve_from_uv, igusa_from_sextic};
use crate::surfaces::{rho, theta, uv_to_r};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 2;

/// Bound on numerators and denominators of sampled rationals.
pub const RATIONAL_BOUND: i64 = 50;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform n/d with |n| ≤ bound and 1 ≤ d ≤ bound.
pub fn random_rational(rng: &mut impl Rng, bound: i64) -> Rational {
    Rational::frac(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

pub fn random_element(rng: &mut impl Rng, field: &Arc<ExtField>) -> GfExt {
    field.element(rng.gen_range(0..field.size()))
}

/// Whether every stored map is defined at (u, v) and the curve has genus 2.
pub fn uv_is_valid(u: &Rational, v: &Rational) -> bool {
    let curve_ok = curve_from_uv(u, v)
        .ok()
        .and_then(|(s, _)| igusa_from_sextic(&s).ok())
        .is_some_and(|j| !j.j10.is_zero() && !j.j2.is_zero());
    curve_ok && theta(u, v).is_ok() && uv_to_r(u, v).is_ok_and(|(r1, r2)| rho(&r1, &r2).is_ok())
}

/// `n` seeded rational (u, v) pairs at which every map is defined.
pub fn valid_uv_sample(seed: u64, n: usize) -> Vec<(Rational, Rational)> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let u = random_rational(&mut rng, RATIONAL_BOUND);
        let v = random_rational(&mut rng, RATIONAL_BOUND);
        if uv_is_valid(&u, &v) {
            out.push((u, v));
        }
    }
    out
}
