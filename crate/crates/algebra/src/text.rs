//! Line-based interchange format for polynomials.
//!
//! ```text
//! x,y,z
//! -27:6,0,0;2:0,5,0;1/3:0,0,1
//! ```
//!
//! The first line names the variables. The second lists `coeff:exponents`
//! terms separated by `;`, highest graded-lex term first. The zero polynomial
//! has an empty second line. Writing then reading is the identity, and so is
//! reading then writing canonical text.

use crate::error::{AlgebraError, Result};
use crate::poly::MultiPoly;
use crate::scalar::Scalar;

pub fn to_text<F: Scalar>(p: &MultiPoly<F>) -> String {
    let terms: Vec<String> = p
        .terms()
        .rev()
        .map(|(m, c)| {
            let exps: Vec<String> = m.exponents().iter().map(u32::to_string).collect();
            format!("{c}:{}", exps.join(","))
        })
        .collect();
    format!("{}\n{}\n", p.vars().join(","), terms.join(";"))
}

pub fn from_text<F: Scalar>(text: &str, domain: &F::Domain) -> Result<MultiPoly<F>> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| AlgebraError::parse(0, "missing variable line"))?;
    let body = lines.next().unwrap_or("");
    if lines.any(|l| !l.trim().is_empty()) {
        return Err(AlgebraError::parse(
            header.len() + body.len() + 2,
            "unexpected extra lines",
        ));
    }
    let vars: Vec<&str> = if header.trim().is_empty() {
        Vec::new()
    } else {
        header.split(',').map(str::trim).collect()
    };
    let mut offset = header.len() + 1;
    let mut terms = Vec::new();
    for chunk in body.split(';') {
        let here = offset;
        offset += chunk.len() + 1;
        if chunk.trim().is_empty() {
            if body.trim().is_empty() {
                continue;
            }
            return Err(AlgebraError::parse(here, "empty term"));
        }
        let (coeff, exps) = chunk
            .rsplit_once(':')
            .ok_or_else(|| AlgebraError::parse(here, "term without `:`"))?;
        let c = F::parse(coeff.trim(), domain).map_err(|e| match e {
            AlgebraError::Parse { position, message } => AlgebraError::parse(here + position, message),
            other => other,
        })?;
        let exps: Vec<u32> = if exps.trim().is_empty() {
            Vec::new()
        } else {
            exps.split(',')
                .map(|e| e.trim().parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| AlgebraError::parse(here + coeff.len() + 1, "bad exponent"))?
        };
        if exps.len() != vars.len() {
            return Err(AlgebraError::parse(
                here + coeff.len() + 1,
                format!("expected {} exponents, found {}", vars.len(), exps.len()),
            ));
        }
        terms.push((exps, c));
    }
    MultiPoly::from_terms(&vars, domain, terms)
}
