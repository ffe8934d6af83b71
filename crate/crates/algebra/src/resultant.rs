//! Resultants and discriminants of univariate polynomials whose coefficients
//! may involve other variables.

use crate::error::{AlgebraError, Result};
use crate::poly::MultiPoly;
use crate::scalar::Scalar;

/// Determinant by fraction-free (Bareiss) elimination. Every division is exact.
pub fn bareiss_determinant<F: Scalar>(mut m: Vec<Vec<MultiPoly<F>>>, one: &MultiPoly<F>) -> Result<MultiPoly<F>> {
    let n = m.len();
    if n == 0 {
        return Ok(one.clone());
    }
    let mut negate = false;
    let mut prev = one.clone();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(one.zero_like()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.div_exact(&prev)?;
            }
            m[i][k] = one.zero_like();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { det.negate() } else { det })
}

fn degree_checked<F: Scalar>(f: &MultiPoly<F>, var: &str, required: usize) -> Result<Vec<MultiPoly<F>>> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let coeffs = f.coefficients_in(var)?;
    let deg = coeffs.len() - 1;
    if deg < required {
        return Err(AlgebraError::DegreeTooSmall { required, found: deg });
    }
    Ok(coeffs)
}

/// Sylvester resultant of `f` and `g` with respect to `var`.
pub fn resultant<F: Scalar>(f: &MultiPoly<F>, g: &MultiPoly<F>, var: &str) -> Result<MultiPoly<F>> {
    let (f, g) = f.align(g)?;
    let cf = degree_checked(&f, var, 1)?;
    let cg = degree_checked(&g, var, 1)?;
    let (m, n) = (cf.len() - 1, cg.len() - 1);
    let size = m + n;
    let zero = f.zero_like();
    let mut rows = Vec::with_capacity(size);
    for (coeffs, shifts) in [(&cf, n), (&cg, m)] {
        for s in 0..shifts {
            let mut row = vec![zero.clone(); size];
            // Highest coefficient first.
            for (k, c) in coeffs.iter().rev().enumerate() {
                row[s + k] = c.clone();
            }
            rows.push(row);
        }
    }
    bareiss_determinant(rows, &f.one_like())
}

/// Discriminant `(−1)^(n(n−1)/2) · Res(f, f′) / lc(f)` with respect to `var`.
pub fn discriminant<F: Scalar>(f: &MultiPoly<F>, var: &str) -> Result<MultiPoly<F>> {
    let coeffs = degree_checked(f, var, 2)?;
    let n = coeffs.len() - 1;
    let lc = coeffs[n].clone();
    let res = resultant(f, &f.partial_derivative(var)?, var)?;
    let q = res.div_exact(&lc)?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { q.negate() } else { q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_polynomial;
    use crate::scalar::Rational;

    fn p(text: &str) -> MultiPoly<Rational> {
        parse_polynomial(text, &["x", "a", "b", "c", "d"], &()).unwrap()
    }

    #[test]
    fn small_resultants() {
        assert_eq!(resultant(&p("x"), &p("x - 1"), "x").unwrap(), p("-1"));
        let f = p("4*x^3 + x^2 + 2*x + 1");
        let g = p("x^3 + x^2 + x + 1");
        assert_eq!(resultant(&f, &g, "x").unwrap(), p("16"));
        assert!(resultant(&f, &f, "x").unwrap().is_zero());
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(resultant(&p("0"), &p("x"), "x"), Err(AlgebraError::ZeroPolynomial));
        assert_eq!(
            discriminant(&p("x + 1"), "x"),
            Err(AlgebraError::DegreeTooSmall { required: 2, found: 1 })
        );
    }

    #[test]
    fn classical_discriminants() {
        assert_eq!(discriminant(&p("x^2 - 1"), "x").unwrap(), p("4"));
        assert!(discriminant(&p("x^3"), "x").unwrap().is_zero());
        let cubic = p("a*x^3 + b*x^2 + c*x + d");
        assert_eq!(
            discriminant(&cubic, "x").unwrap(),
            p("18*a*b*c*d - 4*b^3*d + b^2*c^2 - 4*a*c^3 - 27*a^2*d^2")
        );
    }
}
