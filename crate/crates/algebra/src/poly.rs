//! Sparse multivariate polynomials.

use std::borrow::Cow;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::monomial::Monomial;
use crate::scalar::{Fp, FromRational, Rational, Scalar};

/// A polynomial in named variables with coefficients in a `Scalar` domain.
///
/// Terms are kept in a map from exponent vector to coefficient; zero
/// coefficients are never stored.
#[derive(Clone)]
pub struct MultiPoly<F: Scalar> {
    vars: Arc<[String]>,
    domain: F::Domain,
    terms: BTreeMap<Monomial, F>,
}

pub(crate) fn var_list(vars: &[&str]) -> Arc<[String]> {
    vars.iter().map(|s| s.to_string()).collect()
}

fn mismatch<D: fmt::Debug>(a: &D, b: &D) -> AlgebraError {
    AlgebraError::DomainMismatch {
        left: format!("{a:?}"),
        right: format!("{b:?}"),
    }
}

impl<F: Scalar> MultiPoly<F> {
    pub fn zero(vars: &[&str], domain: &F::Domain) -> Self {
        Self::zero_in(var_list(vars), domain)
    }

    pub(crate) fn zero_in(vars: Arc<[String]>, domain: &F::Domain) -> Self {
        MultiPoly {
            vars,
            domain: domain.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: F) -> Self {
        Self::constant_in(var_list(vars), c)
    }

    pub(crate) fn constant_in(vars: Arc<[String]>, c: F) -> Self {
        let mut p = Self::zero_in(vars, &c.domain());
        let n = p.vars.len();
        p.insert(Monomial::one(n), c);
        p
    }

    pub fn one_like(&self) -> Self {
        Self::constant_in(self.vars.clone(), F::one(&self.domain))
    }

    pub fn zero_like(&self) -> Self {
        Self::zero_in(self.vars.clone(), &self.domain)
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn variable(vars: &[&str], name: &str, domain: &F::Domain) -> Result<Self> {
        let vars = var_list(vars);
        let index = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        let mut p = Self::zero_in(vars, domain);
        let n = p.vars.len();
        p.insert(Monomial::unit(n, index), F::one(domain));
        Ok(p)
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; repeated
    /// exponent vectors are summed.
    pub fn from_terms<I>(vars: &[&str], domain: &F::Domain, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, F)>,
    {
        let mut p = Self::zero(vars, domain);
        for (exps, c) in terms {
            if exps.len() != p.vars.len() {
                return Err(AlgebraError::parse(
                    0,
                    format!(
                        "exponent vector of length {} for {} variables",
                        exps.len(),
                        p.vars.len()
                    ),
                ));
            }
            if c.domain() != *domain {
                return Err(mismatch(&c.domain(), domain));
            }
            p.add_term(Monomial::from_exponents(&exps), c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub(crate) fn vars_arc(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    fn require_var(&self, name: &str) -> Result<usize> {
        self.var_index(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))
    }

    pub fn domain(&self) -> &F::Domain {
        &self.domain
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Coefficient of the monomial with the given exponents (zero if absent).
    pub fn coefficient(&self, exps: &[u32]) -> F {
        self.terms
            .get(&Monomial::from_exponents(exps))
            .cloned()
            .unwrap_or_else(|| F::zero(&self.domain))
    }

    pub fn constant_term(&self) -> F {
        self.coefficient(&vec![0; self.vars.len()])
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::total_degree)
    }

    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(index)).max().unwrap_or(0)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    fn insert(&mut self, m: Monomial, c: F) {
        if !c.is_zero() {
            self.terms.insert(m, c);
        }
    }

    fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().plus(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Re-expresses the polynomial over a different variable list. Variables
    /// absent from `vars` must not occur in the polynomial.
    pub fn with_vars(&self, vars: &[String]) -> Result<Self> {
        if *self.vars == *vars {
            return Ok(self.clone());
        }
        let target: Arc<[String]> = vars.iter().cloned().collect();
        let positions: Vec<Option<usize>> = self.vars.iter().map(|v| target.iter().position(|t| t == v)).collect();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut out = Monomial::one(target.len());
            for (i, &e) in m.exponents().iter().enumerate() {
                match positions[i] {
                    Some(j) => out.exponents_mut()[j] = e,
                    None if e == 0 => {}
                    None => return Err(AlgebraError::UnknownVariable(self.vars[i].clone())),
                }
            }
            terms.insert(out, c.clone());
        }
        Ok(MultiPoly {
            vars: target,
            domain: self.domain.clone(),
            terms,
        })
    }

    /// Brings two polynomials onto a common variable list (the variables of
    /// `self` followed by any new ones from `other`) and checks the domains.
    pub fn align<'a>(&'a self, other: &'a Self) -> Result<(Cow<'a, Self>, Cow<'a, Self>)> {
        if self.domain != other.domain {
            return Err(mismatch(&self.domain, &other.domain));
        }
        if self.vars == other.vars {
            return Ok((Cow::Borrowed(self), Cow::Borrowed(other)));
        }
        let mut union: Vec<String> = self.vars.to_vec();
        for v in other.vars.iter() {
            if !union.contains(v) {
                union.push(v.clone());
            }
        }
        let a = if union.len() == self.vars.len() {
            Cow::Borrowed(self)
        } else {
            Cow::Owned(self.with_vars(&union)?)
        };
        Ok((a, Cow::Owned(other.with_vars(&union)?)))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.align(other)?;
        let mut out = a.into_owned();
        for (m, c) in &b.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.align(other)?;
        let mut out = a.into_owned();
        for (m, c) in &b.terms {
            out.add_term(m.clone(), c.negate());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.align(other)?;
        let mut out = a.zero_like();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.mul(mb), ca.times(cb));
            }
        }
        Ok(out)
    }

    pub fn negate(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            domain: self.domain.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.negate())).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        MultiPoly {
            vars: self.vars.clone(),
            domain: self.domain.clone(),
            terms: self
                .terms
                .iter()
                .filter_map(|(m, a)| {
                    let v = a.times(c);
                    (!v.is_zero()).then(|| (m.clone(), v))
                })
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to `name`.
    pub fn partial_derivative(&self, name: &str) -> Result<Self> {
        let index = self.require_var(name)?;
        let mut out = self.zero_like();
        for (m, c) in &self.terms {
            let e = m.exponent(index);
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.exponents_mut()[index] = e - 1;
            out.add_term(dm, c.times(&F::from_i64(e as i64, &self.domain)));
        }
        Ok(out)
    }

    /// Evaluates at a point given in variable order, converting each
    /// coefficient with `coeff` on the way.
    pub fn evaluate_with<G, C>(&self, point: &[G], domain: &G::Domain, coeff: C) -> Result<G>
    where
        G: Scalar,
        C: Fn(&F) -> Result<G>,
    {
        if point.len() != self.vars.len() {
            return Err(AlgebraError::UnboundVariable(
                self.vars.get(point.len()).cloned().unwrap_or_default(),
            ));
        }
        if let Some(bad) = point.iter().find(|x| x.domain() != *domain) {
            return Err(mismatch(&bad.domain(), domain));
        }
        let powers: Vec<Vec<G>> = point
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let d = self.degree_in(i) as usize;
                let mut table = Vec::with_capacity(d + 1);
                table.push(G::one(domain));
                for k in 1..=d {
                    let next = table[k - 1].times(x);
                    table.push(next);
                }
                table
            })
            .collect();
        let mut acc = G::zero(domain);
        for (m, c) in &self.terms {
            let mut t = coeff(c)?;
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.times(&powers[i][e as usize]);
                }
            }
            acc = acc.plus(&t);
        }
        Ok(acc)
    }

    /// Evaluates at a point given in variable order.
    pub fn evaluate(&self, point: &[F]) -> Result<F> {
        self.evaluate_with(point, &self.domain, |c| Ok(c.clone()))
    }

    /// Evaluates with named bindings; every variable must be bound.
    pub fn evaluate_named(&self, bindings: &[(&str, F)]) -> Result<F> {
        let point = self
            .vars
            .iter()
            .map(|v| {
                bindings
                    .iter()
                    .find(|(n, _)| n == v)
                    .map(|(_, x)| x.clone())
                    .ok_or_else(|| AlgebraError::UnboundVariable(v.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        self.evaluate(&point)
    }

    /// Applies a coefficient map into another domain (for example a ring
    /// homomorphism such as reduction modulo p).
    pub fn map_coeffs<G, C>(&self, domain: &G::Domain, f: C) -> Result<MultiPoly<G>>
    where
        G: Scalar,
        C: Fn(&F) -> Result<G>,
    {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let v = f(c)?;
            if !v.is_zero() {
                terms.insert(m.clone(), v);
            }
        }
        Ok(MultiPoly {
            vars: self.vars.clone(),
            domain: domain.clone(),
            terms,
        })
    }

    /// Coefficients with respect to `name`, lowest power first. Each
    /// coefficient keeps the full variable list (with `name` absent).
    pub fn coefficients_in(&self, name: &str) -> Result<Vec<Self>> {
        let index = self.require_var(name)?;
        let deg = self.degree_in(index) as usize;
        let mut out = vec![self.zero_like(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(index) as usize;
            let mut rest = m.clone();
            rest.exponents_mut()[index] = 0;
            out[e].insert(rest, c.clone());
        }
        Ok(out)
    }

    /// Splits off the leading coefficient: returns `(lc, self / lc)`.
    pub fn monic(&self) -> Option<(F, Self)> {
        let (_, lc) = self.leading_term()?;
        let inv = lc.inverse().expect("nonzero coefficient in a field");
        Some((lc.clone(), self.scale(&inv)))
    }

    /// Exact division: fails with `NotDivisible` unless `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let (a, b) = self.align(divisor)?;
        let (lm, lc) = b.leading_term().expect("nonzero divisor");
        let lc_inv = lc.inverse().expect("nonzero coefficient in a field");
        let mut rem = a.into_owned();
        let mut quot = rem.zero_like();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lm).ok_or(AlgebraError::NotDivisible)?;
            let qc = c.times(&lc_inv);
            for (bm, bc) in &b.terms {
                rem.add_term(bm.mul(&qm), bc.times(&qc).negate());
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }
}

impl MultiPoly<Rational> {
    /// Evaluates a rational polynomial at a point of any domain receiving ℚ.
    pub fn evaluate_in<G: FromRational>(&self, point: &[G], domain: &G::Domain) -> Result<G> {
        self.evaluate_with(point, domain, |c| G::from_rational(c, domain))
    }

    /// Image of the polynomial under ℚ → `domain`.
    pub fn embed<G: FromRational>(&self, domain: &G::Domain) -> Result<MultiPoly<G>> {
        self.map_coeffs(domain, |c| G::from_rational(c, domain))
    }

    /// Coefficient-wise reduction modulo a prime.
    pub fn reduce_mod_p(&self, prime: u64) -> Result<MultiPoly<Fp>> {
        crate::scalar::check_prime(prime)?;
        self.embed(&prime)
    }
}

impl<F: Scalar> PartialEq for MultiPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        match self.align(other) {
            Ok((a, b)) => a.terms == b.terms,
            Err(_) => false,
        }
    }
}

impl<F: Scalar> fmt::Debug for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.vars.join(","), self)
    }
}

/// Coefficient text suitable for a product: wrapped in parentheses when it is
/// itself a sum (quadratic-extension elements).
fn coeff_text<F: Scalar>(c: &F) -> (bool, String) {
    let s = c.to_string();
    let body = s.strip_prefix('-');
    let compound = s[1..].contains(['+', '-']) || s.contains("sqrt");
    match body {
        Some(rest) if !compound => (true, rest.to_string()),
        _ if compound => (false, format!("({s})")),
        _ => (false, s),
    }
}

impl<F: Scalar> fmt::Display for MultiPoly<F> {
    /// Human-readable infix form, highest term first, e.g. `-27*x^6 + 9*x*y^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let one = F::one(&self.domain);
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mut text) = coeff_text(c);
            let factors: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], e)
                    }
                })
                .collect();
            if !factors.is_empty() {
                let unit = *c == one || c.negate() == one;
                text = if unit {
                    factors.join("*")
                } else {
                    format!("{text}*{}", factors.join("*"))
                };
            }
            match (k, neg) {
                (0, true) => write!(f, "-{text}")?,
                (0, false) => write!(f, "{text}")?,
                (_, true) => write!(f, " - {text}")?,
                (_, false) => write!(f, " + {text}")?,
            }
        }
        Ok(())
    }
}

impl<F: Scalar> Add for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    /// Panics on a domain mismatch; use `checked_add` to handle it.
    fn add(self, rhs: Self) -> MultiPoly<F> {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl<F: Scalar> Sub for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn sub(self, rhs: Self) -> MultiPoly<F> {
        self.checked_sub(rhs).expect("polynomial subtraction")
    }
}

impl<F: Scalar> Mul for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn mul(self, rhs: Self) -> MultiPoly<F> {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}

impl<F: Scalar> Neg for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        self.negate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_polynomial;
    use crate::scalar::{ExtField, QuadExt};

    fn q(text: &str, vars: &[&str]) -> MultiPoly<Rational> {
        parse_polynomial(text, vars, &()).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let vars = ["x"];
        let p = &q("x + 1", &vars) * &q("x - 1", &vars);
        assert_eq!(p, q("x^2 - 1", &vars));
    }

    #[test]
    fn zeroth_power_is_one() {
        let p = q("3*x*y - y^7 + 2", &["x", "y"]);
        assert_eq!(p.pow(0), p.one_like());
        assert_eq!(p.zero_like().pow(0), p.one_like());
    }

    #[test]
    fn frobenius_in_characteristic_five() {
        let vars = ["x", "y"];
        let s = parse_polynomial::<Fp>("x + y", &vars, &5).unwrap();
        assert_eq!(s.pow(5), parse_polynomial("x^5 + y^5", &vars, &5).unwrap());
    }

    #[test]
    fn partial_derivatives() {
        let vars = ["x", "y"];
        assert_eq!(q("x^3*y", &vars).partial_derivative("x").unwrap(), q("3*x^2*y", &vars));
        assert!(q("17/3", &vars).partial_derivative("x").unwrap().is_zero());
        assert_eq!(
            q("x", &vars).partial_derivative("w"),
            Err(AlgebraError::UnknownVariable("w".into()))
        );
    }

    #[test]
    fn evaluation() {
        let p = q("x^2 + y", &["x", "y"]);
        let v = p
            .evaluate_named(&[("x", Rational::from(2)), ("y", Rational::from(3))])
            .unwrap();
        assert_eq!(v, Rational::from(7));
        assert_eq!(
            p.evaluate_named(&[("x", Rational::from(2))]),
            Err(AlgebraError::UnboundVariable("y".into()))
        );
    }

    #[test]
    fn reduction_mod_p() {
        let p = q("-27*x^6", &["x"]);
        let r = p.reduce_mod_p(5).unwrap();
        assert_eq!(r.coefficient(&[6]).value(), 3);
        let half = q("1/2", &["x"]).reduce_mod_p(5).unwrap();
        assert_eq!(half.constant_term().value(), 3);
        assert_eq!(
            q("x/5", &["x"]).reduce_mod_p(5),
            Err(AlgebraError::DenominatorNotUnit { prime: 5 })
        );
    }

    #[test]
    fn domain_mismatch_is_reported() {
        let a = parse_polynomial::<Fp>("x + 1", &["x"], &5).unwrap();
        let b = parse_polynomial::<Fp>("x + 1", &["x"], &7).unwrap();
        assert!(matches!(a.checked_add(&b), Err(AlgebraError::DomainMismatch { .. })));
        let c = parse_polynomial::<QuadExt>("x + sqrt(5)", &["x"], &5).unwrap();
        let d = parse_polynomial::<QuadExt>("x + sqrt(-1)", &["x"], &-1).unwrap();
        assert!(matches!(c.checked_mul(&d), Err(AlgebraError::DomainMismatch { .. })));
        let f1 = ExtField::new(5, 2).unwrap();
        let f2 = ExtField::new(5, 3).unwrap();
        let e1 = MultiPoly::constant(&["x"], f1.element(3));
        let e2 = MultiPoly::constant(&["x"], f2.element(3));
        assert!(e1.checked_sub(&e2).is_err());
    }

    #[test]
    fn alignment_by_name() {
        let a = q("x + 1", &["x"]);
        let b = q("y", &["y"]);
        let s = &a + &b;
        assert_eq!(s.vars(), &["x".to_string(), "y".to_string()]);
        assert_eq!(s, q("y + x + 1", &["y", "x"]));
    }

    #[test]
    fn exact_division() {
        let vars = ["x", "y"];
        let f = q("x^2 - y^2", &vars);
        assert_eq!(f.div_exact(&q("x - y", &vars)).unwrap(), q("x + y", &vars));
        assert_eq!(f.div_exact(&q("x - 2*y", &vars)), Err(AlgebraError::NotDivisible));
    }

    #[test]
    fn display_is_parseable() {
        let vars = ["x", "y", "z"];
        let p = q("-27*x^6 - 9459597312000*z^2*x^2 + 2/3*y - x*y*z + 5", &vars);
        assert_eq!(q(&p.to_string(), &vars), p);
        let r = parse_polynomial::<QuadExt>("(27-77/2*sqrt(-1))*x - sqrt(-1)*y + 1", &vars, &-1).unwrap();
        assert_eq!(parse_polynomial::<QuadExt>(&r.to_string(), &vars, &-1).unwrap(), r);
    }
}
