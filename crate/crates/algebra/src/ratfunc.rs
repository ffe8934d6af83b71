//! Rational functions kept in factored form.

use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::poly::MultiPoly;
use crate::scalar::{FromRational, Rational, Scalar};

/// `coeff · Π num_i^e_i / Π den_j^f_j` with monic, non-constant factors.
///
/// Factors are not required to be irreducible. Identical factors are merged
/// and cancelled across numerator and denominator, and sums try to divide the
/// new numerator by each denominator factor, so the representation stays
/// small in practice without a polynomial gcd.
#[derive(Clone)]
pub struct RationalFunction<F: Scalar> {
    vars: Arc<[String]>,
    domain: F::Domain,
    coeff: F,
    num: Vec<(MultiPoly<F>, u32)>,
    den: Vec<(MultiPoly<F>, u32)>,
}

type Factors<F> = Vec<(MultiPoly<F>, u32)>;

fn merge_into<F: Scalar>(list: &mut Factors<F>, p: MultiPoly<F>, e: u32) {
    if e == 0 {
        return;
    }
    match list.iter_mut().find(|(q, _)| *q == p) {
        Some((_, k)) => *k += e,
        None => list.push((p, e)),
    }
}

fn product<F: Scalar>(one: MultiPoly<F>, factors: &[(MultiPoly<F>, u32)]) -> MultiPoly<F> {
    factors.iter().fold(one, |acc, (p, e)| &acc * &p.pow(*e))
}

impl<F: Scalar> RationalFunction<F> {
    pub fn zero(vars: &[&str], domain: &F::Domain) -> Self {
        Self::from_poly(MultiPoly::zero(vars, domain))
    }

    pub fn constant(vars: &[&str], c: F) -> Self {
        Self::from_poly(MultiPoly::constant(vars, c))
    }

    pub fn variable(vars: &[&str], name: &str, domain: &F::Domain) -> Result<Self> {
        Ok(Self::from_poly(MultiPoly::variable(vars, name, domain)?))
    }

    pub fn from_poly(p: MultiPoly<F>) -> Self {
        let vars = p.vars_arc().clone();
        let domain = p.domain().clone();
        match p.monic() {
            None => RationalFunction {
                vars,
                coeff: F::zero(&domain),
                domain,
                num: Vec::new(),
                den: Vec::new(),
            },
            Some((lc, m)) => {
                let num = if m.is_constant() { Vec::new() } else { vec![(m, 1)] };
                RationalFunction {
                    vars,
                    domain,
                    coeff: lc,
                    num,
                    den: Vec::new(),
                }
            }
        }
    }

    /// `num / den`, failing on a zero denominator.
    pub fn from_fraction(num: MultiPoly<F>, den: MultiPoly<F>) -> Result<Self> {
        Self::from_poly(num).checked_div(&Self::from_poly(den))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn domain(&self) -> &F::Domain {
        &self.domain
    }

    pub fn coeff(&self) -> &F {
        &self.coeff
    }

    pub fn numerator_factors(&self) -> &[(MultiPoly<F>, u32)] {
        &self.num
    }

    pub fn denominator_factors(&self) -> &[(MultiPoly<F>, u32)] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    /// Expanded numerator, including the scalar coefficient.
    pub fn numerator(&self) -> MultiPoly<F> {
        let c = MultiPoly::constant_in(self.vars.clone(), self.coeff.clone());
        product(c, &self.num)
    }

    /// Expanded (monic) denominator.
    pub fn denominator(&self) -> MultiPoly<F> {
        let one = MultiPoly::constant_in(self.vars.clone(), F::one(&self.domain));
        product(one, &self.den)
    }

    /// The polynomial this function equals, if its denominator is trivial.
    pub fn to_polynomial(&self) -> Option<MultiPoly<F>> {
        self.is_polynomial().then(|| self.numerator())
    }

    fn with_vars(&self, vars: &Arc<[String]>) -> Result<Self> {
        if self.vars == *vars {
            return Ok(self.clone());
        }
        let conv = |list: &Factors<F>| -> Result<Factors<F>> {
            list.iter().map(|(p, e)| Ok((p.with_vars(vars)?, *e))).collect()
        };
        Ok(RationalFunction {
            vars: vars.clone(),
            domain: self.domain.clone(),
            coeff: self.coeff.clone(),
            num: conv(&self.num)?,
            den: conv(&self.den)?,
        })
    }

    fn align(&self, other: &Self) -> Result<(Self, Self)> {
        if self.domain != other.domain {
            return Err(AlgebraError::DomainMismatch {
                left: format!("{:?}", self.domain),
                right: format!("{:?}", other.domain),
            });
        }
        if self.vars == other.vars {
            return Ok((self.clone(), other.clone()));
        }
        let mut union: Vec<String> = self.vars.to_vec();
        for v in other.vars.iter() {
            if !union.contains(v) {
                union.push(v.clone());
            }
        }
        let union: Arc<[String]> = union.into();
        Ok((self.with_vars(&union)?, other.with_vars(&union)?))
    }

    fn cancel(&mut self) {
        if self.coeff.is_zero() {
            self.num.clear();
            self.den.clear();
            return;
        }
        for (p, e) in self.num.iter_mut() {
            if let Some((_, f)) = self.den.iter_mut().find(|(q, _)| q == p) {
                let m = (*e).min(*f);
                *e -= m;
                *f -= m;
            }
        }
        self.num.retain(|(_, e)| *e > 0);
        self.den.retain(|(_, e)| *e > 0);
        // Exact division of a numerator factor by a denominator factor.
        let mut i = 0;
        while i < self.den.len() {
            let d = self.den[i].0.clone();
            let hit = self
                .num
                .iter()
                .position(|(p, _)| p.total_degree() > d.total_degree() && p.div_exact(&d).is_ok());
            match hit {
                Some(j) => {
                    let (p, e) = self.num.remove(j);
                    let q = p.div_exact(&d).expect("checked above");
                    let (lc, q) = q.monic().expect("nonzero quotient");
                    self.coeff = self.coeff.times(&lc);
                    if e > 1 {
                        merge_into(&mut self.num, p, e - 1);
                    }
                    if !q.is_constant() {
                        merge_into(&mut self.num, q, 1);
                    }
                    self.den[i].1 -= 1;
                    if self.den[i].1 == 0 {
                        self.den.remove(i);
                    }
                    for (p, e) in self.num.iter_mut() {
                        if let Some((_, f)) = self.den.iter_mut().find(|(q, _)| q == p) {
                            let m = (*e).min(*f);
                            *e -= m;
                            *f -= m;
                        }
                    }
                    self.num.retain(|(_, e)| *e > 0);
                    self.den.retain(|(_, e)| *e > 0);
                    i = 0;
                }
                None => i += 1,
            }
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let (mut a, b) = self.align(other)?;
        a.coeff = a.coeff.times(&b.coeff);
        for (p, e) in b.num {
            merge_into(&mut a.num, p, e);
        }
        for (p, e) in b.den {
            merge_into(&mut a.den, p, e);
        }
        a.cancel();
        Ok(a)
    }

    pub fn recip(&self) -> Result<Self> {
        let inv = self.coeff.inverse().ok_or(AlgebraError::DivisionByZero)?;
        Ok(RationalFunction {
            vars: self.vars.clone(),
            domain: self.domain.clone(),
            coeff: inv,
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.recip()?)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.align(other)?;
        if a.is_zero() {
            return Ok(b);
        }
        if b.is_zero() {
            return Ok(a);
        }
        // Least common denominator: union of factors at maximal exponent.
        let mut lcd: Factors<F> = a.den.clone();
        for (p, f) in &b.den {
            match lcd.iter_mut().find(|(q, _)| q == p) {
                Some((_, k)) => *k = (*k).max(*f),
                None => lcd.push((p.clone(), *f)),
            }
        }
        let cofactor = |own: &Factors<F>| -> Factors<F> {
            lcd.iter()
                .map(|(p, k)| {
                    let have = own.iter().find(|(q, _)| q == p).map_or(0, |(_, f)| *f);
                    (p.clone(), k - have)
                })
                .filter(|(_, e)| *e > 0)
                .collect()
        };
        let term = |x: &Self| product(x.numerator(), &cofactor(&x.den));
        let mut top = &term(&a) + &term(&b);
        let mut den = lcd;
        if top.is_zero() {
            return Ok(Self::from_poly(top));
        }
        for (p, f) in den.iter_mut() {
            while *f > 0 {
                match top.div_exact(p) {
                    Ok(q) => {
                        top = q;
                        *f -= 1;
                    }
                    Err(_) => break,
                }
            }
        }
        den.retain(|(_, f)| *f > 0);
        let mut out = Self::from_poly(top);
        out.den = den;
        Ok(out)
    }

    pub fn negate(&self) -> Self {
        let mut out = self.clone();
        out.coeff = out.coeff.negate();
        out
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.negate())
    }

    /// Integer power; negative exponents require a nonzero function.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let k = u32::try_from(e.unsigned_abs()).map_err(|_| AlgebraError::parse(0, "exponent too large"))?;
        let mut out = base.clone();
        out.coeff = base.coeff.pow(k);
        for (_, f) in out.num.iter_mut().chain(out.den.iter_mut()) {
            *f *= k;
        }
        out.num.retain(|(_, f)| *f > 0);
        out.den.retain(|(_, f)| *f > 0);
        Ok(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::from_poly(MultiPoly::zero_in(self.vars.clone(), &self.domain));
        }
        let mut out = self.clone();
        out.coeff = out.coeff.times(c);
        out
    }

    /// Partial derivative via the logarithmic derivative of the factored form.
    pub fn partial_derivative(&self, name: &str) -> Result<Self> {
        if !self.vars.iter().any(|v| v == name) {
            return Err(AlgebraError::UnknownVariable(name.to_string()));
        }
        let one = MultiPoly::constant_in(self.vars.clone(), F::one(&self.domain));
        let all: Vec<(&MultiPoly<F>, u32, bool)> = self
            .num
            .iter()
            .map(|(p, e)| (p, *e, true))
            .chain(self.den.iter().map(|(p, f)| (p, *f, false)))
            .collect();
        let mut top = one.zero_like();
        for (i, (p, e, upstairs)) in all.iter().enumerate() {
            let dp = p.partial_derivative(name)?;
            if dp.is_zero() {
                continue;
            }
            let others = all
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .fold(one.clone(), |acc, (_, (q, _, _))| &acc * q);
            let k = F::from_i64(*e as i64, &self.domain);
            let t = (&dp * &others).scale(&if *upstairs { k } else { k.negate() });
            top = &top + &t;
        }
        let mut out = Self::from_poly(top).scale(&self.coeff);
        let lowered = RationalFunction {
            vars: self.vars.clone(),
            domain: self.domain.clone(),
            coeff: F::one(&self.domain),
            num: self
                .num
                .iter()
                .map(|(p, e)| (p.clone(), e - 1))
                .filter(|(_, e)| *e > 0)
                .collect(),
            den: self.den.iter().map(|(p, f)| (p.clone(), f + 1)).collect(),
        };
        out = out.checked_mul(&lowered)?;
        Ok(out)
    }

    /// Evaluates with a coefficient map, naming the first denominator factor
    /// that vanishes.
    pub fn evaluate_with<G, C>(&self, point: &[G], domain: &G::Domain, coeff: C) -> Result<G>
    where
        G: Scalar,
        C: Fn(&F) -> Result<G> + Copy,
    {
        let mut den = G::one(domain);
        for (p, f) in &self.den {
            let v = p.evaluate_with(point, domain, coeff)?;
            if v.is_zero() {
                return Err(AlgebraError::DenominatorVanishes { factor: p.to_string() });
            }
            den = den.times(&v.pow(*f));
        }
        let mut num = coeff(&self.coeff)?;
        for (p, e) in &self.num {
            num = num.times(&p.evaluate_with(point, domain, coeff)?.pow(*e));
        }
        Ok(num.times(&den.inverse().expect("nonzero denominator")))
    }

    pub fn evaluate(&self, point: &[F]) -> Result<F> {
        self.evaluate_with(point, &self.domain, |c: &F| Ok(c.clone()))
    }

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

    /// Applies a coefficient map (a ring homomorphism) factor by factor. If
    /// the map lowers the degree of some factor, the function is rebuilt
    /// from its expanded numerator and denominator instead.
    pub fn map_coeffs<G, C>(&self, domain: &G::Domain, f: C) -> Result<RationalFunction<G>>
    where
        G: Scalar,
        C: Fn(&F) -> Result<G> + Copy,
    {
        let conv = |list: &Factors<F>| -> Result<Option<Factors<G>>> {
            let mut out = Vec::with_capacity(list.len());
            for (p, e) in list {
                let q = p.map_coeffs(domain, f)?;
                if q.total_degree() != p.total_degree() {
                    return Ok(None);
                }
                out.push((q, *e));
            }
            Ok(Some(out))
        };
        if let (Some(num), Some(den)) = (conv(&self.num)?, conv(&self.den)?) {
            let mapped = RationalFunction {
                vars: self.vars.clone(),
                domain: domain.clone(),
                coeff: f(&self.coeff)?,
                num,
                den,
            };
            return Ok(mapped.renormalized());
        }
        let n = RationalFunction::from_poly(self.numerator().map_coeffs(domain, f)?);
        let d = RationalFunction::from_poly(self.denominator().map_coeffs(domain, f)?);
        n.checked_div(&d)
    }

    /// Restores the invariants after a coefficient map: monic, non-constant
    /// factors, merged duplicates.
    fn renormalized(self) -> Self {
        let mut out = RationalFunction {
            coeff: self.coeff,
            vars: self.vars,
            domain: self.domain,
            num: Vec::new(),
            den: Vec::new(),
        };
        for (p, e) in self.num {
            let (lc, m) = p.monic().expect("nonzero factor");
            out.coeff = out.coeff.times(&lc.pow(e));
            if !m.is_constant() {
                merge_into(&mut out.num, m, e);
            }
        }
        for (p, f) in self.den {
            let (lc, m) = p.monic().expect("nonzero factor");
            out.coeff = out.coeff.times(&lc.pow(f).inverse().expect("nonzero"));
            if !m.is_constant() {
                merge_into(&mut out.den, m, f);
            }
        }
        out.cancel();
        out
    }
}

impl RationalFunction<Rational> {
    pub fn evaluate_in<G: FromRational>(&self, point: &[G], domain: &G::Domain) -> Result<G> {
        self.evaluate_with(point, domain, |c: &Rational| G::from_rational(c, domain))
    }
}

impl<F: Scalar> PartialEq for RationalFunction<F> {
    fn eq(&self, other: &Self) -> bool {
        self.checked_sub(other).map(|d| d.is_zero()).unwrap_or(false)
    }
}

impl<F: Scalar> fmt::Display for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let group = |list: &Factors<F>| -> String {
            list.iter()
                .map(|(p, e)| {
                    if *e == 1 {
                        format!("({p})")
                    } else {
                        format!("({p})^{e}")
                    }
                })
                .collect::<Vec<_>>()
                .join("*")
        };
        let c = self.coeff.to_string();
        let c = if c.contains(['+', '/']) || c[1..].contains('-') {
            format!("({c})")
        } else {
            c
        };
        if self.num.is_empty() {
            write!(f, "{c}")?;
        } else {
            write!(f, "{c}*{}", group(&self.num))?;
        }
        if !self.den.is_empty() {
            write!(f, "/({})", group(&self.den))?;
        }
        Ok(())
    }
}

impl<F: Scalar> fmt::Debug for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction[{}]({})", self.vars.join(","), self)
    }
}

/// An outer polynomial with its variables bound to rational functions,
/// held unexpanded.
///
/// Writing every binding over a common denominator `L` gives
/// `P(N_1/L, …, N_k/L) = Σ c_m Π N_i^m_i · L^(d − |m|) / L^d` with `d` the
/// total degree of `P`. The numerator can be evaluated pointwise without any
/// division, which is what the grid-based identity proofs need.
pub struct Composition<F: Scalar> {
    outer: MultiPoly<F>,
    numerators: Vec<MultiPoly<F>>,
    common: MultiPoly<F>,
    common_factors: Vec<(MultiPoly<F>, u32)>,
}

impl<F: Scalar> Composition<F> {
    /// Binds each variable of `outer` (in its own order) to an entry of
    /// `bindings`. All bindings must share a variable list.
    pub fn new(outer: &MultiPoly<F>, bindings: &[RationalFunction<F>]) -> Result<Self> {
        if bindings.len() != outer.vars().len() {
            return Err(AlgebraError::UnboundVariable(
                outer.vars().get(bindings.len()).cloned().unwrap_or_default(),
            ));
        }
        let first = bindings.first().ok_or(AlgebraError::ZeroPolynomial)?;
        let aligned: Vec<RationalFunction<F>> = bindings
            .iter()
            .map(|b| b.align(first).map(|(x, _)| x))
            .collect::<Result<_>>()?;
        let vars = aligned[0].vars.clone();
        let aligned: Vec<RationalFunction<F>> = aligned.iter().map(|b| b.with_vars(&vars)).collect::<Result<_>>()?;
        let mut lcd: Factors<F> = Vec::new();
        for b in &aligned {
            for (p, f) in &b.den {
                match lcd.iter_mut().find(|(q, _)| q == p) {
                    Some((_, k)) => *k = (*k).max(*f),
                    None => lcd.push((p.clone(), *f)),
                }
            }
        }
        let one = MultiPoly::constant_in(vars.clone(), F::one(&aligned[0].domain));
        let numerators = aligned
            .iter()
            .map(|b| {
                let extra: Factors<F> = lcd
                    .iter()
                    .map(|(p, k)| {
                        let have = b.den.iter().find(|(q, _)| q == p).map_or(0, |(_, f)| *f);
                        (p.clone(), k - have)
                    })
                    .collect();
                product(b.numerator(), &extra)
            })
            .collect();
        Ok(Composition {
            outer: outer.clone(),
            numerators,
            common: product(one, &lcd),
            common_factors: lcd,
        })
    }

    pub fn vars(&self) -> &[String] {
        self.common.vars()
    }

    /// Factors of the common denominator `L`.
    pub fn common_denominator(&self) -> &[(MultiPoly<F>, u32)] {
        &self.common_factors
    }

    fn outer_degree(&self) -> u32 {
        self.outer.total_degree().unwrap_or(0)
    }

    /// Upper bound on the degree of the composed numerator in variable `index`.
    pub fn degree_bound(&self, index: usize) -> u32 {
        let d = self.outer_degree();
        let ln = self.common.degree_in(index);
        let nd: Vec<u32> = self.numerators.iter().map(|n| n.degree_in(index)).collect();
        self.outer
            .terms()
            .map(|(m, _)| {
                let e = m.exponents();
                let s: u32 = e.iter().zip(&nd).map(|(a, b)| a * b).sum();
                s + (d - m.total_degree()) * ln
            })
            .max()
            .unwrap_or(0)
    }

    /// Value of the composed numerator `Σ c_m Π N_i^m_i · L^(d−|m|)` at a
    /// point, with a coefficient map into the evaluation domain.
    pub fn numerator_at<G, C>(&self, point: &[G], domain: &G::Domain, coeff: C) -> Result<G>
    where
        G: Scalar,
        C: Fn(&F) -> Result<G> + Copy,
    {
        let values: Vec<G> = self
            .numerators
            .iter()
            .map(|n| n.evaluate_with(point, domain, coeff))
            .collect::<Result<_>>()?;
        let l = self.common.evaluate_with(point, domain, coeff)?;
        self.combine(&values, &l, domain, coeff)
    }

    /// Inner numerators followed by the common denominator, in outer variable
    /// order. Their values at a point feed [`Composition::combine`].
    pub fn inner_polynomials(&self) -> impl Iterator<Item = &MultiPoly<F>> {
        self.numerators.iter().chain(std::iter::once(&self.common))
    }

    /// Homogenized outer polynomial at given inner numerator values and
    /// common denominator value.
    pub fn combine<G, C>(&self, values: &[G], common: &G, domain: &G::Domain, coeff: C) -> Result<G>
    where
        G: Scalar,
        C: Fn(&F) -> Result<G>,
    {
        let d = self.outer_degree();
        let mut lpow = Vec::with_capacity(d as usize + 1);
        lpow.push(G::one(domain));
        for k in 1..=d as usize {
            let next = lpow[k - 1].times(common);
            lpow.push(next);
        }
        let pows: Vec<Vec<G>> = values
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let top = self.outer.degree_in(i);
                let mut acc = vec![G::one(domain)];
                for k in 1..=top as usize {
                    let next = acc[k - 1].times(x);
                    acc.push(next);
                }
                acc
            })
            .collect();
        let mut acc = G::zero(domain);
        for (m, c) in self.outer.terms() {
            let mut t = coeff(c)?.times(&lpow[(d - m.total_degree()) as usize]);
            for (p, &e) in pows.iter().zip(m.exponents()) {
                if e > 0 {
                    t = t.times(&p[e as usize]);
                }
            }
            acc = acc.plus(&t);
        }
        Ok(acc)
    }

    /// Fully expanded composite as a rational function.
    pub fn expand(&self) -> Result<RationalFunction<F>> {
        let d = self.outer_degree();
        let mut top = self.common.zero_like();
        let lpows: Vec<MultiPoly<F>> = (0..=d).map(|k| self.common.pow(k)).collect();
        for (m, c) in self.outer.terms() {
            let mut t = lpows[(d - m.total_degree()) as usize].scale(c);
            for (x, &e) in self.numerators.iter().zip(m.exponents()) {
                if e > 0 {
                    t = &t * &x.pow(e);
                }
            }
            top = &top + &t;
        }
        let mut den = self.common_factors.clone();
        for (_, f) in den.iter_mut() {
            *f *= d;
        }
        den.retain(|(_, f)| *f > 0);
        let mut out = RationalFunction::from_poly(top);
        if !out.is_zero() {
            out.den = den;
            // Cancel what divides exactly.
            let mut top = out.numerator();
            for (p, f) in out.den.iter_mut() {
                while *f > 0 {
                    match top.div_exact(p) {
                        Ok(q) => {
                            top = q;
                            *f -= 1;
                        }
                        Err(_) => break,
                    }
                }
            }
            let den: Factors<F> = out.den.into_iter().filter(|(_, f)| *f > 0).collect();
            out = RationalFunction::from_poly(top);
            out.den = den;
        }
        Ok(out)
    }
}

impl<F: Scalar> RationalFunction<F> {
    /// Substitutes `bindings` (in the order of `self.vars()`) factor by
    /// factor, so the factored shape of `self` carries over to the result.
    pub fn compose(&self, bindings: &[RationalFunction<F>]) -> Result<RationalFunction<F>> {
        let first = bindings.first().ok_or(AlgebraError::ZeroPolynomial)?;
        let constant = |c: F| -> RationalFunction<F> {
            RationalFunction::from_poly(MultiPoly::constant_in(first.vars.clone(), c))
        };
        let mut out = constant(self.coeff.clone());
        for (p, e) in &self.num {
            let value = Composition::new(p, bindings)?.expand()?;
            out = out.checked_mul(&value.pow(*e as i64)?)?;
        }
        for (p, f) in &self.den {
            let value = Composition::new(p, bindings)?.expand()?;
            out = out.checked_div(&value.pow(*f as i64)?)?;
        }
        Ok(out)
    }
}

/// Substitutes rational functions for the named variables of `p` and expands.
/// Every variable of `p` must be bound.
pub fn substitute<F: Scalar>(
    p: &MultiPoly<F>,
    bindings: &[(&str, RationalFunction<F>)],
) -> Result<RationalFunction<F>> {
    Composition::from_named(p, bindings)?.expand()
}

impl<F: Scalar> Composition<F> {
    /// Like `new`, with bindings given by variable name.
    pub fn from_named(outer: &MultiPoly<F>, bindings: &[(&str, RationalFunction<F>)]) -> Result<Self> {
        let ordered = outer
            .vars()
            .iter()
            .map(|v| {
                bindings
                    .iter()
                    .find(|(n, _)| n == v)
                    .map(|(_, r)| r.clone())
                    .ok_or_else(|| AlgebraError::UnboundVariable(v.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(outer, &ordered)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_rational_function;

    fn rf(text: &str) -> RationalFunction<Rational> {
        parse_rational_function(text, &["u", "v"], &()).unwrap()
    }

    #[test]
    fn sums_cancel_common_factors() {
        let a = rf("1/(u - v)");
        let b = rf("-v/(u*(u - v))");
        let s = a.checked_add(&b).unwrap();
        assert_eq!(s, rf("1/u"));
        assert_eq!(s.denominator_factors().len(), 1);
    }

    #[test]
    fn quotient_rule() {
        let f = rf("u^2/(v - u)^3");
        let d = f.partial_derivative("u").unwrap();
        let expected = rf("(2*u*(v - u) + 3*u^2)/(v - u)^4");
        assert_eq!(d, expected);
    }

    #[test]
    fn vanishing_denominator_is_named() {
        let f = rf("1/(u - v)");
        let err = f.evaluate(&[Rational::from(2), Rational::from(2)]).unwrap_err();
        assert_eq!(err, AlgebraError::DenominatorVanishes { factor: "u - v".into() });
    }

    #[test]
    fn substitution_examples() {
        let x2 = crate::expr::parse_polynomial::<Rational>("x^2", &["x"], &()).unwrap();
        assert_eq!(substitute(&x2, &[("x", rf("u/v"))]).unwrap(), rf("u^2/v^2"));
        let s = crate::expr::parse_polynomial::<Rational>("x + y", &["x", "y"], &()).unwrap();
        let f = rf("(u + 1)/(v - 3)");
        assert!(substitute(&s, &[("x", f.clone()), ("y", f.negate())])
            .unwrap()
            .is_zero());
        assert_eq!(
            substitute(&s, &[("x", f)]).unwrap_err(),
            AlgebraError::UnboundVariable("y".into())
        );
    }

    #[test]
    fn rational_composition() {
        let outer = parse_rational_function::<Rational>("x^2/(x - y)", &["x", "y"], &()).unwrap();
        let got = outer.compose(&[rf("u + v"), rf("1/v")]).unwrap();
        assert_eq!(got, rf("(u + v)^2*v/((u + v)*v - 1)"));
    }

    #[test]
    fn composition_matches_pointwise_substitution() {
        let outer = crate::expr::parse_polynomial::<Rational>("x^2 - y + 3", &["x", "y"], &()).unwrap();
        let bx = rf("u/(v + 1)");
        let by = rf("v^2/u");
        let comp = Composition::new(&outer, &[bx.clone(), by.clone()]).unwrap();
        let expanded = comp.expand().unwrap();
        let pt = [Rational::frac(3, 2), Rational::frac(-5, 7)];
        let direct = {
            let x = bx.evaluate(&pt).unwrap();
            let y = by.evaluate(&pt).unwrap();
            outer.evaluate(&[x, y]).unwrap()
        };
        assert_eq!(expanded.evaluate(&pt).unwrap(), direct);
        let l = comp
            .common_denominator()
            .iter()
            .fold(Rational::from(1), |acc, (p, f)| acc * p.evaluate(&pt).unwrap().pow(*f));
        let numer = comp.numerator_at(&pt, &(), |c| Ok(c.clone())).unwrap();
        assert_eq!(numer, direct * l.pow(2));
        assert!(comp.degree_bound(0) >= expanded.numerator().degree_in(0));
    }
}
