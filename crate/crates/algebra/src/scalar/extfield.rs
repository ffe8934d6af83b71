use std::fmt;
use std::sync::Arc;

use super::{check_prime, Fp, FromRational, Rational, Scalar};
use crate::error::{AlgebraError, Result};

const MAX_DEGREE: usize = 8;

/// Univariate polynomial over GF(p), coefficients ascending, no trailing zeros.
type UPoly = Vec<u64>;

fn trim(mut a: UPoly) -> UPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    Fp::from_u64(a, p)
        .inverse()
        .expect("nonzero residue is invertible")
        .value()
}

fn upoly_sub(a: &[u64], b: &[u64], p: u64) -> UPoly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

fn upoly_mul(a: &[u64], b: &[u64], p: u64) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

/// Returns (quotient, remainder).
fn upoly_divrem(a: &[u64], b: &[u64], p: u64) -> (UPoly, UPoly) {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = inv_mod(b[db], p);
    let mut q = vec![0u64; r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r[r.len() - 1] * lead_inv % p;
        q[shift] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[shift + j] = (r[shift + j] + p - c * bj % p) % p;
        }
        r = trim(r);
    }
    (trim(q), r)
}

fn upoly_gcd(a: &[u64], b: &[u64], p: u64) -> UPoly {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let (_, r) = upoly_divrem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

fn upoly_powmod(base: &[u64], mut exp: u64, modulus: &[u64], p: u64) -> UPoly {
    let mut acc: UPoly = vec![1];
    let mut b = upoly_divrem(base, modulus, p).1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = upoly_divrem(&upoly_mul(&acc, &b, p), modulus, p).1;
        }
        exp >>= 1;
        if exp > 0 {
            b = upoly_divrem(&upoly_mul(&b, &b, p), modulus, p).1;
        }
    }
    acc
}

/// Rabin's irreducibility test for a monic polynomial of degree k.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = f.len() - 1;
    let t: UPoly = vec![0, 1];
    // t^(p^j) mod f for j = 0..=k
    let mut frob = vec![upoly_divrem(&t, f, p).1];
    for _ in 0..k {
        let next = upoly_powmod(frob.last().expect("nonempty"), p, f, p);
        frob.push(next);
    }
    if !upoly_sub(&frob[k], &frob[0], p).is_empty() {
        return false;
    }
    let mut n = k;
    let mut q = 2;
    let mut prime_divisors = Vec::new();
    while n > 1 {
        if n % q == 0 {
            prime_divisors.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    prime_divisors.into_iter().all(|q| {
        let g = upoly_gcd(&upoly_sub(&frob[k / q], &frob[0], p), f, p);
        g.len() == 1
    })
}

/// The finite field GF(p^k) = GF(p)[t]/(m(t)) for a fixed monic irreducible m.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtField {
    p: u64,
    k: usize,
    modulus: Vec<u64>,
}

impl ExtField {
    /// Builds GF(p^k) using the lexicographically first monic irreducible
    /// polynomial of degree k.
    pub fn new(p: u64, k: usize) -> Result<Arc<ExtField>> {
        check_prime(p)?;
        if k == 0 || k > MAX_DEGREE {
            return Err(AlgebraError::DegreeTooSmall { required: 1, found: k });
        }
        let mut low = vec![0u64; k];
        loop {
            let mut candidate = low.clone();
            candidate.push(1);
            if k == 1 || (candidate[0] != 0 && is_irreducible(&candidate, p)) {
                return Ok(Arc::new(ExtField {
                    p,
                    k,
                    modulus: candidate,
                }));
            }
            // Odometer increment over the low coefficients.
            let mut i = 0;
            loop {
                low[i] += 1;
                if low[i] < p {
                    break;
                }
                low[i] = 0;
                i += 1;
                if i == k {
                    unreachable!("irreducible polynomials of every degree exist");
                }
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Number of elements, saturating at `u64::MAX`.
    pub fn size(&self) -> u64 {
        (0..self.k).fold(1u64, |acc, _| acc.saturating_mul(self.p))
    }

    /// Element whose base-p digits (lowest first) are the coefficients.
    pub fn element(self: &Arc<Self>, mut index: u64) -> GfExt {
        let mut c = [0u32; MAX_DEGREE];
        for slot in c.iter_mut().take(self.k) {
            *slot = (index % self.p) as u32;
            index /= self.p;
        }
        GfExt {
            c,
            field: Arc::clone(self),
        }
    }

    pub fn embed(self: &Arc<Self>, x: &Fp) -> GfExt {
        assert_eq!(x.modulus(), self.p, "base field mismatch");
        self.element(x.value())
    }
}

impl fmt::Debug for ExtField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.p, self.k, self.modulus)
    }
}

/// Element of GF(p^k), stored as coefficients of a polynomial of degree < k.
#[derive(Clone)]
pub struct GfExt {
    c: [u32; MAX_DEGREE],
    field: Arc<ExtField>,
}

impl GfExt {
    pub fn coefficients(&self) -> &[u32] {
        &self.c[..self.field.k]
    }

    pub fn field(&self) -> &Arc<ExtField> {
        &self.field
    }

    /// True when the element lies in the prime subfield.
    pub fn is_base(&self) -> bool {
        self.c[1..self.field.k].iter().all(|&x| x == 0)
    }

    fn check_same(&self, rhs: &GfExt) {
        assert!(
            Arc::ptr_eq(&self.field, &rhs.field) || self.field == rhs.field,
            "elements of {:?} and {:?} cannot be combined",
            self.field,
            rhs.field
        );
    }

    fn with(&self, c: [u32; MAX_DEGREE]) -> GfExt {
        GfExt {
            c,
            field: Arc::clone(&self.field),
        }
    }
}

impl PartialEq for GfExt {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c && self.field == other.field
    }
}

impl Scalar for GfExt {
    type Domain = Arc<ExtField>;

    fn domain(&self) -> Arc<ExtField> {
        Arc::clone(&self.field)
    }
    fn zero(field: &Arc<ExtField>) -> Self {
        field.element(0)
    }
    fn one(field: &Arc<ExtField>) -> Self {
        field.element(1)
    }
    fn from_i64(n: i64, field: &Arc<ExtField>) -> Self {
        field.element(n.rem_euclid(field.p as i64) as u64)
    }
    fn characteristic(field: &Arc<ExtField>) -> u64 {
        field.p
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        let p = self.field.p;
        let mut c = [0u32; MAX_DEGREE];
        for (ci, (a, b)) in c.iter_mut().zip(self.c.iter().zip(&rhs.c)).take(self.field.k) {
            *ci = ((*a as u64 + *b as u64) % p) as u32;
        }
        self.with(c)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        let p = self.field.p;
        let mut c = [0u32; MAX_DEGREE];
        for (ci, (a, b)) in c.iter_mut().zip(self.c.iter().zip(&rhs.c)).take(self.field.k) {
            *ci = ((*a as u64 + p - *b as u64) % p) as u32;
        }
        self.with(c)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        let (p, k) = (self.field.p, self.field.k);
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..k {
            if self.c[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + self.c[i] as u64 * rhs.c[j] as u64) % p;
            }
        }
        let m = &self.field.modulus;
        for i in (k..2 * k - 1).rev() {
            let t = prod[i];
            if t == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, mj) in m.iter().enumerate().take(k) {
                let idx = i - k + j;
                prod[idx] = (prod[idx] + p - t * mj % p) % p;
            }
        }
        let mut c = [0u32; MAX_DEGREE];
        for i in 0..k {
            c[i] = prod[i] as u32;
        }
        self.with(c)
    }
    fn negate(&self) -> Self {
        let p = self.field.p;
        let mut c = [0u32; MAX_DEGREE];
        for (ci, a) in c.iter_mut().zip(&self.c).take(self.field.k) {
            *ci = ((p - *a as u64) % p) as u32;
        }
        self.with(c)
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let p = self.field.p;
        // Extended Euclid in GF(p)[t] against the modulus.
        let a = trim(self.coefficients().iter().map(|&x| x as u64).collect());
        let (mut r0, mut r1) = (self.field.modulus.clone(), a);
        let (mut s0, mut s1): (UPoly, UPoly) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = upoly_divrem(&r0, &r1, p);
            let s = upoly_sub(&s0, &upoly_mul(&q, &s1, p), p);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 is a nonzero constant because the modulus is irreducible.
        let scale = inv_mod(r0[0], p);
        let mut c = [0u32; MAX_DEGREE];
        for (i, &x) in s0.iter().enumerate() {
            c[i] = (x * scale % p) as u32;
        }
        Some(self.with(c))
    }
    /// Accepts `[c0 c1 ... c(k-1)]` or a plain rational (mapped into the prime field).
    fn parse(text: &str, field: &Arc<ExtField>) -> Result<Self> {
        let t = text.trim();
        if let Some(inner) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let parts: Vec<&str> = inner.split_whitespace().collect();
            if parts.len() != field.k {
                return Err(AlgebraError::parse(0, format!("expected {} coefficients", field.k)));
            }
            let mut c = [0u32; MAX_DEGREE];
            for (i, part) in parts.iter().enumerate() {
                let v: u64 = part
                    .parse()
                    .map_err(|_| AlgebraError::parse(0, format!("bad coefficient `{part}`")))?;
                c[i] = (v % field.p) as u32;
            }
            return Ok(GfExt {
                c,
                field: Arc::clone(field),
            });
        }
        let q: Rational = t.parse()?;
        GfExt::from_rational(&q, field)
    }
}

impl FromRational for GfExt {
    fn from_rational(q: &Rational, field: &Arc<ExtField>) -> Result<Self> {
        Ok(field.embed(&Fp::from_rational(q, &field.p)?))
    }
}

impl fmt::Display for GfExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coefficients().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for GfExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in GF({}^{})", self.field.p, self.field.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf625_is_a_field() {
        let field = ExtField::new(5, 4).unwrap();
        assert_eq!(field.size(), 625);
        for i in 1..625 {
            let a = field.element(i);
            assert!(a.times(&a.inverse().unwrap()).is_one(), "index {i}");
        }
    }

    #[test]
    fn multiplicative_group_order() {
        // a^(q-1) = 1 for all nonzero a, and the Frobenius fixes exactly GF(p).
        let field = ExtField::new(5, 3).unwrap();
        let q = field.size() as u32;
        for i in 1..field.size() {
            let a = field.element(i);
            assert!(a.pow(q - 1).is_one());
            assert_eq!(a.pow(5) == a, a.is_base());
        }
    }

    #[test]
    fn irreducibility_test_on_known_cases() {
        // t^2 + 1 is reducible over GF(5) (2^2 = -1), t^2 + 2 is irreducible.
        assert!(!is_irreducible(&[1, 0, 1], 5));
        assert!(is_irreducible(&[2, 0, 1], 5));
        // (t^2 + 2)^2 has no roots yet is reducible.
        let sq = upoly_mul(&[2, 0, 1], &[2, 0, 1], 5);
        assert!(!is_irreducible(&sq, 5));
    }

    #[test]
    fn parse_display_round_trip() {
        let field = ExtField::new(7, 2).unwrap();
        let a = field.element(23);
        assert_eq!(GfExt::parse(&a.to_string(), &field).unwrap(), a);
        assert_eq!(GfExt::parse("1/2", &field).unwrap(), field.element(4));
    }
}
