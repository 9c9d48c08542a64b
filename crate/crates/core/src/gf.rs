//! Finite fields `F_p` and `F_{p^m}`.
//!
//! An element of `F_{p^m} = F_p[t]/(g)` is a coefficient vector
//! `(a_0, .., a_{m-1})` over `F_p`. Everywhere in this crate it is passed
//! around as its canonical encoding `a_0 + a_1 p + .. + a_{m-1} p^{m-1}`, a
//! `u64` in `[0, q)`. The encoding fixes serialization and every
//! "lexicographic" order used by the exhaustive searches.
//!
//! Hot loops use the raw operations on [`Field`]. [`FieldElement`] is the
//! checked wrapper that carries its field and refuses cross-field arithmetic.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported field order. Keeps encoding products inside `u64`.
pub const MAX_ORDER: u64 = 1 << 32;

/// Orders up to this size get exp/log tables for extension-field products.
const TABLE_LIMIT: u64 = 1 << 20;

/// Serializable description of a field: `{"p": 2, "m": 3, "modulus": [1, 1, 0, 1]}`.
///
/// The modulus is listed in ascending degree and is present iff `m > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
}

impl FieldSpec {
    pub fn order(&self) -> Option<u64> {
        self.p.checked_pow(self.m)
    }
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct FieldInner {
    spec: FieldSpec,
    q: u64,
    tables: Option<Tables>,
}

/// A validated finite field. Cheap to clone; equality is by specification.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)?;
        if let Some(g) = &self.0.spec.modulus {
            write!(f, " mod {g:?}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut i = 3u64;
    while i * i <= n {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 2;
    }
    true
}

/// Splits `q = p^m` with `p` prime, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        // q itself is prime
        return Some((q, 1));
    }
    let (mut rest, mut m) = (q, 0u32);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2u64;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Dense polynomials over `F_p`, ascending coefficients, used only to
/// validate and apply the extension modulus.
mod fp {
    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        pow(a, p - 2, p)
    }

    pub fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
        let mut r = 1 % p;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    }

    /// Remainder of `a` modulo a nonzero `b`.
    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut r = trim(a.to_vec());
        let db = b.len() - 1;
        let lead_inv = inv(b[db], p);
        while r.len() > db {
            let top = r.len() - 1;
            let c = r[top] * lead_inv % p;
            let shift = top - db;
            for (i, &bi) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - c * bi % p) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn mul_mod(a: &[u64], b: &[u64], g: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % p;
            }
        }
        rem(&prod, g, p)
    }

    pub fn pow_mod(base: &[u64], mut e: u64, g: &[u64], p: u64) -> Vec<u64> {
        let mut r = vec![1u64];
        let mut b = rem(base, g, p);
        while e > 0 {
            if e & 1 == 1 {
                r = mul_mod(&r, &b, g, p);
            }
            b = mul_mod(&b, &b, g, p);
            e >>= 1;
        }
        r
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// Rabin-style test: `g` (monic, degree m) has no factor of degree
    /// `i <= m/2`, i.e. `gcd(x^{p^i} - x, g) = 1` for each such `i`.
    pub fn is_irreducible(g: &[u64], p: u64) -> bool {
        let m = g.len() - 1;
        if m <= 1 {
            return m == 1;
        }
        let x = vec![0u64, 1];
        let mut h = rem(&x, g, p);
        for _ in 1..=m / 2 {
            h = pow_mod(&h, p, g, p);
            let mut diff = h.clone();
            diff.resize(diff.len().max(2), 0);
            diff[1] = (diff[1] + p - 1) % p;
            let d = gcd(&trim(diff), g, p);
            if d.len() != 1 {
                return false;
            }
        }
        true
    }
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, None)
    }

    /// Validates `(p, m, modulus)` and builds the field.
    pub fn new(p: u64, m: u32, modulus: Option<&[u64]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidParameter("extension degree must be at least 1".into()));
        }
        let q = match p.checked_pow(m) {
            Some(q) if q <= MAX_ORDER => q,
            _ => return Err(Error::InvalidParameter(format!("field order {p}^{m} exceeds {MAX_ORDER}"))),
        };
        let modulus = match (m, modulus) {
            (1, None) => None,
            (1, Some(g)) => {
                // A degree-1 modulus adds nothing; accept only the trivial t.
                if g != [0, 1] {
                    return Err(Error::InvalidModulus("prime fields take no modulus (or exactly t)".into()));
                }
                None
            }
            (_, None) => {
                return Err(Error::InvalidModulus(format!("a degree-{m} modulus is required for m > 1")))
            }
            (_, Some(g)) => {
                if g.len() != m as usize + 1 {
                    return Err(Error::InvalidModulus(format!(
                        "modulus has degree {} but m = {m}",
                        g.len().saturating_sub(1)
                    )));
                }
                if let Some(&c) = g.iter().find(|&&c| c >= p) {
                    return Err(Error::InvalidModulus(format!("coefficient {c} not in [0, {p})")));
                }
                if g[m as usize] != 1 {
                    return Err(Error::InvalidModulus("modulus is not monic".into()));
                }
                if !fp::is_irreducible(g, p) {
                    return Err(Error::InvalidModulus(format!("modulus {g:?} is reducible over F_{p}")));
                }
                Some(g.to_vec())
            }
        };
        let spec = FieldSpec { p, m, modulus };
        let mut inner = FieldInner { spec, q, tables: None };
        if m > 1 && q <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(Field(Arc::new(inner)))
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Field> {
        Field::new(spec.p, spec.m, spec.modulus.as_deref())
    }

    /// `F_q` for a prime power `q`, using [`Field::default_modulus`].
    pub fn with_order(q: u64) -> Result<Field> {
        let (p, m) =
            prime_power(q).ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
        if m == 1 {
            return Field::prime(p);
        }
        let g = Field::default_modulus(p, m)?;
        Field::new(p, m, Some(&g))
    }

    /// The monic irreducible polynomial of degree `m` over `F_p` whose lower
    /// coefficients have the smallest canonical encoding.
    pub fn default_modulus(p: u64, m: u32) -> Result<Vec<u64>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let count = p
            .checked_pow(m)
            .filter(|&c| c <= MAX_ORDER)
            .ok_or_else(|| Error::InvalidParameter(format!("{p}^{m} is too large")))?;
        for low in 0..count {
            let mut g: Vec<u64> = (0..m).map(|i| low / p.pow(i) % p).collect();
            g.push(1);
            if fp::is_irreducible(&g, p) {
                return Ok(g);
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn characteristic(&self) -> u64 {
        self.0.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.0.spec.m
    }

    pub fn order(&self) -> u64 {
        self.0.q
    }

    pub fn contains(&self, a: u64) -> bool {
        a < self.0.q
    }

    /// Checks that `a` is a canonical encoding for this field.
    pub fn check(&self, a: u64) -> Result<u64> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::NotInField { value: a, q: self.0.q })
        }
    }

    /// Elements in increasing encoding order; `F_q^*` when `nonzero_only`.
    pub fn elements(&self, nonzero_only: bool) -> std::ops::Range<u64> {
        (nonzero_only as u64)..self.0.q
    }

    pub fn digits(&self, mut a: u64) -> Vec<u64> {
        let p = self.0.spec.p;
        (0..self.0.spec.m)
            .map(|_| {
                let d = a % p;
                a /= p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u64]) -> u64 {
        let p = self.0.spec.p;
        digits.iter().rev().fold(0, |acc, &d| acc * p + d % p)
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, n: i64) -> u64 {
        n.rem_euclid(self.0.spec.p as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let FieldSpec { p, m, .. } = self.0.spec;
        if m == 1 {
            let s = a + b;
            return if s >= p { s - p } else { s };
        }
        if p == 2 {
            return a ^ b;
        }
        let (mut a, mut b, mut place, mut out) = (a, b, 1u64, 0u64);
        for _ in 0..m {
            let s = (a % p + b % p) % p;
            out += s * place;
            place *= p;
            a /= p;
            b /= p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        let FieldSpec { p, m, .. } = self.0.spec;
        if m == 1 {
            return if a == 0 { 0 } else { p - a };
        }
        if p == 2 {
            return a;
        }
        let (mut a, mut place, mut out) = (a, 1u64, 0u64);
        for _ in 0..m {
            let d = a % p;
            out += ((p - d) % p) * place;
            place *= p;
            a /= p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let inner = &*self.0;
        if inner.spec.m == 1 {
            return a * b % inner.spec.p;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        match &inner.tables {
            Some(t) => {
                let n = inner.q - 1;
                let e = (t.log[a as usize] as u64 + t.log[b as usize] as u64) % n;
                t.exp[e as usize] as u64
            }
            None => mul_slow(inner, a, b),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let inner = &*self.0;
        if let Some(t) = &inner.tables {
            let n = inner.q - 1;
            let e = (n - t.log[a as usize] as u64) % n;
            return Some(t.exp[e as usize] as u64);
        }
        Some(self.pow(a, inner.q - 2))
    }

    pub fn div(&self, a: u64, b: u64) -> Option<u64> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        r
    }

    pub fn element(&self, value: u64) -> Result<FieldElement> {
        self.check(value)?;
        Ok(FieldElement { field: self.clone(), value })
    }

    /// Ordered elements as checked values (`enumerate_elements`).
    pub fn enumerate_elements(&self, nonzero_only: bool) -> Vec<FieldElement> {
        self.elements(nonzero_only).map(|value| FieldElement { field: self.clone(), value }).collect()
    }
}

fn mul_slow(inner: &FieldInner, a: u64, b: u64) -> u64 {
    let FieldSpec { p, m, ref modulus } = inner.spec;
    let g = modulus.as_ref().expect("extension field carries a modulus");
    let split = |mut x: u64| -> Vec<u64> {
        (0..m)
            .map(|_| {
                let d = x % p;
                x /= p;
                d
            })
            .collect()
    };
    let r = fp::mul_mod(&fp::trim(split(a)), &fp::trim(split(b)), g, p);
    r.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn build_tables(inner: &FieldInner) -> Tables {
    let q = inner.q;
    let n = q - 1;
    let factors = distinct_prime_factors(n);
    let slow_pow = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mul_slow(inner, r, b);
            }
            b = mul_slow(inner, b, b);
            e >>= 1;
        }
        r
    };
    let generator = (2..q)
        .find(|&g| factors.iter().all(|&r| slow_pow(g, n / r) != 1))
        .expect("multiplicative group is cyclic");
    let mut exp = vec![0u32; n as usize];
    let mut log = vec![0u32; q as usize];
    let mut x = 1u64;
    for (i, slot) in exp.iter_mut().enumerate() {
        *slot = x as u32;
        log[x as usize] = i as u32;
        x = mul_slow(inner, x, generator);
    }
    Tables { exp, log }
}

/// A field value that knows its field.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: u64,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.value, self.field)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Inv,
    Neg,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Canonical encoding.
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, value: u64) -> FieldElement {
        FieldElement { field: self.field.clone(), value }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        self.field.div(self.value, other.value).map(|v| self.with(v)).ok_or(Error::ZeroInverse)
    }

    pub fn neg(&self) -> FieldElement {
        self.with(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        self.field.inv(self.value).map(|v| self.with(v)).ok_or(Error::ZeroInverse)
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.with(self.field.pow(self.value, e))
    }

    /// Dispatches one of the basic operations; binary ones require `b`.
    pub fn apply(op: ArithOp, a: &FieldElement, b: Option<&FieldElement>) -> Result<FieldElement> {
        let rhs = || b.ok_or_else(|| Error::InvalidParameter(format!("{op:?} needs a second operand")));
        match op {
            ArithOp::Add => a.add(rhs()?),
            ArithOp::Sub => a.sub(rhs()?),
            ArithOp::Mul => a.mul(rhs()?),
            ArithOp::Div => a.div(rhs()?),
            ArithOp::Inv => a.inv(),
            ArithOp::Neg => Ok(a.neg()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f8() -> Field {
        Field::new(2, 3, Some(&[1, 1, 0, 1])).unwrap()
    }

    #[test]
    fn field_make_examples() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.order(), 5);
        assert!(f5.spec().modulus.is_none());
        assert_eq!(f8().order(), 8);
        // t^3 + t^2 + t + 1 vanishes at t = 1
        assert!(matches!(Field::new(2, 3, Some(&[1, 1, 1, 1])), Err(Error::InvalidModulus(_))));
    }

    #[test]
    fn field_make_errors() {
        assert!(matches!(Field::prime(6), Err(Error::NotPrime(6))));
        assert!(matches!(Field::new(2, 3, None), Err(Error::InvalidModulus(_))));
        assert!(matches!(Field::new(2, 3, Some(&[1, 1, 1])), Err(Error::InvalidModulus(_))));
        assert!(matches!(Field::new(3, 2, Some(&[1, 0, 2])), Err(Error::InvalidModulus(_))));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2 has no roots but is reducible
        assert!(matches!(Field::new(2, 4, Some(&[1, 0, 1, 0, 1])), Err(Error::InvalidModulus(_))));
    }

    #[test]
    fn default_moduli() {
        assert_eq!(Field::default_modulus(2, 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(Field::default_modulus(2, 3).unwrap(), vec![1, 1, 0, 1]);
        assert_eq!(Field::default_modulus(2, 4).unwrap(), vec![1, 1, 0, 0, 1]);
        assert_eq!(Field::default_modulus(3, 2).unwrap(), vec![1, 0, 1]);
        assert_eq!(Field::with_order(8).unwrap(), f8());
        assert!(Field::with_order(12).is_err());
    }

    #[test]
    fn arith_examples() {
        let f5 = Field::prime(5).unwrap();
        let e = |v| f5.element(v).unwrap();
        assert_eq!(e(3).mul(&e(4)).unwrap().value(), 2);
        assert_eq!(e(2).inv().unwrap().value(), 3);
        assert_eq!(FieldElement::apply(ArithOp::Neg, &e(1), None).unwrap().value(), 4);
        let f = f8();
        // t * t^2 = t^3 = t + 1
        assert_eq!(f.mul(2, 4), 3);
        assert!(matches!(e(0).inv(), Err(Error::ZeroInverse)));
    }

    #[test]
    fn cross_field_is_error() {
        let a = Field::prime(5).unwrap().element(1).unwrap();
        let b = Field::prime(7).unwrap().element(1).unwrap();
        assert!(matches!(a.add(&b), Err(Error::FieldMismatch)));
        assert!(matches!(Field::prime(5).unwrap().element(5), Err(Error::NotInField { .. })));
    }

    #[test]
    fn enumerate() {
        let f5 = Field::prime(5).unwrap();
        let vals = |nz| f5.enumerate_elements(nz).iter().map(|e| e.value()).collect::<Vec<_>>();
        assert_eq!(vals(true), vec![1, 2, 3, 4]);
        assert_eq!(vals(false), vec![0, 1, 2, 3, 4]);
        assert_eq!(f8().elements(true).collect::<Vec<_>>(), (1..8).collect::<Vec<_>>());
    }

    fn test_fields() -> Vec<Field> {
        vec![
            Field::prime(2).unwrap(),
            Field::prime(5).unwrap(),
            Field::prime(101).unwrap(),
            Field::with_order(4).unwrap(),
            f8(),
            Field::with_order(9).unwrap(),
            Field::with_order(25).unwrap(),
            Field::with_order(343).unwrap(),
        ]
    }

    #[test]
    fn sampled_axioms() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for f in test_fields() {
            for _ in 0..1000 {
                let q = f.order();
                let (a, b, c) = (rng.gen_range(0..q), rng.gen_range(0..q), rng.gen_range(0..q));
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.add(a, f.neg(a)), 0);
            }
        }
    }

    #[test]
    fn inverse_and_frobenius_exhaustive() {
        for f in test_fields() {
            let q = f.order();
            for a in f.elements(false) {
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "{f:?} a={a}");
                }
                assert_eq!(f.pow(a, q), a, "{f:?} a={a}");
            }
        }
    }

    #[test]
    fn table_and_slow_paths_agree() {
        let f = Field::with_order(27).unwrap();
        for a in f.elements(false) {
            for b in f.elements(false) {
                assert_eq!(f.mul(a, b), mul_slow(&f.0, a, b));
            }
        }
    }

    #[test]
    fn encoding_bijection() {
        let f = Field::with_order(81).unwrap();
        for a in f.elements(false) {
            let d = f.digits(a);
            assert!(d.iter().all(|&c| c < 3));
            assert_eq!(f.from_digits(&d), a);
        }
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(101), Some((101, 1)));
        assert_eq!(prime_power(169), Some((13, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn spec_json() {
        let s = serde_json::to_string(f8().spec()).unwrap();
        assert_eq!(s, r#"{"p":2,"m":3,"modulus":[1,1,0,1]}"#);
        let s5 = serde_json::to_string(Field::prime(5).unwrap().spec()).unwrap();
        assert_eq!(s5, r#"{"p":5,"m":1}"#);
    }
}
