//! Univariate polynomials over a [`Field`].

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Field, FieldSpec};

/// Dense polynomial, coefficients ascending, no trailing zeros.
///
/// The zero polynomial has degree `None`, which orders below every
/// `Some(d)`, so `p.degree() <= Some(k - 1)` is the codeword test.
#[derive(Clone, PartialEq, Eq)]
pub struct UPoly {
    field: Field,
    coeffs: Vec<u64>,
}

/// `{"field": FieldSpec, "coeffs": [c0, c1, ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UPolyJson {
    pub field: FieldSpec,
    pub coeffs: Vec<u64>,
}

impl UPoly {
    pub fn new(field: &Field, mut coeffs: Vec<u64>) -> Result<UPoly> {
        for &c in &coeffs {
            field.check(c)?;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ok(UPoly { field: field.clone(), coeffs })
    }

    /// Builds from coefficients already known to be valid encodings.
    pub(crate) fn from_raw(field: &Field, mut coeffs: Vec<u64>) -> UPoly {
        debug_assert!(coeffs.iter().all(|&c| field.contains(c)));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UPoly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> UPoly {
        UPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn constant(field: &Field, c: u64) -> Result<UPoly> {
        UPoly::new(field, vec![c])
    }

    /// `c * x^degree`
    pub fn monomial(field: &Field, c: u64, degree: usize) -> Result<UPoly> {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        UPoly::new(field, coeffs)
    }

    /// `(x - r_1)(x - r_2)...`
    pub fn from_roots(field: &Field, roots: &[u64]) -> Result<UPoly> {
        let mut coeffs = vec![1u64];
        for &r in roots {
            field.check(r)?;
            let nr = field.neg(r);
            let mut next = vec![0u64; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] = field.add(next[i + 1], c);
                next[i] = field.add(next[i], field.mul(c, nr));
            }
            coeffs = next;
        }
        Ok(UPoly::from_raw(field, coeffs))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn same_field(&self, other: &UPoly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &UPoly) -> Result<UPoly> {
        self.same_field(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Ok(UPoly::from_raw(f, coeffs))
    }

    pub fn neg(&self) -> UPoly {
        let coeffs = self.coeffs.iter().map(|&c| self.field.neg(c)).collect();
        UPoly::from_raw(&self.field, coeffs)
    }

    pub fn sub(&self, other: &UPoly) -> Result<UPoly> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u64) -> UPoly {
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        UPoly::from_raw(&self.field, coeffs)
    }

    pub fn mul(&self, other: &UPoly) -> Result<UPoly> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(UPoly::zero(&self.field));
        }
        let f = &self.field;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(UPoly::from_raw(f, out))
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &UPoly) -> Result<(UPoly, UPoly)> {
        self.same_field(divisor)?;
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.field;
        let lead_inv = f.inv(divisor.leading()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((UPoly::zero(f), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - db];
        for top in (db..rem.len()).rev() {
            let c = f.mul(rem[top], lead_inv);
            if c == 0 {
                continue;
            }
            let shift = top - db;
            quot[shift] = c;
            for (i, &b) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = f.sub(rem[shift + i], f.mul(c, b));
            }
        }
        rem.truncate(db);
        Ok((UPoly::from_raw(f, quot), UPoly::from_raw(f, rem)))
    }

    /// Horner evaluation at an encoded point.
    pub fn eval(&self, x: u64) -> u64 {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Lagrange interpolation through `(x_i, y_i)`; the result has degree
    /// below the number of points.
    pub fn interpolate(field: &Field, points: &[(u64, u64)]) -> Result<UPoly> {
        for (i, &(x, y)) in points.iter().enumerate() {
            field.check(x)?;
            field.check(y)?;
            if points[..i].iter().any(|&(xj, _)| xj == x) {
                return Err(Error::RepeatedNode(x));
            }
        }
        let f = field;
        let n = points.len();
        let xs: Vec<u64> = points.iter().map(|p| p.0).collect();
        let master = UPoly::from_roots(f, &xs)?;
        let mut acc = vec![0u64; n];
        for &(xi, yi) in points {
            if yi == 0 {
                continue;
            }
            // basis numerator: master / (x - xi), by synthetic division
            let mut basis = vec![0u64; n];
            let mut carry = 0u64;
            for j in (0..n).rev() {
                carry = f.add(master.coeff(j + 1), f.mul(carry, xi));
                basis[j] = carry;
            }
            let denom = xs.iter().filter(|&&xj| xj != xi).fold(1u64, |d, &xj| f.mul(d, f.sub(xi, xj)));
            let scale = f.mul(yi, f.inv(denom).expect("distinct nodes"));
            for (a, b) in acc.iter_mut().zip(&basis) {
                *a = f.add(*a, f.mul(*b, scale));
            }
        }
        Ok(UPoly::from_raw(f, acc))
    }

    /// Members of `set` at which `self` vanishes, in the order given.
    pub fn roots_in_set(&self, set: &[u64]) -> Result<Vec<u64>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        for &s in set {
            self.field.check(s)?;
        }
        Ok(set.iter().copied().filter(|&s| self.eval(s) == 0).collect())
    }

    /// Order by canonical encoding `sum c_i q^i`.
    pub fn cmp_encoding(&self, other: &UPoly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }

    /// Parses `"x^3 + 2x + 1"`, `"2*x^2 - x"` or a JSON coefficient list
    /// `"[1, 0, 2]"`. Coefficients are canonical encodings in `[0, q)`.
    pub fn parse(field: &Field, text: &str) -> Result<UPoly> {
        let text = text.trim();
        if text.starts_with('[') {
            let coeffs: Vec<u64> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
            return UPoly::new(field, coeffs);
        }
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && !(i > 0 && current.ends_with('^')) {
                if i > 0 {
                    terms.push((negative, std::mem::take(&mut current)));
                }
                negative = ch == '-';
            } else {
                current.push(ch);
            }
        }
        terms.push((negative, current));

        let mut coeffs: Vec<u64> = Vec::new();
        for (negative, term) in terms {
            let (c, e) = parse_term(field, &term)?;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, 0);
            }
            let c = if negative { field.neg(c) } else { c };
            coeffs[e] = field.add(coeffs[e], c);
        }
        Ok(UPoly::from_raw(field, coeffs))
    }

    pub fn to_json(&self) -> UPolyJson {
        UPolyJson { field: self.field.spec().clone(), coeffs: self.coeffs.clone() }
    }

    pub fn from_json(json: &UPolyJson) -> Result<UPoly> {
        UPoly::new(&Field::from_spec(&json.field)?, json.coeffs.clone())
    }
}

fn parse_term(field: &Field, term: &str) -> Result<(u64, usize)> {
    let bad = || Error::Parse(format!("malformed term {term:?}"));
    if term.is_empty() {
        return Err(bad());
    }
    let (coef_part, var_part) = match term.find('x') {
        Some(pos) => (&term[..pos], Some(&term[pos + 1..])),
        None => (term, None),
    };
    let coef_part = coef_part.strip_suffix('*').unwrap_or(coef_part);
    let c = if coef_part.is_empty() {
        if var_part.is_none() {
            return Err(bad());
        }
        1
    } else {
        let c: u64 = coef_part.parse().map_err(|_| bad())?;
        field.check(c)?
    };
    let e = match var_part {
        None => 0,
        Some("") => 1,
        Some(rest) => {
            let digits = rest.strip_prefix('^').ok_or_else(bad)?;
            digits.parse().map_err(|_| bad())?
        }
    };
    Ok((c, e))
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {:?}", self, self.field)
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (c, e) {
                (_, 0) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "x^{e}")?,
                (_, 1) => write!(f, "{c}x")?,
                _ => write!(f, "{c}x^{e}")?,
            }
        }
        Ok(())
    }
}
