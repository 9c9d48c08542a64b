//! Point-count bounds and the exact margin they give for `(q, k, d)`.
//!
//! Lower bound for an absolutely irreducible hypersurface of degree `d` in
//! `F_q^n`:
//!
//! ```text
//! q^{n-1} - (d-1)(d-2) q^{n-3/2} - 5 d^{13/3} q^{n-2}
//! ```
//!
//! Upper bound for the common zeros of two coprime polynomials of degree at
//! most `D` in `n` variables: `2 n D^3 q^{n-2}`.
//!
//! The margin for a tail of degree `k + d` and code dimension `k` is the
//! first bound minus the second with `n = k + 1` and `D = max(d, deg)`,
//! where `deg` is the degree of `prod x_i * prod_{i<j} (x_i - x_j)`.
//!
//! Fractional powers are never evaluated in floating point. Each subtracted
//! term is rounded up through an exact integer root, and the main term is an
//! integer, so a positive margin is a proof, not a float artifact.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::comb::{checked_pow, partitioned};
use crate::error::{check_budget, Error, Result};
use crate::gf::prime_power;
use crate::mpoly::MPoly;

/// Cap on `q^vars` for [`exact_point_count`].
pub const COUNT_BUDGET: u128 = 100_000_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Distinctness-product degree `(k^2 + k + 2) / 2`, as printed.
    Published,
    /// Distinctness-product degree `(k + 1)(k + 2) / 2`.
    #[default]
    Corrected,
}

impl Variant {
    pub fn distinctness_degree(self, k: u64) -> u64 {
        match self {
            Variant::Published => (k * k + k + 2) / 2,
            Variant::Corrected => (k + 1) * (k + 2) / 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundTerms {
    /// `q^{n-1}`, exact.
    pub main: i128,
    /// `ceil((d-1)(d-2) q^{n-3/2})`.
    pub weil: i128,
    /// `ceil(5 d^{13/3} q^{n-2})`.
    pub degree_power: i128,
    /// `2 n D^3 q^{n-2}`, zero when not part of the bound.
    pub common_zero: i128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub q: u64,
    pub k: u64,
    pub d: u64,
    pub variant: Variant,
    /// `max(d, distinctness degree)`.
    pub common_degree: u64,
    pub terms: BoundTerms,
    pub margin: i128,
    pub applies: bool,
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

/// Smallest integer `r` with `r^b >= x`.
fn ceil_root(x: &BigUint, b: u32) -> BigUint {
    let r = x.nth_root(b);
    if &r.pow(b) < x {
        r + BigUint::one()
    } else {
        r
    }
}

fn to_i128(x: &BigUint) -> Result<i128> {
    x.to_i128().ok_or_else(|| Error::InvalidParameter(format!("bound term {x} exceeds 128 bits")))
}

fn check_prime_power(q: u64) -> Result<()> {
    prime_power(q).map(|_| ()).ok_or_else(|| Error::InvalidParameter(format!("q = {q} is not a prime power")))
}

fn lower_terms(q: u64, n: u64, d: u64) -> Result<(i128, i128, i128)> {
    check_prime_power(q)?;
    if n < 2 || d < 1 {
        return Err(Error::InvalidParameter(format!("need n >= 2 and d >= 1, got n = {n}, d = {d}")));
    }
    let exp = |e: u64| u32::try_from(e).map_err(|_| Error::InvalidParameter("exponent too large".into()));
    let main = big(q).pow(exp(n - 1)?);
    // (d-1)(d-2) q^{n-3/2} = sqrt(c^2 q^{2n-3})
    let c = big((d - 1) * d.saturating_sub(2));
    let weil = ceil_root(&(&c * &c * big(q).pow(exp(2 * n - 3)?)), 2);
    // 5 d^{13/3} q^{n-2} = cbrt(125 d^13 q^{3(n-2)})
    let degree_power = ceil_root(&(big(125) * big(d).pow(13) * big(q).pow(exp(3 * (n - 2))?)), 3);
    Ok((to_i128(&main)?, to_i128(&weil)?, to_i128(&degree_power)?))
}

/// Valid integer lower bound on the rational points of an absolutely
/// irreducible degree-`d` hypersurface in `F_q^n`. May be negative.
pub fn cafure_matera_lower(q: u64, n: u64, d: u64) -> Result<i128> {
    let (main, weil, degree_power) = lower_terms(q, n, d)?;
    Ok(main - weil - degree_power)
}

/// `2 n D^3 q^{n-2}`.
pub fn schmidt_upper(q: u64, n: u64, degree: u64) -> Result<i128> {
    if n < 2 || q < 2 {
        return Err(Error::InvalidParameter(format!("need n >= 2 and q >= 2, got n = {n}, q = {q}")));
    }
    let exp = u32::try_from(n - 2).map_err(|_| Error::InvalidParameter("exponent too large".into()))?;
    let value = big(2) * big(n) * big(degree).pow(3) * big(q).pow(exp);
    to_i128(&value)
}

/// Exact margin for the claim that no word generated by a degree-`(k+d)`
/// polynomial is a deep hole of the `[q, k]` code.
pub fn theorem_margin(q: u64, k: u64, d: u64, variant: Variant) -> Result<BoundReport> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let n = k + 1;
    let (main, weil, degree_power) = lower_terms(q, n, d)?;
    let common_degree = d.max(variant.distinctness_degree(k));
    let common_zero = schmidt_upper(q, n, common_degree)?;
    let margin = main - weil - degree_power - common_zero;
    Ok(BoundReport {
        q,
        k,
        d,
        variant,
        common_degree,
        terms: BoundTerms { main, weil, degree_power, common_zero },
        margin,
        applies: margin > 0,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CountConstraint {
    None,
    NonzeroDistinct,
}

/// Number of zeros of `poly` in `F_q^vars`, by direct evaluation at every
/// point.
pub fn exact_point_count(poly: &MPoly, constraint: CountConstraint, jobs: usize) -> Result<u128> {
    let field = poly.field();
    let q = field.order();
    let vars = poly.vars();
    let total = checked_pow(q, vars as u64);
    check_budget("point count", total, COUNT_BUDGET)?;
    let eval = poly.evaluator();
    let parts = partitioned(total.unwrap() as u64, jobs, |range| {
        let mut point = vec![0u64; vars];
        let mut count = 0u128;
        for index in range {
            let mut r = index;
            for x in point.iter_mut() {
                *x = r % q;
                r /= q;
            }
            if constraint == CountConstraint::NonzeroDistinct {
                let ok = point.iter().enumerate().all(|(i, &x)| x != 0 && !point[..i].contains(&x));
                if !ok {
                    continue;
                }
            }
            if eval.eval(&point) == 0 {
                count += 1;
            }
        }
        count
    });
    Ok(parts.into_iter().sum())
}
