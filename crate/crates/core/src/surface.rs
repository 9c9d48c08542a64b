//! The leading-coefficient hypersurface of a monic tail.
//!
//! Fix `f = x^{k+d} + f_{d-1} x^{k+d-1} + .. + f_0 x^k` and divide it by
//! `Pi = (x - x_1)..(x - x_{k+1})` with the roots left symbolic. The
//! remainder has degree `<= k` in `x`; its `x^k` coefficient `L` is a
//! polynomial of degree `d` in `x_1..x_{k+1}`. A zero of `L` with pairwise
//! distinct coordinates from the evaluation set makes the remainder a
//! codeword generator within distance `n - k - 1` of the word `f + t`, so
//! such a word is not a deep hole.
//!
//! Sign convention: `Pi = x^{k+1} + pi_1 x^k + .. + pi_{k+1}` with
//! `pi_i = (-1)^i e_i`, where `e_i` is the elementary symmetric polynomial.
//! Only `e_i` is stored; the sign is applied when `Pi` is assembled.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::comb::{checked_pow, partitioned};
use crate::error::{check_budget, Error, Result};
use crate::gf::{Field, FieldSpec};
use crate::mpoly::{MPoly, Subst};
use crate::rscode::RSCode;
use crate::upoly::UPoly;

/// Cap on the total number of terms held by the symbolic remainder.
pub const DIVISION_TERM_BUDGET: usize = 1_000_000;
/// Cap on `|domain|^{k+1}` for exhaustive point search.
pub const SEARCH_BUDGET: u128 = 100_000_000;
/// Cap on `q^2` for the smoothness scan.
pub const SCAN_BUDGET: u128 = 100_000_000;

/// `f = x^{k+d} + sum_{i<d} low[i] x^{k+i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonicTail {
    k: usize,
    d: usize,
    low: Vec<u64>,
}

impl MonicTail {
    pub fn new(k: usize, d: usize, low: Vec<u64>) -> Result<MonicTail> {
        if k < 1 || d < 1 {
            return Err(Error::InvalidParameter(format!("need k >= 1 and d >= 1, got k = {k}, d = {d}")));
        }
        if low.len() != d {
            return Err(Error::InvalidParameter(format!(
                "tail of degree {d} needs {d} low coefficients, got {}",
                low.len()
            )));
        }
        Ok(MonicTail { k, d, low })
    }

    /// `x^{k+d}`.
    pub fn pure(k: usize, d: usize) -> Result<MonicTail> {
        MonicTail::new(k, d, vec![0; d])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn low(&self) -> &[u64] {
        &self.low
    }

    pub fn poly(&self, field: &Field) -> Result<UPoly> {
        let mut coeffs = vec![0u64; self.k + self.d + 1];
        coeffs[self.k..self.k + self.d].copy_from_slice(&self.low);
        coeffs[self.k + self.d] = 1;
        UPoly::new(field, coeffs)
    }
}

/// `{"k": int, "d": int, "coeffs": [f0, .., f_{d-1}], "field": FieldSpec}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceJson {
    pub k: usize,
    pub d: usize,
    pub coeffs: Vec<u64>,
    pub field: FieldSpec,
}

impl InstanceJson {
    pub fn parse(&self) -> Result<(MonicTail, Field)> {
        Ok((MonicTail::new(self.k, self.d, self.coeffs.clone())?, Field::from_spec(&self.field)?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypersurfaceInstance {
    pub k: usize,
    pub d: usize,
    pub field: Field,
    /// The `x^k` coefficient of `f mod Pi`, in `k + 1` variables.
    pub l: MPoly,
    /// Degree-`d` form of `l`.
    pub top_form: MPoly,
}

/// `Pi` as a polynomial in `x` with coefficients in `F[x_1..x_v]`, ascending.
fn symbolic_product(field: &Field, vars: usize) -> Result<Vec<MPoly>> {
    (0..=vars)
        .map(|j| {
            let i = vars - j;
            let e = MPoly::elementary_symmetric(i, vars, field)?;
            Ok(if i % 2 == 1 { e.neg() } else { e })
        })
        .collect()
}

/// Remainder of `dividend` by the monic `divisor`, both ascending in `x`
/// with multivariate coefficients.
fn symbolic_remainder(mut rem: Vec<MPoly>, divisor: &[MPoly]) -> Result<Vec<MPoly>> {
    let db = divisor.len() - 1;
    debug_assert!(divisor[db].as_constant() == Some(1));
    for top in (db..rem.len()).rev() {
        let lead = std::mem::replace(&mut rem[top], MPoly::zero(divisor[0].field(), divisor[0].vars()));
        if lead.is_zero() {
            continue;
        }
        let shift = top - db;
        for (j, c) in divisor[..db].iter().enumerate() {
            rem[shift + j] = rem[shift + j].sub(&lead.mul(c)?)?;
        }
        let held: usize = rem.iter().map(MPoly::len).sum();
        if held > DIVISION_TERM_BUDGET {
            return Err(Error::BudgetExceeded {
                what: "symbolic division",
                needed: held as u128,
                limit: DIVISION_TERM_BUDGET as u128,
            });
        }
    }
    rem.truncate(db);
    Ok(rem)
}

/// Divides the tail by the symbolic `Pi` and extracts `L` and its top form.
pub fn compute_l(tail: &MonicTail, field: &Field) -> Result<HypersurfaceInstance> {
    for &c in &tail.low {
        field.check(c)?;
    }
    let vars = tail.k + 1;
    let dividend: Vec<MPoly> =
        tail.poly(field)?.coeffs().iter().map(|&c| MPoly::constant(field, vars, c)).collect::<Result<_>>()?;
    let rem = symbolic_remainder(dividend, &symbolic_product(field, vars)?)?;
    let l = rem[tail.k].clone();
    if l.total_degree() != Some(tail.d as u32) {
        return Err(Error::InvalidParameter(format!(
            "leading coefficient has degree {:?}, expected {}",
            l.total_degree(),
            tail.d
        )));
    }
    let top_form = l.homogeneous_component(tail.d as u32);
    Ok(HypersurfaceInstance { k: tail.k, d: tail.d, field: field.clone(), l, top_form })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopFormReport {
    pub k: usize,
    pub d: usize,
    pub q: u64,
    pub trials: usize,
    pub seed: u64,
    pub all_equal: bool,
    /// Tail coefficient vectors whose top form differed from the pure tail's.
    pub counterexamples: Vec<Vec<u64>>,
}

/// Compares the top form of `L` for random tails against the tail `x^{k+d}`.
pub fn verify_top_form_independence(
    k: usize,
    d: usize,
    trials: usize,
    field: &Field,
    seed: u64,
) -> Result<TopFormReport> {
    use rand::Rng;
    let reference = compute_l(&MonicTail::pure(k, d)?, field)?.top_form;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counterexamples = Vec::new();
    for _ in 0..trials {
        let low: Vec<u64> = (0..d).map(|_| rng.gen_range(0..field.order())).collect();
        let inst = compute_l(&MonicTail::new(k, d, low.clone())?, field)?;
        if inst.top_form != reference {
            counterexamples.push(low);
        }
    }
    Ok(TopFormReport {
        k,
        d,
        q: field.order(),
        trials,
        seed,
        all_equal: counterexamples.is_empty(),
        counterexamples,
    })
}

/// `sum_{i+j<=d} x_1^i x_2^j`, built directly.
pub fn chi_specialized(d: usize, field: &Field) -> Result<MPoly> {
    let d = d as u32;
    let terms = (0..=d).flat_map(|i| (0..=d - i).map(move |j| (vec![i, j], 1u64)));
    MPoly::from_terms(field, 2, terms)
}

/// The top form of `L(x^{k+d})` at `(x_1, x_2, 1, 0, .., 0)`, as a polynomial
/// in `x_1, x_2`. Needs `k >= 2`.
pub fn chi_from_pipeline(d: usize, k: usize, field: &Field) -> Result<MPoly> {
    if k < 2 {
        return Err(Error::InvalidParameter("the specialization needs k >= 2".into()));
    }
    let inst = compute_l(&MonicTail::pure(k, d)?, field)?;
    let mut assignment = vec![(3, Subst::Value(field.element(1)?))];
    for i in 4..=k + 1 {
        assignment.push((i, Subst::Value(field.element(0)?)));
    }
    inst.top_form.substitute(&assignment)?.project(&[1, 2])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointConstraint {
    /// Coordinates pairwise distinct and nonzero.
    NonzeroDistinct,
    /// Coordinates pairwise distinct.
    DistinctOnly,
}

impl PointConstraint {
    pub fn domain(self, field: &Field) -> Vec<u64> {
        field.elements(self == PointConstraint::NonzeroDistinct).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Lexicographically least point, or a proof that none exists.
    Exhaustive,
    /// Random distinct points; a hit is re-evaluated before it is returned.
    /// `None` means no hit was found, not that none exists.
    Random { tries: u64, seed: u64 },
}

/// Term list in the variables `level..`, used by the prefix search.
type Terms = Vec<(Vec<u32>, u64)>;

fn specialize(field: &Field, terms: &Terms, value: u64) -> Terms {
    let mut out: Terms = terms
        .iter()
        .map(|(exps, c)| (exps[1..].to_vec(), field.mul(*c, field.pow(value, exps[0] as u64))))
        .collect();
    out.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let mut merged: Terms = Vec::with_capacity(out.len());
    for (exps, c) in out {
        match merged.last_mut() {
            Some((e, acc)) if *e == exps => *acc = field.add(*acc, c),
            _ => merged.push((exps, c)),
        }
    }
    merged.retain(|(_, c)| *c != 0);
    merged
}

fn search_prefix(
    field: &Field,
    terms: &Terms,
    domain: &[u64],
    prefix: &mut Vec<u64>,
    remaining: usize,
) -> Option<Vec<u64>> {
    if remaining == 1 {
        let mut coeffs = Vec::new();
        for (exps, c) in terms {
            let e = exps[0] as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, 0);
            }
            coeffs[e] = field.add(coeffs[e], *c);
        }
        let u = UPoly::from_raw(field, coeffs);
        let hit = domain.iter().find(|&&x| !prefix.contains(&x) && u.eval(x) == 0)?;
        let mut point = prefix.clone();
        point.push(*hit);
        return Some(point);
    }
    for &x in domain {
        if prefix.contains(&x) {
            continue;
        }
        let next = specialize(field, terms, x);
        prefix.push(x);
        let found = search_prefix(field, &next, domain, prefix, remaining - 1);
        prefix.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Finds a zero of `poly` whose coordinates satisfy `constraint`.
///
/// Exhaustive mode returns the lexicographically least such point by
/// canonical encodings; the answer does not depend on `jobs`.
pub fn find_distinct_point(
    poly: &MPoly,
    constraint: PointConstraint,
    mode: SearchMode,
    jobs: usize,
) -> Result<Option<Vec<u64>>> {
    let field = poly.field();
    let domain = constraint.domain(field);
    let vars = poly.vars();
    if vars == 0 {
        return Err(Error::InvalidParameter("polynomial has no variables".into()));
    }
    if vars > domain.len() {
        return Ok(None);
    }
    match mode {
        SearchMode::Exhaustive => {
            check_budget("point search", checked_pow(domain.len() as u64, vars as u64), SEARCH_BUDGET)?;
            let terms: Terms = poly.terms().map(|(m, c)| (m.exps().to_vec(), c)).collect();
            if vars == 1 {
                return Ok(search_prefix(field, &terms, &domain, &mut Vec::new(), 1));
            }
            let parts = partitioned(domain.len() as u64, jobs, |range| {
                for i in range {
                    let x = domain[i as usize];
                    let next = specialize(field, &terms, x);
                    let mut prefix = vec![x];
                    if let Some(p) = search_prefix(field, &next, &domain, &mut prefix, vars - 1) {
                        return Some(p);
                    }
                }
                None
            });
            Ok(parts.into_iter().flatten().next())
        }
        SearchMode::Random { tries, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let eval = poly.evaluator();
            let mut pool = domain.clone();
            for _ in 0..tries {
                let (chosen, _) = pool.partial_shuffle(&mut rng, vars);
                let point = chosen.to_vec();
                if eval.eval(&point) == 0 && poly.evaluate(&point)? == 0 {
                    return Ok(Some(point));
                }
            }
            Ok(None)
        }
    }
}

impl HypersurfaceInstance {
    pub fn find_distinct_point(
        &self,
        constraint: PointConstraint,
        mode: SearchMode,
        jobs: usize,
    ) -> Result<Option<Vec<u64>>> {
        find_distinct_point(&self.l, constraint, mode, jobs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// `t + (f mod Pi)`, of degree `<= k - 1`.
    pub generator: UPoly,
    /// Hamming distance between the words of `f + t` and `generator`.
    pub distance: usize,
}

/// Rebuilds the nearby codeword certified by a point on `L`.
pub fn witness_from_point(tail: &MonicTail, point: &[u64], code: &RSCode, t: &UPoly) -> Result<Witness> {
    let field = code.field();
    let k = tail.k;
    if point.len() != k + 1 {
        return Err(Error::InvalidParameter(format!(
            "point has {} coordinates, expected {}",
            point.len(),
            k + 1
        )));
    }
    for (i, &x) in point.iter().enumerate() {
        if point[..i].contains(&x) {
            return Err(Error::RepeatedCoordinate(x));
        }
        if !code.eval_set().contains(&x) {
            return Err(Error::OutsideEvaluationSet(x));
        }
    }
    if t.field() != field {
        return Err(Error::FieldMismatch);
    }
    if t.degree() >= Some(k) {
        return Err(Error::InvalidParameter(format!("t must have degree <= {}", k - 1)));
    }
    let f = tail.poly(field)?;
    let pi = UPoly::from_roots(field, point)?;
    let (_, r) = f.divmod(&pi)?;
    if r.degree() == Some(k) {
        return Err(Error::NotOnHypersurface(k));
    }
    let generator = t.add(&r)?;
    let word = code.evaluate(&f.add(t)?)?;
    let codeword = code.evaluate(&generator)?;
    let distance = code.hamming_distance(&word, &codeword);
    debug_assert!(distance < code.covering_radius());
    Ok(Witness { generator, distance })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothnessReport {
    pub d: usize,
    pub p: u64,
    pub e: u32,
    pub q: u64,
    pub points_scanned: u64,
    /// Affine points of the curve.
    pub curve_points: u64,
    /// Affine common zeros of `f`, `f_x`, `f_y`.
    pub singular_points: Vec<(u64, u64)>,
    /// Common zeros of the two partials alone, up to a small cap.
    pub partial_common_zeros: Vec<(u64, u64)>,
    pub partial_common_zero_count: u64,
    /// Points `(x : y : 0)` where the degree-`d` and degree-`(d-1)` forms
    /// both vanish; empty means every rational place at infinity is smooth.
    pub infinity_suspects: Vec<(u64, u64)>,
    pub p_divides_d_plus_1: bool,
    pub p_divides_d_plus_2: bool,
    pub smooth: bool,
}

const LISTED_ZEROS: usize = 16;

/// Scans `F_{p^e}^2` for singular points of `sum_{i+j<=d} x^i y^j`.
pub fn curve_smoothness_scan(d: usize, p: u64, e: u32, jobs: usize) -> Result<SmoothnessReport> {
    if d < 1 {
        return Err(Error::InvalidParameter("d must be at least 1".into()));
    }
    let q = p.checked_pow(e).ok_or_else(|| Error::InvalidParameter(format!("{p}^{e} overflows")))?;
    check_budget("smoothness scan", checked_pow(q, 2), SCAN_BUDGET)?;
    let field =
        if e == 1 { Field::prime(p)? } else { Field::new(p, e, Some(&Field::default_modulus(p, e)?))? };
    let curve = chi_specialized(d, &field)?;
    let (fe, fx, fy) =
        (curve.evaluator(), curve.derivative(1)?.evaluator(), curve.derivative(2)?.evaluator());

    let parts = partitioned(q, jobs, |range| {
        let mut on_curve = 0u64;
        let mut singular = Vec::new();
        let mut common = Vec::new();
        let mut common_count = 0u64;
        for x in range {
            for y in 0..q {
                let pt = [x, y];
                let v = fe.eval(&pt);
                if v == 0 {
                    on_curve += 1;
                }
                if fx.eval(&pt) == 0 && fy.eval(&pt) == 0 {
                    common_count += 1;
                    if common.len() < LISTED_ZEROS {
                        common.push((x, y));
                    }
                    if v == 0 {
                        singular.push((x, y));
                    }
                }
            }
        }
        (on_curve, singular, common, common_count)
    });
    let mut report = SmoothnessReport {
        d,
        p,
        e,
        q,
        points_scanned: q * q,
        curve_points: 0,
        singular_points: Vec::new(),
        partial_common_zeros: Vec::new(),
        partial_common_zero_count: 0,
        infinity_suspects: Vec::new(),
        p_divides_d_plus_1: (d as u64 + 1).is_multiple_of(p),
        p_divides_d_plus_2: (d as u64 + 2).is_multiple_of(p),
        smooth: false,
    };
    for (on_curve, singular, common, count) in parts {
        report.curve_points += on_curve;
        report.singular_points.extend(singular);
        report.partial_common_zero_count += count;
        let room = LISTED_ZEROS - report.partial_common_zeros.len();
        report.partial_common_zeros.extend(common.into_iter().take(room));
    }

    let top = curve.homogeneous_component(d as u32).evaluator();
    let next = curve.homogeneous_component(d as u32 - 1).evaluator();
    let at_infinity = field.elements(false).map(|x| (x, 1)).chain(std::iter::once((1, 0)));
    for (x, y) in at_infinity {
        if top.eval(&[x, y]) == 0 && next.eval(&[x, y]) == 0 {
            report.infinity_suspects.push((x, y));
        }
    }
    report.smooth = report.singular_points.is_empty() && report.infinity_suspects.is_empty();
    Ok(report)
}
