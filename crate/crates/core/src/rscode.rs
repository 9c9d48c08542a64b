//! Reed–Solomon codes over an explicit evaluation set.
//!
//! A message `(a_1, .., a_k)` is the polynomial `a_1 + a_2 x + .. + a_k x^{k-1}`
//! and encodes to its values on the evaluation set. The covering radius is
//! `n - k`; a deep hole is a word at exactly that distance from the code.
//!
//! Two exact distance oracles are provided and are expected to agree on
//! every word, including the reported witness:
//!
//! * [`Oracle::CodewordEnumeration`] scans all `q^k` codewords.
//! * [`Oracle::SubsetInterpolation`] scans all `(k+1)`-subsets of positions;
//!   a subset lies on a codeword iff its interpolant has degree `<= k-1`.
//!
//! Both pick, among codewords of maximal agreement, the one whose generator
//! has the smallest canonical encoding.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::comb::{binomial, checked_pow, partitioned, Combinations};
use crate::error::{check_budget, Error, Result};
use crate::gf::{Field, FieldSpec};
use crate::upoly::UPoly;

/// Codeword-enumeration budget on `q^k`.
pub const ENUMERATION_BUDGET: u128 = 10_000_000;
/// Subset-interpolation budget on `C(n, k+1)`.
pub const SUBSET_BUDGET: u128 = 10_000_000;
/// Census budget on `q^n`.
pub const CENSUS_BUDGET: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NamedSet {
    /// `F_q^*` in canonical order.
    Star,
    /// `F_q` in canonical order.
    Full,
}

/// `"star" | "full" | [x_1, .., x_n]`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EvalSet {
    Named(NamedSet),
    Explicit(Vec<u64>),
}

impl EvalSet {
    pub fn star() -> EvalSet {
        EvalSet::Named(NamedSet::Star)
    }

    pub fn full() -> EvalSet {
        EvalSet::Named(NamedSet::Full)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Generalized,
    Standard,
    Extended,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Oracle {
    SubsetInterpolation,
    CodewordEnumeration,
}

/// `{"field": FieldSpec, "eval_set": "star" | "full" | [..], "k": int}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub field: FieldSpec,
    pub eval_set: EvalSet,
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RSCode {
    field: Field,
    eval: Vec<u64>,
    k: usize,
    flavor: Flavor,
}

/// A length-`n` vector aligned with the code's evaluation order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReceivedWord {
    values: Vec<u64>,
}

impl ReceivedWord {
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Mixed-radix index `sum w_j q^j`, position 0 least significant.
    pub fn encoding(&self, q: u64) -> u128 {
        self.values.iter().rev().fold(0u128, |acc, &v| acc * q as u128 + v as u128)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeepHoleVerdict {
    pub is_deep_hole: bool,
    pub distance: usize,
    pub max_agreement: usize,
    /// Generator (degree `<= k-1`) of a nearest codeword.
    pub witness: UPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeepHoleCensus {
    pub count: u128,
    pub total: u128,
    /// First deep holes in encoding order.
    pub sample: Vec<ReceivedWord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub word_encoding: u128,
    pub distance: usize,
    pub is_deep_hole: bool,
}

impl RSCode {
    pub fn new(field: &Field, eval_set: &EvalSet, k: usize) -> Result<RSCode> {
        let eval: Vec<u64> = match eval_set {
            EvalSet::Named(NamedSet::Star) => field.elements(true).collect(),
            EvalSet::Named(NamedSet::Full) => field.elements(false).collect(),
            EvalSet::Explicit(xs) => {
                for (i, &x) in xs.iter().enumerate() {
                    field.check(x)?;
                    if xs[..i].contains(&x) {
                        return Err(Error::RepeatedNode(x));
                    }
                }
                xs.clone()
            }
        };
        let n = eval.len();
        if k < 1 || k >= n {
            return Err(Error::InvalidParameter(format!("need 1 <= k < n, got k = {k}, n = {n}")));
        }
        let flavor = if eval.iter().copied().eq(field.elements(true)) {
            Flavor::Standard
        } else if eval.iter().copied().eq(field.elements(false)) {
            Flavor::Extended
        } else {
            Flavor::Generalized
        };
        Ok(RSCode { field: field.clone(), eval, k, flavor })
    }

    pub fn from_json(json: &CodeJson) -> Result<RSCode> {
        RSCode::new(&Field::from_spec(&json.field)?, &json.eval_set, json.k)
    }

    pub fn to_json(&self) -> CodeJson {
        let eval_set = match self.flavor {
            Flavor::Standard => EvalSet::star(),
            Flavor::Extended => EvalSet::full(),
            Flavor::Generalized => EvalSet::Explicit(self.eval.clone()),
        };
        CodeJson { field: self.field.spec().clone(), eval_set, k: self.k }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn eval_set(&self) -> &[u64] {
        &self.eval
    }

    pub fn n(&self) -> usize {
        self.eval.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn min_distance(&self) -> usize {
        self.n() - self.k + 1
    }

    pub fn covering_radius(&self) -> usize {
        self.n() - self.k
    }

    /// Validates a received word for this code.
    pub fn word(&self, values: Vec<u64>) -> Result<ReceivedWord> {
        if values.len() != self.n() {
            return Err(Error::InvalidParameter(format!(
                "word has length {}, code length is {}",
                values.len(),
                self.n()
            )));
        }
        for &v in &values {
            self.field.check(v)?;
        }
        Ok(ReceivedWord { values })
    }

    pub fn word_from_encoding(&self, mut index: u128) -> ReceivedWord {
        let q = self.field.order() as u128;
        let values = (0..self.n())
            .map(|_| {
                let v = (index % q) as u64;
                index /= q;
                v
            })
            .collect();
        ReceivedWord { values }
    }

    pub fn encode(&self, message: &[u64]) -> Result<ReceivedWord> {
        if message.len() != self.k {
            return Err(Error::InvalidParameter(format!(
                "message has length {}, code dimension is {}",
                message.len(),
                self.k
            )));
        }
        let g = UPoly::new(&self.field, message.to_vec())?;
        self.evaluate(&g)
    }

    /// Values of any polynomial on the evaluation set.
    pub fn evaluate(&self, g: &UPoly) -> Result<ReceivedWord> {
        if g.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        Ok(ReceivedWord { values: self.eval.iter().map(|&x| g.eval(x)).collect() })
    }

    /// The word generated by `g`; requires `deg g < n`.
    pub fn word_from_poly(&self, g: &UPoly) -> Result<ReceivedWord> {
        if let Some(degree) = g.degree().filter(|&d| d >= self.n()) {
            return Err(Error::NotReduced { degree, n: self.n() });
        }
        self.evaluate(g)
    }

    /// The unique interpolant of degree `< n` that generates `w`.
    pub fn word_poly(&self, w: &ReceivedWord) -> Result<UPoly> {
        self.check_word(w)?;
        let pts: Vec<(u64, u64)> = self.eval.iter().copied().zip(w.values.iter().copied()).collect();
        UPoly::interpolate(&self.field, &pts)
    }

    pub fn is_codeword(&self, w: &ReceivedWord) -> Result<bool> {
        Ok(self.word_poly(w)?.degree() < Some(self.k))
    }

    fn check_word(&self, w: &ReceivedWord) -> Result<()> {
        if w.values.len() != self.n() || w.values.iter().any(|&v| !self.field.contains(v)) {
            return Err(Error::InvalidParameter("word does not belong to this code".into()));
        }
        Ok(())
    }

    pub fn agreement(&self, a: &ReceivedWord, b: &ReceivedWord) -> usize {
        a.values.iter().zip(&b.values).filter(|(x, y)| x == y).count()
    }

    pub fn hamming_distance(&self, a: &ReceivedWord, b: &ReceivedWord) -> usize {
        self.n() - self.agreement(a, b)
    }

    pub fn distance_to_code(&self, w: &ReceivedWord, oracle: Oracle) -> Result<DeepHoleVerdict> {
        self.distance_to_code_jobs(w, oracle, 1)
    }

    /// As [`RSCode::distance_to_code`], splitting the scan over `jobs` threads.
    /// The result does not depend on `jobs`.
    pub fn distance_to_code_jobs(
        &self,
        w: &ReceivedWord,
        oracle: Oracle,
        jobs: usize,
    ) -> Result<DeepHoleVerdict> {
        self.check_word(w)?;
        let (max_agreement, witness) = match oracle {
            Oracle::CodewordEnumeration => self.best_by_enumeration(w, jobs)?,
            Oracle::SubsetInterpolation => self.best_by_subsets(w)?,
        };
        let distance = self.n() - max_agreement;
        debug_assert!(distance <= self.covering_radius());
        Ok(DeepHoleVerdict {
            is_deep_hole: distance == self.covering_radius(),
            distance,
            max_agreement,
            witness,
        })
    }

    fn message_poly(&self, mut index: u64) -> UPoly {
        let q = self.field.order();
        let coeffs = (0..self.k)
            .map(|_| {
                let c = index % q;
                index /= q;
                c
            })
            .collect();
        UPoly::from_raw(&self.field, coeffs)
    }

    fn best_by_enumeration(&self, w: &ReceivedWord, jobs: usize) -> Result<(usize, UPoly)> {
        let q = self.field.order();
        let total = checked_pow(q, self.k as u64);
        check_budget("codeword enumeration", total, ENUMERATION_BUDGET)?;
        let total = total.unwrap() as u64;
        let f = &self.field;
        // powers[j][i] = x_j^i
        let powers: Vec<Vec<u64>> =
            self.eval.iter().map(|&x| (0..self.k).map(|i| f.pow(x, i as u64)).collect()).collect();
        let parts = partitioned(total, jobs, |range| {
            let mut best: Option<(usize, u64)> = None;
            let mut digits = vec![0u64; self.k];
            for index in range {
                let mut r = index;
                for d in digits.iter_mut() {
                    *d = r % q;
                    r /= q;
                }
                let agree = powers
                    .iter()
                    .zip(&w.values)
                    .filter(|(pw, &y)| {
                        let v = pw.iter().zip(&digits).fold(0, |acc, (&p, &a)| f.add(acc, f.mul(p, a)));
                        v == y
                    })
                    .count();
                if best.is_none_or(|(b, _)| agree > b) {
                    best = Some((agree, index));
                }
            }
            best
        });
        // earlier ranges hold smaller encodings, so only strict improvements win
        let (agree, index) = parts
            .into_iter()
            .flatten()
            .fold(None, |acc: Option<(usize, u64)>, cand| match acc {
                Some(a) if a.0 >= cand.0 => Some(a),
                _ => Some(cand),
            })
            .expect("at least one codeword");
        Ok((agree, self.message_poly(index)))
    }

    fn best_by_subsets(&self, w: &ReceivedWord) -> Result<(usize, UPoly)> {
        let (n, k) = (self.n(), self.k);
        check_budget("subset interpolation", binomial(n as u64, k as u64 + 1), SUBSET_BUDGET)?;
        let f = &self.field;
        let mut best: Option<(usize, UPoly)> = None;
        let consider = |g: UPoly, best: &mut Option<(usize, UPoly)>| -> Result<()> {
            let agree = self.agreement(&self.evaluate(&g)?, w);
            let better = match best {
                None => true,
                Some((b, bg)) => agree > *b || (agree == *b && g.cmp_encoding(bg) == Ordering::Less),
            };
            if better {
                *best = Some((agree, g));
            }
            Ok(())
        };
        for subset in Combinations::new(n, k + 1) {
            if top_coefficient(f, &self.eval, &w.values, &subset) != 0 {
                continue;
            }
            let pts: Vec<(u64, u64)> = subset[..k].iter().map(|&i| (self.eval[i], w.values[i])).collect();
            consider(UPoly::interpolate(f, &pts)?, &mut best)?;
        }
        if best.is_none() {
            // No k+1 positions lie on a codeword, so the best agreement is k,
            // attained by the interpolant of every k-subset.
            check_budget("subset interpolation", binomial(n as u64, k as u64), SUBSET_BUDGET)?;
            for subset in Combinations::new(n, k) {
                let pts: Vec<(u64, u64)> = subset.iter().map(|&i| (self.eval[i], w.values[i])).collect();
                consider(UPoly::interpolate(f, &pts)?, &mut best)?;
            }
        }
        Ok(best.expect("k < n guarantees a candidate"))
    }

    /// Precomputes the barycentric weights of every `(k+1)`-subset so that
    /// deep-hole membership is a sparse dot product per subset.
    pub fn deep_hole_tester(&self) -> Result<DeepHoleTester> {
        let (n, k) = (self.n(), self.k);
        check_budget("subset interpolation", binomial(n as u64, k as u64 + 1), SUBSET_BUDGET)?;
        let f = &self.field;
        let mut index = Vec::new();
        let mut weight = Vec::new();
        for subset in Combinations::new(n, k + 1) {
            for &i in &subset {
                let denom = subset
                    .iter()
                    .filter(|&&j| j != i)
                    .fold(1, |d, &j| f.mul(d, f.sub(self.eval[i], self.eval[j])));
                index.push(i);
                weight.push(f.inv(denom).expect("distinct evaluation points"));
            }
        }
        Ok(DeepHoleTester { field: f.clone(), width: k + 1, index, weight })
    }

    /// Counts deep holes by scanning all `q^n` words.
    pub fn enumerate_deep_holes(&self, sample_limit: usize, jobs: usize) -> Result<DeepHoleCensus> {
        let total = checked_pow(self.field.order(), self.n() as u64);
        check_budget("deep-hole census", total, CENSUS_BUDGET)?;
        let total = total.unwrap();
        let tester = self.deep_hole_tester()?;
        let parts = partitioned(total as u64, jobs, |range| {
            let mut count = 0u128;
            let mut sample = Vec::new();
            for index in range {
                let w = self.word_from_encoding(index as u128);
                if tester.is_deep_hole(&w) {
                    count += 1;
                    if sample.len() < sample_limit {
                        sample.push(w);
                    }
                }
            }
            (count, sample)
        });
        let mut census = DeepHoleCensus { count: 0, total, sample: Vec::new() };
        for (count, sample) in parts {
            census.count += count;
            let room = sample_limit - census.sample.len();
            census.sample.extend(sample.into_iter().take(room));
        }
        Ok(census)
    }

    /// Exact distance of every word, in encoding order (for CSV export).
    pub fn census_rows(&self, jobs: usize) -> Result<Vec<CensusRow>> {
        let total = checked_pow(self.field.order(), self.n() as u64);
        check_budget("deep-hole census", total, CENSUS_BUDGET)?;
        let parts = partitioned(total.unwrap() as u64, jobs, |range| {
            range
                .map(|index| {
                    let w = self.word_from_encoding(index as u128);
                    let v = self.distance_to_code(&w, Oracle::SubsetInterpolation)?;
                    Ok(CensusRow {
                        word_encoding: index as u128,
                        distance: v.distance,
                        is_deep_hole: v.is_deep_hole,
                    })
                })
                .collect::<Result<Vec<_>>>()
        });
        let mut rows = Vec::new();
        for part in parts {
            rows.extend(part?);
        }
        Ok(rows)
    }
}

/// Coefficient of `x^k` in the interpolant through the `k+1` positions in
/// `subset`: `sum_i y_i / prod_{j != i} (x_i - x_j)`.
fn top_coefficient(f: &Field, xs: &[u64], ys: &[u64], subset: &[usize]) -> u64 {
    subset.iter().fold(0, |acc, &i| {
        let denom = subset.iter().filter(|&&j| j != i).fold(1, |d, &j| f.mul(d, f.sub(xs[i], xs[j])));
        f.add(acc, f.mul(ys[i], f.inv(denom).expect("distinct evaluation points")))
    })
}

/// See [`RSCode::deep_hole_tester`].
pub struct DeepHoleTester {
    field: Field,
    width: usize,
    index: Vec<usize>,
    weight: Vec<u64>,
}

impl DeepHoleTester {
    /// True iff no `k+1` positions of `w` lie on a common codeword.
    pub fn is_deep_hole(&self, w: &ReceivedWord) -> bool {
        let f = &self.field;
        !self.index.chunks(self.width).zip(self.weight.chunks(self.width)).any(|(idx, wt)| {
            idx.iter().zip(wt).fold(0, |acc, (&i, &c)| f.add(acc, f.mul(c, w.values[i]))) == 0
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(q: u64) -> Field {
        Field::with_order(q).unwrap()
    }

    fn code(q: u64, eval: EvalSet, k: usize) -> RSCode {
        RSCode::new(&f(q), &eval, k).unwrap()
    }

    fn poly(c: &RSCode, s: &str) -> UPoly {
        UPoly::parse(c.field(), s).unwrap()
    }

    #[test]
    fn construction_and_flavor() {
        assert_eq!(code(5, EvalSet::star(), 2).flavor(), Flavor::Standard);
        assert_eq!(code(5, EvalSet::full(), 2).flavor(), Flavor::Extended);
        assert_eq!(code(5, EvalSet::Explicit(vec![1, 2, 3, 4]), 2).flavor(), Flavor::Standard);
        assert_eq!(code(5, EvalSet::Explicit(vec![2, 1, 3, 4]), 2).flavor(), Flavor::Generalized);
        assert!(RSCode::new(&f(5), &EvalSet::star(), 4).is_err());
        assert!(RSCode::new(&f(5), &EvalSet::star(), 0).is_err());
        assert!(RSCode::new(&f(5), &EvalSet::Explicit(vec![1, 1, 2]), 1).is_err());
        assert!(RSCode::new(&f(5), &EvalSet::Explicit(vec![1, 7, 2]), 1).is_err());
        let c = code(5, EvalSet::star(), 2);
        assert_eq!((c.min_distance(), c.covering_radius()), (3, 2));
    }

    #[test]
    fn encode_examples() {
        let c = code(5, EvalSet::star(), 2);
        assert_eq!(c.encode(&[0, 1]).unwrap().values(), &[1, 2, 3, 4]);
        assert_eq!(c.encode(&[0, 0]).unwrap().values(), &[0, 0, 0, 0]);
        assert_eq!(c.encode(&[1, 1]).unwrap().values(), &[2, 3, 4, 0]);
        assert!(c.encode(&[1]).is_err());
    }

    #[test]
    fn word_poly_examples() {
        let c = code(5, EvalSet::star(), 2);
        let w = c.encode(&[3, 2]).unwrap();
        assert!(c.word_poly(&w).unwrap().degree() <= Some(1));
        assert!(c.is_codeword(&w).unwrap());
        let w = c.word(vec![1, 4, 4, 1]).unwrap();
        assert_eq!(c.word_poly(&w).unwrap(), poly(&c, "x^2"));
        let e = code(5, EvalSet::full(), 2);
        let w = e.word(vec![0, 1, 3, 2, 4]).unwrap();
        assert_eq!(e.word_poly(&w).unwrap(), poly(&e, "x^3"));
    }

    #[test]
    fn word_from_poly_examples() {
        let c = code(5, EvalSet::star(), 2);
        assert_eq!(c.word_from_poly(&poly(&c, "x^2")).unwrap().values(), &[1, 4, 4, 1]);
        assert_eq!(c.word_from_poly(&UPoly::zero(c.field())).unwrap().values(), &[0; 4]);
        let e = code(5, EvalSet::full(), 2);
        assert_eq!(e.word_from_poly(&poly(&e, "x^3")).unwrap().values(), &[0, 1, 3, 2, 4]);
        assert!(matches!(c.word_from_poly(&poly(&c, "x^4")), Err(Error::NotReduced { degree: 4, n: 4 })));
    }

    #[test]
    fn distance_examples() {
        for oracle in [Oracle::SubsetInterpolation, Oracle::CodewordEnumeration] {
            let c = code(5, EvalSet::star(), 2);
            let v = c.distance_to_code(&c.encode(&[1, 3]).unwrap(), oracle).unwrap();
            assert_eq!((v.distance, v.is_deep_hole), (0, false));
            assert_eq!(v.witness, poly(&c, "3x + 1"));

            let v = c.distance_to_code(&c.word_from_poly(&poly(&c, "x^2")).unwrap(), oracle).unwrap();
            assert_eq!((v.distance, v.is_deep_hole), (2, true));

            let e = code(5, EvalSet::full(), 2);
            let v = e.distance_to_code(&e.word_from_poly(&poly(&e, "x^3")).unwrap(), oracle).unwrap();
            assert_eq!((v.distance, v.is_deep_hole, v.max_agreement), (2, false, 3));
            assert_eq!(v.witness, poly(&e, "x"));
        }
    }

    #[test]
    fn oracles_agree_on_generalized_code() {
        let c = code(5, EvalSet::Explicit(vec![0, 2, 3, 4]), 2);
        for index in 0..625 {
            let w = c.word_from_encoding(index);
            let a = c.distance_to_code(&w, Oracle::SubsetInterpolation).unwrap();
            let b = c.distance_to_code_jobs(&w, Oracle::CodewordEnumeration, 3).unwrap();
            assert_eq!(a, b, "word {:?}", w.values());
            assert!(a.distance <= c.covering_radius());
            if a.distance > 0 {
                assert!(a.max_agreement >= c.k());
            }
            let cw = c.evaluate(&a.witness).unwrap();
            assert_eq!(c.hamming_distance(&cw, &w), a.distance);
        }
    }

    #[test]
    fn census_examples() {
        let c = code(3, EvalSet::Explicit(vec![1, 2]), 1);
        let census = c.enumerate_deep_holes(10, 1).unwrap();
        assert_eq!(census.count, 6);
        assert!(census.sample.iter().all(|w| w.values()[0] != w.values()[1]));

        let g = code(4, EvalSet::Explicit(vec![0, 1, 2]), 1);
        assert!(g.enumerate_deep_holes(0, 2).unwrap().count >= 12);

        let s = code(5, EvalSet::star(), 2);
        let one = s.enumerate_deep_holes(5, 1).unwrap();
        let many = s.enumerate_deep_holes(5, 4).unwrap();
        assert_eq!(one, many);
        assert!(one.count >= 100);
        let rows = s.census_rows(2).unwrap();
        assert_eq!(rows.iter().filter(|r| r.is_deep_hole).count() as u128, one.count);
    }

    #[test]
    fn budgets() {
        let c = code(101, EvalSet::Explicit((1..25).collect()), 12);
        let w = c.word(vec![0; 24]).unwrap();
        assert!(c.distance_to_code(&w, Oracle::CodewordEnumeration).unwrap_err().is_budget());
        assert!(c.enumerate_deep_holes(1, 1).unwrap_err().is_budget());
    }

    #[test]
    fn code_json() {
        let c = code(5, EvalSet::star(), 2);
        let j = serde_json::to_string(&c.to_json()).unwrap();
        assert_eq!(j, r#"{"field":{"p":5,"m":1},"eval_set":"star","k":2}"#);
        let parsed: CodeJson =
            serde_json::from_str(r#"{"field":{"p":5,"m":1},"eval_set":[0,2,3],"k":1}"#).unwrap();
        assert_eq!(RSCode::from_json(&parsed).unwrap().flavor(), Flavor::Generalized);
    }
}
