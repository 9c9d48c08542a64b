//! Sparse multivariate polynomials over a [`Field`].
//!
//! Variables are numbered `1..=vars` in the public API, index 0 is an error.
//! Terms are kept in a map keyed by [`Monomial`], whose ordering is graded
//! lexicographic; iteration and serialization list terms from the largest
//! monomial down.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::comb::Combinations;
use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement, FieldSpec};

/// Exponent vector, ordered graded-lex: total degree first, then
/// lexicographically with `x1` most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        Monomial(exps)
    }

    pub fn one(vars: usize) -> Monomial {
        Monomial(vec![0; vars])
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    field: Field,
    vars: usize,
    terms: BTreeMap<Monomial, u64>,
}

/// Replacement for one variable in [`MPoly::substitute`].
#[derive(Clone, Debug)]
pub enum Subst {
    Value(FieldElement),
    Var(usize),
}

/// `{"field": .., "vars": v, "terms": [{"exp": [..], "coeff": c}, ..]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MPolyJson {
    pub field: FieldSpec,
    pub vars: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: u64,
}

impl MPoly {
    pub fn zero(field: &Field, vars: usize) -> MPoly {
        MPoly { field: field.clone(), vars, terms: BTreeMap::new() }
    }

    pub fn constant(field: &Field, vars: usize, c: u64) -> Result<MPoly> {
        field.check(c)?;
        let mut p = MPoly::zero(field, vars);
        p.add_term(Monomial::one(vars), c);
        Ok(p)
    }

    /// The variable `x_index`, `1 <= index <= vars`.
    pub fn var(field: &Field, vars: usize, index: usize) -> Result<MPoly> {
        check_var(index, vars)?;
        let mut exps = vec![0; vars];
        exps[index - 1] = 1;
        let mut p = MPoly::zero(field, vars);
        p.add_term(Monomial(exps), 1);
        Ok(p)
    }

    pub fn from_terms<I>(field: &Field, vars: usize, terms: I) -> Result<MPoly>
    where
        I: IntoIterator<Item = (Vec<u32>, u64)>,
    {
        let mut p = MPoly::zero(field, vars);
        for (exps, c) in terms {
            if exps.len() != vars {
                return Err(Error::InvalidParameter(format!(
                    "exponent vector of length {} in a {vars}-variable polynomial",
                    exps.len()
                )));
            }
            field.check(c)?;
            p.add_term(Monomial(exps), c);
        }
        Ok(p)
    }

    /// `e_i(x_1, .., x_vars)`: the sum of all products of `i` distinct
    /// variables, with `e_0 = 1`.
    pub fn elementary_symmetric(i: usize, vars: usize, field: &Field) -> Result<MPoly> {
        if i > vars {
            return Err(Error::InvalidParameter(format!("e_{i} is undefined in {vars} variables")));
        }
        let mut p = MPoly::zero(field, vars);
        for subset in Combinations::new(vars, i) {
            let mut exps = vec![0; vars];
            for j in subset {
                exps[j] = 1;
            }
            p.add_term(Monomial(exps), 1);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: u64) {
        if c == 0 {
            return;
        }
        let f = &self.field;
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = f.add(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u64)> + '_ {
        self.terms.iter().rev().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, exps: &[u32]) -> u64 {
        self.terms.get(&Monomial(exps.to_vec())).copied().unwrap_or(0)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn as_constant(&self) -> Option<u64> {
        match self.total_degree() {
            None => Some(0),
            Some(0) => Some(self.terms.values().next().copied().unwrap_or(0)),
            Some(_) => None,
        }
    }

    fn compatible(&self, other: &MPoly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.vars != other.vars {
            return Err(Error::InvalidParameter(format!(
                "variable counts differ: {} vs {}",
                self.vars, other.vars
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &MPoly) -> Result<MPoly> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> MPoly {
        let f = &self.field;
        let terms = self.terms.iter().map(|(m, &c)| (m.clone(), f.neg(c))).collect();
        MPoly { field: f.clone(), vars: self.vars, terms }
    }

    pub fn sub(&self, other: &MPoly) -> Result<MPoly> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u64) -> MPoly {
        let f = &self.field;
        if c == 0 {
            return MPoly::zero(f, self.vars);
        }
        let terms = self.terms.iter().map(|(m, &a)| (m.clone(), f.mul(a, c))).collect();
        MPoly { field: f.clone(), vars: self.vars, terms }
    }

    pub fn mul(&self, other: &MPoly) -> Result<MPoly> {
        self.compatible(other)?;
        let f = &self.field;
        let mut out = MPoly::zero(f, self.vars);
        for (ma, &a) in &self.terms {
            for (mb, &b) in &other.terms {
                out.add_term(ma.mul(mb), f.mul(a, b));
            }
        }
        Ok(out)
    }

    /// The degree-`d` form of `self` (zero if there is none).
    pub fn homogeneous_component(&self, d: u32) -> MPoly {
        let terms =
            self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, &c)| (m.clone(), c)).collect();
        MPoly { field: self.field.clone(), vars: self.vars, terms }
    }

    /// Formal partial derivative with respect to `x_index`.
    pub fn derivative(&self, index: usize) -> Result<MPoly> {
        check_var(index, self.vars)?;
        let f = &self.field;
        let mut out = MPoly::zero(f, self.vars);
        for (m, &c) in &self.terms {
            let e = m.0[index - 1];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[index - 1] -= 1;
            out.add_term(Monomial(exps), f.mul(c, f.from_int(e as i64)));
        }
        Ok(out)
    }

    /// Replaces variables simultaneously. Unassigned variables stay put;
    /// `Subst::Var(j)` renames to `x_j`. The variable count is unchanged.
    pub fn substitute(&self, assignment: &[(usize, Subst)]) -> Result<MPoly> {
        let mut map: Vec<Option<&Subst>> = vec![None; self.vars];
        for (index, s) in assignment {
            check_var(*index, self.vars)?;
            match s {
                Subst::Value(v) if v.field() != &self.field => return Err(Error::FieldMismatch),
                Subst::Var(j) => check_var(*j, self.vars)?,
                _ => {}
            }
            map[index - 1] = Some(s);
        }
        let f = &self.field;
        let mut out = MPoly::zero(f, self.vars);
        for (m, &c) in &self.terms {
            let mut coeff = c;
            let mut exps = vec![0u32; self.vars];
            for (i, &e) in m.0.iter().enumerate() {
                match map[i] {
                    None => exps[i] += e,
                    Some(Subst::Var(j)) => exps[j - 1] += e,
                    Some(Subst::Value(v)) => coeff = f.mul(coeff, f.pow(v.value(), e as u64)),
                }
            }
            out.add_term(Monomial(exps), coeff);
        }
        Ok(out)
    }

    /// Value at a full point given as encodings.
    pub fn evaluate(&self, point: &[u64]) -> Result<u64> {
        if point.len() != self.vars {
            return Err(Error::InvalidParameter(format!(
                "point has {} coordinates, polynomial has {} variables",
                point.len(),
                self.vars
            )));
        }
        for &x in point {
            self.field.check(x)?;
        }
        Ok(self.evaluator().eval(point))
    }

    pub fn evaluator(&self) -> Evaluator {
        let mut max_exp = vec![0u32; self.vars];
        let terms: Vec<(u64, Vec<u32>)> = self
            .terms
            .iter()
            .map(|(m, &c)| {
                for (mx, &e) in max_exp.iter_mut().zip(&m.0) {
                    *mx = (*mx).max(e);
                }
                (c, m.0.clone())
            })
            .collect();
        Evaluator { field: self.field.clone(), terms, max_exp }
    }

    /// Restricts to the listed variables, renumbered in the order given.
    /// Fails if a dropped variable occurs in some term.
    pub fn project(&self, keep: &[usize]) -> Result<MPoly> {
        for &k in keep {
            check_var(k, self.vars)?;
        }
        let mut out = MPoly::zero(&self.field, keep.len());
        for (m, &c) in &self.terms {
            let kept: u32 = keep.iter().map(|&k| m.0[k - 1]).sum();
            if kept != m.degree() {
                return Err(Error::InvalidParameter(
                    "projection drops a variable that occurs in the polynomial".into(),
                ));
            }
            out.add_term(Monomial(keep.iter().map(|&k| m.0[k - 1]).collect()), c);
        }
        Ok(out)
    }

    /// Applies the variable permutation `x_i -> x_{perm[i-1]}`.
    pub fn permute(&self, perm: &[usize]) -> Result<MPoly> {
        let assignment: Vec<(usize, Subst)> =
            perm.iter().enumerate().map(|(i, &j)| (i + 1, Subst::Var(j))).collect();
        let mut seen = vec![false; self.vars];
        if perm.len() != self.vars {
            return Err(Error::InvalidParameter("permutation length mismatch".into()));
        }
        for &j in perm {
            check_var(j, self.vars)?;
            if std::mem::replace(&mut seen[j - 1], true) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
        }
        self.substitute(&assignment)
    }

    pub fn to_json(&self) -> MPolyJson {
        MPolyJson {
            field: self.field.spec().clone(),
            vars: self.vars,
            terms: self.terms().map(|(m, c)| TermJson { exp: m.0.clone(), coeff: c }).collect(),
        }
    }

    pub fn from_json(json: &MPolyJson) -> Result<MPoly> {
        let field = Field::from_spec(&json.field)?;
        MPoly::from_terms(&field, json.vars, json.terms.iter().map(|t| (t.exp.clone(), t.coeff)))
    }
}

fn check_var(index: usize, vars: usize) -> Result<()> {
    if index == 0 || index > vars {
        Err(Error::VariableIndex { index, vars })
    } else {
        Ok(())
    }
}

/// Flattened form of an [`MPoly`] for repeated evaluation.
#[derive(Clone)]
pub struct Evaluator {
    field: Field,
    terms: Vec<(u64, Vec<u32>)>,
    max_exp: Vec<u32>,
}

impl Evaluator {
    /// Evaluates at `point` (encodings, not validated).
    pub fn eval(&self, point: &[u64]) -> u64 {
        let f = &self.field;
        let powers: Vec<Vec<u64>> = point
            .iter()
            .zip(&self.max_exp)
            .map(|(&x, &mx)| {
                let mut v = Vec::with_capacity(mx as usize + 1);
                let mut acc = 1u64;
                v.push(acc);
                for _ in 0..mx {
                    acc = f.mul(acc, x);
                    v.push(acc);
                }
                v
            })
            .collect();
        self.terms.iter().fold(0u64, |sum, (c, exps)| {
            let t = exps.iter().enumerate().fold(*c, |acc, (i, &e)| {
                if e == 0 {
                    acc
                } else {
                    f.mul(acc, powers[i][e as usize])
                }
            });
            f.add(sum, t)
        })
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {:?} in {} vars", self, self.field, self.vars)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let factors: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
                    .collect();
            match (c, factors.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (1, false) => write!(f, "{}", factors.join("*"))?,
                _ => write!(f, "{c}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f(q: u64) -> Field {
        Field::with_order(q).unwrap()
    }

    fn x(field: &Field, vars: usize, i: usize) -> MPoly {
        MPoly::var(field, vars, i).unwrap()
    }

    fn sum(ps: &[MPoly]) -> MPoly {
        ps.iter().skip(1).fold(ps[0].clone(), |a, b| a.add(b).unwrap())
    }

    fn prod(a: &MPoly, b: &MPoly) -> MPoly {
        a.mul(b).unwrap()
    }

    #[test]
    fn elementary_symmetric_examples() {
        let f5 = f(5);
        let (x1, x2, x3) = (x(&f5, 3, 1), x(&f5, 3, 2), x(&f5, 3, 3));
        let e = |i| MPoly::elementary_symmetric(i, 3, &f5).unwrap();
        assert_eq!(e(0), MPoly::constant(&f5, 3, 1).unwrap());
        assert_eq!(e(1), sum(&[x1.clone(), x2.clone(), x3.clone()]));
        assert_eq!(e(2), sum(&[prod(&x1, &x2), prod(&x1, &x3), prod(&x2, &x3)]));
        assert_eq!(e(3), prod(&prod(&x1, &x2), &x3));
        assert!(MPoly::elementary_symmetric(4, 3, &f5).is_err());
    }

    #[test]
    fn homogeneous_component_examples() {
        let f5 = f(5);
        let (x1, x2) = (x(&f5, 2, 1), x(&f5, 2, 2));
        let one = MPoly::constant(&f5, 2, 1).unwrap();
        let p = sum(&[one.clone(), x1.clone(), prod(&x1, &x2)]);
        assert_eq!(p.homogeneous_component(2), prod(&x1, &x2));
        assert!(p.homogeneous_component(3).is_zero());
        let s2 = sum(&[one, x1.clone(), x2.clone(), prod(&x1, &x1), prod(&x1, &x2), prod(&x2, &x2)]);
        assert_eq!(s2.homogeneous_component(2), sum(&[prod(&x1, &x1), prod(&x1, &x2), prod(&x2, &x2)]));
    }

    #[test]
    fn substitute_examples() {
        let f5 = f(5);
        let one = f5.element(1).unwrap();
        let e1 = MPoly::elementary_symmetric(1, 3, &f5).unwrap();
        let got = e1.substitute(&[(3, Subst::Value(one.clone()))]).unwrap();
        let want = sum(&[x(&f5, 3, 1), x(&f5, 3, 2), MPoly::constant(&f5, 3, 1).unwrap()]);
        assert_eq!(got, want);

        let x1x2 = prod(&x(&f5, 2, 1), &x(&f5, 2, 2));
        let v = x1x2
            .substitute(&[
                (1, Subst::Value(f5.element(2).unwrap())),
                (2, Subst::Value(f5.element(3).unwrap())),
            ])
            .unwrap();
        assert_eq!(v.as_constant(), Some(1));

        // h_2(x1, x2, x3) = e1^2 - e2, then x3 := 1
        let e2 = MPoly::elementary_symmetric(2, 3, &f5).unwrap();
        let h2 = prod(&e1, &e1).sub(&e2).unwrap();
        let spec = h2.substitute(&[(3, Subst::Value(one))]).unwrap().project(&[1, 2]).unwrap();
        let (y1, y2) = (x(&f5, 2, 1), x(&f5, 2, 2));
        let want = sum(&[
            prod(&y1, &y1),
            prod(&y1, &y2),
            prod(&y2, &y2),
            y1.clone(),
            y2.clone(),
            MPoly::constant(&f5, 2, 1).unwrap(),
        ]);
        assert_eq!(spec, want);
    }

    #[test]
    fn substitute_errors() {
        let f5 = f(5);
        let p = x(&f5, 2, 1);
        let other = f(7).element(1).unwrap();
        assert!(matches!(p.substitute(&[(1, Subst::Value(other))]), Err(Error::FieldMismatch)));
        assert!(matches!(MPoly::var(&f5, 2, 0), Err(Error::VariableIndex { .. })));
        assert!(matches!(MPoly::var(&f5, 2, 3), Err(Error::VariableIndex { .. })));
        assert!(p.project(&[2]).is_err());
    }

    #[test]
    fn display_and_json() {
        let f5 = f(5);
        let p = sum(&[
            prod(&x(&f5, 2, 1), &x(&f5, 2, 1)).scale(3),
            x(&f5, 2, 2),
            MPoly::constant(&f5, 2, 4).unwrap(),
        ]);
        assert_eq!(p.to_string(), "3*x1^2 + x2 + 4");
        let j = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(
            j,
            r#"{"field":{"p":5,"m":1},"vars":2,"terms":[{"exp":[2,0],"coeff":3},{"exp":[0,1],"coeff":1},{"exp":[0,0],"coeff":4}]}"#
        );
        assert_eq!(MPoly::from_json(&p.to_json()).unwrap(), p);
    }

    fn random_mpoly(field: &Field, vars: usize, max_deg: u32, rng: &mut ChaCha8Rng) -> MPoly {
        let n = rng.gen_range(0..6);
        let terms: Vec<(Vec<u32>, u64)> = (0..n)
            .map(|_| {
                let mut exps = vec![0u32; vars];
                let mut budget = rng.gen_range(0..=max_deg);
                for e in exps.iter_mut() {
                    let take = rng.gen_range(0..=budget);
                    *e = take;
                    budget -= take;
                }
                (exps, rng.gen_range(0..field.order()))
            })
            .collect();
        MPoly::from_terms(field, vars, terms).unwrap()
    }

    #[test]
    fn ring_axioms_sampled() {
        let f101 = f(101);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let vars = rng.gen_range(1..=4);
            let a = random_mpoly(&f101, vars, 5, &mut rng);
            let b = random_mpoly(&f101, vars, 5, &mut rng);
            let c = random_mpoly(&f101, vars, 5, &mut rng);
            assert_eq!(prod(&prod(&a, &b), &c), prod(&a, &prod(&b, &c)));
            assert_eq!(prod(&a, &b), prod(&b, &a));
            assert_eq!(prod(&a, &b.add(&c).unwrap()), prod(&a, &b).add(&prod(&a, &c)).unwrap());
            assert!(a.sub(&a).unwrap().is_zero());

            let total = match a.total_degree() {
                None => MPoly::zero(&f101, vars),
                Some(td) => (0..=td)
                    .map(|d| a.homogeneous_component(d))
                    .fold(MPoly::zero(&f101, vars), |s, h| s.add(&h).unwrap()),
            };
            assert_eq!(total, a);

            let point: Vec<u64> = (0..vars).map(|_| rng.gen_range(0..101)).collect();
            let sigma: Vec<(usize, Subst)> = (1..=vars)
                .filter(|_| rng.gen_bool(0.6))
                .map(|i| (i, Subst::Value(f101.element(point[i - 1]).unwrap())))
                .collect();
            let lhs = prod(&a, &b).substitute(&sigma).unwrap();
            let rhs = prod(&a.substitute(&sigma).unwrap(), &b.substitute(&sigma).unwrap());
            assert_eq!(lhs, rhs);
            assert_eq!(
                prod(&a, &b).evaluate(&point).unwrap(),
                f101.mul(a.evaluate(&point).unwrap(), b.evaluate(&point).unwrap())
            );
        }
    }

    /// (T - x_1)...(T - x_v) = sum_i (-1)^i e_i T^{v-i}, checked at random
    /// points against the direct product.
    #[test]
    fn vieta_expansion() {
        let f101 = f(101);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for v in 1..=4 {
            let es: Vec<MPoly> = (0..=v).map(|i| MPoly::elementary_symmetric(i, v, &f101).unwrap()).collect();
            for _ in 0..50 {
                let point: Vec<u64> = (0..v).map(|_| rng.gen_range(0..101)).collect();
                let t = rng.gen_range(0..101);
                let direct = point.iter().fold(1, |acc, &xi| f101.mul(acc, f101.sub(t, xi)));
                let via_e = (0..=v).fold(0, |acc, i| {
                    let mut term = f101.mul(es[i].evaluate(&point).unwrap(), f101.pow(t, (v - i) as u64));
                    if i % 2 == 1 {
                        term = f101.neg(term);
                    }
                    f101.add(acc, term)
                });
                assert_eq!(direct, via_e);
            }
        }
    }

    #[test]
    fn derivative_in_small_characteristic() {
        let f3 = f(3);
        let x1 = x(&f3, 2, 1);
        let cube = prod(&prod(&x1, &x1), &x1);
        assert!(cube.derivative(1).unwrap().is_zero());
        let sq = prod(&x1, &x(&f3, 2, 2));
        assert_eq!(sq.derivative(2).unwrap(), x1);
        assert!(sq.derivative(3).is_err());
    }

    #[test]
    fn graded_lex_order() {
        let a = Monomial::new(vec![2, 0]);
        let b = Monomial::new(vec![1, 1]);
        let c = Monomial::new(vec![0, 3]);
        assert!(a > b);
        assert!(c > a);
        assert!(Monomial::new(vec![0, 0]) < Monomial::new(vec![0, 1]));
    }
}
