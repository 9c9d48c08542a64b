//! Subset sum over a finite field, reduced to deciding deep holes.
//!
//! An instance `(A, b, s)` asks for an `s`-subset of `A` summing to `-b`.
//! It maps to the generalized code `[|A|, s-1]` over `A` and the word
//! generated by `f = x^s + b x^{s-1}`. A codeword `g` agreeing with the word
//! on `s` positions makes `f - g` monic of degree `s` with those positions
//! as roots, so `f - g = prod (x - a_i)` and comparing `x^{s-1}`
//! coefficients gives `sum a_i = -b`. The converse runs the same way.
//! In characteristic 2, `-b = b`.

use serde::{Deserialize, Serialize};

use crate::comb::{binomial, checked_pow, Combinations};
use crate::error::{check_budget, Error, Result};
use crate::gf::{Field, FieldSpec};
use crate::rscode::{EvalSet, Oracle, RSCode, ReceivedWord};
use crate::upoly::UPoly;

/// Cap on `C(|A|, s)` for the subset side of [`verify_equivalence`].
pub const SUBSET_SUM_BUDGET: u128 = 1_000_000;
/// Cap on `q^{s-1}` for the codeword side of [`verify_equivalence`].
pub const CODEWORD_BUDGET: u128 = 1_000_000;

/// `{"field": FieldSpec, "set": [..], "target": int, "size": int}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetSumJson {
    pub field: FieldSpec,
    pub set: Vec<u64>,
    pub target: u64,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetSumInstance {
    field: Field,
    set: Vec<u64>,
    target: u64,
    size: usize,
}

impl SubsetSumInstance {
    /// Elements of `set` must be distinct field elements and `2 <= size <= |set|`.
    pub fn new(field: &Field, set: Vec<u64>, target: u64, size: usize) -> Result<SubsetSumInstance> {
        for (i, &a) in set.iter().enumerate() {
            field.check(a)?;
            if set[..i].contains(&a) {
                return Err(Error::RepeatedCoordinate(a));
            }
        }
        field.check(target)?;
        if size < 2 {
            return Err(Error::InvalidParameter(format!("subset size must be at least 2, got {size}")));
        }
        if size > set.len() {
            return Err(Error::InvalidParameter(format!(
                "subset size {size} exceeds set size {}",
                set.len()
            )));
        }
        Ok(SubsetSumInstance { field: field.clone(), set, target, size })
    }

    pub fn from_json(json: &SubsetSumJson) -> Result<SubsetSumInstance> {
        let field = Field::from_spec(&json.field)?;
        SubsetSumInstance::new(&field, json.set.clone(), json.target, json.size)
    }

    pub fn to_json(&self) -> SubsetSumJson {
        SubsetSumJson {
            field: self.field.spec().clone(),
            set: self.set.clone(),
            target: self.target,
            size: self.size,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn set(&self) -> &[u64] {
        &self.set
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// First `size`-subset of `set`, in lexicographic position order, whose
    /// sum is `-target`.
    pub fn solve(&self) -> Result<Option<Vec<u64>>> {
        let total = binomial(self.set.len() as u64, self.size as u64);
        check_budget("subset enumeration", total, SUBSET_SUM_BUDGET)?;
        let f = &self.field;
        let goal = f.neg(self.target);
        Ok(Combinations::new(self.set.len(), self.size)
            .map(|idx| idx.into_iter().map(|i| self.set[i]).collect::<Vec<_>>())
            .find(|sub| sub.iter().fold(0, |acc, &a| f.add(acc, a)) == goal))
    }
}

/// The reduced code and word, with the word's generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduced {
    pub code: RSCode,
    pub word: ReceivedWord,
    /// `x^s + b x^{s-1}`.
    pub generator: UPoly,
}

/// Maps the instance to `[|A|, s-1]` over `A` and the word generated by
/// `x^s + b x^{s-1}`. Requires `|A| > s`.
pub fn subset_sum_to_deephole(inst: &SubsetSumInstance) -> Result<Reduced> {
    let s = inst.size;
    if inst.set.len() <= s {
        return Err(Error::InvalidParameter(format!(
            "set size {} must exceed subset size {s}",
            inst.set.len()
        )));
    }
    let code = RSCode::new(&inst.field, &EvalSet::Explicit(inst.set.clone()), s - 1)?;
    let mut coeffs = vec![0u64; s + 1];
    coeffs[s] = 1;
    coeffs[s - 1] = inst.target;
    let generator = UPoly::new(&inst.field, coeffs)?;
    let word = code.word_from_poly(&generator)?;
    Ok(Reduced { code, word, generator })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub instance: SubsetSumJson,
    /// Some `s`-subset sums to `-b`.
    pub subset_exists: bool,
    pub subset: Option<Vec<u64>>,
    pub deep_hole: bool,
    pub distance: usize,
    /// `subset_exists == !deep_hole`.
    pub holds: bool,
}

pub fn verify_equivalence(inst: &SubsetSumInstance) -> Result<EquivalenceReport> {
    verify_equivalence_jobs(inst, 1)
}

/// Decides both sides by exhaustive search, independently.
pub fn verify_equivalence_jobs(inst: &SubsetSumInstance, jobs: usize) -> Result<EquivalenceReport> {
    let reduced = subset_sum_to_deephole(inst)?;
    let codewords = checked_pow(inst.field.order(), (inst.size - 1) as u64);
    check_budget("codeword enumeration", codewords, CODEWORD_BUDGET)?;
    let subset = inst.solve()?;
    let verdict = reduced.code.distance_to_code_jobs(&reduced.word, Oracle::CodewordEnumeration, jobs)?;
    let subset_exists = subset.is_some();
    Ok(EquivalenceReport {
        instance: inst.to_json(),
        subset_exists,
        subset,
        deep_hole: verdict.is_deep_hole,
        distance: verdict.distance,
        holds: subset_exists != verdict.is_deep_hole,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f8() -> Field {
        Field::with_order(8).unwrap()
    }

    #[test]
    fn f8_examples() {
        let f = f8();
        let yes = SubsetSumInstance::new(&f, vec![1, 2, 4], 3, 2).unwrap();
        let r = subset_sum_to_deephole(&yes).unwrap();
        assert_eq!((r.code.n(), r.code.k()), (3, 1));
        assert_eq!(r.generator.coeffs(), &[0, 3, 1]);
        let rep = verify_equivalence(&yes).unwrap();
        assert_eq!(rep.subset, Some(vec![1, 2]));
        assert!(!rep.deep_hole && rep.holds);

        let no = SubsetSumInstance::new(&f, vec![1, 2, 4], 7, 2).unwrap();
        let rep = verify_equivalence(&no).unwrap();
        assert_eq!(rep.subset, None);
        assert!(rep.deep_hole && rep.holds);
        assert_eq!(rep.distance, 2);
    }

    #[test]
    fn every_target_over_f8() {
        let f = f8();
        let pair_sums: Vec<u64> = vec![f.add(1, 2), f.add(1, 4), f.add(2, 4)];
        assert_eq!(pair_sums, vec![3, 5, 6]);
        for b in 0..8 {
            let inst = SubsetSumInstance::new(&f, vec![1, 2, 4], b, 2).unwrap();
            let rep = verify_equivalence(&inst).unwrap();
            assert!(rep.holds, "b = {b}");
            assert_eq!(rep.subset_exists, pair_sums.contains(&b), "b = {b}");
        }
    }

    #[test]
    fn invalid_instances() {
        let f = f8();
        assert!(SubsetSumInstance::new(&f, vec![1, 2, 4], 3, 1).is_err());
        assert!(SubsetSumInstance::new(&f, vec![1, 2, 2], 3, 2).is_err());
        assert!(SubsetSumInstance::new(&f, vec![1, 2, 9], 3, 2).is_err());
        let full = SubsetSumInstance::new(&f, vec![1, 2], 3, 2).unwrap();
        assert!(subset_sum_to_deephole(&full).is_err());
    }

    #[test]
    fn budgets() {
        let f = Field::prime(1009).unwrap();
        let inst = SubsetSumInstance::new(&f, (0..20).collect(), 5, 4).unwrap();
        assert!(verify_equivalence(&inst).unwrap_err().is_budget());
    }

    fn random_instance(rng: &mut ChaCha8Rng, f: &Field) -> SubsetSumInstance {
        let q = f.order();
        let mut elems: Vec<u64> = (0..q).collect();
        elems.shuffle(rng);
        let s = rng.gen_range(2..=3usize);
        let len = rng.gen_range(s + 1..=5.min(q as usize));
        SubsetSumInstance::new(f, elems[..len].to_vec(), rng.gen_range(0..q), s).unwrap()
    }

    #[test]
    fn equivalence_small_fields() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for q in [4u64, 5, 7, 8, 9, 16] {
            let f = Field::with_order(q).unwrap();
            for _ in 0..40 {
                let inst = random_instance(&mut rng, &f);
                let rep = verify_equivalence(&inst).unwrap();
                assert!(rep.holds, "{:?}", rep.instance);
            }
        }
    }

    #[test]
    fn odd_characteristic_uses_negated_target() {
        // in F_7, {1, 2} sums to 3 = -4
        let f = Field::prime(7).unwrap();
        let inst = SubsetSumInstance::new(&f, vec![1, 2, 5], 4, 2).unwrap();
        let rep = verify_equivalence(&inst).unwrap();
        assert_eq!(rep.subset, Some(vec![1, 2]));
        assert!(!rep.deep_hole);
        let plus = SubsetSumInstance::new(&f, vec![1, 2, 5], 3, 2).unwrap();
        let rep = verify_equivalence(&plus).unwrap();
        assert!(rep.holds);
        assert!(rep.deep_hole, "sum = +b must not count in odd characteristic");
    }

    #[test]
    fn enlarging_set_keeps_non_deep_holes() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for q in [5u64, 7, 8] {
            let f = Field::with_order(q).unwrap();
            for _ in 0..30 {
                let inst = random_instance(&mut rng, &f);
                let before = verify_equivalence(&inst).unwrap();
                let extra: Vec<u64> = (0..q).filter(|a| !inst.set().contains(a)).collect();
                let Some(&a) = extra.choose(&mut rng) else { continue };
                let mut set = inst.set().to_vec();
                set.push(a);
                let bigger = SubsetSumInstance::new(&f, set, inst.target(), inst.size()).unwrap();
                let after = verify_equivalence(&bigger).unwrap();
                if !before.deep_hole {
                    assert!(!after.deep_hole, "{:?}", bigger.to_json());
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"field":{"p":2,"m":3,"modulus":[1,1,0,1]},"set":[1,2,4],"target":3,"size":2}"#;
        let json: SubsetSumJson = serde_json::from_str(text).unwrap();
        let inst = SubsetSumInstance::from_json(&json).unwrap();
        assert_eq!(serde_json::to_string(&inst.to_json()).unwrap(), text);
    }
}
