//! C ABI over the `deephole` library.
//!
//! Fields and codes are opaque heap handles owned by the caller and released
//! with their `_free` function. Every fallible call returns a [`DhStatus`];
//! on failure [`dh_last_error`] describes the most recent error on the
//! calling thread. Outputs are written only on [`DhStatus::Ok`] unless noted.
//! Panics never cross the boundary; they surface as [`DhStatus::Internal`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use deephole::bounds::{self, Variant};
use deephole::error::Error;
use deephole::gf::{prime_power, Field};
use deephole::reduction::{verify_equivalence_jobs, SubsetSumInstance};
use deephole::rscode::{EvalSet, Oracle, RSCode};
use deephole::surface::{compute_l, MonicTail, PointConstraint, SearchMode};
use deephole::upoly::UPoly;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DhStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidField = 2,
    NotInField = 3,
    DivisionByZero = 4,
    InvalidArgument = 5,
    BudgetExceeded = 6,
    /// A result does not fit the output type or buffer.
    OutOfRange = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DhOp {
    Add = 0,
    Sub = 1,
    Mul = 2,
    Div = 3,
    Inv = 4,
    Neg = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DhEvalSet {
    /// All nonzero elements, ascending.
    Star = 0,
    /// All elements, ascending.
    Full = 1,
    /// The caller-supplied list.
    Explicit = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DhOracle {
    SubsetInterpolation = 0,
    CodewordEnumeration = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DhVariant {
    Published = 0,
    Corrected = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DhPointConstraint {
    NonzeroDistinct = 0,
    DistinctOnly = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DhVerdict {
    pub is_deep_hole: bool,
    pub distance: usize,
    pub max_agreement: usize,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DhBoundReport {
    pub main: i64,
    pub weil: i64,
    pub degree_power: i64,
    pub common_zero: i64,
    pub margin: i64,
    pub common_degree: u64,
    pub applies: bool,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DhEquivalence {
    pub subset_exists: bool,
    pub deep_hole: bool,
    pub distance: usize,
    pub holds: bool,
}

/// Opaque finite field handle.
pub struct DhField(Field);

/// Opaque Reed-Solomon code handle.
pub struct DhCode(RSCode);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(DhStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let status = match &e {
            Error::NotPrime(_) | Error::InvalidModulus(_) => DhStatus::InvalidField,
            Error::NotInField { .. } => DhStatus::NotInField,
            Error::ZeroInverse | Error::DivisionByZero => DhStatus::DivisionByZero,
            Error::BudgetExceeded { .. } => DhStatus::BudgetExceeded,
            _ => DhStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(DhStatus::NullPointer, format!("{what} is null"))
}

fn out_of_range(what: &str) -> Failure {
    Failure(DhStatus::OutOfRange, format!("{what} does not fit the output"))
}

/// Runs `body`, records any failure, and converts panics to `Internal`.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> DhStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => DhStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            DhStatus::Internal
        }
    }
}

/// # Safety
/// `ptr` must be null or valid for `len` reads.
unsafe fn slice<'a>(ptr: *const u64, len: usize, what: &str) -> Result<&'a [u64], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if ptr.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(ptr, len))
}

/// # Safety
/// `ptr` must be null or point to a live value of `T`.
unsafe fn handle<'a, T>(ptr: *const T, what: &str) -> Result<&'a T, Failure> {
    ptr.as_ref().ok_or_else(|| null(what))
}

/// # Safety
/// `ptr` must be null or valid for one write of `T`.
unsafe fn write<T>(ptr: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if ptr.is_null() {
        return Err(null(what));
    }
    ptr.write(value);
    Ok(())
}

/// Message for the last failed call on this thread, or null if none.
/// Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn dh_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn dh_version() -> *const c_char {
    static VERSION: &CStr =
        match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
            Ok(v) => v,
            Err(_) => panic!("version contains NUL"),
        };
    VERSION.as_ptr()
}

/// Creates `F_q`. `modulus` (ascending, monic, degree `m`) may be null to
/// use the default irreducible modulus.
///
/// # Safety
/// `modulus` must be null or valid for `modulus_len` reads; `out` must be
/// valid for one write.
#[no_mangle]
pub unsafe extern "C" fn dh_field_new(
    q: u64,
    modulus: *const u64,
    modulus_len: usize,
    out: *mut *mut DhField,
) -> DhStatus {
    guard(|| {
        let (p, m) = prime_power(q)
            .ok_or_else(|| Failure(DhStatus::InvalidField, format!("{q} is not a prime power")))?;
        let field = if modulus.is_null() {
            Field::with_order(q)?
        } else {
            Field::new(p, m, Some(slice(modulus, modulus_len, "modulus")?))?
        };
        write(out, Box::into_raw(Box::new(DhField(field))), "out")
    })
}

/// # Safety
/// `field` must be null or a handle from [`dh_field_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dh_field_free(field: *mut DhField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// Order `q`, or 0 for a null handle.
///
/// # Safety
/// `field` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dh_field_order(field: *const DhField) -> u64 {
    field.as_ref().map_or(0, |f| f.0.order())
}

/// Characteristic `p`, or 0 for a null handle.
///
/// # Safety
/// `field` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dh_field_characteristic(field: *const DhField) -> u64 {
    field.as_ref().map_or(0, |f| f.0.characteristic())
}

/// Extension degree `m`, or 0 for a null handle.
///
/// # Safety
/// `field` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dh_field_degree(field: *const DhField) -> u32 {
    field.as_ref().map_or(0, |f| f.0.degree())
}

/// `a op b` on canonical encodings; `b` is ignored by `Inv` and `Neg`.
///
/// # Safety
/// `field` must be a live handle; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn dh_field_op(
    field: *const DhField,
    op: DhOp,
    a: u64,
    b: u64,
    out: *mut u64,
) -> DhStatus {
    guard(|| {
        let f = &handle(field, "field")?.0;
        f.check(a)?;
        if matches!(op, DhOp::Add | DhOp::Sub | DhOp::Mul | DhOp::Div) {
            f.check(b)?;
        }
        let r = match op {
            DhOp::Add => f.add(a, b),
            DhOp::Sub => f.sub(a, b),
            DhOp::Mul => f.mul(a, b),
            DhOp::Div => f.div(a, b).ok_or(Error::ZeroInverse)?,
            DhOp::Inv => f.inv(a).ok_or(Error::ZeroInverse)?,
            DhOp::Neg => f.neg(a),
        };
        write(out, r, "out")
    })
}

/// Creates the `[n, k]` code over `field`. `eval` is read only for
/// [`DhEvalSet::Explicit`]. The code keeps its own reference to the field.
///
/// # Safety
/// `field` must be a live handle; `eval` must be valid for `eval_len` reads
/// when used; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn dh_code_new(
    field: *const DhField,
    kind: DhEvalSet,
    eval: *const u64,
    eval_len: usize,
    k: usize,
    out: *mut *mut DhCode,
) -> DhStatus {
    guard(|| {
        let f = &handle(field, "field")?.0;
        let set = match kind {
            DhEvalSet::Star => EvalSet::star(),
            DhEvalSet::Full => EvalSet::full(),
            DhEvalSet::Explicit => EvalSet::Explicit(slice(eval, eval_len, "eval")?.to_vec()),
        };
        let code = RSCode::new(f, &set, k)?;
        write(out, Box::into_raw(Box::new(DhCode(code))), "out")
    })
}

/// # Safety
/// `code` must be null or a handle from [`dh_code_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dh_code_free(code: *mut DhCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Length `n`, or 0 for a null handle.
///
/// # Safety
/// `code` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dh_code_n(code: *const DhCode) -> usize {
    code.as_ref().map_or(0, |c| c.0.n())
}

/// Dimension `k`, or 0 for a null handle.
///
/// # Safety
/// `code` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dh_code_k(code: *const DhCode) -> usize {
    code.as_ref().map_or(0, |c| c.0.k())
}

/// Copies the evaluation set into `out` (capacity `cap >= n`).
///
/// # Safety
/// `code` must be a live handle; `out` must be valid for `cap` writes.
#[no_mangle]
pub unsafe extern "C" fn dh_code_eval_set(code: *const DhCode, out: *mut u64, cap: usize) -> DhStatus {
    guard(|| {
        let c = &handle(code, "code")?.0;
        copy_out(c.eval_set(), out, cap, "evaluation set")
    })
}

/// # Safety
/// `out` must be valid for `cap` writes.
unsafe fn copy_out(values: &[u64], out: *mut u64, cap: usize, what: &str) -> Result<(), Failure> {
    if cap < values.len() {
        return Err(out_of_range(what));
    }
    if values.is_empty() {
        return Ok(());
    }
    if out.is_null() {
        return Err(null("out"));
    }
    ptr::copy_nonoverlapping(values.as_ptr(), out, values.len());
    Ok(())
}

/// Evaluates the polynomial `sum coeffs[i] x^i` (degree below `n`) on the
/// evaluation set, writing `n` values to `word`.
///
/// # Safety
/// `code` must be a live handle; `coeffs` valid for `len` reads; `word`
/// valid for `cap` writes.
#[no_mangle]
pub unsafe extern "C" fn dh_code_word_from_poly(
    code: *const DhCode,
    coeffs: *const u64,
    len: usize,
    word: *mut u64,
    cap: usize,
) -> DhStatus {
    guard(|| {
        let c = &handle(code, "code")?.0;
        let g = UPoly::new(c.field(), slice(coeffs, len, "coeffs")?.to_vec())?;
        let w = c.word_from_poly(&g)?;
        copy_out(w.values(), word, cap, "word")
    })
}

/// Exact distance from `word` (length `n`) to the code. When `witness` is
/// not null it receives the `k` coefficients of a nearest codeword's
/// generator, ascending.
///
/// # Safety
/// `code` must be a live handle; `word` valid for `len` reads; `verdict`
/// valid for one write; `witness` null or valid for `witness_cap` writes.
#[no_mangle]
pub unsafe extern "C" fn dh_code_distance(
    code: *const DhCode,
    word: *const u64,
    len: usize,
    oracle: DhOracle,
    jobs: usize,
    verdict: *mut DhVerdict,
    witness: *mut u64,
    witness_cap: usize,
) -> DhStatus {
    guard(|| {
        let c = &handle(code, "code")?.0;
        let w = c.word(slice(word, len, "word")?.to_vec())?;
        let oracle = match oracle {
            DhOracle::SubsetInterpolation => Oracle::SubsetInterpolation,
            DhOracle::CodewordEnumeration => Oracle::CodewordEnumeration,
        };
        let v = c.distance_to_code_jobs(&w, oracle, jobs.max(1))?;
        if !witness.is_null() {
            let mut coeffs = v.witness.coeffs().to_vec();
            coeffs.resize(c.k(), 0);
            copy_out(&coeffs, witness, witness_cap, "witness")?;
        }
        write(
            verdict,
            DhVerdict { is_deep_hole: v.is_deep_hole, distance: v.distance, max_agreement: v.max_agreement },
            "verdict",
        )
    })
}

/// Number of deep holes among all `q^n` words.
///
/// # Safety
/// `code` must be a live handle; `count` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn dh_code_count_deep_holes(
    code: *const DhCode,
    jobs: usize,
    count: *mut u64,
) -> DhStatus {
    guard(|| {
        let c = &handle(code, "code")?.0;
        let census = c.enumerate_deep_holes(0, jobs.max(1))?;
        let n = u64::try_from(census.count).map_err(|_| out_of_range("count"))?;
        write(count, n, "count")
    })
}

fn to_i64(x: i128, what: &str) -> Result<i64, Failure> {
    i64::try_from(x).map_err(|_| out_of_range(what))
}

/// Exact margin for `(q, k, d)`. Fails with `OutOfRange` when a term
/// exceeds 64 bits.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn dh_theorem_margin(
    q: u64,
    k: u64,
    d: u64,
    variant: DhVariant,
    out: *mut DhBoundReport,
) -> DhStatus {
    guard(|| {
        let variant = match variant {
            DhVariant::Published => Variant::Published,
            DhVariant::Corrected => Variant::Corrected,
        };
        let r = bounds::theorem_margin(q, k, d, variant)?;
        let report = DhBoundReport {
            main: to_i64(r.terms.main, "main term")?,
            weil: to_i64(r.terms.weil, "weil term")?,
            degree_power: to_i64(r.terms.degree_power, "degree term")?,
            common_zero: to_i64(r.terms.common_zero, "common-zero term")?,
            margin: to_i64(r.margin, "margin")?,
            common_degree: r.common_degree,
            applies: r.applies,
        };
        write(out, report, "out")
    })
}

/// Lower bound on the points of an absolutely irreducible degree-`d`
/// hypersurface in `F_q^n`.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn dh_cafure_matera_lower(q: u64, n: u64, d: u64, out: *mut i64) -> DhStatus {
    guard(|| write(out, to_i64(bounds::cafure_matera_lower(q, n, d)?, "bound")?, "out"))
}

/// Upper bound `2 n D^3 q^{n-2}` on common zeros.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn dh_schmidt_upper(q: u64, n: u64, degree: u64, out: *mut i64) -> DhStatus {
    guard(|| write(out, to_i64(bounds::schmidt_upper(q, n, degree)?, "bound")?, "out"))
}

/// Searches for a zero of the hypersurface `L` of the tail
/// `x^{k+d} + sum low[i] x^{k+i}` with pairwise distinct coordinates.
/// Sets `*found`; on a hit writes the `k + 1` coordinates to `point`.
///
/// # Safety
/// `field` must be a live handle; `low` valid for `d` reads; `point` valid
/// for `cap` writes; `found` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn dh_find_distinct_point(
    field: *const DhField,
    k: usize,
    d: usize,
    low: *const u64,
    constraint: DhPointConstraint,
    jobs: usize,
    point: *mut u64,
    cap: usize,
    found: *mut bool,
) -> DhStatus {
    guard(|| {
        let f = &handle(field, "field")?.0;
        let tail = MonicTail::new(k, d, slice(low, d, "low")?.to_vec())?;
        if cap < k + 1 {
            return Err(out_of_range("point"));
        }
        let constraint = match constraint {
            DhPointConstraint::NonzeroDistinct => PointConstraint::NonzeroDistinct,
            DhPointConstraint::DistinctOnly => PointConstraint::DistinctOnly,
        };
        let inst = compute_l(&tail, f)?;
        let hit = inst.find_distinct_point(constraint, SearchMode::Exhaustive, jobs.max(1))?;
        if let Some(p) = &hit {
            copy_out(p, point, cap, "point")?;
        }
        write(found, hit.is_some(), "found")
    })
}

/// Decides the subset-sum instance `(set, target, size)` and the deep-hole
/// question it reduces to, independently.
///
/// # Safety
/// `field` must be a live handle; `set` valid for `len` reads; `out` valid
/// for one write.
#[no_mangle]
pub unsafe extern "C" fn dh_subset_sum_equivalence(
    field: *const DhField,
    set: *const u64,
    len: usize,
    target: u64,
    size: usize,
    out: *mut DhEquivalence,
) -> DhStatus {
    guard(|| {
        let f = &handle(field, "field")?.0;
        let inst = SubsetSumInstance::new(f, slice(set, len, "set")?.to_vec(), target, size)?;
        let r = verify_equivalence_jobs(&inst, 1)?;
        write(
            out,
            DhEquivalence {
                subset_exists: r.subset_exists,
                deep_hole: r.deep_hole,
                distance: r.distance,
                holds: r.holds,
            },
            "out",
        )
    })
}
