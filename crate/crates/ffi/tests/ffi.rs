use std::ffi::CStr;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use deephole_ffi::*;

fn field(q: u64) -> *mut DhField {
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { dh_field_new(q, ptr::null(), 0, &mut f) }, DhStatus::Ok);
    f
}

fn last_error() -> String {
    let p = dh_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn field_arithmetic() {
    let f = field(8);
    unsafe {
        assert_eq!((dh_field_order(f), dh_field_characteristic(f), dh_field_degree(f)), (8, 2, 3));
        let mut r = 0;
        assert_eq!(dh_field_op(f, DhOp::Mul, 2, 4, &mut r), DhStatus::Ok);
        // t * t^2 = t^3 = t + 1 modulo t^3 + t + 1
        assert_eq!(r, 3);
        for a in 1..8 {
            assert_eq!(dh_field_op(f, DhOp::Inv, a, 0, &mut r), DhStatus::Ok);
            let mut one = 0;
            dh_field_op(f, DhOp::Mul, a, r, &mut one);
            assert_eq!(one, 1);
        }
        assert_eq!(dh_field_op(f, DhOp::Inv, 0, 0, &mut r), DhStatus::DivisionByZero);
        assert_eq!(dh_field_op(f, DhOp::Add, 9, 1, &mut r), DhStatus::NotInField);
        assert!(last_error().contains('9'));
        assert_eq!(dh_field_op(ptr::null(), DhOp::Add, 1, 1, &mut r), DhStatus::NullPointer);
        assert_eq!(dh_field_op(f, DhOp::Add, 1, 1, ptr::null_mut()), DhStatus::NullPointer);
        dh_field_free(f);
    }
}

#[test]
fn field_construction_errors() {
    let mut f = ptr::null_mut();
    unsafe {
        assert_eq!(dh_field_new(6, ptr::null(), 0, &mut f), DhStatus::InvalidField);
        assert!(f.is_null());
        let reducible = [1u64, 0, 0, 1];
        assert_eq!(dh_field_new(8, reducible.as_ptr(), 4, &mut f), DhStatus::InvalidField);
        let good = [1u64, 0, 1, 1];
        assert_eq!(dh_field_new(8, good.as_ptr(), 4, &mut f), DhStatus::Ok);
        let mut r = 0;
        dh_field_op(f, DhOp::Mul, 4, 2, &mut r);
        // t^3 = t^2 + 1 modulo t^3 + t^2 + 1
        assert_eq!(r, 5);
        dh_field_free(f);
        dh_field_free(ptr::null_mut());
    }
}

#[test]
fn code_distance_and_witness() {
    let f = field(5);
    let mut code = ptr::null_mut();
    unsafe {
        assert_eq!(dh_code_new(f, DhEvalSet::Star, ptr::null(), 0, 2, &mut code), DhStatus::Ok);
        // the code owns its field
        dh_field_free(f);
        assert_eq!((dh_code_n(code), dh_code_k(code)), (4, 2));
        let mut eval = [0u64; 4];
        assert_eq!(dh_code_eval_set(code, eval.as_mut_ptr(), 4), DhStatus::Ok);
        assert_eq!(eval, [1, 2, 3, 4]);

        let x2 = [0u64, 0, 1];
        let mut word = [0u64; 4];
        assert_eq!(dh_code_word_from_poly(code, x2.as_ptr(), 3, word.as_mut_ptr(), 4), DhStatus::Ok);
        assert_eq!(word, [1, 4, 4, 1]);
        let mut small = [0u64; 3];
        assert_eq!(dh_code_word_from_poly(code, x2.as_ptr(), 3, small.as_mut_ptr(), 3), DhStatus::OutOfRange);

        for oracle in [DhOracle::SubsetInterpolation, DhOracle::CodewordEnumeration] {
            let mut v = DhVerdict::default();
            let mut witness = [9u64; 2];
            assert_eq!(
                dh_code_distance(code, word.as_ptr(), 4, oracle, 2, &mut v, witness.as_mut_ptr(), 2),
                DhStatus::Ok
            );
            assert_eq!(v, DhVerdict { is_deep_hole: true, distance: 2, max_agreement: 2 });
            // minimal-encoding nearest generator is the constant 1
            assert_eq!(witness, [1, 0]);
        }
        let mut v = DhVerdict::default();
        assert_eq!(
            dh_code_distance(
                code,
                word.as_ptr(),
                3,
                DhOracle::SubsetInterpolation,
                1,
                &mut v,
                ptr::null_mut(),
                0
            ),
            DhStatus::InvalidArgument
        );
        let mut count = 0;
        assert_eq!(dh_code_count_deep_holes(code, 2, &mut count), DhStatus::Ok);
        // on F_5^*, x^3 = x^{-1}: deep holes are a x^2 + g and a x^3 + g, deg g <= 1
        let mut family = std::collections::HashSet::new();
        for a in 1..5u64 {
            for (g0, g1) in (0..25u64).map(|i| (i % 5, i / 5)) {
                for deg in [2u32, 3] {
                    family.insert([1u64, 2, 3, 4].map(|x| (a * x.pow(deg) + g1 * x + g0) % 5));
                }
            }
        }
        assert_eq!(count, family.len() as u64);
        assert_eq!(count, 200);
        dh_code_free(code);
    }
}

#[test]
fn explicit_code_and_budget() {
    let f = field(4);
    let mut code = ptr::null_mut();
    unsafe {
        let repeated = [0u64, 1, 1];
        assert_eq!(
            dh_code_new(f, DhEvalSet::Explicit, repeated.as_ptr(), 3, 1, &mut code),
            DhStatus::InvalidArgument
        );
        let eval = [0u64, 1, 2];
        assert_eq!(dh_code_new(f, DhEvalSet::Explicit, eval.as_ptr(), 3, 1, &mut code), DhStatus::Ok);
        let mut count = 0;
        dh_code_count_deep_holes(code, 1, &mut count);
        assert!(count >= 12);
        dh_code_free(code);
        dh_field_free(f);

        let big = field(65536);
        let eval: Vec<u64> = (0..10).collect();
        assert_eq!(dh_code_new(big, DhEvalSet::Explicit, eval.as_ptr(), 10, 3, &mut code), DhStatus::Ok);
        let word = [0u64, 0, 0, 0, 0, 0, 0, 0, 0, 1];
        let mut v = DhVerdict::default();
        assert_eq!(
            dh_code_distance(
                code,
                word.as_ptr(),
                10,
                DhOracle::CodewordEnumeration,
                1,
                &mut v,
                ptr::null_mut(),
                0
            ),
            DhStatus::BudgetExceeded
        );
        dh_code_free(code);
        dh_field_free(big);
    }
}

#[test]
fn bounds() {
    unsafe {
        let mut r = DhBoundReport::default();
        assert_eq!(dh_theorem_margin(401, 2, 1, DhVariant::Published, &mut r), DhStatus::Ok);
        assert_eq!((r.margin, r.applies, r.common_degree), (4812, true, 4));
        assert_eq!(dh_theorem_margin(401, 2, 1, DhVariant::Corrected, &mut r), DhStatus::Ok);
        assert_eq!(r.margin, 401 * (401 - 1301));
        assert!(!r.applies);
        assert_eq!(dh_theorem_margin(12, 2, 1, DhVariant::Corrected, &mut r), DhStatus::InvalidArgument);
        assert_eq!(dh_theorem_margin(1 << 31, 4, 1, DhVariant::Corrected, &mut r), DhStatus::OutOfRange);
        let mut x = 0;
        assert_eq!(dh_cafure_matera_lower(103, 2, 2, &mut x), DhStatus::Ok);
        assert_eq!(x, 2);
        assert_eq!(dh_schmidt_upper(7, 3, 4, &mut x), DhStatus::Ok);
        assert_eq!(x, 2688);
    }
}

#[test]
fn point_search() {
    unsafe {
        let mut point = [0u64; 3];
        let mut found = false;
        let f7 = field(7);
        let low = [0u64];
        let status = dh_find_distinct_point(
            f7,
            2,
            1,
            low.as_ptr(),
            DhPointConstraint::NonzeroDistinct,
            2,
            point.as_mut_ptr(),
            3,
            &mut found,
        );
        assert_eq!(status, DhStatus::Ok);
        assert!(found);
        assert_eq!(point, [1, 2, 4]);
        let status = dh_find_distinct_point(
            f7,
            2,
            1,
            low.as_ptr(),
            DhPointConstraint::NonzeroDistinct,
            1,
            point.as_mut_ptr(),
            2,
            &mut found,
        );
        assert_eq!(status, DhStatus::OutOfRange);
        dh_field_free(f7);

        let f5 = field(5);
        let status = dh_find_distinct_point(
            f5,
            2,
            1,
            low.as_ptr(),
            DhPointConstraint::NonzeroDistinct,
            1,
            point.as_mut_ptr(),
            3,
            &mut found,
        );
        assert_eq!(status, DhStatus::Ok);
        assert!(!found);
        let status = dh_find_distinct_point(
            f5,
            2,
            1,
            low.as_ptr(),
            DhPointConstraint::DistinctOnly,
            1,
            point.as_mut_ptr(),
            3,
            &mut found,
        );
        assert_eq!(status, DhStatus::Ok);
        assert!(found);
        assert_eq!(point, [0, 1, 4]);
        dh_field_free(f5);
    }
}

#[test]
fn subset_sum() {
    let f = field(8);
    let set = [1u64, 2, 4];
    unsafe {
        for b in 0..8 {
            let mut r = DhEquivalence::default();
            assert_eq!(dh_subset_sum_equivalence(f, set.as_ptr(), 3, b, 2, &mut r), DhStatus::Ok);
            assert!(r.holds);
            assert_eq!(r.subset_exists, [3, 5, 6].contains(&b));
        }
        let mut r = DhEquivalence::default();
        assert_eq!(dh_subset_sum_equivalence(f, set.as_ptr(), 3, 3, 1, &mut r), DhStatus::InvalidArgument);
        dh_field_free(f);
    }
}

#[test]
fn version_and_error_are_c_strings() {
    let v = unsafe { CStr::from_ptr(dh_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

fn header() -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/deephole.h")).unwrap()
}

#[test]
fn header_declares_every_export() {
    let header = header();
    let source = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split_once("extern \"C\" fn ").map(|(_, rest)| rest.split('(').next().unwrap()))
        .collect();
    assert!(exports.len() >= 20, "{exports:?}");
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    for decl in
        ["typedef struct DhField DhField;", "typedef struct DhCode DhCode;", "DH_STATUS_BUDGET_EXCEEDED = 6"]
    {
        assert!(header.contains(decl), "{decl}");
    }
}

/// The newest staticlib next to this test binary; the uplifted copy in the
/// profile directory is only refreshed by `cargo build`.
fn staticlib() -> Option<PathBuf> {
    let exe = std::env::current_exe().unwrap();
    std::fs::read_dir(exe.parent()?)
        .ok()?
        .filter_map(|e| e.ok())
        .filter(|e| {
            let name = e.file_name();
            let name = name.to_string_lossy();
            name.starts_with("libdeephole_ffi") && name.ends_with(".a")
        })
        .max_by_key(|e| e.metadata().and_then(|m| m.modified()).ok())
        .map(|e| e.path())
}

#[test]
fn c_program_links_against_staticlib() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let lib = staticlib().expect("staticlib is built with the test target");
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler");
        return;
    }
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let exe = Path::new(env!("CARGO_TARGET_TMPDIR")).join("deephole_smoke");
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok "));
}
