use std::ffi::{c_char, CStr, CString};
use std::ptr;

use trinity_ffi::*;

const T3: &str = include_str!("../../core/fixtures/t3.trinity");
const MIXED: &str = include_str!("../../core/fixtures/fig6.trinity");
const TREFOIL: &str = include_str!("../../core/fixtures/trefoil.curve");

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { trinity_string_free(s) };
    out
}

fn load(text: &str) -> *mut TrinityHandle {
    let c = CString::new(text).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { trinity_load(c.as_ptr(), &mut h) }, TrinityStatus::Ok);
    h
}

#[test]
fn torus_queries() {
    let h = load(T3);
    unsafe {
        assert_eq!(trinity_black_count(h), 3);
        assert_eq!(trinity_genus(h), 1);
        let mut n = 0;
        assert_eq!(trinity_state_count(h, &mut n), TrinityStatus::Ok);
        assert_eq!(n, 6);
        let mut counts = [0i64; 3];
        assert_eq!(trinity_rho(h, counts.as_mut_ptr()), TrinityStatus::NotPlanar);
        assert!(take(trinity_last_error()).contains("planar"));
        let mut s = ptr::null_mut();
        assert_eq!(trinity_canonical_digest(h, &mut s), TrinityStatus::Ok);
        assert_eq!(take(s).len(), 64);
        trinity_free(h);
    }
}

#[test]
fn mixed_components_and_verify() {
    let h = load(MIXED);
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(trinity_components(h, &mut s), TrinityStatus::Ok);
        assert_eq!(take(s), "1 cyclic (14), 6 acyclic (4 isolated)");
        let mut report = ptr::null_mut();
        assert_eq!(trinity_verify(h, &mut report), TrinityStatus::Ok);
        assert!(take(report).starts_with("PASS"));
        trinity_free(h);
    }
}

#[test]
fn planar_curve() {
    let c = CString::new(TREFOIL).unwrap();
    let mut h = ptr::null_mut();
    unsafe {
        assert_eq!(trinity_from_curve(c.as_ptr(), &mut h), TrinityStatus::Ok);
        let mut n = 0;
        trinity_state_count(h, &mut n);
        let mut counts = [0i64; 3];
        assert_eq!(trinity_rho(h, counts.as_mut_ptr()), TrinityStatus::Ok);
        assert_eq!(counts, [n as i64; 3]);
        let mut s = ptr::null_mut();
        assert_eq!(trinity_clocked_state(h, &mut s), TrinityStatus::Ok);
        assert!(take(s).starts_with("state"));
        trinity_free(h);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(trinity_load(ptr::null(), &mut h), TrinityStatus::NullArgument);
        let bad = CString::new("vertex zero R").unwrap();
        assert_eq!(trinity_load(bad.as_ptr(), &mut h), TrinityStatus::Parse);
        assert!(take(trinity_last_error()).contains("line 1"));
        assert!(h.is_null());
        let mut n = 0;
        assert_eq!(trinity_state_count(ptr::null(), &mut n), TrinityStatus::NullArgument);
        assert_eq!(trinity_genus(ptr::null()), u32::MAX);
        trinity_free(ptr::null_mut());
        trinity_string_free(ptr::null_mut());
        // a successful call clears the message
        let t = load(T3);
        assert!(trinity_last_error().is_null());
        trinity_free(t);
    }
}

#[test]
fn header_declares_the_api() {
    let header = include_str!("../include/trinity.h");
    for name in ["trinity_load", "trinity_free", "trinity_last_error", "trinity_string_free", "TrinityHandle"] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

#[test]
fn header_compiles_as_c() {
    let Some(cc) = which_cc() else { return };
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("probe.c");
    let include = concat!(env!("CARGO_MANIFEST_DIR"), "/include");
    std::fs::write(
        &src,
        "#include \"trinity.h\"\nint main(void) { TrinityHandle *h = 0; trinity_free(h); return TRINITY_STATUS_OK; }\n",
    )
    .unwrap();
    let status = std::process::Command::new(cc).args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I", include]).arg(&src).status().unwrap();
    assert!(status.success());
}

fn which_cc() -> Option<&'static str> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|cc| std::process::Command::new(cc).arg("--version").output().is_ok_and(|o| o.status.success()))
}
