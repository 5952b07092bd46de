use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use liemult_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = lm_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn catalog(name: &str, param: Option<&str>) -> *mut LmAlgebra {
    let name = cstr(name);
    let param = param.map(cstr);
    let mut a = ptr::null_mut();
    let st = unsafe {
        lm_catalog_get(
            name.as_ptr(),
            param.as_ref().map_or(ptr::null(), |p| p.as_ptr()),
            &mut a,
        )
    };
    assert_eq!(st, LmStatus::Ok, "{}", last_error());
    a
}

#[test]
fn catalog_invariants() {
    let a = catalog("L6_26", None);
    let (mut n, mut m, mut s, mut t, mut cap) = (0usize, 0usize, 0i64, 0i64, false);
    unsafe {
        assert_eq!(lm_algebra_dim(a, &mut n), LmStatus::Ok);
        assert_eq!(lm_dim_multiplier(a, &mut m), LmStatus::Ok);
        assert_eq!(lm_s_invariant(a, &mut s), LmStatus::Ok);
        assert_eq!(lm_t_invariant(a, &mut t), LmStatus::Ok);
        assert_eq!(lm_is_capable(a, &mut cap), LmStatus::Ok);
        lm_algebra_free(a);
    }
    assert_eq!((n, m, s, t, cap), (6, 8, 3, 7, true));
    assert!(lm_last_error().is_null());
}

#[test]
fn parameterized_entry() {
    let a = catalog("L_{6,22}", Some("-1"));
    let mut m = 0usize;
    unsafe {
        assert_eq!(lm_dim_multiplier(a, &mut m), LmStatus::Ok);
        lm_algebra_free(a);
    }
    assert_eq!(m, 8);
}

#[test]
fn json_round_trip_and_report() {
    let json = cstr(r#"{"dim":3,"brackets":[{"i":1,"j":2,"terms":[{"k":3,"c":"1"}]}]}"#);
    let mut a = ptr::null_mut();
    unsafe {
        assert_eq!(lm_algebra_from_json(json.as_ptr(), &mut a), LmStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(lm_report_json(a, &mut text), LmStatus::Ok);
        let v: serde_json::Value =
            serde_json::from_str(CStr::from_ptr(text).to_str().unwrap()).unwrap();
        assert_eq!(v["dim_m"], 2);
        assert_eq!(v["t"], 1);
        lm_string_free(text);
        lm_algebra_free(a);
    }
}

#[test]
fn errors_map_to_codes() {
    let mut a = ptr::null_mut();
    let bad = cstr(
        r#"{"dim":4,"brackets":[
        {"i":1,"j":2,"terms":[{"k":3,"c":"1"}]},
        {"i":1,"j":3,"terms":[{"k":4,"c":"1"}]},
        {"i":2,"j":3,"terms":[{"k":4,"c":"1"}]},
        {"i":1,"j":4,"terms":[{"k":4,"c":"1"}]}]}"#,
    );
    unsafe {
        let st = lm_algebra_from_json(bad.as_ptr(), &mut a);
        assert!(
            matches!(st, LmStatus::JacobiViolation | LmStatus::NotNilpotent),
            "{st:?}"
        );
        assert!(a.is_null());
        assert!(last_error().starts_with("error["));

        assert_eq!(
            lm_catalog_get(cstr("L_{9,99}").as_ptr(), ptr::null(), &mut a),
            LmStatus::UnknownName
        );
        assert_eq!(
            lm_catalog_get(cstr("L_{6,19}").as_ptr(), cstr("0").as_ptr(), &mut a),
            LmStatus::ParamOutOfDomain
        );
        assert_eq!(
            lm_catalog_get(cstr("147E").as_ptr(), cstr("1").as_ptr(), &mut a),
            LmStatus::ParamOutOfDomain
        );
        assert_eq!(
            lm_algebra_from_json(cstr("{").as_ptr(), &mut a),
            LmStatus::ParseError
        );
        assert_eq!(
            lm_algebra_from_json(ptr::null(), &mut a),
            LmStatus::NullPointer
        );

        let ab = catalog("A(3)", None);
        let mut s = 0;
        assert_eq!(lm_s_invariant(ab, &mut s), LmStatus::AbelianInput);
        assert!(last_error().contains("s undefined for abelian algebras"));
        assert_eq!(lm_s_invariant(ab, ptr::null_mut()), LmStatus::AbelianInput);
        let mut n = 0usize;
        assert_eq!(lm_algebra_dim(ptr::null(), &mut n), LmStatus::NullPointer);
        lm_algebra_free(ab);
        lm_algebra_free(ptr::null_mut());
        lm_string_free(ptr::null_mut());
    }
}

#[test]
fn header_compiles_as_c() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = dir.join("include/liemult.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in [
        "lm_algebra_from_json",
        "lm_catalog_get",
        "lm_algebra_free",
        "lm_algebra_dim",
        "lm_dim_multiplier",
        "lm_s_invariant",
        "lm_t_invariant",
        "lm_is_capable",
        "lm_report_json",
        "lm_string_free",
        "lm_last_error",
    ] {
        assert!(text.contains(&format!("{f}(")), "{f} missing from header");
    }
    let out = std::env::temp_dir().join("liemult_header_check.c");
    std::fs::write(
        &out,
        "#include \"liemult.h\"\nint main(void) { return lm_last_error() != 0; }\n",
    )
    .unwrap();
    let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-I"])
        .arg(dir.join("include"))
        .arg(&out)
        .status()
    else {
        eprintln!("no C compiler; skipped");
        return;
    };
    assert!(status.success());
}
