use std::ffi::{CStr, CString};
use std::process::Command;
use std::ptr;

use serde_json::Value;
use vvkit_ffi::*;

fn take(s: *mut std::ffi::c_char) -> Value {
    assert!(!s.is_null());
    let v = serde_json::from_str(unsafe { CStr::from_ptr(s) }.to_str().unwrap()).unwrap();
    unsafe { vvkit_string_free(s) };
    v
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(vvkit_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

const FIVE_GENERAL: &str = r#"{"dim": 2, "points": [["1","0","0"],["0","1","0"],["0","0","1"],["1","1","1"],["2","3","1"]]}"#;

#[test]
fn ideal_round_trip_and_hilbert_series() {
    let pts = CString::new(FIVE_GENERAL).unwrap();
    let mut h: *mut VvkitIdeal = ptr::null_mut();
    assert_eq!(
        unsafe { vvkit_points_ideal(pts.as_ptr(), &mut h) },
        VvkitStatus::Ok
    );
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { vvkit_ideal_to_json(h, &mut out) }, VvkitStatus::Ok);
    let json = take(out);
    assert_eq!(json["ring"]["vars"], serde_json::json!(["x", "y", "z"]));

    let text = CString::new(json.to_string()).unwrap();
    let mut h2: *mut VvkitIdeal = ptr::null_mut();
    assert_eq!(
        unsafe { vvkit_ideal_from_json(text.as_ptr(), &mut h2) },
        VvkitStatus::Ok
    );
    let mut hs = ptr::null_mut();
    assert_eq!(
        unsafe { vvkit_hilbert_series_json(h2, &mut hs) },
        VvkitStatus::Ok
    );
    assert_eq!(take(hs)["numerator"], serde_json::json!([1, 2, 2]));
    unsafe {
        vvkit_ideal_free(h);
        vvkit_ideal_free(h2);
    }
}

#[test]
fn vv_check_and_classify() {
    let pts = CString::new(FIVE_GENERAL).unwrap();
    let mut tf = -1;
    let mut report = ptr::null_mut();
    assert_eq!(
        unsafe { vvkit_vv_check(pts.as_ptr(), &mut tf, &mut report) },
        VvkitStatus::Ok
    );
    assert_eq!(tf, 1);
    assert_eq!(take(report)["verdict"], "torsion-free");

    let collinear = CString::new(
        r#"{"dim": 2, "points": [["0","1","0"],["1","1","0"],["-1","1","0"],["2","1","0"]]}"#,
    )
    .unwrap();
    assert_eq!(
        unsafe { vvkit_vv_check(collinear.as_ptr(), &mut tf, ptr::null_mut()) },
        VvkitStatus::Ok
    );
    assert_eq!(tf, 0);

    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { vvkit_classify(pts.as_ptr(), &mut out) },
        VvkitStatus::Ok
    );
    assert_eq!(take(out)["label"], 1);
}

#[test]
fn errors_set_status_and_message() {
    let bad = CString::new("{not json").unwrap();
    let mut h: *mut VvkitIdeal = ptr::null_mut();
    assert_eq!(
        unsafe { vvkit_ideal_from_json(bad.as_ptr(), &mut h) },
        VvkitStatus::ParseError
    );
    assert!(h.is_null());
    assert!(!last_error().is_empty());

    let unknown_var = CString::new(r#"{"ring": {"vars": ["x"]}, "gens": ["y"]}"#).unwrap();
    assert_eq!(
        unsafe { vvkit_ideal_from_json(unknown_var.as_ptr(), &mut h) },
        VvkitStatus::ParseError
    );

    let id = CString::new("NOPE").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { vvkit_repro(id.as_ptr(), false, &mut out) },
        VvkitStatus::UnknownClaim
    );
    assert!(out.is_null());
    assert!(last_error().contains("NOPE"));

    let mut hs = ptr::null_mut();
    assert_eq!(
        unsafe { vvkit_hilbert_series_json(ptr::null(), &mut hs) },
        VvkitStatus::NullPointer
    );
    unsafe { vvkit_ideal_free(ptr::null_mut()) };
    unsafe { vvkit_string_free(ptr::null_mut()) };
}

#[test]
fn repro_claim_report() {
    let id = CString::new("R15b").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { vvkit_repro(id.as_ptr(), false, &mut out) },
        VvkitStatus::Ok
    );
    let r = take(out);
    assert_eq!(r["claim"], "R15b");
    assert_eq!(r["status"], "pass");
    assert!(last_error().is_empty());
}

/// The generated header and the C example compile, when a C compiler is
/// around.
#[test]
fn header_is_valid_c() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-I"])
        .arg(format!("{dir}/include"))
        .arg(format!("{dir}/examples/smoke.c"))
        .status()
    else {
        eprintln!("no C compiler, skipping");
        return;
    };
    assert!(status.success());
}
