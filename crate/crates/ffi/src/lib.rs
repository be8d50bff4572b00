//! C ABI over `vvkit`.
//!
//! Conventions:
//! - every function returns a [`VvkitStatus`]; results come back through
//!   out-pointers, which are left untouched on failure;
//! - inputs and most outputs are JSON text in the formats of the CLI;
//! - strings returned by the library are freed with [`vvkit_string_free`],
//!   ideals with [`vvkit_ideal_free`];
//! - after a failure [`vvkit_last_error_message`] describes it (per thread).

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use serde_json::{json, Value};
use vvkit::geometry::{classify_config, ideal_of_points, jacobian, PointConfiguration};
use vvkit::hilbert::hilbert_series;
use vvkit::ideals::Ideal;
use vvkit::repro::{run_claim, ReproOptions};
use vvkit::vava::vv_torsion_free;
use vvkit::Error;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VvkitStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed JSON, polynomial text or points.
    ParseError = 3,
    /// Valid input that the computation rejected (precondition, bound, ...).
    ComputationError = 4,
    UnknownClaim = 5,
    /// A Rust panic was caught at the boundary.
    Panic = 6,
}

/// Opaque handle to an ideal.
pub struct VvkitIdeal {
    inner: Ideal,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn classify(e: &Error) -> VvkitStatus {
    match e {
        Error::Syntax { .. }
        | Error::UnknownVariable(_)
        | Error::InvalidNumber(_)
        | Error::DuplicateVariable(_)
        | Error::ArityMismatch { .. }
        | Error::Format(_) => VvkitStatus::ParseError,
        Error::UnknownClaim(_) => VvkitStatus::UnknownClaim,
        _ => VvkitStatus::ComputationError,
    }
}

struct Failure(VvkitStatus, String);

type Outcome<T> = Result<T, Failure>;

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(classify(&e), e.to_string())
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Outcome<()>) -> VvkitStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            VvkitStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            VvkitStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Outcome<&'a str> {
    if s.is_null() {
        return Err(Failure(
            VvkitStatus::NullPointer,
            "null string argument".into(),
        ));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(VvkitStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn read_json(s: *const c_char) -> Outcome<Value> {
    serde_json::from_str(read_str(s)?).map_err(|e| Failure(VvkitStatus::ParseError, e.to_string()))
}

fn check_out<T>(out: *mut T) -> Outcome<()> {
    if out.is_null() {
        Err(Failure(
            VvkitStatus::NullPointer,
            "null output pointer".into(),
        ))
    } else {
        Ok(())
    }
}

unsafe fn write_json(out: *mut *mut c_char, v: &Value) -> Outcome<()> {
    check_out(out)?;
    let c = CString::new(v.to_string())
        .map_err(|e| Failure(VvkitStatus::ComputationError, e.to_string()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn ideal_ref<'a>(h: *const VvkitIdeal) -> Outcome<&'a Ideal> {
    h.as_ref().map(|h| &h.inner).ok_or(Failure(
        VvkitStatus::NullPointer,
        "null ideal handle".into(),
    ))
}

unsafe fn points(json: *const c_char) -> Outcome<PointConfiguration> {
    Ok(PointConfiguration::from_json(&read_json(json)?)?)
}

/// Parses `{"ring": {"vars": [...]}, "gens": [...]}` into a new handle.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vvkit_ideal_from_json(
    json: *const c_char,
    out: *mut *mut VvkitIdeal,
) -> VvkitStatus {
    guard(|| {
        check_out(out)?;
        let ideal = Ideal::from_json(&read_json(json)?)?;
        *out = Box::into_raw(Box::new(VvkitIdeal { inner: ideal }));
        Ok(())
    })
}

/// Defining ideal of the points in `{"dim": 2, "points": [...]}`.
///
/// # Safety
/// `points_json` must be a NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vvkit_points_ideal(
    points_json: *const c_char,
    out: *mut *mut VvkitIdeal,
) -> VvkitStatus {
    guard(|| {
        check_out(out)?;
        let cfg = points(points_json)?;
        *out = Box::into_raw(Box::new(VvkitIdeal {
            inner: ideal_of_points(&cfg),
        }));
        Ok(())
    })
}

/// Ideal as JSON text; free with `vvkit_string_free`.
///
/// # Safety
/// `ideal` must come from this library; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vvkit_ideal_to_json(
    ideal: *const VvkitIdeal,
    out: *mut *mut c_char,
) -> VvkitStatus {
    guard(|| write_json(out, &ideal_ref(ideal)?.to_json()))
}

/// # Safety
/// `ideal` must come from this library and not be used afterwards. Null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn vvkit_ideal_free(ideal: *mut VvkitIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Hilbert series of `R/J` as `{"numerator": [...], "pole_order": n, "series": "..."}`.
///
/// # Safety
/// `ideal` must come from this library; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vvkit_hilbert_series_json(
    ideal: *const VvkitIdeal,
    out: *mut *mut c_char,
) -> VvkitStatus {
    guard(|| {
        let hs = hilbert_series(ideal_ref(ideal)?)?;
        write_json(
            out,
            &json!({"numerator": hs.numerator, "pole_order": hs.pole_order, "series": hs.to_string()}),
        )
    })
}

/// Torsion check for the Jacobian ideal of a points file. Sets
/// `*torsion_free` to 1 or 0 and, when `report` is not null, stores the
/// full report as JSON.
///
/// # Safety
/// `points_json` must be a NUL-terminated string; `torsion_free` a valid
/// pointer; `report` null or valid.
#[no_mangle]
pub unsafe extern "C" fn vvkit_vv_check(
    points_json: *const c_char,
    torsion_free: *mut i32,
    report: *mut *mut c_char,
) -> VvkitStatus {
    guard(|| {
        check_out(torsion_free)?;
        let cfg = points(points_json)?;
        let j = ideal_of_points(&cfg);
        let i = jacobian(&j, cfg.dim())?.ideal;
        let r = vv_torsion_free(&j, &i, cfg.len())?;
        if !report.is_null() {
            write_json(report, &r.to_json())?;
        }
        *torsion_free = i32::from(r.torsion_free);
        Ok(())
    })
}

/// Collinearity profile and case label of a points file, as JSON.
///
/// # Safety
/// `points_json` must be a NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vvkit_classify(
    points_json: *const c_char,
    out: *mut *mut c_char,
) -> VvkitStatus {
    guard(|| {
        let class = classify_config(&points(points_json)?)?;
        write_json(out, &serde_json::to_value(class).expect("plain data"))
    })
}

/// Runs a registered claim; the report is `{"claim", "status", "details"}`.
///
/// # Safety
/// `id` must be a NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vvkit_repro(
    id: *const c_char,
    slow: bool,
    out: *mut *mut c_char,
) -> VvkitStatus {
    guard(|| {
        let r = run_claim(read_str(id)?, &ReproOptions { slow })?;
        write_json(out, &r.to_json())
    })
}

/// # Safety
/// `s` must be a string returned by this library, or null.
#[no_mangle]
pub unsafe extern "C" fn vvkit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failure on this thread, empty after a success. The
/// pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn vvkit_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn null_arguments_are_rejected() {
        let mut out: *mut VvkitIdeal = ptr::null_mut();
        let st = unsafe { vvkit_ideal_from_json(ptr::null(), &mut out) };
        assert_eq!(st, VvkitStatus::NullPointer);
        assert!(out.is_null());
    }
}
