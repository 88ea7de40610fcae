//! C interface to `twistlink`.
//!
//! Diagrams cross the boundary as opaque `TlDiagram` handles. Every call
//! returns a `TlStatus`; on failure `tl_last_error` describes what went wrong
//! on the calling thread. Strings handed out by the library must be released
//! with `tl_string_free`, handles with `tl_diagram_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use twistlink::diagram::{parse_tld, serialize_tld, validate, PlanarDiagram};
use twistlink::group::Level;
use twistlink::moves::{apply_move, find_moves, format_sequence, MoveSite};
use twistlink::report::{group_report, invariant_report};
use twistlink::Error;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidDiagram = 4,
    StaleSite = 5,
    CapExceeded = 6,
    BadArgument = 7,
    Internal = 8,
}

/// Which group to compute.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TlGroupLevel {
    Twisted = 0,
    Upper = 1,
    Lower = 2,
}

/// Opaque diagram handle.
pub struct TlDiagram(PlanarDiagram);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(status: TlStatus, msg: impl Into<String>) -> TlStatus {
    let text = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
    status
}

fn status_of(e: &Error) -> TlStatus {
    match e {
        Error::Parse(_) => TlStatus::Parse,
        Error::InvalidDiagram(_) => TlStatus::InvalidDiagram,
        Error::StaleSite(_) => TlStatus::StaleSite,
        Error::StateSpaceTooLarge { .. }
        | Error::SizeCap(_)
        | Error::SearchExhausted(_)
        | Error::TooManyGenerators { .. } => TlStatus::CapExceeded,
        Error::UnsupportedDegree(_) | Error::StateOutOfRange { .. } => TlStatus::BadArgument,
        Error::DivisionByZero | Error::NotDivisible => TlStatus::Internal,
    }
}

fn from_error(e: Error) -> TlStatus {
    fail(status_of(&e), e.to_string())
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, TlStatus> {
    if s.is_null() {
        return Err(fail(TlStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(TlStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn diagram<'a>(d: *const TlDiagram) -> Result<&'a PlanarDiagram, TlStatus> {
    d.as_ref().map(|d| &d.0).ok_or_else(|| fail(TlStatus::NullPointer, "null diagram"))
}

/// Like `diagram`, but refuses handles that fail validation.
unsafe fn valid_diagram<'a>(d: *const TlDiagram) -> Result<&'a PlanarDiagram, TlStatus> {
    let d = diagram(d)?;
    let rep = validate(d);
    if !rep.valid {
        let msgs: Vec<String> = rep.violations.iter().map(|v| format!("{}: {}", v.code, v.message)).collect();
        return Err(fail(TlStatus::InvalidDiagram, msgs.join("\n")));
    }
    Ok(d)
}

unsafe fn hand_out(s: String, out: *mut *mut c_char) -> TlStatus {
    if out.is_null() {
        return fail(TlStatus::NullPointer, "null output pointer");
    }
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            TlStatus::Ok
        }
        Err(_) => fail(TlStatus::Internal, "output contains a NUL byte"),
    }
}

unsafe fn hand_out_diagram(d: PlanarDiagram, out: *mut *mut TlDiagram) -> TlStatus {
    if out.is_null() {
        return fail(TlStatus::NullPointer, "null output pointer");
    }
    *out = Box::into_raw(Box::new(TlDiagram(d)));
    TlStatus::Ok
}

fn json(v: &impl serde::Serialize) -> Result<String, TlStatus> {
    serde_json::to_string(v).map_err(|e| fail(TlStatus::Internal, e.to_string()))
}

macro_rules! attempt {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn tl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn tl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parse TLD text. The diagram is not validated; see `tl_diagram_validate`.
///
/// # Safety
/// `src` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn tl_diagram_parse(src: *const c_char, out: *mut *mut TlDiagram) -> TlStatus {
    let src = attempt!(text(src));
    match parse_tld(src) {
        Ok(d) => hand_out_diagram(d, out),
        Err(e) => from_error(e.into()),
    }
}

/// Release a handle. Null is ignored.
///
/// # Safety
/// `d` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tl_diagram_free(d: *mut TlDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Check a diagram. `out_valid` receives the verdict; the violations are
/// written as JSON to `out_report` when it is not null.
///
/// # Safety
/// Pointers must be valid; `out_report` may be null.
#[no_mangle]
pub unsafe extern "C" fn tl_diagram_validate(
    d: *const TlDiagram,
    out_valid: *mut bool,
    out_report: *mut *mut c_char,
) -> TlStatus {
    let d = attempt!(diagram(d));
    if out_valid.is_null() {
        return fail(TlStatus::NullPointer, "null output pointer");
    }
    let rep = validate(d);
    *out_valid = rep.valid;
    if out_report.is_null() {
        return TlStatus::Ok;
    }
    hand_out(attempt!(json(&rep)), out_report)
}

/// Serialize to TLD text.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn tl_diagram_serialize(d: *const TlDiagram, out: *mut *mut c_char) -> TlStatus {
    let d = attempt!(diagram(d));
    hand_out(serialize_tld(d), out)
}

/// Polynomials, faces and carrier surface as JSON.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn tl_invariants_json(d: *const TlDiagram, out: *mut *mut c_char) -> TlStatus {
    let d = attempt!(valid_diagram(d));
    let rep = d.project().and_then(|a| invariant_report(&a));
    match rep {
        Ok(r) => hand_out(attempt!(json(&r)), out),
        Err(e) => from_error(e),
    }
}

/// Group report as JSON, with hom counts into S3 and S4.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn tl_group_json(
    d: *const TlDiagram,
    level: TlGroupLevel,
    budget: usize,
    out: *mut *mut c_char,
) -> TlStatus {
    let d = attempt!(valid_diagram(d));
    let level = match level {
        TlGroupLevel::Twisted => None,
        TlGroupLevel::Upper => Some(Level::Upper),
        TlGroupLevel::Lower => Some(Level::Lower),
    };
    match d.project().and_then(|a| group_report(&a, level, budget, &[3, 4])) {
        Ok(r) => hand_out(attempt!(json(&r)), out),
        Err(e) => from_error(e),
    }
}

/// All move sites, one per line.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn tl_moves_list(d: *const TlDiagram, out: *mut *mut c_char) -> TlStatus {
    let d = attempt!(valid_diagram(d));
    hand_out(format_sequence(&find_moves(d, None)), out)
}

/// Apply one move site, producing a new handle. The input is unchanged.
///
/// # Safety
/// Pointers must be valid and `site` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn tl_move_apply(
    d: *const TlDiagram,
    site: *const c_char,
    out: *mut *mut TlDiagram,
) -> TlStatus {
    let d = attempt!(valid_diagram(d));
    let site: MoveSite = match attempt!(text(site)).parse() {
        Ok(s) => s,
        Err(e) => return fail(TlStatus::BadArgument, Error::to_string(&e)),
    };
    match apply_move(d, &site) {
        Ok(r) => hand_out_diagram(r, out),
        Err(e) => from_error(e),
    }
}
