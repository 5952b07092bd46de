//! C interface. Algebras are opaque `LmAlgebra` handles; every call returns an
//! `LmStatus` and writes its result through an out-pointer. The message for
//! the most recent failure on the calling thread is `lm_last_error()`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use liemult::invariants::{report, s_invariant, t_invariant};
use liemult::linalg::parse_rational;
use liemult::multiplier::{dim_multiplier, is_capable};
use liemult::presentation::load_algebra;
use liemult::{catalog, Error, LieAlgebra};

/// Opaque algebra handle.
pub struct LmAlgebra(LieAlgebra);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    JacobiViolation = 3,
    NotNilpotent = 4,
    IndexOutOfRange = 5,
    BadPair = 6,
    DuplicatePair = 7,
    DimensionMismatch = 8,
    AbelianInput = 9,
    UnknownName = 10,
    ParamOutOfDomain = 11,
    ParseError = 12,
    Other = 13,
    Panic = 14,
}

impl From<&Error> for LmStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::JacobiViolation { .. } => LmStatus::JacobiViolation,
            Error::NotNilpotent { .. } => LmStatus::NotNilpotent,
            Error::IndexOutOfRange { .. } => LmStatus::IndexOutOfRange,
            Error::BadPair { .. } => LmStatus::BadPair,
            Error::DuplicatePair { .. } => LmStatus::DuplicatePair,
            Error::DimensionMismatch { .. } => LmStatus::DimensionMismatch,
            Error::AbelianInput => LmStatus::AbelianInput,
            Error::UnknownName(_) => LmStatus::UnknownName,
            Error::ParamOutOfDomain { .. } => LmStatus::ParamOutOfDomain,
            Error::Parse(_) => LmStatus::ParseError,
            _ => LmStatus::Other,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: LmStatus, msg: impl Into<String>) -> LmStatus {
    set_error(msg.into());
    status
}

fn guard(f: impl FnOnce() -> LmStatus) -> LmStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(LmStatus::Panic, "internal panic"))
}

fn lib_error(e: Error) -> LmStatus {
    fail(LmStatus::from(&e), format!("error[{}]: {e}", e.tag()))
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, LmStatus> {
    if p.is_null() {
        return Err(fail(LmStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(LmStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

unsafe fn algebra_arg<'a>(a: *const LmAlgebra) -> Result<&'a LieAlgebra, LmStatus> {
    a.as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| fail(LmStatus::NullPointer, "null algebra handle"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> LmStatus {
    if out.is_null() {
        return fail(LmStatus::NullPointer, "null output pointer");
    }
    out.write(value);
    LmStatus::Ok
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Parse a JSON presentation. On success `*out` owns a new handle.
///
/// # Safety
/// `json` is a nul-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lm_algebra_from_json(
    json: *const c_char,
    out: *mut *mut LmAlgebra,
) -> LmStatus {
    guard(|| {
        let text = tri!(str_arg(json));
        let l = tri!(load_algebra(text).map_err(lib_error));
        write_out(out, Box::into_raw(Box::new(LmAlgebra(l))))
    })
}

/// Build a catalog algebra. `param` may be null or a rational `p/q`.
///
/// # Safety
/// `name` and non-null `param` are nul-terminated strings; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lm_catalog_get(
    name: *const c_char,
    param: *const c_char,
    out: *mut *mut LmAlgebra,
) -> LmStatus {
    guard(|| {
        let name = tri!(str_arg(name));
        let p = if param.is_null() {
            None
        } else {
            Some(tri!(parse_rational(tri!(str_arg(param))).map_err(lib_error)))
        };
        let l = tri!(catalog::get(name, p.as_ref()).map_err(lib_error));
        write_out(out, Box::into_raw(Box::new(LmAlgebra(l))))
    })
}

/// # Safety
/// `a` is null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lm_algebra_free(a: *mut LmAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// # Safety
/// `a` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lm_algebra_dim(a: *const LmAlgebra, out: *mut usize) -> LmStatus {
    guard(|| write_out(out, tri!(algebra_arg(a)).dim()))
}

/// Dimension of the Schur multiplier.
///
/// # Safety
/// `a` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lm_dim_multiplier(a: *const LmAlgebra, out: *mut usize) -> LmStatus {
    guard(|| write_out(out, dim_multiplier(tri!(algebra_arg(a)))))
}

/// `s(L)`; fails with `ABELIAN_INPUT` on abelian algebras.
///
/// # Safety
/// `a` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lm_s_invariant(a: *const LmAlgebra, out: *mut i64) -> LmStatus {
    guard(|| {
        let s = tri!(s_invariant(tri!(algebra_arg(a))).map_err(lib_error));
        write_out(out, s)
    })
}

/// `t(L)`.
///
/// # Safety
/// `a` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lm_t_invariant(a: *const LmAlgebra, out: *mut i64) -> LmStatus {
    guard(|| write_out(out, t_invariant(tri!(algebra_arg(a)))))
}

/// # Safety
/// `a` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lm_is_capable(a: *const LmAlgebra, out: *mut bool) -> LmStatus {
    guard(|| write_out(out, is_capable(tri!(algebra_arg(a)))))
}

/// Full invariant report as JSON. Release with `lm_string_free`.
///
/// # Safety
/// `a` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lm_report_json(a: *const LmAlgebra, out: *mut *mut c_char) -> LmStatus {
    guard(|| {
        let r = report(tri!(algebra_arg(a)));
        let text = serde_json::to_string(&r).expect("report serializes");
        let c = CString::new(text).expect("json has no nul");
        write_out(out, c.into_raw())
    })
}

/// # Safety
/// `s` is null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn lm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
