//! C ABI over `tci-core`.
//!
//! Elements cross the boundary as opaque `TciElement` handles; everything else
//! travels as NUL-terminated UTF-8 JSON or cycle-notation strings. Every entry
//! point returns a [`TciStatus`] and writes its result through an out pointer.
//! On failure `tci_last_error_message` describes the problem for the calling
//! thread. Strings returned by the library must be released with
//! `tci_string_free`, handles with `tci_element_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tci_core::chident::{ch, f_kd};
use tci_core::interp::{encode, interpret_perm, reduce_to_basic, verify_certificate, InterpContext};
use tci_core::json;
use tci_core::matexval::is_identity;
use tci_core::symgroup::{parse_cycles, parse_index_list, split_cycle_left, split_cycles};
use tci_core::twisted::TwistedElement;
use tci_core::TciError;

/// Result code of every exported function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TciStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    OutOfRange = 4,
    Mismatch = 5,
    DimensionCap = 6,
    NotMultilinear = 7,
    Certificate = 8,
    Internal = 99,
}

/// Opaque handle to an element of the twisted trace algebra.
pub struct TciElement(TwistedElement);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(TciStatus, String);

impl From<TciError> for Failure {
    fn from(e: TciError) -> Self {
        let status = match &e {
            TciError::Parse(_) | TciError::InvalidPermutation(_) | TciError::EmptyWord => TciStatus::Parse,
            TciError::IndexOutOfRange { .. } | TciError::Range(_) | TciError::ArityZero => TciStatus::OutOfRange,
            TciError::DegreeMismatch(..)
            | TciError::ArityMismatch(..)
            | TciError::DimensionMismatch(_)
            | TciError::UnspecializedLambda => TciStatus::Mismatch,
            TciError::DimensionCap { .. } => TciStatus::DimensionCap,
            TciError::NotMultilinear { .. } | TciError::NotHomogeneous(_) => TciStatus::NotMultilinear,
            TciError::Certificate(_) => TciStatus::Certificate,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(TciStatus::NullPointer, format!("{what} is null"))
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> TciStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            TciStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            TciStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(TciStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn element<'a>(p: *const TciElement, what: &str) -> Result<&'a TwistedElement, Failure> {
    p.as_ref().map(|h| &h.0).ok_or_else(|| null(what))
}

unsafe fn put_element(out: *mut *mut TciElement, e: TwistedElement) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(TciElement(e)));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| Failure(TciStatus::Internal, "output contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = v;
    Ok(())
}

/// Message for the most recent failure on this thread, or null after a success.
/// The pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn tci_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string produced by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tci_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Releases an element handle. Null is ignored.
///
/// # Safety
/// `e` must be null or a handle produced by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tci_element_free(e: *mut TciElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Parses an element from its JSON form.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tci_element_from_json(json: *const c_char, out: *mut *mut TciElement) -> TciStatus {
    guard(|| {
        let e = json::element_from_str(text(json, "json")?)?;
        put_element(out, e)
    })
}

/// Serializes an element to canonical JSON.
///
/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tci_element_to_json(e: *const TciElement, pretty: bool, out: *mut *mut c_char) -> TciStatus {
    guard(|| put_string(out, json::element_to_string(element(e, "element")?, pretty)))
}

/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tci_element_arity(e: *const TciElement, out: *mut usize) -> TciStatus {
    guard(|| put(out, element(e, "element")?.arity()))
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tci_element_add(a: *const TciElement, b: *const TciElement, out: *mut *mut TciElement) -> TciStatus {
    guard(|| {
        let sum = element(a, "a")?.add(element(b, "b")?)?;
        put_element(out, sum)
    })
}

/// The product `a · b`.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tci_element_mul(a: *const TciElement, b: *const TciElement, out: *mut *mut TciElement) -> TciStatus {
    guard(|| {
        let p = element(a, "a")?.mul(element(b, "b")?)?;
        put_element(out, p)
    })
}

/// Traces out the last tensor slot.
///
/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tci_element_partial_trace(e: *const TciElement, out: *mut *mut TciElement) -> TciStatus {
    guard(|| {
        let t = element(e, "element")?.partial_trace()?;
        put_element(out, t)
    })
}

/// Replaces the formal `tr(1)` by `d`.
///
/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tci_element_specialize(e: *const TciElement, d: i64, out: *mut *mut TciElement) -> TciStatus {
    guard(|| put_element(out, element(e, "element")?.specialize_lambda(d)))
}

/// Decides whether `e` vanishes on all `d × d` matrices.
///
/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tci_element_is_identity(e: *const TciElement, d: usize, out: *mut bool) -> TciStatus {
    guard(|| {
        let ok = is_identity(element(e, "element")?, d)?;
        put(out, ok)
    })
}

/// The Cayley-Hamilton element for `k ≤ d + 1`. Unless `formal_lambda` is set, `tr(1)` becomes `d`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tci_ch(k: usize, d: usize, formal_lambda: bool, out: *mut *mut TciElement) -> TciStatus {
    guard(|| {
        let c = ch(k, d)?;
        put_element(out, if formal_lambda { c } else { c.specialize_lambda(d as i64) })
    })
}

/// The multilinear basic relation `F_{k,d}`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tci_fkd(k: usize, d: usize, out: *mut *mut TciElement) -> TciStatus {
    guard(|| put_element(out, f_kd(k, d)?))
}

/// The element attached to a permutation of `n + k` points, given in 1-based cycle notation.
///
/// # Safety
/// `perm` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tci_interpret(n: usize, k: usize, perm: *const c_char, out: *mut *mut TciElement) -> TciStatus {
    guard(|| {
        let ctx = InterpContext::new(n, k)?;
        let p = parse_cycles(n + k, text(perm, "perm")?)?;
        put_element(out, interpret_perm(&p, &ctx)?)
    })
}

/// Writes the group-algebra JSON of a multilinear element in `x1..xk`.
///
/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tci_encode(e: *const TciElement, k: usize, out: *mut *mut c_char) -> TciStatus {
    guard(|| {
        let e = element(e, "element")?;
        let g = encode(e, &InterpContext::new(e.arity(), k)?)?;
        put_string(out, json::group_algebra_to_string(&g, false))
    })
}

/// Splits a permutation of `m` points along the comma-separated subset `a`.
/// The three factors are written as `"f1 | f2 | f3"`.
///
/// # Safety
/// `perm` and `a` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tci_split(
    m: usize,
    perm: *const c_char,
    a: *const c_char,
    left: bool,
    out: *mut *mut c_char,
) -> TciStatus {
    guard(|| {
        let p = parse_cycles(m, text(perm, "perm")?)?;
        let a = parse_index_list(text(a, "a")?, m)?;
        let s = if left { split_cycle_left(&p, &a) } else { split_cycles(&p, &a) };
        put_string(out, s.display_factors())
    })
}

/// Builds a deduction certificate for the antisymmetrized permutation over the subset `c`
/// (with `|c| = d + 1`) and writes it as JSON.
///
/// # Safety
/// `perm` and `c` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tci_reduce(
    d: usize,
    m: usize,
    k: usize,
    perm: *const c_char,
    c: *const c_char,
    out: *mut *mut c_char,
) -> TciStatus {
    guard(|| {
        if k > m {
            return Err(TciError::Range(format!("k = {k} exceeds m = {m}")).into());
        }
        let ctx = InterpContext::new(m - k, k)?;
        let p = parse_cycles(m, text(perm, "perm")?)?;
        let c = parse_index_list(text(c, "c")?, m)?;
        let cert = reduce_to_basic(&p, &c, &ctx, d)?;
        put_string(out, json::certificate_to_string(&cert, false))
    })
}

/// Replays a certificate and compares it with its stated target.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tci_check_certificate(json: *const c_char, out: *mut bool) -> TciStatus {
    guard(|| {
        let cert = json::certificate_from_str(text(json, "json")?)?;
        put(out, verify_certificate(&cert)?)
    })
}
