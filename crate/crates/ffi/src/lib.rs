//! C ABI for the classification and comultiplication pipeline.
//!
//! Conventions:
//! - `FrobAlgebra` is an opaque handle created from input text or a file and
//!   released with `frob_algebra_free`.
//! - Functions returning strings allocate; release them with
//!   `frob_string_free`.
//! - Functions returning `int` use 0 for success and the same nonzero codes
//!   as the command-line tool (2 input, 3 algebra laws, 4 precondition,
//!   5 verification).
//! - On failure, `frob_last_error` returns a message for the current thread.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use frobeniuslab::algebra::{Algebra, Elem};
use frobeniuslab::cert::{certificate_from, verify, Certificate};
use frobeniuslab::error::AlgError;
use frobeniuslab::format;
use frobeniuslab::pipeline::classify;
use frobeniuslab::rep::SearchOpts;

/// An algebra loaded from input text, kept together with that text so that
/// certificates can bind to the exact input digest.
pub struct FrobAlgebra {
    text: String,
    alg: Arc<Algebra>,
    idem: Option<Elem>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn code_of(e: &AlgError) -> c_int {
    match e {
        AlgError::Parse(_)
        | AlgError::CompositeModulus(_)
        | AlgError::BadRelation(_)
        | AlgError::Io(_) => 2,
        AlgError::NotAssociative(..)
        | AlgError::UnitLawFails(_)
        | AlgError::NotAdmissibleWithinCap(_)
        | AlgError::AmbientMismatch(..) => 3,
        AlgError::NotIdempotent
        | AlgError::NotAutomorphism(_)
        | AlgError::NotQuiverPresented
        | AlgError::NotCornerFrobenius
        | AlgError::Inconclusive(_)
        | AlgError::Precondition(_) => 4,
        AlgError::VerificationFailed(_) | AlgError::InternalInconsistency(_) => 5,
    }
}

fn fail(e: &AlgError) -> c_int {
    set_error(e.to_string());
    code_of(e)
}

unsafe fn cstr_arg<'a>(p: *const c_char) -> Option<&'a str> {
    if p.is_null() {
        return None;
    }
    CStr::from_ptr(p).to_str().ok()
}

fn make_algebra(text: &str) -> *mut FrobAlgebra {
    clear_error();
    match format::load(text) {
        Ok((alg, idem)) => Box::into_raw(Box::new(FrobAlgebra {
            text: text.to_string(),
            alg,
            idem,
        })),
        Err(e) => {
            set_error(e.to_string());
            std::ptr::null_mut()
        }
    }
}

/// Parse an algebra description from a NUL-terminated string. Returns NULL
/// on failure; see `frob_last_error`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string or NULL.
#[no_mangle]
pub unsafe extern "C" fn frob_algebra_from_str(text: *const c_char) -> *mut FrobAlgebra {
    match cstr_arg(text) {
        Some(t) => make_algebra(t),
        None => {
            set_error("null or non-UTF-8 input".into());
            std::ptr::null_mut()
        }
    }
}

/// Load an algebra description from a file path. Returns NULL on failure.
///
/// # Safety
/// `path` must be a valid NUL-terminated string or NULL.
#[no_mangle]
pub unsafe extern "C" fn frob_algebra_from_file(path: *const c_char) -> *mut FrobAlgebra {
    let Some(p) = cstr_arg(path) else {
        set_error("null or non-UTF-8 path".into());
        return std::ptr::null_mut();
    };
    match std::fs::read_to_string(p) {
        Ok(text) => make_algebra(&text),
        Err(e) => {
            set_error(e.to_string());
            std::ptr::null_mut()
        }
    }
}

/// Release an algebra handle. NULL is ignored.
///
/// # Safety
/// `a` must have come from `frob_algebra_from_str` or
/// `frob_algebra_from_file` and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn frob_algebra_free(a: *mut FrobAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// The dimension of the algebra, or -1 for a NULL handle.
///
/// # Safety
/// `a` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn frob_algebra_dim(a: *const FrobAlgebra) -> c_int {
    match a.as_ref() {
        Some(h) => h.alg.dim as c_int,
        None => -1,
    }
}

fn pipeline_json(
    h: &FrobAlgebra,
    seed: u64,
    trials: u64,
    normalize: Option<&str>,
    require_comult: bool,
) -> Result<String, AlgError> {
    let opts = SearchOpts { seed, trials, ..SearchOpts::default() };
    let cls = classify(&h.alg, h.idem.as_ref(), &opts, normalize)?;
    if require_comult && cls.comult.is_none() {
        return Err(AlgError::Precondition(
            cls.comult_note
                .clone()
                .unwrap_or_else(|| "no comultiplication available".into()),
        ));
    }
    Ok(certificate_from(&h.text, &cls, &h.alg, &opts, normalize).to_json())
}

fn json_call(
    a: *const FrobAlgebra,
    seed: u64,
    trials: u64,
    normalize: Option<&str>,
    require_comult: bool,
) -> *mut c_char {
    clear_error();
    let Some(h) = (unsafe { a.as_ref() }) else {
        set_error("null algebra handle".into());
        return std::ptr::null_mut();
    };
    let out = catch_unwind(AssertUnwindSafe(|| {
        pipeline_json(h, seed, trials, normalize, require_comult)
    }));
    match out {
        Ok(Ok(json)) => CString::new(json).unwrap().into_raw(),
        Ok(Err(e)) => {
            set_error(e.to_string());
            std::ptr::null_mut()
        }
        Err(_) => {
            set_error("internal panic".into());
            std::ptr::null_mut()
        }
    }
}

/// Classify the algebra and return the certificate as JSON. Returns NULL on
/// failure. The result is deterministic in `seed`.
///
/// # Safety
/// `a` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn frob_classify_json(
    a: *const FrobAlgebra,
    seed: u64,
    trials: u64,
) -> *mut c_char {
    json_call(a, seed, trials, None, false)
}

/// Build the comultiplication and return the certificate (including the
/// delta and m tensors) as JSON. `normalize` is an optional basis label at
/// which the leading coefficient is scaled to 1; pass NULL for the default
/// scan order. Returns NULL on failure, in particular when the algebra is
/// not gendo-Frobenius.
///
/// # Safety
/// `a` must be a live handle or NULL; `normalize` a valid string or NULL.
#[no_mangle]
pub unsafe extern "C" fn frob_comult_json(
    a: *const FrobAlgebra,
    seed: u64,
    trials: u64,
    normalize: *const c_char,
) -> *mut c_char {
    let anchor = cstr_arg(normalize);
    if !normalize.is_null() && anchor.is_none() {
        set_error("non-UTF-8 normalize label".into());
        return std::ptr::null_mut();
    }
    json_call(a, seed, trials, anchor, true)
}

/// Re-validate a certificate against the input text it claims to describe.
/// Returns 0 when every witness checks out, otherwise a nonzero code.
///
/// # Safety
/// Both arguments must be valid NUL-terminated strings or NULL.
#[no_mangle]
pub unsafe extern "C" fn frob_verify_json(
    cert_json: *const c_char,
    text: *const c_char,
) -> c_int {
    clear_error();
    let (Some(json), Some(input)) = (cstr_arg(cert_json), cstr_arg(text)) else {
        set_error("null or non-UTF-8 argument".into());
        return 2;
    };
    let cert = match Certificate::from_json(json) {
        Ok(c) => c,
        Err(e) => return fail(&e),
    };
    match catch_unwind(AssertUnwindSafe(|| verify(&cert, input))) {
        Ok(Ok(())) => 0,
        Ok(Err(e)) => fail(&e),
        Err(_) => {
            set_error("internal panic".into());
            5
        }
    }
}

/// Release a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must have been returned by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn frob_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The last error message on this thread, or NULL if the last call
/// succeeded. The pointer stays valid until the next library call on the
/// same thread; do not free it.
#[no_mangle]
pub extern "C" fn frob_last_error() -> *const c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(c) => c.as_ptr(),
        None => std::ptr::null(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    const B_FILE: &str = "\
[field] rational
[quiver]
vertex 1
vertex 2
arrow b1 : 1 -> 2
arrow b2 : 2 -> 1
[relations]
b1*b2
b2*b1
";

    #[test]
    fn classify_verify_round_trip() {
        let text = c(B_FILE);
        let a = unsafe { frob_algebra_from_str(text.as_ptr()) };
        assert!(!a.is_null());
        assert_eq!(unsafe { frob_algebra_dim(a) }, 4);
        let json = unsafe { frob_classify_json(a, 0, 256) };
        assert!(!json.is_null());
        assert_eq!(unsafe { frob_verify_json(json, text.as_ptr()) }, 0);
        // tampered certificates are rejected with the verification code
        let owned = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_string();
        let bad = c(&owned.replacen("\"1\"", "\"2\"", 1));
        assert_eq!(unsafe { frob_verify_json(bad.as_ptr(), text.as_ptr()) }, 5);
        assert!(!frob_last_error().is_null());
        unsafe {
            frob_string_free(json);
            frob_algebra_free(a);
        }
    }

    #[test]
    fn comult_requires_gendo_frobenius() {
        // three-vertex quiver whose algebra is Morita but not gendo-Frobenius
        let text = c("\
[field] rational
[quiver]
vertex 1
vertex 2
vertex 3
arrow a : 1 -> 3
arrow b : 3 -> 2
arrow c : 2 -> 1
[relations]
b*c
c*a
");
        let a = unsafe { frob_algebra_from_str(text.as_ptr()) };
        assert!(!a.is_null());
        let json = unsafe { frob_comult_json(a, 0, 256, std::ptr::null()) };
        assert!(json.is_null());
        let msg = unsafe { CStr::from_ptr(frob_last_error()) }.to_str().unwrap();
        assert!(!msg.is_empty());
        unsafe { frob_algebra_free(a) };
    }

    #[test]
    fn parse_failure_reports_error() {
        let text = c("[field] rational\n[quiver]\narrow a : 1 -> 2\n");
        let a = unsafe { frob_algebra_from_str(text.as_ptr()) };
        assert!(a.is_null());
        assert!(!frob_last_error().is_null());
    }
}
