//! C interface. Trinities are opaque handles; every fallible call returns a
//! [`TrinityStatus`] and leaves a message for [`trinity_last_error`].
//! Strings handed out by this library are freed with [`trinity_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use trinity_core::build::{from_curve, CurvePresentation};
use trinity_core::graph::{build_graph, classify_components};
use trinity_core::spanning::{clocked_state, count_arborescences};
use trinity_core::states::enumerate_states;
use trinity_core::trinity::{canonical_form, dual_digraph, load_trinity, Color, Trinity, TrinityError};
use trinity_core::verify::verify;

/// Opaque owner of a validated trinity.
pub struct TrinityHandle(Trinity);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrinityStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Invalid = 4,
    NotPlanar = 5,
    CheckFailed = 6,
    Panic = 7,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

type Result<T> = std::result::Result<T, TrinityStatus>;

fn fail<T>(status: TrinityStatus, msg: impl Into<String>) -> Result<T> {
    set_error(msg);
    Err(status)
}

fn guard(f: impl FnOnce() -> Result<()>) -> TrinityStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TrinityStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            TrinityStatus::Panic
        }
    }
}

/// # Safety
/// `p` is null or a NUL-terminated string.
unsafe fn text<'a>(p: *const c_char) -> Result<&'a str> {
    if p.is_null() {
        return fail(TrinityStatus::NullArgument, "null string argument");
    }
    match CStr::from_ptr(p).to_str() {
        Ok(s) => Ok(s),
        Err(_) => fail(TrinityStatus::InvalidUtf8, "input is not UTF-8"),
    }
}

/// # Safety
/// `h` is null or a live handle.
unsafe fn handle<'a>(h: *const TrinityHandle) -> Result<&'a Trinity> {
    match h.as_ref() {
        Some(h) => Ok(&h.0),
        None => fail(TrinityStatus::NullArgument, "null handle"),
    }
}

/// # Safety
/// `out` is null or writable.
unsafe fn put<T>(out: *mut T, v: T) -> Result<()> {
    if out.is_null() {
        return fail(TrinityStatus::NullArgument, "null output pointer");
    }
    out.write(v);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<()> {
    let c = CString::new(s.replace('\0', " ")).expect("no interior NUL");
    put(out, c.into_raw())
}

unsafe fn put_handle(out: *mut *mut TrinityHandle, t: Trinity) -> Result<()> {
    if out.is_null() {
        return fail(TrinityStatus::NullArgument, "null output pointer");
    }
    out.write(Box::into_raw(Box::new(TrinityHandle(t))));
    Ok(())
}

/// Parses the line or JSON format. On success `*out` owns a new handle.
///
/// # Safety
/// `source` is a NUL-terminated string and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn trinity_load(source: *const c_char, out: *mut *mut TrinityHandle) -> TrinityStatus {
    guard(|| {
        let t = load_trinity(text(source)?).or_else(|e| match e {
            TrinityError::Invalid(v) => fail(TrinityStatus::Invalid, v.to_string()),
            e => fail(TrinityStatus::Parse, e.to_string()),
        })?;
        put_handle(out, t)
    })
}

/// Builds the planar trinity of a curve description.
///
/// # Safety
/// `source` is a NUL-terminated string and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn trinity_from_curve(source: *const c_char, out: *mut *mut TrinityHandle) -> TrinityStatus {
    guard(|| {
        let c = CurvePresentation::parse(text(source)?).or_else(|e| fail(TrinityStatus::Parse, e.to_string()))?;
        let t = from_curve(&c).or_else(|e| fail(TrinityStatus::Invalid, e.to_string()))?;
        put_handle(out, t)
    })
}

/// # Safety
/// `h` is null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn trinity_free(h: *mut TrinityHandle) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Number of black triangles, or 0 for a null handle.
///
/// # Safety
/// `h` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn trinity_black_count(h: *const TrinityHandle) -> usize {
    h.as_ref().map_or(0, |h| h.0.n())
}

/// Genus, or `u32::MAX` for a null handle.
///
/// # Safety
/// `h` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn trinity_genus(h: *const TrinityHandle) -> u32 {
    h.as_ref().map_or(u32::MAX, |h| h.0.genus())
}

/// # Safety
/// `h` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn trinity_state_count(h: *const TrinityHandle, out: *mut usize) -> TrinityStatus {
    guard(|| put(out, enumerate_states(handle(h)?).len()))
}

/// Spanning arborescence counts of the red, green and blue dual digraphs.
///
/// # Safety
/// `h` is a live handle and `out` points to three writable values.
#[no_mangle]
pub unsafe extern "C" fn trinity_rho(h: *const TrinityHandle, out: *mut i64) -> TrinityStatus {
    guard(|| {
        let t = handle(h)?;
        if !t.is_planar() {
            return fail(TrinityStatus::NotPlanar, "arborescence counts need a planar trinity");
        }
        if out.is_null() {
            return fail(TrinityStatus::NullArgument, "null output pointer");
        }
        for (i, x) in Color::ALL.into_iter().enumerate() {
            let c = count_arborescences(&dual_digraph(t, x), t.root_of_color(x).expect("planar"));
            let c = i64::try_from(c).or_else(|_| fail(TrinityStatus::CheckFailed, "count overflows 64 bits"))?;
            out.add(i).write(c);
        }
        Ok(())
    })
}

/// Component summary such as `1 cyclic (14), 6 acyclic (4 isolated)`.
///
/// # Safety
/// `h` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn trinity_components(h: *const TrinityHandle, out: *mut *mut c_char) -> TrinityStatus {
    guard(|| put_string(out, classify_components(&build_graph(handle(h)?)).to_string()))
}

/// Hex digest of the canonical form.
///
/// # Safety
/// `h` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn trinity_canonical_digest(h: *const TrinityHandle, out: *mut *mut c_char) -> TrinityStatus {
    guard(|| put_string(out, canonical_form(handle(h)?).digest()))
}

/// The clocked state of a planar trinity as `state w:v ...`.
///
/// # Safety
/// `h` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn trinity_clocked_state(h: *const TrinityHandle, out: *mut *mut c_char) -> TrinityStatus {
    guard(|| {
        let t = handle(h)?;
        if !t.is_planar() {
            return fail(TrinityStatus::NotPlanar, "the clocked state needs a planar trinity");
        }
        let s = clocked_state(t).or_else(|e| fail(TrinityStatus::CheckFailed, e.to_string()))?;
        put_string(out, s.to_string())
    })
}

/// Runs every applicable check. `*report` receives the text report whether
/// or not the checks pass; the status is `CheckFailed` if any failed.
///
/// # Safety
/// `h` is a live handle and `report` is writable.
#[no_mangle]
pub unsafe extern "C" fn trinity_verify(h: *const TrinityHandle, report: *mut *mut c_char) -> TrinityStatus {
    guard(|| {
        let r = verify(handle(h)?);
        put_string(report, r.to_string())?;
        if r.passed() {
            Ok(())
        } else {
            fail(TrinityStatus::CheckFailed, "some checks failed")
        }
    })
}

/// Message of the last failed call on this thread, or null. The caller
/// frees it with [`trinity_string_free`].
#[no_mangle]
pub extern "C" fn trinity_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().clone().map_or(std::ptr::null_mut(), CString::into_raw))
}

/// # Safety
/// `s` is null or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn trinity_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
