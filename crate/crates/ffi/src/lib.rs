//! C interface to `trigroups`.
//!
//! Orders are passed as `uint64_t` with [`TG_INFINITY`] (0) standing for ∞.
//! Every function returns a status code; results go through out-pointers,
//! which are left untouched on error. [`tg_error_message`] describes the most
//! recent failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use trigroups::arith::{Order, Sign, Triple};
use trigroups::enumerate::{BoundMode, EnumerationConfig, FoundVia, TripleRecord};
use trigroups::multiplicity::{Method, MultiplicityMode};
use trigroups::Error;

/// Encodes an infinite order.
pub const TG_INFINITY: u64 = 0;

pub const TG_OK: i32 = 0;
pub const TG_ERR_NULL: i32 = -1;
pub const TG_ERR_INVALID_ORDER: i32 = -2;
pub const TG_ERR_NOT_HYPERBOLIC: i32 = -3;
pub const TG_ERR_INVARIANT: i32 = -4;
/// A result does not fit the C type, or an argument is out of range.
pub const TG_ERR_OUT_OF_RANGE: i32 = -5;
pub const TG_ERR_PANIC: i32 = -255;

pub const TG_MODE_PAPER: i32 = 0;
pub const TG_MODE_SAFE: i32 = 1;

pub const TG_MULT_AUTO: i32 = 0;
pub const TG_MULT_BRUTE: i32 = 1;
pub const TG_MULT_CLOSED: i32 = 2;

pub const TG_METHOD_BRUTE_FORCE: i32 = 0;
pub const TG_METHOD_CLOSED_FORM: i32 = 1;
pub const TG_METHOD_RESIDUE_LIFT: i32 = 2;

pub const TG_FOUND_DIRECT_SCAN: i32 = 0;
pub const TG_FOUND_DIVISOR_FILTER: i32 = 1;
pub const TG_FOUND_NONCOMPACT_LOOP: i32 = 2;

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TgAdim {
    pub adim: u64,
    pub m: u64,
    pub phi2m: u64,
    pub h: u64,
    pub classes: u64,
    pub hyperbolic_ks: u64,
    pub spherical_ks: u64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TgMultiplicity {
    pub h: u64,
    pub h1: u64,
    pub h2: u64,
    pub t: u8,
    pub u: u8,
    /// One of the `TG_METHOD_*` constants.
    pub method: i32,
    /// 1 or 0 when the closed form was cross-checked, -1 otherwise.
    pub agreement: i32,
}

/// Sorted so that `a <= b <= c`, with [`TG_INFINITY`] last.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TgRecord {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub adim: u64,
    pub compact: bool,
    /// One of the `TG_FOUND_*` constants.
    pub found_via: i32,
}

/// Result of [`tg_enumerate`]; release with [`tg_enumeration_free`].
pub struct TgEnumeration {
    records: Vec<TgRecord>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(code: i32, msg: &str) -> i32 {
    set_error(msg);
    code
}

fn code_for(e: &Error) -> i32 {
    match e {
        Error::InvalidOrder(_) | Error::Parse(_) => TG_ERR_INVALID_ORDER,
        Error::NotHyperbolic { .. } => TG_ERR_NOT_HYPERBOLIC,
        Error::NotUnit { .. } | Error::TooLarge(_) => TG_ERR_OUT_OF_RANGE,
        _ => TG_ERR_INVARIANT,
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (i32, String)>) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TG_OK,
        Ok(Err((code, msg))) => fail(code, &msg),
        Err(_) => fail(TG_ERR_PANIC, "panic inside trigroups"),
    }
}

fn lib(e: Error) -> (i32, String) {
    (code_for(&e), e.to_string())
}

fn narrow(x: u128, what: &str) -> Result<u64, (i32, String)> {
    u64::try_from(x).map_err(|_| (TG_ERR_OUT_OF_RANGE, format!("{what} = {x} does not fit in 64 bits")))
}

fn order(x: u64) -> Result<Order, (i32, String)> {
    if x == TG_INFINITY {
        Ok(Order::Infinity)
    } else {
        Order::finite(x).map_err(lib)
    }
}

fn encode(o: Order) -> u64 {
    match o {
        Order::Finite(n) => n,
        Order::Infinity => TG_INFINITY,
    }
}

fn triple(a: u64, b: u64, c: u64) -> Result<Triple, (i32, String)> {
    Triple::new(order(a)?, order(b)?, order(c)?).map_err(lib)
}

fn write<T>(out: *mut T, value: T) -> Result<(), (i32, String)> {
    if out.is_null() {
        return Err((TG_ERR_NULL, "null output pointer".into()));
    }
    // SAFETY: non-null, and the caller promises it points to writable storage.
    unsafe { out.write(value) };
    Ok(())
}

/// Arithmetic dimension of `(a, b, c)` together with its intermediate counts.
///
/// # Safety
/// `out` must be null or point to writable storage for a `TgAdim`.
#[no_mangle]
pub unsafe extern "C" fn tg_adim(a: u64, b: u64, c: u64, out: *mut TgAdim) -> i32 {
    guard(|| {
        let r = trigroups::adim(&triple(a, b, c)?).map_err(lib)?;
        write(
            out,
            TgAdim {
                adim: narrow(r.adim, "adim")?,
                m: narrow(r.m, "m")?,
                phi2m: narrow(r.phi2m, "phi(2m)")?,
                h: narrow(r.h, "h")?,
                classes: narrow(r.classes, "classes")?,
                hyperbolic_ks: narrow(r.hyperbolic_ks, "hyperbolic_ks")?,
                spherical_ks: narrow(r.spherical_ks, "spherical_ks")?,
            },
        )
    })
}

/// `#H` and friends; `mode` is one of the `TG_MULT_*` constants.
///
/// # Safety
/// `out` must be null or point to writable storage for a `TgMultiplicity`.
#[no_mangle]
pub unsafe extern "C" fn tg_multiplicity(a: u64, b: u64, c: u64, mode: i32, out: *mut TgMultiplicity) -> i32 {
    guard(|| {
        let mode = match mode {
            TG_MULT_AUTO => MultiplicityMode::Auto,
            TG_MULT_BRUTE => MultiplicityMode::ForceBrute,
            TG_MULT_CLOSED => MultiplicityMode::ForceClosed,
            _ => return Err((TG_ERR_OUT_OF_RANGE, format!("unknown multiplicity mode {mode}"))),
        };
        let r = trigroups::multiplicity(&triple(a, b, c)?, mode);
        write(
            out,
            TgMultiplicity {
                h: narrow(r.h, "h")?,
                h1: narrow(r.h1, "h1")?,
                h2: narrow(r.h2, "h2")?,
                t: r.t,
                u: r.u,
                method: match r.method {
                    Method::BruteForce => TG_METHOD_BRUTE_FORCE,
                    Method::ClosedForm => TG_METHOD_CLOSED_FORM,
                    Method::ResidueLift => TG_METHOD_RESIDUE_LIFT,
                },
                agreement: r.agreement.map_or(-1, i32::from),
            },
        )
    })
}

/// Sign of the curvature of the `k`-th conjugate: -1, 0 or 1.
/// `k` must be a unit modulo `2m`.
///
/// # Safety
/// `out` must be null or point to a writable `int32_t`.
#[no_mangle]
pub unsafe extern "C" fn tg_curvature_sign(a: u64, b: u64, c: u64, k: u64, out: *mut i32) -> i32 {
    guard(|| {
        let sign = trigroups::curvature_sign(&triple(a, b, c)?, k).map_err(lib)?;
        write(
            out,
            match sign {
                Sign::Negative => -1,
                Sign::Zero => 0,
                Sign::Positive => 1,
            },
        )
    })
}

/// Every triple of arithmetic dimension `r`. `mode` is `TG_MODE_PAPER` or
/// `TG_MODE_SAFE`; `threads = 0` uses every core.
///
/// # Safety
/// `out` must be null or point to writable storage for a pointer.
#[no_mangle]
pub unsafe extern "C" fn tg_enumerate(r: u64, mode: i32, threads: u32, out: *mut *mut TgEnumeration) -> i32 {
    guard(|| {
        if out.is_null() {
            return Err((TG_ERR_NULL, "null output pointer".into()));
        }
        if r == 0 {
            return Err((TG_ERR_OUT_OF_RANGE, "r must be at least 1".into()));
        }
        let bound_mode = match mode {
            TG_MODE_PAPER => BoundMode::Paper,
            TG_MODE_SAFE => BoundMode::Safe,
            _ => return Err((TG_ERR_OUT_OF_RANGE, format!("unknown bound mode {mode}"))),
        };
        let cfg = EnumerationConfig::new(r).with_mode(bound_mode).with_threads(threads as usize);
        let records = trigroups::enumerate(&cfg)
            .map_err(lib)?
            .iter()
            .map(record)
            .collect::<Result<Vec<_>, _>>()?;
        write(out, Box::into_raw(Box::new(TgEnumeration { records })))
    })
}

fn record(rec: &TripleRecord) -> Result<TgRecord, (i32, String)> {
    let [a, b, c] = rec.triple.entries().map(encode);
    Ok(TgRecord {
        a,
        b,
        c,
        adim: narrow(rec.adim, "adim")?,
        compact: rec.compact,
        found_via: match rec.found_via {
            FoundVia::DirectScan => TG_FOUND_DIRECT_SCAN,
            FoundVia::DivisorFilter => TG_FOUND_DIVISOR_FILTER,
            FoundVia::NoncompactLoop => TG_FOUND_NONCOMPACT_LOOP,
        },
    })
}

/// Number of records; 0 for a null handle.
///
/// # Safety
/// `e` must be null or a live handle from [`tg_enumerate`].
#[no_mangle]
pub unsafe extern "C" fn tg_enumeration_len(e: *const TgEnumeration) -> usize {
    // SAFETY: guaranteed by the caller.
    unsafe { e.as_ref() }.map_or(0, |e| e.records.len())
}

/// Copies record `i` into `out`.
///
/// # Safety
/// `e` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn tg_enumeration_get(e: *const TgEnumeration, i: usize, out: *mut TgRecord) -> i32 {
    guard(|| {
        // SAFETY: guaranteed by the caller.
        let e = unsafe { e.as_ref() }.ok_or((TG_ERR_NULL, "null enumeration handle".to_string()))?;
        let rec = e.records.get(i).ok_or_else(|| (TG_ERR_OUT_OF_RANGE, format!("index {i} out of range")))?;
        write(out, *rec)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `e` must be null or a handle from [`tg_enumerate`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tg_enumeration_free(e: *mut TgEnumeration) {
    if !e.is_null() {
        // SAFETY: the handle came from Box::into_raw in tg_enumerate.
        drop(unsafe { Box::from_raw(e) });
    }
}

/// Message for the last failed call on this thread; empty if none. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn tg_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn tg_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn infinity_round_trips() {
        assert_eq!(order(TG_INFINITY).unwrap(), Order::Infinity);
        assert_eq!(encode(order(7).unwrap()), 7);
        assert_eq!(order(1).unwrap_err().0, TG_ERR_INVALID_ORDER);
    }

    #[test]
    fn null_out_is_rejected() {
        assert_eq!(unsafe { tg_adim(2, 3, 7, ptr::null_mut()) }, TG_ERR_NULL);
    }
}
