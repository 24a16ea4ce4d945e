//! C ABI for the kbalance library.
//!
//! Conventions:
//! - Generating functions travel as opaque `KbGf` handles; release them
//!   with [`kb_gf_free`].
//! - Every returned string is NUL-terminated, heap-allocated by this
//!   library, and must be released with [`kb_string_free`]. Coefficient
//!   lists are space-separated decimal integers (values routinely exceed
//!   64 bits, so no binary integer channel is offered).
//! - Functions that can fail return a [`KbStatus`]; results come back
//!   through out-pointers that are written only on `KB_STATUS_OK`
//!   (except `kb_verify`, which reports on failure too).
//! - A `budget` argument of 0 means "default, honoring the
//!   `KBALANCE_ENUM_BUDGET` environment variable".

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use kbalance::bigpoly::RatFunc;
use kbalance::chebyshev::{cheb, ChebKind};
use kbalance::families;
use kbalance::lattice::{PathSpec, Terminal};
use kbalance::oracle::{
    count_balanced_strings, count_extent_paths, count_paths, count_walks, Budget, OracleError,
};
use kbalance::transfer::{decode_walk, encode_walk, Walk};
use kbalance::verify;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KbStatus {
    KbStatusOk = 0,
    KbStatusInvalidArgument = 1,
    KbStatusBudgetExceeded = 2,
    KbStatusVerifyFailed = 3,
    KbStatusNullPointer = 4,
    KbStatusInternal = 5,
}

use KbStatus::*;

/// Terminal-height condition for `kb_count_paths`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KbTerminal {
    KbTerminalGround = 0,
    KbTerminalTop = 1,
    KbTerminalAny = 2,
}

/// Opaque handle to a reduced rational function.
pub struct KbGf {
    inner: RatFunc,
}

fn guard<F>(f: F) -> KbStatus
where
    F: FnOnce() -> KbStatus + UnwindSafe,
{
    catch_unwind(f).unwrap_or(KbStatusInternal)
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// The caller's string argument, if it is a valid non-NULL UTF-8
/// C string.
unsafe fn read_str<'a>(s: *const c_char) -> Option<&'a str> {
    if s.is_null() {
        return None;
    }
    CStr::from_ptr(s).to_str().ok()
}

fn budget_from(raw: u64) -> Budget {
    if raw == 0 {
        Budget::from_env()
    } else {
        Budget(raw)
    }
}

fn oracle_status(e: &OracleError) -> KbStatus {
    match e {
        OracleError::BudgetExceeded { .. } => KbStatusBudgetExceeded,
        _ => KbStatusInvalidArgument,
    }
}

/// Builds the generating function of `family` (one of `f`, `g`, `F`,
/// `G`, `Fbar`, `Gbar`, `H`, `Hbar`, `R`, `bad`, `good`) at index `k`.
///
/// # Safety
/// `family` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kb_gf_new(
    family: *const c_char,
    k: i64,
    out: *mut *mut KbGf,
) -> KbStatus {
    if out.is_null() {
        return KbStatusNullPointer;
    }
    let Some(family) = read_str(family) else {
        return KbStatusNullPointer;
    };
    let family = family.to_owned();
    guard(move || match families::resolve(&family, k) {
        Ok(inner) => {
            // SAFETY: out checked non-null above.
            unsafe { *out = Box::into_raw(Box::new(KbGf { inner })) };
            KbStatusOk
        }
        Err(_) => KbStatusInvalidArgument,
    })
}

/// Releases a handle obtained from [`kb_gf_new`]. NULL is a no-op.
///
/// # Safety
/// `gf` must be NULL or a pointer returned by `kb_gf_new` that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn kb_gf_free(gf: *mut KbGf) {
    if !gf.is_null() {
        drop(Box::from_raw(gf));
    }
}

unsafe fn gf_part(gf: *const KbGf, numerator: bool) -> *mut c_char {
    let Some(gf) = gf.as_ref() else {
        return ptr::null_mut();
    };
    let poly = if numerator {
        gf.inner.num()
    } else {
        gf.inner.den()
    };
    let rendered: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
    into_c_string(rendered.join(" "))
}

/// Numerator coefficients, ascending powers, space-separated decimals.
/// Returns NULL on a NULL handle; free with [`kb_string_free`].
///
/// # Safety
/// `gf` must be NULL or a live handle from `kb_gf_new`.
#[no_mangle]
pub unsafe extern "C" fn kb_gf_numerator(gf: *const KbGf) -> *mut c_char {
    gf_part(gf, true)
}

/// Denominator coefficients; see [`kb_gf_numerator`].
///
/// # Safety
/// `gf` must be NULL or a live handle from `kb_gf_new`.
#[no_mangle]
pub unsafe extern "C" fn kb_gf_denominator(gf: *const KbGf) -> *mut c_char {
    gf_part(gf, false)
}

/// First `terms` power-series coefficients of the handle, written as a
/// space-separated decimal string.
///
/// # Safety
/// `gf` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kb_gf_series(
    gf: *const KbGf,
    terms: usize,
    out: *mut *mut c_char,
) -> KbStatus {
    if out.is_null() {
        return KbStatusNullPointer;
    }
    let Some(gf) = gf.as_ref() else {
        return KbStatusNullPointer;
    };
    let inner = gf.inner.clone();
    guard(move || match inner.series(terms) {
        Ok(series) => {
            unsafe { *out = into_c_string(series.to_string()) };
            KbStatusOk
        }
        Err(_) => KbStatusInvalidArgument,
    })
}

/// Coefficients of a combinatorial Chebyshev polynomial. `kind` is the
/// ASCII character `T` or `U`; `k >= 0` for T, `k >= -1` for U.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kb_cheb(kind: c_char, k: i64, out: *mut *mut c_char) -> KbStatus {
    if out.is_null() {
        return KbStatusNullPointer;
    }
    let kind = match kind as u8 {
        b'T' if k >= 0 => ChebKind::T,
        b'U' if k >= -1 => ChebKind::U,
        _ => return KbStatusInvalidArgument,
    };
    guard(move || {
        let poly = cheb(kind, k);
        let rendered: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
        unsafe { *out = into_c_string(rendered.join(" ")) };
        KbStatusOk
    })
}

/// Number of k-balanced binary strings of length `n`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kb_count_strings(
    k: i64,
    n: u32,
    budget: u64,
    out: *mut u64,
) -> KbStatus {
    if out.is_null() {
        return KbStatusNullPointer;
    }
    guard(move || match count_balanced_strings(k, n, budget_from(budget)) {
        Ok(count) => {
            unsafe { *out = count };
            KbStatusOk
        }
        Err(e) => oracle_status(&e),
    })
}

/// Number of length-`n` walks from `v_0` on `C_k` that visit all nodes
/// (`cover` true) or miss at least one (false).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kb_count_walks(
    k: i64,
    n: u32,
    cover: bool,
    budget: u64,
    out: *mut u64,
) -> KbStatus {
    if out.is_null() {
        return KbStatusNullPointer;
    }
    guard(move || match count_walks(k, n, cover, budget_from(budget)) {
        Ok(count) => {
            unsafe { *out = count };
            KbStatusOk
        }
        Err(e) => oracle_status(&e),
    })
}

/// Number of u/d paths of the given size bounded by `lower <= 0` and
/// `upper >= 0` with the stated terminal condition. For
/// `KB_TERMINAL_TOP` the size convention is `steps - upper`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kb_count_paths(
    lower: i64,
    upper: i64,
    terminal: KbTerminal,
    size: u32,
    budget: u64,
    out: *mut u64,
) -> KbStatus {
    if out.is_null() {
        return KbStatusNullPointer;
    }
    let terminal = match terminal {
        KbTerminal::KbTerminalGround => Terminal::Ground,
        KbTerminal::KbTerminalTop => Terminal::Top,
        KbTerminal::KbTerminalAny => Terminal::Any,
    };
    let Ok(spec) = PathSpec::new(lower, upper, terminal) else {
        return KbStatusInvalidArgument;
    };
    guard(move || match count_paths(&spec, size, budget_from(budget)) {
        Ok(count) => {
            unsafe { *out = count };
            KbStatusOk
        }
        Err(e) => oracle_status(&e),
    })
}

/// Number of `n`-step paths of vertical extent at most `k`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kb_count_extent_paths(
    k: i64,
    n: u32,
    budget: u64,
    out: *mut u64,
) -> KbStatus {
    if out.is_null() {
        return KbStatusNullPointer;
    }
    guard(move || match count_extent_paths(k, n, budget_from(budget)) {
        Ok(count) => {
            unsafe { *out = count };
            KbStatusOk
        }
        Err(e) => oracle_status(&e),
    })
}

/// Encodes a walk on `C_k` (node indices, `len` of them, starting at 0)
/// into its transition bit string, e.g. `"11011"`.
///
/// # Safety
/// `nodes` must point to `len` readable elements; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn kb_encode_walk(
    k: i64,
    nodes: *const u32,
    len: usize,
    out: *mut *mut c_char,
) -> KbStatus {
    if out.is_null() || (nodes.is_null() && len > 0) {
        return KbStatusNullPointer;
    }
    if k < 3 {
        return KbStatusInvalidArgument;
    }
    let nodes: Vec<usize> = std::slice::from_raw_parts(nodes, len)
        .iter()
        .map(|&n| n as usize)
        .collect();
    guard(move || match Walk::new(k as usize, nodes) {
        Ok(walk) => {
            let bits: String = encode_walk(&walk).iter().map(|b| b.to_string()).collect();
            unsafe { *out = into_c_string(bits) };
            KbStatusOk
        }
        Err(_) => KbStatusInvalidArgument,
    })
}

/// Decodes a bit string (`'0'`/`'1'` characters) into the node sequence
/// of the walk it generates on `C_k`, space-separated.
///
/// # Safety
/// `bits` must be a valid C string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn kb_decode_walk(
    k: i64,
    bits: *const c_char,
    out: *mut *mut c_char,
) -> KbStatus {
    if out.is_null() {
        return KbStatusNullPointer;
    }
    let Some(bits) = read_str(bits) else {
        return KbStatusNullPointer;
    };
    if k < 3 {
        return KbStatusInvalidArgument;
    }
    let parsed: Result<Vec<u8>, ()> = bits
        .trim()
        .chars()
        .map(|c| match c {
            '0' => Ok(0u8),
            '1' => Ok(1u8),
            _ => Err(()),
        })
        .collect();
    let Ok(parsed) = parsed else {
        return KbStatusInvalidArgument;
    };
    guard(move || match decode_walk(k as usize, &parsed) {
        Ok(walk) => {
            let rendered: Vec<String> = walk.nodes().iter().map(|n| n.to_string()).collect();
            unsafe { *out = into_c_string(rendered.join(" ")) };
            KbStatusOk
        }
        Err(_) => KbStatusInvalidArgument,
    })
}

/// Runs a verification suite (`cheb`, `tables`, `transfer`,
/// `reconcile`, `oracle`, or `all`). Returns `KB_STATUS_OK` when every
/// check passes and `KB_STATUS_VERIFY_FAILED` otherwise. If `report`
/// is non-NULL it receives the full PASS/FAIL listing in both cases.
///
/// # Safety
/// `suite` must be a valid C string; `report` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn kb_verify(
    suite: *const c_char,
    kmax: i64,
    nmax: u32,
    report: *mut *mut c_char,
) -> KbStatus {
    let Some(suite) = read_str(suite) else {
        return KbStatusNullPointer;
    };
    if kmax < 1 || nmax < 1 {
        return KbStatusInvalidArgument;
    }
    let suite = suite.to_owned();
    let report_addr = report as usize;
    guard(move || {
        let budget = Budget::from_env();
        let reports = match suite.as_str() {
            "cheb" => vec![verify::suite_cheb(kmax)],
            "tables" => vec![verify::suite_tables(kmax)],
            "transfer" => vec![verify::suite_transfer(kmax)],
            "reconcile" => vec![verify::suite_reconcile(kmax)],
            "oracle" => match verify::suite_oracle(kmax, nmax, budget) {
                Ok(r) => vec![r],
                Err(e) => return oracle_status(&e),
            },
            "all" => match verify::suite_all(kmax, nmax, budget) {
                Ok(r) => r,
                Err(e) => return oracle_status(&e),
            },
            _ => return KbStatusInvalidArgument,
        };
        let all_passed = reports.iter().all(|r| r.all_passed());
        let report = report_addr as *mut *mut c_char;
        if !report.is_null() {
            let text: String = reports.iter().map(|r| r.to_string()).collect();
            // SAFETY: caller contract; non-NULL checked above.
            unsafe { *report = into_c_string(text) };
        }
        if all_passed {
            KbStatusOk
        } else {
            KbStatusVerifyFailed
        }
    })
}

/// Releases a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must be NULL or a string returned by this library that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn kb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
