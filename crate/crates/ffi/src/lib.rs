//! C ABI for `pmatch`.
//!
//! Texts, patterns and search outcomes cross the boundary as opaque
//! handles that the caller frees with the matching `*_free` function.
//! Every fallible call returns a [`PmStatus`]; on failure a description is
//! available from [`pm_last_error`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::ptr;
use std::slice;

use pmatch::{Algorithm, Alphabet, Error, Pattern, SearchOutcome, Text};

/// Status codes returned by fallible calls.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PmStatus {
    Ok = 0,
    InvalidArgument = 1,
    NullPointer = 2,
    Format = 3,
    Io = 4,
    Internal = 5,
    Panic = 6,
}

/// One symbol code.
pub type PmSymbol = u16;

pub const PM_ALGO_EXACT_NAIVE: u32 = 0;
pub const PM_ALGO_EXACT_KMP: u32 = 1;
pub const PM_ALGO_PM_NAIVE: u32 = 2;
pub const PM_ALGO_PM_AUTO: u32 = 3;

/// Counters of one search call.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PmStats {
    pub symbol_comparisons: u64,
    pub aux_lookups: u64,
    pub elapsed_ns: u64,
}

/// Opaque text handle.
pub struct PmText(Text);

/// Opaque pattern handle.
pub struct PmPattern(Pattern);

/// Opaque search result handle.
pub struct PmOutcome(SearchOutcome);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(err: &Error) -> PmStatus {
    match err {
        Error::InvalidArgument(_) => PmStatus::InvalidArgument,
        Error::Format(_) | Error::Json(_) | Error::Csv(_) => PmStatus::Format,
        Error::Io(_) => PmStatus::Io,
        Error::Internal(_) => PmStatus::Internal,
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard<F>(f: F) -> PmStatus
where
    F: FnOnce() -> Result<(), PmFailure>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PmStatus::Ok,
        Ok(Err(PmFailure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside pmatch".to_owned());
            PmStatus::Panic
        }
    }
}

struct PmFailure(PmStatus, String);

impl From<Error> for PmFailure {
    fn from(e: Error) -> Self {
        PmFailure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> PmFailure {
    PmFailure(PmStatus::NullPointer, format!("{what} is null"))
}

unsafe fn symbols_arg<'a>(ptr: *const PmSymbol, len: usize) -> Result<&'a [PmSymbol], PmFailure> {
    if len == 0 {
        return Ok(&[]);
    }
    if ptr.is_null() {
        return Err(null("symbols"));
    }
    Ok(slice::from_raw_parts(ptr, len))
}

unsafe fn path_arg(path: *const c_char) -> Result<PathBuf, PmFailure> {
    if path.is_null() {
        return Err(null("path"));
    }
    let s = CStr::from_ptr(path)
        .to_str()
        .map_err(|_| PmFailure(PmStatus::InvalidArgument, "path is not UTF-8".to_owned()))?;
    Ok(PathBuf::from(s))
}

unsafe fn store<T>(out: *mut *mut T, value: T) -> Result<(), PmFailure> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn handle<'a, T>(ptr: *const T, what: &str) -> Result<&'a T, PmFailure> {
    ptr.as_ref().ok_or_else(|| null(what))
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn pm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Copies `len` symbols into a new text over `0..sigma`.
///
/// # Safety
/// `symbols` must point to `len` readable values (it may be null when
/// `len` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pm_text_new(
    symbols: *const PmSymbol,
    len: usize,
    sigma: u32,
    out: *mut *mut PmText,
) -> PmStatus {
    guard(|| {
        let s = symbols_arg(symbols, len)?;
        let text = Text::new(Alphabet::new(sigma)?, s.to_vec())?;
        store(out, PmText(text))
    })
}

/// Reads a text in the PMTX binary format.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pm_text_load(path: *const c_char, out: *mut *mut PmText) -> PmStatus {
    guard(|| {
        let text = pmatch::format::read_text(&path_arg(path)?)?;
        store(out, PmText(text))
    })
}

/// Writes a text in the PMTX binary format.
///
/// # Safety
/// `text` must be a live handle and `path` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn pm_text_save(text: *const PmText, path: *const c_char) -> PmStatus {
    guard(|| {
        let text = handle(text, "text")?;
        pmatch::format::write_text(&path_arg(path)?, &text.0)?;
        Ok(())
    })
}

/// Number of symbols; 0 for a null handle.
///
/// # Safety
/// `text` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pm_text_len(text: *const PmText) -> usize {
    text.as_ref().map_or(0, |t| t.0.len())
}

/// Alphabet size; 0 for a null handle.
///
/// # Safety
/// `text` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pm_text_sigma(text: *const PmText) -> u32 {
    text.as_ref().map_or(0, |t| t.0.alphabet().size())
}

/// Borrowed pointer to the symbols, valid while the handle lives.
///
/// # Safety
/// `text` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pm_text_symbols(text: *const PmText) -> *const PmSymbol {
    text.as_ref()
        .map_or(ptr::null(), |t| t.0.symbols().as_ptr())
}

/// # Safety
/// `text` must be null or a handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn pm_text_free(text: *mut PmText) {
    if !text.is_null() {
        drop(Box::from_raw(text));
    }
}

/// Copies `len >= 1` symbols into a new pattern over `0..sigma`.
///
/// # Safety
/// `symbols` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pm_pattern_new(
    symbols: *const PmSymbol,
    len: usize,
    sigma: u32,
    out: *mut *mut PmPattern,
) -> PmStatus {
    guard(|| {
        let s = symbols_arg(symbols, len)?;
        let pattern = Pattern::new(Alphabet::new(sigma)?, s.to_vec())?;
        store(out, PmPattern(pattern))
    })
}

/// Reads a pattern in the PMTX binary format.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pm_pattern_load(
    path: *const c_char,
    out: *mut *mut PmPattern,
) -> PmStatus {
    guard(|| {
        let pattern = pmatch::format::read_pattern(&path_arg(path)?)?;
        store(out, PmPattern(pattern))
    })
}

/// # Safety
/// `pattern` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pm_pattern_len(pattern: *const PmPattern) -> usize {
    pattern.as_ref().map_or(0, |p| p.0.len())
}

/// # Safety
/// `pattern` must be null or a handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn pm_pattern_free(pattern: *mut PmPattern) {
    if !pattern.is_null() {
        drop(Box::from_raw(pattern));
    }
}

fn algorithm(code: u32) -> Result<Algorithm, PmFailure> {
    Ok(match code {
        PM_ALGO_EXACT_NAIVE => Algorithm::ExactNaive,
        PM_ALGO_EXACT_KMP => Algorithm::ExactKmp,
        PM_ALGO_PM_NAIVE => Algorithm::PmNaive,
        PM_ALGO_PM_AUTO => Algorithm::PmAuto,
        other => {
            return Err(PmFailure(
                PmStatus::InvalidArgument,
                format!("unknown algorithm code {other}"),
            ))
        }
    })
}

/// Searches `text` for `pattern` with one of the `PM_ALGO_*` algorithms.
///
/// # Safety
/// `text` and `pattern` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pm_search(
    algo: u32,
    text: *const PmText,
    pattern: *const PmPattern,
    out: *mut *mut PmOutcome,
) -> PmStatus {
    guard(|| {
        let algo = algorithm(algo)?;
        let text = handle(text, "text")?;
        let pattern = handle(pattern, "pattern")?;
        let outcome = algo.search(&text.0, &pattern.0)?;
        store(out, PmOutcome(outcome))
    })
}

/// Number of occurrences; 0 for a null handle.
///
/// # Safety
/// `outcome` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pm_outcome_count(outcome: *const PmOutcome) -> usize {
    outcome.as_ref().map_or(0, |o| o.0.occurrences.len())
}

/// Borrowed pointer to the 0-based start positions in increasing order,
/// valid while the handle lives.
///
/// # Safety
/// `outcome` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pm_outcome_occurrences(outcome: *const PmOutcome) -> *const usize {
    outcome
        .as_ref()
        .map_or(ptr::null(), |o| o.0.occurrences.as_ptr())
}

/// # Safety
/// `outcome` must be a live handle and `stats` writable.
#[no_mangle]
pub unsafe extern "C" fn pm_outcome_stats(
    outcome: *const PmOutcome,
    stats: *mut PmStats,
) -> PmStatus {
    guard(|| {
        let o = handle(outcome, "outcome")?;
        if stats.is_null() {
            return Err(null("stats"));
        }
        let s = o.0.stats;
        *stats = PmStats {
            symbol_comparisons: s.symbol_comparisons,
            aux_lookups: s.aux_lookups,
            elapsed_ns: s.elapsed_ns,
        };
        Ok(())
    })
}

/// # Safety
/// `outcome` must be null or a handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn pm_outcome_free(outcome: *mut PmOutcome) {
    if !outcome.is_null() {
        drop(Box::from_raw(outcome));
    }
}

/// Writes the prev-encoding (1-based entries) of `len >= 1` symbols into
/// `out`, which must hold `len` values.
///
/// # Safety
/// `symbols` must point to `len` readable values and `out` to `len`
/// writable ones.
#[no_mangle]
pub unsafe extern "C" fn pm_prev_encode(
    symbols: *const PmSymbol,
    len: usize,
    out: *mut u32,
) -> PmStatus {
    guard(|| {
        let s = symbols_arg(symbols, len)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let pattern = Pattern::new(Alphabet::new(pmatch::symbols::MAX_ALPHABET)?, s.to_vec())?;
        let enc = pmatch::prev_encode(&pattern);
        slice::from_raw_parts_mut(out, len).copy_from_slice(enc.as_slice());
        Ok(())
    })
}

/// Sets `*out` to whether the two `len`-symbol strings parameterize-match.
///
/// # Safety
/// `a` and `b` must each point to `len` readable values; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn pm_p_equivalent(
    a: *const PmSymbol,
    b: *const PmSymbol,
    len: usize,
    out: *mut bool,
) -> PmStatus {
    guard(|| {
        let (a, b) = (symbols_arg(a, len)?, symbols_arg(b, len)?);
        if out.is_null() {
            return Err(null("out"));
        }
        *out = pmatch::p_equivalent(a, b)?;
        Ok(())
    })
}
