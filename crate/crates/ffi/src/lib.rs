//! C ABI for the hgchow engine.
//!
//! Conventions:
//! - every fallible call returns an [`HgStatus`] and writes its result
//!   through an out-pointer;
//! - on failure, [`hg_last_error_message`] describes the error for the
//!   calling thread;
//! - strings returned by the library are owned by the caller and must be
//!   released with [`hg_string_free`];
//! - handles are released with their matching `*_free` function.
//!
//! Panics never cross the boundary; they surface as [`HgStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hgchow::hgpipeline::{self, Presentation, Target, VerificationReport};
use hgchow::polyring::Polynomial;
use hgchow::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HgStatus {
    Ok = 0,
    /// A null pointer or malformed UTF-8 was passed.
    InvalidArgument = 1,
    /// Genus outside the supported range (zero, or odd where even is needed).
    InvalidGenus = 2,
    UnknownLemma = 3,
    /// An index or parameter is out of range.
    OutOfRange = 4,
    /// A polynomial failed to parse.
    Parse = 5,
    /// A check ran and did not hold.
    VerificationFailed = 6,
    /// An internal invariant failed.
    Internal = 7,
    /// A Rust panic was caught.
    Panic = 8,
}

/// Which parameter a verification runs at.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HgTargetKind {
    Genus = 0,
    ProjectiveN = 1,
}

/// A derived presentation of the Chow ring at one genus.
pub struct HgPresentation(Presentation);

/// An ordered list of verification reports.
pub struct HgReportList(Vec<VerificationReport>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> HgStatus {
    match e {
        Error::InvalidGenus(_) => HgStatus::InvalidGenus,
        Error::UnknownLemma(_) => HgStatus::UnknownLemma,
        Error::IndexOutOfRange { .. } | Error::InvalidParameter(_) => HgStatus::OutOfRange,
        Error::Parse { .. } => HgStatus::Parse,
        Error::VerificationFailed(_) => HgStatus::VerificationFailed,
        _ => HgStatus::Internal,
    }
}

/// Runs `f`, recording any error or panic for the calling thread.
fn guard(f: impl FnOnce() -> Result<(), (HgStatus, String)>) -> HgStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HgStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("panic: {msg}"));
            HgStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (HgStatus, String) {
    (status_of(&e), e.to_string())
}

fn bad_arg(what: &str) -> (HgStatus, String) {
    (HgStatus::InvalidArgument, what.to_string())
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (HgStatus, String)> {
    if s.is_null() {
        return Err(bad_arg(&format!("{what} is null")));
    }
    CStr::from_ptr(s).to_str().map_err(|_| bad_arg(&format!("{what} is not UTF-8")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), (HgStatus, String)> {
    if out.is_null() {
        return Err(bad_arg("output pointer is null"));
    }
    out.write(value);
    Ok(())
}

fn to_c_string(s: String) -> Result<*mut c_char, (HgStatus, String)> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| (HgStatus::Internal, "string contains NUL".into()))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (HgStatus, String)> {
    p.as_ref().ok_or_else(|| bad_arg(&format!("{what} is null")))
}

/// Library version, a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn hg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn hg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Derives the presentation at even genus `genus`, with graded pieces up
/// to `max_degree`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn hg_presentation_new(genus: u32, max_degree: u32, out: *mut *mut HgPresentation) -> HgStatus {
    guard(|| {
        if out.is_null() {
            return Err(bad_arg("output pointer is null"));
        }
        let p = hgpipeline::presentation(genus, max_degree).map_err(lib_err)?;
        write_out(out, Box::into_raw(Box::new(HgPresentation(p))))
    })
}

/// Releases a presentation. Null is ignored.
///
/// # Safety
/// `p` must be null or a live handle from [`hg_presentation_new`].
#[no_mangle]
pub unsafe extern "C" fn hg_presentation_free(p: *mut HgPresentation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Order of the Picard group recorded in the presentation.
///
/// # Safety
/// `p` must be a live handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hg_presentation_picard_order(p: *const HgPresentation, out: *mut u64) -> HgStatus {
    guard(|| write_out(out, deref(p, "presentation")?.0.picard_order))
}

/// Number of defining relations.
///
/// # Safety
/// `p` must be a live handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hg_presentation_relation_count(p: *const HgPresentation, out: *mut usize) -> HgStatus {
    guard(|| write_out(out, deref(p, "presentation")?.0.relations.len()))
}

/// The `index`-th relation as a polynomial string in `c1, c2`.
///
/// # Safety
/// `p` must be a live handle; `out` valid for a write. The string must be
/// released with [`hg_string_free`].
#[no_mangle]
pub unsafe extern "C" fn hg_presentation_relation(
    p: *const HgPresentation,
    index: usize,
    out: *mut *mut c_char,
) -> HgStatus {
    guard(|| {
        let rels = &deref(p, "presentation")?.0.relations;
        let rel = rels.get(index).ok_or_else(|| {
            (
                HgStatus::OutOfRange,
                format!("relation index {index} out of range 0..{}", rels.len()),
            )
        })?;
        write_out(out, to_c_string(rel.to_string())?)
    })
}

/// The presentation as JSON. Certificates are included when
/// `with_certificates` is true.
///
/// # Safety
/// `p` must be a live handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hg_presentation_to_json(
    p: *const HgPresentation,
    with_certificates: bool,
    out: *mut *mut c_char,
) -> HgStatus {
    guard(|| {
        let mut pres = deref(p, "presentation")?.0.clone();
        if !with_certificates {
            pres.strip_certificates();
        }
        let json = serde_json::to_string(&pres).map_err(|e| (HgStatus::Internal, e.to_string()))?;
        write_out(out, to_c_string(json)?)
    })
}

/// Order of `Pic` at even genus `genus`.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hg_picard(genus: u32, out: *mut u64) -> HgStatus {
    guard(|| write_out(out, hgpipeline::picard(genus).map_err(lib_err)?))
}

/// Runs one lemma. A lemma that runs but fails still returns `Ok`; inspect
/// the list with [`hg_report_list_all_verified`].
///
/// # Safety
/// `lemma` must be a NUL-terminated string; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hg_verify(
    kind: HgTargetKind,
    value: u32,
    lemma: *const c_char,
    out: *mut *mut HgReportList,
) -> HgStatus {
    guard(|| {
        let lemma = read_str(lemma, "lemma")?;
        if out.is_null() {
            return Err(bad_arg("output pointer is null"));
        }
        let target = match kind {
            HgTargetKind::Genus => Target::Genus(value),
            HgTargetKind::ProjectiveN => Target::N(value),
        };
        let report = hgpipeline::verify(target, lemma).map_err(lib_err)?;
        write_out(out, Box::into_raw(Box::new(HgReportList(vec![report]))))
    })
}

/// Runs every lemma at genus `genus` on `jobs` threads (0 = one per core).
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hg_verify_all(genus: u32, jobs: usize, out: *mut *mut HgReportList) -> HgStatus {
    guard(|| {
        if out.is_null() {
            return Err(bad_arg("output pointer is null"));
        }
        let reports = hgpipeline::verify_all(genus, jobs).map_err(lib_err)?;
        write_out(out, Box::into_raw(Box::new(HgReportList(reports))))
    })
}

/// Releases a report list. Null is ignored.
///
/// # Safety
/// `list` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hg_report_list_free(list: *mut HgReportList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// Number of reports, or 0 for null.
///
/// # Safety
/// `list` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hg_report_list_len(list: *const HgReportList) -> usize {
    list.as_ref().map_or(0, |l| l.0.len())
}

/// True when every report in the list verified. False for null.
///
/// # Safety
/// `list` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hg_report_list_all_verified(list: *const HgReportList) -> bool {
    list.as_ref()
        .is_some_and(|l| l.0.iter().all(VerificationReport::is_verified))
}

/// The reports as a JSON array, without timings.
///
/// # Safety
/// `list` must be a live handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hg_report_list_to_json(list: *const HgReportList, out: *mut *mut c_char) -> HgStatus {
    guard(|| {
        let reports: Vec<VerificationReport> =
            deref(list, "report list")?.0.iter().cloned().map(VerificationReport::without_timing).collect();
        let json = serde_json::to_string(&reports).map_err(|e| (HgStatus::Internal, e.to_string()))?;
        write_out(out, to_c_string(json)?)
    })
}

/// Parses a polynomial and prints it in canonical form.
///
/// # Safety
/// `input` must be a NUL-terminated string; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hg_poly_normalize(input: *const c_char, out: *mut *mut c_char) -> HgStatus {
    guard(|| {
        let text = read_str(input, "input")?;
        let p: Polynomial = text.parse().map_err(lib_err)?;
        write_out(out, to_c_string(p.to_string())?)
    })
}
