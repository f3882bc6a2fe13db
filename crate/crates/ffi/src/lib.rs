//! C interface to `bca-core`.
//!
//! Structures and regions are opaque handles owned by the caller and released
//! with the matching `_free` function. Every fallible call returns a
//! [`BcaStatus`]; on failure `bca_last_error` describes the cause. Strings
//! returned through out-parameters must be released with `bca_string_free`.

use bca_core::cli::parse_spec;
use bca_core::interval::{self, Value};
use bca_core::{points, ContactStructure, Elem, Error, Region};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

pub const BCA_ABI_VERSION: u32 = 1;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BcaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    OutOfScope = 5,
    Internal = 6,
}

/// A finite contact structure.
pub struct BcaStructure {
    inner: ContactStructure,
}

/// A regular open region of the real line.
pub struct BcaRegion {
    inner: Region,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: BcaStatus, message: &str) -> BcaStatus {
    set_error(message);
    status
}

fn status_of(e: &Error) -> BcaStatus {
    match e {
        Error::Parse { .. } => BcaStatus::ParseError,
        Error::OutsideExhaustiveScope { .. } | Error::TooManyAtoms(_) => BcaStatus::OutOfScope,
        _ => BcaStatus::InvalidArgument,
    }
}

fn from_error(e: Error) -> BcaStatus {
    fail(status_of(&e), &e.to_string())
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, BcaStatus> {
    if s.is_null() {
        return Err(fail(BcaStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(BcaStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> BcaStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            BcaStatus::Ok
        }
        Err(_) => fail(BcaStatus::Internal, "result contains a NUL byte"),
    }
}

macro_rules! check_ptr {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(BcaStatus::NullPointer, concat!("null pointer: ", stringify!($p)));
        })+
    };
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

#[no_mangle]
pub extern "C" fn bca_abi_version() -> u32 {
    BCA_ABI_VERSION
}

/// Message describing the last failure on this thread. Valid until the next
/// failing call on the same thread; never null.
#[no_mangle]
pub extern "C" fn bca_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bca_structure_parse(spec: *const c_char, out: *mut *mut BcaStructure) -> BcaStatus {
    check_ptr!(out);
    let src = try_status!(read_str(spec));
    match parse_spec(src).and_then(|f| f.to_structure()) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(BcaStructure { inner }));
            BcaStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// # Safety
/// `s` must come from `bca_structure_parse` and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn bca_structure_free(s: *mut BcaStructure) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// `s` must be a live structure handle or null.
#[no_mangle]
pub unsafe extern "C" fn bca_structure_atom_count(s: *const BcaStructure) -> u32 {
    s.as_ref().map_or(0, |s| s.inner.atom_count() as u32)
}

/// Bitmask of the element joining the comma or space separated atom names.
///
/// # Safety
/// `s` must be a live handle, `atoms` a NUL-terminated string, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn bca_structure_element(
    s: *const BcaStructure,
    atoms: *const c_char,
    out: *mut u32,
) -> BcaStatus {
    check_ptr!(s, out);
    let names = try_status!(read_str(atoms));
    let list: Vec<&str> = names
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();
    match (*s).inner.algebra().element(&list) {
        Ok(e) => {
            *out = e.bits();
            BcaStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

unsafe fn relation(
    s: *const BcaStructure,
    x: u32,
    y: u32,
    out: *mut bool,
    f: fn(&ContactStructure, Elem, Elem) -> bool,
) -> BcaStatus {
    check_ptr!(s, out);
    let b = (*s).inner.algebra();
    let x = try_status!(b.check(Elem(x)).map_err(from_error));
    let y = try_status!(b.check(Elem(y)).map_err(from_error));
    *out = f(&(*s).inner, x, y);
    BcaStatus::Ok
}

/// # Safety
/// `s` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn bca_contact(s: *const BcaStructure, x: u32, y: u32, out: *mut bool) -> BcaStatus {
    relation(s, x, y, out, ContactStructure::contact)
}

/// # Safety
/// `s` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn bca_well_inside(s: *const BcaStructure, x: u32, y: u32, out: *mut bool) -> BcaStatus {
    relation(s, x, y, out, ContactStructure::well_inside)
}

/// JSON array of verdicts for the contact axioms and the Grzegorczyk conditions.
///
/// # Safety
/// `s` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn bca_check_json(s: *const BcaStructure, out: *mut *mut c_char) -> BcaStatus {
    check_ptr!(s, out);
    let s = &(*s).inner;
    let report = s.check_contact_axioms().and_then(|mut r| {
        r.extend(points::check_g1_g2(s)?);
        Ok(r)
    });
    match report {
        Ok(r) => write_string(out, r.to_json()),
        Err(e) => from_error(e),
    }
}

/// # Safety
/// `expr` must be a NUL-terminated string and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn bca_region_parse(expr: *const c_char, out: *mut *mut BcaRegion) -> BcaStatus {
    check_ptr!(out);
    let src = try_status!(read_str(expr));
    match interval::parse_region(src) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(BcaRegion { inner }));
            BcaStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// # Safety
/// `r` must come from `bca_region_parse` and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn bca_region_free(r: *mut BcaRegion) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Canonical text of a region.
///
/// # Safety
/// `r` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn bca_region_to_string(r: *const BcaRegion, out: *mut *mut c_char) -> BcaStatus {
    check_ptr!(r, out);
    write_string(out, (*r).inner.to_string())
}

/// # Safety
/// Both handles must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn bca_region_contact(a: *const BcaRegion, b: *const BcaRegion, out: *mut bool) -> BcaStatus {
    check_ptr!(a, b, out);
    *out = (*a).inner.contact(&(*b).inner);
    BcaStatus::Ok
}

/// # Safety
/// Both handles must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn bca_region_well_inside(
    a: *const BcaRegion,
    b: *const BcaRegion,
    out: *mut bool,
) -> BcaStatus {
    check_ptr!(a, b, out);
    *out = (*a).inner.well_inside(&(*b).inner);
    BcaStatus::Ok
}

/// Evaluates a region expression or predicate; the result is the canonical
/// region text or `true`/`false`.
///
/// # Safety
/// `expr` must be a NUL-terminated string and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn bca_region_eval(expr: *const c_char, out: *mut *mut c_char) -> BcaStatus {
    check_ptr!(out);
    let src = try_status!(read_str(expr));
    match interval::evaluate(src) {
        Ok(Value::Region(r)) => write_string(out, r.to_string()),
        Ok(Value::Bool(b)) => write_string(out, b.to_string()),
        Err(e) => from_error(e),
    }
}

/// # Safety
/// `s` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn bca_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
