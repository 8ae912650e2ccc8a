//! C interface to `riordan-core`.
//!
//! Matrices and J-fractions cross the boundary as opaque handles that must be
//! released with the matching `*_free` function. Every fallible call returns a
//! [`RiordanStatus`]; after a non-zero status, [`riordan_last_error`] describes
//! the failure on the calling thread. Strings returned by the library are
//! owned by the caller and released with [`riordan_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::c_char;
use num_traits::ToPrimitive;
use riordan_core::error::Error;
use riordan_core::families::{family_triple, named_triple, FamilySpec, Flavor, GammaHFTriple, Polytope};
use riordan_core::oeis::{check_triangle, fixture};
use riordan_core::{JFraction, LowerTriMatrix, MultiPoly};

/// Result of an FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RiordanStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    OutOfRange = 4,
    /// The entry is symbolic, fractional or too large for the requested type.
    NotRepresentable = 5,
    /// Comparison against reference data failed.
    Mismatch = 6,
    MathError = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RiordanFlavor {
    Ordinary = 0,
    Exponential = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RiordanWhich {
    H = 0,
    F = 1,
    Gamma = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RiordanPolytope {
    Simplex = 0,
    Hypercube = 1,
    Associahedron = 2,
    Permutahedron = 3,
}

/// Opaque lower-triangular matrix with polynomial entries.
pub struct RiordanMatrix(LowerTriMatrix<MultiPoly>);

/// Opaque Jacobi continued fraction.
pub struct RiordanJFraction(JFraction);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = CString::new(message.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn fail(status: RiordanStatus, message: impl Into<String>) -> RiordanStatus {
    set_error(message);
    status
}

fn from_error(e: Error) -> RiordanStatus {
    let status = match e {
        Error::Parse { .. } | Error::InvalidANumber(_) => RiordanStatus::ParseError,
        Error::IndexBeyondTruncation { .. } => RiordanStatus::OutOfRange,
        Error::SymbolicEntries { .. } | Error::NonIntegralEntry { .. } => RiordanStatus::NotRepresentable,
        Error::UnknownFixture(_) => RiordanStatus::InvalidArgument,
        _ => RiordanStatus::MathError,
    };
    fail(status, e.to_string())
}

/// Runs `body`, turning panics into [`RiordanStatus::Panic`].
fn guard(body: impl FnOnce() -> RiordanStatus) -> RiordanStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|_| fail(RiordanStatus::Panic, "internal panic"))
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn riordan_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn riordan_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, RiordanStatus> {
    if s.is_null() {
        return Err(fail(RiordanStatus::NullPointer, format!("{what} is NULL")));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(RiordanStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

fn pick(t: GammaHFTriple, which: RiordanWhich) -> LowerTriMatrix<MultiPoly> {
    match which {
        RiordanWhich::H => t.h,
        RiordanWhich::F => t.f,
        RiordanWhich::Gamma => t.gamma,
    }
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> RiordanStatus {
    *out = Box::into_raw(Box::new(value));
    RiordanStatus::Ok
}

/// Builds `size` rows of the γ-, h- or f-matrix of the ordinary family
/// `(1/(1-x), x(1+rx)/(1-x))` or the exponential family `[e^x, x(1+rx/2)]`.
/// With `symbolic_r` set, `r` is ignored and entries are polynomials in `r`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn riordan_family_matrix(
    flavor: RiordanFlavor,
    symbolic_r: bool,
    r: i64,
    which: RiordanWhich,
    size: usize,
    out: *mut *mut RiordanMatrix,
) -> RiordanStatus {
    guard(|| {
        if out.is_null() {
            return fail(RiordanStatus::NullPointer, "out is NULL");
        }
        let flavor = match flavor {
            RiordanFlavor::Ordinary => Flavor::Ordinary,
            RiordanFlavor::Exponential => Flavor::Exponential,
        };
        let r = if symbolic_r { MultiPoly::r() } else { MultiPoly::int(r) };
        match family_triple(&FamilySpec::new(flavor, r), size) {
            Ok(t) => put(out, RiordanMatrix(pick(t, which))),
            Err(e) => from_error(e),
        }
    })
}

/// Builds `size` rows of a named polytope's γ-, h- or f-matrix.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn riordan_polytope_matrix(
    polytope: RiordanPolytope,
    which: RiordanWhich,
    size: usize,
    out: *mut *mut RiordanMatrix,
) -> RiordanStatus {
    guard(|| {
        if out.is_null() {
            return fail(RiordanStatus::NullPointer, "out is NULL");
        }
        let p = match polytope {
            RiordanPolytope::Simplex => Polytope::Simplex,
            RiordanPolytope::Hypercube => Polytope::Hypercube,
            RiordanPolytope::Associahedron => Polytope::AssociahedronA,
            RiordanPolytope::Permutahedron => Polytope::Permutahedron,
        };
        match named_triple(p, size.max(2)).matrices(size) {
            Ok(t) => put(out, RiordanMatrix(pick(t, which))),
            Err(e) => from_error(e),
        }
    })
}

/// Number of rows.
///
/// # Safety
/// `m` must be a live handle or NULL; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn riordan_matrix_size(m: *const RiordanMatrix, out: *mut usize) -> RiordanStatus {
    guard(|| match (m.as_ref(), out.is_null()) {
        (Some(m), false) => {
            *out = m.0.size();
            RiordanStatus::Ok
        }
        _ => fail(RiordanStatus::NullPointer, "matrix or out is NULL"),
    })
}

unsafe fn entry<'a>(m: *const RiordanMatrix, n: usize, k: usize) -> Result<&'a MultiPoly, RiordanStatus> {
    let m = m.as_ref().ok_or_else(|| fail(RiordanStatus::NullPointer, "matrix is NULL"))?;
    if n >= m.0.size() || k > n {
        return Err(fail(RiordanStatus::OutOfRange, format!("entry ({n}, {k}) is outside the matrix")));
    }
    Ok(m.0.get(n, k))
}

/// Entry `(n, k)` in canonical text form, e.g. `3*r^2 + 24*r + 16`.
/// Release the string with [`riordan_string_free`].
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn riordan_matrix_entry_string(
    m: *const RiordanMatrix,
    n: usize,
    k: usize,
    out: *mut *mut c_char,
) -> RiordanStatus {
    guard(|| {
        if out.is_null() {
            return fail(RiordanStatus::NullPointer, "out is NULL");
        }
        match entry(m, n, k) {
            Ok(c) => {
                *out = CString::new(c.to_string()).expect("no NUL in polynomials").into_raw();
                RiordanStatus::Ok
            }
            Err(s) => s,
        }
    })
}

/// Entry `(n, k)` as a 64-bit integer; fails with `NotRepresentable` for
/// symbolic, fractional or oversized entries.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn riordan_matrix_entry_i64(
    m: *const RiordanMatrix,
    n: usize,
    k: usize,
    out: *mut i64,
) -> RiordanStatus {
    guard(|| {
        if out.is_null() {
            return fail(RiordanStatus::NullPointer, "out is NULL");
        }
        let c = match entry(m, n, k) {
            Ok(c) => c,
            Err(s) => return s,
        };
        match c.as_integer().and_then(|v| v.to_i64()) {
            Some(v) => {
                *out = v;
                RiordanStatus::Ok
            }
            None => fail(RiordanStatus::NotRepresentable, format!("entry ({n}, {k}) = {c} is not an i64")),
        }
    })
}

/// New matrix with every row reversed.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn riordan_matrix_reversed(m: *const RiordanMatrix, out: *mut *mut RiordanMatrix) -> RiordanStatus {
    guard(|| match (m.as_ref(), out.is_null()) {
        (Some(m), false) => put(out, RiordanMatrix(m.0.reversed())),
        _ => fail(RiordanStatus::NullPointer, "matrix or out is NULL"),
    })
}

/// Substitutes an integer for `r` in every entry.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn riordan_matrix_eval_r(
    m: *const RiordanMatrix,
    r: i64,
    out: *mut *mut RiordanMatrix,
) -> RiordanStatus {
    guard(|| match (m.as_ref(), out.is_null()) {
        (Some(m), false) => put(out, RiordanMatrix(m.0.eval_r(r))),
        _ => fail(RiordanStatus::NullPointer, "matrix or out is NULL"),
    })
}

/// Compares the matrix with an embedded OEIS triangle such as `"A001263"`.
/// Returns `Ok` on agreement and `Mismatch` otherwise.
///
/// # Safety
/// `m` must be a live handle; `anumber` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn riordan_matrix_check_oeis(m: *const RiordanMatrix, anumber: *const c_char) -> RiordanStatus {
    guard(|| {
        let Some(m) = m.as_ref() else {
            return fail(RiordanStatus::NullPointer, "matrix is NULL");
        };
        let anumber = match read_str(anumber, "anumber") {
            Ok(a) => a,
            Err(s) => return s,
        };
        let report = match fixture(anumber).and_then(|f| check_triangle(&m.0, f)) {
            Ok(r) => r,
            Err(e) => return from_error(e),
        };
        if report.is_match() {
            RiordanStatus::Ok
        } else {
            fail(RiordanStatus::Mismatch, report.to_string())
        }
    })
}

/// Releases a matrix. NULL is ignored.
///
/// # Safety
/// `m` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn riordan_matrix_free(m: *mut RiordanMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Parses `J(alpha_i; beta_i)` from polynomials in `i`, `r` and `y`, e.g.
/// `alpha = "2*y+1"`, `beta = "i*r*y*(y+1)"`.
///
/// # Safety
/// `alpha` and `beta` must be NUL-terminated strings; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn riordan_jfraction_parse(
    alpha: *const c_char,
    beta: *const c_char,
    out: *mut *mut RiordanJFraction,
) -> RiordanStatus {
    guard(|| {
        if out.is_null() {
            return fail(RiordanStatus::NullPointer, "out is NULL");
        }
        let parsed = read_str(alpha, "alpha")
            .and_then(|a| Ok((a, read_str(beta, "beta")?)))
            .and_then(|(a, b)| JFraction::parse(a, b).map_err(from_error));
        match parsed {
            Ok(j) => put(out, RiordanJFraction(j)),
            Err(s) => s,
        }
    })
}

/// The first `size` rows of the expansion: row `n` holds the
/// `y`-coefficients of `[x^n]`.
///
/// # Safety
/// `j` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn riordan_jfraction_rows(
    j: *const RiordanJFraction,
    size: usize,
    out: *mut *mut RiordanMatrix,
) -> RiordanStatus {
    guard(|| {
        let (Some(j), false) = (j.as_ref(), out.is_null()) else {
            return fail(RiordanStatus::NullPointer, "fraction or out is NULL");
        };
        match j.0.rows(size) {
            Ok(m) => put(out, RiordanMatrix(m)),
            Err(e) => from_error(e),
        }
    })
}

/// Applies `alpha_i -> (i+1) alpha_i`, `beta_i -> i(i+1) beta_i`.
///
/// # Safety
/// `j` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn riordan_jfraction_transfer(
    j: *const RiordanJFraction,
    out: *mut *mut RiordanJFraction,
) -> RiordanStatus {
    guard(|| match (j.as_ref(), out.is_null()) {
        (Some(j), false) => put(out, RiordanJFraction(j.0.transfer())),
        _ => fail(RiordanStatus::NullPointer, "fraction or out is NULL"),
    })
}

/// Whether two fractions have identical level coefficients.
///
/// # Safety
/// Both handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn riordan_jfraction_equal(
    a: *const RiordanJFraction,
    b: *const RiordanJFraction,
    out: *mut bool,
) -> RiordanStatus {
    guard(|| match (a.as_ref(), b.as_ref(), out.is_null()) {
        (Some(a), Some(b), false) => {
            *out = a.0 == b.0;
            RiordanStatus::Ok
        }
        _ => fail(RiordanStatus::NullPointer, "fraction or out is NULL"),
    })
}

/// Text form, e.g. `J(alpha_i = 2*y + 1; beta_i = y^2 + y)`.
///
/// # Safety
/// `j` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn riordan_jfraction_to_string(j: *const RiordanJFraction, out: *mut *mut c_char) -> RiordanStatus {
    guard(|| match (j.as_ref(), out.is_null()) {
        (Some(j), false) => {
            *out = CString::new(j.0.to_string()).expect("no NUL in fractions").into_raw();
            RiordanStatus::Ok
        }
        _ => fail(RiordanStatus::NullPointer, "fraction or out is NULL"),
    })
}

/// Releases a J-fraction. NULL is ignored.
///
/// # Safety
/// `j` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn riordan_jfraction_free(j: *mut RiordanJFraction) {
    if !j.is_null() {
        drop(Box::from_raw(j));
    }
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn riordan_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
