//! C bindings for `tlmonoid`.
//!
//! Every fallible function returns a [`TlStatus`]; on failure the message is
//! available from [`tl_last_error`] until the next call on the same thread.
//! Strings handed out by the library must be released with
//! [`tl_string_free`], handles with their matching `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tlmonoid::diagram::{eval_term, render, RenderFormat};
use tlmonoid::matrep::{
    check_braid_relations, independence_check, parse_rat, rep_kn, Branch, Matrix, QExt, Rat,
};
use tlmonoid::normalize::{eq_j, eq_jn, eq_k, eq_kn, eq_l, jones_forms, normalize_k, normalize_kn, normalize_l};
use tlmonoid::{parse_term, Error, Term, Theory};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    IndexRange = 4,
    Theory = 5,
    Type = 6,
    Dimension = 7,
    Limit = 8,
    Frieze = 9,
    NoCollapse = 10,
    Invalid = 11,
    Panic = 12,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TlTheory {
    L = 0,
    K = 1,
    J = 2,
    Kn = 3,
    Jn = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TlFormat {
    Ascii = 0,
    Svg = 1,
}

/// A parsed term together with its theory.
pub struct TlTerm {
    inner: Term,
}

/// An exact rational matrix.
pub struct TlMatrix {
    inner: Matrix<Rat>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> TlStatus {
    match e {
        Error::Parse { .. } => TlStatus::Parse,
        Error::IndexRange { .. } => TlStatus::IndexRange,
        Error::Theory { .. } => TlStatus::Theory,
        Error::Type(_) => TlStatus::Type,
        Error::Dimension(_) => TlStatus::Dimension,
        Error::Limit(_) => TlStatus::Limit,
        Error::Frieze(_) => TlStatus::Frieze,
        Error::NoCollapse => TlStatus::NoCollapse,
        Error::Invalid(_) => TlStatus::Invalid,
    }
}

enum Fail {
    Null(&'static str),
    Utf8,
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

type FfiResult<T> = Result<T, Fail>;

fn guard(f: impl FnOnce() -> FfiResult<()>) -> TlStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TlStatus::Ok,
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("null pointer passed as {what}"));
            TlStatus::NullPointer
        }
        Ok(Err(Fail::Utf8)) => {
            set_error("string is not valid UTF-8".into());
            TlStatus::InvalidUtf8
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            TlStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &'static str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(Fail::Null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail::Utf8)
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &'static str) -> FfiResult<&'a T> {
    p.as_ref().ok_or(Fail::Null(what))
}

unsafe fn write_out<T>(out: *mut T, v: T, what: &'static str) -> FfiResult<()> {
    if out.is_null() {
        return Err(Fail::Null(what));
    }
    out.write(v);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

fn theory(t: TlTheory, n: usize) -> Theory {
    match t {
        TlTheory::L => Theory::L,
        TlTheory::K => Theory::K,
        TlTheory::J => Theory::J,
        TlTheory::Kn => Theory::Kn(n),
        TlTheory::Jn => Theory::Jn(n),
    }
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn tl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn tl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn tl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `text` in the given theory; `n` is the strand count for `Kn`/`Jn`
/// and ignored otherwise.
///
/// # Safety
/// `text` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tl_term_parse(
    text: *const c_char,
    theory_kind: TlTheory,
    n: usize,
    out: *mut *mut TlTerm,
) -> TlStatus {
    guard(|| {
        let text = str_arg(text, "text")?;
        let t = parse_term(text, theory(theory_kind, n))?;
        write_out(out, Box::into_raw(Box::new(TlTerm { inner: t })), "out")
    })
}

/// # Safety
/// `t` must be null or a handle from [`tl_term_parse`], not freed before.
#[no_mangle]
pub unsafe extern "C" fn tl_term_free(t: *mut TlTerm) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// # Safety
/// `t` must be a live term handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tl_term_to_string(t: *const TlTerm, out: *mut *mut c_char) -> TlStatus {
    guard(|| {
        let t = ref_arg(t, "term")?;
        write_out(out, c_string(t.inner.to_string()), "out")
    })
}

/// Normal form of a term in its own theory, as text.
///
/// # Safety
/// `t` must be a live term handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tl_normalize(t: *const TlTerm, out: *mut *mut c_char) -> TlStatus {
    guard(|| {
        let t = &ref_arg(t, "term")?.inner;
        let s = match t.theory {
            Theory::L => normalize_l(t)?.to_string(),
            Theory::K => normalize_k(t).to_string(),
            Theory::J => normalize_k(t).without_circles().to_string(),
            Theory::Kn(_) => normalize_kn(t)?.to_string(),
            Theory::Jn(_) => normalize_kn(t)?.without_circles().to_string(),
        };
        write_out(out, c_string(s), "out")
    })
}

/// Equality of two terms in the theory of the first.
///
/// # Safety
/// `a`, `b` must be live term handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tl_eq(a: *const TlTerm, b: *const TlTerm, out: *mut bool) -> TlStatus {
    guard(|| {
        let (a, b) = (&ref_arg(a, "a")?.inner, &ref_arg(b, "b")?.inner);
        let eq = match a.theory {
            Theory::L => eq_l(a, b)?,
            Theory::K => eq_k(a, b),
            Theory::J => eq_j(a, b),
            Theory::Kn(n) => eq_kn(a, b, n)?,
            Theory::Jn(n) => eq_jn(a, b, n)?,
        };
        write_out(out, eq, "out")
    })
}

/// Draws the frieze of a term.
///
/// # Safety
/// `t` must be a live term handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tl_render(t: *const TlTerm, format: TlFormat, out: *mut *mut c_char) -> TlStatus {
    guard(|| {
        let t = &ref_arg(t, "term")?.inner;
        let f = eval_term(t)?;
        let fmt = match format {
            TlFormat::Ascii => RenderFormat::Ascii,
            TlFormat::Svg => RenderFormat::Svg,
        };
        write_out(out, c_string(render(&f, t.theory.strands(), fmt)), "out")
    })
}

/// Number of circle-free Jones normal forms of `K_n`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tl_count_jones(n: usize, out: *mut usize) -> TlStatus {
    guard(|| write_out(out, jones_forms(n).len(), "out"))
}

/// The `p^n × p^n` matrix of a word of `K_n`.
///
/// # Safety
/// `t` must be a live term handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tl_matrix_rep(p: usize, n: usize, t: *const TlTerm, out: *mut *mut TlMatrix) -> TlStatus {
    guard(|| {
        let t = &ref_arg(t, "term")?.inner;
        let m = rep_kn(p, n, t)?;
        write_out(out, Box::into_raw(Box::new(TlMatrix { inner: m })), "out")
    })
}

/// # Safety
/// `m` must be null or a handle from this library, not freed before.
#[no_mangle]
pub unsafe extern "C" fn tl_matrix_free(m: *mut TlMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` must be a live matrix handle; `rows` and `cols` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tl_matrix_shape(m: *const TlMatrix, rows: *mut usize, cols: *mut usize) -> TlStatus {
    guard(|| {
        let m = &ref_arg(m, "matrix")?.inner;
        write_out(rows, m.rows(), "rows")?;
        write_out(cols, m.cols(), "cols")
    })
}

/// Entry `(i, j)`, zero-based, as text such as `3` or `-1/2`.
///
/// # Safety
/// `m` must be a live matrix handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tl_matrix_entry(m: *const TlMatrix, i: usize, j: usize, out: *mut *mut c_char) -> TlStatus {
    guard(|| {
        let m = &ref_arg(m, "matrix")?.inner;
        if i >= m.rows() || j >= m.cols() {
            return Err(Error::Dimension(format!("entry ({i}, {j}) outside {}x{}", m.rows(), m.cols())).into());
        }
        write_out(out, c_string(tlmonoid::matrep::scalar::rat_to_string(m.get(i, j))), "out")
    })
}

/// # Safety
/// `m` must be a live matrix handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tl_matrix_to_string(m: *const TlMatrix, out: *mut *mut c_char) -> TlStatus {
    guard(|| {
        let m = &ref_arg(m, "matrix")?.inner;
        write_out(out, c_string(m.to_text()), "out")
    })
}

/// Linear independence of the matrices of the Jones normal forms of `K_n`.
///
/// # Safety
/// `independent` and `rank` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tl_independence_check(
    p: usize,
    n: usize,
    independent: *mut bool,
    rank: *mut usize,
) -> TlStatus {
    guard(|| {
        let (ok, r) = independence_check(p, n)?;
        write_out(independent, ok, "independent")?;
        write_out(rank, r, "rank")
    })
}

/// Checks the braid relations; `alpha` is a rational such as `"1"` or
/// `"-2/3"`, `branch` is `'+'` or `'-'`. `report` may be null.
///
/// # Safety
/// `alpha` must be a valid C string, `all_hold` a valid pointer and
/// `report` null or a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tl_braid_check(
    p: usize,
    n: usize,
    alpha: *const c_char,
    branch: c_char,
    all_hold: *mut bool,
    report: *mut *mut c_char,
) -> TlStatus {
    guard(|| {
        let alpha = QExt::rational(parse_rat(str_arg(alpha, "alpha")?)?);
        let branch: Branch = match branch as u8 {
            b'+' => Branch::Plus,
            b'-' => Branch::Minus,
            other => return Err(Error::Invalid(format!("branch must be '+' or '-', found {other}")).into()),
        };
        let r = check_braid_relations(p, n, alpha, branch)?;
        write_out(all_hold, r.all_hold(), "all_hold")?;
        if !report.is_null() {
            report.write(c_string(r.to_string()));
        }
        Ok(())
    })
}
