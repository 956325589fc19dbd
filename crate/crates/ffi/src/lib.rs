//! C ABI for the token-graph spectra library.
//!
//! Handles are opaque pointers created and freed here; every fallible call
//! returns a [`TsStatus`] and writes its result through an out-pointer.
//! Pointers returned by `ts_*` constructors must be released with the
//! matching `ts_*_free`. All functions are safe to call from multiple
//! threads as long as each handle is used from one thread at a time.

use std::ffi::{c_char, CStr};

use tokenspectra::cyclift::f2_cycle_spectrum;
use tokenspectra::graph::{build_family, delete_vertex, laplacian, Graph};
use tokenspectra::linalg::{eig_sym, Spectrum};
use tokenspectra::token::{algebraic_connectivity, token_graph};
use tokenspectra::Error;

/// Status code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TsStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Arguments were rejected (bad family spec, out-of-range index, ...).
    InvalidArgument = 2,
    /// An eigensolve failed to converge or a numeric contract broke.
    NumericalFailure = 3,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 4,
}

/// Opaque undirected simple graph.
pub struct TsGraph {
    inner: Graph,
}

/// Opaque ascending eigenvalue multiset.
pub struct TsSpectrum {
    inner: Spectrum,
}

fn status_of(err: &Error) -> TsStatus {
    match err {
        Error::NumericalFailure(_) | Error::OverliftInconsistency { .. } => {
            TsStatus::NumericalFailure
        }
        _ => TsStatus::InvalidArgument,
    }
}

/// Short static description of a status code.
#[no_mangle]
pub extern "C" fn ts_status_name(status: TsStatus) -> *const c_char {
    let name: &'static CStr = match status {
        TsStatus::Ok => c"ok",
        TsStatus::NullPointer => c"null pointer",
        TsStatus::InvalidArgument => c"invalid argument",
        TsStatus::NumericalFailure => c"numerical failure",
        TsStatus::InvalidUtf8 => c"invalid utf-8",
    };
    name.as_ptr()
}

/// Build a named graph family (e.g. "cycle:9", "petersen", "odd:4").
///
/// # Safety
/// `spec` must point to a NUL-terminated string; `out` must be a valid
/// pointer. On `Ok`, `*out` owns a graph to be freed with [`ts_graph_free`].
#[no_mangle]
pub unsafe extern "C" fn ts_graph_family(spec: *const c_char, out: *mut *mut TsGraph) -> TsStatus {
    if spec.is_null() || out.is_null() {
        return TsStatus::NullPointer;
    }
    let Ok(spec) = CStr::from_ptr(spec).to_str() else {
        return TsStatus::InvalidUtf8;
    };
    match build_family(spec) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(TsGraph { inner: g }));
            TsStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// The k-token graph of `g`.
///
/// # Safety
/// `g` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_token(
    g: *const TsGraph,
    k: u32,
    out: *mut *mut TsGraph,
) -> TsStatus {
    if g.is_null() || out.is_null() {
        return TsStatus::NullPointer;
    }
    match token_graph(&(*g).inner, k as usize) {
        Ok(t) => {
            *out = Box::into_raw(Box::new(TsGraph { inner: t }));
            TsStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// The graph with vertex `i` removed (indices compacted).
///
/// # Safety
/// `g` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_delete_vertex(
    g: *const TsGraph,
    i: u32,
    out: *mut *mut TsGraph,
) -> TsStatus {
    if g.is_null() || out.is_null() {
        return TsStatus::NullPointer;
    }
    match delete_vertex(&(*g).inner, i as usize) {
        Ok(d) => {
            *out = Box::into_raw(Box::new(TsGraph { inner: d }));
            TsStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Number of vertices; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_vertex_count(g: *const TsGraph) -> u64 {
    if g.is_null() {
        return 0;
    }
    (*g).inner.n() as u64
}

/// Number of edges; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_edge_count(g: *const TsGraph) -> u64 {
    if g.is_null() {
        return 0;
    }
    (*g).inner.edge_count() as u64
}

/// Algebraic connectivity (second-smallest Laplacian eigenvalue).
///
/// # Safety
/// `g` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_alpha(g: *const TsGraph, out: *mut f64) -> TsStatus {
    if g.is_null() || out.is_null() {
        return TsStatus::NullPointer;
    }
    match algebraic_connectivity(&(*g).inner) {
        Ok(a) => {
            *out = a;
            TsStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Full Laplacian spectrum of `g` via the dense symmetric eigensolver.
///
/// # Safety
/// `g` must be a live graph handle; on `Ok`, `*out` owns a spectrum to be
/// freed with [`ts_spectrum_free`].
#[no_mangle]
pub unsafe extern "C" fn ts_graph_spectrum(
    g: *const TsGraph,
    out: *mut *mut TsSpectrum,
) -> TsStatus {
    if g.is_null() || out.is_null() {
        return TsStatus::NullPointer;
    }
    match eig_sym(&laplacian(&(*g).inner).to_dense()) {
        Ok(s) => {
            *out = Box::into_raw(Box::new(TsSpectrum { inner: s }));
            TsStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Spectrum of the 2-token graph of the n-cycle assembled from the n small
/// tridiagonal matrices (lift route for odd n, over-lift for even n).
///
/// # Safety
/// `out` must be a valid pointer; on `Ok` it owns a spectrum handle.
#[no_mangle]
pub unsafe extern "C" fn ts_f2_cycle_spectrum(n: u32, out: *mut *mut TsSpectrum) -> TsStatus {
    if out.is_null() {
        return TsStatus::NullPointer;
    }
    match f2_cycle_spectrum(n as usize) {
        Ok(s) => {
            *out = Box::into_raw(Box::new(TsSpectrum { inner: s }));
            TsStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Number of eigenvalues; 0 for a null handle.
///
/// # Safety
/// `s` must be null or a live spectrum handle.
#[no_mangle]
pub unsafe extern "C" fn ts_spectrum_len(s: *const TsSpectrum) -> u64 {
    if s.is_null() {
        return 0;
    }
    (*s).inner.len() as u64
}

/// Copy up to `len` ascending eigenvalues into `buf`.
///
/// # Safety
/// `s` must be a live spectrum handle and `buf` must point to at least `len`
/// writable doubles.
#[no_mangle]
pub unsafe extern "C" fn ts_spectrum_values(
    s: *const TsSpectrum,
    buf: *mut f64,
    len: u64,
) -> TsStatus {
    if s.is_null() || buf.is_null() {
        return TsStatus::NullPointer;
    }
    let values = (*s).inner.values();
    let count = values.len().min(len as usize);
    std::ptr::copy_nonoverlapping(values.as_ptr(), buf, count);
    TsStatus::Ok
}

/// Second-smallest eigenvalue.
///
/// # Safety
/// `s` must be a live spectrum handle holding at least two values and `out`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_spectrum_fiedler(s: *const TsSpectrum, out: *mut f64) -> TsStatus {
    if s.is_null() || out.is_null() {
        return TsStatus::NullPointer;
    }
    match (*s).inner.fiedler() {
        Some(v) => {
            *out = v;
            TsStatus::Ok
        }
        None => TsStatus::InvalidArgument,
    }
}

/// Release a graph handle; null is a no-op.
///
/// # Safety
/// `g` must be null or a pointer returned by a `ts_graph_*` constructor,
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ts_graph_free(g: *mut TsGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Release a spectrum handle; null is a no-op.
///
/// # Safety
/// `s` must be null or a pointer returned by a spectrum constructor, not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn ts_spectrum_free(s: *mut TsSpectrum) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}
