//! C ABI over the `sqsym` library.
//!
//! Graphs and invariants are opaque heap handles released with their own
//! `*_free` function. Every fallible call returns an [`SqsymStatus`]; on
//! failure the message is available from [`sqsym_last_error`] on the same
//! thread. Strings handed out by the library are released with
//! [`sqsym_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigInt;
use num_rational::BigRational;

use sqsym::chromatic::{chromatic_chambers, chromatic_oracle, chromatic_theorem, specialize_count};
use sqsym::graph::DirectedSignedGraph;
use sqsym::io::{parse_document, render_graph, render_tpoly, Document, Format};
use sqsym::named::{build_named, NamedGraph};
use sqsym::sqsym::{dimension, TPoly};
use sqsym::{Error, Limits};

/// Outcome of a call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SqsymStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    SizeGuard = 5,
    Cyclic = 6,
    Internal = 7,
}

/// How the invariant is computed.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SqsymMethod {
    Oracle = 0,
    Chambers = 1,
    Theorem = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SqsymFormat {
    Text = 0,
    Json = 1,
}

/// A directed signed graph.
pub struct SqsymGraph(DirectedSignedGraph);

/// The chromatic invariant: a polynomial in `t` over the monomial basis.
pub struct SqsymInvariant(TPoly);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(SqsymStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse(_) | Error::Json(_) | Error::Io(_) => SqsymStatus::Parse,
            Error::SizeGuard { .. } => SqsymStatus::SizeGuard,
            Error::Cyclic => SqsymStatus::Cyclic,
            Error::Structural(_) => SqsymStatus::Internal,
            _ => SqsymStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

/// Runs `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SqsymStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SqsymStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            SqsymStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(SqsymStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(SqsymStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

fn owned_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(SqsymStatus::Internal, "output contains a NUL byte".into()))
}

fn limits(max_vertices: usize) -> Limits {
    Limits { max_vertices, ..Limits::default() }
}

fn boxed_graph(g: DirectedSignedGraph, out: &mut *mut SqsymGraph) {
    *out = Box::into_raw(Box::new(SqsymGraph(g)));
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn sqsym_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses a directed graph document. An edgeless undirected document is
/// accepted as the edgeless directed graph.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqsym_graph_from_json(json: *const c_char, out: *mut *mut SqsymGraph) -> SqsymStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let doc = parse_document(text(json, "json")?, &Limits::default())?;
        let g = match doc {
            Document::DirectedGraph(g) => g,
            Document::Graph(g) if g.edges().is_empty() => DirectedSignedGraph::edgeless(g.d()),
            other => {
                return Err(Failure(
                    SqsymStatus::Parse,
                    format!("expected a directed graph, got a {} document", other.kind()),
                ))
            }
        };
        boxed_graph(g, out);
        Ok(())
    })
}

/// The two-vertex worked example.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqsym_graph_example(out: *mut *mut SqsymGraph) -> SqsymStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        boxed_graph(build_named(&NamedGraph::Example2)?, out);
        Ok(())
    })
}

/// The circulant tournament on `d` vertices with steps `1..=k`, switched
/// at the `switched_len` vertices in `switched` (which may be null when the
/// length is zero).
///
/// # Safety
/// `switched` must point to `switched_len` readable values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sqsym_graph_circulant(
    d: usize,
    k: usize,
    switched: *const usize,
    switched_len: usize,
    out: *mut *mut SqsymGraph,
) -> SqsymStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let switched = match switched_len {
            0 => Vec::new(),
            _ if switched.is_null() => return Err(null("switched")),
            n => std::slice::from_raw_parts(switched, n).to_vec(),
        };
        boxed_graph(build_named(&NamedGraph::SwitchedCirculant { d, k, switched })?, out);
        Ok(())
    })
}

/// A seeded random directed signed graph.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqsym_graph_random(d: usize, seed: u64, out: *mut *mut SqsymGraph) -> SqsymStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        boxed_graph(build_named(&NamedGraph::Random { d, seed })?, out);
        Ok(())
    })
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sqsym_graph_vertex_count(graph: *const SqsymGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.d())
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sqsym_graph_edge_count(graph: *const SqsymGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.edges().len())
}

/// Whether the orientation has no directed cycle in the double cover.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqsym_graph_is_acyclic(graph: *const SqsymGraph, out: *mut bool) -> SqsymStatus {
    guard(|| {
        let g = handle(graph, "graph")?;
        *out_ptr(out, "out")? = g.0.is_acyclic();
        Ok(())
    })
}

/// The graph as a JSON document, released with [`sqsym_string_free`].
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqsym_graph_to_json(graph: *const SqsymGraph, out: *mut *mut c_char) -> SqsymStatus {
    guard(|| {
        let g = handle(graph, "graph")?;
        let out = out_ptr(out, "out")?;
        *out = owned_string(render_graph(&g.0))?;
        Ok(())
    })
}

/// # Safety
/// `graph` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sqsym_graph_free(graph: *mut SqsymGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Computes the chromatic invariant; `method` is an [`SqsymMethod`]. Exhaustive work is refused above
/// `max_vertices` vertices.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqsym_chromatic(
    graph: *const SqsymGraph,
    method: u32,
    max_vertices: usize,
    out: *mut *mut SqsymInvariant,
) -> SqsymStatus {
    guard(|| {
        let g = &handle(graph, "graph")?.0;
        let out = out_ptr(out, "out")?;
        let lim = limits(max_vertices);
        let x = match method {
            m if m == SqsymMethod::Oracle as u32 => chromatic_oracle(g, &lim)?,
            m if m == SqsymMethod::Chambers as u32 => chromatic_chambers(g, &lim)?,
            m if m == SqsymMethod::Theorem as u32 => chromatic_theorem(g, &lim)?,
            m => return Err(Failure(SqsymStatus::InvalidInput, format!("unknown method {m}"))),
        };
        *out = Box::into_raw(Box::new(SqsymInvariant(x)));
        Ok(())
    })
}

/// Renders the invariant in an [`SqsymFormat`], released with [`sqsym_string_free`].
///
/// # Safety
/// `invariant` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqsym_invariant_render(
    invariant: *const SqsymInvariant,
    format: u32,
    out: *mut *mut c_char,
) -> SqsymStatus {
    guard(|| {
        let x = &handle(invariant, "invariant")?.0;
        let out = out_ptr(out, "out")?;
        let format = match format {
            f if f == SqsymFormat::Text as u32 => Format::Text,
            f if f == SqsymFormat::Json as u32 => Format::Json,
            f => return Err(Failure(SqsymStatus::InvalidInput, format!("unknown format {f}"))),
        };
        *out = owned_string(render_tpoly(x, format))?;
        Ok(())
    })
}

/// Whether every `t`-coefficient is signed symmetric.
///
/// # Safety
/// `invariant` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqsym_invariant_is_symmetric(invariant: *const SqsymInvariant, out: *mut bool) -> SqsymStatus {
    guard(|| {
        let x = &handle(invariant, "invariant")?.0;
        *out_ptr(out, "out")? = x.is_signed_symmetric();
        Ok(())
    })
}

/// Whether two invariants are equal.
///
/// # Safety
/// Both handles must be live and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqsym_invariant_equal(
    a: *const SqsymInvariant,
    b: *const SqsymInvariant,
    out: *mut bool,
) -> SqsymStatus {
    guard(|| {
        let (a, b) = (handle(a, "a")?, handle(b, "b")?);
        *out_ptr(out, "out")? = a.0 == b.0;
        Ok(())
    })
}

/// Evaluates at `x_i = 1` for `|i| <= m` and at `t = t_num / t_den`. The
/// exact rational result is written as `p` or `p/q`.
///
/// # Safety
/// `invariant` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqsym_invariant_count(
    invariant: *const SqsymInvariant,
    m: u64,
    t_num: i64,
    t_den: i64,
    out: *mut *mut c_char,
) -> SqsymStatus {
    guard(|| {
        let x = &handle(invariant, "invariant")?.0;
        let out = out_ptr(out, "out")?;
        if t_den == 0 {
            return Err(Failure(SqsymStatus::InvalidInput, "t_den is zero".into()));
        }
        let t = BigRational::new(BigInt::from(t_num), BigInt::from(t_den));
        *out = owned_string(specialize_count(x, m, &t).to_string())?;
        Ok(())
    })
}

/// # Safety
/// `invariant` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sqsym_invariant_free(invariant: *mut SqsymInvariant) {
    if !invariant.is_null() {
        drop(Box::from_raw(invariant));
    }
}

/// Dimension of the degree-`degree` piece of the algebra, in decimal.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sqsym_dimension(degree: usize, out: *mut *mut c_char) -> SqsymStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = owned_string(dimension(degree).to_string())?;
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sqsym_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version, statically allocated.
#[no_mangle]
pub extern "C" fn sqsym_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
