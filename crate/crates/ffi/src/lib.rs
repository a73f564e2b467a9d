//! C ABI over `orbitrough`.
//!
//! Every entry point returns an `int32_t` status (`ORBITROUGH_OK` or one of
//! the `ORBITROUGH_ERR_*` codes) and writes results through out-pointers.
//! On failure a message is available from [`orbitrough_last_error_message`]
//! on the same thread until the next call.
//!
//! Graphs are opaque handles created by the `orbitrough_graph_*`
//! constructors and released with [`orbitrough_graph_free`]. Vertex sets are
//! passed as `(const size_t *ids, size_t len)`; a null pointer is accepted
//! when `len` is 0. Strings returned through `char **out` are owned by the
//! caller and must be released with [`orbitrough_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use orbitrough::approximation::{approximate, degree_of_dependency, rough_membership};
use orbitrough::automorphism::{orbits, OrbitPartition};
use orbitrough::discernibility::quotient_matrix;
use orbitrough::graph::{parse_dimacs, parse_edge_list, Family};
use orbitrough::indiscernibility::{indiscernibility_partition, indiscernible};
use orbitrough::reduct::{enumerate_reducts, essential_sets};
use orbitrough::verify::{verify, Suite, VerifyOptions};
use orbitrough::{Error, Graph, VertexSet};

pub const ORBITROUGH_OK: i32 = 0;
/// A required pointer argument was null.
pub const ORBITROUGH_ERR_NULL: i32 = 1;
/// Graph text or a family spec could not be parsed.
pub const ORBITROUGH_ERR_PARSE: i32 = 2;
/// A vertex id was not below the vertex count.
pub const ORBITROUGH_ERR_VERTEX: i32 = 3;
/// The request exceeds a configured size bound.
pub const ORBITROUGH_ERR_SIZE_LIMIT: i32 = 4;
/// An argument was well-formed but not acceptable.
pub const ORBITROUGH_ERR_INVALID_ARG: i32 = 5;
/// A string argument was not valid UTF-8.
pub const ORBITROUGH_ERR_UTF8: i32 = 6;
/// The library panicked; the handle arguments should be considered suspect.
pub const ORBITROUGH_ERR_PANIC: i32 = 7;

/// A graph together with its orbit partition.
pub struct OrGraph {
    graph: Graph,
    orbits: OrbitPartition,
}

impl OrGraph {
    fn new(graph: Graph) -> Self {
        let orbits = orbits(&graph);
        OrGraph { graph, orbits }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::InvalidFamily(_) | Error::InvalidVertexSet(_) => {
                ORBITROUGH_ERR_PARSE
            }
            Error::VertexOutOfRange { .. } => ORBITROUGH_ERR_VERTEX,
            Error::SizeLimit { .. } => ORBITROUGH_ERR_SIZE_LIMIT,
            _ => ORBITROUGH_ERR_INVALID_ARG,
        };
        Failure::new(code, e.to_string())
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: Option<String>) {
    let message = message.map(|m| CString::new(m.replace('\0', " ")).unwrap_or_default());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> i32 {
    set_last_error(None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ORBITROUGH_OK,
        Ok(Err(failure)) => {
            set_last_error(Some(failure.message));
            failure.code
        }
        Err(payload) => {
            let detail = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown".into());
            set_last_error(Some(format!("panic: {detail}")));
            ORBITROUGH_ERR_PANIC
        }
    }
}

fn nonnull<T>(p: *const T, what: &str) -> Result<(), Failure> {
    if p.is_null() {
        Err(Failure::new(ORBITROUGH_ERR_NULL, format!("{what} is null")))
    } else {
        Ok(())
    }
}

unsafe fn graph_ref<'a>(g: *const OrGraph) -> Result<&'a OrGraph, Failure> {
    nonnull(g, "graph")?;
    Ok(&*g)
}

unsafe fn text_arg<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    nonnull(s, what)?;
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Failure::new(ORBITROUGH_ERR_UTF8, format!("{what}: {e}")))
}

unsafe fn set_arg(
    ids: *const usize,
    len: usize,
    n: usize,
    what: &str,
) -> Result<VertexSet, Failure> {
    if len == 0 {
        return Ok(VertexSet::new());
    }
    nonnull(ids, what)?;
    let set = VertexSet::from(std::slice::from_raw_parts(ids, len).to_vec());
    set.check_within(n)?;
    Ok(set)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    nonnull(out, "out")?;
    out.write(value);
    Ok(())
}

unsafe fn write_json<T: serde::Serialize>(out: *mut *mut c_char, value: &T) -> Result<(), Failure> {
    nonnull(out, "out")?;
    let json = serde_json::to_string(value)
        .map_err(|e| Failure::new(ORBITROUGH_ERR_INVALID_ARG, e.to_string()))?;
    out.write(CString::new(json).expect("JSON has no NUL").into_raw());
    Ok(())
}

unsafe fn emit_graph(out: *mut *mut OrGraph, graph: Graph) -> Result<(), Failure> {
    write_out(out, Box::into_raw(Box::new(OrGraph::new(graph))))
}

/// Message for the last failed call on this thread, or null after a
/// successful call. Valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn orbitrough_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn orbitrough_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses an edge-list graph (`n m` header, then `u v` lines).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn orbitrough_graph_parse_edge_list(
    text: *const c_char,
    out: *mut *mut OrGraph,
) -> i32 {
    guard(|| emit_graph(out, parse_edge_list(text_arg(text, "text")?)?))
}

/// Parses a DIMACS graph.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn orbitrough_graph_parse_dimacs(
    text: *const c_char,
    out: *mut *mut OrGraph,
) -> i32 {
    guard(|| emit_graph(out, parse_dimacs(text_arg(text, "text")?)?))
}

/// Builds a named family member such as `path:5` or `complete_bipartite:2,3`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn orbitrough_graph_family(
    spec: *const c_char,
    out: *mut *mut OrGraph,
) -> i32 {
    guard(|| {
        let family: Family = text_arg(spec, "spec")?.parse()?;
        emit_graph(out, family.build()?)
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `endpoints` (length `2 * edge_count`).
///
/// # Safety
/// `endpoints` must point to `2 * edge_count` values (or be null when
/// `edge_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orbitrough_graph_from_edges(
    n: usize,
    endpoints: *const usize,
    edge_count: usize,
    out: *mut *mut OrGraph,
) -> i32 {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else {
            nonnull(endpoints, "endpoints")?;
            let len = edge_count
                .checked_mul(2)
                .ok_or_else(|| Failure::new(ORBITROUGH_ERR_INVALID_ARG, "edge_count overflows"))?;
            std::slice::from_raw_parts(endpoints, len)
        };
        let edges = flat.chunks_exact(2).map(|e| (e[0], e[1]));
        emit_graph(out, Graph::from_edges(n, edges)?)
    })
}

/// Releases a graph handle. Null is ignored.
///
/// # Safety
/// `g` must come from an `orbitrough_graph_*` constructor and not be used
/// afterwards.
#[no_mangle]
pub unsafe extern "C" fn orbitrough_graph_free(g: *mut OrGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn orbitrough_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orbitrough_graph_vertex_count(g: *const OrGraph, out: *mut usize) -> i32 {
    guard(|| write_out(out, graph_ref(g)?.graph.n()))
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orbitrough_graph_edge_count(g: *const OrGraph, out: *mut usize) -> i32 {
    guard(|| write_out(out, graph_ref(g)?.graph.m()))
}

/// Number of automorphism orbits.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orbitrough_orbit_count(g: *const OrGraph, out: *mut usize) -> i32 {
    guard(|| write_out(out, graph_ref(g)?.orbits.k()))
}

/// Writes the orbit index of every vertex into `out`, which must hold
/// exactly as many entries as the graph has vertices. Orbits are numbered
/// by their smallest vertex.
///
/// # Safety
/// `g` must be a live handle and `out` must point to `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn orbitrough_orbit_ids(
    g: *const OrGraph,
    out: *mut usize,
    len: usize,
) -> i32 {
    guard(|| {
        let g = graph_ref(g)?;
        let n = g.graph.n();
        if len != n {
            return Err(Failure::new(
                ORBITROUGH_ERR_INVALID_ARG,
                format!("buffer holds {len} entries, graph has {n} vertices"),
            ));
        }
        nonnull(out, "out")?;
        let ids = std::slice::from_raw_parts_mut(out, len);
        for (v, slot) in ids.iter_mut().enumerate() {
            *slot = g.orbits.orbit_id(v);
        }
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orbitrough_same_orbit(
    g: *const OrGraph,
    u: usize,
    v: usize,
    out: *mut bool,
) -> i32 {
    guard(|| {
        let g = graph_ref(g)?;
        VertexSet::from([u, v]).check_within(g.graph.n())?;
        write_out(out, g.orbits.same_orbit(u, v))
    })
}

/// Whether `x` and `y` are indiscernible with respect to the attribute set.
///
/// # Safety
/// `g` must be a live handle, `attrs` must point to `attrs_len` values and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orbitrough_indiscernible(
    g: *const OrGraph,
    x: usize,
    y: usize,
    attrs: *const usize,
    attrs_len: usize,
    out: *mut bool,
) -> i32 {
    guard(|| {
        let g = graph_ref(g)?;
        let a = set_arg(attrs, attrs_len, g.graph.n(), "attrs")?;
        write_out(out, indiscernible(&g.orbits, x, y, &a)?)
    })
}

/// Rough membership of `x` in the target set as a reduced fraction.
///
/// # Safety
/// `g` must be a live handle, the set pointers must cover their lengths and
/// `numer`, `denom` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orbitrough_rough_membership(
    g: *const OrGraph,
    attrs: *const usize,
    attrs_len: usize,
    target: *const usize,
    target_len: usize,
    x: usize,
    numer: *mut usize,
    denom: *mut usize,
) -> i32 {
    guard(|| {
        let g = graph_ref(g)?;
        let n = g.graph.n();
        let a = set_arg(attrs, attrs_len, n, "attrs")?;
        let q = set_arg(target, target_len, n, "target")?;
        nonnull(numer, "numer")?;
        nonnull(denom, "denom")?;
        let mu = rough_membership(&g.orbits, &a, &q, x)?;
        write_out(numer, *mu.numer())?;
        write_out(denom, *mu.denom())
    })
}

/// `{"k":..,"orbits":[[..],..]}`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orbitrough_orbits_json(g: *const OrGraph, out: *mut *mut c_char) -> i32 {
    guard(|| write_json(out, &graph_ref(g)?.orbits))
}

/// Blocks of the indiscernibility partition.
///
/// # Safety
/// `g` must be a live handle, `attrs` must cover `attrs_len` values and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orbitrough_partition_json(
    g: *const OrGraph,
    attrs: *const usize,
    attrs_len: usize,
    out: *mut *mut c_char,
) -> i32 {
    guard(|| {
        let g = graph_ref(g)?;
        let a = set_arg(attrs, attrs_len, g.graph.n(), "attrs")?;
        write_json(out, &indiscernibility_partition(&g.orbits, &a))
    })
}

/// Lower and upper approximation, boundary and exactness.
///
/// # Safety
/// `g` must be a live handle, the set pointers must cover their lengths and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orbitrough_approximation_json(
    g: *const OrGraph,
    attrs: *const usize,
    attrs_len: usize,
    target: *const usize,
    target_len: usize,
    out: *mut *mut c_char,
) -> i32 {
    guard(|| {
        let g = graph_ref(g)?;
        let n = g.graph.n();
        let a = set_arg(attrs, attrs_len, n, "attrs")?;
        let q = set_arg(target, target_len, n, "target")?;
        write_json(out, &approximate(&g.orbits, &a, &q))
    })
}

/// Positive region and degree of dependency of the decision set.
///
/// # Safety
/// `g` must be a live handle, the set pointers must cover their lengths and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orbitrough_dependency_json(
    g: *const OrGraph,
    attrs: *const usize,
    attrs_len: usize,
    decision: *const usize,
    decision_len: usize,
    out: *mut *mut c_char,
) -> i32 {
    guard(|| {
        let g = graph_ref(g)?;
        let n = g.graph.n();
        let a = set_arg(attrs, attrs_len, n, "attrs")?;
        let d = set_arg(decision, decision_len, n, "decision")?;
        write_json(out, &degree_of_dependency(&g.orbits, &a, &d))
    })
}

/// Reducts and core of the attribute set.
///
/// # Safety
/// `g` must be a live handle, `attrs` must cover `attrs_len` values and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orbitrough_reducts_json(
    g: *const OrGraph,
    attrs: *const usize,
    attrs_len: usize,
    out: *mut *mut c_char,
) -> i32 {
    guard(|| {
        let g = graph_ref(g)?;
        let a = set_arg(attrs, attrs_len, g.graph.n(), "attrs")?;
        write_json(out, &enumerate_reducts(&g.orbits, &a))
    })
}

/// Essential sets with their size profile and minimum size.
///
/// # Safety
/// `g` must be a live handle, `attrs` must cover `attrs_len` values and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orbitrough_essential_json(
    g: *const OrGraph,
    attrs: *const usize,
    attrs_len: usize,
    out: *mut *mut c_char,
) -> i32 {
    guard(|| {
        let g = graph_ref(g)?;
        let a = set_arg(attrs, attrs_len, g.graph.n(), "attrs")?;
        write_json(out, &essential_sets(&g.orbits, &a))
    })
}

/// Quotient discernibility matrix over the orbits.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orbitrough_qdm_json(g: *const OrGraph, out: *mut *mut c_char) -> i32 {
    guard(|| write_json(out, &quotient_matrix(&graph_ref(g)?.orbits)))
}

/// Runs a self-check suite (`all`, `partitions`, `approximations`,
/// `reducts`, `essentials`, `discernibility`). Returns `ORBITROUGH_OK` even
/// when checks fail; inspect `"passed"` in the report.
///
/// # Safety
/// `g` must be a live handle, `suite` a NUL-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn orbitrough_verify_json(
    g: *const OrGraph,
    suite: *const c_char,
    seed: u64,
    out: *mut *mut c_char,
) -> i32 {
    guard(|| {
        let g = graph_ref(g)?;
        let suite: Suite = text_arg(suite, "suite")?
            .parse()
            .map_err(|e: String| Failure::new(ORBITROUGH_ERR_INVALID_ARG, e))?;
        let opts = VerifyOptions {
            seed,
            ..VerifyOptions::default()
        };
        write_json(out, &verify(&g.graph, suite, &opts)?)
    })
}
