//! C ABI over the Disconnected Cut solver: opaque graph and verdict
//! handles, status codes, and a small accessor surface so other languages
//! can bind without knowing the Rust types. Every entry point catches
//! panics and reports them as `Internal`.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use discut::error::Error;
use discut::files::parse_instance;
use discut::graph::Graph;
use discut::oracle::oracle_disconnected_cut;
use discut::pipeline::{self, Budgets};
use discut::verdict::{Answer, Verdict};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscutStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidInput = 2,
    OutOfScope = 3,
    Internal = 4,
    BadUtf8 = 5,
}

fn status_for(e: &Error) -> DiscutStatus {
    match e {
        Error::InvalidInput(_) | Error::Precondition(_) => DiscutStatus::InvalidInput,
        Error::OutOfScope(_) => DiscutStatus::OutOfScope,
        Error::Internal(_) => DiscutStatus::Internal,
    }
}

/// Opaque graph handle.
pub struct DiscutGraph {
    inner: Graph,
}

/// Opaque verdict handle; owns its strings and certificate copy.
pub struct DiscutVerdict {
    answer: Answer,
    reason: CString,
    route: CString,
    partition: Option<[Vec<u32>; 4]>,
}

impl DiscutVerdict {
    fn from_verdict(v: &Verdict, route: &str) -> Box<DiscutVerdict> {
        let partition = v.certificate.as_ref().map(|p| {
            let parts = p.to_sorted_vecs();
            [
                parts[0].iter().map(|&x| x as u32).collect(),
                parts[1].iter().map(|&x| x as u32).collect(),
                parts[2].iter().map(|&x| x as u32).collect(),
                parts[3].iter().map(|&x| x as u32).collect(),
            ]
        });
        Box::new(DiscutVerdict {
            answer: v.answer,
            reason: CString::new(v.reason.code()).unwrap(),
            route: CString::new(route).unwrap(),
            partition,
        })
    }
}

/// Library version string; static storage, do not free.
#[no_mangle]
pub extern "C" fn discut_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Builds a graph on `n` vertices from `edge_pairs` (u,v) pairs laid out as
/// 2*edge_pairs u32 values. On success writes a handle to `out`.
///
/// # Safety
/// `edges` must point to 2*edge_pairs readable u32 values and `out` to a
/// writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn discut_graph_new(
    n: u32,
    edges: *const u32,
    edge_pairs: usize,
    out: *mut *mut DiscutGraph,
) -> DiscutStatus {
    if out.is_null() || (edges.is_null() && edge_pairs > 0) {
        return DiscutStatus::NullArgument;
    }
    let slice = if edge_pairs == 0 {
        &[][..]
    } else {
        std::slice::from_raw_parts(edges, 2 * edge_pairs)
    };
    let pairs: Vec<(usize, usize)> = slice
        .chunks_exact(2)
        .map(|c| (c[0] as usize, c[1] as usize))
        .collect();
    match catch_unwind(AssertUnwindSafe(|| Graph::build(n as usize, &pairs))) {
        Ok(Ok(g)) => {
            *out = Box::into_raw(Box::new(DiscutGraph { inner: g }));
            DiscutStatus::Ok
        }
        Ok(Err(e)) => status_for(&e),
        Err(_) => DiscutStatus::Internal,
    }
}

/// Parses the plain-text instance format (`n m` header plus edge lines).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable slot.
#[no_mangle]
pub unsafe extern "C" fn discut_graph_parse(
    text: *const c_char,
    out: *mut *mut DiscutGraph,
) -> DiscutStatus {
    if text.is_null() || out.is_null() {
        return DiscutStatus::NullArgument;
    }
    let s = match CStr::from_ptr(text).to_str() {
        Ok(s) => s,
        Err(_) => return DiscutStatus::BadUtf8,
    };
    match catch_unwind(|| parse_instance(s)) {
        Ok(Ok(g)) => {
            *out = Box::into_raw(Box::new(DiscutGraph { inner: g }));
            DiscutStatus::Ok
        }
        Ok(Err(e)) => status_for(&e),
        Err(_) => DiscutStatus::Internal,
    }
}

/// Vertex count; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a pointer previously returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn discut_graph_n(g: *const DiscutGraph) -> u32 {
    if g.is_null() {
        return 0;
    }
    unsafe { (*g).inner.n() as u32 }
}

/// Edge count; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a pointer previously returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn discut_graph_m(g: *const DiscutGraph) -> u32 {
    if g.is_null() {
        return 0;
    }
    unsafe { (*g).inner.m() as u32 }
}

/// Frees a graph handle; null is a no-op.
///
/// # Safety
/// `g` must be null or a pointer previously returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn discut_graph_free(g: *mut DiscutGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

fn solve_impl(
    g: *const DiscutGraph,
    oracle_budget: u64,
    out: *mut *mut DiscutVerdict,
    run: impl FnOnce(&Graph, &Budgets) -> Result<(Verdict, String), Error>,
) -> DiscutStatus {
    if g.is_null() || out.is_null() {
        return DiscutStatus::NullArgument;
    }
    let graph = unsafe { &(*g).inner };
    let mut budgets = Budgets::default();
    if oracle_budget > 0 {
        budgets.oracle_subsets = oracle_budget;
    }
    match catch_unwind(AssertUnwindSafe(|| run(graph, &budgets))) {
        Ok(Ok((verdict, route))) => {
            let b = DiscutVerdict::from_verdict(&verdict, &route);
            unsafe { *out = Box::into_raw(b) };
            DiscutStatus::Ok
        }
        Ok(Err(e)) => status_for(&e),
        Err(_) => DiscutStatus::Internal,
    }
}

/// Solves via the automatic route (claw-free pipeline or the 4-vertex-class
/// dispatcher). `oracle_budget` of 0 means the default.
///
/// # Safety
/// `g` must be a live graph handle and `out` a writable slot.
#[no_mangle]
pub unsafe extern "C" fn discut_solve_auto(
    g: *const DiscutGraph,
    oracle_budget: u64,
    out: *mut *mut DiscutVerdict,
) -> DiscutStatus {
    solve_impl(g, oracle_budget, out, |graph, budgets| {
        pipeline::solve_auto(graph, budgets).map(|o| (o.verdict, o.route))
    })
}

/// Runs the exponential subset oracle directly.
///
/// # Safety
/// `g` must be a live graph handle and `out` a writable slot.
#[no_mangle]
pub unsafe extern "C" fn discut_solve_oracle(
    g: *const DiscutGraph,
    oracle_budget: u64,
    out: *mut *mut DiscutVerdict,
) -> DiscutStatus {
    solve_impl(g, oracle_budget, out, |graph, budgets| {
        oracle_disconnected_cut(graph, budgets.oracle_subsets)
            .map(|v| (v, "oracle".to_string()))
    })
}

/// 1 = yes, 0 = no, 2 = unresolved, -1 = null handle.
///
/// # Safety
/// `v` must be null or a pointer previously returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn discut_verdict_answer(v: *const DiscutVerdict) -> i32 {
    if v.is_null() {
        return -1;
    }
    match unsafe { (*v).answer } {
        Answer::Yes => 1,
        Answer::No => 0,
        Answer::Unresolved => 2,
    }
}

/// Reason code string; borrowed from the verdict, do not free.
///
/// # Safety
/// `v` must be null or a pointer previously returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn discut_verdict_reason(v: *const DiscutVerdict) -> *const c_char {
    if v.is_null() {
        return std::ptr::null();
    }
    unsafe { (*v).reason.as_ptr() }
}

/// Solver route string; borrowed from the verdict, do not free.
///
/// # Safety
/// `v` must be null or a pointer previously returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn discut_verdict_route(v: *const DiscutVerdict) -> *const c_char {
    if v.is_null() {
        return std::ptr::null();
    }
    unsafe { (*v).route.as_ptr() }
}

/// Number of vertices in certificate part `part` (0..3); 0 when the verdict
/// carries no certificate.
///
/// # Safety
/// `v` must be null or a pointer previously returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn discut_verdict_part_len(v: *const DiscutVerdict, part: u32) -> usize {
    if v.is_null() || part > 3 {
        return 0;
    }
    unsafe { &*v }
        .partition
        .as_ref()
        .map_or(0, |p| p[part as usize].len())
}

/// Copies certificate part `part` into `buf` (up to `cap` values) and
/// returns how many were written.
///
/// # Safety
/// `buf` must point to at least `cap` writable u32 values.
#[no_mangle]
pub unsafe extern "C" fn discut_verdict_part(
    v: *const DiscutVerdict,
    part: u32,
    buf: *mut u32,
    cap: usize,
) -> usize {
    if v.is_null() || buf.is_null() || part > 3 {
        return 0;
    }
    let verdict = &*v;
    let Some(p) = verdict.partition.as_ref() else {
        return 0;
    };
    let src = &p[part as usize];
    let k = src.len().min(cap);
    std::ptr::copy_nonoverlapping(src.as_ptr(), buf, k);
    k
}

/// Frees a verdict handle; null is a no-op.
///
/// # Safety
/// `v` must be null or a pointer previously returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn discut_verdict_free(v: *mut DiscutVerdict) {
    if !v.is_null() {
        drop(unsafe { Box::from_raw(v) });
    }
}
