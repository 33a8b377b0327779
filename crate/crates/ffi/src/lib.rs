//! C ABI over the ptfree solvers.
//!
//! Conventions:
//! - Handles (`PtInstance`, `Pt*Result`) are opaque; create them through the
//!   `pt_*` constructors and release them with the matching `pt_*_free`.
//! - Every fallible call returns a [`PtStatus`]; on anything but `PT_STATUS_OK`
//!   the output arguments are untouched and [`pt_last_error_message`] holds a
//!   description, valid on the calling thread until the next `pt_` call.
//! - Vertex ids at this boundary are 1-based, matching the instance file
//!   format and the CLI reports.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use ptfree::coloring::{solve_independent_oct, solve_list3col, solve_min_cost_3col};
use ptfree::matching::solve_induced_matching;
use ptfree::mwis::{find_mis, SolveOptions};
use ptfree::{parse_instance, pt_free_certificate, Error, Instance};

/// Status code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PtStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Input text was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The instance file did not parse.
    ParseError = 3,
    /// Arguments violated a documented precondition.
    InvalidInput = 4,
    /// The graph is not Pt-free; the witness is in the error message.
    NotPtFree = 5,
    /// An internal structural guarantee failed.
    InvariantViolation = 6,
    /// Weight arithmetic overflowed 64 bits.
    Overflow = 7,
    /// A solver panicked; this is a bug.
    Panic = 8,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let cleaned: String = msg.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = CString::new(cleaned).unwrap());
}

fn status_of(err: &Error) -> PtStatus {
    match err {
        Error::Parse { .. } => PtStatus::ParseError,
        Error::NotPtFree { .. } => PtStatus::NotPtFree,
        Error::InvariantViolation(_) => PtStatus::InvariantViolation,
        Error::InvalidInput(_) => PtStatus::InvalidInput,
        Error::Overflow => PtStatus::Overflow,
        Error::GeneratorGaveUp { .. } => PtStatus::InvalidInput,
    }
}

fn fail(err: Error) -> PtStatus {
    set_error(&err.to_string());
    status_of(&err)
}

fn guarded(f: impl FnOnce() -> PtStatus + std::panic::UnwindSafe) -> PtStatus {
    match catch_unwind(f) {
        Ok(status) => status,
        Err(_) => {
            set_error("solver panicked");
            PtStatus::Panic
        }
    }
}

/// Message describing the most recent failure on this thread. The pointer
/// stays valid until the next `pt_` call on the same thread.
#[no_mangle]
pub extern "C" fn pt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// A parsed instance: graph, vertex weights, color lists, color costs, and
/// edge weights.
pub struct PtInstance {
    inner: Instance,
}

/// Parses an instance file (DIMACS-like text) into a handle.
///
/// # Safety
/// `text` must point to a NUL-terminated string; `out` must be a valid
/// pointer. The returned handle must be released with [`pt_instance_free`].
#[no_mangle]
pub unsafe extern "C" fn pt_instance_parse(
    text: *const c_char,
    out: *mut *mut PtInstance,
) -> PtStatus {
    if text.is_null() || out.is_null() {
        set_error("null argument");
        return PtStatus::NullArgument;
    }
    let text = unsafe { CStr::from_ptr(text) };
    guarded(AssertUnwindSafe(|| {
        let Ok(text) = text.to_str() else {
            set_error("instance text is not valid UTF-8");
            return PtStatus::InvalidUtf8;
        };
        match parse_instance(text) {
            Ok(inner) => {
                unsafe { *out = Box::into_raw(Box::new(PtInstance { inner })) };
                PtStatus::Ok
            }
            Err(e) => fail(e),
        }
    }))
}

/// Releases an instance handle. Null is a no-op.
///
/// # Safety
/// `inst` must have come from [`pt_instance_parse`] and not been freed.
#[no_mangle]
pub unsafe extern "C" fn pt_instance_free(inst: *mut PtInstance) {
    if !inst.is_null() {
        drop(unsafe { Box::from_raw(inst) });
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `inst` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn pt_instance_vertex_count(inst: *const PtInstance) -> u32 {
    match unsafe { inst.as_ref() } {
        Some(inst) => inst.inner.graph.vertex_count() as u32,
        None => 0,
    }
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `inst` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn pt_instance_edge_count(inst: *const PtInstance) -> u64 {
    match unsafe { inst.as_ref() } {
        Some(inst) => inst.inner.graph.edge_count() as u64,
        None => 0,
    }
}

/// Decides Pt-freeness. When the answer is no and `witness` is non-null, up
/// to `witness_cap` vertices of one induced path on `t` vertices are copied
/// out and `witness_len` receives the witness length.
///
/// # Safety
/// `inst` must be a live handle; `out_ptfree` must be valid; `witness` and
/// `witness_len` may be null.
#[no_mangle]
pub unsafe extern "C" fn pt_check_ptfree(
    inst: *const PtInstance,
    t: u32,
    out_ptfree: *mut bool,
    witness: *mut u32,
    witness_cap: usize,
    witness_len: *mut usize,
) -> PtStatus {
    let (Some(inst), false) = (unsafe { inst.as_ref() }, out_ptfree.is_null()) else {
        set_error("null argument");
        return PtStatus::NullArgument;
    };
    guarded(AssertUnwindSafe(|| {
        let g = &inst.inner.graph;
        match pt_free_certificate(g, &g.full_set(), t as usize) {
            Ok(None) => {
                unsafe { *out_ptfree = true };
                if !witness_len.is_null() {
                    unsafe { *witness_len = 0 };
                }
                PtStatus::Ok
            }
            Ok(Some(path)) => {
                unsafe { *out_ptfree = false };
                let verts = path.vertices();
                if !witness_len.is_null() {
                    unsafe { *witness_len = verts.len() };
                }
                if !witness.is_null() {
                    for (i, &v) in verts.iter().take(witness_cap).enumerate() {
                        unsafe { *witness.add(i) = v + 1 };
                    }
                }
                PtStatus::Ok
            }
            Err(e) => fail(e),
        }
    }))
}

/// Maximum weight independent set result.
pub struct PtMwisResult {
    weight: i64,
    vertices: Vec<u32>,
    calls: u64,
}

/// Solves maximum weight independent set with the instance's vertex weights.
///
/// # Safety
/// `inst` must be a live handle; `out` must be valid. Free the result with
/// [`pt_mwis_free`].
#[no_mangle]
pub unsafe extern "C" fn pt_solve_mwis(
    inst: *const PtInstance,
    t: u32,
    use_cache: bool,
    out: *mut *mut PtMwisResult,
) -> PtStatus {
    let (Some(inst), false) = (unsafe { inst.as_ref() }, out.is_null()) else {
        set_error("null argument");
        return PtStatus::NullArgument;
    };
    guarded(AssertUnwindSafe(|| {
        let g = &inst.inner.graph;
        let opts = SolveOptions {
            use_cache,
            ..Default::default()
        };
        match find_mis(g, &g.full_set(), &inst.inner.weights, t as usize, opts) {
            Ok((sol, stats)) => {
                let res = PtMwisResult {
                    weight: sol.weight,
                    vertices: sol.chosen.iter().map(|v| v + 1).collect(),
                    calls: stats.calls,
                };
                unsafe { *out = Box::into_raw(Box::new(res)) };
                PtStatus::Ok
            }
            Err(e) => fail(e),
        }
    }))
}

/// # Safety
/// `res` must be a live result handle.
#[no_mangle]
pub unsafe extern "C" fn pt_mwis_weight(res: *const PtMwisResult) -> i64 {
    unsafe { res.as_ref() }.map_or(0, |r| r.weight)
}

/// # Safety
/// `res` must be a live result handle.
#[no_mangle]
pub unsafe extern "C" fn pt_mwis_vertex_count(res: *const PtMwisResult) -> usize {
    unsafe { res.as_ref() }.map_or(0, |r| r.vertices.len())
}

/// Copies up to `cap` chosen vertices (1-based) into `buf`; returns how many
/// were written.
///
/// # Safety
/// `res` must be a live result handle; `buf` must hold `cap` entries.
#[no_mangle]
pub unsafe extern "C" fn pt_mwis_copy_vertices(
    res: *const PtMwisResult,
    buf: *mut u32,
    cap: usize,
) -> usize {
    let Some(r) = (unsafe { res.as_ref() }) else {
        return 0;
    };
    if buf.is_null() {
        return 0;
    }
    let k = r.vertices.len().min(cap);
    for (i, &v) in r.vertices.iter().take(k).enumerate() {
        unsafe { *buf.add(i) = v };
    }
    k
}

/// Recursion nodes used by the solve.
///
/// # Safety
/// `res` must be a live result handle.
#[no_mangle]
pub unsafe extern "C" fn pt_mwis_calls(res: *const PtMwisResult) -> u64 {
    unsafe { res.as_ref() }.map_or(0, |r| r.calls)
}

/// # Safety
/// `res` must have come from [`pt_solve_mwis`] and not been freed.
#[no_mangle]
pub unsafe extern "C" fn pt_mwis_free(res: *mut PtMwisResult) {
    if !res.is_null() {
        drop(unsafe { Box::from_raw(res) });
    }
}

/// List 3-coloring result; also carries the cost for the min-cost variant.
pub struct PtColoringResult {
    feasible: bool,
    /// colors[v] for 0-based v; 0 = uncolored.
    colors: Vec<u8>,
    cost: i64,
}

fn coloring_result(
    out: *mut *mut PtColoringResult,
    n: usize,
    sol: Option<ptfree::coloring::ColoringSolution>,
) -> PtStatus {
    let res = match sol {
        None => PtColoringResult {
            feasible: false,
            colors: vec![0; n],
            cost: 0,
        },
        Some(sol) => {
            let mut colors = vec![0u8; n];
            for (&v, &c) in &sol.assignment {
                colors[v as usize] = c;
            }
            PtColoringResult {
                feasible: true,
                colors,
                cost: sol.cost.unwrap_or(0),
            }
        }
    };
    unsafe { *out = Box::into_raw(Box::new(res)) };
    PtStatus::Ok
}

/// Decides list 3-colorability with the instance's lists. An infeasible
/// instance still returns `PT_STATUS_OK`; query [`pt_coloring_feasible`].
///
/// # Safety
/// `inst` must be a live handle; `out` must be valid. Free the result with
/// [`pt_coloring_free`].
#[no_mangle]
pub unsafe extern "C" fn pt_solve_list3col(
    inst: *const PtInstance,
    t: u32,
    out: *mut *mut PtColoringResult,
) -> PtStatus {
    let (Some(inst), false) = (unsafe { inst.as_ref() }, out.is_null()) else {
        set_error("null argument");
        return PtStatus::NullArgument;
    };
    guarded(AssertUnwindSafe(|| {
        let g = &inst.inner.graph;
        match solve_list3col(g, &g.full_set(), &inst.inner.lists, t as usize) {
            Ok((sol, _)) => coloring_result(out, g.vertex_count(), sol),
            Err(e) => fail(e),
        }
    }))
}

/// Minimum-cost proper list coloring with the instance's lists and costs.
///
/// # Safety
/// Same contract as [`pt_solve_list3col`].
#[no_mangle]
pub unsafe extern "C" fn pt_solve_cost3col(
    inst: *const PtInstance,
    t: u32,
    out: *mut *mut PtColoringResult,
) -> PtStatus {
    let (Some(inst), false) = (unsafe { inst.as_ref() }, out.is_null()) else {
        set_error("null argument");
        return PtStatus::NullArgument;
    };
    guarded(AssertUnwindSafe(|| {
        let g = &inst.inner.graph;
        match solve_min_cost_3col(
            g,
            &g.full_set(),
            &inst.inner.lists,
            &inst.inner.costs,
            t as usize,
        ) {
            Ok((sol, _)) => coloring_result(out, g.vertex_count(), sol),
            Err(e) => fail(e),
        }
    }))
}

/// # Safety
/// `res` must be a live result handle.
#[no_mangle]
pub unsafe extern "C" fn pt_coloring_feasible(res: *const PtColoringResult) -> bool {
    unsafe { res.as_ref() }.is_some_and(|r| r.feasible)
}

/// Color of the 1-based vertex `v`, or 0 when infeasible or out of range.
///
/// # Safety
/// `res` must be a live result handle.
#[no_mangle]
pub unsafe extern "C" fn pt_coloring_color(res: *const PtColoringResult, v: u32) -> u8 {
    let Some(r) = (unsafe { res.as_ref() }) else {
        return 0;
    };
    if v == 0 {
        return 0;
    }
    r.colors.get((v - 1) as usize).copied().unwrap_or(0)
}

/// Total cost for min-cost runs; 0 for decision runs.
///
/// # Safety
/// `res` must be a live result handle.
#[no_mangle]
pub unsafe extern "C" fn pt_coloring_cost(res: *const PtColoringResult) -> i64 {
    unsafe { res.as_ref() }.map_or(0, |r| r.cost)
}

/// # Safety
/// `res` must have come from a coloring solve and not been freed.
#[no_mangle]
pub unsafe extern "C" fn pt_coloring_free(res: *mut PtColoringResult) {
    if !res.is_null() {
        drop(unsafe { Box::from_raw(res) });
    }
}

/// Independent odd cycle transversal result.
pub struct PtOctResult {
    feasible: bool,
    weight: i64,
    vertices: Vec<u32>,
}

/// Minimum-weight independent set whose removal leaves the graph bipartite,
/// using the instance's vertex weights (must be nonnegative). An infeasible
/// (non-3-colorable) instance returns `PT_STATUS_OK` with `feasible` false.
///
/// # Safety
/// `inst` must be a live handle; `out` must be valid. Free the result with
/// [`pt_oct_free`].
#[no_mangle]
pub unsafe extern "C" fn pt_solve_independent_oct(
    inst: *const PtInstance,
    t: u32,
    out: *mut *mut PtOctResult,
) -> PtStatus {
    let (Some(inst), false) = (unsafe { inst.as_ref() }, out.is_null()) else {
        set_error("null argument");
        return PtStatus::NullArgument;
    };
    guarded(AssertUnwindSafe(|| {
        let g = &inst.inner.graph;
        match solve_independent_oct(g, &g.full_set(), &inst.inner.weights, t as usize) {
            Ok((sol, _)) => {
                let res = match sol {
                    None => PtOctResult {
                        feasible: false,
                        weight: 0,
                        vertices: Vec::new(),
                    },
                    Some(oct) => PtOctResult {
                        feasible: true,
                        weight: oct.weight,
                        vertices: oct.vertices.iter().map(|v| v + 1).collect(),
                    },
                };
                unsafe { *out = Box::into_raw(Box::new(res)) };
                PtStatus::Ok
            }
            Err(e) => fail(e),
        }
    }))
}

/// # Safety
/// `res` must be a live result handle.
#[no_mangle]
pub unsafe extern "C" fn pt_oct_feasible(res: *const PtOctResult) -> bool {
    unsafe { res.as_ref() }.is_some_and(|r| r.feasible)
}

/// # Safety
/// `res` must be a live result handle.
#[no_mangle]
pub unsafe extern "C" fn pt_oct_weight(res: *const PtOctResult) -> i64 {
    unsafe { res.as_ref() }.map_or(0, |r| r.weight)
}

/// # Safety
/// `res` must be a live result handle.
#[no_mangle]
pub unsafe extern "C" fn pt_oct_vertex_count(res: *const PtOctResult) -> usize {
    unsafe { res.as_ref() }.map_or(0, |r| r.vertices.len())
}

/// Copies up to `cap` transversal vertices (1-based) into `buf`.
///
/// # Safety
/// `res` must be a live result handle; `buf` must hold `cap` entries.
#[no_mangle]
pub unsafe extern "C" fn pt_oct_copy_vertices(
    res: *const PtOctResult,
    buf: *mut u32,
    cap: usize,
) -> usize {
    let Some(r) = (unsafe { res.as_ref() }) else {
        return 0;
    };
    if buf.is_null() {
        return 0;
    }
    let k = r.vertices.len().min(cap);
    for (i, &v) in r.vertices.iter().take(k).enumerate() {
        unsafe { *buf.add(i) = v };
    }
    k
}

/// # Safety
/// `res` must have come from [`pt_solve_independent_oct`] and not been freed.
#[no_mangle]
pub unsafe extern "C" fn pt_oct_free(res: *mut PtOctResult) {
    if !res.is_null() {
        drop(unsafe { Box::from_raw(res) });
    }
}

/// Maximum weight induced matching result.
pub struct PtMatchingResult {
    weight: i64,
    /// Flattened 1-based endpoint pairs.
    edges: Vec<u32>,
}

/// Maximum weight induced matching with the instance's edge weights.
/// Requires `t >= 4`.
///
/// # Safety
/// `inst` must be a live handle; `out` must be valid. Free the result with
/// [`pt_matching_free`].
#[no_mangle]
pub unsafe extern "C" fn pt_solve_induced_matching(
    inst: *const PtInstance,
    t: u32,
    out: *mut *mut PtMatchingResult,
) -> PtStatus {
    let (Some(inst), false) = (unsafe { inst.as_ref() }, out.is_null()) else {
        set_error("null argument");
        return PtStatus::NullArgument;
    };
    guarded(AssertUnwindSafe(|| {
        let g = &inst.inner.graph;
        match solve_induced_matching(g, &g.full_set(), &inst.inner.edge_weights, t as usize) {
            Ok((sol, _)) => {
                let mut edges = Vec::with_capacity(sol.edges.len() * 2);
                for (u, v) in sol.edges {
                    edges.push(u + 1);
                    edges.push(v + 1);
                }
                unsafe {
                    *out = Box::into_raw(Box::new(PtMatchingResult {
                        weight: sol.weight,
                        edges,
                    }))
                };
                PtStatus::Ok
            }
            Err(e) => fail(e),
        }
    }))
}

/// # Safety
/// `res` must be a live result handle.
#[no_mangle]
pub unsafe extern "C" fn pt_matching_weight(res: *const PtMatchingResult) -> i64 {
    unsafe { res.as_ref() }.map_or(0, |r| r.weight)
}

/// # Safety
/// `res` must be a live result handle.
#[no_mangle]
pub unsafe extern "C" fn pt_matching_edge_count(res: *const PtMatchingResult) -> usize {
    unsafe { res.as_ref() }.map_or(0, |r| r.edges.len() / 2)
}

/// Copies up to `cap_pairs` edges into `buf` as flattened `(u, v)` pairs
/// (so `buf` must hold `2 * cap_pairs` entries); returns the pair count.
///
/// # Safety
/// `res` must be a live result handle; `buf` must hold `2 * cap_pairs`
/// entries.
#[no_mangle]
pub unsafe extern "C" fn pt_matching_copy_edges(
    res: *const PtMatchingResult,
    buf: *mut u32,
    cap_pairs: usize,
) -> usize {
    let Some(r) = (unsafe { res.as_ref() }) else {
        return 0;
    };
    if buf.is_null() {
        return 0;
    }
    let pairs = (r.edges.len() / 2).min(cap_pairs);
    for i in 0..pairs * 2 {
        unsafe { *buf.add(i) = r.edges[i] };
    }
    pairs
}

/// # Safety
/// `res` must have come from [`pt_solve_induced_matching`] and not been
/// freed.
#[no_mangle]
pub unsafe extern "C" fn pt_matching_free(res: *mut PtMatchingResult) {
    if !res.is_null() {
        drop(unsafe { Box::from_raw(res) });
    }
}
