//! C interface: opaque handles over graphs, codes, and solved games,
//! status codes instead of panics, and a thread-local error message.
//!
//! Ownership rules are uniform: every `*_free` releases exactly the
//! handles or strings the corresponding constructor returned, out
//! parameters are written only when the call returns `GC_STATUS_OK`,
//! and every returned string is freed with `gc_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use gamecodes::anngame::{AnnError, AnnGraph};
use gamecodes::codes::{anncode_of, parse_vector_lines, Code};
use gamecodes::gf2::Gf2Matrix;
use gamecodes::groundgraph::{example2_graph, gamma_t, nim_heap, star_into_leaf, GroundGraph};
use gamecodes::lexicode::{greedy, greedy_value_ordered, lexi_anncode, make_ordering};
use gamecodes::selftest;
use gamecodes::solver::{classify_pnd, gamma_solve, GammaTable, GammaValue, Outcome};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GcStatus {
    /// Success; out parameters are valid.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A text argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Input text failed to parse; see gc_last_error.
    ParseError = 3,
    /// Arguments violate a documented precondition; see gc_last_error.
    Precondition = 4,
    /// The computation would exceed a scale cap; see gc_last_error.
    ScaleCap = 5,
    /// An index argument was out of range.
    IndexOutOfRange = 6,
    /// An internal invariant failed; see gc_last_error.
    Internal = 7,
}

/// A token-movement graph (vertices and directed edges).
pub struct GcGraph(GroundGraph);

/// An immutable binary code: fixed-width words, sorted ascending.
pub struct GcCode(Code);

/// A fully solved game over all positions of a graph's token game.
pub struct GcSolution {
    ann: AnnGraph,
    outcomes: Vec<Outcome>,
    table: GammaTable,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(status: GcStatus, message: impl Into<Vec<u8>>) -> GcStatus {
    let text = CString::new(message).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = text);
    status
}

fn ann_status(e: &AnnError) -> GcStatus {
    match e {
        AnnError::ScaleCap { .. } => GcStatus::ScaleCap,
        AnnError::TooWide { .. } => GcStatus::Precondition,
    }
}

/// Guards the library boundary: a panic must not unwind into C.
fn guarded(body: impl FnOnce() -> GcStatus) -> GcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(ToString::to_string)
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic in library call".into());
            fail(GcStatus::Internal, msg)
        }
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, GcStatus> {
    if ptr.is_null() {
        return Err(fail(GcStatus::NullArgument, "text argument is null"));
    }
    unsafe { CStr::from_ptr(ptr) }
        .to_str()
        .map_err(|e| fail(GcStatus::InvalidUtf8, e.to_string()))
}

fn give_string(text: String) -> *mut c_char {
    CString::new(text)
        .unwrap_or_default()
        .into_raw()
}

unsafe fn give<T>(out: *mut *mut T, value: T) -> GcStatus {
    if out.is_null() {
        return fail(GcStatus::NullArgument, "out parameter is null");
    }
    unsafe { *out = Box::into_raw(Box::new(value)) };
    GcStatus::Ok
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread; never free it.
#[no_mangle]
pub extern "C" fn gc_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Free a string returned by this library. Null is accepted.
///
/// # Safety
/// `s` must be a pointer previously returned by a gc_* function that
/// documents gc_string_free ownership, or null; it must not be used
/// again afterwards.
#[no_mangle]
pub unsafe extern "C" fn gc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Parse a graph file (see the text format in the library docs) into a
/// new graph handle. On success the caller owns the handle and releases
/// it with gc_graph_free.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must point to
/// writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_parse(
    text: *const c_char,
    out: *mut *mut GcGraph,
) -> GcStatus {
    guarded(|| {
        let text = match unsafe { read_str(text) } {
            Ok(t) => t,
            Err(status) => return status,
        };
        match GroundGraph::parse(text) {
            Ok(g) => unsafe { give(out, GcGraph(g)) },
            Err(e) => fail(GcStatus::ParseError, e.to_string()),
        }
    })
}

/// Build the two-layer family graph on 2^(t-1) paired vertices.
/// Supported range: 1 <= t <= 10.
///
/// # Safety
/// `out` must point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_gamma_t(t: u32, out: *mut *mut GcGraph) -> GcStatus {
    guarded(|| {
        if !(1..=10).contains(&t) {
            return fail(
                GcStatus::Precondition,
                format!("t = {t} out of supported range 1..=10"),
            );
        }
        unsafe { give(out, GcGraph(gamma_t(t))) }
    })
}

/// Build a single take-any-number heap of the given size (1..=4096).
///
/// # Safety
/// `out` must point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_nim_heap(size: u32, out: *mut *mut GcGraph) -> GcStatus {
    guarded(|| {
        if !(1..=4096).contains(&size) {
            return fail(
                GcStatus::Precondition,
                format!("size = {size} out of supported range 1..=4096"),
            );
        }
        unsafe { give(out, GcGraph(nim_heap(size as usize))) }
    })
}

/// Build the star graph: k vertices with one move each into a shared
/// sink (1..=4096).
///
/// # Safety
/// `out` must point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_star(k: u32, out: *mut *mut GcGraph) -> GcStatus {
    guarded(|| {
        if !(1..=4096).contains(&k) {
            return fail(
                GcStatus::Precondition,
                format!("k = {k} out of supported range 1..=4096"),
            );
        }
        unsafe { give(out, GcGraph(star_into_leaf(k as usize))) }
    })
}

/// Build the fixed five-vertex graph with a two-cycle and two sink
/// feeders.
///
/// # Safety
/// `out` must point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_example2(out: *mut *mut GcGraph) -> GcStatus {
    guarded(|| unsafe { give(out, GcGraph(example2_graph())) })
}

/// Disjoint union of two graphs; the second graph's vertices are
/// renumbered after the first's.
///
/// # Safety
/// `a` and `b` must be live graph handles; `out` must point to writable
/// storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_sum(
    a: *const GcGraph,
    b: *const GcGraph,
    out: *mut *mut GcGraph,
) -> GcStatus {
    guarded(|| {
        if a.is_null() || b.is_null() {
            return fail(GcStatus::NullArgument, "graph argument is null");
        }
        let (a, b) = unsafe { (&(*a).0, &(*b).0) };
        unsafe { give(out, GcGraph(a.disjoint_sum(b))) }
    })
}

/// Number of vertices; 0 if the handle is null.
///
/// # Safety
/// `g` must be a live graph handle or null.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_vertex_count(g: *const GcGraph) -> usize {
    if g.is_null() {
        return 0;
    }
    unsafe { &(*g).0 }.n()
}

/// Canonical text form of the graph; free with gc_string_free. Null if
/// the handle is null.
///
/// # Safety
/// `g` must be a live graph handle or null.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_serialize(g: *const GcGraph) -> *mut c_char {
    if g.is_null() {
        return std::ptr::null_mut();
    }
    give_string(unsafe { &(*g).0 }.serialize())
}

/// Release a graph handle. Null is accepted.
///
/// # Safety
/// `g` must be a handle returned by this library, not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_free(g: *mut GcGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Code of the losing positions of the token game on `g`, sinks
/// projected away. `max_coords` caps the enumerated coordinate count
/// (2^c positions are built); pass 24 for the default budget.
///
/// # Safety
/// `g` must be a live graph handle; `out` must point to writable storage
/// for one pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_anncode(
    g: *const GcGraph,
    max_coords: u32,
    out: *mut *mut GcCode,
) -> GcStatus {
    guarded(|| {
        if g.is_null() {
            return fail(GcStatus::NullArgument, "graph argument is null");
        }
        match anncode_of(unsafe { &(*g).0 }, max_coords) {
            Ok(code) => unsafe { give(out, GcCode(code)) },
            Err(e) => fail(ann_status(&e), e.to_string()),
        }
    })
}

/// Greedy code from a matrix-defined ordering. `matrix_text` is the
/// matrix file format (one row of 0/1 per line, top row first); `m` is
/// the ordering bit count, 0 meaning the full matrix size; thresholds
/// start at d = 1; `value_order` switches the scan to ascending integer
/// order. At most 2^20 vectors are enumerated.
///
/// # Safety
/// `matrix_text` must be a valid NUL-terminated string; `out` must point
/// to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_lexicode(
    matrix_text: *const c_char,
    d: u32,
    m: u32,
    value_order: bool,
    out: *mut *mut GcCode,
) -> GcStatus {
    guarded(|| {
        let text = match unsafe { read_str(matrix_text) } {
            Ok(t) => t,
            Err(status) => return status,
        };
        if d < 1 {
            return fail(GcStatus::Precondition, "d must be at least 1");
        }
        let w = match Gf2Matrix::parse(text) {
            Ok(w) => w,
            Err(e) => return fail(GcStatus::ParseError, e.to_string()),
        };
        let m = if m == 0 { w.n_cols() as u32 } else { m };
        if m > 20 {
            return fail(
                GcStatus::ScaleCap,
                format!("m = {m} exceeds the cap of 20"),
            );
        }
        let ordering = match make_ordering(w, m) {
            Ok(o) => o,
            Err(e) => return fail(GcStatus::Precondition, e.to_string()),
        };
        let result = if value_order {
            greedy_value_ordered(&ordering.vectors(), d)
        } else {
            greedy(&ordering, d)
        };
        unsafe { give(out, GcCode(result.to_code())) }
    })
}

/// Greedy code over the span of the basis listed in `basis_text` (code
/// file format, one vector per line, file order kept). At most 20 basis
/// vectors are accepted.
///
/// # Safety
/// `basis_text` must be a valid NUL-terminated string; `out` must point
/// to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_lexi_anncode(
    basis_text: *const c_char,
    d: u32,
    out: *mut *mut GcCode,
) -> GcStatus {
    guarded(|| {
        let text = match unsafe { read_str(basis_text) } {
            Ok(t) => t,
            Err(status) => return status,
        };
        if d < 1 {
            return fail(GcStatus::Precondition, "d must be at least 1");
        }
        let basis = match parse_vector_lines(text) {
            Ok(b) => b,
            Err(e) => return fail(GcStatus::ParseError, e.to_string()),
        };
        if basis.len() > 20 {
            return fail(
                GcStatus::ScaleCap,
                format!("basis of {} vectors exceeds the cap of 20", basis.len()),
            );
        }
        match lexi_anncode(&basis, d) {
            Ok(result) => unsafe { give(out, GcCode(result.to_code())) },
            Err(e) => fail(GcStatus::Precondition, e.to_string()),
        }
    })
}

/// Parse a code file into a code handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must point to
/// writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_code_parse(text: *const c_char, out: *mut *mut GcCode) -> GcStatus {
    guarded(|| {
        let text = match unsafe { read_str(text) } {
            Ok(t) => t,
            Err(status) => return status,
        };
        match Code::parse(text) {
            Ok(code) => unsafe { give(out, GcCode(code)) },
            Err(e) => fail(GcStatus::ParseError, e.to_string()),
        }
    })
}

/// Word length in bits; 0 if the handle is null.
///
/// # Safety
/// `c` must be a live code handle or null.
#[no_mangle]
pub unsafe extern "C" fn gc_code_length(c: *const GcCode) -> u32 {
    if c.is_null() {
        return 0;
    }
    unsafe { &(*c).0 }.length()
}

/// Number of codewords; 0 if the handle is null.
///
/// # Safety
/// `c` must be a live code handle or null.
#[no_mangle]
pub unsafe extern "C" fn gc_code_size(c: *const GcCode) -> usize {
    if c.is_null() {
        return 0;
    }
    unsafe { &(*c).0 }.size()
}

/// 1 if the code is linear (closed under XOR, zero included).
///
/// # Safety
/// `c` must be a live code handle or null.
#[no_mangle]
pub unsafe extern "C" fn gc_code_is_linear(c: *const GcCode) -> bool {
    !c.is_null() && unsafe { &(*c).0 }.is_linear()
}

/// Dimension as a linear code, or -1 when the code is not linear.
///
/// # Safety
/// `c` must be a live code handle or null.
#[no_mangle]
pub unsafe extern "C" fn gc_code_dimension(c: *const GcCode) -> i64 {
    if c.is_null() {
        return -1;
    }
    unsafe { &(*c).0 }
        .dimension()
        .map_or(-1, |d| d as i64)
}

/// Minimum distance, or -1 when undefined (fewer than two words).
///
/// # Safety
/// `c` must be a live code handle or null.
#[no_mangle]
pub unsafe extern "C" fn gc_code_min_distance(c: *const GcCode) -> i64 {
    if c.is_null() {
        return -1;
    }
    unsafe { &(*c).0 }.min_distance().map_or(-1, i64::from)
}

/// Codeword at `index` (ascending order) as an integer, least
/// significant bit = rightmost printed bit.
///
/// # Safety
/// `c` must be a live code handle; `out` must point to writable storage
/// for one u64.
#[no_mangle]
pub unsafe extern "C" fn gc_code_word(
    c: *const GcCode,
    index: usize,
    out: *mut u64,
) -> GcStatus {
    guarded(|| {
        if c.is_null() || out.is_null() {
            return fail(GcStatus::NullArgument, "argument is null");
        }
        let code = unsafe { &(*c).0 };
        match code.words().get(index) {
            Some(w) => {
                unsafe { *out = w.bits() };
                GcStatus::Ok
            }
            None => fail(
                GcStatus::IndexOutOfRange,
                format!("index {index} out of range for {} words", code.size()),
            ),
        }
    })
}

/// Text form of the code (one word per line, ascending); free with
/// gc_string_free. Null if the handle is null.
///
/// # Safety
/// `c` must be a live code handle or null.
#[no_mangle]
pub unsafe extern "C" fn gc_code_serialize(c: *const GcCode) -> *mut c_char {
    if c.is_null() {
        return std::ptr::null_mut();
    }
    give_string(unsafe { &(*c).0 }.serialize())
}

/// Release a code handle. Null is accepted.
///
/// # Safety
/// `c` must be a handle returned by this library, not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn gc_code_free(c: *mut GcCode) {
    if !c.is_null() {
        drop(unsafe { Box::from_raw(c) });
    }
}

/// Solve the token game on `g` over all positions: outcome
/// classification plus the general value table. `project_sinks` drops
/// sink vertices from the position encoding (the usual choice);
/// `max_coords` caps the coordinate count as in gc_anncode.
///
/// # Safety
/// `g` must be a live graph handle; `out` must point to writable storage
/// for one pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_solve(
    g: *const GcGraph,
    project_sinks: bool,
    max_coords: u32,
    out: *mut *mut GcSolution,
) -> GcStatus {
    guarded(|| {
        if g.is_null() {
            return fail(GcStatus::NullArgument, "graph argument is null");
        }
        let ground = unsafe { &(*g).0 }.clone();
        let ann = match AnnGraph::new(ground, project_sinks) {
            Ok(a) => a,
            Err(e) => return fail(ann_status(&e), e.to_string()),
        };
        let game = match ann.materialize(max_coords) {
            Ok(game) => game,
            Err(e) => return fail(ann_status(&e), e.to_string()),
        };
        let outcomes = classify_pnd(&game);
        let table = gamma_solve(&game);
        unsafe {
            give(
                out,
                GcSolution {
                    ann,
                    outcomes,
                    table,
                },
            )
        }
    })
}

/// Number of position coordinates; 0 if the handle is null.
///
/// # Safety
/// `s` must be a live solution handle or null.
#[no_mangle]
pub unsafe extern "C" fn gc_solution_width(s: *const GcSolution) -> u32 {
    if s.is_null() {
        return 0;
    }
    unsafe { &*s }.ann.width()
}

/// Number of solved positions (2^width); 0 if the handle is null.
///
/// # Safety
/// `s` must be a live solution handle or null.
#[no_mangle]
pub unsafe extern "C" fn gc_solution_position_count(s: *const GcSolution) -> u64 {
    if s.is_null() {
        return 0;
    }
    unsafe { &*s }.outcomes.len() as u64
}

/// Outcome of `position`: 0 = previous player wins (losing to move),
/// 1 = next player wins, 2 = draw.
///
/// # Safety
/// `s` must be a live solution handle; `out` must point to writable
/// storage for one u8.
#[no_mangle]
pub unsafe extern "C" fn gc_solution_outcome(
    s: *const GcSolution,
    position: u64,
    out: *mut u8,
) -> GcStatus {
    guarded(|| {
        if s.is_null() || out.is_null() {
            return fail(GcStatus::NullArgument, "argument is null");
        }
        let solution = unsafe { &*s };
        match solution.outcomes.get(position as usize) {
            Some(o) => {
                unsafe {
                    *out = match o {
                        Outcome::P => 0,
                        Outcome::N => 1,
                        Outcome::D => 2,
                    }
                };
                GcStatus::Ok
            }
            None => fail(
                GcStatus::IndexOutOfRange,
                format!("position {position} out of range"),
            ),
        }
    })
}

/// Value of `position`: writes 1 and the value when finite, 0 when
/// infinite (a draw-capable position).
///
/// # Safety
/// `s` must be a live solution handle; `out_is_finite` and `out_value`
/// must point to writable storage.
#[no_mangle]
pub unsafe extern "C" fn gc_solution_gamma(
    s: *const GcSolution,
    position: u64,
    out_is_finite: *mut bool,
    out_value: *mut u64,
) -> GcStatus {
    guarded(|| {
        if s.is_null() || out_is_finite.is_null() || out_value.is_null() {
            return fail(GcStatus::NullArgument, "argument is null");
        }
        let solution = unsafe { &*s };
        if position as usize >= solution.table.len() {
            return fail(
                GcStatus::IndexOutOfRange,
                format!("position {position} out of range"),
            );
        }
        match solution.table.value(position as usize) {
            GammaValue::Finite(k) => unsafe {
                *out_is_finite = true;
                *out_value = *k;
            },
            GammaValue::Infinite(_) => unsafe {
                *out_is_finite = false;
                *out_value = 0;
            },
        }
        GcStatus::Ok
    })
}

/// Finite values reachable in one move from an infinite-valued
/// `position` (its exit set), ascending. Writes up to `cap` values into
/// `buf` and stores the full count in `out_len`; call with cap = 0 to
/// query the length. Finite positions have an empty exit set here.
///
/// # Safety
/// `s` must be a live solution handle; `buf` must point to `cap`
/// writable u64 slots (ignored when cap = 0); `out_len` must point to
/// writable storage.
#[no_mangle]
pub unsafe extern "C" fn gc_solution_gamma_exits(
    s: *const GcSolution,
    position: u64,
    buf: *mut u64,
    cap: usize,
    out_len: *mut usize,
) -> GcStatus {
    guarded(|| {
        if s.is_null() || out_len.is_null() || (cap > 0 && buf.is_null()) {
            return fail(GcStatus::NullArgument, "argument is null");
        }
        let solution = unsafe { &*s };
        if position as usize >= solution.table.len() {
            return fail(
                GcStatus::IndexOutOfRange,
                format!("position {position} out of range"),
            );
        }
        match solution.table.value(position as usize) {
            GammaValue::Finite(_) => unsafe { *out_len = 0 },
            GammaValue::Infinite(exits) => {
                unsafe { *out_len = exits.len() };
                for (i, &v) in exits.iter().take(cap).enumerate() {
                    unsafe { *buf.add(i) = v };
                }
            }
        }
        GcStatus::Ok
    })
}

/// Counter witness of `position`: writes 1 and the counter when the
/// position has one (finite value), 0 otherwise.
///
/// # Safety
/// `s` must be a live solution handle; `out_has` and `out_value` must
/// point to writable storage.
#[no_mangle]
pub unsafe extern "C" fn gc_solution_counter(
    s: *const GcSolution,
    position: u64,
    out_has: *mut bool,
    out_value: *mut u64,
) -> GcStatus {
    guarded(|| {
        if s.is_null() || out_has.is_null() || out_value.is_null() {
            return fail(GcStatus::NullArgument, "argument is null");
        }
        let solution = unsafe { &*s };
        if position as usize >= solution.table.len() {
            return fail(
                GcStatus::IndexOutOfRange,
                format!("position {position} out of range"),
            );
        }
        match solution.table.counter(position as usize) {
            Some(counter) => unsafe {
                *out_has = true;
                *out_value = counter;
            },
            None => unsafe {
                *out_has = false;
                *out_value = 0;
            },
        }
        GcStatus::Ok
    })
}

/// Release a solution handle. Null is accepted.
///
/// # Safety
/// `s` must be a handle returned by this library, not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn gc_solution_free(s: *mut GcSolution) {
    if !s.is_null() {
        drop(unsafe { Box::from_raw(s) });
    }
}

/// Run every built-in reproduction check; returns the number of failing
/// checks (0 = the library reproduces all of its reference values).
#[no_mangle]
pub extern "C" fn gc_self_check() -> u32 {
    guarded_count(|| selftest::run_all().iter().filter(|r| !r.pass).count() as u32)
}

fn guarded_count(body: impl FnOnce() -> u32) -> u32 {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(u32::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;
    use std::ptr;

    fn c(text: &str) -> CString {
        CString::new(text).unwrap()
    }

    #[test]
    fn graph_roundtrip_and_anncode() {
        unsafe {
            let mut graph: *mut GcGraph = ptr::null_mut();
            assert_eq!(gc_graph_star(4, &mut graph), GcStatus::Ok);
            assert_eq!(gc_graph_vertex_count(graph), 5);

            let text = gc_graph_serialize(graph);
            let mut reparsed: *mut GcGraph = ptr::null_mut();
            assert_eq!(gc_graph_parse(text, &mut reparsed), GcStatus::Ok);
            assert_eq!(gc_graph_vertex_count(reparsed), 5);
            gc_string_free(text);

            let mut code: *mut GcCode = ptr::null_mut();
            assert_eq!(gc_anncode(graph, 24, &mut code), GcStatus::Ok);
            assert_eq!(gc_code_length(code), 4);
            assert_eq!(gc_code_size(code), 8);
            assert!(gc_code_is_linear(code));
            assert_eq!(gc_code_dimension(code), 3);
            assert_eq!(gc_code_min_distance(code), 2);
            let expected = [0u64, 3, 5, 6, 9, 10, 12, 15];
            for (i, &want) in expected.iter().enumerate() {
                let mut word = 0u64;
                assert_eq!(gc_code_word(code, i, &mut word), GcStatus::Ok);
                assert_eq!(word, want);
            }
            let mut word = 0u64;
            assert_eq!(
                gc_code_word(code, 8, &mut word),
                GcStatus::IndexOutOfRange
            );

            gc_code_free(code);
            gc_graph_free(graph);
            gc_graph_free(reparsed);
        }
    }

    #[test]
    fn solve_reports_outcomes_and_values() {
        unsafe {
            let mut graph: *mut GcGraph = ptr::null_mut();
            assert_eq!(gc_graph_example2(&mut graph), GcStatus::Ok);
            let mut solution: *mut GcSolution = ptr::null_mut();
            assert_eq!(gc_solve(graph, true, 24, &mut solution), GcStatus::Ok);
            assert_eq!(gc_solution_width(solution), 4);
            assert_eq!(gc_solution_position_count(solution), 16);

            // Position 15 is a first-player win of value 1 with a counter.
            let mut outcome = 9u8;
            assert_eq!(gc_solution_outcome(solution, 15, &mut outcome), GcStatus::Ok);
            assert_eq!(outcome, 1);
            let (mut finite, mut value) = (false, 0u64);
            assert_eq!(
                gc_solution_gamma(solution, 15, &mut finite, &mut value),
                GcStatus::Ok
            );
            assert!(finite);
            assert_eq!(value, 1);
            let (mut has, mut counter) = (false, 0u64);
            assert_eq!(
                gc_solution_counter(solution, 15, &mut has, &mut counter),
                GcStatus::Ok
            );
            assert!(has);

            // A lone token on the two-cycle draws with an empty exit set.
            assert_eq!(gc_solution_outcome(solution, 1, &mut outcome), GcStatus::Ok);
            assert_eq!(outcome, 2);
            let mut len = 99usize;
            assert_eq!(
                gc_solution_gamma_exits(solution, 1, ptr::null_mut(), 0, &mut len),
                GcStatus::Ok
            );
            assert_eq!(len, 0);

            assert_eq!(
                gc_solution_outcome(solution, 16, &mut outcome),
                GcStatus::IndexOutOfRange
            );

            gc_solution_free(solution);
            gc_graph_free(graph);
        }
    }

    #[test]
    fn lexicode_and_span_calls() {
        unsafe {
            let matrix = c("1000\n1100\n0110\n0011\n");
            let mut code: *mut GcCode = ptr::null_mut();
            assert_eq!(
                gc_lexicode(matrix.as_ptr(), 2, 0, false, &mut code),
                GcStatus::Ok
            );
            assert_eq!(gc_code_size(code), 8);
            assert!(gc_code_is_linear(code));
            gc_code_free(code);

            let basis = c("1100\n0011\n");
            let mut span_code: *mut GcCode = ptr::null_mut();
            assert_eq!(
                gc_lexi_anncode(basis.as_ptr(), 2, &mut span_code),
                GcStatus::Ok
            );
            assert_eq!(gc_code_size(span_code), 4);
            gc_code_free(span_code);
        }
    }

    #[test]
    fn errors_set_messages_and_statuses() {
        unsafe {
            let mut graph: *mut GcGraph = ptr::null_mut();
            assert_eq!(
                gc_graph_parse(ptr::null(), &mut graph),
                GcStatus::NullArgument
            );
            let bad = c("vertices 2\n0 -> 9\n");
            assert_eq!(gc_graph_parse(bad.as_ptr(), &mut graph), GcStatus::ParseError);
            let msg = CStr::from_ptr(gc_last_error());
            assert!(!msg.to_bytes().is_empty());

            assert_eq!(gc_graph_gamma_t(0, &mut graph), GcStatus::Precondition);
            assert_eq!(gc_graph_gamma_t(99, &mut graph), GcStatus::Precondition);

            // Scale cap: a wide family graph with a tiny budget.
            assert_eq!(gc_graph_gamma_t(5, &mut graph), GcStatus::Ok);
            let mut solution: *mut GcSolution = ptr::null_mut();
            assert_eq!(gc_solve(graph, true, 10, &mut solution), GcStatus::ScaleCap);
            gc_graph_free(graph);

            let dependent = c("11\n11\n");
            let mut code: *mut GcCode = ptr::null_mut();
            assert_eq!(
                gc_lexi_anncode(dependent.as_ptr(), 2, &mut code),
                GcStatus::Precondition
            );
        }
    }

    #[test]
    fn self_check_passes() {
        assert_eq!(gc_self_check(), 0);
    }

    #[test]
    fn frees_accept_null() {
        unsafe {
            gc_graph_free(ptr::null_mut());
            gc_code_free(ptr::null_mut());
            gc_solution_free(ptr::null_mut());
            gc_string_free(ptr::null_mut());
        }
    }
}
