//! Matrix-defined lexicographic orderings, the greedy minimum-distance
//! scan, explicit distance-threshold graphs with their g-tables, and
//! greedy codes over a game's zero-set.

use std::collections::HashMap;

use crate::codes::Code;
use crate::gamegraph::GameGraph;
use crate::gf2::{binomial, hamming, mex, span_enumerate, BitVec, Gf2Error, Gf2Matrix};
use thiserror::Error;

/// Vertex-count cap for explicit graph construction, as log2.
pub const DEFAULT_M_CAP: u32 = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrderingError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("m = {m} out of range 1..={n}")]
    BadM { m: u32, n: u32 },
    #[error("columns 1..={m} are linearly dependent")]
    DependentColumns { m: u32 },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LexigraphError {
    #[error("2^{m} vertices exceed the cap of 2^{cap}; raise the cap to proceed")]
    ScaleCap { m: u32, cap: u32 },
}

fn short_hash(parts: &[&[u8]]) -> String {
    use sha2::{Digest, Sha256};
    let mut h = Sha256::new();
    for p in parts {
        h.update(p);
        h.update([0xff]);
    }
    let digest = h.finalize();
    digest.iter().take(4).map(|b| format!("{b:02x}")).collect()
}

/// A matrix-defined ordering k -> A_k of 2^m vectors: A_k is the XOR of
/// the right-counted columns j of W selected by the set bits j-1 of k.
///
/// The bottom-up row selection makes the m x m submatrix on (rows,
/// columns 1..=m) invertible, which is what forces k -> A_k injective.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingSpec {
    w: Gf2Matrix,
    m: u32,
    rows: Vec<usize>,
    cols: Vec<u64>,
    id: String,
}

impl OrderingSpec {
    #[must_use]
    pub fn matrix(&self) -> &Gf2Matrix {
        &self.w
    }

    #[must_use]
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Selected row indices, 1-based from the bottom, ascending.
    #[must_use]
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Width of each A_k (the matrix height).
    #[must_use]
    pub fn width(&self) -> u32 {
        self.w.n_rows() as u32
    }

    /// Deterministic identifier derived from the matrix and m.
    #[must_use]
    pub fn id(&self) -> &str {
        &self.id
    }

    /// # Panics
    /// If `k >= 2^m`.
    #[must_use]
    pub fn vector(&self, k: u64) -> BitVec {
        assert!(self.m == 64 || k < (1u64 << self.m), "index out of range");
        let mut bits = 0u64;
        let mut rest = k;
        while rest != 0 {
            let b = rest.trailing_zeros();
            bits ^= self.cols[b as usize];
            rest &= rest - 1;
        }
        BitVec::new(self.width(), bits)
    }

    /// All 2^m vectors in index order.
    ///
    /// # Panics
    /// If m > 32: the full enumeration would not fit in memory anyway.
    #[must_use]
    pub fn vectors(&self) -> Vec<BitVec> {
        assert!(self.m <= 32, "ordering too large to enumerate");
        (0..1u64 << self.m).map(|k| self.vector(k)).collect()
    }
}

/// Build the ordering for `W` restricted to columns 1..=m, selecting rows
/// bottom-up greedily until the restricted submatrix reaches full rank.
/// For invertible square W with m = n this keeps every row and the
/// ordering is a bijection onto the whole space.
pub fn make_ordering(w: Gf2Matrix, m: u32) -> Result<OrderingSpec, OrderingError> {
    if w.n_rows() != w.n_cols() {
        return Err(OrderingError::NotSquare {
            rows: w.n_rows(),
            cols: w.n_cols(),
        });
    }
    let n = w.n_cols() as u32;
    if m < 1 || m > n {
        return Err(OrderingError::BadM { m, n });
    }
    let mask = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut pivots: Vec<u64> = Vec::new();
    let mut rows: Vec<usize> = Vec::new();
    for i in 1..=n as usize {
        let mut v = w.row_word(i) & mask;
        for &p in &pivots {
            if v & (1u64 << (63 - p.leading_zeros())) != 0 {
                v ^= p;
            }
        }
        if v != 0 {
            pivots.push(v);
            pivots.sort_unstable_by(|a, b| b.cmp(a));
            rows.push(i);
            if rows.len() == m as usize {
                break;
            }
        }
    }
    if rows.len() < m as usize {
        return Err(OrderingError::DependentColumns { m });
    }
    let cols: Vec<u64> = (1..=m as usize).map(|j| w.column(j).bits()).collect();
    let id = format!(
        "w{n}m{m}-{}",
        short_hash(&[w.serialize().as_bytes(), &m.to_le_bytes()])
    );
    Ok(OrderingSpec { w, m, rows, cols, id })
}

/// Output of a greedy scan: the kept vectors in acceptance order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyResult {
    width: u32,
    selected: Vec<BitVec>,
    d: u32,
    ordering_id: String,
}

impl GreedyResult {
    /// Kept vectors, in the order the scan accepted them.
    #[must_use]
    pub fn selected(&self) -> &[BitVec] {
        &self.selected
    }

    #[must_use]
    pub fn d(&self) -> u32 {
        self.d
    }

    #[must_use]
    pub fn ordering_id(&self) -> &str {
        &self.ordering_id
    }

    #[must_use]
    pub fn width(&self) -> u32 {
        self.width
    }

    #[must_use]
    pub fn to_code(&self) -> Code {
        Code::new(self.width, self.selected.clone())
    }
}

fn greedy_scan(
    width: u32,
    words: impl Iterator<Item = BitVec>,
    d: u32,
    ordering_id: String,
) -> GreedyResult {
    assert!(d >= 1, "distance threshold must be positive");
    let mut selected: Vec<BitVec> = Vec::new();
    for w in words {
        // Newest-first: rejections tend to come from recent neighbors.
        if selected.iter().rev().all(|&s| hamming(s, w) >= d) {
            selected.push(w);
        }
    }
    GreedyResult {
        width,
        selected,
        d,
        ordering_id,
    }
}

/// Scan the ordering's vectors in index order, keeping each vector at
/// Hamming distance >= d from everything kept so far. The zero vector is
/// always kept first.
#[must_use]
pub fn greedy(ordering: &OrderingSpec, d: u32) -> GreedyResult {
    assert!(ordering.m() <= 32, "ordering too large to enumerate");
    greedy_scan(
        ordering.width(),
        (0..1u64 << ordering.m()).map(|k| ordering.vector(k)),
        d,
        ordering.id().to_string(),
    )
}

/// Greedy scan over an explicit sequence, in the given order.
///
/// # Panics
/// If `words` is empty or widths are mixed.
#[must_use]
pub fn greedy_sequence(words: &[BitVec], d: u32) -> GreedyResult {
    assert!(!words.is_empty(), "empty sequence");
    let width = words[0].width();
    let bytes: Vec<u8> = words.iter().flat_map(|w| w.bits().to_le_bytes()).collect();
    let id = format!("seq{width}-{}", short_hash(&[&bytes, &d.to_le_bytes()]));
    greedy_scan(width, words.iter().copied(), d, id)
}

/// Greedy scan over a word set in ascending integer value instead of
/// index order.
#[must_use]
pub fn greedy_value_ordered(span: &[BitVec], d: u32) -> GreedyResult {
    let mut sorted = span.to_vec();
    sorted.sort_unstable();
    let mut result = greedy_sequence(&sorted, d);
    result.ordering_id.insert_str(0, "val-");
    result
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LexiAnncodeError {
    #[error("empty basis")]
    EmptyBasis,
    #[error("basis is linearly dependent")]
    DependentBasis,
}

/// Greedy code over the span of `basis`, enumerated in the index order
/// induced by the basis (element k = XOR of basis vectors at k's set
/// bits). Applied to a zero-set basis this is the greedy code over that
/// game's code.
pub fn lexi_anncode(basis: &[BitVec], d: u32) -> Result<GreedyResult, LexiAnncodeError> {
    if basis.is_empty() {
        return Err(LexiAnncodeError::EmptyBasis);
    }
    let width = basis[0].width();
    let words = span_enumerate(width, basis).map_err(|e| match e {
        Gf2Error::DependentBasis => LexiAnncodeError::DependentBasis,
    })?;
    let bytes: Vec<u8> = basis.iter().flat_map(|w| w.bits().to_le_bytes()).collect();
    let id = format!("span{width}-{}", short_hash(&[&bytes]));
    Ok(greedy_scan(width, words.into_iter(), d, id))
}

/// Which "earlier" relation defines the edges of the explicit graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeOrder {
    /// Edges point to lower ordering index.
    Index,
    /// Edges point to lower integer value (the exercise variant).
    Value,
}

/// Explicit acyclic digraph on an ordering's vectors: an edge runs from
/// each vector to every earlier vector within Hamming distance < d, and g
/// is the resulting mex table.
pub struct Lexigraph {
    graph: GameGraph,
    vectors: Vec<BitVec>,
    g: Vec<u64>,
    d: u32,
    order: EdgeOrder,
}

impl Lexigraph {
    #[must_use]
    pub fn graph(&self) -> &GameGraph {
        &self.graph
    }

    /// Vertex v's vector, in the order the graph was built on.
    #[must_use]
    pub fn vector(&self, v: usize) -> BitVec {
        self.vectors[v]
    }

    #[must_use]
    pub fn vectors(&self) -> &[BitVec] {
        &self.vectors
    }

    #[must_use]
    pub fn g(&self) -> &[u64] {
        &self.g
    }

    #[must_use]
    pub fn d(&self) -> u32 {
        self.d
    }

    #[must_use]
    pub fn order(&self) -> EdgeOrder {
        self.order
    }

    /// (vector, g) pairs for every vertex.
    #[must_use]
    pub fn value_entries(&self) -> Vec<(BitVec, u64)> {
        self.vectors
            .iter()
            .zip(&self.g)
            .map(|(&w, &v)| (w, v))
            .collect()
    }

    /// The vectors where g vanishes.
    #[must_use]
    pub fn zero_code(&self) -> Code {
        let words: Vec<BitVec> = self
            .vectors
            .iter()
            .zip(&self.g)
            .filter(|&(_, &v)| v == 0)
            .map(|(&w, _)| w)
            .collect();
        Code::new(self.vectors[0].width(), words)
    }
}

/// All nonzero masks of weight <= w over n bits, or `None` when there are
/// more than `budget` of them and a pairwise scan is cheaper.
fn masks_up_to_weight(n: u32, w: u32, budget: u128) -> Option<Vec<u64>> {
    let w = w.min(n);
    if w == 0 {
        return Some(Vec::new());
    }
    let count: u128 = (1..=w).map(|i| binomial(n, i)).sum();
    if count > budget {
        return None;
    }
    fn go(n: u32, maxw: u32, start: u32, acc: u64, out: &mut Vec<u64>) {
        for b in start..n {
            let next = acc | 1u64 << b;
            out.push(next);
            if next.count_ones() < maxw {
                go(n, maxw, b + 1, next, out);
            }
        }
    }
    let mut out = Vec::with_capacity(count as usize);
    go(n, w, 0, 0, &mut out);
    Some(out)
}

fn build_from_vectors(vectors: Vec<BitVec>, d: u32, order: EdgeOrder, masks: Option<Vec<u64>>) -> Lexigraph {
    let index_of: HashMap<u64, u32> = vectors
        .iter()
        .enumerate()
        .map(|(i, w)| (w.bits(), i as u32))
        .collect();
    let graph = GameGraph::build(vectors.len(), |k, out| {
        let a = vectors[k as usize];
        match &masks {
            Some(ms) => {
                let mut targets: Vec<u32> = ms
                    .iter()
                    .filter_map(|&e| index_of.get(&(a.bits() ^ e)).copied())
                    .filter(|&j| j < k)
                    .collect();
                targets.sort_unstable();
                out.extend(targets);
            }
            None => {
                for j in 0..k {
                    if hamming(vectors[j as usize], a) < d {
                        out.push(j);
                    }
                }
            }
        }
    });
    let mut g = vec![0u64; vectors.len()];
    for k in 0..vectors.len() {
        let vals: Vec<u64> = graph.followers(k).iter().map(|&j| g[j as usize]).collect();
        g[k] = mex(&vals);
    }
    Lexigraph {
        graph,
        vectors,
        g,
        d,
        order,
    }
}

/// Build the explicit graph for an ordering. Edges always point from
/// later to earlier, so the graph is acyclic and g is computed in one
/// ascending pass.
pub fn build_lexigraph(
    ordering: &OrderingSpec,
    d: u32,
    order: EdgeOrder,
    cap: u32,
) -> Result<Lexigraph, LexigraphError> {
    assert!(d >= 1, "distance threshold must be positive");
    let cap = cap.min(30);
    if ordering.m() > cap {
        return Err(LexigraphError::ScaleCap {
            m: ordering.m(),
            cap,
        });
    }
    let mut vectors = ordering.vectors();
    if order == EdgeOrder::Value {
        vectors.sort_unstable();
    }
    // Below the mask budget, followers come from XORing small-weight
    // masks; past it, a pairwise scan over earlier vertices wins.
    let masks = masks_up_to_weight(ordering.width(), d - 1, vectors.len() as u128);
    Ok(build_from_vectors(vectors, d, order, masks))
}
