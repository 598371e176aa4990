//! Code analytics: linearity, minimum distance, bases, coset structure of
//! solved value tables, and extraction of codes from games.

use crate::anngame::{AnnError, AnnGraph};
use crate::gf2::{basis_of, binomial, hamming, rank_words, span_enumerate, BitVec};
use crate::groundgraph::GroundGraph;
use crate::solver::{classify_pnd, GammaTable, Outcome};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodeParseError {
    #[error("no codewords found")]
    Empty,
    #[error("line {line}: {msg}")]
    BadWord { line: usize, msg: String },
    #[error("line {line}: word has {found} bits, expected {expected}")]
    Ragged {
        line: usize,
        expected: u32,
        found: u32,
    },
}

/// Failures of the value-table structure checks, by clause.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("no finite values to analyze")]
    EmptyTable,
    #[error("finite values are not exactly 0..=max with max+1 a power of two (max = {max})")]
    NotOnto { max: u64 },
    #[error("zero-set is not a linear subspace")]
    KernelNotLinear,
    #[error("value class {class} is not a coset of the zero-set")]
    CosetMismatch { class: u64 },
    #[error("value classes are not equinumerous ({sizes:?})")]
    UnequalClassSizes { sizes: Vec<usize> },
    #[error("span dimension {dim_vf} differs from kernel dim {m} + value bits {t}")]
    DimensionMismatch { dim_vf: usize, m: usize, t: u32 },
    #[error("2^{t} - 1 exceeds the out-degree bound {bound}")]
    ValueBoundExceeded { t: u32, bound: u128 },
}

/// A set of equal-width codewords with derived metadata, computed eagerly.
///
/// Linearity is decided by a rank argument (the zero word present and the
/// word count equal to 2^rank forces XOR closure); the minimum-weight
/// shortcut for the distance is applied only after that holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Code {
    n: u32,
    words: Vec<BitVec>,
    basis: Vec<BitVec>,
    linear: bool,
    min_distance: Option<u32>,
}

impl Code {
    /// # Panics
    /// If a word's width differs from `n`.
    #[must_use]
    pub fn new(n: u32, words: Vec<BitVec>) -> Code {
        let mut words = words;
        for w in &words {
            assert_eq!(w.width(), n, "codeword width mismatch");
        }
        words.sort_unstable();
        words.dedup();
        let basis = basis_of(&words);
        let linear = !words.is_empty() && words.len() == 1usize << basis.len();
        let min_distance = if words.len() < 2 {
            None
        } else if linear {
            words.iter().map(|w| w.weight()).filter(|&w| w > 0).min()
        } else {
            let mut best = u32::MAX;
            for (i, &a) in words.iter().enumerate() {
                for &b in &words[i + 1..] {
                    best = best.min(hamming(a, b));
                }
            }
            Some(best)
        };
        Code {
            n,
            words,
            basis,
            linear,
            min_distance,
        }
    }

    pub fn from_span(width: u32, basis: &[BitVec]) -> Result<Code, crate::gf2::Gf2Error> {
        Ok(Code::new(width, span_enumerate(width, basis)?))
    }

    #[must_use]
    pub fn length(&self) -> u32 {
        self.n
    }

    /// Codewords in ascending integer order.
    #[must_use]
    pub fn words(&self) -> &[BitVec] {
        &self.words
    }

    #[must_use]
    pub fn size(&self) -> usize {
        self.words.len()
    }

    #[must_use]
    pub fn is_linear(&self) -> bool {
        self.linear
    }

    /// Dimension of the code when linear.
    #[must_use]
    pub fn dimension(&self) -> Option<usize> {
        if self.linear {
            Some(self.basis.len())
        } else {
            None
        }
    }

    /// Dimension of the linear span, defined for any word set.
    #[must_use]
    pub fn span_dimension(&self) -> usize {
        self.basis.len()
    }

    #[must_use]
    pub fn basis(&self) -> &[BitVec] {
        &self.basis
    }

    /// Least distance between distinct codewords; `None` below 2 words.
    #[must_use]
    pub fn min_distance(&self) -> Option<u32> {
        self.min_distance
    }

    #[must_use]
    pub fn contains(&self, w: BitVec) -> bool {
        self.words.binary_search(&w).is_ok()
    }

    /// Parse one codeword per line, most significant bit leftmost; `#`
    /// starts a comment.
    pub fn parse(text: &str) -> Result<Code, CodeParseError> {
        let words = parse_vector_lines(text)?;
        match words.first() {
            None => Err(CodeParseError::Empty),
            Some(first) => Ok(Code::new(first.width(), words)),
        }
    }

    /// One codeword per line, ascending, most significant bit leftmost.
    #[must_use]
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for w in &self.words {
            out.push_str(&w.to_string());
            out.push('\n');
        }
        out
    }
}

/// Parse a code file as an ordered list of vectors: file order and
/// duplicates are kept, so the lines can serve as a basis. Same line
/// grammar as [`Code::parse`], which sorts and dedupes instead.
pub fn parse_vector_lines(text: &str) -> Result<Vec<BitVec>, CodeParseError> {
    let mut words: Vec<BitVec> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let w = BitVec::parse_binary(content)
            .map_err(|msg| CodeParseError::BadWord { line, msg })?;
        if let Some(first) = words.first() {
            if first.width() != w.width() {
                return Err(CodeParseError::Ragged {
                    line,
                    expected: first.width(),
                    found: w.width(),
                });
            }
        }
        words.push(w);
    }
    Ok(words)
}

/// The code cut out by a game: the P-positions of the annihilation game on
/// `ground`, with sinks projected away.
pub fn anncode_of(ground: &GroundGraph, cap: u32) -> Result<Code, AnnError> {
    let ann = AnnGraph::new(ground.clone(), true)?;
    let g = ann.materialize(cap)?;
    let outcomes = classify_pnd(&g);
    let width = ann.width().max(1);
    let words: Vec<BitVec> = outcomes
        .iter()
        .enumerate()
        .filter(|(_, &o)| o == Outcome::P)
        .map(|(u, _)| BitVec::new(width, u as u64))
        .collect();
    Ok(Code::new(width, words))
}

/// Per-value partition of the finite positions, as verified by
/// [`verify_coset_structure`].
#[derive(Debug, PartialEq, Eq)]
pub struct CosetReport {
    t: u32,
    m: usize,
    classes: Vec<Vec<BitVec>>,
}

impl CosetReport {
    /// Number of value bits: finite values are exactly 0..2^t - 1.
    #[must_use]
    pub fn t(&self) -> u32 {
        self.t
    }

    /// Dimension of the zero-set.
    #[must_use]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Class `i` holds the positions of value `i`, ascending.
    #[must_use]
    pub fn classes(&self) -> &[Vec<BitVec>] {
        &self.classes
    }

    #[must_use]
    pub fn kernel(&self) -> &[BitVec] {
        &self.classes[0]
    }
}

/// Verify the homomorphism structure of a solved value table given as
/// (position word, finite value) pairs covering all finite positions:
/// values fill 0..2^t - 1 exactly, the zero-set is linear, every value
/// class is one of its cosets, all classes are equinumerous, and the span
/// of the finite positions has dimension m + t. When `d` is supplied (a
/// distance-threshold graph), also require 2^t - 1 to fit under the
/// out-degree bound sum of C(n, i) for i in 1..d.
pub fn verify_coset_structure(
    entries: &[(BitVec, u64)],
    d: Option<u32>,
) -> Result<CosetReport, StructureError> {
    if entries.is_empty() {
        return Err(StructureError::EmptyTable);
    }
    let n = entries[0].0.width();
    let max = entries.iter().map(|&(_, v)| v).max().unwrap();
    if !(max + 1).is_power_of_two() {
        return Err(StructureError::NotOnto { max });
    }
    let t = (max + 1).trailing_zeros();
    let class_count = (max + 1) as usize;
    let mut classes: Vec<Vec<BitVec>> = vec![Vec::new(); class_count];
    for &(w, v) in entries {
        assert_eq!(w.width(), n, "entry width mismatch");
        classes[v as usize].push(w);
    }
    if classes.iter().any(Vec::is_empty) {
        return Err(StructureError::NotOnto { max });
    }
    for class in &mut classes {
        class.sort_unstable();
        class.dedup();
    }

    let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
    if sizes.iter().any(|&s| s != sizes[0]) {
        return Err(StructureError::UnequalClassSizes { sizes });
    }

    let kernel_words: Vec<u64> = classes[0].iter().map(|w| w.bits()).collect();
    let m = rank_words(&kernel_words);
    if classes[0].len() != 1usize << m || !classes[0].contains(&BitVec::zero(n)) {
        return Err(StructureError::KernelNotLinear);
    }

    for (i, class) in classes.iter().enumerate().skip(1) {
        let rep = class[0];
        let mut shifted: Vec<BitVec> = classes[0].iter().map(|&w| w.xor(rep)).collect();
        shifted.sort_unstable();
        if &shifted != class {
            return Err(StructureError::CosetMismatch { class: i as u64 });
        }
    }

    let all_words: Vec<u64> = entries.iter().map(|&(w, _)| w.bits()).collect();
    let dim_vf = rank_words(&all_words);
    if dim_vf != m + t as usize {
        return Err(StructureError::DimensionMismatch { dim_vf, m, t });
    }

    if let Some(d) = d {
        let bound: u128 = (1..d).map(|i| binomial(n, i)).sum();
        if u128::from(max) > bound {
            return Err(StructureError::ValueBoundExceeded { t, bound });
        }
    }

    Ok(CosetReport { t, m, classes })
}

/// True iff the positions with finite value below 2^k form an XOR-closed
/// set. Expects a table whose vertex index is the position's integer
/// encoding (an annihilation graph's).
#[must_use]
pub fn union_subspace_check(table: &GammaTable, k: u32) -> bool {
    let limit = 1u64 << k;
    let members: Vec<u64> = (0..table.len())
        .filter(|&u| {
            table
                .value(u)
                .finite()
                .is_some_and(|v| v < limit)
        })
        .map(|u| u as u64)
        .collect();
    if !members.contains(&0) {
        return false;
    }
    members.len() == 1usize << rank_words(&members)
}

/// Closed-form structure of the gamma_t family's annihilation graph.
pub struct GammaTFacts {
    pub t: u32,
    /// J = 2^(t-1): the number of x vertices (and of y vertices).
    pub j_count: u64,
    pub max_gamma: u64,
    pub dim_vf: u32,
    /// Dimension of the zero-set: 2^t - t - 1.
    pub m: u32,
}

impl GammaTFacts {
    /// Value of the two-token position {x_i, x_j}, i != j.
    #[must_use]
    pub fn pair_value_xx(&self, i: u64, j: u64) -> u64 {
        assert!(i != j && self.in_range(i) && self.in_range(j));
        0
    }

    /// Value of the two-token position {x_i, y_j}.
    #[must_use]
    pub fn pair_value_xy(&self, i: u64, j: u64) -> u64 {
        assert!(self.in_range(i) && self.in_range(j));
        j
    }

    /// Value of the two-token position {y_i, y_j}, i != j.
    #[must_use]
    pub fn pair_value_yy(&self, i: u64, j: u64) -> u64 {
        assert!(i != j && self.in_range(i) && self.in_range(j));
        i ^ j
    }

    fn in_range(&self, i: u64) -> bool {
        i >= 1 && i <= self.j_count
    }
}

/// # Panics
/// For t < 2 (the t = 1 graph is the degenerate two-vertex chain).
#[must_use]
pub fn gamma_t_closed_form(t: u32) -> GammaTFacts {
    assert!(t >= 2, "closed form applies from t = 2 up");
    let j_count = 1u64 << (t - 1);
    GammaTFacts {
        t,
        j_count,
        max_gamma: (1u64 << t) - 1,
        dim_vf: (2 * j_count - 1) as u32,
        m: (1u32 << t) - t - 1,
    }
}

/// Published zero-set basis of a fixed 10-vertex cyclic groundgraph whose
/// edge list is not reproduced here; each vector occupies 4 of the
/// vertices 1..=10, mapped to coordinates 0..=9.
#[must_use]
pub fn gamma_prime_basis() -> Vec<BitVec> {
    let from_vertices = |vs: [u32; 4]| {
        let mut bits = 0u64;
        for v in vs {
            bits |= 1u64 << (v - 1);
        }
        BitVec::new(10, bits)
    };
    vec![
        from_vertices([1, 2, 9, 10]),
        from_vertices([4, 5, 6, 7]),
        from_vertices([2, 3, 8, 9]),
        from_vertices([3, 4, 7, 8]),
    ]
}
