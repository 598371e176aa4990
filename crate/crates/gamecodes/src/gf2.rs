//! Bit-vector and matrix arithmetic over GF(2).
//!
//! Vectors are fixed-width words of at most 64 coordinates; coordinate 0 is
//! the least significant bit. Matrices follow the bottom-right convention
//! used throughout this crate: row 1 is the bottom row, column 1 is the
//! rightmost column.

use std::fmt;
use thiserror::Error;

/// Widest supported vector; everything packs into one machine word.
pub const MAX_WIDTH: u32 = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("basis is linearly dependent")]
    DependentBasis,
}

/// Errors from the matrix text format.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixParseError {
    #[error("no matrix rows found")]
    Empty,
    #[error("line {line}: invalid character {ch:?}, expected '0' or '1'")]
    BadChar { line: usize, ch: char },
    #[error("line {line}: row has {found} columns, expected {expected}")]
    Ragged {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("matrix exceeds {max} rows or columns", max = MAX_WIDTH)]
    TooLarge,
}

/// Fixed-width vector over GF(2). Doubles as a game position and a codeword.
///
/// Ordering is by integer value (widths being equal), which is what greedy
/// scans and deterministic basis extraction rely on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    width: u32,
    bits: u64,
}

impl BitVec {
    /// # Panics
    /// If `width` is 0 or exceeds [`MAX_WIDTH`], or `bits` has a set bit at
    /// or above `width`.
    #[must_use]
    pub fn new(width: u32, bits: u64) -> Self {
        assert!((1..=MAX_WIDTH).contains(&width), "width out of range");
        assert!(
            width == 64 || bits < (1u64 << width),
            "value {bits} does not fit in {width} bits"
        );
        BitVec { width, bits }
    }

    #[must_use]
    pub fn zero(width: u32) -> Self {
        BitVec::new(width, 0)
    }

    /// Unit vector with a single 1 at `coord`.
    #[must_use]
    pub fn unit(width: u32, coord: u32) -> Self {
        assert!(coord < width, "coordinate out of range");
        BitVec::new(width, 1u64 << coord)
    }

    #[must_use]
    pub fn width(self) -> u32 {
        self.width
    }

    #[must_use]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[must_use]
    pub fn get(self, coord: u32) -> bool {
        assert!(coord < self.width, "coordinate out of range");
        (self.bits >> coord) & 1 == 1
    }

    /// # Panics
    /// On width mismatch.
    #[must_use]
    pub fn xor(self, other: BitVec) -> BitVec {
        assert_eq!(self.width, other.width, "width mismatch");
        BitVec {
            width: self.width,
            bits: self.bits ^ other.bits,
        }
    }

    /// Number of 1-coordinates.
    #[must_use]
    pub fn weight(self) -> u32 {
        self.bits.count_ones()
    }

    /// Parse from a binary string, most significant coordinate first.
    /// The width is the string length.
    pub fn parse_binary(s: &str) -> Result<BitVec, String> {
        let s = s.trim();
        if s.is_empty() {
            return Err("empty binary string".into());
        }
        if s.len() > MAX_WIDTH as usize {
            return Err(format!("binary string longer than {MAX_WIDTH} bits"));
        }
        let mut bits = 0u64;
        for ch in s.chars() {
            bits <<= 1;
            match ch {
                '0' => {}
                '1' => bits |= 1,
                _ => return Err(format!("invalid character {ch:?} in binary string")),
            }
        }
        Ok(BitVec::new(s.len() as u32, bits))
    }
}

impl fmt::Display for BitVec {
    /// Most significant coordinate first, zero-padded to the width.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in (0..self.width).rev() {
            f.write_str(if (self.bits >> i) & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self}={})", self.bits)
    }
}

/// Hamming distance: the weight of the XOR.
///
/// # Panics
/// On width mismatch.
#[must_use]
pub fn hamming(a: BitVec, b: BitVec) -> u32 {
    a.xor(b).weight()
}

/// Least nonnegative integer not present in `values`.
#[must_use]
pub fn mex(values: &[u64]) -> u64 {
    // The answer is at most len(values), so one boolean slot per candidate.
    let n = values.len();
    let mut present = vec![false; n + 1];
    for &v in values {
        if (v as usize) <= n {
            present[v as usize] = true;
        }
    }
    present.iter().position(|&p| !p).unwrap() as u64
}

/// Binomial coefficient, exact in u128 (n at most 64 here, so no overflow).
#[must_use]
pub fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// Rank of a list of equal-width words, by elimination.
#[must_use]
pub fn rank_words(words: &[u64]) -> usize {
    let mut pivots: Vec<u64> = Vec::new();
    for &w in words {
        let mut v = w;
        for &p in &pivots {
            // Reduce against the pivot with the highest set bit of p.
            if v & (1u64 << (63 - p.leading_zeros())) != 0 {
                v ^= p;
            }
        }
        if v != 0 {
            pivots.push(v);
            // Keep pivots sorted by leading bit, descending, so reduction
            // above stays a single pass.
            pivots.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    pivots.len()
}

/// Deterministic basis extraction: scan the words in ascending integer
/// order and keep each one that increases the rank.
///
/// # Panics
/// If the words do not all share one width.
#[must_use]
pub fn basis_of(words: &[BitVec]) -> Vec<BitVec> {
    if words.is_empty() {
        return Vec::new();
    }
    let width = words[0].width();
    let mut sorted: Vec<BitVec> = words.to_vec();
    for w in &sorted {
        assert_eq!(w.width(), width, "width mismatch in basis_of");
    }
    sorted.sort_unstable();
    sorted.dedup();

    let mut basis = Vec::new();
    let mut pivots: Vec<u64> = Vec::new();
    for w in sorted {
        let mut v = w.bits();
        for &p in &pivots {
            if v & (1u64 << (63 - p.leading_zeros())) != 0 {
                v ^= p;
            }
        }
        if v != 0 {
            basis.push(w);
            pivots.push(v);
            pivots.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis
}

/// Enumerate the span of an independent set of vectors: element `k` is the
/// XOR of `basis[j]` over the set bits `j` of `k`. The empty basis spans
/// the zero vector alone, hence the explicit `width`.
///
/// Returns `DependentBasis` if the vectors are not independent.
pub fn span_enumerate(width: u32, basis: &[BitVec]) -> Result<Vec<BitVec>, Gf2Error> {
    for b in basis {
        assert_eq!(b.width(), width, "width mismatch in span_enumerate");
    }
    let raw: Vec<u64> = basis.iter().map(|b| b.bits()).collect();
    if rank_words(&raw) != basis.len() {
        return Err(Gf2Error::DependentBasis);
    }
    assert!(basis.len() < 63, "span too large to enumerate");
    let size = 1u64 << basis.len();
    let mut out = Vec::with_capacity(size as usize);
    for k in 0..size {
        let mut acc = 0u64;
        for (j, &b) in raw.iter().enumerate() {
            if (k >> j) & 1 == 1 {
                acc ^= b;
            }
        }
        out.push(BitVec::new(width, acc));
    }
    Ok(out)
}

/// Dense matrix over GF(2), at most 64x64.
///
/// Stored bottom-first: `rows[i-1]` is row `i` counted from the bottom, and
/// bit `j-1` of a row word is column `j` counted from the right.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    n_rows: usize,
    n_cols: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Gf2Matrix({}x{}, rows_bottom_first={:?})",
            self.n_rows, self.n_cols, self.rows
        )
    }
}

impl Gf2Matrix {
    /// Build from bottom-first row words.
    ///
    /// # Panics
    /// On dimension or value range violations.
    #[must_use]
    pub fn from_rows_bottom_first(n_cols: usize, rows: Vec<u64>) -> Self {
        assert!(n_cols >= 1 && n_cols <= MAX_WIDTH as usize, "bad column count");
        assert!(!rows.is_empty() && rows.len() <= MAX_WIDTH as usize, "bad row count");
        for &r in &rows {
            assert!(
                n_cols == 64 || r < (1u64 << n_cols),
                "row value exceeds column count"
            );
        }
        Gf2Matrix {
            n_rows: rows.len(),
            n_cols,
            rows,
        }
    }

    #[must_use]
    pub fn identity(n: usize) -> Self {
        Gf2Matrix::from_rows_bottom_first(n, (0..n).map(|i| 1u64 << i).collect())
    }

    #[must_use]
    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    #[must_use]
    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    /// Entry at row `i` (from the bottom) and column `j` (from the right),
    /// both 1-based.
    #[must_use]
    pub fn entry(&self, i: usize, j: usize) -> bool {
        assert!(i >= 1 && i <= self.n_rows, "row out of range");
        assert!(j >= 1 && j <= self.n_cols, "column out of range");
        (self.rows[i - 1] >> (j - 1)) & 1 == 1
    }

    /// Row `i` counted from the bottom, 1-based, as a word with bit
    /// `j - 1` holding column `j`.
    #[must_use]
    pub fn row_word(&self, i: usize) -> u64 {
        assert!(i >= 1 && i <= self.n_rows, "row out of range");
        self.rows[i - 1]
    }

    /// Column `j` counted from the right, as a vector with coordinate
    /// `i - 1` holding the entry of row `i`.
    #[must_use]
    pub fn column(&self, j: usize) -> BitVec {
        assert!(j >= 1 && j <= self.n_cols, "column out of range");
        let mut bits = 0u64;
        for (i, &row) in self.rows.iter().enumerate() {
            if (row >> (j - 1)) & 1 == 1 {
                bits |= 1u64 << i;
            }
        }
        BitVec::new(self.n_rows as u32, bits)
    }

    /// Dimension of the column span (= row rank).
    #[must_use]
    pub fn rank(&self) -> usize {
        rank_words(&self.rows)
    }

    /// Parse the text format: one row per line of '0'/'1' characters, top
    /// row first, leftmost character in the leftmost (highest) column.
    /// Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Gf2Matrix, MatrixParseError> {
        let mut rows_top_first: Vec<u64> = Vec::new();
        let mut n_cols = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if content.len() > MAX_WIDTH as usize {
                return Err(MatrixParseError::TooLarge);
            }
            if n_cols == 0 {
                n_cols = content.len();
            } else if content.len() != n_cols {
                return Err(MatrixParseError::Ragged {
                    line,
                    expected: n_cols,
                    found: content.len(),
                });
            }
            let mut word = 0u64;
            // Leftmost character is column n_cols, i.e. bit n_cols - 1.
            for (c, ch) in content.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => word |= 1u64 << (n_cols - 1 - c),
                    _ => return Err(MatrixParseError::BadChar { line, ch }),
                }
            }
            rows_top_first.push(word);
        }
        if rows_top_first.is_empty() {
            return Err(MatrixParseError::Empty);
        }
        if rows_top_first.len() > MAX_WIDTH as usize {
            return Err(MatrixParseError::TooLarge);
        }
        rows_top_first.reverse();
        Ok(Gf2Matrix::from_rows_bottom_first(n_cols, rows_top_first))
    }

    /// Inverse of [`Gf2Matrix::parse`], up to comments and blank lines.
    #[must_use]
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for &row in self.rows.iter().rev() {
            for j in (0..self.n_cols).rev() {
                out.push(if (row >> j) & 1 == 1 { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }
}
