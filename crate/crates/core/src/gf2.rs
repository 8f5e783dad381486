//! Bit-packed vectors and matrices over F2.
//!
//! Coordinates are 0-based inside this crate. Everything that talks to the
//! outside world (support lists, file formats, reports) uses 1-based
//! coordinates and converts through [`BitVec::from_support`] and
//! [`BitVec::support`].

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A vector in F2^n, packed into 64-bit words.
///
/// Bits past `len` are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self {
            len,
            words: vec![u64::MAX; words_for(len)],
        };
        v.clear_padding();
        v
    }

    /// Builds a vector from 0-based coordinates.
    pub fn from_indices(len: usize, indices: &[usize]) -> Result<Self> {
        let mut v = Self::zeros(len);
        for &i in indices {
            if i >= len {
                return Err(Error::CoordinateOutOfRange { coord: i + 1, len });
            }
            v.set(i, true);
        }
        Ok(v)
    }

    /// Builds a vector from 1-based coordinates. Duplicates are rejected.
    pub fn from_support(len: usize, support: &[usize]) -> Result<Self> {
        let mut v = Self::zeros(len);
        for &c in support {
            if c == 0 || c > len {
                return Err(Error::CoordinateOutOfRange { coord: c, len });
            }
            if v.get(c - 1) {
                return Err(Error::DuplicateCoordinate(c));
            }
            v.set(c - 1, true);
        }
        Ok(v)
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Parses a string of `0` and `1` characters, coordinate 1 first.
    pub fn parse_binary(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                c => return Err(Error::Parse(format!("invalid binary digit {c:?}"))),
            }
        }
        Ok(Self::from_bools(&bits))
    }

    pub(crate) fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(words_for(len), 0);
        let mut v = Self { len, words };
        v.clear_padding();
        v
    }

    fn clear_padding(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, bit: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if bit {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// 0-based index of the first set coordinate.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD_BITS + w.trailing_zeros() as usize)
    }

    /// 0-based indices of the set coordinates.
    pub fn ones_indices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                out.push(wi * WORD_BITS + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }

    /// 1-based support, as printed in the literature.
    pub fn support(&self) -> Vec<usize> {
        self.ones_indices().into_iter().map(|i| i + 1).collect()
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Parity of the standard inner product, without a length check.
    #[inline]
    pub(crate) fn dot(&self, other: &BitVec) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Vector restricted to the given 0-based coordinates, in that order.
    pub fn select(&self, cols: &[usize]) -> BitVec {
        let mut out = BitVec::zeros(cols.len());
        for (j, &c) in cols.iter().enumerate() {
            if self.get(c) {
                out.set(j, true);
            }
        }
        out
    }

    /// Concatenation `self | other`.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        for i in self.ones_indices() {
            out.set(i, true);
        }
        for i in other.ones_indices() {
            out.set(self.len + i, true);
        }
        out
    }

    /// Lexicographic comparison as bit strings with coordinate 1 most
    /// significant.
    pub fn lex_cmp(&self, other: &BitVec) -> Ordering {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let bit = diff.trailing_zeros();
                return if (a >> bit) & 1 == 1 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
        }
        Ordering::Equal
    }

    pub fn to_binary_string(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({})", self.to_binary_string())
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_binary_string())
    }
}

/// Standard inner product over F2.
pub fn inner(u: &BitVec, v: &BitVec) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            expected: u.len(),
            found: v.len(),
        });
    }
    Ok(u.dot(v))
}

/// A matrix over F2 stored as a list of rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMat {
    cols: usize,
    rows: Vec<BitVec>,
}

impl BitMat {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self { cols, rows })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut r = BitVec::zeros(n);
                r.set(i, true);
                r
            })
            .collect();
        Self { cols: n, rows }
    }

    /// Parses rows of `0`/`1` characters; blank lines are skipped.
    pub fn parse_rows(text: &str) -> Result<Self> {
        let rows: Vec<BitVec> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| BitVec::parse_binary(&l.replace([' ', '\t'], "")))
            .collect::<Result<_>>()?;
        let cols = rows.first().map_or(0, BitVec::len);
        Self::from_rows(cols, rows)
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn push_row(&mut self, row: BitVec) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                found: row.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn transpose(&self) -> BitMat {
        let mut rows = vec![BitVec::zeros(self.rows.len()); self.cols];
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.ones_indices() {
                rows[c].set(r, true);
            }
        }
        BitMat {
            cols: self.rows.len(),
            rows,
        }
    }

    /// `[self | other]`, row by row.
    pub fn hconcat(&self, other: &BitMat) -> Result<BitMat> {
        if self.nrows() != other.nrows() {
            return Err(Error::LengthMismatch {
                expected: self.nrows(),
                found: other.nrows(),
            });
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.concat(b))
            .collect();
        Ok(BitMat {
            cols: self.cols + other.cols,
            rows,
        })
    }

    /// Columns permuted so that new column `j` is old column `perm[j]`.
    pub fn permute_columns(&self, perm: &[usize]) -> BitMat {
        BitMat {
            cols: perm.len(),
            rows: self.rows.iter().map(|r| r.select(perm)).collect(),
        }
    }

    /// Row vector times matrix: the XOR of the rows selected by `msg`.
    pub fn combine(&self, msg: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.cols);
        for i in msg.ones_indices() {
            out.xor_assign(&self.rows[i]);
        }
        out
    }

    /// Matrix times column vector: bit `r` is `row_r . v`.
    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            if row.dot(v) {
                out.set(r, true);
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            s.push_str(&r.to_binary_string());
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for BitMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMat {}x{} [", self.nrows(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

/// Reduced row-echelon form together with its rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: BitMat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Row-reduces `m`, dropping zero rows. Pivot `i` is the first set column of
/// row `i`, and each pivot column is zero in every other row.
pub fn rref(m: &BitMat) -> Rref {
    let mut rows: Vec<BitVec> = m.rows.clone();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    Rref {
        matrix: BitMat { cols: m.cols, rows },
        rank,
        pivots,
    }
}

pub fn rank(m: &BitMat) -> usize {
    rref(m).rank
}

/// Basis of `{x : m x^T = 0}`; it has `cols - rank(m)` rows.
pub fn kernel(m: &BitMat) -> BitMat {
    let Rref { matrix, pivots, .. } = rref(m);
    let n = m.cols;
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::with_capacity(n - pivots.len());
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = BitVec::zeros(n);
        v.set(free, true);
        for (row, &p) in matrix.rows.iter().zip(&pivots) {
            if row.get(free) {
                v.set(p, true);
            }
        }
        basis.push(v);
    }
    BitMat {
        cols: n,
        rows: basis,
    }
}

/// Reduces `v` against a matrix already in RREF, clearing every pivot
/// coordinate. The result is zero iff `v` lies in the row space, and it is
/// the lexicographically smallest member of the coset `v + rowspace`.
pub fn reduce(code_rref: &BitMat, v: &BitVec) -> BitVec {
    let mut out = v.clone();
    for row in &code_rref.rows {
        if let Some(p) = row.first_one() {
            if out.get(p) {
                out.xor_assign(row);
            }
        }
    }
    out
}

/// Row-space membership against a matrix in RREF.
pub fn member(code_rref: &BitMat, v: &BitVec) -> Result<bool> {
    if v.len() != code_rref.cols {
        return Err(Error::LengthMismatch {
            expected: code_rref.cols,
            found: v.len(),
        });
    }
    Ok(reduce(code_rref, v).is_zero())
}

/// True when the row spaces of `a` and `b` coincide.
pub fn same_row_space(a: &BitMat, b: &BitMat) -> bool {
    a.ncols() == b.ncols() && rref(a).matrix == rref(b).matrix
}
