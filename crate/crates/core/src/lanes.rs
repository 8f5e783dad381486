//! Fixed-width packed words used by the hot enumeration loops.
//!
//! A `Lane` holds a whole codeword in registers. `with_lane!` picks the
//! narrowest lane type that fits a given length.

use crate::gf2::BitVec;

pub(crate) trait Lane: Copy + Send + Sync + Eq + Ord + std::fmt::Debug + 'static {
    const ZERO: Self;
    const BITS: usize;
    fn xor(self, other: Self) -> Self;
    fn count(self) -> u32;
    fn from_bitvec(v: &BitVec) -> Self;
    fn to_bitvec(self, len: usize) -> BitVec;
}

impl Lane for u64 {
    const ZERO: Self = 0;
    const BITS: usize = 64;
    #[inline(always)]
    fn xor(self, other: Self) -> Self {
        self ^ other
    }
    #[inline(always)]
    fn count(self) -> u32 {
        self.count_ones()
    }
    fn from_bitvec(v: &BitVec) -> Self {
        v.words().first().copied().unwrap_or(0)
    }
    fn to_bitvec(self, len: usize) -> BitVec {
        BitVec::from_words(len, vec![self])
    }
}

impl Lane for u128 {
    const ZERO: Self = 0;
    const BITS: usize = 128;
    #[inline(always)]
    fn xor(self, other: Self) -> Self {
        self ^ other
    }
    #[inline(always)]
    fn count(self) -> u32 {
        self.count_ones()
    }
    fn from_bitvec(v: &BitVec) -> Self {
        let w = v.words();
        let lo = w.first().copied().unwrap_or(0) as u128;
        let hi = w.get(1).copied().unwrap_or(0) as u128;
        lo | (hi << 64)
    }
    fn to_bitvec(self, len: usize) -> BitVec {
        BitVec::from_words(len, vec![self as u64, (self >> 64) as u64])
    }
}

// Ord on arrays compares word 0 first, which is not numeric order; callers
// only rely on it being a fixed total order.
impl<const W: usize> Lane for [u64; W] {
    const ZERO: Self = [0; W];
    const BITS: usize = 64 * W;
    #[inline(always)]
    fn xor(self, other: Self) -> Self {
        let mut out = self;
        for i in 0..W {
            out[i] ^= other[i];
        }
        out
    }
    #[inline(always)]
    fn count(self) -> u32 {
        self.iter().map(|w| w.count_ones()).sum()
    }
    fn from_bitvec(v: &BitVec) -> Self {
        let mut out = [0; W];
        for (o, w) in out.iter_mut().zip(v.words()) {
            *o = *w;
        }
        out
    }
    fn to_bitvec(self, len: usize) -> BitVec {
        BitVec::from_words(len, self.to_vec())
    }
}

/// Largest length the lane dispatch supports.
pub(crate) const MAX_LANE_BITS: usize = 64 * 64;

/// Runs `$body` with the type alias `$lane` bound to a lane wide enough for
/// `$n` bits. Evaluates to `Err(Error::LengthTooLarge)` when none is.
macro_rules! with_lane {
    ($n:expr, $lane:ident => $body:expr) => {{
        let n: usize = $n;
        if n <= 64 {
            type $lane = u64;
            Ok($body)
        } else if n <= 128 {
            type $lane = u128;
            Ok($body)
        } else if n <= 256 {
            type $lane = [u64; 4];
            Ok($body)
        } else if n <= 512 {
            type $lane = [u64; 8];
            Ok($body)
        } else if n <= 1024 {
            type $lane = [u64; 16];
            Ok($body)
        } else if n <= $crate::lanes::MAX_LANE_BITS {
            type $lane = [u64; 64];
            Ok($body)
        } else {
            Err($crate::error::Error::LengthTooLarge(n))
        }
    }};
}
pub(crate) use with_lane;

pub(crate) fn pack<L: Lane>(rows: &[BitVec]) -> Vec<L> {
    debug_assert!(rows.iter().all(|r| r.len() <= L::BITS));
    rows.iter().map(L::from_bitvec).collect()
}
