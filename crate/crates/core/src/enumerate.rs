//! Parallel Gray-code traversal of `offset + span(rows)`.
//!
//! Messages run through the reflected binary Gray code with message bit 0
//! changing fastest. The message space is cut into contiguous blocks by its
//! high bits; each block is an independent Gray walk, so per-block results
//! do not depend on the number of worker threads.

use rayon::prelude::*;

use crate::config::Budget;
use crate::error::Result;
use crate::gf2::BitVec;
use crate::lanes::{pack, with_lane, Lane};

/// Bits enumerated sequentially inside one block.
const BLOCK_BITS: usize = 14;

#[inline]
fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

/// Folds `visit` over every vector of `start + span(rows)`.
pub(crate) fn gray_fold<L, A, I, F, R>(rows: &[L], start: L, init: I, visit: F, reduce: R) -> A
where
    L: Lane,
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, L) + Sync + Send,
    R: Fn(A, A) -> A + Sync + Send,
{
    let k = rows.len();
    assert!(k < 64, "message space too large");
    let low = k.min(BLOCK_BITS);
    let blocks: u64 = 1 << (k - low);
    (0..blocks)
        .into_par_iter()
        .fold(&init, |mut acc, b| {
            let first = b << low;
            let g = gray(first);
            let mut word = start;
            for (j, row) in rows.iter().enumerate() {
                if (g >> j) & 1 == 1 {
                    word = word.xor(*row);
                }
            }
            visit(&mut acc, word);
            for i in first + 1..first + (1u64 << low) {
                word = word.xor(rows[i.trailing_zeros() as usize]);
                visit(&mut acc, word);
            }
            acc
        })
        .reduce(&init, reduce)
}

/// Weight distribution of `offset + span(rows)` (or the span itself).
pub(crate) fn weight_counts(
    n: usize,
    rows: &[BitVec],
    offset: Option<&BitVec>,
    budget: &Budget,
) -> Result<Vec<u64>> {
    budget.check_enum_pow2(rows.len())?;
    with_lane!(n, L => {
        let packed: Vec<L> = pack(rows);
        let start = offset.map_or(L::ZERO, L::from_bitvec);
        gray_fold(
            &packed,
            start,
            || vec![0u64; n + 1],
            |acc, w| acc[w.count() as usize] += 1,
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
    })
}

/// All vectors of weight `w` in `offset + span(rows)`, sorted.
pub(crate) fn vectors_of_weight(
    n: usize,
    rows: &[BitVec],
    offset: Option<&BitVec>,
    w: usize,
    budget: &Budget,
) -> Result<Vec<BitVec>> {
    budget.check_enum_pow2(rows.len())?;
    with_lane!(n, L => {
        let packed: Vec<L> = pack(rows);
        let start = offset.map_or(L::ZERO, L::from_bitvec);
        let mut found = gray_fold(
            &packed,
            start,
            Vec::new,
            |acc: &mut Vec<L>, x| {
                if x.count() as usize == w {
                    acc.push(x);
                }
            },
            |mut a, b| {
                a.extend(b);
                a
            },
        );
        found.sort_unstable();
        found.into_iter().map(|x| x.to_bitvec(n)).collect::<Vec<_>>()
    })
}

/// Minimum weight over `offset + span(rows)`, excluding the zero vector,
/// together with the smallest vector (in lane order) attaining it.
pub(crate) fn min_nonzero(
    n: usize,
    rows: &[BitVec],
    offset: Option<&BitVec>,
    budget: &Budget,
) -> Result<Option<(usize, BitVec)>> {
    budget.check_enum_pow2(rows.len())?;
    with_lane!(n, L => {
        let packed: Vec<L> = pack(rows);
        let start = offset.map_or(L::ZERO, L::from_bitvec);
        let best = gray_fold(
            &packed,
            start,
            || None,
            |acc: &mut Option<(u32, L)>, x| {
                let c = x.count();
                if c > 0 && acc.is_none_or(|(bc, bx)| (c, x) < (bc, bx)) {
                    *acc = Some((c, x));
                }
            },
            |a, b| match (a, b) {
                (Some(x), Some(y)) => Some(x.min(y)),
                (x, None) => x,
                (None, y) => y,
            },
        );
        best.map(|(c, x)| (c as usize, x.to_bitvec(n)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_counts(n: usize, rows: &[BitVec], offset: Option<&BitVec>) -> Vec<u64> {
        let mut counts = vec![0u64; n + 1];
        for m in 0u64..(1 << rows.len()) {
            let mut v = offset.cloned().unwrap_or_else(|| BitVec::zeros(n));
            for (j, r) in rows.iter().enumerate() {
                if (m >> j) & 1 == 1 {
                    v.xor_assign(r);
                }
            }
            counts[v.weight()] += 1;
        }
        counts
    }

    #[test]
    fn gray_walk_covers_the_span() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        for &(n, k) in &[(10usize, 3usize), (70, 16), (130, 17), (40, 0)] {
            let rows: Vec<BitVec> = (0..k)
                .map(|_| BitVec::from_bools(&(0..n).map(|_| rng.random()).collect::<Vec<bool>>()))
                .collect();
            let off = BitVec::from_bools(&(0..n).map(|_| rng.random()).collect::<Vec<bool>>());
            let b = Budget::default();
            assert_eq!(weight_counts(n, &rows, None, &b).unwrap(), naive_counts(n, &rows, None));
            assert_eq!(
                weight_counts(n, &rows, Some(&off), &b).unwrap(),
                naive_counts(n, &rows, Some(&off))
            );
        }
    }

    #[test]
    fn budget_is_enforced() {
        let rows = vec![BitVec::ones(8); 12];
        let b = Budget::new(1 << 11, 1).unwrap();
        assert!(weight_counts(8, &rows, None, &b).is_err());
    }
}
