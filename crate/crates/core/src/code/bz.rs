//! Brouwer–Zimmermann minimum weight with disjoint information sets.
//!
//! The generator is brought to systematic form on a sequence of disjoint
//! column sets. After every message of weight at most `w` has been tried in
//! generator `i` (of rank `r_i` on its set), any codeword not yet seen has
//! weight at least `w + 1 - (k - r_i)` on that set. Summing over the sets
//! gives the lower bound; the best codeword seen is the upper bound.

use rayon::prelude::*;

use crate::code::LinearCode;
use crate::combin::for_each_subset_xor;
use crate::error::{Error, Result};
use crate::gf2::{self, BitMat, BitVec};
use crate::lanes::{pack, with_lane, Lane};

/// Outcome of a Brouwer–Zimmermann run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BzResult {
    /// Certified lower bound on the minimum weight.
    pub lower: usize,
    /// Weight of the lightest codeword found.
    pub upper: usize,
    /// A codeword of weight `upper`.
    pub witness: BitVec,
    /// Ranks of the generators on their information sets.
    pub info_set_ranks: Vec<usize>,
    /// Largest message weight fully enumerated.
    pub message_weight: usize,
}

impl BzResult {
    /// The minimum weight, when the bounds have met.
    pub fn exact(&self) -> Option<usize> {
        (self.lower >= self.upper).then_some(self.upper)
    }
}

struct InfoSet {
    rows: Vec<BitVec>,
    rank: usize,
}

/// Greedy disjoint information sets: row-reduce with the unused columns
/// ordered first and keep the pivots that land there.
fn information_sets(c: &LinearCode) -> Vec<InfoSet> {
    let n = c.n();
    let mut used = vec![false; n];
    let mut sets = Vec::new();
    loop {
        let unused: Vec<usize> = (0..n).filter(|&i| !used[i]).collect();
        if unused.is_empty() {
            break;
        }
        let mut order = unused.clone();
        order.extend((0..n).filter(|&i| used[i]));
        let permuted = c.generator().permute_columns(&order);
        let r = gf2::rref(&permuted);
        let rank = r.pivots.iter().filter(|&&p| p < unused.len()).count();
        if rank == 0 {
            break;
        }
        for &p in r.pivots.iter().filter(|&&p| p < unused.len()) {
            used[order[p]] = true;
        }
        let mut inverse = vec![0; n];
        for (j, &col) in order.iter().enumerate() {
            inverse[col] = j;
        }
        let rows = BitMat::from_rows(n, r.matrix.rows().to_vec())
            .expect("rows share a length")
            .permute_columns(&inverse)
            .rows()
            .to_vec();
        sets.push(InfoSet { rows, rank });
    }
    sets
}

fn lower_bound(ranks: &[usize], k: usize, w: usize, done: usize, divisor: usize) -> usize {
    let raw: usize = ranks
        .iter()
        .enumerate()
        .map(|(i, &r)| {
            let reach = if i < done { w + 1 } else { w };
            reach.saturating_sub(k - r)
        })
        .sum();
    raw.div_ceil(divisor) * divisor
}

/// Lightest codeword among messages of weight exactly `w`.
fn best_of_weight<L: Lane>(rows: &[L], w: usize) -> Option<(u32, L)> {
    let k = rows.len();
    if w == 0 || w > k {
        return None;
    }
    (0..=k - w)
        .into_par_iter()
        .filter_map(|first| {
            let mut best: Option<(u32, L)> = None;
            for_each_subset_xor(&rows[first + 1..], w - 1, rows[first], |x| {
                let c = x.count();
                if best.is_none_or(|b| (c, x) < b) {
                    best = Some((c, x));
                }
            });
            best
        })
        .min()
}

/// Minimum weight by Brouwer–Zimmermann. With `target_cap`, returns as soon
/// as the lower bound reaches the cap (the verdict "d >= cap").
pub fn min_weight_bz(c: &LinearCode, target_cap: Option<usize>) -> Result<BzResult> {
    let k = c.k();
    let n = c.n();
    if k == 0 {
        return Err(Error::InvalidParameter(
            "the zero code has no minimum weight".into(),
        ));
    }
    let sets = information_sets(c);
    let ranks: Vec<usize> = sets.iter().map(|s| s.rank).collect();
    let divisor = c.weight_divisor();

    with_lane!(n, L => {
        let packed: Vec<Vec<L>> = sets.iter().map(|s| pack::<L>(&s.rows)).collect();
        let (mut upper, mut witness) = packed[0]
            .iter()
            .map(|&r| (r.count(), r))
            .min()
            .expect("k > 0");
        let mut result = None;
        'outer: for w in 1..=k {
            for (i, rows) in packed.iter().enumerate() {
                if let Some((cnt, x)) = best_of_weight(rows, w) {
                    if (cnt, x) < (upper, witness) {
                        upper = cnt;
                        witness = x;
                    }
                }
                let lower = if w == k && i == 0 {
                    // every codeword has been visited
                    upper as usize
                } else {
                    lower_bound(&ranks, k, w, i + 1, divisor)
                };
                let capped = target_cap.is_some_and(|cap| lower >= cap);
                if lower >= upper as usize || capped {
                    result = Some(BzResult {
                        lower,
                        upper: upper as usize,
                        witness: witness.to_bitvec(n),
                        info_set_ranks: ranks.clone(),
                        message_weight: w,
                    });
                    break 'outer;
                }
            }
        }
        result.expect("the search terminates once all messages are enumerated")
    })
}
