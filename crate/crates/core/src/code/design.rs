use serde::Serialize;

use crate::code::{codewords_of_weight, LinearCode};
use crate::combin::{binomial, colex_rank, RevolvingDoor};
use crate::config::Budget;
use crate::error::Result;

/// Result of testing whether the supports of the weight-`w` codewords form
/// a `t`-design.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DesignCheck {
    pub is_design: bool,
    /// Common block count through every `t`-subset, when it is constant.
    pub lambda: Option<u64>,
    pub blocks: usize,
}

/// Tallies, for every `t`-subset of coordinates, how many weight-`w`
/// supports contain it.
pub fn design_check(c: &LinearCode, w: usize, t: usize, budget: &Budget) -> Result<DesignCheck> {
    budget.check_enum_pow2(c.k())?;
    let subsets = binomial(c.n(), t);
    let blocks = codewords_of_weight(c, w, budget)?;
    budget.check_enum(subsets.saturating_mul(blocks.len().max(1) as u128))?;

    let mut counts = vec![0u64; subsets as usize];
    for block in &blocks {
        let support = block.ones_indices();
        if t > support.len() {
            continue;
        }
        let mut rd = RevolvingDoor::new(support.len(), t);
        loop {
            let picked: Vec<usize> = rd.current().iter().map(|&i| support[i]).collect();
            counts[colex_rank(&picked)] += 1;
            if rd.advance().is_none() {
                break;
            }
        }
    }
    let lambda = counts.first().copied().unwrap_or(0);
    let is_design = counts.iter().all(|&x| x == lambda);
    Ok(DesignCheck {
        is_design,
        lambda: is_design.then_some(lambda),
        blocks: blocks.len(),
    })
}
