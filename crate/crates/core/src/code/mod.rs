//! Binary linear codes: self-duality, parity classes, weight enumerators,
//! minimum weight, extremality and designs.

mod bz;
mod design;
mod weights;

use std::sync::OnceLock;

use serde::Serialize;

use crate::config::Budget;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::gf2::{self, BitMat, BitVec};

pub use bz::{min_weight_bz, BzResult};
pub use design::{design_check, DesignCheck};
pub use weights::{macwilliams, WeightEnum};

/// A binary `[n, k]` code, stored by a generator matrix in reduced row
/// echelon form.
#[derive(Clone)]
pub struct LinearCode {
    gen: BitMat,
    pivots: Vec<usize>,
    parity_check: OnceLock<BitMat>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.gen == other.gen
    }
}

impl Eq for LinearCode {}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LinearCode[{}, {}] {:?}", self.n(), self.k(), self.gen)
    }
}

impl LinearCode {
    /// The row space of `m`; dependent rows are dropped.
    pub fn from_generator(m: &BitMat) -> Self {
        let r = gf2::rref(m);
        Self {
            gen: r.matrix,
            pivots: r.pivots,
            parity_check: OnceLock::new(),
        }
    }

    pub fn from_rows(n: usize, rows: Vec<BitVec>) -> Result<Self> {
        Ok(Self::from_generator(&BitMat::from_rows(n, rows)?))
    }

    /// Span of `self` and the extra vectors.
    pub fn extend(&self, extra: &[BitVec]) -> Result<Self> {
        let mut rows = self.gen.rows().to_vec();
        rows.extend_from_slice(extra);
        Self::from_rows(self.n(), rows)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.gen.ncols()
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.gen.nrows()
    }

    pub fn generator(&self) -> &BitMat {
        &self.gen
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// A basis of the dual code.
    pub fn parity_check(&self) -> &BitMat {
        self.parity_check.get_or_init(|| gf2::kernel(&self.gen))
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode::from_generator(self.parity_check())
    }

    pub fn contains(&self, v: &BitVec) -> Result<bool> {
        gf2::member(&self.gen, v)
    }

    /// True when every codeword lies in `other`.
    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.n() == other.n()
            && self
                .gen
                .rows()
                .iter()
                .all(|r| other.contains(r).unwrap_or(false))
    }

    /// Dimension of the intersection with `other`.
    pub fn intersection_dim(&self, other: &LinearCode) -> Result<usize> {
        if self.n() != other.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        // dim(A ∩ B) = dim A + dim B - dim(A + B)
        let sum = self.extend(other.gen.rows())?;
        Ok(self.k() + other.k() - sum.k())
    }

    pub fn is_self_orthogonal(&self) -> bool {
        let rows = self.gen.rows();
        rows.iter()
            .enumerate()
            .all(|(i, a)| rows[i..].iter().all(|b| !a.dot(b)))
    }

    /// Largest `m` in {1, 2, 4} dividing every codeword weight.
    pub fn weight_divisor(&self) -> usize {
        let rows = self.gen.rows();
        if rows.iter().any(|r| r.weight() % 2 == 1) {
            return 1;
        }
        if rows.iter().all(|r| r.weight() % 4 == 0) && self.is_self_orthogonal() {
            4
        } else {
            2
        }
    }
}

/// Parity classification of a self-orthogonal code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ParityClass {
    DoublyEven,
    SinglyEven,
    Odd,
}

impl std::fmt::Display for ParityClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ParityClass::DoublyEven => "doubly even",
            ParityClass::SinglyEven => "singly even",
            ParityClass::Odd => "odd",
        })
    }
}

/// `C = C^⊥`: dimension `n/2` and every pair of generator rows orthogonal.
pub fn is_self_dual(c: &LinearCode) -> bool {
    2 * c.k() == c.n() && c.is_self_orthogonal()
}

/// Reads the class off the generator rows. For a self-orthogonal code the
/// map `x -> wt(x)/2 mod 2` is linear, so the rows decide it.
pub fn parity_class(c: &LinearCode) -> Result<ParityClass> {
    let rows = c.generator().rows();
    if rows.iter().any(|r| r.weight() % 2 == 1) {
        return Ok(ParityClass::Odd);
    }
    if !c.is_self_orthogonal() {
        return Err(Error::PreconditionFailed(
            "parity class needs a self-orthogonal code".into(),
        ));
    }
    if rows.iter().all(|r| r.weight() % 4 == 0) {
        Ok(ParityClass::DoublyEven)
    } else {
        Ok(ParityClass::SinglyEven)
    }
}

/// Exact weight distribution by Gray-code traversal of all `2^k` codewords.
pub fn weight_enumerator(c: &LinearCode, budget: &Budget) -> Result<WeightEnum> {
    let counts = enumerate::weight_counts(c.n(), c.generator().rows(), None, budget)?;
    Ok(WeightEnum::from_counts(&counts))
}

/// Minimum nonzero weight by exhaustive enumeration.
pub fn min_weight_full(c: &LinearCode, budget: &Budget) -> Result<usize> {
    enumerate::min_nonzero(c.n(), c.generator().rows(), None, budget)?
        .map(|(w, _)| w)
        .ok_or_else(|| Error::InvalidParameter("the zero code has no minimum weight".into()))
}

/// How a minimum weight was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MinWeightMethod {
    FullEnumeration,
    BrouwerZimmermann,
}

impl std::fmt::Display for MinWeightMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MinWeightMethod::FullEnumeration => "full enumeration",
            MinWeightMethod::BrouwerZimmermann => "Brouwer-Zimmermann",
        })
    }
}

/// Exact minimum weight, by full enumeration when `2^k` fits the budget and
/// by Brouwer–Zimmermann otherwise.
pub fn min_weight(c: &LinearCode, budget: &Budget) -> Result<(usize, MinWeightMethod)> {
    if budget.allows_enum_pow2(c.k()) {
        Ok((min_weight_full(c, budget)?, MinWeightMethod::FullEnumeration))
    } else {
        let r = min_weight_bz(c, None)?;
        let d = r
            .exact()
            .ok_or_else(|| Error::InvalidParameter("the zero code has no minimum weight".into()))?;
        Ok((d, MinWeightMethod::BrouwerZimmermann))
    }
}

/// Upper bound on the minimum weight of a self-dual code of length `n`.
pub fn rains_bound(n: usize) -> Result<usize> {
    if n % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "self-dual codes have even length, got {n}"
        )));
    }
    let base = 4 * (n / 24);
    Ok(if n % 24 == 22 { base + 6 } else { base + 4 })
}

/// Whether a self-dual code meets [`rains_bound`].
pub fn is_extremal(c: &LinearCode, budget: &Budget) -> Result<bool> {
    if !is_self_dual(c) {
        return Err(Error::NotSelfDual);
    }
    let bound = rains_bound(c.n())?;
    if budget.allows_enum_pow2(c.k()) {
        return Ok(min_weight_full(c, budget)? == bound);
    }
    // the bound caps d, so it is enough to certify d >= bound
    let r = min_weight_bz(c, Some(bound))?;
    Ok(r.lower >= bound)
}

/// All codewords of weight `w`, sorted.
pub fn codewords_of_weight(c: &LinearCode, w: usize, budget: &Budget) -> Result<Vec<BitVec>> {
    enumerate::vectors_of_weight(c.n(), c.generator().rows(), None, w, budget)
}

#[cfg(test)]
mod tests;
