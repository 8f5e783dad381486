use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::combin::binomial_big;
use crate::error::{Error, Result};

/// Exact weight distribution: `coeffs[i]` counts vectors of weight `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightEnum {
    coeffs: Vec<BigUint>,
}

impl WeightEnum {
    pub fn new(coeffs: Vec<BigUint>) -> Self {
        assert!(!coeffs.is_empty(), "a weight enumerator covers weights 0..=n");
        Self { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![BigUint::zero(); n + 1])
    }

    pub fn from_counts(counts: &[u64]) -> Self {
        Self::new(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// Length `n`; the vector has `n + 1` entries.
    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigUint {
        &self.coeffs[i]
    }

    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Smallest nonzero weight with a nonzero count.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        (1..self.coeffs.len()).find(|&i| !self.coeffs[i].is_zero())
    }

    /// Smallest weight with a nonzero count, including weight 0.
    pub fn min_weight(&self) -> Option<usize> {
        (0..self.coeffs.len()).find(|&i| !self.coeffs[i].is_zero())
    }

    /// Weights `i` in `1..=n` with a nonzero count.
    pub fn nonzero_weights(&self) -> Vec<usize> {
        (1..self.coeffs.len())
            .filter(|&i| !self.coeffs[i].is_zero())
            .collect()
    }

    pub fn add(&self, other: &WeightEnum) -> Result<WeightEnum> {
        if self.n() != other.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(WeightEnum::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    /// `(weight, decimal count)` for every nonzero entry, ascending.
    pub fn pairs(&self) -> Vec<(usize, String)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.to_string()))
            .collect()
    }

    pub fn to_map(&self) -> BTreeMap<usize, String> {
        self.pairs().into_iter().collect()
    }

    /// `1 + 759 y^8 + ...` style rendering.
    pub fn to_polynomial_string(&self) -> String {
        let terms: Vec<String> = self
            .pairs()
            .into_iter()
            .map(|(i, c)| match i {
                0 => c,
                1 => format!("{c} y"),
                _ => format!("{c} y^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl Serialize for WeightEnum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs = self.pairs();
        let mut map = s.serialize_map(Some(pairs.len()))?;
        for (w, c) in pairs {
            map.serialize_entry(&w, &c)?;
        }
        map.end()
    }
}

/// MacWilliams transform: the enumerator of the dual of a `k`-dimensional
/// code with enumerator `we`,
/// `W'(y) = 2^{-k} sum_i A_i (1+y)^{n-i} (1-y)^i`.
pub fn macwilliams(we: &WeightEnum, k: usize) -> Result<WeightEnum> {
    let n = we.n();
    let binoms: Vec<Vec<BigInt>> = (0..=n)
        .map(|m| (0..=m).map(|r| BigInt::from(binomial_big(m, r))).collect())
        .collect();
    let mut out = vec![BigInt::zero(); n + 1];
    for (i, a) in we.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let a = BigInt::from(a.clone());
        // (1+y)^{n-i} (1-y)^i
        for s in 0..=i {
            let sign_binom = if s % 2 == 0 {
                binoms[i][s].clone()
            } else {
                -binoms[i][s].clone()
            };
            let f = &a * sign_binom;
            for r in 0..=n - i {
                out[s + r] += &f * &binoms[n - i][r];
            }
        }
    }
    let denom = BigInt::one() << k;
    let coeffs = out
        .into_iter()
        .enumerate()
        .map(|(j, v)| {
            let (q, r) = v.div_rem(&denom);
            if !r.is_zero() || q.sign() == Sign::Minus {
                Err(Error::NonIntegral(j))
            } else {
                Ok(q.to_biguint().expect("non-negative"))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightEnum::new(coeffs))
}
