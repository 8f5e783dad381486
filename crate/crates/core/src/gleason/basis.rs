//! Gleason basis polynomials for length `n ≡ 0 (mod 8)`, written in one
//! variable after setting `x = 1`.
//!
//! Code side, in `u = y^2`: `T_j(u) = (1+u)^{n/2-4j} u^j (1-u)^{2j}`.
//! Shadow side, in `y`: `(-1)^j 2^{n/2-6j} y^{n/2-4j} (1-y^4)^{2j}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficients of one basis pair up to `y^{2 max_t}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GleasonBasisTerm {
    pub n: usize,
    pub j: usize,
    /// `code[t]` is the coefficient of `x^{n-2t} y^{2t}`.
    pub code: Vec<BigInt>,
    /// `shadow[t]` is the coefficient of `y^{2t}`.
    pub shadow: Vec<BigRational>,
}

fn check_range(n: usize, j: usize, max_t: usize) -> Result<()> {
    if n == 0 || !n.is_multiple_of(8) {
        return Err(Error::InvalidParameter(format!(
            "Gleason basis needs a positive length divisible by 8, got {n}"
        )));
    }
    if j > n / 8 {
        return Err(Error::InvalidParameter(format!("basis index {j} exceeds n/8 = {}", n / 8)));
    }
    if max_t > n / 2 {
        return Err(Error::InvalidParameter(format!("max_t {max_t} exceeds n/2 = {}", n / 2)));
    }
    Ok(())
}

/// `C(m, 0..=top)` by the multiplicative recurrence.
pub(crate) fn binomial_row(m: usize, top: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(top + 1);
    let mut c = BigInt::one();
    for r in 0..=top {
        if r > m {
            row.push(BigInt::zero());
            continue;
        }
        row.push(c.clone());
        c = c * (m - r) / (r + 1);
    }
    row
}

/// `c_j[t] = sum_s (-1)^s C(2j, s) C(n/2 - 4j, t - j - s)` for `t <= max_t`.
pub(crate) fn code_coeffs(n: usize, j: usize, max_t: usize) -> Vec<BigInt> {
    let m = n / 2 - 4 * j;
    let alt = binomial_row(2 * j, 2 * j);
    let plain = binomial_row(m, max_t);
    (0..=max_t)
        .map(|t| {
            let mut acc = BigInt::zero();
            if t < j {
                return acc;
            }
            for (s, a) in alt.iter().enumerate().take(t - j + 1) {
                let r = t - j - s;
                if r > m {
                    continue;
                }
                if s % 2 == 0 {
                    acc += a * &plain[r];
                } else {
                    acc -= a * &plain[r];
                }
            }
            acc
        })
        .collect()
}

/// Shadow coefficient at `y^{2t}` as `(signed integer, power of two)`, or
/// `None` when it vanishes.
pub(crate) fn shadow_coeff(n: usize, j: usize, t: usize) -> Option<(BigInt, i64)> {
    let low = n / 2 - 4 * j;
    if 2 * t < low || !(2 * t - low).is_multiple_of(4) {
        return None;
    }
    let s = (2 * t - low) / 4;
    if s > 2 * j {
        return None;
    }
    let mag = binomial_row(2 * j, s).pop().expect("row has s + 1 entries");
    let value = if (j + s).is_multiple_of(2) { mag } else { -mag };
    Some((value, n as i64 / 2 - 6 * j as i64))
}

pub(crate) fn dyadic(value: BigInt, exp2: i64) -> BigRational {
    if exp2 >= 0 {
        BigRational::from_integer(value << exp2 as usize)
    } else {
        BigRational::new(value, BigInt::one() << (-exp2) as usize)
    }
}

pub fn basis_term(n: usize, j: usize, max_t: usize) -> Result<GleasonBasisTerm> {
    check_range(n, j, max_t)?;
    let shadow = (0..=max_t)
        .map(|t| shadow_coeff(n, j, t).map_or_else(BigRational::zero, |(v, e)| dyadic(v, e)))
        .collect();
    Ok(GleasonBasisTerm {
        n,
        j,
        code: code_coeffs(n, j, max_t),
        shadow,
    })
}

/// Full code-side polynomials `T_0, T_1, ...` generated by
/// `T_{j+1} = T_j u (1-u)^2 / (1+u)^4`, each with `n/2 + 1` coefficients.
pub(crate) struct CodeBasisWalk {
    current: Vec<BigInt>,
    half: usize,
}

impl CodeBasisWalk {
    pub(crate) fn new(n: usize) -> Self {
        let half = n / 2;
        let mut current = binomial_row(half, half);
        current.resize(half + 4, BigInt::zero());
        Self { current, half }
    }

    pub(crate) fn current(&self) -> &[BigInt] {
        &self.current[..=self.half]
    }

    pub(crate) fn advance(&mut self) {
        let p = &mut self.current;
        // times u (1 - u)^2 = u - 2u^2 + u^3
        for i in (0..p.len()).rev() {
            let mut v = BigInt::zero();
            if i >= 1 {
                v += &p[i - 1];
            }
            if i >= 2 {
                v -= &p[i - 2] * 2;
            }
            if i >= 3 {
                v += &p[i - 3];
            }
            p[i] = v;
        }
        // four exact divisions by (1 + u)
        for _ in 0..4 {
            for i in 1..p.len() {
                let prev = p[i - 1].clone();
                p[i] -= prev;
            }
            assert!(p.last().is_some_and(Zero::is_zero), "division by 1+u is exact");
        }
    }
}
