//! Exact solution of an integer linear system by fraction-free
//! Gauss–Jordan elimination.
//!
//! Rows are kept primitive (content divided out). Pivots are taken from the
//! row with the fewest nonzero coefficients, which keeps fill and entry
//! growth low on the nearly triangular Gleason systems.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Solution {
    /// A particular solution; free unknowns are zero.
    pub values: Vec<BigRational>,
    pub nullity: usize,
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter().filter(|x| !x.is_zero()) {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g > BigInt::one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// Solves `rows · a = rhs` where every row has `ncols` coefficients.
pub(crate) fn solve(rows: Vec<Vec<BigInt>>, rhs: Vec<BigInt>, ncols: usize) -> Result<Solution> {
    assert_eq!(rows.len(), rhs.len());
    // augmented rows: coefficients then the right-hand side
    let mut m: Vec<Vec<BigInt>> = rows
        .into_iter()
        .zip(rhs)
        .map(|(mut r, b)| {
            assert_eq!(r.len(), ncols);
            r.push(b);
            make_primitive(&mut r);
            r
        })
        .collect();
    let nnz = |r: &[BigInt]| r[..ncols].iter().filter(|x| !x.is_zero()).count();
    let mut counts: Vec<usize> = m.iter().map(|r| nnz(r)).collect();
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; m.len()];
    let mut pivot_cols = 0;

    loop {
        let mut best: Option<usize> = None;
        for (i, &c) in counts.iter().enumerate() {
            if pivot_of_row[i].is_some() {
                continue;
            }
            if c == 0 {
                if !m[i][ncols].is_zero() {
                    return Err(Error::Inconsistent);
                }
                continue;
            }
            if best.is_none_or(|b| c < counts[b]) {
                best = Some(i);
            }
        }
        let Some(p) = best else { break };
        let col = (0..ncols)
            .filter(|&j| !m[p][j].is_zero())
            .min_by_key(|&j| (m[p][j].bits(), j))
            .expect("row has a nonzero coefficient");
        pivot_of_row[p] = Some(col);
        pivot_cols += 1;

        let prow = std::mem::take(&mut m[p]);
        let support: Vec<usize> = (0..=ncols).filter(|&j| !prow[j].is_zero()).collect();
        let lone = support.len() == 1;
        let pv = &prow[col];
        for (i, r) in m.iter_mut().enumerate() {
            if i == p || r.is_empty() || r[col].is_zero() {
                continue;
            }
            if lone {
                // the pivot row is a multiple of a unit vector
                r[col] = BigInt::zero();
            } else {
                let (q, rem) = r[col].div_rem(pv);
                if rem.is_zero() {
                    for &j in &support {
                        r[j] -= &q * &prow[j];
                    }
                } else {
                    let g = r[col].gcd(pv);
                    let a = pv / &g;
                    let b = &r[col] / &g;
                    for x in r.iter_mut() {
                        *x *= &a;
                    }
                    for &j in &support {
                        r[j] -= &b * &prow[j];
                    }
                    make_primitive(r);
                }
            }
            counts[i] = nnz(r);
        }
        m[p] = prow;
    }

    let mut values = vec![BigRational::zero(); ncols];
    for (i, piv) in pivot_of_row.iter().enumerate() {
        if let Some(col) = *piv {
            values[col] = BigRational::new(m[i][ncols].clone(), m[i][col].clone());
        }
    }
    Ok(Solution {
        values,
        nullity: ncols - pivot_cols,
    })
}
