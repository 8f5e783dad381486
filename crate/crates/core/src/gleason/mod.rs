//! Weight enumerators forced on s-extremal codes by Gleason's theorem,
//! the coset enumerator they induce, and the negativity scans.
//!
//! A singly even self-dual code of length `n ≡ 0 (mod 8)` has enumerator
//! `sum_j a_j T_j` and shadow enumerator `sum_j a_j S_j` in the basis of
//! [`basis_term`]. Fixing the low-order coefficients that extremality
//! forces to vanish determines the `a_j`.

mod basis;
mod solve;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::ser::{Serialize, SerializeMap, SerializeStruct, Serializer};

use crate::code::WeightEnum;
use crate::error::{Error, Result};

pub use basis::{basis_term, GleasonBasisTerm};

use basis::{code_coeffs, shadow_coeff, CodeBasisWalk};

/// The two length families `n = 24k + 8` and `n = 24k + 16`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    F8,
    F16,
}

impl Family {
    pub fn from_residue(r: usize) -> Result<Self> {
        match r {
            8 => Ok(Family::F8),
            16 => Ok(Family::F16),
            _ => Err(Error::InvalidParameter(format!(
                "family must be 8 or 16 (n = 24k + 8 or 24k + 16), got {r}"
            ))),
        }
    }

    pub fn residue(self) -> usize {
        match self {
            Family::F8 => 8,
            Family::F16 => 16,
        }
    }

    pub fn length(self, k: usize) -> usize {
        24 * k + self.residue()
    }

    /// Minimum weight of an s-extremal code: `4k + 2` or `4k + 4`.
    pub fn min_weight(self, k: usize) -> usize {
        match self {
            Family::F8 => 4 * k + 2,
            Family::F16 => 4 * k + 4,
        }
    }

    /// Shadow minimum weight at equality, `n/2 + 4 - 2d`; `4k + 4` in both.
    pub fn shadow_min_weight(self, k: usize) -> usize {
        self.length(k) / 2 + 4 - 2 * self.min_weight(k)
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "24k+{}", self.residue())
    }
}

/// Solved enumerators of a putative s-extremal code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GleasonSolution {
    pub family: Family,
    pub k: usize,
    pub n: usize,
    /// Basis coefficients `a_0 ..= a_{n/8}`.
    pub sol: Vec<BigRational>,
    /// `code_we[i]` is `A_i`, for `i` in `0..=n`.
    pub code_we: Vec<BigRational>,
    /// `shadow_we[i]` is `B_i`, for `i` in `0..=n`.
    pub shadow_we: Vec<BigRational>,
    pub unique: bool,
    pub nullity: usize,
}

fn as_integer(q: &BigRational) -> Option<&BigInt> {
    q.is_integer().then(|| q.numer())
}

fn to_weight_enum(v: &[BigRational]) -> Result<WeightEnum> {
    v.iter()
        .enumerate()
        .map(|(i, q)| {
            as_integer(q)
                .and_then(BigInt::to_biguint)
                .ok_or(Error::NonIntegral(i))
        })
        .collect::<Result<Vec<_>>>()
        .map(WeightEnum::new)
}

impl GleasonSolution {
    pub fn is_integral(&self) -> bool {
        self.code_we.iter().chain(&self.shadow_we).all(BigRational::is_integer)
    }

    /// The code enumerator as counts; fails at the first weight whose
    /// coefficient is not a non-negative integer.
    pub fn code_enum(&self) -> Result<WeightEnum> {
        to_weight_enum(&self.code_we)
    }

    pub fn shadow_enum(&self) -> Result<WeightEnum> {
        to_weight_enum(&self.shadow_we)
    }
}

/// Builds and solves the constraint system without insisting on a unique
/// solution.
fn solve_system(family: Family, k: usize) -> Result<GleasonSolution> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let n = family.length(k);
    let half = n / 2;
    let m = n / 8;
    let code_top = (family.min_weight(k) - 1) / 2;
    let shadow_top = (family.shadow_min_weight(k) - 1) / 2;

    // code rows: A_0 = 1 and A_{2t} = 0 for 0 < t <= code_top
    let basis: Vec<Vec<BigInt>> = (0..=m)
        .into_par_iter()
        .map(|j| code_coeffs(n, j, code_top))
        .collect();
    let mut rows: Vec<Vec<BigInt>> = (0..=code_top)
        .map(|t| (0..=m).map(|j| basis[j][t].clone()).collect())
        .collect();
    let mut rhs: Vec<BigInt> = (0..=code_top)
        .map(|t| if t == 0 { BigInt::one() } else { BigInt::zero() })
        .collect();

    // shadow rows: B_{2t} = 0 for t <= shadow_top, scaled to integers
    let scale = (6 * m).saturating_sub(half) as i64;
    for t in 0..=shadow_top {
        let row = (0..=m)
            .map(|j| {
                shadow_coeff(n, j, t).map_or_else(BigInt::zero, |(v, e)| v << (e + scale) as usize)
            })
            .collect();
        rows.push(row);
        rhs.push(BigInt::zero());
    }

    let s = solve::solve(rows, rhs, m + 1)?;
    let (code_we, shadow_we) = expand(n, &s.values);
    Ok(GleasonSolution {
        family,
        k,
        n,
        sol: s.values,
        code_we,
        shadow_we,
        unique: s.nullity == 0,
        nullity: s.nullity,
    })
}

/// Full code and shadow enumerators for basis coefficients `a`.
fn expand(n: usize, a: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let half = n / 2;
    let denom = a.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
    let scaled: Vec<BigInt> = a.iter().map(|q| q.numer() * (&denom / q.denom())).collect();
    let last = scaled.iter().rposition(|x| !x.is_zero()).unwrap_or(0);

    let mut code_num = vec![BigInt::zero(); half + 1];
    let mut walk = CodeBasisWalk::new(n);
    for (j, x) in scaled.iter().enumerate().take(last + 1) {
        if j > 0 {
            walk.advance();
        }
        if x.is_zero() {
            continue;
        }
        for (acc, c) in code_num.iter_mut().zip(walk.current()) {
            if !c.is_zero() {
                *acc += x * c;
            }
        }
    }

    let shift = (6 * (a.len() - 1)).saturating_sub(half);
    let mut shadow_num = vec![BigInt::zero(); half + 1];
    for (j, x) in scaled.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let low = half - 4 * j;
        for s in 0..=2 * j {
            let t = (low + 4 * s) / 2;
            let (v, e) = shadow_coeff(n, j, t).expect("term lies on the shadow support");
            shadow_num[t] += (x * v) << (e + shift as i64) as usize;
        }
    }

    let spread = |num: Vec<BigInt>, d: &BigInt| {
        let mut out = vec![BigRational::zero(); n + 1];
        for (t, v) in num.into_iter().enumerate() {
            out[2 * t] = BigRational::new(v, d.clone());
        }
        out
    };
    let shadow_denom = &denom << shift;
    (spread(code_num, &denom), spread(shadow_num, &shadow_denom))
}

/// The unique enumerators of a putative s-extremal code of length
/// `24k + 8` or `24k + 16`.
pub fn solve_s_extremal(family: Family, k: usize) -> Result<GleasonSolution> {
    let gs = solve_system(family, k)?;
    if !gs.unique {
        return Err(Error::NonUnique(gs.nullity));
    }
    Ok(gs)
}

fn min_nonzero(v: &[BigRational]) -> BigRational {
    v.iter()
        .filter(|q| !q.is_zero())
        .min()
        .cloned()
        .unwrap_or_else(BigRational::zero)
}

fn poly_mul(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().enumerate().take(len.saturating_sub(i)) {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_pow(base: &[BigInt], e: usize, len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    out[0] = BigInt::one();
    for _ in 0..e {
        out = poly_mul(&out, base, len);
    }
    out
}

/// The enumerator shared by all extremal doubly even self-dual codes of
/// length `n ≡ 0 (mod 8)`, from the basis
/// `(x^8 + 14x^4y^4 + y^8)^{n/8-3j} (x^4y^4(x^4-y^4)^4)^j`.
///
/// Fails with `NonIntegral` at the first weight whose coefficient is not
/// a non-negative integer, which happens once such codes cannot exist.
pub fn extremal_doubly_even_enumerator(n: usize) -> Result<WeightEnum> {
    if n == 0 || !n.is_multiple_of(8) {
        return Err(Error::InvalidParameter(format!(
            "doubly even self-dual codes need 8 | n, got {n}"
        )));
    }
    // in u = y^4
    let len = n / 4 + 1;
    let top = n / 24;
    let f: Vec<BigInt> = [1, 14, 1].iter().map(|&c| BigInt::from(c)).collect();
    let g: Vec<BigInt> = [0, 1, -4, 6, -4, 1].iter().map(|&c| BigInt::from(c)).collect();
    let terms: Vec<Vec<BigInt>> = (0..=top)
        .map(|j| poly_mul(&poly_pow(&f, n / 8 - 3 * j, len), &poly_pow(&g, j, len), len))
        .collect();
    // A_0 = 1 and A_{4t} = 0 for 0 < t <= n/24
    let rows = (0..=top)
        .map(|t| terms.iter().map(|p| p[t].clone()).collect())
        .collect();
    let rhs = (0..=top)
        .map(|t| if t == 0 { BigInt::one() } else { BigInt::zero() })
        .collect();
    let s = solve::solve(rows, rhs, top + 1)?;
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for (x, p) in s.values.iter().zip(&terms) {
        for (t, c) in p.iter().enumerate() {
            coeffs[4 * t] += x * BigRational::from_integer(c.clone());
        }
    }
    to_weight_enum(&coeffs)
}

/// Smallest nonzero coefficient of the code and of the shadow enumerator.
pub fn min_coefficient(gs: &GleasonSolution) -> (BigRational, BigRational) {
    (min_nonzero(&gs.code_we), min_nonzero(&gs.shadow_we))
}

/// Smallest weight carrying a negative coefficient in either enumerator.
pub fn first_negative_weight(gs: &GleasonSolution) -> Option<usize> {
    (0..=gs.n).find(|&i| gs.code_we[i].is_negative() || gs.shadow_we[i].is_negative())
}

/// Enumerator of a coset of minimum weight `4k + 2` in an extremal doubly
/// even neighbor: `A_i [i ≡ 2 mod 4] + B_i / 2`.
pub fn theorem1_coset_we(gs: &GleasonSolution) -> Result<Vec<BigInt>> {
    if gs.family != Family::F8 {
        return Err(Error::InvalidParameter(
            "the coset enumerator is defined for lengths 24k + 8".into(),
        ));
    }
    if !gs.unique {
        return Err(Error::NonUnique(gs.nullity));
    }
    let two = BigRational::from_integer(2.into());
    (0..=gs.n)
        .map(|i| {
            let mut c = &gs.shadow_we[i] / &two;
            if i % 4 == 2 {
                c += &gs.code_we[i];
            }
            as_integer(&c).cloned().ok_or(Error::NonIntegral(i))
        })
        .collect()
}

/// Sign of a minimum coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinSign {
    NonNegative,
    Negative,
}

impl MinSign {
    pub fn of(q: &BigRational) -> Self {
        if q.is_negative() {
            MinSign::Negative
        } else {
            MinSign::NonNegative
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            MinSign::NonNegative => "+",
            MinSign::Negative => "-",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScanOutcome {
    Solved {
        unique: bool,
        code_min: MinSign,
        shadow_min: MinSign,
        first_negative_weight: Option<usize>,
        integral: bool,
    },
    Inconsistent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub k: usize,
    pub n: usize,
    pub outcome: ScanOutcome,
    pub wall_time: Duration,
}

/// One row per `k` in `k_from..=k_to`, in order; the solves run in parallel.
pub fn scan_family(family: Family, k_from: usize, k_to: usize) -> Result<Vec<ScanRow>> {
    if k_from == 0 || k_from > k_to {
        return Err(Error::InvalidParameter(format!(
            "scan range {k_from}..={k_to} must satisfy 1 <= from <= to"
        )));
    }
    (k_from..=k_to)
        .into_par_iter()
        .map(|k| {
            let start = Instant::now();
            let outcome = match solve_system(family, k) {
                Ok(gs) => {
                    let (c, s) = min_coefficient(&gs);
                    ScanOutcome::Solved {
                        unique: gs.unique,
                        code_min: MinSign::of(&c),
                        shadow_min: MinSign::of(&s),
                        first_negative_weight: first_negative_weight(&gs),
                        integral: gs.is_integral(),
                    }
                }
                Err(Error::Inconsistent) => ScanOutcome::Inconsistent,
                Err(e) => return Err(e),
            };
            Ok(ScanRow {
                k,
                n: family.length(k),
                outcome,
                wall_time: start.elapsed(),
            })
        })
        .collect()
}

pub const SCAN_CSV_HEADER: &str =
    "k,n,unique,code_min_sign,shadow_min_sign,first_negative_weight,wall_time";

/// CSV rendering of a scan. Wall times are written only when `timing` is
/// set, so that repeated runs give identical files.
pub fn scan_to_csv(rows: &[ScanRow], timing: bool) -> String {
    let mut out = String::from(SCAN_CSV_HEADER);
    out.push('\n');
    for r in rows {
        let time = if timing {
            format!("{:.3}", r.wall_time.as_secs_f64())
        } else {
            String::new()
        };
        let line = match &r.outcome {
            ScanOutcome::Solved {
                unique,
                code_min,
                shadow_min,
                first_negative_weight,
                ..
            } => format!(
                "{},{},{},{},{},{},{}",
                r.k,
                r.n,
                unique,
                code_min.symbol(),
                shadow_min.symbol(),
                first_negative_weight.map_or(String::new(), |w| w.to_string()),
                time
            ),
            ScanOutcome::Inconsistent => format!("{},{},inconsistent,,,,{}", r.k, r.n, time),
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// Decimal string of a rational, `p/q` when not an integer.
pub fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

struct CoeffMap<'a>(&'a [BigRational]);

impl Serialize for CoeffMap<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let nonzero: Vec<(usize, &BigRational)> =
            self.0.iter().enumerate().filter(|(_, q)| !q.is_zero()).collect();
        let mut map = s.serialize_map(Some(nonzero.len()))?;
        for (i, q) in nonzero {
            map.serialize_entry(&i, &rational_string(q))?;
        }
        map.end()
    }
}

impl Serialize for GleasonSolution {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GleasonSolution", 8)?;
        st.serialize_field("family", &self.family.to_string())?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("unique", &self.unique)?;
        st.serialize_field("nullity", &self.nullity)?;
        let sol: Vec<String> = self.sol.iter().map(rational_string).collect();
        st.serialize_field("sol", &sol)?;
        st.serialize_field("code_we", &CoeffMap(&self.code_we))?;
        st.serialize_field("shadow_we", &CoeffMap(&self.shadow_we))?;
        st.end()
    }
}

/// `(weight, p/q string)` for the nonzero entries of a rational vector.
pub fn rational_pairs(v: &[BigRational]) -> Vec<(usize, String)> {
    v.iter()
        .enumerate()
        .filter(|(_, q)| !q.is_zero())
        .map(|(i, q)| (i, rational_string(q)))
        .collect()
}

/// `weight -> decimal string` for the nonzero entries of an integer vector.
pub fn integer_map(v: &[BigInt]) -> std::collections::BTreeMap<usize, String> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.to_string()))
        .collect()
}

#[cfg(test)]
mod tests;
