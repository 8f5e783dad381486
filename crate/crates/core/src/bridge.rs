//! Passage between s-extremal singly even self-dual codes of length
//! `24k + 8` and extremal doubly even self-dual codes whose covering radius
//! meets the Delsarte bound.

use rayon::prelude::*;
use serde::Serialize;

use crate::code::{is_extremal, is_self_dual, parity_class, LinearCode, ParityClass};
use crate::config::Budget;
use crate::coset::{build_syndrome_table, coset_min_weight, covering_radius, CosetMin, SyndromeTable};
use crate::error::{Error, Result};
use crate::gf2::BitVec;
use crate::shadow::{coset_min, decompose, doubly_even_neighbors, s_extremal_check};

/// `k >= 1` with `n = 24k + 8`, or a precondition failure.
fn family_k(n: usize) -> Result<usize> {
    if n % 24 != 8 || n < 32 {
        return Err(Error::PreconditionFailed(format!(
            "length {n} is not of the form 24k + 8 with k >= 1"
        )));
    }
    Ok((n - 8) / 24)
}

/// How much of the input the bridge verifies before building.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verify {
    /// Check extremality of `d` and the coset minimum weight of `v + d`.
    Full,
    /// Check only types and parities; the caller vouches for the rest.
    TrustCaller,
}

/// The singly even neighbor `D0 ∪ (v' + D0)` of a doubly even self-dual
/// `d`, where `D0 = {x ∈ d : v·x = 0}` and `v' ∈ v + d` has weight
/// `≡ 2 (mod 4)`.
pub fn from_doubly_even(
    d: &LinearCode,
    v: &BitVec,
    verify: Verify,
    budget: &Budget,
) -> Result<LinearCode> {
    let n = d.n();
    if v.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: v.len() });
    }
    if !is_self_dual(d) || parity_class(d)? != ParityClass::DoublyEven {
        return Err(Error::PreconditionFailed(
            "the input code must be doubly even self-dual".into(),
        ));
    }
    let k = family_k(n)?;
    if v.weight() % 2 == 1 {
        return Err(Error::PreconditionFailed("v must have even weight".into()));
    }
    if d.contains(v)? {
        return Err(Error::PreconditionFailed("v lies in the code".into()));
    }
    if verify == Verify::Full {
        if !is_extremal(d, budget)? {
            return Err(Error::PreconditionFailed("the input code is not extremal".into()));
        }
        match coset_min_weight(d, v, None, budget)? {
            CosetMin::Exact(w) if w == 4 * k + 2 => {}
            CosetMin::Exact(w) => {
                return Err(Error::PreconditionFailed(format!(
                    "coset v + D has minimum weight {w}, expected {}",
                    4 * k + 2
                )))
            }
            CosetMin::AtMost(_) => {
                return Err(Error::PreconditionFailed(
                    "coset minimum weight cannot be verified within the budget".into(),
                ))
            }
        }
    }
    Ok(neighbor_through(d, v))
}

fn neighbor_through(d: &LinearCode, v: &BitVec) -> LinearCode {
    let rows = d.generator().rows();
    let pos = rows
        .iter()
        .position(|r| r.dot(v))
        .expect("v is outside the self-dual code, so some row pairs oddly with it");
    let pivot = &rows[pos];
    let mut out: Vec<BitVec> = rows
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != pos)
        .map(|(_, r)| if r.dot(v) { r.xor(pivot) } else { r.clone() })
        .collect();
    // adding an element of d \ D0 shifts the weight by 2 mod 4
    out.push(if v.weight() % 4 == 2 { v.clone() } else { v.xor(pivot) });
    LinearCode::from_rows(d.n(), out).expect("rows share the length n")
}

/// Outcome of [`to_doubly_even`].
#[derive(Clone, Debug)]
pub struct DoublyEvenPair {
    pub first: LinearCode,
    pub second: LinearCode,
    /// Minimum weights of the cosets `C2 ∪ C3` of `first` and `C1 ∪ C2`
    /// of `second`.
    pub coset_leader_weights: (usize, usize),
    /// Covering radii of the two neighbors, when their syndrome tables fit
    /// the budget.
    pub covering_radii: Option<(usize, usize)>,
}

/// The two doubly even neighbors of an s-extremal code of length `24k + 8`,
/// with their extremality and coset weights verified.
pub fn to_doubly_even(c: &LinearCode, budget: &Budget) -> Result<DoublyEvenPair> {
    let n = c.n();
    let k = family_k(n).map_err(|e| Error::NotSExtremal(e.to_string()))?;
    let chk = s_extremal_check(c, budget).map_err(|e| match e {
        Error::NotSelfDual | Error::NotSinglyEven => Error::NotSExtremal(e.to_string()),
        other => other,
    })?;
    if !chk.is_s_extremal || chk.d_code != 4 * k + 2 {
        return Err(Error::NotSExtremal(format!(
            "d = {}, d(S) = {}, expected {} and {}",
            chk.d_code,
            chk.d_shadow,
            4 * k + 2,
            4 * k + 4
        )));
    }
    let sd = decompose(c)?;
    let (first, second) = doubly_even_neighbors(&sd)?;
    for (name, code) in [("C0 ∪ C1", &first), ("C0 ∪ C3", &second)] {
        if !is_extremal(code, budget)? {
            return Err(Error::PreconditionFailed(format!("neighbor {name} is not extremal")));
        }
    }
    // C2 ∪ C3 = rep2 + (C0 ∪ C1) and C1 ∪ C2 = rep2 + (C0 ∪ C3)
    let d2 = coset_min(&sd, 2, budget)?.0;
    let d1 = coset_min(&sd, 1, budget)?.0;
    let d3 = coset_min(&sd, 3, budget)?.0;
    let coset_leader_weights = (d2.min(d3), d1.min(d2));
    let covering_radii = match (build_syndrome_table(&first, budget), build_syndrome_table(&second, budget)) {
        (Ok(a), Ok(b)) => Some((covering_radius(&a), covering_radius(&b))),
        (Err(Error::BudgetExceeded { .. }), _) | (_, Err(Error::BudgetExceeded { .. })) => None,
        (Err(e), _) | (_, Err(e)) => return Err(e),
    };
    Ok(DoublyEvenPair {
        first,
        second,
        coset_leader_weights,
        covering_radii,
    })
}

/// One s-extremal neighbor for every coset of `d` of minimum weight
/// `4k + 2`, in increasing syndrome order.
pub fn census_from_cosets(d: &LinearCode, budget: &Budget) -> Result<Vec<LinearCode>> {
    family_k(d.n())?;
    let table = build_syndrome_table(d, budget)?;
    census_from_table(&table)
}

/// [`census_from_cosets`] over an existing syndrome table.
pub fn census_from_table(table: &SyndromeTable) -> Result<Vec<LinearCode>> {
    let d = table.code();
    let k = family_k(d.n())?;
    if !is_self_dual(d) || parity_class(d)? != ParityClass::DoublyEven {
        return Err(Error::PreconditionFailed(
            "the input code must be doubly even self-dual".into(),
        ));
    }
    Ok(table
        .syndromes_of_weight(4 * k + 2)
        .into_par_iter()
        .map(|s| neighbor_through(d, &table.representative(s)))
        .collect())
}

/// Status of one claimed property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "value", rename_all = "kebab-case")]
pub enum Verified {
    Verified(String),
    Failed(String),
    Unverified,
}

impl std::fmt::Display for Verified {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verified::Verified(v) => write!(f, "{v}"),
            Verified::Failed(v) => write!(f, "FAILED ({v})"),
            Verified::Unverified => f.write_str("unverified (budget)"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    ToDoublyEven,
    FromDoublyEven,
}

/// Audit trail of a bridge run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BridgeReport {
    pub input: String,
    pub direction: Direction,
    /// Names of the produced code files or labels.
    pub produced: Vec<String>,
    pub properties: Vec<(String, Verified)>,
}

impl BridgeReport {
    pub fn new(input: impl Into<String>, direction: Direction) -> Self {
        Self {
            input: input.into(),
            direction,
            produced: Vec::new(),
            properties: Vec::new(),
        }
    }

    pub fn record(&mut self, name: impl Into<String>, status: Verified) {
        self.properties.push((name.into(), status));
    }

    /// True when nothing recorded has failed.
    pub fn all_passed(&self) -> bool {
        !self.properties.iter().any(|(_, s)| matches!(s, Verified::Failed(_)))
    }
}
