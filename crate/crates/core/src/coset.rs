//! Cosets: syndrome tables, covering radius, coset weight enumerators and
//! the Delsarte bound.

use std::io::{Read, Write};
use std::sync::atomic::{AtomicU64, AtomicU8, Ordering};

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::code::{LinearCode, WeightEnum};
use crate::combin::{binomial, binomial_big, for_each_subset_xor};
use crate::config::Budget;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::gf2::{self, BitMat, BitVec};

const UNVISITED: u8 = u8::MAX;
const DUMP_MAGIC: &[u8; 8] = b"SDWSYND1";

/// Leader weight for every syndrome of a code.
///
/// Syndromes are taken against the reduced parity-check matrix `H`: bit `i`
/// of the syndrome of `e` is `H_i · e`.
#[derive(Clone, Debug)]
pub struct SyndromeTable {
    code: LinearCode,
    parity: BitMat,
    columns: Vec<u64>,
    weights: Vec<u8>,
    /// Smallest leader of each coset as a packed word (bit `j` is
    /// coordinate `j + 1`); kept when `n <= 64`.
    leaders: Option<Vec<u64>>,
}

fn parity_columns(code: &LinearCode) -> (BitMat, Vec<u64>) {
    let parity = gf2::rref(code.parity_check()).matrix;
    let columns = (0..code.n())
        .map(|j| {
            (0..parity.nrows()).fold(0u64, |s, i| s | (u64::from(parity.get(i, j)) << i))
        })
        .collect();
    (parity, columns)
}

impl SyndromeTable {
    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn redundancy(&self) -> usize {
        self.parity.nrows()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn leader_weights(&self) -> &[u8] {
        &self.weights
    }

    pub fn leader_weight(&self, syndrome: u64) -> usize {
        self.weights[syndrome as usize] as usize
    }

    pub fn syndrome(&self, v: &BitVec) -> Result<u64> {
        if v.len() != self.code.n() {
            return Err(Error::LengthMismatch {
                expected: self.code.n(),
                found: v.len(),
            });
        }
        Ok(v.ones_indices().iter().fold(0, |s, &j| s ^ self.columns[j]))
    }

    /// A lightest member of the coset, when leaders were recorded.
    pub fn leader(&self, syndrome: u64) -> Option<BitVec> {
        let n = self.code.n();
        self.leaders
            .as_ref()
            .map(|l| BitVec::from_words(n, vec![l[syndrome as usize]]))
    }

    /// Some member of the coset: the leader when known, otherwise the
    /// vector supported on the pivot columns of `H`.
    pub fn representative(&self, syndrome: u64) -> BitVec {
        if let Some(v) = self.leader(syndrome) {
            return v;
        }
        let rref = gf2::rref(&self.parity);
        let mut v = BitVec::zeros(self.code.n());
        for (i, &p) in rref.pivots.iter().enumerate() {
            if syndrome >> i & 1 == 1 {
                v.set(p, true);
            }
        }
        v
    }

    /// Syndromes whose coset has minimum weight `w`, ascending.
    pub fn syndromes_of_weight(&self, w: usize) -> Vec<u64> {
        (0..self.weights.len() as u64)
            .filter(|&s| self.weights[s as usize] as usize == w)
            .collect()
    }

    /// Writes the header `SDWSYND1`, `n: u32`, `k: u32`, `count: u64` (all
    /// little endian) and then one leader-weight byte per syndrome.
    pub fn write_dump<W: Write>(&self, mut out: W) -> Result<()> {
        out.write_all(DUMP_MAGIC)?;
        out.write_all(&(self.code.n() as u32).to_le_bytes())?;
        out.write_all(&(self.code.k() as u32).to_le_bytes())?;
        out.write_all(&(self.weights.len() as u64).to_le_bytes())?;
        out.write_all(&self.weights)?;
        Ok(())
    }

    /// Reads a dump produced by [`SyndromeTable::write_dump`] for `code`.
    /// Leaders are not stored, so the loaded table has none.
    pub fn read_dump<R: Read>(code: &LinearCode, mut input: R) -> Result<Self> {
        let mut header = [0u8; 24];
        input.read_exact(&mut header)?;
        if &header[..8] != DUMP_MAGIC {
            return Err(Error::Parse("not a syndrome table dump".into()));
        }
        let n = u32::from_le_bytes(header[8..12].try_into().expect("4 bytes")) as usize;
        let k = u32::from_le_bytes(header[12..16].try_into().expect("4 bytes")) as usize;
        let count = u64::from_le_bytes(header[16..24].try_into().expect("8 bytes"));
        if (n, k) != (code.n(), code.k()) || count != 1u64 << (n - k) {
            return Err(Error::Parse(format!(
                "dump is for [{n}, {k}] with {count} entries, code is [{}, {}]",
                code.n(),
                code.k()
            )));
        }
        let mut weights = vec![0u8; count as usize];
        input.read_exact(&mut weights)?;
        if weights[0] != 0 || weights.contains(&UNVISITED) {
            return Err(Error::Parse("dump has unvisited syndromes".into()));
        }
        let (parity, columns) = parity_columns(code);
        Ok(Self {
            code: code.clone(),
            parity,
            columns,
            weights,
            leaders: None,
        })
    }
}

/// Marks every syndrome with its coset's minimum weight by visiting error
/// vectors in order of weight.
pub fn build_syndrome_table(c: &LinearCode, budget: &Budget) -> Result<SyndromeTable> {
    let n = c.n();
    let r = n - c.k();
    if r >= 64 {
        return Err(Error::BudgetExceeded {
            needed: 1u128 << r.min(127),
            budget: budget.syndrome_entries as u128,
        });
    }
    budget.check_syndromes_pow2(r)?;
    let (parity, columns) = parity_columns(c);
    let size = 1usize << r;
    let weights: Vec<AtomicU8> = (0..size).map(|_| AtomicU8::new(UNVISITED)).collect();
    let keep_leaders = n <= 64;
    let leaders: Vec<AtomicU64> = if keep_leaders {
        (0..size).map(|_| AtomicU64::new(u64::MAX)).collect()
    } else {
        Vec::new()
    };
    weights[0].store(0, Ordering::Relaxed);
    if keep_leaders {
        leaders[0].store(0, Ordering::Relaxed);
    }
    let marked = AtomicU64::new(1);
    let mut visited: u128 = 1;

    // lane: syndrome in the low half, error vector in the high half
    let items: Vec<u128> = columns
        .iter()
        .enumerate()
        .map(|(j, &s)| {
            let e = if keep_leaders { 1u128 << (64 + j) } else { 0 };
            u128::from(s) | e
        })
        .collect();

    let mut w = 0;
    while marked.load(Ordering::Relaxed) < size as u64 {
        w += 1;
        if w > n || w >= UNVISITED as usize {
            break;
        }
        visited = visited.saturating_add(binomial(n, w));
        budget.check_enum(visited)?;
        let layer = w as u8;
        // the smallest coordinate of the error vector splits the work
        (0..=n - w).into_par_iter().for_each(|first| {
            for_each_subset_xor(&items[first + 1..], w - 1, items[first], |x| {
                let s = x as u64 as usize;
                let slot = &weights[s];
                let mut current = slot.load(Ordering::Relaxed);
                if current == UNVISITED {
                    match slot.compare_exchange(UNVISITED, layer, Ordering::Relaxed, Ordering::Relaxed) {
                        Ok(_) => {
                            marked.fetch_add(1, Ordering::Relaxed);
                            current = layer;
                        }
                        Err(seen) => current = seen,
                    }
                }
                if keep_leaders && current == layer {
                    leaders[s].fetch_min((x >> 64) as u64, Ordering::Relaxed);
                }
            });
        });
    }
    let weights: Vec<u8> = weights.into_iter().map(AtomicU8::into_inner).collect();
    if weights.contains(&UNVISITED) {
        return Err(Error::PreconditionFailed(
            "some syndromes were never reached".into(),
        ));
    }
    Ok(SyndromeTable {
        code: c.clone(),
        parity,
        columns,
        weights,
        leaders: keep_leaders.then(|| leaders.into_iter().map(AtomicU64::into_inner).collect()),
    })
}

pub fn covering_radius(t: &SyndromeTable) -> usize {
    t.weights.iter().copied().max().unwrap_or(0) as usize
}

/// Number of cosets of minimum weight `w`.
pub fn census_min_weight_cosets(t: &SyndromeTable, w: usize) -> usize {
    t.weights.iter().filter(|&&x| x as usize == w).count()
}

/// Minimum weight of a coset, exact or an upper bound when neither a table
/// nor a full enumeration is available.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "weight", rename_all = "kebab-case")]
pub enum CosetMin {
    Exact(usize),
    AtMost(usize),
}

impl CosetMin {
    pub fn exact(self) -> Option<usize> {
        match self {
            CosetMin::Exact(w) => Some(w),
            CosetMin::AtMost(_) => None,
        }
    }

    pub fn value(self) -> usize {
        match self {
            CosetMin::Exact(w) | CosetMin::AtMost(w) => w,
        }
    }
}

impl std::fmt::Display for CosetMin {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CosetMin::Exact(w) => write!(f, "{w}"),
            CosetMin::AtMost(w) => write!(f, "<= {w} (exact value not verified at this length)"),
        }
    }
}

/// Minimum weight of `v + C`: from the table when given, by enumerating
/// the `2^k` coset members when the budget allows, otherwise the weight of
/// the lighter of `v` and its reduction.
pub fn coset_min_weight(
    c: &LinearCode,
    v: &BitVec,
    table: Option<&SyndromeTable>,
    budget: &Budget,
) -> Result<CosetMin> {
    if c.contains(v)? {
        return Ok(CosetMin::Exact(0));
    }
    if let Some(t) = table {
        if t.code() == c {
            return Ok(CosetMin::Exact(t.leader_weight(t.syndrome(v)?)));
        }
    }
    if budget.allows_enum_pow2(c.k()) {
        let (w, _) = enumerate::min_nonzero(c.n(), c.generator().rows(), Some(v), budget)?
            .expect("coset of a vector outside C has no zero");
        return Ok(CosetMin::Exact(w));
    }
    let reduced = gf2::reduce(c.generator(), v);
    Ok(CosetMin::AtMost(v.weight().min(reduced.weight())))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetWE {
    #[serde(serialize_with = "serialize_support")]
    pub representative: BitVec,
    pub enumerator: WeightEnum,
}

fn serialize_support<S: serde::Serializer>(v: &BitVec, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.support())
}

pub fn coset_weight_enumerator(c: &LinearCode, v: &BitVec, budget: &Budget) -> Result<CosetWE> {
    if v.len() != c.n() {
        return Err(Error::LengthMismatch {
            expected: c.n(),
            found: v.len(),
        });
    }
    let counts = enumerate::weight_counts(c.n(), c.generator().rows(), Some(v), budget)?;
    Ok(CosetWE {
        representative: v.clone(),
        enumerator: WeightEnum::from_counts(&counts),
    })
}

/// Smallest `R` whose Hamming balls of radius `R` around `2^{n-r}`
/// codewords can cover `F_2^n`, a lower bound on the covering radius of a
/// code with redundancy `r`.
pub fn sphere_covering_bound(n: usize, redundancy: usize) -> usize {
    let cosets = BigUint::one() << redundancy;
    let mut ball = BigUint::ZERO;
    for radius in 0..=n {
        ball += binomial_big(n, radius);
        if ball >= cosets {
            return radius;
        }
    }
    n
}

/// Number of nonzero weights of the dual code.
pub fn delsarte_bound(we_dual: &WeightEnum) -> usize {
    we_dual.nonzero_weights().len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{golay24, hamming_7_4, pairs_code, random_self_dual, reed_muller};
    use crate::code::{is_self_dual, weight_enumerator};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn budget() -> Budget {
        Budget::default()
    }

    fn all_vectors(n: usize) -> impl Iterator<Item = BitVec> {
        (0u64..1 << n).map(move |m| BitVec::from_words(n, vec![m]))
    }

    /// Coset minimum weights by scanning all of `F_2^n` (n <= 20).
    fn brute_force_leaders(c: &LinearCode) -> std::collections::HashMap<BitVec, usize> {
        let mut best = std::collections::HashMap::new();
        for v in all_vectors(c.n()) {
            let key = gf2::reduce(c.generator(), &v);
            let e = best.entry(key).or_insert(usize::MAX);
            *e = (*e).min(v.weight());
        }
        best
    }

    #[test]
    fn hamming_is_perfect() {
        let t = build_syndrome_table(&hamming_7_4(), &budget()).unwrap();
        assert_eq!(t.len(), 8);
        assert_eq!(covering_radius(&t), 1);
        assert_eq!(census_min_weight_cosets(&t, 1), 7);
        assert_eq!(census_min_weight_cosets(&t, 0), 1);
    }

    #[test]
    fn golay_against_sphere_scan() {
        let g = golay24();
        let t = build_syndrome_table(&g, &budget()).unwrap();
        assert_eq!(covering_radius(&t), 4);
        // every vector of weight <= 3 is the unique leader of its coset;
        // the rest of the 4096 cosets have weight 4
        let upto3: usize = (0..=3).map(|w| binomial(24, w) as usize).sum();
        assert_eq!(census_min_weight_cosets(&t, 4), 4096 - upto3);
        // independent recount: distinct cosets hit by weight-4 vectors but
        // not by lighter ones
        let mut seen = std::collections::HashSet::new();
        let mut four = std::collections::HashSet::new();
        for w in 0..=4usize {
            let mut rd = crate::combin::RevolvingDoor::new(24, w);
            loop {
                let v = BitVec::from_indices(24, rd.current()).unwrap();
                let key = gf2::reduce(g.generator(), &v);
                if w < 4 {
                    seen.insert(key);
                } else if !seen.contains(&key) {
                    four.insert(key);
                }
                if rd.advance().is_none() {
                    break;
                }
            }
        }
        assert_eq!(four.len(), census_min_weight_cosets(&t, 4));
        assert!(g.contains(&t.leader(0).unwrap()).unwrap());
    }

    #[test]
    fn leaders_are_lightest_and_in_coset() {
        let c = reed_muller(1, 4).unwrap();
        let t = build_syndrome_table(&c, &budget()).unwrap();
        let oracle = brute_force_leaders(&c);
        for s in 0..t.len() as u64 {
            let l = t.leader(s).unwrap();
            assert_eq!(t.syndrome(&l).unwrap(), s);
            assert_eq!(l.weight(), t.leader_weight(s));
            assert_eq!(oracle[&gf2::reduce(c.generator(), &l)], l.weight());
            let rep = SyndromeTable::representative(
                &SyndromeTable { leaders: None, ..t.clone() },
                s,
            );
            assert_eq!(t.syndrome(&rep).unwrap(), s);
        }
    }

    #[test]
    fn table_matches_brute_force_on_small_self_dual_codes() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in (2..=16).step_by(2) {
            for steps in 0..3 {
                let c = random_self_dual(n, steps, &mut rng).unwrap();
                let t = build_syndrome_table(&c, &budget()).unwrap();
                let oracle = brute_force_leaders(&c);
                assert_eq!(oracle.len(), t.len());
                assert_eq!(covering_radius(&t), *oracle.values().max().unwrap());
                let we = weight_enumerator(&c, &budget()).unwrap();
                assert!(covering_radius(&t) <= delsarte_bound(&we));
                let r = covering_radius(&t);
                assert!(t.leader_weights().iter().all(|&w| w as usize <= r));
            }
        }
    }

    #[test]
    fn coset_masses_cover_the_space() {
        let c = golay24();
        let t = build_syndrome_table(&c, &budget()).unwrap();
        let mut total = num_bigint::BigUint::from(0u32);
        for s in 0..t.len() as u64 {
            let cwe = coset_weight_enumerator(&c, &t.leader(s).unwrap(), &budget()).unwrap();
            assert_eq!(cwe.enumerator.min_weight(), Some(t.leader_weight(s)));
            total += cwe.enumerator.total();
        }
        assert_eq!(total, num_bigint::BigUint::from(1u32) << 24);
    }

    #[test]
    fn coset_min_weight_routes_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for n in [18usize, 24, 30] {
            let c = random_self_dual(n, 4, &mut rng).unwrap();
            let t = build_syndrome_table(&c, &budget()).unwrap();
            for _ in 0..20 {
                let v = BitVec::from_bools(&(0..n).map(|_| rng.random()).collect::<Vec<bool>>());
                let via_table = coset_min_weight(&c, &v, Some(&t), &budget()).unwrap();
                let via_enum = coset_min_weight(&c, &v, None, &budget()).unwrap();
                assert_eq!(via_table, via_enum);
                assert!(via_table.exact().is_some());
            }
        }
    }

    #[test]
    fn coset_min_weight_edge_cases() {
        let g = golay24();
        assert_eq!(coset_min_weight(&g, g.generator().row(3), None, &budget()).unwrap(), CosetMin::Exact(0));
        let tight = Budget::new(1 << 4, 1 << 4).unwrap();
        let v = BitVec::from_indices(24, &[0, 1, 2, 3, 4, 5]).unwrap();
        let m = coset_min_weight(&g, &v, None, &tight).unwrap();
        assert!(matches!(m, CosetMin::AtMost(w) if w <= 6));
        assert_eq!(coset_min_weight(&g, &v, None, &budget()).unwrap().exact().unwrap() % 2, 0);
    }

    #[test]
    fn coset_enumerator_of_a_codeword_is_the_code_enumerator() {
        let g = golay24();
        let v = g.generator().row(0).clone();
        assert_eq!(
            coset_weight_enumerator(&g, &v, &budget()).unwrap().enumerator,
            weight_enumerator(&g, &budget()).unwrap()
        );
    }

    #[test]
    fn delsarte_values() {
        assert_eq!(delsarte_bound(&WeightEnum::from_counts(&[1, 0, 1])), 1);
        let g = weight_enumerator(&golay24(), &budget()).unwrap();
        assert_eq!(delsarte_bound(&g), 4);
        assert!(is_self_dual(&golay24()));
    }

    #[test]
    fn sphere_covering_values() {
        // perfect codes meet it; the Golay code [24,12] does too
        assert_eq!(sphere_covering_bound(7, 3), 1);
        assert_eq!(sphere_covering_bound(23, 11), 3);
        assert_eq!(sphere_covering_bound(24, 12), 4);
        // 1 + 80 + ... + C(80,9) < 2^40 <= ... + C(80,10)
        assert_eq!(sphere_covering_bound(80, 40), 10);
        assert_eq!(sphere_covering_bound(5, 0), 0);
    }

    #[test]
    fn budget_guards() {
        let tight = Budget::new(1 << 30, 1 << 8).unwrap();
        assert!(matches!(
            build_syndrome_table(&golay24(), &tight),
            Err(Error::BudgetExceeded { .. })
        ));
        let few_visits = Budget::new(100, 1 << 20).unwrap();
        assert!(build_syndrome_table(&pairs_code(24).unwrap(), &few_visits).is_err());
    }

    #[test]
    fn dump_round_trip() {
        let g = golay24();
        let t = build_syndrome_table(&g, &budget()).unwrap();
        let mut bytes = Vec::new();
        t.write_dump(&mut bytes).unwrap();
        assert_eq!(bytes.len(), 24 + 4096);
        assert_eq!(&bytes[..8], b"SDWSYND1");
        let back = SyndromeTable::read_dump(&g, bytes.as_slice()).unwrap();
        assert_eq!(back.leader_weights(), t.leader_weights());
        assert!(back.leader(5).is_none());
        assert!(SyndromeTable::read_dump(&hamming_7_4(), bytes.as_slice()).is_err());
        bytes[0] = b'X';
        assert!(SyndromeTable::read_dump(&g, bytes.as_slice()).is_err());
    }
}
