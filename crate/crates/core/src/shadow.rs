//! Shadow of a singly even self-dual code and its doubly even neighbors.
//!
//! For a singly even self-dual `C`, the doubly even subcode `C0` has index
//! 2 and `C0^⊥ = C0 ∪ C1 ∪ C2 ∪ C3` with `C = C0 ∪ C2`. The shadow is
//! `S = C1 ∪ C3`.

use serde::Serialize;

use crate::code::{is_self_dual, min_weight, parity_class, LinearCode, ParityClass, WeightEnum};
use crate::config::Budget;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::gf2::{self, BitVec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowDecomp {
    pub code: LinearCode,
    pub c0: LinearCode,
    /// Lexicographically smallest member of `C1`.
    pub rep1: BitVec,
    /// First generator row of `C` of weight 2 mod 4.
    pub rep2: BitVec,
    /// Lexicographically smallest member of `C3`.
    pub rep3: BitVec,
}

impl ShadowDecomp {
    pub fn n(&self) -> usize {
        self.code.n()
    }

    /// Representative of `C_i` for `i` in `0..4`.
    pub fn rep(&self, i: usize) -> BitVec {
        match i {
            0 => BitVec::zeros(self.n()),
            1 => self.rep1.clone(),
            2 => self.rep2.clone(),
            3 => self.rep3.clone(),
            _ => panic!("coset index {i} out of range"),
        }
    }

    /// `C0^⊥` as a code.
    pub fn c0_dual(&self) -> LinearCode {
        self.c0
            .extend(&[self.rep1.clone(), self.rep2.clone()])
            .expect("representatives have length n")
    }

    /// Whether `v` lies in the shadow `C1 ∪ C3`.
    pub fn in_shadow(&self, v: &BitVec) -> Result<bool> {
        Ok(self.c0_dual().contains(v)? && !self.code.contains(v)?)
    }
}

pub fn decompose(c: &LinearCode) -> Result<ShadowDecomp> {
    if !is_self_dual(c) {
        return Err(Error::NotSelfDual);
    }
    if parity_class(c)? != ParityClass::SinglyEven {
        return Err(Error::NotSinglyEven);
    }
    let n = c.n();
    let rows = c.generator().rows();
    let pos = rows
        .iter()
        .position(|r| r.weight() % 4 == 2)
        .expect("a singly even code has a row of weight 2 mod 4");
    let rep2 = rows[pos].clone();
    // wt(x)/2 mod 2 is linear on C, so C0 is its kernel
    let c0_rows = rows
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != pos)
        .map(|(_, r)| if r.weight() % 4 == 2 { r.xor(&rep2) } else { r.clone() })
        .collect();
    let c0 = LinearCode::from_rows(n, c0_rows)?;

    let c0_perp = gf2::kernel(c0.generator());
    let s = c0_perp
        .rows()
        .iter()
        .find(|r| !c.contains(r).unwrap_or(true))
        .expect("C0^⊥ is larger than C")
        .clone();
    let a = gf2::reduce(c0.generator(), &s);
    let b = gf2::reduce(c0.generator(), &s.xor(&rep2));
    let (rep1, rep3) = if a.lex_cmp(&b).is_lt() { (a, b) } else { (b, a) };
    Ok(ShadowDecomp {
        code: c.clone(),
        c0,
        rep1,
        rep2,
        rep3,
    })
}

/// Weight distribution of the coset `C_i`.
pub fn coset_enumerator(sd: &ShadowDecomp, i: usize, budget: &Budget) -> Result<WeightEnum> {
    let rep = sd.rep(i);
    let counts =
        enumerate::weight_counts(sd.n(), sd.c0.generator().rows(), Some(&rep), budget)?;
    Ok(WeightEnum::from_counts(&counts))
}

/// Weight distribution of the shadow `C1 ∪ C3`.
pub fn shadow_weight_enumerator(sd: &ShadowDecomp, budget: &Budget) -> Result<WeightEnum> {
    budget.check_enum_pow2(sd.c0.k() + 1)?;
    coset_enumerator(sd, 1, budget)?.add(&coset_enumerator(sd, 3, budget)?)
}

/// Minimum weight of the coset `C_i` (`i` in 1..4) with a lightest member.
pub fn coset_min(sd: &ShadowDecomp, i: usize, budget: &Budget) -> Result<(usize, BitVec)> {
    assert!((1..4).contains(&i), "C0 contains zero");
    let rep = sd.rep(i);
    Ok(
        enumerate::min_nonzero(sd.n(), sd.c0.generator().rows(), Some(&rep), budget)?
            .expect("a proper coset has no zero vector"),
    )
}

/// Minimum weight of the shadow.
pub fn shadow_min_weight(sd: &ShadowDecomp, budget: &Budget) -> Result<usize> {
    budget.check_enum_pow2(sd.c0.k() + 1)?;
    Ok(coset_min(sd, 1, budget)?.0.min(coset_min(sd, 3, budget)?.0))
}

/// The self-dual neighbors `C0 ∪ C1` and `C0 ∪ C3`; both are doubly even
/// when `8 | n`.
pub fn doubly_even_neighbors(sd: &ShadowDecomp) -> Result<(LinearCode, LinearCode)> {
    if !sd.n().is_multiple_of(8) {
        return Err(Error::LengthNotDivisibleBy8(sd.n()));
    }
    Ok((
        sd.c0.extend(std::slice::from_ref(&sd.rep1))?,
        sd.c0.extend(std::slice::from_ref(&sd.rep3))?,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SExtremalCheck {
    pub is_s_extremal: bool,
    pub d_code: usize,
    pub d_shadow: usize,
    /// Value of the bound on `d(S)` for this `d(C)`.
    pub bound: i64,
    /// Set for `n ≡ 22 (mod 24)`, where the bound takes its other form and
    /// no verdict is given.
    pub exceptional: bool,
}

pub fn s_extremal_check(c: &LinearCode, budget: &Budget) -> Result<SExtremalCheck> {
    let sd = decompose(c)?;
    let (d_code, _) = min_weight(c, budget)?;
    let d_shadow = shadow_min_weight(&sd, budget)?;
    let n = c.n() as i64;
    let exceptional = c.n() % 24 == 22;
    let bound = if exceptional { n / 2 + 8 } else { n / 2 + 4 } - 2 * d_code as i64;
    Ok(SExtremalCheck {
        is_s_extremal: !exceptional && d_shadow as i64 == bound,
        d_code,
        d_shadow,
        bound,
        exceptional,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{direct_sum, golay24, pairs_code, random_self_dual};
    use crate::code::{weight_enumerator, ParityClass};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn budget() -> Budget {
        Budget::default()
    }

    fn span(c: &LinearCode) -> Vec<BitVec> {
        let rows = c.generator().rows();
        (0u64..1 << c.k())
            .map(|m| {
                let mut x = BitVec::zeros(c.n());
                for (i, r) in rows.iter().enumerate() {
                    if m >> i & 1 == 1 {
                        x.xor_assign(r);
                    }
                }
                x
            })
            .collect()
    }

    fn all_vectors(n: usize) -> impl Iterator<Item = BitVec> {
        (0u64..1 << n).map(move |m| {
            BitVec::from_bools(&(0..n).map(|i| m >> i & 1 == 1).collect::<Vec<_>>())
        })
    }

    #[test]
    fn toy_length_four() {
        let c = pairs_code(4).unwrap();
        let sd = decompose(&c).unwrap();
        assert_eq!(sd.c0.k(), 1);
        assert_eq!(sd.c0.generator().row(0).to_binary_string(), "1111");
        let shadow: Vec<BitVec> = all_vectors(4)
            .filter(|v| sd.in_shadow(v).unwrap())
            .collect();
        let expect: Vec<String> = ["1010", "0101", "1001", "0110"].iter().map(|s| s.to_string()).collect();
        let mut got: Vec<String> = shadow.iter().map(BitVec::to_binary_string).collect();
        got.sort();
        let mut expect = expect;
        expect.sort();
        assert_eq!(got, expect);
        let we = shadow_weight_enumerator(&sd, &budget()).unwrap();
        assert_eq!(we.total(), 4u32.into());
        assert_eq!(sd.rep1.to_binary_string(), "0101");
        assert_eq!(sd.rep3.to_binary_string(), "0110");
    }

    #[test]
    fn rejects_wrong_types() {
        assert_eq!(decompose(&golay24()), Err(Error::NotSinglyEven));
        let half = LinearCode::from_rows(4, vec![BitVec::ones(4)]).unwrap();
        assert_eq!(decompose(&half), Err(Error::NotSelfDual));
        let sd = decompose(&pairs_code(6).unwrap()).unwrap();
        assert_eq!(doubly_even_neighbors(&sd), Err(Error::LengthNotDivisibleBy8(6)));
    }

    #[test]
    fn length_eight_neighbors() {
        let c = pairs_code(8).unwrap();
        let sd = decompose(&c).unwrap();
        let (n1, n3) = doubly_even_neighbors(&sd).unwrap();
        for d in [&n1, &n3] {
            assert!(is_self_dual(d));
            assert_eq!(parity_class(d).unwrap(), ParityClass::DoublyEven);
            assert_eq!(d.intersection_dim(&c).unwrap(), 3);
            // every one of the 16 codewords is doubly even
            assert!(span(d).iter().all(|x| x.weight() % 4 == 0));
        }
        assert_ne!(n1, n3);
    }

    #[test]
    fn pairs_sixteen_meets_the_bound() {
        let c = pairs_code(16).unwrap();
        let chk = s_extremal_check(&c, &budget()).unwrap();
        // d = 2, and every shadow vector has a one in each pair: weight 8
        assert_eq!((chk.d_code, chk.d_shadow, chk.bound), (2, 8, 8));
        assert!(chk.is_s_extremal);
        let mixed = direct_sum(&[pairs_code(8).unwrap(), crate::catalog::extended_hamming_8_4()]).unwrap();
        let chk = s_extremal_check(&mixed, &budget()).unwrap();
        assert_eq!(chk.d_code, 2);
        assert!(!chk.is_s_extremal);
    }

    /// Exhaustive partition and reassembly checks.
    fn check_partition(c: &LinearCode) {
        let sd = decompose(c).unwrap();
        let n = c.n();
        assert_eq!(sd.c0.k(), n / 2 - 1);
        assert!(sd.c0.generator().rows().iter().all(|r| r.weight() % 4 == 0));
        assert_eq!(sd.rep2.weight() % 4, 2);
        let c0 = span(&sd.c0);
        let members: Vec<Vec<BitVec>> = (0..4)
            .map(|i| c0.iter().map(|x| x.xor(&sd.rep(i))).collect())
            .collect();
        let mut all: Vec<BitVec> = members.iter().flatten().cloned().collect();
        all.sort_by(|a, b| a.lex_cmp(b));
        all.dedup();
        assert_eq!(all.len(), 4 * c0.len(), "cosets overlap");
        let dual = LinearCode::from_generator(&gf2::kernel(sd.c0.generator()));
        assert!(all.iter().all(|x| dual.contains(x).unwrap()));
        // C0 ∪ C2 is C
        let mut reassembled: Vec<BitVec> = members[0].iter().chain(&members[2]).cloned().collect();
        reassembled.sort_by(|a, b| a.lex_cmp(b));
        let mut original = span(c);
        original.sort_by(|a, b| a.lex_cmp(b));
        assert_eq!(reassembled, original);
        // shadow vectors are orthogonal to C0
        for s in members[1].iter().chain(&members[3]) {
            assert!(c0.iter().all(|x| !gf2::inner(s, x).unwrap()));
        }
        // C1 is labeled by the smaller lexicographic minimum
        let lexmin = |v: &Vec<BitVec>| v.iter().min_by(|a, b| a.lex_cmp(b)).unwrap().clone();
        assert_eq!(lexmin(&members[1]), sd.rep1);
        assert_eq!(lexmin(&members[3]), sd.rep3);
        assert!(sd.rep1.lex_cmp(&sd.rep3).is_lt());

        if n.is_multiple_of(8) {
            let (n1, n3) = doubly_even_neighbors(&sd).unwrap();
            let shadow_doubly_even = members[1].iter().chain(&members[3]).all(|x| x.weight() % 4 == 0);
            let neighbors_doubly_even = [&n1, &n3]
                .iter()
                .all(|d| parity_class(d).unwrap() == ParityClass::DoublyEven);
            assert_eq!(shadow_doubly_even, neighbors_doubly_even);
            assert!(neighbors_doubly_even);
        }
        let we = shadow_weight_enumerator(&sd, &budget()).unwrap();
        let mut counts = vec![0u64; n + 1];
        for x in members[1].iter().chain(&members[3]) {
            counts[x.weight()] += 1;
        }
        assert_eq!(we, WeightEnum::from_counts(&counts));
    }

    #[test]
    fn partition_on_random_codes() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut checked = 0;
        for n in [4usize, 6, 8, 10, 12, 14, 16, 16, 20, 24] {
            for steps in 0..4 {
                let c = random_self_dual(n, steps, &mut rng).unwrap();
                if parity_class(&c).unwrap() == ParityClass::SinglyEven {
                    check_partition(&c);
                    checked += 1;
                }
            }
        }
        assert!(checked >= 20);
    }

    #[test]
    fn shadow_mass_equals_code_mass() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let c = random_self_dual(22, 6, &mut rng).unwrap();
        let sd = decompose(&c).unwrap();
        let s = shadow_weight_enumerator(&sd, &budget()).unwrap();
        assert_eq!(s.total(), weight_enumerator(&c, &budget()).unwrap().total());
        let chk = s_extremal_check(&c, &budget()).unwrap();
        assert!(chk.exceptional && !chk.is_s_extremal);
    }
}
