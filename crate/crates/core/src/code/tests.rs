use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::catalog::{
    direct_sum, extended_hamming_8_4, extended_qr, golay24, pairs_code, random_self_dual,
    reed_muller,
};

fn budget() -> Budget {
    Budget::default()
}

/// Every codeword, built from message bits one at a time.
fn naive_codewords(c: &LinearCode) -> Vec<BitVec> {
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

fn naive_enumerator(c: &LinearCode) -> Vec<u64> {
    let mut counts = vec![0u64; c.n() + 1];
    for x in naive_codewords(c) {
        counts[x.weight()] += 1;
    }
    counts
}

#[test]
fn golay_enumerator_matches_naive() {
    let g = golay24();
    let we = weight_enumerator(&g, &budget()).unwrap();
    assert_eq!(we, WeightEnum::from_counts(&naive_enumerator(&g)));
    assert_eq!(we.coeff(8).to_string(), "759");
    assert_eq!(we.coeff(12).to_string(), "2576");
    assert_eq!(we.total(), num_bigint::BigUint::from(4096u32));
}

#[test]
fn self_duality() {
    assert!(is_self_dual(&pairs_code(2).unwrap()));
    let h = extended_hamming_8_4();
    assert!(is_self_dual(&h));
    assert!(gf2::same_row_space(h.generator(), h.parity_check()));
    let rep3 = LinearCode::from_rows(3, vec![BitVec::ones(3)]).unwrap();
    assert!(!is_self_dual(&rep3));
}

#[test]
fn parity_classes() {
    assert_eq!(parity_class(&extended_hamming_8_4()).unwrap(), ParityClass::DoublyEven);
    assert_eq!(parity_class(&golay24()).unwrap(), ParityClass::DoublyEven);
    assert_eq!(parity_class(&pairs_code(4).unwrap()).unwrap(), ParityClass::SinglyEven);
    let odd = LinearCode::from_rows(3, vec![BitVec::ones(3)]).unwrap();
    assert_eq!(parity_class(&odd).unwrap(), ParityClass::Odd);
    let not_so = LinearCode::from_rows(4, vec![BitVec::parse_binary("1100").unwrap(), BitVec::parse_binary("0110").unwrap()]).unwrap();
    assert!(parity_class(&not_so).is_err());
}

#[test]
fn golay_enumeration_agrees_with_parity_class() {
    let we = weight_enumerator(&golay24(), &budget()).unwrap();
    assert!(we.nonzero_weights().iter().all(|w| w % 4 == 0));
}

#[test]
fn minimum_weights() {
    let b = budget();
    assert_eq!(min_weight_full(&pairs_code(2).unwrap(), &b).unwrap(), 2);
    assert_eq!(min_weight_full(&golay24(), &b).unwrap(), 8);
    let q31 = extended_qr(31).unwrap();
    assert_eq!((q31.n(), q31.k()), (32, 16));
    assert_eq!(min_weight_full(&q31, &b).unwrap(), 8);
    let q23 = extended_qr(23).unwrap();
    assert_eq!(weight_enumerator(&q23, &b).unwrap(), weight_enumerator(&golay24(), &b).unwrap());
    let rm = reed_muller(2, 5).unwrap();
    assert_eq!((rm.n(), rm.k()), (32, 16));
    assert!(is_self_dual(&rm));
    assert_eq!(min_weight_full(&rm, &b).unwrap(), 8);
}

#[test]
fn bz_on_golay() {
    let r = min_weight_bz(&golay24(), None).unwrap();
    assert_eq!(r.exact(), Some(8));
    assert_eq!(r.witness.weight(), 8);
    assert!(golay24().contains(&r.witness).unwrap());
    let capped = min_weight_bz(&golay24(), Some(6)).unwrap();
    assert!(capped.lower >= 6);
}

#[test]
fn budget_forces_bz() {
    let tight = Budget::new(1 << 10, 1 << 10).unwrap();
    assert!(matches!(weight_enumerator(&golay24(), &tight), Err(Error::BudgetExceeded { .. })));
    assert_eq!(min_weight(&golay24(), &tight).unwrap(), (8, MinWeightMethod::BrouwerZimmermann));
    assert!(is_extremal(&golay24(), &tight).unwrap());
}

#[test]
fn rains_values() {
    assert_eq!(rains_bound(32).unwrap(), 8);
    assert_eq!(rains_bound(56).unwrap(), 12);
    assert_eq!(rains_bound(22).unwrap(), 6);
    assert_eq!(rains_bound(80).unwrap(), 16);
    assert!(rains_bound(7).is_err());
}

#[test]
fn extremality() {
    let b = budget();
    assert!(is_extremal(&golay24(), &b).unwrap());
    assert!(!is_extremal(&pairs_code(8).unwrap(), &b).unwrap());
    let rep3 = LinearCode::from_rows(3, vec![BitVec::ones(3)]).unwrap();
    assert_eq!(is_extremal(&rep3, &b), Err(Error::NotSelfDual));
}

#[test]
fn golay_designs() {
    let b = budget();
    let five = design_check(&golay24(), 8, 5, &b).unwrap();
    assert_eq!((five.is_design, five.lambda, five.blocks), (true, Some(1), 759));
    let two = design_check(&golay24(), 8, 2, &b).unwrap();
    assert_eq!(two.lambda, Some(77));
}

#[test]
fn non_design() {
    // a shortened-looking [12,6] code whose minimum-weight words miss some pairs
    let rows = ["100000110000", "010000011000", "001000001100", "000100000110", "000010000011", "000001100001"]
        .iter()
        .map(|s| BitVec::parse_binary(s).unwrap())
        .collect();
    let c = LinearCode::from_rows(12, rows).unwrap();
    let d = min_weight_full(&c, &budget()).unwrap();
    let chk = design_check(&c, d, 2, &budget()).unwrap();
    assert!(!chk.is_design);
    assert_eq!(chk.lambda, None);
}

#[test]
fn macwilliams_fixes_golay() {
    let we = weight_enumerator(&golay24(), &budget()).unwrap();
    assert_eq!(macwilliams(&we, 12).unwrap(), we);
}

#[test]
fn codewords_of_weight_match_naive() {
    let h = extended_hamming_8_4();
    let mut expect: Vec<BitVec> = naive_codewords(&h).into_iter().filter(|x| x.weight() == 4).collect();
    expect.sort_by(|a, b| a.lex_cmp(b));
    let mut got = codewords_of_weight(&h, 4, &budget()).unwrap();
    got.sort_by(|a, b| a.lex_cmp(b));
    assert_eq!(got, expect);
}

#[test]
fn intersections_and_subcodes() {
    let a = direct_sum(&[extended_hamming_8_4(), pairs_code(8).unwrap()]).unwrap();
    assert_eq!(a.intersection_dim(&a).unwrap(), a.k());
    let small = LinearCode::from_rows(16, vec![a.generator().row(0).clone()]).unwrap();
    assert!(small.is_subcode_of(&a));
    assert!(!a.is_subcode_of(&small));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bz_agrees_with_enumeration(seed in any::<u64>(), half in 4usize..=20, steps in 0usize..12) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_self_dual(2 * half, steps, &mut rng).unwrap();
        let full = min_weight_full(&c, &budget()).unwrap();
        let bz = min_weight_bz(&c, None).unwrap();
        prop_assert_eq!(bz.exact(), Some(full));
        prop_assert_eq!(bz.witness.weight(), full);
    }

    #[test]
    fn enumerator_invariants(seed in any::<u64>(), half in 1usize..=12, steps in 0usize..10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_self_dual(2 * half, steps, &mut rng).unwrap();
        let we = weight_enumerator(&c, &budget()).unwrap();
        prop_assert_eq!(we.total(), num_bigint::BigUint::from(1u64 << c.k()));
        prop_assert_eq!(we.coeff(0).to_string(), "1");
        let d = min_weight_full(&c, &budget()).unwrap();
        prop_assert_eq!(we.min_nonzero_weight(), Some(d));
        prop_assert_eq!(macwilliams(&we, c.k()).unwrap(), we.clone());
        if parity_class(&c).unwrap() == ParityClass::DoublyEven {
            prop_assert!(we.nonzero_weights().iter().all(|w| w % 4 == 0));
        }
    }
}
