use num_bigint::BigUint;

use super::*;
use crate::code::macwilliams;

fn int(s: &str) -> BigRational {
    BigRational::from_integer(s.parse().unwrap())
}

fn check_values(v: &[BigRational], expected: &[(usize, &str)]) {
    for &(i, c) in expected {
        assert_eq!(v[i], int(c), "weight {i}");
    }
}

#[test]
fn length_56_enumerators() {
    let gs = solve_s_extremal(Family::F8, 2).unwrap();
    assert_eq!(gs.n, 56);
    check_values(
        &gs.code_we,
        &[(0, "1"), (10, "308"), (12, "3990"), (14, "42900"), (16, "311850"), (18, "1583120"), (20, "5847688")],
    );
    check_values(&gs.shadow_we, &[(12, "8400"), (16, "620928"), (20, "11704000")]);
}

#[test]
fn length_80_enumerators_and_coset() {
    let gs = solve_s_extremal(Family::F8, 3).unwrap();
    check_values(&gs.code_we, &[(14, "3200"), (16, "47645"), (18, "640640"), (20, "6452992")]);
    check_values(&gs.shadow_we, &[(16, "99840"), (20, "12859392")]);
    let coset = theorem1_coset_we(&gs).unwrap();
    let expect = [(14, "3200"), (16, "49920"), (18, "640640"), (20, "6429696"), (22, "49304320"), (24, "295093760")];
    for (i, c) in expect {
        assert_eq!(coset[i].to_string(), c);
    }
    assert!((0..14).all(|i| coset[i].is_zero()));
    let mass: BigInt = coset.iter().sum();
    assert_eq!(mass, BigInt::one() << 40);
}

/// Solves the same constraints by plain rational elimination on the
/// truncated basis terms.
fn oracle_solution(family: Family, k: usize) -> Vec<BigRational> {
    let n = family.length(k);
    let m = n / 8;
    let code_top = (family.min_weight(k) - 1) / 2;
    let shadow_top = (family.shadow_min_weight(k) - 1) / 2;
    let terms: Vec<GleasonBasisTerm> =
        (0..=m).map(|j| basis_term(n, j, code_top.max(shadow_top)).unwrap()).collect();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for t in 0..=code_top {
        let mut r: Vec<BigRational> =
            terms.iter().map(|b| BigRational::from_integer(b.code[t].clone())).collect();
        r.push(if t == 0 { BigRational::one() } else { BigRational::zero() });
        rows.push(r);
    }
    for t in 0..=shadow_top {
        let mut r: Vec<BigRational> = terms.iter().map(|b| b.shadow[t].clone()).collect();
        r.push(BigRational::zero());
        rows.push(r);
    }
    let mut rank = 0;
    let mut pivots = Vec::new();
    for col in 0..=m {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let lead = rows[rank][col].clone();
        for x in rows[rank].iter_mut() {
            *x /= &lead;
        }
        let pivot = rows[rank].clone();
        for (i, r) in rows.iter_mut().enumerate() {
            if i != rank && !r[col].is_zero() {
                let f = r[col].clone();
                for (x, y) in r.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    assert_eq!(rank, m + 1, "oracle expects a unique solution");
    assert!(rows[rank..].iter().all(|r| r.iter().all(Zero::is_zero)));
    let mut sol = vec![BigRational::zero(); m + 1];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = rows[i][m + 1].clone();
    }
    sol
}

#[test]
fn solver_matches_rational_elimination() {
    for k in 1..=5 {
        for family in [Family::F8, Family::F16] {
            let gs = solve_s_extremal(family, k).unwrap();
            assert_eq!(gs.sol, oracle_solution(family, k), "{family} k={k}");
        }
    }
}

#[test]
fn full_expansion_matches_truncated_terms() {
    let gs = solve_s_extremal(Family::F16, 2).unwrap();
    let n = gs.n;
    for t in 0..=n / 2 {
        let mut a = BigRational::zero();
        let mut b = BigRational::zero();
        for (j, x) in gs.sol.iter().enumerate() {
            let term = basis_term(n, j, n / 2).unwrap();
            a += x * BigRational::from_integer(term.code[t].clone());
            b += x * &term.shadow[t];
        }
        assert_eq!(gs.code_we[2 * t], a);
        assert_eq!(gs.shadow_we[2 * t], b);
    }
}

#[test]
fn solution_invariants() {
    for family in [Family::F8, Family::F16] {
        for k in 1..=8 {
            let gs = solve_s_extremal(family, k).unwrap();
            let d = family.min_weight(k);
            let ds = family.shadow_min_weight(k);
            assert_eq!(gs.code_we[0], BigRational::one());
            assert!((1..d).all(|i| gs.code_we[i].is_zero()));
            assert!((0..ds).all(|i| gs.shadow_we[i].is_zero()));
            assert!(gs.is_integral());
            let a = gs.code_enum().unwrap();
            let b = gs.shadow_enum().unwrap();
            let mass = BigUint::one() << (gs.n / 2);
            assert_eq!(a.total(), mass);
            assert_eq!(b.total(), mass);
            assert_eq!(macwilliams(&a, gs.n / 2).unwrap(), a);
            let (cm, sm) = min_coefficient(&gs);
            assert!(!cm.is_negative() && !sm.is_negative());
            assert_eq!(first_negative_weight(&gs), None);
        }
    }
}

#[test]
fn shadow_weights_follow_the_length() {
    // shadow weights are congruent to n/2 modulo 4
    let gs = solve_s_extremal(Family::F8, 4).unwrap();
    let r = (gs.n / 2) % 4;
    for (i, b) in gs.shadow_we.iter().enumerate() {
        assert!(b.is_zero() || i % 4 == r, "weight {i}");
    }
}

#[test]
fn coset_enumerator_rules() {
    let f16 = solve_s_extremal(Family::F16, 1).unwrap();
    assert!(theorem1_coset_we(&f16).is_err());
    let gs = solve_s_extremal(Family::F8, 1).unwrap();
    let coset = theorem1_coset_we(&gs).unwrap();
    assert_eq!(coset.iter().sum::<BigInt>(), BigInt::one() << 16);
    assert!((0..6).all(|i| coset[i].is_zero()));
    assert!(coset[6].is_positive());
}

#[test]
fn small_scan_is_nonnegative() {
    let rows = scan_family(Family::F8, 1, 10).unwrap();
    assert_eq!(rows.iter().map(|r| r.k).collect::<Vec<_>>(), (1..=10).collect::<Vec<_>>());
    for r in &rows {
        match &r.outcome {
            ScanOutcome::Solved { unique, code_min, shadow_min, first_negative_weight, integral } => {
                assert!(*unique && *integral);
                assert_eq!((*code_min, *shadow_min), (MinSign::NonNegative, MinSign::NonNegative));
                assert_eq!(*first_negative_weight, None);
            }
            ScanOutcome::Inconsistent => panic!("k={} inconsistent", r.k),
        }
    }
    let csv = scan_to_csv(&rows[..2], false);
    assert_eq!(csv, format!("{SCAN_CSV_HEADER}\n1,32,true,+,+,,\n2,56,true,+,+,,\n"));
    assert!(scan_to_csv(&rows[..1], true).lines().nth(1).unwrap().split(',').nth(6).unwrap().parse::<f64>().is_ok());
    assert!(scan_family(Family::F8, 0, 3).is_err());
    assert!(scan_family(Family::F8, 4, 3).is_err());
}

#[test]
fn json_export() {
    let gs = solve_s_extremal(Family::F8, 1).unwrap();
    let v = serde_json::to_value(&gs).unwrap();
    assert_eq!(v["n"], 32);
    assert_eq!(v["code_we"]["0"], "1");
    assert!(v["code_we"].get("2").is_none());
    assert_eq!(rational_string(&BigRational::new(3.into(), 4.into())), "3/4");
    assert_eq!(integer_map(&[BigInt::one(), BigInt::zero()]).len(), 1);
}

#[test]
fn family_helpers() {
    assert_eq!(Family::from_residue(16).unwrap(), Family::F16);
    assert!(Family::from_residue(0).is_err());
    assert_eq!(Family::F16.length(1), 40);
    assert_eq!(Family::F8.shadow_min_weight(3), 16);
    assert_eq!(Family::F16.shadow_min_weight(3), 16);
    assert!(solve_s_extremal(Family::F8, 0).is_err());
}

#[test]
fn extremal_doubly_even_enumerators() {
    use crate::catalog::{golay24, reed_muller};
    use crate::code::weight_enumerator;
    use crate::config::Budget;
    let b = Budget::default();
    assert_eq!(extremal_doubly_even_enumerator(24).unwrap(), weight_enumerator(&golay24(), &b).unwrap());
    assert_eq!(extremal_doubly_even_enumerator(32).unwrap(), weight_enumerator(&reed_muller(2, 5).unwrap(), &b).unwrap());
    let e80 = extremal_doubly_even_enumerator(80).unwrap();
    // minimum-weight supports form a 3-(80,16,665) design: b = 665 C(80,3) / C(16,3)
    assert_eq!(e80.coeff(16).to_string(), "97565");
    assert_eq!(e80.min_nonzero_weight(), Some(16));
    assert_eq!(macwilliams(&e80, 40).unwrap(), e80);
    assert_eq!(crate::coset::delsarte_bound(&e80), 14);
    assert!(extremal_doubly_even_enumerator(12).is_err());
}

#[test]
fn length_80_printed_series() {
    let gs = solve_s_extremal(Family::F8, 3).unwrap();
    check_values(
        &gs.code_we,
        &[
            (22, "49304320"), (24, "294979360"), (26, "1398270720"), (28, "5294263040"),
            (30, "16137190784"), (32, "39853463650"), (34, "80135036800"), (36, "131652451840"),
            (38, "177157460480"), (40, "195552496832"),
        ],
    );
    check_values(
        &gs.shadow_we,
        &[
            (24, "590187520"), (28, "10587822080"), (32, "79708428800"), (36, "263302574080"),
            (40, "391107684352"),
        ],
    );
    let coset = theorem1_coset_we(&gs).unwrap();
    let printed = [
        (26, "1398270720"), (28, "5293911040"), (30, "16137190784"), (32, "39854214400"),
        (34, "80135036800"), (36, "131651287040"), (38, "177157460480"), (40, "195553842176"),
    ];
    for (i, c) in printed {
        assert_eq!(coset[i].to_string(), c, "weight {i}");
    }
}
