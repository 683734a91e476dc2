use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use splitq::invariants::{f_tau, x_polys};
use splitq::oracle::{
    classify_matrix, count_ab_oracle, count_invariant, count_pattern_nonsingular, count_splitting,
    make_field, matrix_from_type, subspaces, Budget, FqField, FqMatrix, OracleError,
};
use splitq::splitting::{count_ab, sigma_main};
use splitq::types::types_of_size;
use splitq::SimilarityClassType;

fn field(p: u32, e: u32) -> Arc<FqField> {
    Arc::new(make_field(p, e, &Budget::default()).unwrap())
}

fn ty(s: &str) -> SimilarityClassType {
    s.parse().unwrap()
}

fn random_invertible(f: &Arc<FqField>, n: usize, rng: &mut StdRng) -> (FqMatrix, FqMatrix) {
    loop {
        let entries: Vec<u8> = (0..n * n).map(|_| rng.gen_range(0..f.order()) as u8).collect();
        let s = FqMatrix::from_fn(f, n, n, |r, c| entries[r * n + c]);
        if let Some(inv) = s.inverse() {
            return (s, inv);
        }
    }
}

#[test]
fn intersection_counts_match_for_size_four_over_f2() {
    let f2 = field(2, 1);
    let b = Budget::default();
    let mut realised = 0;
    for tau in types_of_size(4) {
        let Ok(t) = matrix_from_type(&tau, &f2, &b) else { continue };
        for a in 0..=4usize {
            for bb in 0..=a {
                let oracle = count_ab_oracle(&t, a, bb, &b).unwrap();
                let formula = count_ab(&tau, a as i64, bb as i64).unwrap().eval_i64(2);
                assert_eq!(BigInt::from(oracle), formula, "{tau} a={a} b={bb}");
            }
        }
        realised += 1;
    }
    assert!(realised >= 10);
}

#[test]
fn size_six_spot_checks_over_f2() {
    let f2 = field(2, 1);
    let b = Budget::default();
    for s in ["1:6", "6:1", "1:2;2:1,1"] {
        let tau = ty(s);
        let t = matrix_from_type(&tau, &f2, &b).unwrap();
        let count = count_splitting(&t, 3, &b).unwrap();
        assert_eq!(BigInt::from(count), sigma_main(&tau).unwrap().eval_i64(2), "{s}");
    }
    assert_eq!(subspaces(&f2, 6, 3, &b).unwrap().count(), 1395);
}

#[test]
fn generating_function_at_t_one_counts_all_invariant_subspaces() {
    let b = Budget::default();
    for (p, e) in [(2, 1), (3, 1)] {
        let f = field(p, e);
        let q = f.order() as i64;
        for n in 1..=4 {
            for tau in types_of_size(n) {
                let Ok(t) = matrix_from_type(&tau, &f, &b) else { continue };
                let total: u64 = (0..=n as usize).map(|k| count_invariant(&t, k, &b).unwrap()).sum();
                let poly = f_tau(&tau).unwrap();
                assert_eq!(poly.eval(&BigInt::from(q), &BigInt::from(1)).unwrap(), BigInt::from(total), "{tau}");
                assert_eq!(x_polys(&tau).unwrap().total_at(q), BigInt::from(total));
            }
        }
    }
}

#[test]
fn splitting_subspaces_by_pivot_set_are_pattern_matrices() {
    // For a diagonal operator with distinct eigenvalues, splitting
    // subspaces with RREF pivots c are counted by the pattern matrices of c.
    let b = Budget::default();
    for (p, e) in [(2, 2), (5, 1)] {
        let f = field(p, e);
        let t = matrix_from_type(&SimilarityClassType::regular_split_semisimple(4), &f, &b).unwrap();
        let mut by_pivots: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for w in subspaces(&f, 4, 2, &b).unwrap() {
            if w.basis().stack(&w.basis().apply_rows(&t)).rank() == 4 {
                *by_pivots.entry(w.pivots().iter().map(|c| c + 1).collect()).or_default() += 1;
            }
        }
        for (c, count) in &by_pivots {
            assert_eq!(*count, count_pattern_nonsingular(&f, c, &b).unwrap(), "pivots {c:?}");
        }
        assert_eq!(by_pivots.values().sum::<u64>(), count_splitting(&t, 2, &b).unwrap());
    }
}

#[test]
fn unrealizable_types_are_reported() {
    let f2 = field(2, 1);
    let err = matrix_from_type(&ty("1:1;1:1;1:1"), &f2, &Budget::default()).unwrap_err();
    assert!(matches!(err, OracleError::NotRealizable(..)));
}

#[test]
fn seeded_similarity_invariance_size_four() {
    let f3 = field(3, 1);
    let b = Budget::default();
    let mut rng = StdRng::seed_from_u64(7);
    for tau in types_of_size(4) {
        let Ok(t) = matrix_from_type(&tau, &f3, &b) else { continue };
        let (s, s_inv) = random_invertible(&f3, 4, &mut rng);
        let conj = s.mul(&t).mul(&s_inv);
        assert_eq!(classify_matrix(&conj, &b).unwrap(), tau);
        assert_eq!(count_splitting(&conj, 2, &b).unwrap(), count_splitting(&t, 2, &b).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn invariant_counts_are_similarity_invariant(type_index in 0usize..22, seed in any::<u64>()) {
        let f2 = field(2, 1);
        let b = Budget::default();
        let tau = &types_of_size(4)[type_index];
        let t = matrix_from_type(tau, &f2, &b);
        prop_assume!(t.is_ok());
        let t = t.unwrap();
        let mut rng = StdRng::seed_from_u64(seed);
        let (s, s_inv) = random_invertible(&f2, 4, &mut rng);
        let conj = s.mul(&t).mul(&s_inv);
        for k in 0..=4 {
            prop_assert_eq!(count_invariant(&conj, k, &b).unwrap(), count_invariant(&t, k, &b).unwrap());
        }
        prop_assert_eq!(count_splitting(&conj, 2, &b).unwrap(), count_splitting(&t, 2, &b).unwrap());
    }
}
