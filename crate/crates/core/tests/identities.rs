use num_bigint::BigInt;
use proptest::prelude::*;
use splitq::chords::{diagrams, q_minus_one_pow, touchard_enum, touchard_refine, touchard_riordan_rhs};
use splitq::invariants::x_polys;
use splitq::qcomb::{binomial, gaussian_binomial};
use splitq::splitting::{
    degree_matrix, identity_uniquely_maximal, predicted_leading_coeff, satisfies_maxperm_hypothesis,
    sigma_from_x, sigma_main, sigma_via_recurrence, xmatrix_determinant, IntersectionCountTable,
};
use splitq::types::types_of_size;
use splitq::{SimilarityClassType, UniPoly};

#[test]
fn sigma_values_from_small_types() {
    let cases = [
        ("1:2", vec![0, 1]),
        ("1:1,1", vec![0]),
        ("1:1;1:1", vec![-1, 1]),
        ("2:1", vec![1, 1]),
        ("1:4", vec![0, 0, 0, 0, 1]),
    ];
    for (s, coeffs) in cases {
        let tau: SimilarityClassType = s.parse().unwrap();
        assert_eq!(sigma_main(&tau).unwrap(), UniPoly::from_i64s(&coeffs), "{s}");
    }
    assert_eq!(sigma_main(&"2:1".parse().unwrap()).unwrap().eval_i64(3), BigInt::from(4));
}

#[test]
fn size_eight_spot_checks_agree() {
    for s in ["1:8", "8:1", "1:1;1:1;1:1;1:1;1:1;1:1;1:1;1:1", "2:2,1;1:1,1", "4:1;2:1;1:1;1:1"] {
        let tau: SimilarityClassType = s.parse().unwrap();
        assert_eq!(sigma_main(&tau).unwrap(), sigma_via_recurrence(&tau).unwrap(), "{s}");
    }
}

#[test]
fn sigma_is_zero_when_every_eigenspace_is_too_large() {
    // the generator bound: a scalar block larger than m leaves nothing
    for m in 1..=3u32 {
        assert!(sigma_main(&SimilarityClassType::scalar(2 * m)).unwrap().is_zero());
    }
}

#[test]
fn table_contains_splitting_count() {
    for tau in types_of_size(4) {
        let table = IntersectionCountTable::for_type(&tau).unwrap();
        let sigma = sigma_main(&tau).unwrap();
        assert_eq!(table.get(2, 0), Some(&sigma));
        for a in 0..=4 {
            let row: UniPoly = (0..=a).filter_map(|b| table.get(a, b).cloned()).sum();
            assert_eq!(row, gaussian_binomial(4, a as i64), "{tau} a={a}");
        }
    }
}

#[test]
fn sigma_at_q_one_vanishes_for_scalar_free_counts() {
    // an alternating sum of Gaussian binomials collapses at q = 1
    let x: Vec<UniPoly> = (0..=4).map(|k| gaussian_binomial(4, k)).collect();
    assert!(sigma_from_x(&x).unwrap().is_zero());
}

#[test]
fn touchard_three_ways_agree() {
    for m in 0..=7 {
        let enumerated = touchard_enum(m).unwrap();
        assert_eq!(enumerated, touchard_refine(m), "m={m}");
        assert_eq!(touchard_riordan_rhs(m), &q_minus_one_pow(m) * &enumerated);
        let total: BigInt = enumerated.coeffs().iter().sum();
        assert_eq!(total, BigInt::from(diagrams(m).len()));
    }
    assert_eq!(touchard_refine(3), UniPoly::from_i64s(&[5, 6, 3, 1]));
}

#[test]
fn xmatrix_leading_coefficient_when_identity_dominates() {
    for m in 1..=4 {
        let a = degree_matrix(m).unwrap();
        if satisfies_maxperm_hypothesis(&a) && identity_uniquely_maximal(&a) {
            let det = xmatrix_determinant(m).unwrap();
            assert_eq!(det.leading_coeff(), Some(&predicted_leading_coeff(m).unwrap()), "m={m}");
        }
    }
}

#[test]
fn x_polys_at_q_one_are_sums_of_binomials_for_scalar_types() {
    for n in 1..=6u32 {
        let x = x_polys(&SimilarityClassType::scalar(n)).unwrap().x;
        for (k, xk) in x.iter().enumerate() {
            assert_eq!(xk.eval_i64(1), binomial(n as u64, k as i64));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn routes_agree_on_random_size_six_types(i in 0usize..103) {
        let tau = &types_of_size(6)[i];
        prop_assert_eq!(sigma_main(tau).unwrap(), sigma_via_recurrence(tau).unwrap());
    }

    #[test]
    fn x_vectors_are_palindromic_in_j(i in 0usize..42) {
        let tau = &types_of_size(5)[i];
        let x = x_polys(tau).unwrap().x;
        for j in 0..=5 {
            prop_assert_eq!(&x[j], &x[5 - j]);
        }
    }
}
