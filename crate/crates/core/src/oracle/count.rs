use std::sync::Arc;

use super::field::FqField;
use super::matrix::FqMatrix;
use super::subspace::subspaces;
use super::{Budget, OracleError};
use crate::chords::{contribution_raw, q_minus_one_pow};
use crate::poly::UniPoly;
use crate::qcomb::binom2;

fn require_square(t: &FqMatrix) -> Result<usize, OracleError> {
    if !t.is_square() {
        return Err(OracleError::DimensionMismatch(format!(
            "operator must be square, got {}x{}",
            t.rows(),
            t.cols()
        )));
    }
    Ok(t.rows())
}

/// Number of `k`-dimensional `T`-invariant subspaces.
pub fn count_invariant(t: &FqMatrix, k: usize, budget: &Budget) -> Result<u64, OracleError> {
    Ok(intersection_profile(t, k, budget)?[k])
}

/// `profile[b]` = number of `a`-dimensional `W` with `dim(W ∩ T^{-1}W) = b`,
/// using `dim(W ∩ T^{-1}W) = 2a - dim(W + TW)`.
pub fn intersection_profile(t: &FqMatrix, a: usize, budget: &Budget) -> Result<Vec<u64>, OracleError> {
    let n = require_square(t)?;
    let mut profile = vec![0u64; a + 1];
    for w in subspaces(t.field(), n, a, budget)? {
        let span = w.basis().stack(&w.basis().apply_rows(t)).rank();
        profile[2 * a - span] += 1;
    }
    Ok(profile)
}

pub fn count_ab_oracle(t: &FqMatrix, a: usize, b: usize, budget: &Budget) -> Result<u64, OracleError> {
    if b > a {
        return Err(OracleError::DimensionMismatch(format!("need b <= a, got a={a} b={b}")));
    }
    Ok(intersection_profile(t, a, budget)?[b])
}

/// Number of `m`-dimensional `W` with `W + TW + ... + T^{d-1}W` the whole
/// space; `T` must be `dm x dm`.
pub fn count_splitting_degree(t: &FqMatrix, m: usize, d: usize, budget: &Budget) -> Result<u64, OracleError> {
    let n = require_square(t)?;
    if d == 0 || n != d * m {
        return Err(OracleError::DimensionMismatch(format!(
            "splitting needs an operator of size d*m = {}, got {n}",
            d * m
        )));
    }
    let mut count = 0;
    for w in subspaces(t.field(), n, m, budget)? {
        let mut stacked = w.basis().clone();
        let mut image = w.basis().clone();
        for _ in 1..d {
            image = image.apply_rows(t);
            stacked = stacked.stack(&image);
        }
        if stacked.rank() == n {
            count += 1;
        }
    }
    Ok(count)
}

/// `m`-dimensional `W` with `W + TW = F_q^{2m}`.
pub fn count_splitting(t: &FqMatrix, m: usize, budget: &Budget) -> Result<u64, OracleError> {
    count_splitting_degree(t, m, 2, budget)
}

fn check_pivots(c: &[usize]) -> Result<(), OracleError> {
    let m = c.len();
    let ok = c.windows(2).all(|w| w[0] < w[1]) && c.iter().all(|&x| 1 <= x && x <= 2 * m);
    if !ok {
        return Err(OracleError::DimensionMismatch(format!(
            "pivots {c:?} must increase strictly within 1..={}",
            2 * m
        )));
    }
    Ok(())
}

/// Zero-based `(i, j)` positions of `Y` left free by one-based pivots `c`:
/// `Y_ij` is forced to zero when `j < c_i - (i - 1)` (one-based).
pub fn pattern_free_entries(c: &[usize]) -> Vec<(usize, usize)> {
    let m = c.len();
    (0..m)
        .flat_map(|i| (0..m).filter(move |&j| j + 1 + i >= c[i]).map(move |j| (i, j)))
        .collect()
}

/// Non-singular `m x m` matrices over `field` with the zero pattern of
/// [`pattern_free_entries`], by exhaustive sweep.
pub fn count_pattern_nonsingular(field: &Arc<FqField>, c: &[usize], budget: &Budget) -> Result<u64, OracleError> {
    check_pivots(c)?;
    let m = c.len();
    let free = pattern_free_entries(c);
    let q = field.order() as u8;
    budget.check("pattern matrices", (q as u128).saturating_pow(free.len() as u32))?;
    let mut y = FqMatrix::zeros(field, m, m);
    let mut digits = vec![0u8; free.len()];
    let mut count = 0;
    loop {
        for (&(i, j), &d) in free.iter().zip(&digits) {
            y.set(i, j, d);
        }
        if y.rank() == m {
            count += 1;
        }
        let mut carry = true;
        for d in digits.iter_mut() {
            *d += 1;
            if *d < q {
                carry = false;
                break;
            }
            *d = 0;
        }
        if carry {
            return Ok(count);
        }
    }
}

/// `(q-1)^m q^{C(m,2)} prod_j [r_j - (j-1)]_q` for one-based pivots `c`.
pub fn pattern_closed_form(c: &[usize]) -> UniPoly {
    let m = c.len();
    (&q_minus_one_pow(m) * &contribution_raw(c)).shift(binom2(m as i64) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{make_field, matrix_from_type, FqPoly};
    use crate::types::SimilarityClassType;

    fn f(p: u32, e: u32) -> Arc<FqField> {
        Arc::new(make_field(p, e, &Budget::default()).unwrap())
    }

    #[test]
    fn splitting_examples() {
        let f2 = f(2, 1);
        let b = Budget::default();
        let jordan = FqMatrix::companion(&f2, &FqPoly::new(vec![0, 0, 1]));
        assert_eq!(count_splitting(&jordan, 1, &b).unwrap(), 2);
        let simple = FqMatrix::companion(&f2, &FqPoly::new(vec![1, 1, 1]));
        assert_eq!(count_splitting(&simple, 1, &b).unwrap(), 3);
        let nil4 = matrix_from_type(&"1:4".parse::<SimilarityClassType>().unwrap(), &f2, &b).unwrap();
        assert_eq!(count_splitting(&nil4, 2, &b).unwrap(), 16);
        assert!(matches!(count_splitting(&nil4, 1, &b), Err(OracleError::DimensionMismatch(_))));
        let rect = FqMatrix::zeros(&f2, 2, 3);
        assert!(matches!(count_invariant(&rect, 1, &b), Err(OracleError::DimensionMismatch(_))));
    }

    #[test]
    fn profile_rows_sum_to_grassmannian() {
        let f3 = f(3, 1);
        let b = Budget::default();
        let t = FqMatrix::companion(&f3, &FqPoly::new(vec![1, 0, 2, 0, 1]));
        for a in 0..=4 {
            let total: u64 = intersection_profile(&t, a, &b).unwrap().iter().sum();
            let expect = crate::qcomb::gaussian_binomial(4, a as i64).eval_i64(3);
            assert_eq!(num_bigint::BigInt::from(total), expect);
            assert_eq!(count_ab_oracle(&t, a, a, &b).unwrap(), count_invariant(&t, a, &b).unwrap());
        }
    }

    #[test]
    fn splitting_degree_three() {
        // a simple 3x3 operator: every line W has W + TW + T^2W = F_q^3
        let f2 = f(2, 1);
        let t = FqMatrix::companion(&f2, &FqPoly::new(vec![1, 1, 0, 1]));
        assert_eq!(count_splitting_degree(&t, 1, 3, &Budget::default()).unwrap(), 7);
        let zero = FqMatrix::zeros(&f2, 3, 3);
        assert_eq!(count_splitting_degree(&zero, 1, 3, &Budget::default()).unwrap(), 0);
    }

    #[test]
    fn pattern_examples() {
        let b = Budget::default();
        assert_eq!(count_pattern_nonsingular(&f(2, 1), &[1], &b).unwrap(), 1);
        assert_eq!(count_pattern_nonsingular(&f(2, 1), &[1, 2], &b).unwrap(), 6);
        assert_eq!(count_pattern_nonsingular(&f(3, 1), &[1, 3], &b).unwrap(), 12);
        assert_eq!(count_pattern_nonsingular(&f(3, 1), &[2, 4], &b).unwrap(), 0);
        assert_eq!(pattern_closed_form(&[1, 3]).eval_i64(3), 12.into());
        assert_eq!(pattern_free_entries(&[1, 3]), vec![(0, 0), (0, 1), (1, 1)]);
        assert!(count_pattern_nonsingular(&f(2, 1), &[2, 1], &b).is_err());
        assert!(count_pattern_nonsingular(&f(2, 1), &[1, 5], &b).is_err());
    }
}
