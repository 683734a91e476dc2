//! q-integers, Gaussian binomials and ordinary binomials.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::BivarPoly;
use crate::poly::UniPoly;

/// `[n]_q = 1 + q + ... + q^{n-1}`, taken to be zero for `n <= 0`.
pub fn q_integer(n: i64) -> UniPoly {
    if n <= 0 {
        return UniPoly::zero();
    }
    UniPoly::from_coeffs(vec![BigInt::one(); n as usize])
}

/// Gaussian binomial `[n choose k]_q`; zero unless `0 <= k <= n`.
pub fn gaussian_binomial(n: i64, k: i64) -> UniPoly {
    if k < 0 || k > n {
        return UniPoly::zero();
    }
    let k = k.min(n - k) as usize;
    let n = n as usize;
    // row[j] holds [i choose j]_q while sweeping i upward
    let mut row = vec![UniPoly::zero(); k + 1];
    row[0] = UniPoly::one();
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = &row[j - 1] + &row[j].shift(j);
        }
    }
    row.swap_remove(k)
}

/// All Gaussian binomials `[i choose j]_q` for `0 <= j <= i <= n_max`,
/// filled once by the q-Pascal rule.
#[derive(Clone, Debug)]
pub struct GaussianTable {
    rows: Vec<Vec<UniPoly>>,
}

impl GaussianTable {
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<UniPoly>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![UniPoly::one()]);
        for i in 1..=n_max {
            let prev = &rows[i - 1];
            let mut row = Vec::with_capacity(i + 1);
            row.push(UniPoly::one());
            for j in 1..i {
                row.push(&prev[j - 1] + &prev[j].shift(j));
            }
            row.push(UniPoly::one());
            rows.push(row);
        }
        Self { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// Same out-of-range convention as [`gaussian_binomial`]. Panics if `n`
    /// exceeds the table.
    pub fn get(&self, n: i64, k: i64) -> UniPoly {
        if k < 0 || k > n {
            return UniPoly::zero();
        }
        self.rows[n as usize][k as usize].clone()
    }
}

/// `x(x-1)/2` for any integer `x`.
pub fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// Ordinary binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Checks the q-binomial theorem
/// `sum_j [n j]_q q^{C(j,2)} x^j = prod_{j<n} (1 + q^j x)` at `x = c * q^e`,
/// comparing both sides as Laurent polynomials in `q`.
pub fn q_binomial_theorem_check(n: u32, x_coefficient: i64, x_exponent: i64) -> bool {
    let x = BivarPoly::monomial(x_coefficient, x_exponent, 0);
    let mut lhs = BivarPoly::zero();
    let mut x_pow = BivarPoly::one();
    for j in 0..=n {
        let qbin = BivarPoly::from_uni(&gaussian_binomial(n as i64, j as i64), 0);
        let shift = BivarPoly::monomial(1, binom2(j as i64), 0);
        lhs = &lhs + &(&(&qbin * &shift) * &x_pow);
        x_pow = &x_pow * &x;
    }
    let rhs: BivarPoly = (0..n)
        .map(|j| &BivarPoly::one() + &(&BivarPoly::monomial(1, j as i64, 0) * &x))
        .product();
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_integers() {
        assert_eq!(q_integer(0), UniPoly::zero());
        assert_eq!(q_integer(-2), UniPoly::zero());
        assert_eq!(q_integer(1), UniPoly::one());
        assert_eq!(q_integer(3), UniPoly::from_i64s(&[1, 1, 1]));
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(gaussian_binomial(4, 2), UniPoly::from_i64s(&[1, 1, 2, 1, 1]));
        for n in 0..6 {
            assert_eq!(gaussian_binomial(n, 0), UniPoly::one());
        }
        assert_eq!(gaussian_binomial(3, 5), UniPoly::zero());
        assert_eq!(gaussian_binomial(3, -1), UniPoly::zero());
        assert_eq!(gaussian_binomial(-2, 0), UniPoly::zero());
    }

    #[test]
    fn table_agrees_with_direct() {
        let table = GaussianTable::new(12);
        for n in 0..=12 {
            for k in -1..=n + 1 {
                assert_eq!(table.get(n, k), gaussian_binomial(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn gaussian_properties() {
        for n in 0..=12i64 {
            for k in 0..=n {
                let g = gaussian_binomial(n, k);
                if n > 0 {
                    let pascal = &gaussian_binomial(n - 1, k - 1) + &gaussian_binomial(n - 1, k).shift(k as usize);
                    assert_eq!(g, pascal);
                }
                assert_eq!(g, gaussian_binomial(n, n - k));
                assert_eq!(g.eval_i64(1), binomial(n as u64, k));
                assert_eq!(g.degree(), Some(((n - k) * k) as usize));
            }
        }
    }

    #[test]
    fn binom2_values() {
        assert_eq!(binom2(-1), 1);
        assert_eq!(binom2(0), 0);
        assert_eq!(binom2(1), 0);
        assert_eq!(binom2(3), 3);
        // C(-m+1, 2) = C(m, 2)
        for m in 0..10 {
            assert_eq!(binom2(1 - m), binom2(m));
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(4, 5), BigInt::zero());
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(binomial(20, 10), BigInt::from(184756));
    }

    #[test]
    fn q_binomial_theorem() {
        assert!(q_binomial_theorem_check(2, -1, 0));
        assert!(q_binomial_theorem_check(3, 1, 1));
        assert!(q_binomial_theorem_check(0, 7, -3));
        for n in 0..7 {
            for e in -6..4 {
                assert!(q_binomial_theorem_check(n, -1, e));
                assert!(q_binomial_theorem_check(n, 2, e));
            }
        }
    }
}
