//! Counting `m`-dimensional splitting subspaces of an operator on `F_q^{2m}`.
//!
//! Two independent routes are provided:
//!
//! * [`sigma_main`]: the closed alternating sum
//!   `q^{C(m,2)} sum_{j=0}^{2m} (-1)^j X_j(q) q^{C(m-j+1,2)}`
//!   over invariant-subspace counts `X_j`;
//! * [`sigma_via_recurrence`]: the count `|(m, 0)|` read off the table of
//!   intersection counts `|(a, b)|` = number of `a`-dimensional `W` with
//!   `dim(W ∩ T^{-1}W) = b`, filled by a recurrence in which the `X_j` are
//!   the only operator-dependent input.
//!
//! The remaining functions check the ingredients behind the closed form:
//! the types `tau_i` whose counts vanish, the q-binomial sums that vanish for
//! them, and the non-singularity of the matrix of their `X_j`.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::invariants::x_polys;
use crate::poly::{PolyError, UniPoly};
use crate::qcomb::{binom2, gaussian_binomial, GaussianTable};
use crate::types::SimilarityClassType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplittingError {
    #[error("type has odd size {0}; splitting counts need size 2m")]
    OddSize(u32),
    #[error("{0}")]
    Range(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn x_vector(tau: &SimilarityClassType) -> Result<Vec<UniPoly>, SplittingError> {
    Ok(x_polys(tau)?.x)
}

fn signed_monomial(j: i64, exponent: i64) -> UniPoly {
    let sign = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    UniPoly::monomial(sign, exponent as usize)
}

/// The closed alternating sum for an invariant-count vector `x = (X_0..X_{2m})`.
pub fn sigma_from_x(x: &[UniPoly]) -> Result<UniPoly, SplittingError> {
    let n = x.len().checked_sub(1).ok_or_else(|| SplittingError::Range("empty X vector".into()))?;
    if n % 2 == 1 {
        return Err(SplittingError::OddSize(n as u32));
    }
    let m = (n / 2) as i64;
    let sum: UniPoly = x
        .iter()
        .enumerate()
        .map(|(j, xj)| xj * &signed_monomial(j as i64, binom2(m - j as i64 + 1)))
        .sum();
    Ok(sum.shift(binom2(m) as usize))
}

/// Number of `m`-dimensional splitting subspaces for any operator of type
/// `tau` (size `2m`), as a polynomial in `q`.
pub fn sigma_main(tau: &SimilarityClassType) -> Result<UniPoly, SplittingError> {
    if tau.size() % 2 == 1 {
        return Err(SplittingError::OddSize(tau.size()));
    }
    sigma_from_x(&x_vector(tau)?)
}

/// `q^{C(m,2)} (q^{C(m+1,2)} + q^{C(m,2)})`, the count for a simple operator.
pub fn sigma_simple_closed(m: u32) -> UniPoly {
    let m = m as i64;
    let inner = &UniPoly::monomial(1, binom2(m + 1) as usize) + &UniPoly::monomial(1, binom2(m) as usize);
    inner.shift(binom2(m) as usize)
}

/// `|(a, b)|` for all `n >= a >= b >= 0`, as polynomials in `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionCountTable {
    n: usize,
    entries: BTreeMap<(usize, usize), UniPoly>,
}

impl IntersectionCountTable {
    /// Fills the table from `x = (X_0, ..., X_n)`.
    ///
    /// `(a, a)` is seeded with `X_a`. For `a > b`,
    /// `|(a,b)| = X_b [n-b, a-b] - X_a [a, b]
    ///          + sum_{j<b} |(b,j)| [n-2b+j, a-2b+j] - sum_{b<k<a} |(a,k)| [k, b]`,
    /// which only refers to rows `b < a` and to entries `(a, k)` with `k > b`.
    pub fn build(x: &[UniPoly]) -> Result<Self, SplittingError> {
        let n = x.len().checked_sub(1).ok_or_else(|| SplittingError::Range("empty X vector".into()))?;
        let qb = GaussianTable::new(n);
        let g = |top: i64, bottom: i64| -> UniPoly {
            if top < 0 {
                UniPoly::zero()
            } else {
                qb.get(top, bottom)
            }
        };
        let mut entries: BTreeMap<(usize, usize), UniPoly> = BTreeMap::new();
        for a in 0..=n {
            entries.insert((a, a), x[a].clone());
            for b in (0..a).rev() {
                let (ai, bi, ni) = (a as i64, b as i64, n as i64);
                let mut acc = &(&x[b] * &g(ni - bi, ai - bi)) - &(&x[a] * &g(ai, bi));
                for j in 0..b {
                    let ji = j as i64;
                    acc = &acc + &(&entries[&(b, j)] * &g(ni - 2 * bi + ji, ai - 2 * bi + ji));
                }
                for k in b + 1..a {
                    acc = &acc - &(&entries[&(a, k)] * &g(k as i64, bi));
                }
                entries.insert((a, b), acc);
            }
        }
        Ok(Self { n, entries })
    }

    pub fn for_type(tau: &SimilarityClassType) -> Result<Self, SplittingError> {
        Self::build(&x_vector(tau)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> Option<&UniPoly> {
        self.entries.get(&(a, b))
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &UniPoly)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, v))
    }
}

/// `|(a, b)|` for operators of type `tau`.
pub fn count_ab(tau: &SimilarityClassType, a: i64, b: i64) -> Result<UniPoly, SplittingError> {
    let n = tau.size() as i64;
    if !(0 <= b && b <= a && a <= n) {
        return Err(SplittingError::Range(format!("need {n} >= a >= b >= 0, got a={a} b={b}")));
    }
    let table = IntersectionCountTable::for_type(tau)?;
    Ok(table.get(a as usize, b as usize).expect("in range").clone())
}

/// Splitting count as `|(m, 0)|` from the intersection-count recurrence.
pub fn sigma_via_recurrence(tau: &SimilarityClassType) -> Result<UniPoly, SplittingError> {
    let n = tau.size();
    if n % 2 == 1 {
        return Err(SplittingError::OddSize(n));
    }
    let table = IntersectionCountTable::for_type(tau)?;
    Ok(table.get((n / 2) as usize, 0).expect("in range").clone())
}

fn check_tau_range(m: u32, i: u32) -> Result<(), SplittingError> {
    if m == 0 || i == 0 || i > m {
        return Err(SplittingError::Range(format!("need 1 <= i <= m, got m={m} i={i}")));
    }
    Ok(())
}

/// `X_j = [m+i, j] + [m+i, j-m+i]` for `0 <= j <= 2m`.
pub fn tau_i_x_vector(m: u32, i: u32) -> Result<Vec<UniPoly>, SplittingError> {
    check_tau_range(m, i)?;
    let (m, i) = (m as i64, i as i64);
    Ok((0..=2 * m)
        .map(|j| &gaussian_binomial(m + i, j) + &gaussian_binomial(m + i, j - m + i))
        .collect())
}

/// `sum_{j=0}^{2m} (-1)^j [m+i, j-k] q^{C(m-j+1,2)} == 0` for
/// `1 <= i <= m`, `0 <= k <= m-i`.
pub fn vanishing_check(m: u32, i: u32, k: u32) -> Result<bool, SplittingError> {
    check_tau_range(m, i)?;
    if k > m - i {
        return Err(SplittingError::Range(format!("need 0 <= k <= m-i, got k={k}")));
    }
    let (m, i, k) = (m as i64, i as i64, k as i64);
    let sum: UniPoly = (0..=2 * m)
        .map(|j| &gaussian_binomial(m + i, j - k) * &signed_monomial(j, binom2(m - j + 1)))
        .sum();
    Ok(sum.is_zero())
}

/// True iff the closed sum over the `tau_i` invariant counts is zero.
pub fn tau_i_zero_check(m: u32, i: u32) -> Result<bool, SplittingError> {
    Ok(sigma_from_x(&tau_i_x_vector(m, i)?)?.is_zero())
}

/// The `(m+1) x (m+1)` matrix `(X_j^{tau_i})`, `0 <= i, j <= m`, with row 0
/// from the simple type.
pub fn xmatrix(m: u32) -> Result<Vec<Vec<UniPoly>>, SplittingError> {
    if m == 0 {
        return Err(SplittingError::Range("m must be positive".into()));
    }
    let width = m as usize + 1;
    let mut rows = Vec::with_capacity(width);
    let mut first = vec![UniPoly::zero(); width];
    first[0] = UniPoly::one();
    rows.push(first);
    for i in 1..=m {
        let x = tau_i_x_vector(m, i)?;
        rows.push(x[..width].to_vec());
    }
    Ok(rows)
}

/// Determinant by cofactor expansion along the first row.
pub fn determinant(mat: &[Vec<UniPoly>]) -> UniPoly {
    match mat.len() {
        0 => UniPoly::one(),
        1 => mat[0][0].clone(),
        n => (0..n)
            .filter(|&c| !mat[0][c].is_zero())
            .map(|c| {
                let minor: Vec<Vec<UniPoly>> = mat[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != c)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &mat[0][c] * &determinant(&minor);
                if c % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum(),
    }
}

pub fn xmatrix_determinant(m: u32) -> Result<UniPoly, SplittingError> {
    Ok(determinant(&xmatrix(m)?))
}

/// `a_ij = deg X_j^{tau_i}` for `1 <= i, j <= m` (zero-based indices in the
/// result). Every such entry is a non-zero polynomial.
pub fn degree_matrix(m: u32) -> Result<Vec<Vec<i64>>, SplittingError> {
    let x = xmatrix(m)?;
    Ok(x[1..]
        .iter()
        .map(|row| {
            row[1..]
                .iter()
                .map(|p| p.degree().map_or(i64::MIN, |d| d as i64))
                .collect()
        })
        .collect())
}

/// Whether `a_ik - a_ij < a_kk - a_kj` whenever `i < k` and `j < k`.
pub fn satisfies_maxperm_hypothesis(a: &[Vec<i64>]) -> bool {
    let n = a.len();
    (0..n).all(|k| {
        (0..k).all(|i| (0..k).all(|j| a[i][k] - a[i][j] < a[k][k] - a[k][j]))
    })
}

/// Whether the identity is the unique permutation maximising
/// `sum_i a[i][sigma(i)]`, by exhaustive search.
pub fn identity_uniquely_maximal(a: &[Vec<i64>]) -> bool {
    let n = a.len();
    let diag: i64 = (0..n).map(|i| a[i][i]).sum();
    (0..n).permutations(n).all(|perm| {
        let identity = perm.iter().enumerate().all(|(i, &p)| i == p);
        identity || perm.iter().enumerate().map(|(i, &p)| a[i][p]).sum::<i64>() < diag
    })
}

/// Leading coefficient the diagonal predicts for [`xmatrix_determinant`].
pub fn predicted_leading_coeff(m: u32) -> Result<BigInt, SplittingError> {
    let x = xmatrix(m)?;
    Ok((1..=m as usize)
        .map(|i| x[i][i].leading_coeff().cloned().unwrap_or_else(BigInt::zero))
        .product())
}
