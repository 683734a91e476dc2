//! Invariant-subspace generating functions.
//!
//! For a nilpotent operator with Jordan type `lambda`, `f_lambda(q; t)` has
//! as coefficient of `t^j` the number of `j`-dimensional invariant subspaces.
//! It satisfies
//!
//! ```text
//! (t - 1) f_lambda(q; t) = t^{lambda_1 + 1} q^{|lambda| - lambda_1} f_mu(q; t/q) - f_mu(q; tq)
//! ```
//!
//! where `mu` is `lambda` with its largest part removed and `f_() = 1`. An
//! operator of type `tau` then has generating function
//! `prod_{(d, lambda) in tau} f_lambda(q^d; t^d)`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::poly::{BivarPoly, PolyError, Substitution, UniPoly};
use crate::types::{Partition, SimilarityClassType};

fn memo() -> &'static Mutex<HashMap<Partition, BivarPoly>> {
    static MEMO: OnceLock<Mutex<HashMap<Partition, BivarPoly>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `f_lambda(q; t)` by the tail recurrence above.
pub fn ramare_f(lambda: &Partition) -> Result<BivarPoly, PolyError> {
    if lambda.is_empty() {
        return Ok(BivarPoly::one());
    }
    if let Some(hit) = memo().lock().expect("memo poisoned").get(lambda) {
        return Ok(hit.clone());
    }
    let tail = lambda.tail();
    let g = ramare_f(&tail)?;
    let lead = BivarPoly::monomial(1, tail.size() as i64, lambda.first() + 1);
    let lhs = &(&lead * &g.substitute(&Substitution::ScaleT(-1)))
        - &g.substitute(&Substitution::ScaleT(1));
    let t_minus_one = &BivarPoly::t() - &BivarPoly::one();
    let f = lhs.divide_exact(&t_minus_one)?;
    f.ensure_polynomial()?;
    memo()
        .lock()
        .expect("memo poisoned")
        .insert(lambda.clone(), f.clone());
    Ok(f)
}

/// `f_tau(q; t) = prod_{(d, lambda)} f_lambda(q^d; t^d)`.
pub fn f_tau(tau: &SimilarityClassType) -> Result<BivarPoly, PolyError> {
    tau.pairs()
        .map(|(d, lambda)| Ok(ramare_f(lambda)?.substitute(&Substitution::Power(d))))
        .product()
}

/// Generating function of a type together with its coefficients `X_j(q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantProfile {
    pub tau: SimilarityClassType,
    pub n: u32,
    pub f: BivarPoly,
    /// `x[j]` counts `j`-dimensional invariant subspaces, `0 <= j <= n`.
    pub x: Vec<UniPoly>,
}

impl InvariantProfile {
    /// Total number of invariant subspaces over `F_q`.
    pub fn total_at(&self, q: i64) -> num_bigint::BigInt {
        self.x.iter().map(|p| p.eval_i64(q)).sum()
    }
}

pub fn x_polys(tau: &SimilarityClassType) -> Result<InvariantProfile, PolyError> {
    let f = f_tau(tau)?;
    let n = tau.size();
    let x = f.t_coefficients(n)?;
    Ok(InvariantProfile {
        tau: tau.clone(),
        n,
        f,
        x,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcomb::gaussian_binomial;
    use num_bigint::BigInt;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn t_poly(x: &[UniPoly]) -> BivarPoly {
        x.iter()
            .enumerate()
            .fold(BivarPoly::zero(), |acc, (j, p)| &acc + &BivarPoly::from_uni(p, j as u32))
    }

    fn u(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(c)
    }

    #[test]
    fn ramare_examples() {
        assert_eq!(ramare_f(&Partition::empty()).unwrap(), BivarPoly::one());
        assert_eq!(ramare_f(&part(&[2])).unwrap(), t_poly(&[u(&[1]), u(&[1]), u(&[1])]));
        assert_eq!(ramare_f(&part(&[1, 1])).unwrap(), t_poly(&[u(&[1]), u(&[1, 1]), u(&[1])]));
        assert_eq!(
            ramare_f(&part(&[2, 1])).unwrap(),
            t_poly(&[u(&[1]), u(&[1, 1]), u(&[1, 1]), u(&[1])])
        );
    }

    #[test]
    fn ramare_scalar_gives_gaussian_binomials() {
        for n in 0..=7u32 {
            let f = ramare_f(&Partition::repeated(1, n as usize)).unwrap();
            for j in 0..=n {
                assert_eq!(f.coefficient_in_t(j).unwrap(), gaussian_binomial(n as i64, j as i64));
            }
        }
    }

    #[test]
    fn f_tau_examples() {
        for m in 1..=4 {
            let f = f_tau(&SimilarityClassType::simple(2 * m)).unwrap();
            assert_eq!(f, &BivarPoly::one() + &BivarPoly::monomial(1, 0, 2 * m));
        }
        let rss = f_tau(&SimilarityClassType::regular_split_semisimple(2)).unwrap();
        assert_eq!(rss, t_poly(&[u(&[1]), u(&[2]), u(&[1])]));

        let tau1 = SimilarityClassType::tau(2, 1).unwrap();
        let scalar3 = t_poly(&[u(&[1]), u(&[1, 1, 1]), u(&[1, 1, 1]), u(&[1])]);
        let expected = &scalar3 * &t_poly(&[u(&[1]), u(&[1])]);
        assert_eq!(f_tau(&tau1).unwrap(), expected);
    }

    #[test]
    fn x_polys_named_types() {
        for n in 1..=6u32 {
            let prof = x_polys(&SimilarityClassType::scalar(n)).unwrap();
            for j in 0..=n {
                assert_eq!(prof.x[j as usize], gaussian_binomial(n as i64, j as i64));
            }
            let simple = x_polys(&SimilarityClassType::simple(n)).unwrap();
            for (j, x) in simple.x.iter().enumerate() {
                let expect = if j == 0 || j == n as usize { UniPoly::one() } else { UniPoly::zero() };
                assert_eq!(*x, expect);
            }
            let rss = x_polys(&SimilarityClassType::regular_split_semisimple(n)).unwrap();
            for j in 0..=n {
                assert_eq!(rss.x[j as usize], UniPoly::constant(crate::qcomb::binomial(n as u64, j as i64)));
            }
        }
    }

    #[test]
    fn x_polys_tau_i_match_closed_form() {
        // X_j = [m+i, j] + [m+i, j-m+i] for i < m (the i = m pair degenerates)
        for m in 1..=4i64 {
            for i in 1..m {
                let prof = x_polys(&SimilarityClassType::tau(m as u32, i as u32).unwrap()).unwrap();
                for j in 0..=2 * m {
                    let expect = &gaussian_binomial(m + i, j) + &gaussian_binomial(m + i, j - m + i);
                    assert_eq!(prof.x[j as usize], expect, "m={m} i={i} j={j}");
                }
                for j in 1..=m {
                    assert_eq!(prof.x[j as usize].degree(), Some((j * (m + i - j)) as usize));
                }
            }
        }
    }

    #[test]
    fn single_irreducible_nilpotent_degree_two() {
        // {(2,(2))}: F_{q^2}[u]/u^2 has subspaces of dim 0, 2, 4 only
        let t: SimilarityClassType = "2:2".parse().unwrap();
        let prof = x_polys(&t).unwrap();
        let expect: Vec<UniPoly> = vec![u(&[1]), u(&[]), u(&[1]), u(&[]), u(&[1])];
        assert_eq!(prof.x, expect);
        assert_eq!(prof.total_at(3), BigInt::from(3));
    }
}
