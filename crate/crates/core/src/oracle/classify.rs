use std::collections::BTreeMap;
use std::sync::Arc;

use super::field::{irreducibles, FqField};
use super::matrix::FqMatrix;
use super::{Budget, OracleError};
use crate::types::{Partition, SimilarityClassType};

/// A block-diagonal matrix of type `tau`: for each pair `(d, lambda)` a
/// fresh monic irreducible `p` of degree `d` is taken (in enumeration
/// order) and one companion block of `p^k` is emitted per part `k`.
pub fn matrix_from_type(
    tau: &SimilarityClassType,
    field: &Arc<FqField>,
    budget: &Budget,
) -> Result<FqMatrix, OracleError> {
    let mut pools: BTreeMap<u32, (Vec<super::FqPoly>, usize)> = BTreeMap::new();
    let mut blocks = Vec::new();
    for (d, lambda) in tau.pairs() {
        let (pool, used) = match pools.entry(d) {
            std::collections::btree_map::Entry::Occupied(e) => e.into_mut(),
            std::collections::btree_map::Entry::Vacant(e) => e.insert((irreducibles(field, d as usize, budget)?, 0)),
        };
        let p = pool.get(*used).ok_or_else(|| {
            OracleError::NotRealizable(
                tau.to_string(),
                field.order(),
                format!("needs more than {} distinct irreducibles of degree {d}", pool.len()),
            )
        })?;
        *used += 1;
        for &k in lambda.parts() {
            blocks.push(FqMatrix::companion(field, &p.pow(k, field)));
        }
    }
    Ok(FqMatrix::block_diag(field, &blocks))
}

/// Similarity class type of a square matrix.
///
/// For each monic irreducible `p` (by increasing degree, until the whole
/// space is accounted for) the number of parts of `c_T(p)` that are `>= k`
/// is `(dim ker p(T)^k - dim ker p(T)^{k-1}) / deg p`.
pub fn classify_matrix(t: &FqMatrix, budget: &Budget) -> Result<SimilarityClassType, OracleError> {
    if !t.is_square() {
        return Err(OracleError::DimensionMismatch("classify needs a square matrix".into()));
    }
    let n = t.rows();
    let field = t.field();
    let mut pairs = Vec::new();
    let mut accounted = 0;
    for d in 1..=n {
        if accounted == n {
            break;
        }
        for p in irreducibles(field, d, budget)? {
            let base = t.eval_poly(&p);
            let mut power = base.clone();
            let mut kernels = vec![0usize];
            loop {
                let nu = power.nullity();
                if nu == *kernels.last().expect("non-empty") {
                    break;
                }
                kernels.push(nu);
                power = power.mul(&base);
            }
            if kernels.len() == 1 {
                continue;
            }
            // parts_at_least[k-1] = #parts >= k
            let parts_at_least: Vec<usize> = kernels.windows(2).map(|w| (w[1] - w[0]) / d).collect();
            let mut parts = Vec::new();
            for (k, w) in parts_at_least.iter().enumerate() {
                let next = parts_at_least.get(k + 1).copied().unwrap_or(0);
                parts.extend(std::iter::repeat_n(k as u32 + 1, w - next));
            }
            let lambda = Partition::new(parts).expect("positive parts");
            accounted += d * lambda.size() as usize;
            pairs.push((d as u32, lambda));
            if accounted == n {
                break;
            }
        }
    }
    SimilarityClassType::from_pairs(pairs)
        .map_err(|e| OracleError::InvalidMatrix(format!("could not classify: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{make_field, FqPoly};
    use crate::types::types_of_size;

    fn f(p: u32, e: u32) -> Arc<FqField> {
        Arc::new(make_field(p, e, &Budget::default()).unwrap())
    }

    fn ty(s: &str) -> SimilarityClassType {
        s.parse().unwrap()
    }

    #[test]
    fn realisation_examples() {
        let f2 = f(2, 1);
        let b = Budget::default();
        let nil = matrix_from_type(&ty("1:2"), &f2, &b).unwrap();
        assert_eq!(nil, FqMatrix::from_rows(&f2, &[vec![0, 0], vec![1, 0]]).unwrap());
        let simple = matrix_from_type(&ty("2:1"), &f2, &b).unwrap();
        assert_eq!(simple, FqMatrix::companion(&f2, &FqPoly::new(vec![1, 1, 1])));
        let rss = SimilarityClassType::regular_split_semisimple(4);
        assert!(matches!(matrix_from_type(&rss, &f2, &b), Err(OracleError::NotRealizable(..))));
    }

    #[test]
    fn classify_examples() {
        let f2 = f(2, 1);
        let b = Budget::default();
        assert_eq!(classify_matrix(&FqMatrix::zeros(&f2, 2, 2), &b).unwrap(), ty("1:1,1"));
        let c = FqMatrix::companion(&f2, &FqPoly::new(vec![1, 1, 1]));
        assert_eq!(classify_matrix(&c, &b).unwrap(), ty("2:1"));
    }

    #[test]
    fn round_trip_size_four() {
        let b = Budget::default();
        for (p, e) in [(3, 1), (2, 1), (2, 2)] {
            let field = f(p, e);
            let mut realised = 0;
            for tau in types_of_size(4) {
                match matrix_from_type(&tau, &field, &b) {
                    Ok(t) => {
                        assert_eq!(classify_matrix(&t, &b).unwrap(), tau, "F_{}", field.order());
                        realised += 1;
                    }
                    Err(OracleError::NotRealizable(..)) => {}
                    Err(e) => panic!("{e}"),
                }
            }
            if field.order() >= 4 {
                assert_eq!(realised, 22);
            }
        }
    }
}
