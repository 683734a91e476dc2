use std::ops::Range;
use std::sync::Arc;

use itertools::{Combinations, Itertools};
use num_bigint::BigInt;

use super::field::FqField;
use super::matrix::FqMatrix;
use super::{Budget, OracleError};
use crate::qcomb::gaussian_binomial;

/// A subspace of `F_q^n` held by its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: FqMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The row space of `m`.
    pub fn span(m: &FqMatrix) -> Subspace {
        let f = Arc::clone(m.field());
        let mut rows = m.to_rows();
        let cols = m.cols();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(p, r);
            let s = f.inv(rows[r][c]).expect("non-zero pivot");
            for x in rows[r].iter_mut() {
                *x = f.mul(s, *x);
            }
            for i in 0..rows.len() {
                let factor = rows[i][c];
                if i == r || factor == 0 {
                    continue;
                }
                let pivot_row = rows[r].clone();
                for (x, &y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        let basis = if rows.is_empty() {
            FqMatrix::zeros(&f, 0, cols)
        } else {
            FqMatrix::from_rows(&f, &rows).expect("well-formed rows")
        };
        Subspace { basis, pivots }
    }

    pub fn basis(&self) -> &FqMatrix {
        &self.basis
    }

    /// Zero-based pivot columns, strictly increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    /// Whether the basis satisfies the reduced row echelon conditions.
    pub fn is_rref(&self) -> bool {
        let b = &self.basis;
        self.pivots.windows(2).all(|w| w[0] < w[1])
            && self.pivots.len() == b.rows()
            && self.pivots.iter().enumerate().all(|(i, &c)| {
                (0..c).all(|j| b.get(i, j) == 0)
                    && (0..b.rows()).all(|r| b.get(r, c) == u8::from(r == i))
            })
    }
}

/// Every `k`-dimensional subspace of `F_q^n` exactly once, grouped by pivot
/// set (lexicographic) and then by free entries (odometer order).
pub struct SubspaceIter {
    field: Arc<FqField>,
    n: usize,
    pivot_sets: Combinations<Range<usize>>,
    current: Option<PivotCell>,
}

struct PivotCell {
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    digits: Vec<u8>,
    fresh: bool,
}

impl PivotCell {
    fn new(pivots: Vec<usize>, n: usize) -> Self {
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| (c + 1..n).filter(|j| !pivots.contains(j)).map(move |j| (i, j)))
            .collect();
        let digits = vec![0; free.len()];
        Self {
            pivots,
            free,
            digits,
            fresh: true,
        }
    }

    fn advance(&mut self, q: u8) -> bool {
        if self.fresh {
            self.fresh = false;
            return true;
        }
        for d in self.digits.iter_mut() {
            *d += 1;
            if *d < q {
                return true;
            }
            *d = 0;
        }
        false
    }
}

impl Iterator for SubspaceIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        let q = self.field.order() as u8;
        loop {
            if self.current.is_none() {
                self.current = Some(PivotCell::new(self.pivot_sets.next()?, self.n));
            }
            let cell = self.current.as_mut().expect("just set");
            if cell.advance(q) {
                let mut basis = FqMatrix::zeros(&self.field, cell.pivots.len(), self.n);
                for (i, &c) in cell.pivots.iter().enumerate() {
                    basis.set(i, c, 1);
                }
                for (&(i, j), &d) in cell.free.iter().zip(&cell.digits) {
                    basis.set(i, j, d);
                }
                return Some(Subspace {
                    basis,
                    pivots: cell.pivots.clone(),
                });
            }
            self.current = None;
        }
    }
}

/// Stream of the `k`-dimensional subspaces of `F_q^n`. Fails up front if
/// there are more than `budget.items` of them.
pub fn subspaces(
    field: &Arc<FqField>,
    n: usize,
    k: usize,
    budget: &Budget,
) -> Result<SubspaceIter, OracleError> {
    if k > n {
        return Err(OracleError::DimensionMismatch(format!("k={k} > n={n}")));
    }
    let count = gaussian_binomial(n as i64, k as i64).eval(&BigInt::from(field.order()));
    let count: u128 = count.try_into().unwrap_or(u128::MAX);
    budget.check(&format!("{k}-subspaces of F_{}^{n}", field.order()), count)?;
    Ok(SubspaceIter {
        field: Arc::clone(field),
        n,
        pivot_sets: (0..n).combinations(k),
        current: None,
    })
}
