use std::fmt;
use std::sync::Arc;

use super::field::{FqField, FqPoly};
use super::OracleError;

/// Dense row-major matrix over `F_q`.
#[derive(Clone, PartialEq, Eq)]
pub struct FqMatrix {
    field: Arc<FqField>,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FqMatrix over F_{} ({}x{})", self.field.order(), self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl FqMatrix {
    pub fn zeros(field: &Arc<FqField>, rows: usize, cols: usize) -> Self {
        Self {
            field: Arc::clone(field),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Arc<FqField>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_fn(field: &Arc<FqField>, rows: usize, cols: usize, f: impl Fn(usize, usize) -> u8) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    /// Rows of element codes; all rows must have the same length and every
    /// entry must be below `q`.
    pub fn from_rows(field: &Arc<FqField>, rows: &[Vec<u8>]) -> Result<Self, OracleError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(OracleError::InvalidMatrix("ragged rows".into()));
        }
        if rows.iter().flatten().any(|&x| x as u32 >= field.order()) {
            return Err(OracleError::InvalidMatrix(format!("entry outside F_{}", field.order())));
        }
        Ok(Self {
            field: Arc::clone(field),
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn mul(&self, other: &FqMatrix) -> FqMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let f = &self.field;
        let mut out = FqMatrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &FqMatrix) -> FqMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        FqMatrix {
            field: Arc::clone(f),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: u8) -> FqMatrix {
        let f = &self.field;
        FqMatrix {
            field: Arc::clone(f),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(c, a)).collect(),
        }
    }

    pub fn transpose(&self) -> FqMatrix {
        FqMatrix::from_fn(&self.field, self.cols, self.rows, |r, c| self.get(c, r))
    }

    /// Rows `v` replaced by `T v`: spans `T W` when `self` spans `W`.
    pub fn apply_rows(&self, t: &FqMatrix) -> FqMatrix {
        assert_eq!(self.cols, t.cols);
        self.mul(&t.transpose())
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &FqMatrix) -> FqMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        FqMatrix {
            field: Arc::clone(&self.field),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn rank(&self) -> usize {
        let f = &self.field;
        let mut m = self.data.clone();
        let cols = self.cols;
        let mut rank = 0;
        for c in 0..cols {
            if rank == self.rows {
                break;
            }
            let Some(pivot) = (rank..self.rows).find(|&r| m[r * cols + c] != 0) else {
                continue;
            };
            for k in 0..cols {
                m.swap(pivot * cols + k, rank * cols + k);
            }
            let inv = f.inv(m[rank * cols + c]).expect("non-zero pivot");
            for r in rank + 1..self.rows {
                let factor = f.mul(m[r * cols + c], inv);
                if factor == 0 {
                    continue;
                }
                for k in c..cols {
                    m[r * cols + k] = f.sub(m[r * cols + k], f.mul(factor, m[rank * cols + k]));
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn inverse(&self) -> Option<FqMatrix> {
        if !self.is_square() {
            return None;
        }
        let f = &self.field;
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = FqMatrix::identity(f, n);
        for c in 0..n {
            let pivot = (c..n).find(|&r| a.get(r, c) != 0)?;
            for k in 0..n {
                let (x, y) = (a.get(pivot, k), a.get(c, k));
                a.set(pivot, k, y);
                a.set(c, k, x);
                let (x, y) = (inv.get(pivot, k), inv.get(c, k));
                inv.set(pivot, k, y);
                inv.set(c, k, x);
            }
            let s = f.inv(a.get(c, c)).expect("non-zero pivot");
            for k in 0..n {
                a.set(c, k, f.mul(s, a.get(c, k)));
                inv.set(c, k, f.mul(s, inv.get(c, k)));
            }
            for r in 0..n {
                let factor = a.get(r, c);
                if r == c || factor == 0 {
                    continue;
                }
                for k in 0..n {
                    a.set(r, k, f.sub(a.get(r, k), f.mul(factor, a.get(c, k))));
                    inv.set(r, k, f.sub(inv.get(r, k), f.mul(factor, inv.get(c, k))));
                }
            }
        }
        Some(inv)
    }

    /// `p(self)` by Horner's rule.
    pub fn eval_poly(&self, p: &FqPoly) -> FqMatrix {
        assert!(self.is_square());
        let n = self.rows;
        let id = FqMatrix::identity(&self.field, n);
        p.coeffs()
            .iter()
            .rev()
            .fold(FqMatrix::zeros(&self.field, n, n), |acc, &c| acc.mul(self).add(&id.scale(c)))
    }

    /// Companion matrix of a monic `g`: ones on the subdiagonal, `-g_i` in the
    /// last column, so `e_i -> e_{i+1}` realises multiplication by `t` on
    /// `F_q[t]/(g)`.
    pub fn companion(field: &Arc<FqField>, g: &FqPoly) -> FqMatrix {
        let d = g.degree().expect("non-zero polynomial");
        assert_eq!(g.coeffs()[d], 1, "companion needs a monic polynomial");
        let mut m = FqMatrix::zeros(field, d, d);
        for i in 1..d {
            m.set(i, i - 1, 1);
        }
        for i in 0..d {
            m.set(i, d - 1, field.neg(g.coeffs()[i]));
        }
        m
    }

    pub fn block_diag(field: &Arc<FqField>, blocks: &[FqMatrix]) -> FqMatrix {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut m = FqMatrix::zeros(field, n, n);
        let mut off = 0;
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    m.set(off + r, off + c, b.get(r, c));
                }
            }
            off += b.rows;
        }
        m
    }
}
