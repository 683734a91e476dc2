//! JSON matrix files: `{"p":2,"e":1,"rows":2,"cols":2,"entries":[[0,1],[1,0]]}`.
//!
//! Entries are residues when `e = 1` and coefficient arrays over `F_p`
//! (constant term first) when `e > 1`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::field::make_field;
use super::matrix::FqMatrix;
use super::{Budget, OracleError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Residue(u32),
    Coeffs(Vec<u32>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub p: u32,
    pub e: u32,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Entry>>,
}

impl MatrixFile {
    pub fn from_matrix(m: &FqMatrix) -> Self {
        let f = m.field();
        let entries = (0..m.rows())
            .map(|r| {
                m.row(r)
                    .iter()
                    .map(|&x| {
                        if f.e() == 1 {
                            Entry::Residue(x as u32)
                        } else {
                            Entry::Coeffs(f.to_coeffs(x))
                        }
                    })
                    .collect()
            })
            .collect();
        Self {
            p: f.p(),
            e: f.e(),
            rows: m.rows(),
            cols: m.cols(),
            entries,
        }
    }

    pub fn to_matrix(&self, budget: &Budget) -> Result<FqMatrix, OracleError> {
        let field = Arc::new(make_field(self.p, self.e, budget)?);
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(OracleError::InvalidMatrix(format!(
                "entries do not form a {}x{} array",
                self.rows, self.cols
            )));
        }
        let rows = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|entry| match entry {
                        Entry::Residue(r) if self.e == 1 => field.from_coeffs(&[*r]),
                        Entry::Residue(_) => Err(OracleError::InvalidMatrix(
                            "entries must be coefficient arrays when e > 1".into(),
                        )),
                        Entry::Coeffs(c) => field.from_coeffs(c),
                    })
                    .collect::<Result<Vec<u8>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        if rows.is_empty() {
            return Ok(FqMatrix::zeros(&field, 0, self.cols));
        }
        FqMatrix::from_rows(&field, &rows)
    }
}
