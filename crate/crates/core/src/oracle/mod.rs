//! Brute-force ground truth over concrete finite fields.
//!
//! Everything here works with actual matrices and actual subspaces: build a
//! field `F_q`, realise a similarity class type as a block-diagonal matrix of
//! companion blocks, enumerate every `k`-dimensional subspace in reduced row
//! echelon form and count the ones with a given property. The symbolic
//! modules are checked against these counts.

mod classify;
mod count;
mod field;
mod file;
mod matrix;
mod subspace;

pub use classify::{classify_matrix, matrix_from_type};
pub use count::{
    count_ab_oracle, count_invariant, count_pattern_nonsingular, count_splitting,
    count_splitting_degree, intersection_profile, pattern_closed_form, pattern_free_entries,
};
pub use field::{irreducibles, make_field, FqField, FqPoly};
pub use file::MatrixFile;
pub use matrix::FqMatrix;
pub use subspace::{subspaces, Subspace, SubspaceIter};

use thiserror::Error;

/// Environment variable that overrides [`Budget::items`].
pub const BUDGET_ENV: &str = "SPLITQ_BUDGET";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("type {0} is not realizable over F_{1}: {2}")]
    NotRealizable(String, u32, String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
}

/// Caps on exhaustive sweeps. Exceeding one is an error, never a silent
/// truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Items a single sweep may visit: subspaces, candidate polynomials,
    /// pattern matrices.
    pub items: u64,
    /// Largest field order accepted by [`make_field`].
    pub max_field_order: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            items: 1_000_000,
            max_field_order: 64,
        }
    }
}

impl Budget {
    /// Defaults, with `items` taken from `SPLITQ_BUDGET` when it parses.
    pub fn from_env() -> Self {
        let mut b = Self::default();
        if let Some(items) = std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            b.items = items;
        }
        b
    }

    pub fn with_items(items: u64) -> Self {
        Self {
            items,
            ..Self::default()
        }
    }

    pub(crate) fn check(&self, what: &str, needed: u128) -> Result<(), OracleError> {
        if needed > self.items as u128 {
            return Err(OracleError::BudgetExceeded(format!(
                "{what} needs {needed} items, budget is {}",
                self.items
            )));
        }
        Ok(())
    }
}
