//! Exact enumeration of splitting subspaces over finite fields.
//!
//! For an operator `T` on `F_q^{2m}`, the number of `m`-dimensional
//! subspaces `W` with `W + TW = F_q^{2m}` depends only on the similarity
//! class type of `T` and is a polynomial in `q`. This crate computes that
//! polynomial from the invariant-subspace counts of `T` ([`splitting`]),
//! derives it a second way from an intersection-dimension recurrence,
//! relates the regular split semisimple case to the crossing polynomial of
//! chord diagrams ([`chords`]), and checks everything against exhaustive
//! sweeps over actual finite fields ([`oracle`]).

pub mod chords;
pub mod invariants;
pub mod json;
pub mod oracle;
pub mod poly;
pub mod qcomb;
pub mod splitting;
pub mod types;

pub use chords::{ChordDiagram, ChordError, OpeningSet};
pub use invariants::InvariantProfile;
pub use oracle::{Budget, FqField, FqMatrix, OracleError, Subspace};
pub use poly::{BivarPoly, PolyError, Substitution, UniPoly};
pub use splitting::{IntersectionCountTable, SplittingError};
pub use types::{Partition, SimilarityClassType, TypeError};

/// Any error produced by this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error(transparent)]
    Splitting(#[from] SplittingError),
    #[error(transparent)]
    Chord(#[from] ChordError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
