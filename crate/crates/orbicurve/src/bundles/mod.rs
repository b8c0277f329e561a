//! Orbifold vector bundles two ways: a concrete equivariant-bundle model on
//! finite free group-set covers (cocycle condition, invariant pushforward,
//! descent witnesses) and a numeric ledger verifying the degree/slope laws
//! and the projection formula.

pub mod equivariant;
pub mod group;
pub mod ledger;
pub mod matrix;

pub use equivariant::{
    cocycle_validate, count_fixed_vectors, is_invariant_section, pullback_witness,
    pushforward_invariants, EquivariantBundle, InvariantPushforward,
};
pub use group::{GammaSetCover, Group};
pub use ledger::{projection_formula_residual, LedgerBundle};
pub use matrix::Matrix;

#[derive(Debug, Clone, thiserror::Error)]
pub enum BundleError {
    #[error("COCYCLE_INVALID: transition data violates the cocycle identity")]
    CocycleInvalid,
    #[error("COVER_MISMATCH: ledger covers have orders {a} and {b}; refine first")]
    CoverMismatch { a: u64, b: u64 },
    #[error("NON_FREE_ACTION: group element {g} fixes point {e}")]
    NonFreeAction { g: usize, e: usize },
    #[error("BAD_GROUP: {0}")]
    BadGroup(String),
    #[error("BAD_ACTION: {0}")]
    BadAction(String),
    #[error("BAD_LEDGER: {0}")]
    BadLedger(String),
}
