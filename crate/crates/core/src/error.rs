use thiserror::Error;

/// Errors shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order {order} exceeds the enumeration bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },

    #[error("invalid construction: {0}")]
    InvalidConstruction(String),

    #[error("element set is not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("subgroup of order {sub} is not normal in group of order {group}")]
    NotNormal { sub: usize, group: usize },

    #[error("subgroup of order {0} is not a p-group for p = {1}")]
    NotAPGroup(usize, usize),

    #[error("subgroup is not normalized by the acting subgroup")]
    NotNormalized,

    #[error("integer overflow during exact computation")]
    Overflow,

    #[error("the combination is not a Brauer relation")]
    NotARelation,

    #[error("group is cyclic; it has no non-zero Brauer relations")]
    CyclicGroup,

    #[error("group is not quasi-elementary")]
    NotQuasiElementary,

    #[error("invalid base-case parameters: {0}")]
    InvalidBaseParams(String),

    #[error("group does not have the base-case shape: {0}")]
    NotBaseCaseShape(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
