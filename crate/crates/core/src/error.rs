use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight must have at least one entry")]
    EmptyWeight,

    #[error("weight {0:?} is not non-increasing")]
    NotDominant(Vec<i64>),

    #[error("expected a weight of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("character is not a non-negative sum of irreducible rank-2 characters")]
    NotDecomposable,

    #[error("invalid Grassmannian Gr({k}, {n}): need 1 <= k < n")]
    InvalidContext { k: usize, n: usize },

    #[error("classes live on different Grassmannians")]
    ContextMismatch,

    #[error("unknown sheaf name `{0}`")]
    UnknownSheaf(String),

    #[error("sheaf `{name}` is not defined on Gr({k}, {n})")]
    SheafUnavailable { name: String, k: usize, n: usize },

    #[error("exterior powers are only supported for a single S-only summand on Gr(1,n) or Gr(2,n)")]
    UnsupportedWedge,

    #[error("d = {d} is outside the supported range (need d >= {min})")]
    DimensionOutOfRange { d: usize, min: usize },

    #[error("cannot determine {what}: {reason}")]
    Underdetermined { what: String, reason: String },
}
