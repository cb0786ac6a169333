use group_core::GroupError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("{what} size {size} exceeds cap {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },
    #[error("subgroup and lattice belong to different groups")]
    GroupMismatch,
    #[error(transparent)]
    Group(#[from] GroupError),
}
