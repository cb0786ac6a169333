use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("multiplication is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NonAssociative(usize, usize, usize),
    #[error("closure exceeds the order cap {cap}")]
    ClosureExceedsCap { cap: usize },
    #[error("relation {lhs} = {rhs} does not hold")]
    RelationViolated { lhs: String, rhs: String },
    #[error("group order {order} exceeds cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("invalid permutation for generator {name}: {reason}")]
    InvalidPermutation { name: String, reason: String },
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("generator images do not define a homomorphism")]
    NotHomomorphism,
    #[error("cannot parse word {0:?}")]
    BadWord(String),
}
