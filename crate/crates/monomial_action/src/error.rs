use exact_linalg::Int;
use group_core::GroupError;
use lattice_core::LatticeError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MonomialError {
    #[error("root order must be at least 1")]
    BadRootOrder,
    #[error("twist {t} of generator {name} is not a unit mod {e}")]
    BadTwist { name: String, t: i64, e: i64 },
    #[error("generator {name}: {what}")]
    BadShape { name: String, what: String },
    #[error("exponent matrix of generator {0} is not unimodular")]
    NotUnimodular(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("duplicate name {0:?}")]
    Duplicate(String),
    #[error("action does not satisfy its relations: {0}")]
    UnverifiedAction(String),
    #[error("change of variables has determinant {0}")]
    Singular(Int),
    #[error("the new variables do not span a stable sublattice under {0}")]
    NotStable(String),
    #[error("generator {0} does not act trivially")]
    NotTrivial(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}
