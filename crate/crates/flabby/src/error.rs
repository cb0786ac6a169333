use cohomology::CohomologyError;
use group_core::GroupError;
use lattice_core::LatticeError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlabbyError {
    #[error("internal check failed: flabby cokernel has nontrivial H^-1 on subgroup {subgroup}")]
    InternalFlabbyCheckFailed { subgroup: String },
    #[error("internal check failed: resolution is not exact ({0})")]
    InternalExactnessCheckFailed(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Group(#[from] GroupError),
}
