use cohomology::CohomologyError;
use group_core::GroupError;
use lattice_core::LatticeError;
use monomial_action::MonomialError;
use thiserror::Error;

use crate::reiner::ReinerCounts;

#[derive(Debug, Error)]
pub enum PaperError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(i64),
    #[error("isomorphism check failed: {0}")]
    IsoCheckFailed(String),
    #[error("acting group has order {0}, expected 2")]
    NotC2(usize),
    #[error("no block basis found (counts {0:?})")]
    BasisSearchExhausted(ReinerCounts),
    #[error("unknown catalog entry {0:?}")]
    UnknownName(String),
    #[error("missing or invalid parameter {0:?}")]
    BadParam(String),
    #[error("no fixture for {0}")]
    UnknownFixture(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Monomial(#[from] MonomialError),
}
