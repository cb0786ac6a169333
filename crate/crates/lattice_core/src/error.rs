use group_core::GroupError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("matrix of generator {0} is not unimodular")]
    NotUnimodular(String),
    #[error("action is not a homomorphism: rho(x)rho({generator}) != rho(x*{generator}) at element {element}")]
    RelationViolated { element: usize, generator: String },
    #[error("expected {expected} generator matrices, got {got}")]
    GeneratorCount { expected: usize, got: usize },
    #[error("matrix of {name} is {rows}x{cols}, expected {rank}x{rank}")]
    BadShape { name: String, rows: usize, cols: usize, rank: usize },
    #[error("lattices are over different groups")]
    GroupMismatch,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("action is not trivial on element {0} of the kernel")]
    ActionNotTrivialOnKernel(usize),
    #[error("character kernel is not stable under the action")]
    KernelNotStable,
    #[error("sublattice is not stable under the action")]
    NotStable,
    #[error("matrix does not intertwine the actions at generator {0}")]
    NotIntertwining(String),
    #[error("map is {rows}x{cols}, expected {target}x{src}")]
    MapShape { rows: usize, cols: usize, target: usize, src: usize },
    #[error("element map is not a homomorphism")]
    NotHomomorphism,
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("no matrix given for generator {0:?}")]
    MissingGenerator(String),
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("rank {rank} exceeds cap {cap}")]
    RankCapExceeded { rank: usize, cap: usize },
    #[error("bad character: {0}")]
    BadCharacter(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}
