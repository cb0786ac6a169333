//! π-lattices over finite groups: validation, duals, sums, tensor products,
//! induced and fixed lattices, character kernels and isomorphism search.

pub mod doc;
pub mod error;
pub mod iso;
pub mod lattice;
pub mod samples;
pub mod sublattice;

pub use doc::{GroupRef, LatticeDoc};
pub use error::LatticeError;
pub use iso::{
    invariant_witness, is_intertwiner, iso_search, module_generators, orbit_matrix, IsoOptions, IsoVerdict, IsoWitness,
    Pruner,
};
pub use lattice::{
    direct_sum, direct_sum_all, dual, induced_lattice, rank_cap, regular_lattice, same_group, tensor, tensor_outer,
    Lattice, LatticeMap, DEFAULT_RANK_CAP,
};
pub use sublattice::{
    character_kernel_sublattice, deflate, fixed_basis, fixed_quotient_lattice, fixed_rank, fixed_sublattice, inflate,
    pullback, restrict, sublattice, Character, CharacterKernel,
};
