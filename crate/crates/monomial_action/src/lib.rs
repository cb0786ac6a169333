//! Monomial actions `σ·x_j = ζ^{c_j} ∏ x_i^{a_ij}` with a Galois twist on `ζ`:
//! composition, relation checks, exponent lattices and changes of variables.

pub mod action;
pub mod change;
pub mod doc;
pub mod error;
pub mod lattice;

pub use action::{verify_action, MonomialAction, MonomialMap, RelationFailure, Verification};
pub use change::{certify_change, drop_trivial_generators, restrict_variables, substitute, ChangeOfVariables, ChangeVerdict};
pub use doc::{GeneratorMapDoc, MonomialDoc};
pub use error::MonomialError;
pub use lattice::{exponent_lattice, matrix_group};
