//! The lattices, identities and action tables behind the rationality proofs
//! for the groups of order `p³` and `p⁴` of exponent `p`: the lattice `M`
//! over `C_p × C₂`, its comparison with `Λ = ℤ[π]/Φ_pΦ_{2p}`, Reiner
//! decompositions of `C₂`-lattices, and the monomial action tables.

pub mod catalog;
pub mod cyclotomic;
pub mod derive;
pub mod error;
pub mod fixtures;
pub mod lattices;
pub mod reiner;
pub mod tables;

pub use catalog::{catalog, Params, CATALOG_NAMES};
pub use cyclotomic::{cyclotomic, cyclotomic_identity, euler_phi, is_prime, CyclotomicPoly};
pub use derive::{
    apply_descent, certify_step_change, check_table, derive_between, derived_table, descent, group_law_table,
    model_satisfies_relations, rederived_table, step4_block, table_diff, Descent, TableCheck,
};
pub use error::PaperError;
pub use lattices::{case1_lattice, lambda_lattice, lambda_tensor, pi_group, rho_matrix, verify_case1_iso};
pub use reiner::{block_form, reiner_counts, reiner_decompose, reiner_model, ReinerCounts, ReinerDecomposition};
pub use tables::{printed_table, Case, Mono};
