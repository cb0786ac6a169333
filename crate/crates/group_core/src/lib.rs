//! Finite groups as explicit multiplication tables: closure from permutation
//! generators, subgroup classes, Sylow tests and quotients.

pub mod catalog;
pub mod doc;
pub mod error;
pub mod group;
pub mod subgroup;
pub mod word;

pub use doc::{GeneratorDoc, GroupDoc};
pub use error::GroupError;
pub use group::{direct_product, factorize, hom_from_images, order_cap, sylow_all_cyclic, FiniteGroup, DEFAULT_ORDER_CAP};
pub use subgroup::{all_subgroups, quotient_group, subgroup_reps, subgroup_reps_capped, Subgroup};
pub use word::{parse_word, Word};
