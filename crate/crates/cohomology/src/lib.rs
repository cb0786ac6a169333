//! Tate cohomology `Ĥ⁻¹`, `Ĥ⁰` and `H¹` of lattices over finite groups, the
//! flabby/coflabby classification, and a slow reference implementation.

pub mod error;
pub mod oracle;
pub mod report;
pub mod tate;

use lattice_core::Lattice;

pub use error::CohomologyError;
pub use oracle::{bar_oracle, Degree};
pub use report::{
    classify, classify_jobs, element_name, flabby_witness, is_coflabby, is_flabby, keyed_reps, CohomologyReport,
    SubgroupEntry,
};
pub use tate::{cochain_cap, h1_cocycles, h1_cocycles_capped, norm_matrix, tate_hat0, tate_hat_minus1};

/// Isomorphism-search pruner comparing `Ĥ⁰` and `Ĥ⁻¹` on every subgroup class.
pub fn tate_pruner(a: &Lattice, b: &Lattice) -> Option<String> {
    let reps = keyed_reps(a.group()).ok()?;
    for (key, h) in reps {
        let (x, y) = (tate_hat_minus1(&h, a), tate_hat_minus1(&h, b));
        if x != y {
            return Some(format!("H^-1 differs on subgroup {key}: {x} vs {y}"));
        }
        let (x, y) = (tate_hat0(&h, a), tate_hat0(&h, b));
        if x != y {
            return Some(format!("H^0 differs on subgroup {key}: {x} vs {y}"));
        }
    }
    None
}
