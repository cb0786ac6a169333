//! Flabby resolutions `0 → M → P → E → 0`, invertibility of the flabby
//! class and permutation bases.

pub mod certificate;
pub mod doc;
pub mod error;
pub mod invertible;
pub mod resolution;

pub use certificate::{orbit_count, permutation_candidates, permutation_certificate, permutation_certificate_with, PermutationVerdict};
pub use doc::{ResolutionDoc, RhoDoc};
pub use error::FlabbyError;
pub use invertible::{
    decide, rho_invertible, rho_invertible_with, split_certificate, verify_certificate,
    Invertibility, NoWitness, RhoOptions, RhoVerdict, SplitCertificate, YesReason,
};
pub use resolution::{check_exactness, cover_map, fixed_point_cover, flabby_resolution, minimal_flabby_resolution, Resolution, Summand};
