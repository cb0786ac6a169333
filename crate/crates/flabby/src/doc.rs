use exact_linalg::IntMatrix;
use lattice_core::{GroupRef, LatticeDoc};
use serde::{Deserialize, Serialize};

use crate::invertible::{Invertibility, RhoVerdict, SplitCertificate};
use crate::resolution::{Resolution, Summand};

/// JSON form of a resolution; all three lattices share `group`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionDoc {
    pub m: LatticeDoc,
    pub p: LatticeDoc,
    pub e: LatticeDoc,
    pub inject: IntMatrix,
    pub project: IntMatrix,
    pub summands: Vec<Summand>,
}

impl ResolutionDoc {
    pub fn new(r: &Resolution, group: &GroupRef) -> ResolutionDoc {
        ResolutionDoc {
            m: LatticeDoc::with_group(&r.m, group.clone()),
            p: LatticeDoc::with_group(&r.p, group.clone()),
            e: LatticeDoc::with_group(&r.e, group.clone()),
            inject: r.inject.matrix.clone(),
            project: r.project.matrix.clone(),
            summands: r.summands.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoDoc {
    /// `true`, `false` or `null` for unknown.
    pub invertible: Option<bool>,
    pub reason: String,
    pub detail: String,
    pub acting_order: usize,
    pub reduced: bool,
    pub rank_e: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<SplitCertificate>,
    pub retract_rational: Option<String>,
}

impl RhoDoc {
    pub fn new(v: &RhoVerdict) -> RhoDoc {
        let invertible = match &v.invertible {
            Invertibility::Yes(_) => Some(true),
            Invertibility::No(_) => Some(false),
            Invertibility::Unknown(_) => None,
        };
        let certificate = match &v.invertible {
            Invertibility::Yes(crate::invertible::YesReason::Certificate(c)) => Some((**c).clone()),
            _ => None,
        };
        RhoDoc {
            invertible,
            reason: v.invertible.reason().to_string(),
            detail: v.invertible.to_string(),
            acting_order: v.acting_order,
            reduced: v.reduced,
            rank_e: v.resolution.e.rank(),
            certificate,
            retract_rational: v.retract_rational_conclusion.clone(),
        }
    }
}
