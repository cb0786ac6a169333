use std::collections::BTreeMap;
use std::sync::Arc;

use exact_linalg::IntMatrix;
use group_core::{catalog, FiniteGroup, GroupDoc};
use serde::{Deserialize, Serialize};

use crate::error::LatticeError;
use crate::lattice::{rank_cap, Lattice};

/// A group given inline or by a catalog name such as `"C2"` or `"S3"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Named(String),
    Doc(GroupDoc),
}

impl GroupRef {
    pub fn build(&self) -> Result<FiniteGroup, LatticeError> {
        match self {
            GroupRef::Named(name) => catalog::by_name(name).ok_or_else(|| LatticeError::UnknownGroup(name.clone())),
            GroupRef::Doc(d) => Ok(d.build()?),
        }
    }
}

/// JSON form: `{"group": ..., "rank": 2, "action": {"tau": [[0,1],[1,0]]}}`.
/// Matrices act on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDoc {
    pub group: GroupRef,
    pub rank: usize,
    pub action: BTreeMap<String, IntMatrix>,
}

impl LatticeDoc {
    pub fn build(&self) -> Result<Lattice, LatticeError> {
        let cap = rank_cap();
        if self.rank > cap {
            return Err(LatticeError::RankCapExceeded { rank: self.rank, cap });
        }
        let group = Arc::new(self.group.build()?);
        for name in self.action.keys() {
            if group.generator_index(name).is_none() {
                return Err(LatticeError::UnknownGenerator(name.clone()));
            }
        }
        let mut action = Vec::new();
        for name in group.generator_names() {
            let m = self.action.get(name).ok_or_else(|| LatticeError::MissingGenerator(name.clone()))?;
            action.push(m.clone());
        }
        Lattice::new_with_rank(group, self.rank, action)
    }

    /// Document for a lattice; the group is written as its regular permutation action.
    pub fn from_lattice(l: &Lattice) -> LatticeDoc {
        LatticeDoc::with_group(l, GroupRef::Doc(GroupDoc::regular(l.group())))
    }

    pub fn with_group(l: &Lattice, group: GroupRef) -> LatticeDoc {
        let action = l
            .group()
            .generator_names()
            .iter()
            .zip(l.action())
            .map(|(n, m)| (n.clone(), m.clone()))
            .collect();
        LatticeDoc { group, rank: l.rank(), action }
    }
}
