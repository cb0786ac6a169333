use std::collections::BTreeMap;

use exact_linalg::IntMatrix;
use serde::{Deserialize, Serialize};

use crate::action::{MonomialAction, MonomialMap};
use crate::error::MonomialError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorMapDoc {
    #[serde(rename = "A")]
    pub a: IntMatrix,
    pub c: Vec<i64>,
    pub t: i64,
}

/// JSON form: `{"e": 3, "vars": [...], "generators": {"tau": {"A": ..., "c": ..., "t": 2}}, "relations": [["tau^2", "1"]]}`.
/// Generators are ordered by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialDoc {
    pub e: i64,
    pub vars: Vec<String>,
    pub generators: BTreeMap<String, GeneratorMapDoc>,
    #[serde(default)]
    pub relations: Vec<(String, String)>,
}

impl MonomialDoc {
    pub fn build(&self) -> Result<MonomialAction, MonomialError> {
        let gens = self
            .generators
            .iter()
            .map(|(n, g)| (n.clone(), MonomialMap { a: g.a.clone(), c: g.c.clone(), t: g.t }))
            .collect();
        MonomialAction::new(self.e, self.vars.clone(), gens, &self.relations)
    }

    pub fn from_action(action: &MonomialAction) -> MonomialDoc {
        let names = action.generator_names();
        MonomialDoc {
            e: action.root_order(),
            vars: action.vars().to_vec(),
            generators: names
                .iter()
                .zip(action.generators())
                .map(|(n, g)| (n.clone(), GeneratorMapDoc { a: g.a.clone(), c: g.c.clone(), t: g.t }))
                .collect(),
            relations: action.relations().iter().map(|(l, r)| (l.render(names), r.render(names))).collect(),
        }
    }
}
