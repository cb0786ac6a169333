use serde::{Deserialize, Serialize};

use crate::error::GroupError;
use crate::group::{FiniteGroup, DEFAULT_ORDER_CAP};
use crate::word::{parse_word, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDoc {
    pub name: String,
    pub image: Vec<usize>,
}

/// JSON form: `{"order_cap": 64, "generators": [{"name": "tau", "image": [1, 0]}]}`,
/// optionally with `"relations": [["word", "word"], ...]` checked after closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
    #[serde(default = "default_cap")]
    pub order_cap: usize,
    pub generators: Vec<GeneratorDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<[String; 2]>,
}

fn default_cap() -> usize {
    DEFAULT_ORDER_CAP
}

impl GroupDoc {
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        self.build_capped(self.order_cap)
    }

    /// Builds with `min(order_cap, cap)` as the closure cap.
    pub fn build_capped(&self, cap: usize) -> Result<FiniteGroup, GroupError> {
        let gens: Vec<(String, Vec<usize>)> = self.generators.iter().map(|g| (g.name.clone(), g.image.clone())).collect();
        let names: Vec<String> = gens.iter().map(|g| g.0.clone()).collect();
        let rels = self
            .relations
            .iter()
            .map(|[l, r]| Ok((parse_word(l, &names)?, parse_word(r, &names)?)))
            .collect::<Result<Vec<(Word, Word)>, GroupError>>()?;
        FiniteGroup::from_permutations_with_relations(&gens, &rels, self.order_cap.min(cap))
    }

    pub fn new(gens: Vec<(String, Vec<usize>)>) -> Self {
        GroupDoc {
            order_cap: DEFAULT_ORDER_CAP,
            generators: gens.into_iter().map(|(name, image)| GeneratorDoc { name, image }).collect(),
            relations: Vec::new(),
        }
    }

    /// Regular-action document of an arbitrary table group (left multiplication).
    pub fn regular(g: &FiniteGroup) -> Self {
        let gens = g
            .generators()
            .iter()
            .zip(g.generator_names())
            .map(|(&s, name)| (name.clone(), (0..g.order()).map(|x| g.mul(s, x)).collect()))
            .collect();
        let mut d = GroupDoc::new(gens);
        d.order_cap = d.order_cap.max(g.order());
        d
    }
}
