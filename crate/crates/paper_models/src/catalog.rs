use std::collections::BTreeMap;
use std::sync::Arc;

use group_core::{catalog as groups, parse_word, Subgroup};
use lattice_core::{direct_sum, induced_lattice, Lattice};

use crate::cyclotomic::cyclotomic;
use crate::error::PaperError;
use crate::lattices::{case1_lattice, lambda_lattice, lambda_tensor};
use crate::reiner::{reiner_model, ReinerCounts};

pub const CATALOG_NAMES: &[&str] = &[
    "sign",
    "trivial",
    "regular",
    "reiner_model",
    "case1_M",
    "lambda",
    "lambda_tensor",
    "case3_M",
    "cyclic_quotient",
    "induced",
];

pub type Params = BTreeMap<String, String>;

fn int_param(params: &Params, key: &str) -> Result<i64, PaperError> {
    params
        .get(key)
        .ok_or_else(|| PaperError::BadParam(key.to_string()))?
        .trim()
        .parse()
        .map_err(|_| PaperError::BadParam(key.to_string()))
}

fn count_param(params: &Params, key: &str) -> Result<usize, PaperError> {
    match params.get(key) {
        None => Ok(0),
        Some(_) => usize::try_from(int_param(params, key)?).map_err(|_| PaperError::BadParam(key.to_string())),
    }
}

/// Named example lattices.
///
/// * `sign`, `trivial`, `regular`: the rank 1, 1, 2 lattices over `C₂ = ⟨tau⟩`.
/// * `reiner_model` with `a`, `b`, `c`: their direct sum with those multiplicities.
/// * `case1_M`, `lambda`, `lambda_tensor`, `case3_M` with `p`.
/// * `cyclic_quotient` with `n`, `d` (`d | n`): `ℤ[C_n]/Φ_d`.
/// * `induced` with `group` (a catalog group) and `sub` (comma separated words).
pub fn catalog(name: &str, params: &Params) -> Result<Lattice, PaperError> {
    let model = |a, b, c| reiner_model(ReinerCounts { a, b, c });
    match name {
        "sign" => Ok(model(1, 0, 0)),
        "trivial" => Ok(model(0, 1, 0)),
        "regular" => Ok(model(0, 0, 1)),
        "reiner_model" => {
            Ok(model(count_param(params, "a")?, count_param(params, "b")?, count_param(params, "c")?))
        }
        "case1_M" => case1_lattice(int_param(params, "p")?),
        "lambda" => lambda_lattice(int_param(params, "p")?),
        "lambda_tensor" => lambda_tensor(int_param(params, "p")?),
        "case3_M" => {
            let m = case1_lattice(int_param(params, "p")?)?;
            Ok(direct_sum(&m, &m)?)
        }
        "cyclic_quotient" => {
            let n = int_param(params, "n")?;
            let d = int_param(params, "d")?;
            if n < 1 || d < 1 || n % d != 0 {
                return Err(PaperError::BadParam("d".into()));
            }
            let g = Arc::new(groups::cyclic(n as usize));
            let c = cyclotomic(d as usize).poly().companion();
            Ok(Lattice::new(g, vec![c])?)
        }
        "induced" => {
            let gname = params.get("group").ok_or_else(|| PaperError::BadParam("group".into()))?;
            let g = Arc::new(groups::by_name(gname).ok_or_else(|| PaperError::BadParam("group".into()))?);
            let mut gens = Vec::new();
            for w in params.get("sub").map(String::as_str).unwrap_or("").split(',').filter(|s| !s.trim().is_empty()) {
                gens.push(g.eval_word(&parse_word(w, g.generator_names())?));
            }
            Ok(induced_lattice(&g, &Subgroup::generated_by(&g, &gens)))
        }
        _ => Err(PaperError::UnknownName(name.to_string())),
    }
}
