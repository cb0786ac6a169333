use exact_linalg::{determinant, Int, IntMatrix, Solver};
use group_core::Word;

use crate::action::{reduce_int, MonomialAction, MonomialMap};
use crate::error::MonomialError;

/// New variables as monomials in the old ones: column `j` of `b` is the
/// exponent vector of new variable `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChangeOfVariables {
    pub new_vars: Vec<String>,
    pub b: IntMatrix,
}

impl ChangeOfVariables {
    /// Builds `b` from definitions such as `("X", [("x0", 1), ("y0", -1)])`.
    pub fn from_monomials(old_vars: &[String], defs: &[(String, Vec<(String, i64)>)]) -> Result<Self, MonomialError> {
        let mut b = IntMatrix::zeros(old_vars.len(), defs.len());
        for (j, (_, mono)) in defs.iter().enumerate() {
            for (v, k) in mono {
                let i = old_vars.iter().position(|o| o == v).ok_or_else(|| MonomialError::UnknownVariable(v.clone()))?;
                b[(i, j)] += &Int::from(*k);
            }
        }
        Ok(ChangeOfVariables { new_vars: defs.iter().map(|d| d.0.clone()).collect(), b })
    }
}

#[derive(Clone, Debug)]
pub struct ChangeVerdict {
    pub det: Int,
    pub certified: bool,
    /// The action in the new variables when `certified`.
    pub action: Option<MonomialAction>,
}

/// Certifies an invertible change of variables (`|det B| = 1`) and rewrites
/// the action: `A' = B⁻¹AB`, `c' = Bᵀc`.
pub fn certify_change(action: &MonomialAction, change: &ChangeOfVariables) -> ChangeVerdict {
    let n = action.nvars();
    if change.b.rows() != n || change.b.cols() != n {
        return ChangeVerdict { det: Int::zero(), certified: false, action: None };
    }
    let det = determinant(&change.b);
    if !det.is_unit() {
        return ChangeVerdict { det, certified: false, action: None };
    }
    let rewritten = substitute(action, change).expect("unimodular change keeps every lattice stable");
    ChangeVerdict { det, certified: true, action: Some(rewritten) }
}

/// Rewrites the action on the subfield generated by the new monomials. The
/// columns of `B` must be independent and span a sublattice stable under every
/// generator; this is how fixed-field descents such as `x ↦ x^p` are handled.
pub fn substitute(action: &MonomialAction, change: &ChangeOfVariables) -> Result<MonomialAction, MonomialError> {
    let b = &change.b;
    let e = action.root_order();
    if b.rows() != action.nvars() {
        return Err(MonomialError::BadShape {
            name: "change".into(),
            what: format!("B has {} rows for {} variables", b.rows(), action.nvars()),
        });
    }
    if exact_linalg::rank(b) != b.cols() {
        return Err(MonomialError::Singular(Int::zero()));
    }
    let solver = Solver::new(b);
    let mut gens = Vec::new();
    for (name, g) in action.generator_names().iter().zip(action.generators()) {
        let a = solver.solve(&g.a.mul(b)).ok_or_else(|| MonomialError::NotStable(name.clone()))?;
        if !exact_linalg::is_unimodular(&a) {
            return Err(MonomialError::NotStable(name.clone()));
        }
        let cv: Vec<Int> = g.c.iter().map(|&x| Int::from(x)).collect();
        let c = b.transpose().mul_vec(&cv).iter().map(|x| reduce_int(x, e)).collect();
        gens.push(MonomialMap { a, c, t: g.t });
    }
    Ok(MonomialAction::from_parts(
        e,
        change.new_vars.clone(),
        action.generator_names().to_vec(),
        gens,
        action.relations().to_vec(),
    ))
}

/// Restricts to the variables `keep`, whose images must only involve `keep`.
pub fn restrict_variables(action: &MonomialAction, keep: &[&str]) -> Result<MonomialAction, MonomialError> {
    let mut b = IntMatrix::zeros(action.nvars(), keep.len());
    for (j, v) in keep.iter().enumerate() {
        let i = action.vars().iter().position(|o| o == v).ok_or_else(|| MonomialError::UnknownVariable(v.to_string()))?;
        b[(i, j)] = Int::one();
    }
    substitute(action, &ChangeOfVariables { new_vars: keep.iter().map(|s| s.to_string()).collect(), b })
}

/// Drops generators that act trivially; they are erased from the relations.
pub fn drop_trivial_generators(action: &MonomialAction, drop: &[&str]) -> Result<MonomialAction, MonomialError> {
    let e = action.root_order();
    let mut idx = Vec::new();
    for d in drop {
        let i = action
            .generator_names()
            .iter()
            .position(|n| n == d)
            .ok_or_else(|| MonomialError::Group(group_core::GroupError::UnknownGenerator(d.to_string())))?;
        if !action.generators()[i].is_identity(e) {
            return Err(MonomialError::NotTrivial(d.to_string()));
        }
        idx.push(i);
    }
    let remap: Vec<Option<usize>> = {
        let mut next = 0;
        (0..action.generators().len())
            .map(|i| {
                if idx.contains(&i) {
                    None
                } else {
                    next += 1;
                    Some(next - 1)
                }
            })
            .collect()
    };
    let fix = |w: &Word| Word(w.0.iter().filter_map(|&(g, k)| remap[g].map(|h| (h, k))).collect());
    let relations = action.relations().iter().map(|(l, r)| (fix(l), fix(r))).collect();
    let keep: Vec<usize> = (0..remap.len()).filter(|i| remap[*i].is_some()).collect();
    Ok(MonomialAction::from_parts(
        e,
        action.vars().to_vec(),
        keep.iter().map(|&i| action.generator_names()[i].clone()).collect(),
        keep.iter().map(|&i| action.generators()[i].clone()).collect(),
        relations,
    ))
}
