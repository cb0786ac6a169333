use std::collections::HashMap;
use std::sync::Arc;

use exact_linalg::IntMatrix;
use group_core::{order_cap, FiniteGroup, GroupError};
use lattice_core::Lattice;

use crate::action::{MonomialAction, Verification};
use crate::error::MonomialError;

/// The finite group generated by invertible integer matrices, as the
/// permutation group of left multiplication on the closure.
pub fn matrix_group(names: &[String], mats: &[IntMatrix], cap: usize) -> Result<FiniteGroup, GroupError> {
    let n = mats.first().map_or(0, |m| m.rows());
    let mut elems = vec![IntMatrix::identity(n)];
    let mut index: HashMap<IntMatrix, usize> = HashMap::from([(IntMatrix::identity(n), 0)]);
    let mut next = 0;
    while next < elems.len() {
        let x = elems[next].clone();
        next += 1;
        for g in mats {
            let y = g.mul(&x);
            if !index.contains_key(&y) {
                if elems.len() >= cap {
                    return Err(GroupError::ClosureExceedsCap { cap });
                }
                index.insert(y.clone(), elems.len());
                elems.push(y);
            }
        }
    }
    let gens: Vec<(String, Vec<usize>)> = names
        .iter()
        .zip(mats)
        .map(|(name, g)| (name.clone(), elems.iter().map(|x| index[&g.mul(x)]).collect()))
        .collect();
    FiniteGroup::from_permutations(&gens, cap)
}

/// The lattice of exponent vectors, acted on by the group generated by the
/// exponent matrices. Coefficients and twists are forgotten.
pub fn exponent_lattice(action: &MonomialAction) -> Result<Lattice, MonomialError> {
    if let Verification::Fails(f) = action.verify() {
        return Err(MonomialError::UnverifiedAction(f.to_string()));
    }
    let mats: Vec<IntMatrix> = action.generators().iter().map(|g| g.a.clone()).collect();
    let group = matrix_group(action.generator_names(), &mats, order_cap())?;
    Ok(Lattice::new_with_rank(Arc::new(group), action.nvars(), mats)?)
}
