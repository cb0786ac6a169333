//! Standard building blocks for examples and randomized tests.

use std::sync::Arc;

use exact_linalg::{kernel, IntMatrix};
use group_core::{subgroup_reps, FiniteGroup};

use crate::lattice::{dual, induced_lattice, tensor, Lattice};
use crate::sublattice::sublattice;

/// Kernel of the augmentation `ℤ[G/H] → ℤ`.
pub fn augmentation_kernel(perm: &Lattice) -> Lattice {
    let ones = IntMatrix::from_int_rows(vec![vec![1.into(); perm.rank()]], perm.rank());
    let k = kernel(&ones);
    sublattice(perm, &k).expect("augmentation kernel is stable")
}

/// Rank one lattices `ℤ_χ` for the nontrivial characters `χ: G → {±1}`.
pub fn sign_characters(g: &Arc<FiniteGroup>) -> Vec<Lattice> {
    let k = g.generators().len();
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << k) {
        let signs: Vec<i64> = (0..k).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
        if let Ok(l) = Lattice::from_signs(g, &signs) {
            if !out.contains(&l) {
                out.push(l);
            }
        }
    }
    out.retain(|l: &Lattice| !l.action().iter().all(|m| m.is_identity()));
    out
}

/// Permutation lattices, augmentation kernels and their duals, sign
/// characters and sign twists of augmentation kernels, all of rank at most `max_rank`.
pub fn atoms(g: &Arc<FiniteGroup>, max_rank: usize) -> Vec<Lattice> {
    let mut out = Vec::new();
    let signs = sign_characters(g);
    for h in subgroup_reps(g).expect("group within cap") {
        let p = induced_lattice(g, &h);
        if p.rank() > max_rank {
            continue;
        }
        if p.rank() > 1 {
            let i = augmentation_kernel(&p);
            for s in &signs {
                out.push(tensor(s, &i).unwrap());
            }
            out.push(dual(&i));
            out.push(i);
        }
        out.push(p);
    }
    out.extend(signs);
    out
}

/// Product of elementary matrices `I + q·E_ij` (as row operations `i -= q·row j`).
pub fn elementary_product(n: usize, ops: &[(usize, usize, i64)]) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    for &(i, j, q) in ops {
        if i != j && i < n && j < n {
            m.row_sub_mul(i, j, &q.into());
        }
    }
    m
}
