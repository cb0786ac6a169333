use std::sync::Arc;

use exact_linalg::{column_hermite_basis, determinant, kernel, Int, IntMatrix, Solver};
use group_core::{quotient_group, FiniteGroup, Subgroup};

use crate::error::LatticeError;
use crate::lattice::{Lattice, LatticeMap};

/// Saturated basis (columns) of `M^H`, the common kernel of `ρ(h) − I` over
/// the generators of `H`.
pub fn fixed_basis(l: &Lattice, h: &Subgroup) -> IntMatrix {
    let n = l.rank();
    if h.generators().is_empty() {
        return IntMatrix::identity(n);
    }
    let id = IntMatrix::identity(n);
    let mut stacked = IntMatrix::zeros(0, n);
    for &s in h.generators() {
        stacked = stacked.vstack(&l.matrix(s).sub(&id));
    }
    kernel(&stacked)
}

pub fn fixed_rank(l: &Lattice, h: &Subgroup) -> usize {
    fixed_basis(l, h).cols()
}

/// Restricts the action to the sublattice spanned by the columns of `basis`
/// (full column rank), expressing it in that basis.
pub fn sublattice(l: &Lattice, basis: &IntMatrix) -> Result<Lattice, LatticeError> {
    let solver = Solver::new(basis);
    if solver.rank() != basis.cols() {
        return Err(LatticeError::NotStable);
    }
    let mut action = Vec::with_capacity(l.action().len());
    for m in l.action() {
        action.push(solver.solve(&m.mul(basis)).ok_or(LatticeError::NotStable)?);
    }
    Ok(Lattice::from_generators_trusted(l.group().clone(), basis.cols(), action))
}

/// `M^H` as a `G`-lattice (requires `H` normal) with its inclusion into `M`.
pub fn fixed_sublattice(l: &Lattice, h: &Subgroup) -> Result<(Lattice, LatticeMap), LatticeError> {
    if !h.is_normal() {
        return Err(LatticeError::NotNormal);
    }
    let b = fixed_basis(l, h);
    let sub = sublattice(l, &b)?;
    let inc = LatticeMap { source: sub.clone(), target: l.clone(), matrix: b };
    Ok((sub, inc))
}

/// `M^H` with the induced action of `G/H`, plus the projection `G → G/H`.
pub fn fixed_quotient_lattice(l: &Lattice, h: &Subgroup) -> Result<(Lattice, Vec<usize>), LatticeError> {
    let (sub, _) = fixed_sublattice(l, h)?;
    deflate(&sub, h)
}

/// Pulls the action back along a homomorphism `k → G` given as an element map.
pub fn pullback(l: &Lattice, k: &Arc<FiniteGroup>, map: &[usize]) -> Result<Lattice, LatticeError> {
    let g = l.group();
    if map.len() != k.order() || map.iter().any(|&x| x >= g.order()) || map[0] != 0 {
        return Err(LatticeError::NotHomomorphism);
    }
    for x in 0..k.order() {
        for &s in k.generators() {
            if map[k.mul(x, s)] != g.mul(map[x], map[s]) {
                return Err(LatticeError::NotHomomorphism);
            }
        }
    }
    let els = map.iter().map(|&x| l.matrix(x).clone()).collect();
    Ok(Lattice::from_elements_trusted(k.clone(), l.rank(), els))
}

/// Restriction to a subgroup, over the subgroup's own table (see `Subgroup::as_group`).
pub fn restrict(l: &Lattice, h: &Subgroup) -> Lattice {
    let (hg, embed) = h.as_group();
    pullback(l, &Arc::new(hg), &embed).expect("subgroup embedding is a homomorphism")
}

/// Inflation of a `G/N`-lattice to `G` along the projection.
pub fn inflate(l: &Lattice, g: &Arc<FiniteGroup>, projection: &[usize]) -> Result<Lattice, LatticeError> {
    pullback(l, g, projection)
}

/// The same module viewed over `G/N`; requires `N` to act trivially.
pub fn deflate(l: &Lattice, n: &Subgroup) -> Result<(Lattice, Vec<usize>), LatticeError> {
    if let Some(&bad) = n.elements().iter().find(|&&x| !l.matrix(x).is_identity()) {
        return Err(LatticeError::ActionNotTrivialOnKernel(bad));
    }
    let (q, proj) = quotient_group(l.group(), n)?;
    let mut els: Vec<Option<IntMatrix>> = vec![None; q.order()];
    for (x, &c) in proj.iter().enumerate() {
        if els[c].is_none() {
            els[c] = Some(l.matrix(x).clone());
        }
    }
    let els = els.into_iter().map(|m| m.expect("projection is onto")).collect();
    Ok((Lattice::from_elements_trusted(Arc::new(q), l.rank(), els), proj))
}

/// One character `x ↦ row·x mod modulus` on a lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub modulus: i64,
    pub row: Vec<i64>,
}

impl Character {
    pub fn new(modulus: i64, row: Vec<i64>) -> Character {
        Character { modulus, row }
    }
}

#[derive(Clone, Debug)]
pub struct CharacterKernel {
    pub lattice: Lattice,
    pub inclusion: LatticeMap,
    /// `[P : M]`.
    pub index: Int,
}

/// `M = {x ∈ P : χᵢ(x) ≡ 0 mod nᵢ for all i}` with the induced action.
pub fn character_kernel_sublattice(p: &Lattice, chars: &[Character]) -> Result<CharacterKernel, LatticeError> {
    let n = p.rank();
    let m = chars.len();
    for c in chars {
        if c.modulus < 1 {
            return Err(LatticeError::BadCharacter(format!("modulus {} is not positive", c.modulus)));
        }
        if c.row.len() != n {
            return Err(LatticeError::BadCharacter(format!("row has length {}, rank is {n}", c.row.len())));
        }
    }
    let basis = if m == 0 {
        IntMatrix::identity(n)
    } else {
        // Kernel of [R | diag(n_i)], projected onto the P coordinates.
        let mut a = IntMatrix::zeros(m, n + m);
        for (i, c) in chars.iter().enumerate() {
            for (j, &v) in c.row.iter().enumerate() {
                a[(i, j)] = v.into();
            }
            a[(i, n + i)] = c.modulus.into();
        }
        let k = kernel(&a);
        column_hermite_basis(&k.block(0, 0, n, k.cols()))
    };
    debug_assert_eq!(basis.cols(), n);
    let index = determinant(&basis).abs();
    let lattice = match sublattice(p, &basis) {
        Ok(l) => l,
        Err(_) => return Err(LatticeError::KernelNotStable),
    };
    let inclusion = LatticeMap { source: lattice.clone(), target: p.clone(), matrix: basis };
    Ok(CharacterKernel { lattice, inclusion, index })
}
