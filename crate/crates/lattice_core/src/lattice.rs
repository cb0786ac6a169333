use std::fmt;
use std::sync::Arc;

use exact_linalg::{determinant, IntMatrix};
use group_core::{direct_product, FiniteGroup, Subgroup};

use crate::error::LatticeError;

pub const DEFAULT_RANK_CAP: usize = 512;

/// Rank cap for loaded documents, overridable through `LATNOETHER_CAP_RANK`.
pub fn rank_cap() -> usize {
    std::env::var("LATNOETHER_CAP_RANK")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_RANK_CAP)
}

struct Inner {
    group: Arc<FiniteGroup>,
    rank: usize,
    action: Vec<IntMatrix>,
    elements: Vec<IntMatrix>,
}

/// A π-lattice: `ℤ^rank` with one integer matrix per group generator.
///
/// Vectors are columns and `ρ(gh) = ρ(g)ρ(h)`. The full element-to-matrix map
/// is built (and checked) at construction.
#[derive(Clone)]
pub struct Lattice {
    inner: Arc<Inner>,
}

pub fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Lattice {
    /// Validates the generator matrices and extends them to all elements.
    pub fn new(group: Arc<FiniteGroup>, action: Vec<IntMatrix>) -> Result<Lattice, LatticeError> {
        let gens = group.generators().len();
        if action.len() != gens {
            return Err(LatticeError::GeneratorCount { expected: gens, got: action.len() });
        }
        let rank = action.first().map_or(0, |m| m.rows());
        for (m, name) in action.iter().zip(group.generator_names()) {
            if m.rows() != rank || m.cols() != rank {
                return Err(LatticeError::BadShape { name: name.clone(), rows: m.rows(), cols: m.cols(), rank });
            }
        }
        Lattice::new_with_rank(group, rank, action)
    }

    /// Like [`Lattice::new`] but with an explicit rank, needed when the group has no generators.
    pub fn new_with_rank(group: Arc<FiniteGroup>, rank: usize, action: Vec<IntMatrix>) -> Result<Lattice, LatticeError> {
        if action.len() != group.generators().len() {
            return Err(LatticeError::GeneratorCount { expected: group.generators().len(), got: action.len() });
        }
        for (m, name) in action.iter().zip(group.generator_names()) {
            if m.rows() != rank || m.cols() != rank {
                return Err(LatticeError::BadShape { name: name.clone(), rows: m.rows(), cols: m.cols(), rank });
            }
        }
        let elements = spanning_products(&group, rank, &action);
        for x in 0..group.order() {
            for (k, &s) in group.generators().iter().enumerate() {
                if elements[x].mul(&action[k]) != elements[group.mul(x, s)] {
                    // Report the more specific failure when a generator is not invertible.
                    for (m, name) in action.iter().zip(group.generator_names()) {
                        if !determinant(m).is_unit() {
                            return Err(LatticeError::NotUnimodular(name.clone()));
                        }
                    }
                    return Err(LatticeError::RelationViolated {
                        element: x,
                        generator: group.generator_names()[k].clone(),
                    });
                }
            }
        }
        Ok(Lattice::from_parts(group, rank, action, elements))
    }

    /// Builds from generator matrices already known to define an action.
    pub(crate) fn from_generators_trusted(group: Arc<FiniteGroup>, rank: usize, action: Vec<IntMatrix>) -> Lattice {
        let elements = spanning_products(&group, rank, &action);
        Lattice::from_parts(group, rank, action, elements)
    }

    /// Builds from a full element map that is a homomorphism by construction.
    pub(crate) fn from_elements_trusted(group: Arc<FiniteGroup>, rank: usize, elements: Vec<IntMatrix>) -> Lattice {
        debug_assert_eq!(elements.len(), group.order());
        let action = group.generators().iter().map(|&s| elements[s].clone()).collect();
        Lattice::from_parts(group, rank, action, elements)
    }

    fn from_parts(group: Arc<FiniteGroup>, rank: usize, action: Vec<IntMatrix>, elements: Vec<IntMatrix>) -> Lattice {
        Lattice { inner: Arc::new(Inner { group, rank, action, elements }) }
    }

    /// `ℤ^rank` with trivial action.
    pub fn trivial(group: &Arc<FiniteGroup>, rank: usize) -> Lattice {
        let elements = vec![IntMatrix::identity(rank); group.order()];
        Lattice::from_elements_trusted(group.clone(), rank, elements)
    }

    pub fn zero(group: &Arc<FiniteGroup>) -> Lattice {
        Lattice::trivial(group, 0)
    }

    /// Rank one lattice on which each generator acts by the given sign.
    pub fn from_signs(group: &Arc<FiniteGroup>, signs: &[i64]) -> Result<Lattice, LatticeError> {
        let action = signs.iter().map(|&s| IntMatrix::from_rows(&[[s]])).collect();
        Lattice::new_with_rank(group.clone(), 1, action)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.inner.group
    }

    pub fn rank(&self) -> usize {
        self.inner.rank
    }

    /// Generator matrices, in the group's generator order.
    pub fn action(&self) -> &[IntMatrix] {
        &self.inner.action
    }

    pub fn generator_matrix(&self, name: &str) -> Option<&IntMatrix> {
        self.group().generator_index(name).map(|k| &self.inner.action[k])
    }

    /// Matrix of an arbitrary group element.
    pub fn matrix(&self, g: usize) -> &IntMatrix {
        &self.inner.elements[g]
    }

    pub fn elements(&self) -> &[IntMatrix] {
        &self.inner.elements
    }

    pub fn same_group(&self, other: &Lattice) -> bool {
        same_group(self.group(), other.group())
    }

    /// True when every generator acts by a permutation matrix.
    pub fn is_permutation_basis(&self) -> bool {
        self.action().iter().all(|m| m.is_permutation())
    }

    /// Elements acting as the identity (a normal subgroup).
    pub fn action_kernel(&self) -> Subgroup {
        let els: Vec<usize> = (0..self.group().order()).filter(|&g| self.matrix(g).is_identity()).collect();
        Subgroup::from_elements(self.group(), els)
    }

    pub fn is_faithful(&self) -> bool {
        (1..self.group().order()).all(|g| !self.matrix(g).is_identity())
    }

    /// The same action expressed in a new basis: columns of `b` are the new
    /// basis vectors written in the old one, so `ρ'(g) = b⁻¹ρ(g)b`.
    pub fn change_basis(&self, b: &IntMatrix) -> Option<Lattice> {
        let inv = exact_linalg::unimodular_inverse(b)?;
        if b.rows() != self.rank() {
            return None;
        }
        let els = self.elements().iter().map(|m| inv.mul(&m.mul(b))).collect();
        Some(Lattice::from_elements_trusted(self.group().clone(), self.rank(), els))
    }
}

fn spanning_products(group: &FiniteGroup, rank: usize, action: &[IntMatrix]) -> Vec<IntMatrix> {
    let mut elements: Vec<Option<IntMatrix>> = vec![None; group.order()];
    elements[0] = Some(IntMatrix::identity(rank));
    for &x in &group.bfs_order()[1..] {
        let (y, k) = group.spanning_step(x).expect("spanning step");
        let m = elements[y].as_ref().expect("bfs order").mul(&action[k]);
        elements[x] = Some(m);
    }
    elements.into_iter().map(|m| m.expect("all elements reached")).collect()
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Lattice) -> bool {
        self.same_group(other) && self.rank() == other.rank() && self.action() == other.action()
    }
}

impl Eq for Lattice {}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("Lattice");
        d.field("group_order", &self.group().order()).field("rank", &self.rank());
        for (m, name) in self.action().iter().zip(self.group().generator_names()) {
            d.field(name, &m.to_rows());
        }
        d.finish()
    }
}

/// A map of lattices given by a `target.rank × source.rank` matrix that
/// commutes with the actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeMap {
    pub source: Lattice,
    pub target: Lattice,
    pub matrix: IntMatrix,
}

impl LatticeMap {
    pub fn new(source: Lattice, target: Lattice, matrix: IntMatrix) -> Result<LatticeMap, LatticeError> {
        if !source.same_group(&target) {
            return Err(LatticeError::GroupMismatch);
        }
        if matrix.rows() != target.rank() || matrix.cols() != source.rank() {
            return Err(LatticeError::MapShape {
                rows: matrix.rows(),
                cols: matrix.cols(),
                target: target.rank(),
                src: source.rank(),
            });
        }
        for (k, name) in source.group().generator_names().iter().enumerate() {
            if target.action()[k].mul(&matrix) != matrix.mul(&source.action()[k]) {
                return Err(LatticeError::NotIntertwining(name.clone()));
            }
        }
        Ok(LatticeMap { source, target, matrix })
    }

    pub fn identity(l: &Lattice) -> LatticeMap {
        LatticeMap { source: l.clone(), target: l.clone(), matrix: IntMatrix::identity(l.rank()) }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &LatticeMap) -> Result<LatticeMap, LatticeError> {
        if self.target != other.source {
            return Err(LatticeError::GroupMismatch);
        }
        Ok(LatticeMap { source: self.source.clone(), target: other.target.clone(), matrix: other.matrix.mul(&self.matrix) })
    }

    /// The dual map `target° → source°` (transpose matrix).
    pub fn dual(&self) -> LatticeMap {
        LatticeMap { source: dual(&self.target), target: dual(&self.source), matrix: self.matrix.transpose() }
    }
}

/// `ρ°(g) = ρ(g⁻¹)ᵀ`.
pub fn dual(l: &Lattice) -> Lattice {
    let g = l.group();
    let els = (0..g.order()).map(|x| l.matrix(g.inv(x)).transpose()).collect();
    Lattice::from_elements_trusted(g.clone(), l.rank(), els)
}

pub fn direct_sum(a: &Lattice, b: &Lattice) -> Result<Lattice, LatticeError> {
    if !a.same_group(b) {
        return Err(LatticeError::GroupMismatch);
    }
    let els = a.elements().iter().zip(b.elements()).map(|(x, y)| x.block_diag(y)).collect();
    Ok(Lattice::from_elements_trusted(a.group().clone(), a.rank() + b.rank(), els))
}

/// Direct sum of a non-empty list of lattices over one group.
pub fn direct_sum_all(parts: &[Lattice]) -> Result<Lattice, LatticeError> {
    let (first, rest) = parts.split_first().ok_or(LatticeError::GeneratorCount { expected: 1, got: 0 })?;
    rest.iter().try_fold(first.clone(), |acc, l| direct_sum(&acc, l))
}

/// Diagonal tensor product over a common group.
pub fn tensor(a: &Lattice, b: &Lattice) -> Result<Lattice, LatticeError> {
    if !a.same_group(b) {
        return Err(LatticeError::GroupMismatch);
    }
    let els = a.elements().iter().zip(b.elements()).map(|(x, y)| x.kron(y)).collect();
    Ok(Lattice::from_elements_trusted(a.group().clone(), a.rank() * b.rank(), els))
}

/// Outer tensor product of a `G₁`-lattice and a `G₂`-lattice, over `G₁ × G₂`
/// as built by [`group_core::direct_product`].
pub fn tensor_outer(a: &Lattice, b: &Lattice) -> Lattice {
    let g = Arc::new(direct_product(a.group(), b.group()));
    let nb = b.group().order();
    let els = (0..g.order()).map(|x| a.matrix(x / nb).kron(b.matrix(x % nb))).collect();
    Lattice::from_elements_trusted(g, a.rank() * b.rank(), els)
}

/// The permutation lattice `ℤ[G/H]` on left cosets ordered by least element.
pub fn induced_lattice(group: &Arc<FiniteGroup>, h: &Subgroup) -> Lattice {
    let cosets = h.left_cosets();
    let mut coset_of = vec![0; group.order()];
    for (j, c) in cosets.iter().enumerate() {
        for &x in c {
            coset_of[x] = j;
        }
    }
    let n = cosets.len();
    let els = (0..group.order())
        .map(|g| {
            let mut m = IntMatrix::zeros(n, n);
            for (j, c) in cosets.iter().enumerate() {
                m[(coset_of[group.mul(g, c[0])], j)] = 1.into();
            }
            m
        })
        .collect();
    Lattice::from_elements_trusted(group.clone(), n, els)
}

/// The regular lattice `ℤ[G]`.
pub fn regular_lattice(group: &Arc<FiniteGroup>) -> Lattice {
    induced_lattice(group, &Subgroup::trivial(group))
}
