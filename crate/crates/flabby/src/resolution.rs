use std::sync::Arc;

use exact_linalg::{is_saturated, kernel, rank, solve_one, Int, IntMatrix, Solver};
use group_core::{FiniteGroup, Subgroup};
use lattice_core::{direct_sum_all, dual, fixed_basis, induced_lattice, sublattice, Lattice, LatticeMap};
use log::debug;
use serde::{Deserialize, Serialize};

use crate::error::FlabbyError;

/// One summand `ℤ[G/H]` of the permutation lattice, with the vector its base
/// coset is sent to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub subgroup: Vec<usize>,
    pub vector: Vec<Int>,
}

/// An exact sequence `0 → M → P → E → 0` with `P` permutation and `E` flabby.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    pub m: Lattice,
    pub p: Lattice,
    pub e: Lattice,
    pub inject: LatticeMap,
    pub project: LatticeMap,
    /// Summands of `P` in order; `vector` lives in the dual lattice `M°`.
    pub summands: Vec<Summand>,
}

/// Permutation cover `⊕ ℤ[G/H_i] → L` sending the base coset of the i-th
/// summand to `v_i` (which must be `H_i`-fixed).
pub fn cover_map(l: &Lattice, summands: &[(Subgroup, Vec<Int>)]) -> (Lattice, IntMatrix) {
    let g = l.group();
    let mut parts = Vec::new();
    let mut cols: Vec<Vec<Int>> = Vec::new();
    for (h, v) in summands {
        parts.push(induced_lattice(g, h));
        for coset in h.left_cosets() {
            cols.push(l.matrix(coset[0]).mul_vec(v));
        }
    }
    let p = if parts.is_empty() { Lattice::zero(g) } else { direct_sum_all(&parts).expect("same group") };
    (p, IntMatrix::from_columns(l.rank(), &cols))
}

/// Flabby resolution from the cover of `M°` chosen by [`fixed_point_cover`];
/// usually much smaller than [`flabby_resolution`] and similar to it.
pub fn minimal_flabby_resolution(m: &Lattice) -> Result<Resolution, FlabbyError> {
    let md = dual(m);
    let summands = fixed_point_cover(&md)?;
    resolve_with(m, &md, summands)
}

/// Flabby resolution by dualizing a permutation cover of `M°` that is
/// surjective on `H`-fixed points for every subgroup class representative `H`.
pub fn flabby_resolution(m: &Lattice) -> Result<Resolution, FlabbyError> {
    let g = m.group();
    let md = dual(m);
    let mut summands: Vec<(Subgroup, Vec<Int>)> = Vec::new();
    for h in group_core::subgroup_reps(g)? {
        let b = fixed_basis(&md, &h);
        for j in 0..b.cols() {
            summands.push((h.clone(), b.column(j)));
        }
    }
    resolve_with(m, &md, summands)
}

fn resolve_with(m: &Lattice, md: &Lattice, summands: Vec<(Subgroup, Vec<Int>)>) -> Result<Resolution, FlabbyError> {
    let (pd, phi) = cover_map(md, &summands);
    debug!("resolution: rank M = {}, rank P = {}", m.rank(), pd.rank());
    let kb = kernel(&phi);
    let k = sublattice(&pd, &kb)?;
    let p = dual(&pd);
    let e = dual(&k);
    let inject = LatticeMap { source: m.clone(), target: p.clone(), matrix: phi.transpose() };
    let project = LatticeMap { source: p.clone(), target: e.clone(), matrix: kb.transpose() };
    let res = Resolution {
        m: m.clone(),
        p,
        e,
        inject,
        project,
        summands: summands.into_iter().map(|(h, v)| Summand { subgroup: h.elements().to_vec(), vector: v }).collect(),
    };
    check_exactness(&res).map_err(FlabbyError::InternalExactnessCheckFailed)?;
    if let Some((key, _)) = cohomology::flabby_witness(&res.e)? {
        return Err(FlabbyError::InternalFlabbyCheckFailed { subgroup: key });
    }
    Ok(res)
}

/// Ranks add up, `project ∘ inject = 0`, the image of `inject` is pure, the
/// maps intertwine, `project` is onto and `P` acts by permutations.
pub fn check_exactness(r: &Resolution) -> Result<(), String> {
    let (a, b) = (&r.inject.matrix, &r.project.matrix);
    if r.m.rank() + r.e.rank() != r.p.rank() {
        return Err("ranks do not add up".into());
    }
    if !b.mul(a).is_zero() {
        return Err("project ∘ inject is not zero".into());
    }
    if rank(a) != r.m.rank() || (a.cols() > 0 && !is_saturated(a)) {
        return Err("inject is not injective with pure image".into());
    }
    if b.rows() > 0 && (rank(b) != r.e.rank() || !is_saturated(&b.transpose())) {
        return Err("project is not surjective".into());
    }
    for (k, name) in r.m.group().generator_names().iter().enumerate() {
        if r.p.action()[k].mul(a) != a.mul(&r.m.action()[k]) || r.e.action()[k].mul(b) != b.mul(&r.p.action()[k]) {
            return Err(format!("maps do not intertwine at {name}"));
        }
    }
    if !r.p.is_permutation_basis() {
        return Err("P is not a permutation lattice".into());
    }
    Ok(())
}

/// Summands `(K, v)` of a permutation cover of `l` that is surjective on
/// `H`-fixed points for every subgroup class `H`, added greedily from the
/// largest subgroups down.
pub fn fixed_point_cover(l: &Lattice) -> Result<Vec<(Subgroup, Vec<Int>)>, FlabbyError> {
    let g = l.group();
    let mut reps = group_core::subgroup_reps(g)?;
    reps.reverse();
    let mut summands: Vec<(Subgroup, Vec<Int>)> = Vec::new();
    for h in &reps {
        let fixed = fixed_basis(l, h);
        if fixed.cols() == 0 {
            continue;
        }
        let solver = Solver::new(&fixed);
        let mut image: Vec<Vec<Int>> = Vec::new();
        for (k, v) in &summands {
            image.extend(orbit_sums(g, h, k, l, v).into_iter().map(|w| solver.solve_vec(&w).expect("fixed vector")));
        }
        let r = fixed.cols();
        for j in 0..r {
            let unit: Vec<Int> = (0..r).map(|i| if i == j { Int::one() } else { Int::zero() }).collect();
            if covers(&image, r) {
                break;
            }
            let span = IntMatrix::from_columns(r, &image);
            if image.is_empty() || solve_one(&span, &unit).is_none() {
                summands.push((h.clone(), fixed.column(j)));
                image.push(unit);
            }
        }
        debug_assert!(covers(&image, r));
    }
    Ok(summands)
}

fn covers(image: &[Vec<Int>], r: usize) -> bool {
    if image.is_empty() {
        return r == 0;
    }
    let m = IntMatrix::from_columns(r, image);
    exact_linalg::cokernel(&m).is_trivial()
}

/// Images in `l` of the `H`-orbit sums of cosets in `ℤ[G/K]` under `gK ↦ ρ(g)v`.
fn orbit_sums(g: &Arc<FiniteGroup>, h: &Subgroup, k: &Subgroup, l: &Lattice, v: &[Int]) -> Vec<Vec<Int>> {
    let cosets = k.left_cosets();
    let mut coset_of = vec![0; g.order()];
    for (j, c) in cosets.iter().enumerate() {
        for &x in c {
            coset_of[x] = j;
        }
    }
    let mut seen = vec![false; cosets.len()];
    let mut out = Vec::new();
    for start in 0..cosets.len() {
        if seen[start] {
            continue;
        }
        let mut sum = vec![Int::zero(); l.rank()];
        for &x in h.elements() {
            let c = coset_of[g.mul(x, cosets[start][0])];
            if !seen[c] {
                seen[c] = true;
                let w = l.matrix(cosets[c][0]).mul_vec(v);
                for (s, t) in sum.iter_mut().zip(w) {
                    *s += &t;
                }
            }
        }
        out.push(sum);
    }
    out
}
