use cohomology::{keyed_reps, tate_hat0, tate_hat_minus1, CohomologyError};
use exact_linalg::{FinAbGroup, IntMatrix};
use group_core::Subgroup;
use lattice_core::{direct_sum_all, fixed_rank, induced_lattice, iso_search, IsoOptions, IsoVerdict, Lattice};

use crate::error::FlabbyError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PermutationVerdict {
    /// Columns form a basis permuted by the action.
    Basis(IntMatrix),
    NotPermutation(String),
    Unknown,
}

/// Number of `K`-orbits on `G/H`, which is the rank of `ℤ[G/H]^K`.
pub fn orbit_count(h: &Subgroup, k: &Subgroup) -> usize {
    let g = h.parent();
    let cosets = h.left_cosets();
    let mut coset_of = vec![0; g.order()];
    for (j, c) in cosets.iter().enumerate() {
        for &x in c {
            coset_of[x] = j;
        }
    }
    let mut seen = vec![false; cosets.len()];
    let mut count = 0;
    for j in 0..cosets.len() {
        if seen[j] {
            continue;
        }
        count += 1;
        for &x in k.elements() {
            seen[coset_of[g.mul(x, cosets[j][0])]] = true;
        }
    }
    count
}

/// `Ĥ⁰(K, ℤ[G/H])`: one cyclic factor `ℤ/|K ∩ gHg⁻¹|` per `K`-orbit `KgH`.
fn hat0_of_induced(h: &Subgroup, k: &Subgroup) -> FinAbGroup {
    let g = h.parent();
    let mut out = FinAbGroup::trivial();
    let mut seen = vec![false; g.order()];
    for c in h.left_cosets() {
        let r = c[0];
        if seen[r] {
            continue;
        }
        for &x in k.elements() {
            for &y in h.elements() {
                seen[g.mul(g.mul(x, r), y)] = true;
            }
        }
        let stab = k.elements().iter().filter(|&&x| h.contains(g.mul(g.inv(r), g.mul(x, r)))).count();
        out = out.direct_sum(&FinAbGroup::cyclic(stab as i64));
    }
    out
}

/// Multiplicity vectors `(m_H)` over subgroup classes such that
/// `⊕ ℤ[G/H]^{m_H}` has the rank, the fixed ranks and the `Ĥ⁰` of `m`.
pub fn permutation_candidates(m: &Lattice) -> Result<Vec<Vec<usize>>, FlabbyError> {
    let reps = group_core::subgroup_reps(m.group())?;
    let target_rank: Vec<usize> = reps.iter().map(|k| fixed_rank(m, k)).collect();
    let target_hat0: Vec<FinAbGroup> = reps.iter().map(|k| tate_hat0(k, m)).collect();
    let ranks: Vec<Vec<usize>> = reps.iter().map(|h| reps.iter().map(|k| orbit_count(h, k)).collect()).collect();
    let mut out = Vec::new();
    let mut cur = vec![0; reps.len()];
    enumerate(&ranks, &target_rank, 0, &mut cur, &mut vec![0; reps.len()], &mut out);
    out.retain(|mult| {
        reps.iter().zip(&target_hat0).all(|(k, t)| {
            let mut sum = FinAbGroup::trivial();
            for (h, &c) in reps.iter().zip(mult) {
                let one = hat0_of_induced(h, k);
                for _ in 0..c {
                    sum = sum.direct_sum(&one);
                }
            }
            sum == *t
        })
    });
    Ok(out)
}

// Depth-first over subgroup classes; the trivial subgroup is rank[.][0] = index.
fn enumerate(
    ranks: &[Vec<usize>],
    target: &[usize],
    i: usize,
    cur: &mut Vec<usize>,
    acc: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if i == ranks.len() {
        if acc == target {
            out.push(cur.clone());
        }
        return;
    }
    loop {
        enumerate(ranks, target, i + 1, cur, acc, out);
        if acc.iter().zip(&ranks[i]).zip(target).any(|((a, r), t)| a + r > *t) {
            break;
        }
        cur[i] += 1;
        for (a, r) in acc.iter_mut().zip(&ranks[i]) {
            *a += r;
        }
    }
    for (a, r) in acc.iter_mut().zip(&ranks[i]) {
        *a -= r * cur[i];
    }
    cur[i] = 0;
}

/// Decides whether `m` has a permutation basis and returns one.
pub fn permutation_certificate(m: &Lattice) -> Result<PermutationVerdict, FlabbyError> {
    permutation_certificate_with(m, &IsoOptions::default())
}

pub fn permutation_certificate_with(m: &Lattice, opts: &IsoOptions<'_>) -> Result<PermutationVerdict, FlabbyError> {
    let g = m.group();
    for (key, h) in keyed_reps(g)? {
        let t = tate_hat_minus1(&h, m);
        if !t.is_trivial() {
            return Ok(PermutationVerdict::NotPermutation(format!("H^-1({key}) = {t}")));
        }
        match cohomology::h1_cocycles(&h, m) {
            Ok(t) if !t.is_trivial() => {
                return Ok(PermutationVerdict::NotPermutation(format!("H^1({key}) = {t}")));
            }
            Ok(_) | Err(CohomologyError::CapExceeded { .. }) => {}
            Err(e) => return Err(e.into()),
        }
    }
    let candidates = permutation_candidates(m)?;
    if candidates.is_empty() {
        return Ok(PermutationVerdict::NotPermutation("fixed ranks and H^0 fit no permutation lattice".into()));
    }
    if m.rank() == 0 {
        return Ok(PermutationVerdict::Basis(IntMatrix::zeros(0, 0)));
    }
    let reps = group_core::subgroup_reps(g)?;
    let mut unknown = false;
    for mult in candidates {
        let mut parts = Vec::new();
        for (h, &k) in reps.iter().zip(&mult) {
            parts.extend(std::iter::repeat_n(induced_lattice(g, h), k));
        }
        let p = direct_sum_all(&parts)?;
        match iso_search(&p, m, opts) {
            IsoVerdict::Isomorphic(x) => {
                let ok = m.change_basis(&x).is_some_and(|l| l.is_permutation_basis());
                assert!(ok, "iso_search returned a non-intertwiner");
                return Ok(PermutationVerdict::Basis(x));
            }
            IsoVerdict::NotIsomorphic(_) => {}
            IsoVerdict::Unknown => unknown = true,
        }
    }
    Ok(if unknown {
        PermutationVerdict::Unknown
    } else {
        PermutationVerdict::NotPermutation("no candidate permutation lattice is isomorphic".into())
    })
}
