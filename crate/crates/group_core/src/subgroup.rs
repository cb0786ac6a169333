use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use crate::error::GroupError;
use crate::group::FiniteGroup;

/// A subgroup of a parent group, with a small generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elements: Vec<usize>,
    generators: Vec<usize>,
    is_normal: bool,
    class_size: usize,
}

impl Subgroup {
    /// Subgroup generated by `gens` (any elements of the parent).
    pub fn generated_by(parent: &Arc<FiniteGroup>, gens: &[usize]) -> Subgroup {
        let elements = parent.generated(gens);
        Subgroup::from_elements(parent, elements)
    }

    pub fn whole(parent: &Arc<FiniteGroup>) -> Subgroup {
        Subgroup::from_elements(parent, (0..parent.order()).collect())
    }

    pub fn trivial(parent: &Arc<FiniteGroup>) -> Subgroup {
        Subgroup::from_elements(parent, vec![0])
    }

    /// Builds from a sorted element list that is already closed.
    pub fn from_elements(parent: &Arc<FiniteGroup>, elements: Vec<usize>) -> Subgroup {
        let generators = greedy_generators(parent, &elements);
        let class_size = conjugates(parent, &elements).len();
        Subgroup { parent: parent.clone(), is_normal: class_size == 1, elements, generators, class_size }
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_normal(&self) -> bool {
        self.is_normal
    }

    /// Number of conjugates, i.e. `[G : N_G(H)]`.
    pub fn class_size(&self) -> usize {
        self.class_size
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements.iter().any(|&g| self.parent.element_order(g) == self.order())
    }

    /// `g H g^{-1}`
    pub fn conjugate(&self, g: usize) -> Subgroup {
        let mut els: Vec<usize> = self.elements.iter().map(|&h| self.parent.conj(g, h)).collect();
        els.sort_unstable();
        Subgroup::from_elements(&self.parent, els)
    }

    /// The subgroup as a group in its own right, with its generating set, plus
    /// the embedding (local index → parent element). Elements are numbered in
    /// increasing parent order, so the identity stays at 0.
    pub fn as_group(&self) -> (FiniteGroup, Vec<usize>) {
        let n = self.order();
        let local = |g: usize| self.elements.binary_search(&g).unwrap();
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| local(self.parent.mul(self.elements[a], self.elements[b]))).collect())
            .collect();
        let gens: Vec<usize> = self.generators.iter().map(|&g| local(g)).collect();
        let names = (0..gens.len()).map(|i| format!("h{}", i + 1)).collect();
        let g = FiniteGroup::from_table(table, gens, names).expect("subgroup table is a group");
        (g, self.elements.clone())
    }

    /// Left cosets `gH`, ordered by their least element; each coset is sorted.
    pub fn left_cosets(&self) -> Vec<Vec<usize>> {
        let n = self.parent.order();
        let mut assigned = vec![false; n];
        let mut cosets = Vec::new();
        for g in 0..n {
            if assigned[g] {
                continue;
            }
            let mut c: Vec<usize> = self.elements.iter().map(|&h| self.parent.mul(g, h)).collect();
            c.sort_unstable();
            for &x in &c {
                assigned[x] = true;
            }
            cosets.push(c);
        }
        cosets
    }

    /// Short label like `H4.1` once the index within reps is known; here just the order.
    pub fn describe(&self) -> String {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        format!("order {} <{}>", self.order(), gens.join(","))
    }
}

fn greedy_generators(g: &FiniteGroup, elements: &[usize]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = vec![0usize];
    // Prefer elements of large order so cyclic subgroups get one generator.
    let mut cands: Vec<usize> = elements.to_vec();
    cands.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), x));
    for x in cands {
        if span.binary_search(&x).is_ok() {
            continue;
        }
        gens.push(x);
        span = g.generated(&gens);
        if span.len() == elements.len() {
            break;
        }
    }
    gens
}

fn conjugates(g: &FiniteGroup, elements: &[usize]) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for x in 0..g.order() {
        let mut c: Vec<usize> = elements.iter().map(|&h| g.conj(x, h)).collect();
        c.sort_unstable();
        out.insert(c);
    }
    out
}

/// Every subgroup of `g`, each as a sorted element list, sorted by (order, elements).
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut cyclic: BTreeSet<Vec<usize>> = BTreeSet::new();
    for x in 0..g.order() {
        cyclic.insert(g.generated(&[x]));
    }
    let cyclic_gens: Vec<usize> = {
        let mut seen = HashSet::new();
        let mut v = Vec::new();
        for x in 0..g.order() {
            if seen.insert(g.generated(&[x])) {
                v.push(x);
            }
        }
        v
    };
    let mut all: HashSet<Vec<usize>> = cyclic.iter().cloned().collect();
    let mut frontier: Vec<Vec<usize>> = cyclic.into_iter().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for &c in &cyclic_gens {
                if s.binary_search(&c).is_ok() {
                    continue;
                }
                let mut gens = s.clone();
                gens.push(c);
                let j = g.generated(&gens);
                if all.insert(j.clone()) {
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut v: Vec<Vec<usize>> = all.into_iter().collect();
    v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    v
}

/// One subgroup per conjugacy class, the lexicographically least member of
/// each class, sorted by order then element list.
pub fn subgroup_reps(g: &Arc<FiniteGroup>) -> Result<Vec<Subgroup>, GroupError> {
    subgroup_reps_capped(g, crate::group::order_cap())
}

pub fn subgroup_reps_capped(g: &Arc<FiniteGroup>, cap: usize) -> Result<Vec<Subgroup>, GroupError> {
    if g.order() > cap {
        return Err(GroupError::CapExceeded { order: g.order(), cap });
    }
    let mut reps = Vec::new();
    let mut covered: HashSet<Vec<usize>> = HashSet::new();
    for s in all_subgroups(g) {
        if covered.contains(&s) {
            continue;
        }
        let class = conjugates(g, &s);
        let rep = class.iter().next().unwrap().clone();
        covered.extend(class);
        reps.push(rep);
    }
    reps.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(reps.into_iter().map(|els| Subgroup::from_elements(g, els)).collect())
}

/// Quotient `G/N` with the projection map. Cosets are numbered by least
/// element, and the quotient's generators are the images of `G`'s generators.
pub fn quotient_group(g: &Arc<FiniteGroup>, n: &Subgroup) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
    if !n.is_normal() {
        return Err(GroupError::NotNormal);
    }
    let cosets = n.left_cosets();
    let mut proj = vec![0; g.order()];
    for (i, c) in cosets.iter().enumerate() {
        for &x in c {
            proj[x] = i;
        }
    }
    let reps: Vec<usize> = cosets.iter().map(|c| c[0]).collect();
    let table: Vec<Vec<usize>> =
        reps.iter().map(|&a| reps.iter().map(|&b| proj[g.mul(a, b)]).collect()).collect();
    let gens = g.generators().iter().map(|&x| proj[x]).collect();
    let q = FiniteGroup::from_table(table, gens, g.generator_names().to_vec())?;
    Ok((q, proj))
}
