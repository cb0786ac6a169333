use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::GroupError;
use crate::word::Word;

pub const DEFAULT_ORDER_CAP: usize = 64;

/// Order cap from `LATNOETHER_CAP_GROUP_ORDER`, defaulting to 64.
pub fn order_cap() -> usize {
    std::env::var("LATNOETHER_CAP_GROUP_ORDER")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORDER_CAP)
}

/// A finite group stored as a full multiplication table. Element 0 is the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    generators: Vec<usize>,
    generator_names: Vec<String>,
    // For every non-identity element x: (y, k) with x = y * generators[k], y earlier in BFS order.
    spanning: Vec<Option<(usize, usize)>>,
    bfs_order: Vec<usize>,
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

fn check_permutation(name: &str, image: &[usize]) -> Result<(), GroupError> {
    let n = image.len();
    let mut seen = vec![false; n];
    for &x in image {
        if x >= n {
            return Err(GroupError::InvalidPermutation { name: name.into(), reason: format!("point {x} out of range") });
        }
        if seen[x] {
            return Err(GroupError::InvalidPermutation { name: name.into(), reason: format!("point {x} repeated") });
        }
        seen[x] = true;
    }
    Ok(())
}

impl FiniteGroup {
    /// Closure of permutation generators `(name, one-line image)`, where the
    /// product `g*h` is the permutation `i ↦ g(h(i))`.
    pub fn from_permutations(gens: &[(String, Vec<usize>)], cap: usize) -> Result<FiniteGroup, GroupError> {
        let degree = gens.first().map(|g| g.1.len()).unwrap_or(0);
        for (name, img) in gens {
            check_permutation(name, img)?;
            if img.len() != degree {
                return Err(GroupError::InvalidPermutation {
                    name: name.clone(),
                    reason: format!("degree {} differs from {}", img.len(), degree),
                });
            }
        }
        let id: Vec<usize> = (0..degree).collect();
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        index.insert(id, 0);
        let mut i = 0;
        while i < elems.len() {
            for (_, g) in gens {
                let y = compose(&elems[i], g);
                if !index.contains_key(&y) {
                    if elems.len() >= cap {
                        return Err(GroupError::ClosureExceedsCap { cap });
                    }
                    index.insert(y.clone(), elems.len());
                    elems.push(y);
                }
            }
            i += 1;
        }
        let n = elems.len();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&compose(&elems[a], &elems[b])];
            }
        }
        let generators = gens.iter().map(|(_, g)| index[g]).collect();
        let names = gens.iter().map(|(s, _)| s.clone()).collect();
        // A permutation group law is associative by construction.
        FiniteGroup::assemble(n, table, generators, names)
    }

    /// Permutation closure followed by a check of each relation `lhs = rhs`.
    pub fn from_permutations_with_relations(
        gens: &[(String, Vec<usize>)],
        relations: &[(Word, Word)],
        cap: usize,
    ) -> Result<FiniteGroup, GroupError> {
        let g = FiniteGroup::from_permutations(gens, cap)?;
        for (l, r) in relations {
            if g.eval_word(l) != g.eval_word(r) {
                return Err(GroupError::RelationViolated {
                    lhs: l.render(&g.generator_names),
                    rhs: r.render(&g.generator_names),
                });
            }
        }
        Ok(g)
    }

    /// Validates an explicit table (`table[a][b] = a*b`, identity 0).
    pub fn from_table(
        table: Vec<Vec<usize>>,
        generators: Vec<usize>,
        names: Vec<String>,
    ) -> Result<FiniteGroup, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        if generators.len() != names.len() {
            return Err(GroupError::InvalidTable("generator and name counts differ".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &table {
            if row.len() != n {
                return Err(GroupError::InvalidTable("table is not square".into()));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || seen[x] {
                    return Err(GroupError::InvalidTable("row is not a permutation".into()));
                }
                seen[x] = true;
            }
            flat.extend_from_slice(row);
        }
        for a in 0..n {
            if flat[a] != a || flat[a * n] != a {
                return Err(GroupError::InvalidTable("element 0 is not the identity".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = flat[a * n + b];
                for c in 0..n {
                    if flat[ab * n + c] != flat[a * n + flat[b * n + c]] {
                        return Err(GroupError::NonAssociative(a, b, c));
                    }
                }
            }
        }
        if generators.iter().any(|&g| g >= n) {
            return Err(GroupError::InvalidTable("generator index out of range".into()));
        }
        FiniteGroup::assemble(n, flat, generators, names)
    }

    fn assemble(n: usize, table: Vec<usize>, generators: Vec<usize>, names: Vec<String>) -> Result<FiniteGroup, GroupError> {
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inverse[a] = b;
                    break;
                }
            }
            if inverse[a] == usize::MAX {
                return Err(GroupError::InvalidTable(format!("element {a} has no inverse")));
            }
        }
        let mut spanning = vec![None; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut bfs_order = vec![0];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (k, &g) in generators.iter().enumerate() {
                let y = table[x * n + g];
                if !seen[y] {
                    seen[y] = true;
                    spanning[y] = Some((x, k));
                    bfs_order.push(y);
                    queue.push_back(y);
                }
            }
        }
        if bfs_order.len() != n {
            return Err(GroupError::InvalidTable("generators do not generate the group".into()));
        }
        Ok(FiniteGroup { order: n, table, inverse, generators, generator_names: names, spanning, bfs_order })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generator_names.iter().position(|n| n == name)
    }

    /// Multiplication table as rows.
    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| self.table[a * self.order..(a + 1) * self.order].to_vec()).collect()
    }

    /// Elements in breadth-first order from the identity along right
    /// multiplication by generators.
    pub fn bfs_order(&self) -> &[usize] {
        &self.bfs_order
    }

    /// `(y, k)` with `x = y * generators[k]`; `None` for the identity.
    pub fn spanning_step(&self, x: usize) -> Option<(usize, usize)> {
        self.spanning[x]
    }

    pub fn pow(&self, g: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(g) } else { g };
        let mut acc = 0;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn eval_word(&self, w: &Word) -> usize {
        w.0.iter().fold(0, |acc, &(k, e)| self.mul(acc, self.pow(self.generators[k], e)))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).map(|g| self.element_order(g)).fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter().all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|g| self.element_order(g) == self.order)
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order).filter(|&z| self.generators.iter().all(|&g| self.mul(z, g) == self.mul(g, z))).collect()
    }

    /// Verifies associativity by a full scan.
    pub fn check_associative(&self) -> Result<(), GroupError> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupError::NonAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    /// Subgroup generated by a set of elements, as a sorted element list.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut list = vec![0];
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    list.push(y);
                }
            }
            i += 1;
        }
        list.sort_unstable();
        list
    }

    /// Human-readable label: cyclic groups are `C<n>`, others `G<n>`.
    pub fn label(&self) -> String {
        if self.is_cyclic() {
            format!("C{}", self.order)
        } else {
            format!("G{}", self.order)
        }
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {}, generators {:?})", self.order, self.generator_names)
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Prime factorization `[(p, k)]` of `n`, primes increasing.
pub fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// True iff every Sylow subgroup is cyclic, i.e. for each prime power
/// `p^k || |G|` some element has order `p^k`.
pub fn sylow_all_cyclic(g: &FiniteGroup) -> bool {
    let orders: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
    factorize(g.order()).iter().all(|&(p, k)| {
        let pk = p.pow(k);
        orders.iter().any(|&o| o % pk == 0)
    })
}

/// Direct product `A × B`; generators are those of `A` followed by those of `B`.
/// Element map of the homomorphism `src -> tgt` sending the i-th generator of
/// `src` to `images[i]`, or `NotHomomorphism` if no such map exists.
pub fn hom_from_images(src: &FiniteGroup, tgt: &FiniteGroup, images: &[usize]) -> Result<Vec<usize>, GroupError> {
    if images.len() != src.generators().len() || images.iter().any(|&x| x >= tgt.order()) {
        return Err(GroupError::NotHomomorphism);
    }
    let mut map = vec![0; src.order()];
    for &x in &src.bfs_order()[1..] {
        let (y, k) = src.spanning_step(x).expect("non-identity element has a spanning step");
        map[x] = tgt.mul(map[y], images[k]);
    }
    for x in 0..src.order() {
        for (k, &s) in src.generators().iter().enumerate() {
            if map[src.mul(x, s)] != tgt.mul(map[x], images[k]) {
                return Err(GroupError::NotHomomorphism);
            }
        }
    }
    Ok(map)
}

pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let table: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).map(|y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb)).collect())
        .collect();
    let mut gens: Vec<usize> = a.generators().iter().map(|&g| g * nb).collect();
    gens.extend(b.generators().iter().copied());
    let mut names: Vec<String> = a.generator_names().to_vec();
    for nm in b.generator_names() {
        let mut cand = nm.clone();
        while names.contains(&cand) {
            cand.push('\'');
        }
        names.push(cand);
    }
    FiniteGroup::from_table(table, gens, names).expect("direct product of valid groups")
}
