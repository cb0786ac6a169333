//! Bounded search for ℤ[G]-isomorphisms between lattices.
//!
//! Invariants are compared first (rank, characteristic polynomials and the
//! elementary divisors of `ρ(g) − I` for every element, then an optional
//! caller-supplied pruner). A surviving pair is split into connected blocks
//! of the support graph when possible; otherwise a generating set `a₁..a_k`
//! of one side is fixed and candidate images `b_i` are enumerated with
//! bounded free coordinates. The linear relations satisfied by the orbit of
//! the `a_i` are imposed on the `b_i` in Hermite form, so coordinates that
//! they determine are solved for rather than enumerated.

use std::fmt;

use exact_linalg::{charpoly, determinant, hermite_rows, invariant_factors, kernel, Int, IntMatrix, IntPoly, Solver};
use log::debug;

use crate::lattice::Lattice;

pub const DEFAULT_HEIGHT: i64 = 3;
pub const DEFAULT_NODE_LIMIT: u64 = 20_000_000;

/// Extra invariant check: return `Some(description)` when the two lattices differ.
pub type Pruner<'a> = dyn Fn(&Lattice, &Lattice) -> Option<String> + Sync + 'a;

#[derive(Clone, Copy)]
pub struct IsoOptions<'a> {
    /// Bound on enumerated coordinates of generator images.
    pub height: i64,
    pub node_limit: u64,
    pub pruner: Option<&'a Pruner<'a>>,
    /// Try matching connected blocks of the support graph first.
    pub decompose: bool,
}

impl Default for IsoOptions<'_> {
    fn default() -> Self {
        IsoOptions { height: DEFAULT_HEIGHT, node_limit: DEFAULT_NODE_LIMIT, pruner: None, decompose: true }
    }
}

impl<'a> IsoOptions<'a> {
    pub fn with_pruner(mut self, pruner: &'a Pruner<'a>) -> Self {
        self.pruner = Some(pruner);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoWitness {
    GroupMismatch,
    Rank { left: usize, right: usize },
    CharPoly { element: usize },
    ElementaryDivisors { element: usize },
    Invariant(String),
}

impl fmt::Display for IsoWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoWitness::GroupMismatch => write!(f, "different groups"),
            IsoWitness::Rank { left, right } => write!(f, "ranks differ ({left} vs {right})"),
            IsoWitness::CharPoly { element } => write!(f, "characteristic polynomials differ at element {element}"),
            IsoWitness::ElementaryDivisors { element } => {
                write!(f, "elementary divisors of rho(g)-I differ at element {element}")
            }
            IsoWitness::Invariant(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    /// `X` with `ρ_B(g)·X = X·ρ_A(g)` and `|det X| = 1`.
    Isomorphic(IntMatrix),
    NotIsomorphic(IsoWitness),
    Unknown,
}

impl IsoVerdict {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic(_))
    }
}

/// True when `x` is a unimodular intertwiner `a → b`.
pub fn is_intertwiner(a: &Lattice, b: &Lattice, x: &IntMatrix) -> bool {
    x.rows() == b.rank()
        && x.cols() == a.rank()
        && a.action().iter().zip(b.action()).all(|(ma, mb)| mb.mul(x) == x.mul(ma))
        && determinant(x).is_unit()
}

pub fn iso_search(a: &Lattice, b: &Lattice, opts: &IsoOptions<'_>) -> IsoVerdict {
    let mut budget = opts.node_limit;
    iso_inner(a, b, opts, &mut budget)
}

/// Cheap invariant comparison; `Some` if a difference is found.
pub fn invariant_witness(a: &Lattice, b: &Lattice) -> Option<IsoWitness> {
    if !a.same_group(b) {
        return Some(IsoWitness::GroupMismatch);
    }
    if a.rank() != b.rank() {
        return Some(IsoWitness::Rank { left: a.rank(), right: b.rank() });
    }
    let id = IntMatrix::identity(a.rank());
    for g in 0..a.group().order() {
        if charpoly(a.matrix(g)) != charpoly(b.matrix(g)) {
            return Some(IsoWitness::CharPoly { element: g });
        }
    }
    for g in 0..a.group().order() {
        if invariant_factors(&a.matrix(g).sub(&id)) != invariant_factors(&b.matrix(g).sub(&id)) {
            return Some(IsoWitness::ElementaryDivisors { element: g });
        }
    }
    None
}

fn iso_inner(a: &Lattice, b: &Lattice, opts: &IsoOptions<'_>, budget: &mut u64) -> IsoVerdict {
    if let Some(w) = invariant_witness(a, b) {
        return IsoVerdict::NotIsomorphic(w);
    }
    if let Some(pr) = opts.pruner {
        if let Some(s) = pr(a, b) {
            return IsoVerdict::NotIsomorphic(IsoWitness::Invariant(s));
        }
    }
    let n = a.rank();
    if a.action() == b.action() {
        return IsoVerdict::Isomorphic(IntMatrix::identity(n));
    }
    if opts.decompose {
        let ba = blocks(a);
        let bb = blocks(b);
        if ba.len() > 1 || bb.len() > 1 {
            if let Some(x) = match_blocks(n, &ba, &bb, opts, budget) {
                return IsoVerdict::Isomorphic(x);
            }
        }
    }
    let ga = module_generators(a);
    let gb = module_generators(b);
    debug!("iso search rank {n}: {} vs {} generators", ga.len(), gb.len());
    if gb.len() < ga.len() {
        return match search(b, a, &gb, opts.height, budget) {
            Some(x) => IsoVerdict::Isomorphic(exact_linalg::unimodular_inverse(&x).expect("unimodular")),
            None => IsoVerdict::Unknown,
        };
    }
    match search(a, b, &ga, opts.height, budget) {
        Some(x) => IsoVerdict::Isomorphic(x),
        None => IsoVerdict::Unknown,
    }
}

struct Block {
    indices: Vec<usize>,
    lattice: Lattice,
}

/// Connected components of the support graph of all generator matrices.
fn blocks(l: &Lattice) -> Vec<Block> {
    let n = l.rank();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for m in l.action() {
        for i in 0..n {
            for j in 0..n {
                if i != j && !m[(i, j)].is_zero() {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri.max(rj)] = ri.min(rj);
                    }
                }
            }
        }
    }
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut root_index = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if root_index[r] == usize::MAX {
            root_index[r] = comps.len();
            comps.push(Vec::new());
        }
        comps[root_index[r]].push(i);
    }
    if comps.len() <= 1 {
        return vec![Block { indices: (0..n).collect(), lattice: l.clone() }];
    }
    comps
        .into_iter()
        .map(|idx| {
            let action = l
                .action()
                .iter()
                .map(|m| {
                    let mut s = IntMatrix::zeros(idx.len(), idx.len());
                    for (a, &i) in idx.iter().enumerate() {
                        for (b, &j) in idx.iter().enumerate() {
                            s[(a, b)] = m[(i, j)].clone();
                        }
                    }
                    s
                })
                .collect();
            let lattice = Lattice::from_generators_trusted(l.group().clone(), idx.len(), action);
            Block { indices: idx, lattice }
        })
        .collect()
}

fn match_blocks(n: usize, ba: &[Block], bb: &[Block], opts: &IsoOptions<'_>, budget: &mut u64) -> Option<IntMatrix> {
    if ba.len() != bb.len() {
        return None;
    }
    let k = ba.len();
    let mut memo: Vec<Vec<Option<Option<IntMatrix>>>> = vec![vec![None; k]; k];
    let mut assign = vec![usize::MAX; k];
    let mut used = vec![false; k];
    fn rec(
        i: usize,
        ba: &[Block],
        bb: &[Block],
        opts: &IsoOptions<'_>,
        budget: &mut u64,
        memo: &mut Vec<Vec<Option<Option<IntMatrix>>>>,
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == ba.len() {
            return true;
        }
        for j in 0..bb.len() {
            if used[j] || ba[i].indices.len() != bb[j].indices.len() {
                continue;
            }
            if memo[i][j].is_none() {
                let sub = IsoOptions { decompose: false, ..*opts };
                let v = match iso_inner(&ba[i].lattice, &bb[j].lattice, &sub, budget) {
                    IsoVerdict::Isomorphic(x) => Some(x),
                    _ => None,
                };
                memo[i][j] = Some(v);
            }
            if memo[i][j].as_ref().unwrap().is_some() {
                used[j] = true;
                assign[i] = j;
                if rec(i + 1, ba, bb, opts, budget, memo, assign, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    if !rec(0, ba, bb, opts, budget, &mut memo, &mut assign, &mut used) {
        return None;
    }
    let mut x = IntMatrix::zeros(n, n);
    for i in 0..k {
        let j = assign[i];
        let xij = memo[i][j].as_ref().unwrap().as_ref().unwrap();
        for (r, &ti) in bb[j].indices.iter().enumerate() {
            for (c, &si) in ba[i].indices.iter().enumerate() {
                x[(ti, si)] = xij[(r, c)].clone();
            }
        }
    }
    Some(x)
}

/// Columns `ρ(g)v` for every element `g`.
pub fn orbit_matrix(l: &Lattice, v: &[Int]) -> IntMatrix {
    let cols: Vec<Vec<Int>> = l.elements().iter().map(|m| m.mul_vec(v)).collect();
    IntMatrix::from_columns(l.rank(), &cols)
}

fn span_profile(m: &IntMatrix) -> (usize, Int) {
    let f = invariant_factors(m);
    (f.len(), f.iter().product())
}

/// A small set of basis vectors whose orbits span the lattice over ℤ.
pub fn module_generators(l: &Lattice) -> Vec<Vec<Int>> {
    let n = l.rank();
    let unit = |j: usize| -> Vec<Int> { (0..n).map(|i| if i == j { Int::one() } else { Int::zero() }).collect() };
    let orbits: Vec<IntMatrix> = (0..n).map(|j| orbit_matrix(l, &unit(j))).collect();
    let mut chosen: Vec<usize> = Vec::new();
    let mut span = IntMatrix::zeros(n, 0);
    let mut profile = (0usize, Int::one());
    while profile.0 < n || !profile.1.is_one() {
        let mut best: Option<(usize, (usize, Int))> = None;
        for j in 0..n {
            if chosen.contains(&j) {
                continue;
            }
            let p = span_profile(&span.hstack(&orbits[j]));
            let better = match &best {
                None => true,
                Some((_, bp)) => p.0 > bp.0 || (p.0 == bp.0 && p.0 == n && p.1.cmp_abs(&bp.1).is_lt()),
            };
            if better {
                best = Some((j, p));
            }
        }
        let (j, p) = best.expect("basis vectors span the lattice");
        span = span.hstack(&orbits[j]);
        profile = p;
        chosen.push(j);
    }
    chosen.into_iter().map(unit).collect()
}

struct Step {
    h: IntMatrix,
    u: IntMatrix,
    rank: usize,
    pivot_row: Vec<Option<usize>>,
    // Relation parts on the earlier generators' orbit columns.
    rel_prev: IntMatrix,
    profile: (usize, Int),
}

struct Search<'a> {
    n: usize,
    b: &'a Lattice,
    steps: Vec<Step>,
    t: IntMatrix,
    height: i64,
    budget: &'a mut u64,
    exhausted: bool,
    orbits: Vec<IntMatrix>,
}

fn search(a: &Lattice, b: &Lattice, gens: &[Vec<Int>], height: i64, budget: &mut u64) -> Option<IntMatrix> {
    let n = a.rank();
    let order = a.group().order();
    let mut w = IntMatrix::zeros(n, 0);
    let mut steps = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        w = w.hstack(&orbit_matrix(a, g));
        let rel = kernel(&w);
        let prev_rows = i * order;
        let mut c = IntMatrix::zeros(0, n);
        for r in 0..rel.cols() {
            let mut block = IntMatrix::zeros(n, n);
            for e in 0..order {
                let coef = &rel[(prev_rows + e, r)];
                if !coef.is_zero() {
                    block = block.add(&b.matrix(e).scale(coef));
                }
            }
            c = c.vstack(&block);
        }
        let hf = hermite_rows(&c, true);
        let mut pivot_row = vec![None; n];
        for (r, &p) in hf.pivots.iter().enumerate() {
            pivot_row[p] = Some(r);
        }
        steps.push(Step {
            h: hf.h,
            u: hf.u.unwrap(),
            rank: hf.rank,
            pivot_row,
            rel_prev: rel.block(0, 0, prev_rows, rel.cols()),
            profile: span_profile(&w),
        });
    }
    let t = Solver::new(&w).solve(&IntMatrix::identity(n)).expect("generators span over Z");
    let mut s = Search { n, b, steps, t, height: 0, budget, exhausted: false, orbits: Vec::new() };
    for h in 1..=height {
        s.height = h;
        s.orbits.clear();
        if let Some(x) = s.generator(0) {
            return Some(x);
        }
        if s.exhausted {
            debug!("iso search node budget exhausted at height {h}");
            return None;
        }
    }
    None
}

impl Search<'_> {
    fn generator(&mut self, i: usize) -> Option<IntMatrix> {
        if i == self.steps.len() {
            let wb = self.orbits.iter().fold(IntMatrix::zeros(self.n, 0), |acc, o| acc.hstack(o));
            let x = wb.mul(&self.t);
            return determinant(&x).is_unit().then_some(x);
        }
        let step = &self.steps[i];
        // rhs = U·d with d = −W_B(<i)·r' stacked over relations.
        let n = self.n;
        let nrel = step.rel_prev.cols();
        let mut d = vec![Int::zero(); n * nrel];
        if i > 0 {
            let wb = self.orbits.iter().fold(IntMatrix::zeros(n, 0), |acc, o| acc.hstack(o));
            let prod = wb.mul(&step.rel_prev);
            for r in 0..nrel {
                for row in 0..n {
                    d[r * n + row] = -prod[(row, r)].clone();
                }
            }
        }
        let rhs = step.u.mul_vec(&d);
        if rhs[step.rank..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut v = vec![Int::zero(); n];
        self.coord(i, n, &rhs, &mut v, i == 0)
    }

    fn coord(&mut self, i: usize, j: usize, rhs: &[Int], v: &mut Vec<Int>, sign_free: bool) -> Option<IntMatrix> {
        if self.exhausted {
            return None;
        }
        if j == 0 {
            if v.iter().all(|x| x.is_zero()) {
                return None;
            }
            let orbit = orbit_matrix(self.b, v);
            let wb = self.orbits.iter().fold(IntMatrix::zeros(self.n, 0), |acc, o| acc.hstack(o)).hstack(&orbit);
            if span_profile(&wb) != self.steps[i].profile {
                return None;
            }
            self.orbits.push(orbit);
            let r = self.generator(i + 1);
            self.orbits.pop();
            return r;
        }
        let col = j - 1;
        let step = &self.steps[i];
        if let Some(r) = step.pivot_row[col] {
            let mut acc = rhs[r].clone();
            for k in col + 1..self.n {
                if !step.h[(r, k)].is_zero() {
                    acc -= &(&step.h[(r, k)] * &v[k]);
                }
            }
            let p = &step.h[(r, col)];
            if !p.divides(&acc) {
                return None;
            }
            v[col] = acc.div_exact(p);
            let still_free = sign_free && v[col].is_zero();
            if sign_free && v[col].is_negative() {
                return None;
            }
            return self.coord(i, col, rhs, v, still_free);
        }
        let h = self.height;
        let mut vals = vec![0i64];
        for k in 1..=h {
            vals.push(k);
            if !sign_free {
                vals.push(-k);
            }
        }
        for x in vals {
            if *self.budget == 0 {
                self.exhausted = true;
                return None;
            }
            *self.budget -= 1;
            v[col] = Int::from(x);
            if let Some(m) = self.coord(i, col, rhs, v, sign_free && x == 0) {
                return Some(m);
            }
        }
        v[col] = Int::zero();
        None
    }
}

/// Characteristic polynomial of each generator, for reports.
pub fn generator_charpolys(l: &Lattice) -> Vec<IntPoly> {
    l.action().iter().map(charpoly).collect()
}
