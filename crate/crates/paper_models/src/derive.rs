//! Independent derivation of the action tables. The first table of each case
//! is computed from the group law on explicit vectors of the regular
//! representation; later tables follow by substituting the printed changes of
//! variables and erasing generators that become trivial.

use monomial_action::{
    certify_change, drop_trivial_generators, restrict_variables, substitute, ChangeOfVariables, ChangeVerdict,
    MonomialAction, MonomialError,
};
use serde::Serialize;

use crate::cyclotomic::check_odd_prime;
use crate::error::PaperError;
use crate::tables::{build, inv, printed_table, prod, pw, times, v, x, Case, Gen, Mono};

type Elem = (usize, Vec<usize>);

/// `A ⋊ ⟨s⟩` with `A = 𝔽_p^dim` and `s⁻¹ a s = φ(a)`; elements are `s^i a`.
struct Extension {
    p: usize,
    /// `phi[j]` is `φ(e_j)`.
    phi: Vec<Vec<usize>>,
    /// Generator names; `None` stands for `s`.
    gens: Vec<(&'static str, Option<usize>)>,
    /// Vectors `Σ_a ζ^{w·a} x(s^i a)` named `prefix_i`.
    families: Vec<(&'static str, Vec<i64>)>,
}

impl Extension {
    fn model(case: Case, p: usize) -> Extension {
        let e = |v: &[usize]| v.to_vec();
        match case {
            // Basis (σ₁, σ₂), s = σ₃, elements σ₃^i σ₁^j σ₂^k.
            Case::One => Extension {
                p,
                phi: vec![e(&[1, 0]), e(&[1, 1])],
                gens: vec![("sigma1", Some(0)), ("sigma2", Some(1)), ("sigma3", None)],
                families: vec![("x0_", vec![-1, -1]), ("x1_", vec![1, 1])],
            },
            // Basis (σ₃, σ₁, σ₂), s = σ₄.
            Case::Two => Extension {
                p,
                phi: vec![e(&[1, 1, 0]), e(&[0, 1, 0]), e(&[0, 0, 1])],
                gens: vec![("sigma1", Some(1)), ("sigma2", Some(2)), ("sigma3", Some(0)), ("sigma4", None)],
                families: vec![
                    ("x0_", vec![-1, -1, -1]),
                    ("x1_", vec![1, 1, 1]),
                    ("y0_", vec![-1, -1, 1]),
                    ("y1_", vec![1, 1, -1]),
                ],
            },
            // Basis (σ₃, σ₂, σ₁), s = σ₄.
            Case::Three => Extension {
                p,
                phi: vec![e(&[1, 1, 0]), e(&[0, 1, 1]), e(&[0, 0, 1])],
                gens: vec![("sigma1", Some(2)), ("sigma2", Some(1)), ("sigma3", Some(0)), ("sigma4", None)],
                families: vec![
                    ("x0_", vec![-1, -1, -1]),
                    ("x1_", vec![1, 1, 1]),
                    ("y0_", vec![-1, -1, 1]),
                    ("y1_", vec![1, 1, -1]),
                ],
            },
        }
    }

    fn dim(&self) -> usize {
        self.phi.len()
    }

    fn apply_phi(&self, a: &[usize], times: usize) -> Vec<usize> {
        let mut cur = a.to_vec();
        for _ in 0..times {
            let mut next = vec![0; self.dim()];
            for (j, &aj) in cur.iter().enumerate() {
                for (k, nk) in next.iter_mut().enumerate() {
                    *nk = (*nk + aj * self.phi[j][k]) % self.p;
                }
            }
            cur = next;
        }
        cur
    }

    /// `(s^i a)(s^j b) = s^{i+j} φ^j(a) b`.
    fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let a = self.apply_phi(&x.1, y.0);
        ((x.0 + y.0) % self.p, a.iter().zip(&y.1).map(|(s, t)| (s + t) % self.p).collect())
    }

    fn generator(&self, k: usize) -> Elem {
        match self.gens[k].1 {
            None => (1, vec![0; self.dim()]),
            Some(j) => (0, (0..self.dim()).map(|i| usize::from(i == j)).collect()),
        }
    }

    fn index(&self, e: &Elem) -> usize {
        e.1.iter().rev().fold(e.0, |acc, &d| acc * self.p + d)
    }

    fn elements(&self) -> Vec<Elem> {
        let size = self.p.pow(self.dim() as u32);
        let mut out = Vec::new();
        for i in 0..self.p {
            for mut code in 0..size {
                let a = (0..self.dim())
                    .map(|_| {
                        let d = code % self.p;
                        code /= self.p;
                        d
                    })
                    .collect();
                out.push((i, a));
            }
        }
        out
    }

    fn eval(&self, word: &[&str]) -> Elem {
        word.iter().fold((0, vec![0; self.dim()]), |acc, name| {
            let k = self.gens.iter().position(|g| g.0 == *name).expect("generator");
            self.mul(&acc, &self.generator(k))
        })
    }
}

/// A vector of the regular representation as `x(g) ↦ ζ-exponent`.
type Vector = Vec<Option<i64>>;

/// The first table of `case`, computed on the vectors `x0_i, x1_i, …`.
pub fn group_law_table(case: Case, p: i64) -> Result<MonomialAction, PaperError> {
    let n = check_odd_prime(p)?;
    let ext = Extension::model(case, n);
    let elems = ext.elements();
    let size = elems.len();
    let mut names = Vec::new();
    let mut vectors: Vec<Vector> = Vec::new();
    for (prefix, w) in &ext.families {
        for i in 0..n {
            let mut vec = vec![None; size];
            for e in elems.iter().filter(|e| e.0 == i) {
                let s: i64 = w.iter().zip(&e.1).map(|(a, b)| a * *b as i64).sum();
                vec[ext.index(e)] = Some(s.rem_euclid(p));
            }
            names.push(v(prefix, i));
            vectors.push(vec);
        }
    }
    let locate = |img: &Vector| -> Option<(usize, i64)> {
        vectors.iter().enumerate().find_map(|(j, b)| {
            let mut shift = None;
            for (s, t) in img.iter().zip(b) {
                match (s, t) {
                    (None, None) => {}
                    (Some(s), Some(t)) => {
                        let d = (s - t).rem_euclid(p);
                        if *shift.get_or_insert(d) != d {
                            return None;
                        }
                    }
                    _ => return None,
                }
            }
            shift.map(|d| (j, d))
        })
    };
    let mut gens = Vec::new();
    for k in 0..ext.gens.len() {
        let g = ext.generator(k);
        let mut gen = Gen::new(ext.gens[k].0, 1);
        for (name, vec) in names.iter().zip(&vectors) {
            let mut img = vec![None; size];
            for (e, c) in elems.iter().zip(vec) {
                img[ext.index(&ext.mul(&g, e))] = *c;
            }
            let (j, d) = locate(&img).ok_or_else(|| PaperError::UnknownName(format!("image of {name}")))?;
            gen.set(name.clone(), d, x(names[j].clone()));
        }
        gens.push(gen);
    }
    let mut tau = Gen::new("tau", -1);
    for (name, vec) in names.iter().zip(&vectors) {
        let img: Vector = vec.iter().map(|c| c.map(|c| (-c).rem_euclid(p))).collect();
        let (j, d) = locate(&img).ok_or_else(|| PaperError::UnknownName(format!("image of {name}")))?;
        tau.set(name.clone(), d, x(names[j].clone()));
    }
    gens.push(tau);
    let present: Vec<&str> = gens.iter().map(|g| g.name.as_str()).collect();
    let relations = case.relations(p, &present);
    build(p, names, gens, relations)
}

/// Whether the model group satisfies the defining relations not involving `τ`.
pub fn model_satisfies_relations(case: Case, p: i64) -> Result<bool, PaperError> {
    let n = check_odd_prime(p)?;
    let ext = Extension::model(case, n);
    let sig: Vec<&str> = case.generators().into_iter().filter(|g| *g != "tau").collect();
    for (l, r) in case.relations(p, &sig) {
        fn word(s: &str) -> Vec<&str> {
            s.split_whitespace()
                .filter(|t| *t != "1")
                .flat_map(|t| match t.split_once('^') {
                    Some((g, k)) => vec![g; k.parse().unwrap_or(0)],
                    None => vec![t],
                })
                .collect()
        }
        let (l, r) = (word(&l), word(&r));
        if ext.index(&ext.eval(&l)) != ext.index(&ext.eval(&r)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One operation between consecutive tables.
#[derive(Clone, Debug)]
pub enum Descent {
    /// Pass to the subfield generated by these monomials.
    Substitute(Vec<(String, Mono)>),
    /// An invertible change of variables.
    Change(Vec<(String, Mono)>),
    /// Keep only these variables (the rest are split off).
    Restrict(Vec<String>),
    /// These generators now act trivially.
    Drop(Vec<&'static str>),
}

fn names(prefix: &str, r: std::ops::Range<usize>) -> Vec<String> {
    r.map(|i| v(prefix, i)).collect()
}

fn same(prefix: &str, r: std::ops::Range<usize>) -> Vec<(String, Mono)> {
    r.map(|i| (v(prefix, i), x(v(prefix, i)))).collect()
}

/// `name_i = old_i / old_{i−1}` for `i` in `r`.
fn ratios(name: &str, old: &str, r: std::ops::Range<usize>) -> Vec<(String, Mono)> {
    r.map(|i| (v(name, i), times(vec![x(v(old, i)), pw(v(old, i - 1), -1)]))).collect()
}

/// `X = a·b^{−(p−1)/2}`, `Y = a^{−1}·b^{(p+1)/2}`.
fn pair_change(names: (&str, &str), a: String, b: String, p: i64) -> Vec<(String, Mono)> {
    vec![
        (names.0.to_string(), times(vec![x(a.clone()), pw(b.clone(), -(p - 1) / 2)])),
        (names.1.to_string(), times(vec![pw(a, -1), pw(b, (p + 1) / 2)])),
    ]
}

/// `u_0 = x_1^p`, `v_0 = x_1 y_1`, `u_i = x_{i+1}/x_i`, `v_i = y_{i+1}/y_i`.
fn uv_defs(n: usize) -> Vec<(String, Mono)> {
    let q = n as i64;
    let mut out = vec![(v("u", 0), pw(v("x", 1), q))];
    out.extend((1..n - 1).map(|i| (v("u", i), times(vec![x(v("x", i + 1)), pw(v("x", i), -1)]))));
    out.push((v("v", 0), times(vec![x(v("x", 1)), x(v("y", 1))])));
    out.extend((1..n - 1).map(|i| (v("v", i), times(vec![x(v("y", i + 1)), pw(v("y", i), -1)]))));
    out
}

/// Step 6 variables `u_1, …, u_{p−1}, w_1, …, w_{p−1}` in terms of `u_i, v_i`.
fn uw_defs(n: usize) -> Vec<(String, Mono)> {
    let h = n - 1;
    let mut out = same("u", 1..h);
    out.push((v("u", h), inv(prod("u", 0..h, |k| if k == 0 { 1 } else { (n - k) as i64 }))));
    for i in 1..h {
        out.push((v("w", i), times(vec![prod("v", 0..i + 1, |_| 1), prod("u", 1..i + 1, |_| 1)])));
    }
    let tail = times(vec![prod("v", 0..h, |k| (h - k) as i64), prod("u", 1..h, |k| (h - k) as i64)]);
    out.push((v("w", h), inv(tail)));
    out
}

fn rt_defs(n: usize) -> Vec<(String, Mono)> {
    let h = n - 1;
    let q = n as i64;
    let mut out = same("R", 1..h);
    out.push((
        v("R", h),
        times(vec![x(v("u", 0)), inv(prod("R", 0..h, |k| if k == 0 { 1 } else { (n - k) as i64 }))]),
    ));
    for i in 1..h {
        out.push((v("T", i), times(vec![prod("S", 0..i + 1, |_| 1), prod("R", 1..i + 1, |_| 1)])));
    }
    let tail = times(vec![prod("S", 0..h, |k| (h - k) as i64), prod("R", 1..h, |k| (h - k) as i64)]);
    out.push((v("T", h), times(vec![x(v("u", 1)), x(v("v", 1)), pw(v("v", 0), q), inv(tail)])));
    out
}

/// The operations leading from the step before `step` to `step`.
pub fn descent(case: Case, step: &str, p: i64) -> Result<Vec<Descent>, PaperError> {
    use Descent::*;
    let n = check_odd_prime(p)?;
    let q = p;
    let h = n - 1;
    let xy_defs = |with_caps: bool| {
        let mut d = vec![
            (v("x", 0), pw(v("x0_", 0), q)),
        ];
        d.extend(ratios("x", "x0_", 1..n));
        d.push((v("y", 0), times(vec![x(v("x0_", 0)), x(v("x1_", 0))])));
        d.extend(ratios("y", "x1_", 1..n));
        if with_caps {
            let (cx, cy) = match case {
                Case::Two => (times(vec![x(v("y0_", 0)), pw(v("x0_", 0), -1)]), times(vec![x(v("y1_", 0)), pw(v("x1_", 0), -1)])),
                _ => (times(vec![x(v("x0_", 0)), x(v("y0_", 0))]), times(vec![x(v("x1_", 0)), x(v("y1_", 0))])),
            };
            d.push((v("X", 0), cx));
            d.extend(ratios("X", "y0_", 1..n));
            d.push((v("Y", 0), cy));
            d.extend(ratios("Y", "y1_", 1..n));
        }
        d
    };
    let small: Vec<String> = [names("x", 1..n), names("y", 1..n), names("X", 1..n), names("Y", 1..n)].concat();
    let tilde = || {
        let mut d = pair_change(("xt", "yt"), v("x", 0), v("y", 0), p);
        d.extend(same("X", 0..1));
        d.extend(same("Y", 0..1));
        d.extend(small.iter().map(|s| (s.clone(), x(s.clone()))));
        d
    };
    let out = match (case, step) {
        (Case::One, "3") => vec![Substitute(xy_defs(false)), Drop(vec!["sigma1"])],
        (Case::One, "4") => {
            let mut d = pair_change(("X", "Y"), v("x", 0), v("y", 0), p);
            d.extend(same("x", 1..n));
            d.extend(same("y", 1..n));
            vec![Change(d), Restrict([names("x", 1..n), names("y", 1..n)].concat())]
        }
        (Case::One, "5") => vec![Substitute(uv_defs(n)), Drop(vec!["sigma2"])],
        (Case::One, "6") => vec![Change(uw_defs(n))],
        (Case::Two, "2") | (Case::Three, "2") => vec![Substitute(xy_defs(true)), Drop(vec!["sigma1"])],
        (Case::Two, "3") => {
            let keep = [vec![v("X", 0), v("Y", 0)], small.clone()].concat();
            vec![Change(tilde()), Restrict(keep)]
        }
        (Case::Two, "4") => {
            let mut d = vec![
                ("Xt".to_string(), pw(v("X", 0), q)),
                ("Yt".to_string(), times(vec![x(v("X", 0)), x(v("Y", 0))])),
            ];
            d.extend(small.iter().map(|s| (s.clone(), x(s.clone()))));
            vec![Substitute(d), Drop(vec!["sigma2"])]
        }
        (Case::Two, "4b") => {
            let mut d = pair_change(("Xp", "Yp"), "Xt".into(), "Yt".into(), p);
            d.extend(small.iter().map(|s| (s.clone(), x(s.clone()))));
            let mut uv = uv_defs(n);
            uv.extend((1..n).map(|i| (v("U", i), times(vec![x(v("X", i)), pw(v("x", i), -1)]))));
            uv.extend((1..n).map(|i| (v("V", i), times(vec![x(v("Y", i)), pw(v("y", i), -1)]))));
            vec![Change(d), Restrict(small.clone()), Substitute(uv), Drop(vec!["sigma3"])]
        }
        (Case::Three, "3") => vec![Change(tilde()), Restrict(small.clone())],
        (Case::Three, "4") => {
            let mut d = uv_defs(n);
            d.push((v("U", 0), times(vec![x(v("x", 1)), x(v("X", 1))])));
            d.extend((1..h).map(|i| (v("U", i), times(vec![x(v("X", i + 1)), pw(v("X", i), -1)]))));
            d.push((v("V", 0), times(vec![x(v("y", 1)), x(v("Y", 1))])));
            d.extend((1..h).map(|i| (v("V", i), times(vec![x(v("Y", i + 1)), pw(v("Y", i), -1)]))));
            vec![Substitute(d), Drop(vec!["sigma2"])]
        }
        (Case::Three, "5") => {
            let mut d = [same("u", 0..h), same("v", 0..h)].concat();
            d.push((v("R", 0), pw(v("U", 0), q)));
            d.extend((1..h).map(|i| (v("R", i), x(v("U", i)))));
            d.push((v("S", 0), times(vec![x(v("U", 0)), x(v("V", 0))])));
            d.extend((1..h).map(|i| (v("S", i), x(v("V", i)))));
            vec![Substitute(d), Drop(vec!["sigma3"])]
        }
        (Case::Three, "6") => vec![Change([uw_defs(n), rt_defs(n)].concat())],
        _ => return Err(PaperError::UnknownFixture(format!("descent to case {} step {step}", case.number()))),
    };
    Ok(out)
}

fn change_for(action: &MonomialAction, defs: &[(String, Mono)]) -> Result<ChangeOfVariables, PaperError> {
    Ok(ChangeOfVariables::from_monomials(action.vars(), defs)?)
}

/// Applies one step's operations.
pub fn apply_descent(action: &MonomialAction, ops: &[Descent]) -> Result<MonomialAction, PaperError> {
    let mut cur = action.clone();
    for op in ops {
        cur = match op {
            Descent::Substitute(defs) => substitute(&cur, &change_for(&cur, defs)?)?,
            Descent::Change(defs) => {
                let verdict = certify_change(&cur, &change_for(&cur, defs)?);
                verdict.action.ok_or(PaperError::Monomial(MonomialError::Singular(verdict.det)))?
            }
            Descent::Restrict(keep) => {
                let keep: Vec<&str> = keep.iter().map(String::as_str).collect();
                restrict_variables(&cur, &keep)?
            }
            Descent::Drop(gens) => drop_trivial_generators(&cur, gens)?,
        };
    }
    Ok(cur)
}

fn step_position(case: Case, step: &str) -> Result<usize, PaperError> {
    case.steps()
        .iter()
        .position(|s| *s == step)
        .ok_or_else(|| PaperError::UnknownFixture(format!("case {} step {step}", case.number())))
}

/// Follows the descents from `from` (the table at `from_step`) to `to_step`.
pub fn derive_between(case: Case, from_step: &str, from: &MonomialAction, to_step: &str, p: i64) -> Result<MonomialAction, PaperError> {
    let (a, b) = (step_position(case, from_step)?, step_position(case, to_step)?);
    let mut cur = from.clone();
    for step in &case.steps()[a + 1..=b] {
        cur = apply_descent(&cur, &descent(case, step, p)?)?;
    }
    Ok(cur)
}

/// The table at `step` derived from the group law.
pub fn derived_table(case: Case, step: &str, p: i64) -> Result<MonomialAction, PaperError> {
    derive_between(case, case.steps()[0], &group_law_table(case, p)?, step, p)
}

/// The table at `step` derived from the nearest earlier printed table.
pub fn rederived_table(case: Case, step: &str, p: i64) -> Result<MonomialAction, PaperError> {
    let pos = step_position(case, step)?;
    let prev = case.steps()[..pos]
        .iter()
        .rev()
        .find(|s| case.printed_steps().contains(s))
        .ok_or_else(|| PaperError::UnknownFixture(format!("no printed table before case {} step {step}", case.number())))?;
    derive_between(case, prev, &printed_table(case, prev, p)?, step, p)
}

/// Entries where two tables on the same variables and generators differ.
pub fn table_diff(a: &MonomialAction, b: &MonomialAction) -> Vec<String> {
    if a.vars() != b.vars() {
        return vec![format!("variables differ: {:?} vs {:?}", a.vars(), b.vars())];
    }
    if a.generator_names() != b.generator_names() {
        return vec![format!("generators differ: {:?} vs {:?}", a.generator_names(), b.generator_names())];
    }
    let mut out = Vec::new();
    for (g, (ma, mb)) in a.generators().iter().zip(b.generators()).enumerate() {
        if ma.t != mb.t {
            out.push(format!("{}: twist {} vs {}", a.generator_names()[g], ma.t, mb.t));
        }
        for j in 0..a.nvars() {
            if ma.c[j] != mb.c[j] || ma.a.column(j) != mb.a.column(j) {
                out.push(format!("{}: {} vs {}", a.generator_names()[g], a.describe(g, j), b.describe(g, j)));
            }
        }
    }
    out
}

/// The 2×2 block of Step 4 of the first case: columns are the exponents of
/// `X = x_0 y_0^{−(p−1)/2}` and `Y = x_0^{−1} y_0^{(p+1)/2}`.
pub fn step4_block(p: i64) -> Result<ChangeOfVariables, PaperError> {
    check_odd_prime(p)?;
    let old = vec![v("x", 0), v("y", 0)];
    Ok(ChangeOfVariables::from_monomials(&old, &pair_change(("X", "Y"), v("x", 0), v("y", 0), p))?)
}

/// Certifies the first `Change` leading to `step` against the preceding
/// printed table.
pub fn certify_step_change(case: Case, step: &str, p: i64) -> Result<ChangeVerdict, PaperError> {
    let pos = step_position(case, step)?;
    let prev = case.steps().get(pos.wrapping_sub(1)).copied().filter(|s| case.printed_steps().contains(s)).ok_or_else(
        || PaperError::UnknownFixture(format!("case {} step {step} does not follow a printed table", case.number())),
    )?;
    let from = printed_table(case, prev, p)?;
    let defs = descent(case, step, p)?
        .into_iter()
        .find_map(|d| if let Descent::Change(defs) = d { Some(defs) } else { None })
        .ok_or_else(|| PaperError::UnknownFixture(format!("case {} step {step} has no change of variables", case.number())))?;
    Ok(certify_change(&from, &change_for(&from, &defs)?))
}

/// Summary of the checks on one printed table.
#[derive(Clone, Debug, Serialize)]
pub struct TableCheck {
    pub case: u8,
    pub step: String,
    pub p: i64,
    /// `None` when the relations hold, else the first failure.
    pub relation_failure: Option<String>,
    /// Differences from the derivation out of the group law, or why it stopped.
    pub against_group_law: Result<Vec<String>, String>,
    /// Differences from the derivation out of the previous printed table.
    pub against_previous: Option<Result<Vec<String>, String>>,
}

impl TableCheck {
    pub fn verified(&self) -> bool {
        self.relation_failure.is_none()
    }

    pub fn matches_group_law(&self) -> bool {
        matches!(&self.against_group_law, Ok(d) if d.is_empty())
    }
}

pub fn check_table(case: Case, step: &str, p: i64) -> Result<TableCheck, PaperError> {
    let printed = printed_table(case, step, p)?;
    let relation_failure = match printed.verify() {
        monomial_action::Verification::Holds => None,
        monomial_action::Verification::Fails(f) => Some(f.to_string()),
    };
    let compare = |r: Result<MonomialAction, PaperError>| match r {
        Ok(d) => Ok(table_diff(&printed, &d)),
        Err(e) => Err(e.to_string()),
    };
    let against_group_law = if step == case.steps()[0] {
        compare(group_law_table(case, p))
    } else {
        compare(derived_table(case, step, p))
    };
    let against_previous = (step != case.steps()[0]).then(|| compare(rederived_table(case, step, p)));
    Ok(TableCheck { case: case.number(), step: step.to_string(), p, relation_failure, against_group_law, against_previous })
}
