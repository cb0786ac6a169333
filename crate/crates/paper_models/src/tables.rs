//! Transcriptions of the printed monomial action tables of the three order
//! `p³`/`p⁴` groups of exponent `p`, for a given odd prime `p`.
//!
//! A variable missing from a generator's row is fixed by it. `ζ` has order
//! `p`; every `σ_k` fixes `ζ` and `τ` inverts it.

use std::collections::BTreeMap;

use exact_linalg::{Int, IntMatrix};
use monomial_action::{MonomialAction, MonomialMap};

use crate::cyclotomic::check_odd_prime;
use crate::error::PaperError;

/// Exponents of a Laurent monomial; repeated variables add up.
pub type Mono = Vec<(String, i64)>;

pub(crate) fn v(prefix: &str, i: usize) -> String {
    format!("{prefix}{i}")
}

pub(crate) fn x(name: String) -> Mono {
    vec![(name, 1)]
}

pub(crate) fn pw(name: String, k: i64) -> Mono {
    vec![(name, k)]
}

pub(crate) fn times(parts: Vec<Mono>) -> Mono {
    parts.into_iter().flatten().collect()
}

pub(crate) fn inv(m: Mono) -> Mono {
    m.into_iter().map(|(n, k)| (n, -k)).collect()
}

/// `∏_{i ∈ range} prefix_i^{f(i)}`.
pub(crate) fn prod(prefix: &str, range: std::ops::Range<usize>, f: impl Fn(usize) -> i64) -> Mono {
    range.map(|i| (v(prefix, i), f(i))).collect()
}

pub(crate) struct Gen {
    pub name: String,
    pub twist: i64,
    pub rows: Vec<(String, i64, Mono)>,
}

impl Gen {
    pub fn new(name: &str, twist: i64) -> Gen {
        Gen { name: name.to_string(), twist, rows: Vec::new() }
    }

    pub fn set(&mut self, var: String, zeta: i64, image: Mono) -> &mut Self {
        self.rows.push((var, zeta, image));
        self
    }

    pub fn scale(&mut self, var: String, zeta: i64) -> &mut Self {
        let image = x(var.clone());
        self.set(var, zeta, image)
    }

    pub fn swap(&mut self, a: String, b: String) -> &mut Self {
        self.set(a.clone(), 0, x(b.clone()));
        self.set(b, 0, x(a))
    }

    /// `names[0] ↦ names[1] ↦ ⋯ ↦ names[last] ↦ last_image`.
    pub fn chain(&mut self, names: &[String], last_image: Mono) -> &mut Self {
        for w in names.windows(2) {
            self.set(w[0].clone(), 0, x(w[1].clone()));
        }
        if let Some(l) = names.last() {
            self.set(l.clone(), 0, last_image);
        }
        self
    }

    /// The chain closing with `(∏ names)^{-1}`.
    pub fn cycle(&mut self, names: &[String]) -> &mut Self {
        let last = names.iter().map(|n| (n.clone(), -1)).collect();
        self.chain(names, last)
    }
}

pub(crate) fn build(p: i64, vars: Vec<String>, gens: Vec<Gen>, relations: Vec<(String, String)>) -> Result<MonomialAction, PaperError> {
    let n = vars.len();
    let index: BTreeMap<&str, usize> = vars.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    let lookup = |s: &str| index.get(s).copied().ok_or_else(|| PaperError::UnknownName(s.to_string()));
    let mut maps = Vec::new();
    for g in gens {
        let mut a = IntMatrix::identity(n);
        let mut c = vec![0; n];
        let mut seen = vec![false; n];
        for (var, zeta, image) in &g.rows {
            let j = lookup(var)?;
            if seen[j] {
                return Err(PaperError::BadParam(format!("{} lists {var} twice", g.name)));
            }
            seen[j] = true;
            for i in 0..n {
                a[(i, j)] = Int::zero();
            }
            for (w, k) in image {
                a[(lookup(w)?, j)] += &Int::from(*k);
            }
            c[j] = *zeta;
        }
        maps.push((g.name, MonomialMap { a, c, t: g.twist }));
    }
    Ok(MonomialAction::new(p, vars, maps, &relations)?)
}

/// One of the three groups, numbered as in the tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Case {
    One,
    Two,
    Three,
}

impl Case {
    pub const ALL: [Case; 3] = [Case::One, Case::Two, Case::Three];

    pub fn number(self) -> u8 {
        match self {
            Case::One => 1,
            Case::Two => 2,
            Case::Three => 3,
        }
    }

    pub fn from_number(n: u8) -> Option<Case> {
        Case::ALL.into_iter().find(|c| c.number() == n)
    }

    /// Generator names of `⟨G, τ⟩`.
    pub fn generators(self) -> Vec<&'static str> {
        match self {
            Case::One => vec!["sigma1", "sigma2", "sigma3", "tau"],
            _ => vec!["sigma1", "sigma2", "sigma3", "sigma4", "tau"],
        }
    }

    /// Steps with a printed table.
    pub fn printed_steps(self) -> &'static [&'static str] {
        match self {
            Case::One => &["2", "3", "5", "6"],
            Case::Two => &["1", "2", "4", "4b"],
            Case::Three => &["1", "2", "4", "5", "6"],
        }
    }

    /// Every step in order, including those that only define new variables.
    pub fn steps(self) -> &'static [&'static str] {
        match self {
            Case::One => &["2", "3", "4", "5", "6"],
            Case::Two => &["1", "2", "3", "4", "4b"],
            Case::Three => &["1", "2", "3", "4", "5", "6"],
        }
    }

    /// Defining relations of `⟨G, τ⟩`, with `τ` central of order 2.
    fn full_relations(self) -> Vec<(Vec<&'static str>, Vec<&'static str>)> {
        let gens = self.generators();
        let sig = &gens[..gens.len() - 1];
        let mut rels: Vec<(Vec<&str>, Vec<&str>)> = Vec::new();
        for s in sig {
            rels.push((vec![s], vec![]));
        }
        rels.push((vec!["tau"], vec![]));
        let mut commute = |a: &'static str, b: &'static str| rels.push((vec![a, b], vec![b, a]));
        match self {
            Case::One => {
                commute("sigma1", "sigma2");
                commute("sigma1", "sigma3");
            }
            Case::Two => {
                for b in ["sigma2", "sigma3", "sigma4"] {
                    commute("sigma1", b);
                }
                commute("sigma2", "sigma3");
                commute("sigma2", "sigma4");
            }
            Case::Three => {
                for b in ["sigma2", "sigma3", "sigma4"] {
                    commute("sigma1", b);
                }
                commute("sigma2", "sigma3");
            }
        }
        for s in sig {
            commute("tau", s);
        }
        match self {
            Case::One => rels.push((vec!["sigma2", "sigma3"], vec!["sigma3", "sigma1", "sigma2"])),
            Case::Two => rels.push((vec!["sigma3", "sigma4"], vec!["sigma4", "sigma1", "sigma3"])),
            Case::Three => {
                rels.push((vec!["sigma2", "sigma4"], vec!["sigma4", "sigma1", "sigma2"]));
                rels.push((vec!["sigma3", "sigma4"], vec!["sigma4", "sigma2", "sigma3"]));
            }
        }
        rels
    }

    /// Relations among the generators `present`, obtained by erasing the
    /// others (which act trivially on later steps). A one-letter left side
    /// with empty right side stands for the order relation.
    pub fn relations(self, p: i64, present: &[&str]) -> Vec<(String, String)> {
        let render = |w: &[&str]| if w.is_empty() { "1".to_string() } else { w.join(" ") };
        let mut out = Vec::new();
        for (l, r) in self.full_relations() {
            if r.is_empty() {
                if present.contains(&l[0]) {
                    let order = if l[0] == "tau" { 2 } else { p };
                    out.push((format!("{}^{order}", l[0]), "1".to_string()));
                }
                continue;
            }
            let l: Vec<&str> = l.into_iter().filter(|g| present.contains(g)).collect();
            let r: Vec<&str> = r.into_iter().filter(|g| present.contains(g)).collect();
            if l != r {
                out.push((render(&l), render(&r)));
            }
        }
        out
    }
}

fn idx(prefix: &str, range: std::ops::Range<usize>) -> Vec<String> {
    range.map(|i| v(prefix, i)).collect()
}

fn cat(parts: &[Vec<String>]) -> Vec<String> {
    parts.concat()
}

/// The printed table for `case` at `step`.
pub fn printed_table(case: Case, step: &str, p: i64) -> Result<MonomialAction, PaperError> {
    let n = check_odd_prime(p)?;
    let q = p; // exponent `p` in monomials
    let h = n - 1;
    let unknown = || PaperError::UnknownFixture(format!("case {} step {step}", case.number()));
    let (vars, gens): (Vec<String>, Vec<Gen>) = match (case, step) {
        (Case::One, "2") => {
            let vars = cat(&[idx("x0_", 0..n), idx("x1_", 0..n)]);
            let mut s1 = Gen::new("sigma1", 1);
            let mut s2 = Gen::new("sigma2", 1);
            let mut s3 = Gen::new("sigma3", 1);
            let mut t = Gen::new("tau", -1);
            for i in 0..n {
                let k = i as i64;
                s1.scale(v("x0_", i), 1).scale(v("x1_", i), -1);
                s2.scale(v("x0_", i), k + 1).scale(v("x1_", i), -k - 1);
                s3.set(v("x0_", i), 0, x(v("x0_", (i + 1) % n))).set(v("x1_", i), 0, x(v("x1_", (i + 1) % n)));
                t.swap(v("x0_", i), v("x1_", i));
            }
            (vars, vec![s1, s2, s3, t])
        }
        (Case::One, "3") => {
            let vars = cat(&[idx("x", 0..n), idx("y", 0..n)]);
            let mut s2 = Gen::new("sigma2", 1);
            let mut s3 = Gen::new("sigma3", 1);
            let mut t = Gen::new("tau", -1);
            for i in 1..n {
                s2.scale(v("x", i), 1).scale(v("y", i), -1);
                t.swap(v("x", i), v("y", i));
            }
            s3.set(v("x", 0), 0, times(vec![x(v("x", 0)), pw(v("x", 1), q)]))
                .cycle(&idx("x", 1..n))
                .set(v("y", 0), 0, times(vec![x(v("y", 0)), x(v("y", 1)), x(v("x", 1))]))
                .cycle(&idx("y", 1..n));
            t.set(v("x", 0), 0, times(vec![pw(v("y", 0), q), pw(v("x", 0), -1)]));
            (vars, vec![s2, s3, t])
        }
        (Case::One, "5") => {
            let vars = cat(&[idx("u", 0..h), idx("v", 0..h)]);
            let mut s3 = Gen::new("sigma3", 1);
            let mut t = Gen::new("tau", -1);
            uv_rows(&mut s3, &mut t, n);
            (vars, vec![s3, t])
        }
        (Case::One, "6") => {
            let vars = cat(&[idx("u", 1..n), idx("w", 1..n)]);
            let mut s3 = Gen::new("sigma3", 1);
            let mut t = Gen::new("tau", -1);
            s3.cycle(&idx("u", 1..n)).cycle(&idx("w", 1..n));
            tau_uw_rows(&mut t, "u", "w", n);
            (vars, vec![s3, t])
        }
        (Case::Two, "1") | (Case::Three, "1") => {
            let vars = cat(&[idx("x0_", 0..n), idx("x1_", 0..n), idx("y0_", 0..n), idx("y1_", 0..n)]);
            let mut s = [Gen::new("sigma1", 1), Gen::new("sigma2", 1), Gen::new("sigma3", 1)];
            let mut s4 = Gen::new("sigma4", 1);
            let mut t = Gen::new("tau", -1);
            // Characters on (x0, x1, y0, y1) as affine functions a + b·i of the index.
            let chars: [[(i64, i64); 4]; 3] = match case {
                Case::Two => [[(1, 0), (-1, 0), (1, 0), (-1, 0)], [(1, 0), (-1, 0), (-1, 0), (1, 0)], [(1, 1), (-1, -1), (1, 1), (-1, -1)]],
                _ => [[(1, 0), (-1, 0), (-1, 0), (1, 0)], [(1, 1), (-1, -1), (1, -1), (-1, 1)], [(1, 1), (-1, -1), (1, 1), (-1, -1)]],
            };
            for i in 0..n {
                let k = i as i64;
                for (g, ch) in s.iter_mut().zip(&chars) {
                    for (pre, (a, b)) in ["x0_", "x1_", "y0_", "y1_"].iter().zip(ch) {
                        g.scale(v(pre, i), a + b * k);
                    }
                }
                for pre in ["x0_", "x1_", "y0_", "y1_"] {
                    s4.set(v(pre, i), 0, x(v(pre, (i + 1) % n)));
                }
                t.swap(v("x0_", i), v("x1_", i)).swap(v("y0_", i), v("y1_", i));
            }
            let [s1, s2, s3] = s;
            (vars, vec![s1, s2, s3, s4, t])
        }
        (Case::Two, "2") | (Case::Three, "2") => {
            let vars = cat(&[idx("x", 0..n), idx("y", 0..n), idx("X", 0..n), idx("Y", 0..n)]);
            let mut s2 = Gen::new("sigma2", 1);
            let mut s3 = Gen::new("sigma3", 1);
            let mut s4 = Gen::new("sigma4", 1);
            let mut t = Gen::new("tau", -1);
            match case {
                Case::Two => {
                    s2.scale(v("X", 0), -2).scale(v("Y", 0), 2);
                    for i in 1..n {
                        s3.scale(v("x", i), 1).scale(v("y", i), -1).scale(v("X", i), 1).scale(v("Y", i), -1);
                    }
                    s4.set(v("X", 0), 0, times(vec![x(v("X", 0)), x(v("X", 1)), pw(v("x", 1), -1)]))
                        .set(v("Y", 0), 0, times(vec![x(v("Y", 0)), x(v("Y", 1)), pw(v("y", 1), -1)]));
                }
                _ => {
                    s2.scale(v("X", 0), 2).scale(v("Y", 0), -2);
                    s3.scale(v("X", 0), 2).scale(v("Y", 0), -2);
                    for i in 1..n {
                        s2.scale(v("x", i), 1).scale(v("y", i), -1).scale(v("X", i), -1).scale(v("Y", i), 1);
                        s3.scale(v("x", i), 1).scale(v("y", i), -1).scale(v("X", i), 1).scale(v("Y", i), -1);
                    }
                    s4.set(v("X", 0), 0, times(vec![x(v("X", 0)), x(v("X", 1)), x(v("x", 1))]))
                        .set(v("Y", 0), 0, times(vec![x(v("Y", 0)), x(v("Y", 1)), x(v("y", 1))]));
                }
            }
            // Case 3 prints `y0 ↦ y0·y1·X1` here; read as `y0·y1·x1` like the other cases.
            s4.set(v("x", 0), 0, times(vec![x(v("x", 0)), pw(v("x", 1), q)]))
                .set(v("y", 0), 0, times(vec![x(v("y", 0)), x(v("y", 1)), x(v("x", 1))]));
            for pre in ["x", "y", "X", "Y"] {
                s4.cycle(&idx(pre, 1..n));
            }
            t.set(v("x", 0), 0, times(vec![pw(v("y", 0), q), pw(v("x", 0), -1)])).swap(v("X", 0), v("Y", 0));
            for i in 1..n {
                t.swap(v("x", i), v("y", i)).swap(v("X", i), v("Y", i));
            }
            (vars, vec![s2, s3, s4, t])
        }
        (Case::Two, "4") => {
            let vars = cat(&[vec!["Xt".into(), "Yt".into()], idx("x", 1..n), idx("y", 1..n), idx("X", 1..n), idx("Y", 1..n)]);
            let mut s3 = Gen::new("sigma3", 1);
            let mut s4 = Gen::new("sigma4", 1);
            let mut t = Gen::new("tau", -1);
            for i in 1..n {
                s3.scale(v("x", i), 1).scale(v("y", i), -1).scale(v("X", i), 1).scale(v("Y", i), -1);
                t.swap(v("x", i), v("y", i)).swap(v("X", i), v("Y", i));
            }
            s4.set("Xt".into(), 0, times(vec![x("Xt".into()), pw(v("X", 1), q), pw(v("x", 1), -q)])).set(
                "Yt".into(),
                0,
                times(vec![x("Yt".into()), x(v("X", 1)), x(v("Y", 1)), pw(v("x", 1), -1), pw(v("y", 1), -1)]),
            );
            for pre in ["x", "y", "X", "Y"] {
                s4.cycle(&idx(pre, 1..n));
            }
            t.set("Xt".into(), 0, times(vec![pw("Xt".into(), -1), pw("Yt".into(), q)]));
            (vars, vec![s3, s4, t])
        }
        (Case::Two, "4b") => {
            let vars = cat(&[idx("u", 0..h), idx("v", 0..h), idx("U", 1..n), idx("V", 1..n)]);
            let mut s4 = Gen::new("sigma4", 1);
            let mut t = Gen::new("tau", -1);
            uv_rows(&mut s4, &mut t, n);
            s4.cycle(&idx("U", 1..n)).cycle(&idx("V", 1..n));
            for i in 1..n {
                t.swap(v("U", i), v("V", i));
            }
            (vars, vec![s4, t])
        }
        (Case::Three, "4") => {
            let vars = cat(&[idx("u", 0..h), idx("v", 0..h), idx("U", 0..h), idx("V", 0..h)]);
            let mut s3 = Gen::new("sigma3", 1);
            let mut s4 = Gen::new("sigma4", 1);
            let mut t = Gen::new("tau", -1);
            // Printed as `V0 ↦ ζ^{-2} U0`, which is not invertible; read as `V0`.
            s3.scale(v("U", 0), 2).scale(v("V", 0), -2);
            uv_rows(&mut s4, &mut t, n);
            s4.set(v("U", 0), 0, times(vec![x(v("U", 0)), x(v("U", 1)), x(v("u", 1))]))
                .set(v("V", 0), 0, times(vec![x(v("V", 0)), x(v("V", 1)), x(v("v", 1))]))
                .chain(&idx("U", 1..h), times(vec![x(v("u", 0)), inv(weighted("U", n))]))
                .chain(&idx("V", 1..h), times(vec![pw(v("u", 0), -1), pw(v("v", 0), q), inv(weighted("V", n))]));
            t.swap(v("U", 0), v("V", 0));
            for i in 1..h {
                t.swap(v("U", i), v("V", i));
            }
            (vars, vec![s3, s4, t])
        }
        (Case::Three, "5") => {
            let vars = cat(&[idx("u", 0..h), idx("v", 0..h), idx("R", 0..h), idx("S", 0..h)]);
            let mut s4 = Gen::new("sigma4", 1);
            let mut t = Gen::new("tau", -1);
            uv_rows(&mut s4, &mut t, n);
            s4.set(v("R", 0), 0, times(vec![x(v("R", 0)), pw(v("R", 1), q), pw(v("u", 1), q)]))
                .set(v("S", 0), 0, times(vec![x(v("S", 0)), x(v("S", 1)), x(v("R", 1)), x(v("u", 1)), x(v("v", 1))]))
                .chain(&idx("R", 1..h), times(vec![x(v("u", 0)), inv(weighted_from_one("R", n))]))
                .chain(
                    &idx("S", 1..h),
                    times(vec![pw(v("u", 0), -1), pw(v("v", 0), q), x(v("R", 0)), inv(weighted("S", n))]),
                );
            t.set(v("R", 0), 0, times(vec![pw(v("S", 0), q), pw(v("R", 0), -1)]));
            for i in 1..h {
                t.swap(v("R", i), v("S", i));
            }
            (vars, vec![s4, t])
        }
        (Case::Three, "6") => {
            let vars = cat(&[idx("u", 1..n), idx("w", 1..n), idx("R", 1..n), idx("T", 1..n)]);
            let mut s4 = Gen::new("sigma4", 1);
            let mut t = Gen::new("tau", -1);
            for pre in ["u", "w", "R", "T"] {
                s4.cycle(&idx(pre, 1..n));
            }
            tau_uw_rows(&mut t, "u", "w", n);
            tau_uw_rows(&mut t, "R", "T", n);
            (vars, vec![s4, t])
        }
        _ => return Err(unknown()),
    };
    let present: Vec<&str> = gens.iter().map(|g| g.name.as_str()).collect();
    let relations = case.relations(p, &present);
    build(p, vars, gens, relations)
}

/// `prefix_0^p prefix_1^{p−1} ⋯ prefix_{p−2}^2`.
fn weighted(prefix: &str, n: usize) -> Mono {
    prod(prefix, 0..n - 1, |k| (n - k) as i64)
}

/// Like [`weighted`] but with `prefix_0` to the first power.
fn weighted_from_one(prefix: &str, n: usize) -> Mono {
    prod(prefix, 0..n - 1, |k| if k == 0 { 1 } else { (n - k) as i64 })
}

/// Rows on `u_0, …, u_{p−2}, v_0, …, v_{p−2}` shared by several tables.
fn uv_rows(s: &mut Gen, t: &mut Gen, n: usize) {
    let h = n - 1;
    let q = n as i64;
    s.set(v("u", 0), 0, times(vec![x(v("u", 0)), pw(v("u", 1), q)]))
        .set(v("v", 0), 0, times(vec![x(v("v", 0)), x(v("v", 1)), x(v("u", 1))]))
        .chain(&idx("u", 1..h), inv(weighted_from_one("u", n)))
        .chain(&idx("v", 1..h), times(vec![x(v("u", 0)), inv(weighted("v", n))]));
    t.set(v("u", 0), 0, times(vec![pw(v("u", 0), -1), pw(v("v", 0), q)]));
    for i in 1..h {
        t.swap(v("u", i), v("v", i));
    }
}

/// `τ: u_i ↦ w_i (u_i w_{i−1})^{-1}`, `w_i ↦ w_i`, with `w_0 = (w_1 ⋯ w_{p−1})^{-1}`.
fn tau_uw_rows(t: &mut Gen, u: &str, w: &str, n: usize) {
    for i in 1..n {
        let prev = if i == 1 { prod(w, 1..n, |_| 1) } else { pw(v(w, i - 1), -1) };
        t.set(v(u, i), 0, times(vec![x(v(w, i)), pw(v(u, i), -1), prev]));
    }
}
