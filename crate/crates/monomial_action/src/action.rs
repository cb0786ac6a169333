use std::fmt;

use exact_linalg::{is_unimodular, unimodular_inverse, Int, IntMatrix};
use group_core::{parse_word, Word};

use crate::error::MonomialError;

/// One semilinear monomial map: `x_j ↦ ζ^{c_j} ∏_i x_i^{A(i,j)}` and `ζ ↦ ζ^t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialMap {
    pub a: IntMatrix,
    /// Reduced into `0..e`.
    pub c: Vec<i64>,
    /// Reduced into `0..e`.
    pub t: i64,
}

pub(crate) fn reduce(x: i64, e: i64) -> i64 {
    x.rem_euclid(e)
}

pub(crate) fn reduce_int(x: &Int, e: i64) -> i64 {
    x.mod_floor(&Int::from(e)).to_i64().expect("residue fits")
}

impl MonomialMap {
    pub fn identity(n: usize, e: i64) -> MonomialMap {
        MonomialMap { a: IntMatrix::identity(n), c: vec![0; n], t: reduce(1, e) }
    }

    /// `self ∘ other`, i.e. `other` is applied first.
    pub fn compose(&self, other: &MonomialMap, e: i64) -> MonomialMap {
        let n = self.c.len();
        let a = self.a.mul(&other.a);
        let c = (0..n)
            .map(|j| {
                let mut s = Int::from(self.t) * Int::from(other.c[j]);
                for i in 0..n {
                    let x = &other.a[(i, j)];
                    if !x.is_zero() {
                        s += &(x * &Int::from(self.c[i]));
                    }
                }
                reduce_int(&s, e)
            })
            .collect();
        MonomialMap { a, c, t: reduce(self.t * other.t, e) }
    }

    pub fn inverse(&self, e: i64) -> MonomialMap {
        let ainv = unimodular_inverse(&self.a).expect("validated unimodular");
        let tinv = (1..=e).find(|&s| reduce(s * self.t, e) == reduce(1, e)).expect("validated unit");
        // c' = −t⁻¹ A⁻ᵀ c, from compose(self, inverse) = identity.
        let ct: Vec<Int> = self.c.iter().map(|&x| Int::from(x)).collect();
        let w = ainv.transpose().mul_vec(&ct);
        let c = w.iter().map(|x| reduce_int(&(-(x * &Int::from(tinv))), e)).collect();
        MonomialMap { a: ainv, c, t: tinv }
    }

    pub fn is_identity(&self, e: i64) -> bool {
        self.a.is_identity() && self.c.iter().all(|&x| x == 0) && self.t == reduce(1, e)
    }

    fn pow(&self, k: i64, e: i64) -> MonomialMap {
        let base = if k < 0 { self.inverse(e) } else { self.clone() };
        let mut out = MonomialMap::identity(self.c.len(), e);
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base, e);
        }
        out
    }
}

/// A group acting on `K(ζ)(x_1, …, x_n)` by monomial maps, with `ζ` of order `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialAction {
    e: i64,
    vars: Vec<String>,
    names: Vec<String>,
    gens: Vec<MonomialMap>,
    relations: Vec<(Word, Word)>,
}

impl MonomialAction {
    pub fn new(
        e: i64,
        vars: Vec<String>,
        gens: Vec<(String, MonomialMap)>,
        relations: &[(String, String)],
    ) -> Result<MonomialAction, MonomialError> {
        if e < 1 {
            return Err(MonomialError::BadRootOrder);
        }
        check_unique(&vars)?;
        let n = vars.len();
        let mut names = Vec::new();
        let mut maps = Vec::new();
        for (name, mut m) in gens {
            if m.a.rows() != n || m.a.cols() != n || m.c.len() != n {
                return Err(MonomialError::BadShape {
                    name,
                    what: format!("expected {n} variables, got A {}x{} and c of length {}", m.a.rows(), m.a.cols(), m.c.len()),
                });
            }
            if !is_unimodular(&m.a) {
                return Err(MonomialError::NotUnimodular(name));
            }
            let t = m.t;
            m.t = reduce(t, e);
            if gcd(m.t, e) != 1 {
                return Err(MonomialError::BadTwist { name, t, e });
            }
            m.c.iter_mut().for_each(|x| *x = reduce(*x, e));
            names.push(name);
            maps.push(m);
        }
        check_unique(&names)?;
        let mut parsed = Vec::new();
        for (l, r) in relations {
            parsed.push((parse_word(l, &names)?, parse_word(r, &names)?));
        }
        Ok(MonomialAction { e, vars, names, gens: maps, relations: parsed })
    }

    pub fn root_order(&self) -> i64 {
        self.e
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn generators(&self) -> &[MonomialMap] {
        &self.gens
    }

    pub fn generator(&self, name: &str) -> Option<&MonomialMap> {
        self.names.iter().position(|n| n == name).map(|i| &self.gens[i])
    }

    pub fn relations(&self) -> &[(Word, Word)] {
        &self.relations
    }

    pub fn with_relations(&self, relations: &[(String, String)]) -> Result<MonomialAction, MonomialError> {
        let mut parsed = Vec::new();
        for (l, r) in relations {
            parsed.push((parse_word(l, &self.names)?, parse_word(r, &self.names)?));
        }
        Ok(MonomialAction { relations: parsed, ..self.clone() })
    }

    pub fn parse_word(&self, s: &str) -> Result<Word, MonomialError> {
        Ok(parse_word(s, &self.names)?)
    }

    /// Purely monomial: every coefficient exponent is zero.
    pub fn is_purely_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.c.iter().all(|&x| x == 0))
    }

    /// The map of a word; the rightmost letter acts first.
    pub fn compose(&self, word: &Word) -> MonomialMap {
        let mut out = MonomialMap::identity(self.nvars(), self.e);
        for &(g, k) in &word.0 {
            out = out.compose(&self.gens[g].pow(k, self.e), self.e);
        }
        out
    }

    pub fn compose_str(&self, word: &str) -> Result<MonomialMap, MonomialError> {
        Ok(self.compose(&self.parse_word(word)?))
    }

    pub(crate) fn from_parts(
        e: i64,
        vars: Vec<String>,
        names: Vec<String>,
        gens: Vec<MonomialMap>,
        relations: Vec<(Word, Word)>,
    ) -> MonomialAction {
        MonomialAction { e, vars, names, gens, relations }
    }

    /// Renders `x ↦ ζ^c·∏ y^k` for one generator and variable.
    pub fn describe(&self, gen: usize, var: usize) -> String {
        let m = &self.gens[gen];
        render_image(&self.vars, &m.a.column(var), m.c[var])
    }
}

pub(crate) fn render_image(vars: &[String], col: &[Int], c: i64) -> String {
    let mut parts = Vec::new();
    if c != 0 {
        parts.push(if c == 1 { "z".to_string() } else { format!("z^{c}") });
    }
    for (v, k) in vars.iter().zip(col) {
        if k.is_zero() {
            continue;
        }
        parts.push(if k.is_one() { v.clone() } else { format!("{v}^{k}") });
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn check_unique(names: &[String]) -> Result<(), MonomialError> {
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return Err(MonomialError::Duplicate(n.clone()));
        }
    }
    Ok(())
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// First relation whose two sides differ, with the first variable where they do.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFailure {
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
    pub variable: Option<String>,
    pub lhs_image: String,
    pub rhs_image: String,
}

impl fmt::Display for RelationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "relation {} ({} = {}) fails", self.index, self.lhs, self.rhs)?;
        match &self.variable {
            Some(v) => write!(f, " at {v}: {} vs {}", self.lhs_image, self.rhs_image),
            None => write!(f, ": twists {} vs {}", self.lhs_image, self.rhs_image),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    Holds,
    Fails(RelationFailure),
}

impl Verification {
    pub fn holds(&self) -> bool {
        matches!(self, Verification::Holds)
    }
}

/// Checks that both sides of every relation compose to the same map.
pub fn verify_action(action: &MonomialAction, relations: &[(Word, Word)]) -> Verification {
    for (index, (l, r)) in relations.iter().enumerate() {
        let (ml, mr) = (action.compose(l), action.compose(r));
        if ml == mr {
            continue;
        }
        let variable = (0..action.nvars()).find(|&j| ml.a.column(j) != mr.a.column(j) || ml.c[j] != mr.c[j]);
        let (lhs_image, rhs_image) = match variable {
            Some(j) => (render_image(&action.vars, &ml.a.column(j), ml.c[j]), render_image(&action.vars, &mr.a.column(j), mr.c[j])),
            None => (ml.t.to_string(), mr.t.to_string()),
        };
        return Verification::Fails(RelationFailure {
            index,
            lhs: l.render(&action.names),
            rhs: r.render(&action.names),
            variable: variable.map(|j| action.vars[j].clone()),
            lhs_image,
            rhs_image,
        });
    }
    Verification::Holds
}

impl MonomialAction {
    /// [`verify_action`] against the relations stored with the action.
    pub fn verify(&self) -> Verification {
        verify_action(self, &self.relations)
    }
}
