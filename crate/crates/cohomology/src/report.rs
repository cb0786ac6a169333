use std::fmt;
use std::sync::Arc;

use exact_linalg::FinAbGroup;
use group_core::{subgroup_reps, FiniteGroup, Subgroup};
use lattice_core::Lattice;
use serde::{Deserialize, Serialize};

use crate::error::CohomologyError;
use crate::tate::{h1_cocycles, tate_hat0, tate_hat_minus1};

/// Cohomology of one subgroup class representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupEntry {
    /// `"<order>.<index>"`, the index counting classes of that order from 1.
    pub key: String,
    pub order: usize,
    pub elements: Vec<usize>,
    pub generators: Vec<String>,
    pub is_cyclic: bool,
    pub hat_minus1: FinAbGroup,
    pub hat0: FinAbGroup,
    pub h1: FinAbGroup,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub group_order: usize,
    pub rank: usize,
    pub entries: Vec<SubgroupEntry>,
    pub flabby: bool,
    pub coflabby: bool,
}

/// Subgroup representatives with their report keys.
pub fn keyed_reps(g: &Arc<FiniteGroup>) -> Result<Vec<(String, Subgroup)>, CohomologyError> {
    let reps = subgroup_reps(g)?;
    let mut out = Vec::with_capacity(reps.len());
    let mut last = (0, 0);
    for h in reps {
        let idx = if h.order() == last.0 { last.1 + 1 } else { 1 };
        last = (h.order(), idx);
        out.push((format!("{}.{}", h.order(), idx), h));
    }
    Ok(out)
}

fn word_names(h: &Subgroup) -> Vec<String> {
    let g = h.parent();
    h.generators().iter().map(|&x| element_name(g, x)).collect()
}

/// A word for an element along the spanning tree, e.g. `sigma^2*tau`.
pub fn element_name(g: &FiniteGroup, x: usize) -> String {
    let mut steps = Vec::new();
    let mut cur = x;
    while let Some((y, k)) = g.spanning_step(cur) {
        steps.push(k);
        cur = y;
    }
    if steps.is_empty() {
        return "1".into();
    }
    steps.reverse();
    let names = g.generator_names();
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < steps.len() {
        let mut j = i;
        while j < steps.len() && steps[j] == steps[i] {
            j += 1;
        }
        let e = j - i;
        parts.push(if e == 1 { names[steps[i]].clone() } else { format!("{}^{}", names[steps[i]], e) });
        i = j;
    }
    parts.join("*")
}

fn entry(key: String, h: &Subgroup, m: &Lattice) -> Result<SubgroupEntry, CohomologyError> {
    Ok(SubgroupEntry {
        key,
        order: h.order(),
        elements: h.elements().to_vec(),
        generators: word_names(h),
        is_cyclic: h.is_cyclic(),
        hat_minus1: tate_hat_minus1(h, m),
        hat0: tate_hat0(h, m),
        h1: h1_cocycles(h, m)?,
    })
}

/// All three groups on every subgroup class representative.
pub fn classify(m: &Lattice) -> Result<CohomologyReport, CohomologyError> {
    classify_jobs(m, 1)
}

/// As [`classify`], spreading the subgroup entries over `jobs` threads.
/// The report does not depend on `jobs`.
pub fn classify_jobs(m: &Lattice, jobs: usize) -> Result<CohomologyReport, CohomologyError> {
    let reps = keyed_reps(m.group())?;
    let jobs = jobs.max(1).min(reps.len().max(1));
    let entries: Vec<Result<SubgroupEntry, CohomologyError>> = if jobs == 1 {
        reps.into_iter().map(|(k, h)| entry(k, &h, m)).collect()
    } else {
        let chunk = reps.len().div_ceil(jobs);
        std::thread::scope(|s| {
            let handles: Vec<_> = reps
                .chunks(chunk)
                .map(|part| s.spawn(move || part.iter().map(|(k, h)| entry(k.clone(), h, m)).collect::<Vec<_>>()))
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
        })
    };
    let entries = entries.into_iter().collect::<Result<Vec<_>, _>>()?;
    let flabby = entries.iter().all(|e| e.hat_minus1.is_trivial());
    let coflabby = entries.iter().all(|e| e.h1.is_trivial());
    Ok(CohomologyReport { group_order: m.group().order(), rank: m.rank(), entries, flabby, coflabby })
}

/// Flabbiness alone (only `Ĥ⁻¹` is computed), with the first failing subgroup.
pub fn flabby_witness(m: &Lattice) -> Result<Option<(String, FinAbGroup)>, CohomologyError> {
    for (key, h) in keyed_reps(m.group())? {
        let g = tate_hat_minus1(&h, m);
        if !g.is_trivial() {
            return Ok(Some((key, g)));
        }
    }
    Ok(None)
}

pub fn is_flabby(m: &Lattice) -> Result<bool, CohomologyError> {
    Ok(flabby_witness(m)?.is_none())
}

pub fn is_coflabby(m: &Lattice) -> Result<bool, CohomologyError> {
    for (_, h) in keyed_reps(m.group())? {
        if !h1_cocycles(&h, m)?.is_trivial() {
            return Ok(false);
        }
    }
    Ok(true)
}

impl fmt::Display for CohomologyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group order {}, lattice rank {}", self.group_order, self.rank)?;
        let rows: Vec<[String; 5]> = self
            .entries
            .iter()
            .map(|e| {
                let gens = if e.generators.is_empty() { "1".to_string() } else { e.generators.join(", ") };
                [e.key.clone(), format!("<{gens}>"), e.hat_minus1.to_string(), e.hat0.to_string(), e.h1.to_string()]
            })
            .collect();
        let header = ["subgroup".to_string(), "generators".into(), "H^-1".into(), "H^0".into(), "H^1".into()];
        let mut widths = header.iter().map(|h| h.chars().count()).collect::<Vec<_>>();
        for r in &rows {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: &[String]| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        writeln!(f, "{}", line(&header))?;
        for r in &rows {
            writeln!(f, "{}", line(r))?;
        }
        writeln!(f, "flabby: {}", if self.flabby { "yes" } else { "no" })?;
        write!(f, "coflabby: {}", if self.coflabby { "yes" } else { "no" })
    }
}
