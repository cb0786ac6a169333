//! JSON documents for the tables and lattices, as shipped under `fixtures/`.

use std::path::{Path, PathBuf};

use group_core::GroupDoc;
use lattice_core::{GroupRef, Lattice, LatticeDoc};
use monomial_action::{MonomialAction, MonomialDoc};

use crate::catalog::{catalog, Params};
use crate::error::PaperError;
use crate::tables::{printed_table, Case};

pub const FIXTURE_PRIMES: [i64; 2] = [3, 5];

pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn table_fixture_name(case: Case, step: &str, p: i64) -> String {
    format!("case{}_step{step}_p{p}.json", case.number())
}

/// Group document with the same generators (as permutations of the
/// elements) so that loading rebuilds an equal group.
pub fn lattice_doc(l: &Lattice) -> LatticeDoc {
    let g = l.group();
    let gens = g
        .generators()
        .iter()
        .zip(g.generator_names())
        .map(|(&s, n)| (n.clone(), (0..g.order()).map(|x| g.mul(s, x)).collect()))
        .collect();
    LatticeDoc::with_group(l, GroupRef::Doc(GroupDoc::new(gens)))
}

/// `(file name, catalog name, params)` for the shipped lattice documents.
pub fn lattice_fixtures() -> Vec<(String, &'static str, Params)> {
    let mut out = Vec::new();
    for name in ["sign", "trivial", "regular"] {
        out.push((format!("{name}.json"), name, Params::new()));
    }
    for p in FIXTURE_PRIMES {
        let params = Params::from([("p".to_string(), p.to_string())]);
        for name in ["case1_M", "lambda", "case3_M"] {
            out.push((format!("{name}_p{p}.json"), name, params.clone()));
        }
    }
    out
}

/// Every shipped document, rendered.
pub fn render_all() -> Result<Vec<(String, String)>, PaperError> {
    let mut out = Vec::new();
    for case in Case::ALL {
        for step in case.printed_steps() {
            for p in FIXTURE_PRIMES {
                let doc = MonomialDoc::from_action(&printed_table(case, step, p)?);
                out.push((table_fixture_name(case, step, p), to_json(&doc)));
            }
        }
    }
    for (file, name, params) in lattice_fixtures() {
        out.push((file, to_json(&lattice_doc(&catalog(name, &params)?))));
    }
    Ok(out)
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn write_all(dir: &Path) -> std::io::Result<usize> {
    std::fs::create_dir_all(dir)?;
    let docs = render_all().map_err(|e| std::io::Error::other(e.to_string()))?;
    for (file, body) in &docs {
        std::fs::write(dir.join(file), body)?;
    }
    Ok(docs.len())
}

fn read(path: &Path) -> Result<String, PaperError> {
    std::fs::read_to_string(path).map_err(|e| PaperError::UnknownFixture(format!("{}: {e}", path.display())))
}

pub fn load_table(path: &Path) -> Result<MonomialAction, PaperError> {
    let doc: MonomialDoc =
        serde_json::from_str(&read(path)?).map_err(|e| PaperError::UnknownFixture(format!("{}: {e}", path.display())))?;
    Ok(doc.build()?)
}

pub fn load_lattice(path: &Path) -> Result<Lattice, PaperError> {
    let doc: LatticeDoc =
        serde_json::from_str(&read(path)?).map_err(|e| PaperError::UnknownFixture(format!("{}: {e}", path.display())))?;
    Ok(doc.build()?)
}
