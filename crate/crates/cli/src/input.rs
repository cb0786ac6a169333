use std::fmt;
use std::path::Path;

use group_core::{FiniteGroup, GroupDoc};
use lattice_core::{Lattice, LatticeDoc};
use monomial_action::{MonomialAction, MonomialDoc, Verification};
use paper_models::{catalog, Params};
use serde::de::DeserializeOwned;
use serde_json::Value;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DocKind {
    Group,
    Lattice,
    Monomial,
}

impl fmt::Display for DocKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DocKind::Group => "group",
            DocKind::Lattice => "lattice",
            DocKind::Monomial => "monomial action",
        })
    }
}

#[derive(Clone, Debug)]
pub enum Document {
    Group(FiniteGroup),
    Lattice(Lattice),
    /// The action together with the check of its stored relations.
    Monomial(MonomialAction, Verification),
}

impl Document {
    pub fn kind(&self) -> DocKind {
        match self {
            Document::Group(_) => DocKind::Group,
            Document::Lattice(_) => DocKind::Lattice,
            Document::Monomial(..) => DocKind::Monomial,
        }
    }
}

fn detect(path: &Path, text: &str) -> Result<DocKind, CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::parse(path, &e))?;
    let obj = value.as_object().ok_or_else(|| CliError::validation(path, "top level is not an object"))?;
    if obj.contains_key("vars") {
        Ok(DocKind::Monomial)
    } else if obj.contains_key("action") {
        Ok(DocKind::Lattice)
    } else if obj.contains_key("generators") {
        Ok(DocKind::Group)
    } else {
        Err(CliError::validation(path, "not a group, lattice or monomial action document"))
    }
}

fn parse<T: DeserializeOwned>(path: &Path, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::parse(path, &e))
}

/// Reads and validates a document of any of the three kinds.
pub fn load_document(path: &Path) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), source: e })?;
    match detect(path, &text)? {
        DocKind::Group => {
            let d: GroupDoc = parse(path, &text)?;
            Ok(Document::Group(d.build().map_err(|e| CliError::validation(path, e))?))
        }
        DocKind::Lattice => {
            let d: LatticeDoc = parse(path, &text)?;
            Ok(Document::Lattice(d.build().map_err(|e| CliError::validation(path, e))?))
        }
        DocKind::Monomial => {
            let d: MonomialDoc = parse(path, &text)?;
            let action = d.build().map_err(|e| CliError::validation(path, e))?;
            let check = action.verify();
            Ok(Document::Monomial(action, check))
        }
    }
}

pub fn load_lattice(path: &Path) -> Result<Lattice, CliError> {
    match load_document(path)? {
        Document::Lattice(l) => Ok(l),
        other => Err(CliError::WrongKind { path: path.display().to_string(), expected: DocKind::Lattice, found: other.kind() }),
    }
}

pub fn load_action(path: &Path) -> Result<(MonomialAction, Verification), CliError> {
    match load_document(path)? {
        Document::Monomial(a, v) => Ok((a, v)),
        other => Err(CliError::WrongKind { path: path.display().to_string(), expected: DocKind::Monomial, found: other.kind() }),
    }
}

/// A lattice from a document or from the catalog.
pub fn lattice_from(path: Option<&Path>, name: Option<&str>, params: &[(String, String)]) -> Result<Lattice, CliError> {
    match (path, name) {
        (Some(p), None) => load_lattice(p),
        (None, Some(n)) => {
            let params: Params = params.iter().cloned().collect();
            Ok(catalog(n, &params)?)
        }
        _ => Err(CliError::Usage("give exactly one of --lattice and --catalog".into())),
    }
}

/// `"case3 step 1 table (p = 5)"` for shipped table files, from the file name.
pub fn fixture_label(path: &Path) -> Option<String> {
    let stem = path.file_stem()?.to_str()?;
    let mut parts = stem.split('_');
    let case = parts.next()?.strip_prefix("case")?;
    let step = parts.next()?.strip_prefix("step")?;
    let p = parts.next()?.strip_prefix('p')?;
    if parts.next().is_some() || case.parse::<u8>().is_err() || p.parse::<i64>().is_err() {
        return None;
    }
    Some(format!("case {case} step {step} table (p = {p})"))
}
