//! Catalog files: one group spec per line, `#` starts a comment.
//!
//! `file(..)` specs are resolved relative to the catalog's directory. The
//! built-in catalog carries its Cayley tables inline.

use std::fs;
use std::path::{Path, PathBuf};

use epg_core::{FiniteGroup, GroupError, GroupSpec};

use crate::cayley::{load_cayley, parse_cayley};
use crate::Error;

const DEFAULT_CATALOG: &str = include_str!("../catalog/default.txt");
const BUILTIN_TABLES: &[(&str, &str)] = &[("a4.cayley", include_str!("../catalog/a4.cayley"))];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    /// 1-based line number in the catalog.
    pub line: usize,
    pub spec: GroupSpec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogWarning {
    pub line: usize,
    pub text: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tables {
    Dir(PathBuf),
    Builtin,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    pub warnings: Vec<CatalogWarning>,
    tables: Tables,
}

pub fn parse_catalog(text: &str) -> (Vec<CatalogEntry>, Vec<CatalogWarning>) {
    let mut entries = Vec::new();
    let mut warnings = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        match content.parse::<GroupSpec>() {
            Ok(spec) => entries.push(CatalogEntry { line: i + 1, spec }),
            Err(e) => warnings.push(CatalogWarning {
                line: i + 1,
                text: content.to_string(),
                message: e.to_string(),
            }),
        }
    }
    (entries, warnings)
}

impl Catalog {
    pub fn builtin() -> Self {
        let (entries, warnings) = parse_catalog(DEFAULT_CATALOG);
        Catalog { entries, warnings, tables: Tables::Builtin }
    }

    pub fn load(path: &Path) -> Result<Self, Error> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Ok(Self::from_text(&text, dir))
    }

    /// A catalog whose `file(..)` specs are looked up under `dir`.
    pub fn from_text(text: &str, dir: PathBuf) -> Self {
        let (entries, warnings) = parse_catalog(text);
        Catalog { entries, warnings, tables: Tables::Dir(dir) }
    }

    pub fn build(&self, spec: &GroupSpec, cap: usize) -> Result<FiniteGroup, Error> {
        match &self.tables {
            Tables::Dir(dir) => build_group(spec, dir, cap),
            Tables::Builtin => {
                let mut load = |name: &str| {
                    let text = BUILTIN_TABLES
                        .iter()
                        .find(|(n, _)| *n == name)
                        .map(|(_, t)| *t)
                        .ok_or_else(|| GroupError::ExternalTable(format!("{name} is not a built-in table")))?;
                    parse_cayley(text).map_err(|e| GroupError::ExternalTable(format!("{name}: {e}")))
                };
                Ok(FiniteGroup::construct_with(spec, cap, &mut load)?)
            }
        }
    }
}

/// Builds `spec`, reading `file(..)` leaves relative to `dir`.
pub fn build_group(spec: &GroupSpec, dir: &Path, cap: usize) -> Result<FiniteGroup, Error> {
    let mut failure = None;
    let mut load = |name: &str| {
        load_cayley(&dir.join(name)).map_err(|e| {
            let msg = e.to_string();
            failure = Some(e);
            GroupError::ExternalTable(msg)
        })
    };
    match FiniteGroup::construct_with(spec, cap, &mut load) {
        Ok(g) => Ok(g),
        Err(GroupError::ExternalTable(_)) if failure.is_some() => Err(failure.unwrap()),
        Err(e) => Err(e.into()),
    }
}
