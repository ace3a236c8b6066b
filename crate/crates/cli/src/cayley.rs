//! Plain-text Cayley tables.
//!
//! ```text
//! 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! labels: e a a^2
//! ```
//!
//! Row `a` lists `a * b` for every `b`. The identity may sit at any index;
//! it is moved to index 0 on load.

use std::fs;
use std::path::Path;

use epg_core::{FiniteGroup, GroupError};

use crate::Error;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CayleyError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}

fn syntax(line: usize, message: impl Into<String>) -> CayleyError {
    CayleyError::Syntax { line, message: message.into() }
}

pub fn parse_cayley(text: &str) -> Result<FiniteGroup, CayleyError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (first, header) = lines.next().ok_or_else(|| syntax(1, "empty file"))?;
    let n: usize = header.parse().map_err(|_| syntax(first, format!("expected the order, found '{header}'")))?;
    if n == 0 {
        return Err(syntax(first, "order must be positive"));
    }
    let mut rows = Vec::with_capacity(n);
    let mut labels = None;
    for (line, content) in lines {
        if let Some(rest) = content.strip_prefix("labels:") {
            if rows.len() != n {
                return Err(syntax(line, format!("labels before all {n} rows")));
            }
            let l: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            if l.len() != n {
                return Err(syntax(line, format!("expected {n} labels, found {}", l.len())));
            }
            labels = Some(l);
            continue;
        }
        if labels.is_some() {
            return Err(syntax(line, "content after the labels line"));
        }
        if rows.len() == n {
            return Err(syntax(line, format!("more than {n} rows")));
        }
        let row = content
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| syntax(line, format!("'{t}' is not an element index"))))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(syntax(line, format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(syntax(first, format!("expected {n} rows, found {}", rows.len())));
    }
    Ok(FiniteGroup::from_cayley_table(&rows, labels)?)
}

pub fn write_cayley(g: &FiniteGroup) -> String {
    let mut out = format!("{}\n", g.order());
    for row in g.to_rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out.push_str("labels: ");
    out.push_str(&g.labels().join(" "));
    out.push('\n');
    out
}

pub fn load_cayley(path: &Path) -> Result<FiniteGroup, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_cayley(&text).map_err(|source| Error::Cayley { path: path.to_path_buf(), source })
}
