//! Graphviz export.

use std::fmt::Write;

use epg_core::{EdgeColoring, SimpleGraph};

const PALETTE: [&str; 12] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf", "#999999",
    "#66c2a5", "#fc8d62", "#8da0cb", "#e5c494",
];

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DotError {
    #[error("coloring has {colors} entries but the graph has {edges} edges")]
    ColoringSizeMismatch { colors: usize, edges: usize },
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT with one node per vertex; colors past the palette wrap
/// around and stay distinguishable through the edge label.
pub fn export_dot(
    g: &SimpleGraph,
    labels: &[String],
    coloring: Option<&EdgeColoring>,
) -> Result<String, DotError> {
    if let Some(c) = coloring {
        if c.len() != g.edge_count() {
            return Err(DotError::ColoringSizeMismatch { colors: c.len(), edges: g.edge_count() });
        }
    }
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.vertex_count() {
        let label = labels.get(v).map_or_else(|| v.to_string(), Clone::clone);
        writeln!(out, "  {v} [label={}];", quote(&label)).unwrap();
    }
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        match coloring {
            Some(c) => {
                let color = c.color(id);
                let hex = PALETTE[(color - 1) % PALETTE.len()];
                writeln!(out, "  {u} -- {v} [color=\"{hex}\", label=\"{color}\"];").unwrap();
            }
            None => writeln!(out, "  {u} -- {v};").unwrap(),
        }
    }
    out.push_str("}\n");
    Ok(out)
}
