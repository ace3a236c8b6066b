//! Rainbow connectivity: verification, lower bounds, constructive colorings
//! and the exact budgeted search for the rainbow connection number.

mod search;
mod strategy;
mod verify;

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::SimpleGraph;

pub use search::SearchStats;
pub use strategy::{
    build_coloring, hub_fallback_coloring, BRowReading, HypothesisNotMet, Strategy, StrategyKind,
};
pub use verify::{check_rainbow, is_rainbow_connected, path_colors, rainbow_path, FailingPair};

use search::{KColoringSearch, Outcome, MAX_SEARCH_COLORS};

/// Total assignment of colors `1..=k` to the edges of a graph, indexed by
/// edge id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    k: usize,
    colors: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColoringError {
    ColorOutOfRange { edge: usize, color: usize, k: usize },
    SizeMismatch { colors: usize, edges: usize },
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringError::ColorOutOfRange { edge, color, k } => {
                write!(f, "edge {edge} has color {color}, outside 1..={k}")
            }
            ColoringError::SizeMismatch { colors, edges } => {
                write!(f, "coloring has {colors} entries for {edges} edges")
            }
        }
    }
}

impl core::error::Error for ColoringError {}

impl EdgeColoring {
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self, ColoringError> {
        if let Some((edge, &color)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(ColoringError::ColorOutOfRange { edge, color, k });
        }
        Ok(EdgeColoring { k, colors })
    }

    /// Same as [`EdgeColoring::new`], also checking the length against `g`.
    pub fn for_graph(g: &SimpleGraph, k: usize, colors: Vec<usize>) -> Result<Self, ColoringError> {
        if colors.len() != g.edge_count() {
            return Err(ColoringError::SizeMismatch { colors: colors.len(), edges: g.edge_count() });
        }
        Self::new(k, colors)
    }

    pub fn monochrome(edges: usize) -> Self {
        EdgeColoring { k: 1, colors: vec![1; edges] }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, edge: usize) -> usize {
        self.colors[edge]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Number of distinct colors actually used.
    pub fn used_colors(&self) -> usize {
        let mut seen = vec![false; self.k + 1];
        self.colors.iter().filter(|&&c| !core::mem::replace(&mut seen[c], true)).count()
    }

    /// Relabels colors to `1..=used` in order of first appearance.
    pub fn compacted(&self) -> Self {
        let mut map = vec![0; self.k + 1];
        let mut next = 0;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if map[c] == 0 {
                    next += 1;
                    map[c] = next;
                }
                map[c]
            })
            .collect();
        EdgeColoring { k: next.max(1), colors }
    }

    /// The coloring restricted to the edges of `sub`, where `sub` is a
    /// subgraph of `g` on the same vertices.
    pub fn restricted(&self, g: &SimpleGraph, sub: &SimpleGraph) -> Self {
        let colors = sub
            .edges()
            .iter()
            .map(|&(u, v)| self.colors[g.edge_id(u, v).expect("sub must be a subgraph of g")])
            .collect();
        EdgeColoring { k: self.k, colors }
    }
}

/// Where a structural lower bound on `rc` comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BoundSource {
    Complete,
    Diameter,
    Bridges,
    /// Three members of the independence cyclic set meet only at the identity.
    IcsTriple,
    MaximalInvolutions,
}

impl BoundSource {
    pub fn name(self) -> &'static str {
        match self {
            BoundSource::Complete => "COMPLETE",
            BoundSource::Diameter => "DIAMETER",
            BoundSource::Bridges => "BRIDGES",
            BoundSource::IcsTriple => "ICS_TRIPLE",
            BoundSource::MaximalInvolutions => "MAXIMAL_INVOLUTIONS",
        }
    }
}

/// Group-level facts that also bound `rc` of the enhanced power graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructuralHint {
    pub icn: usize,
    pub invmax: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LowerBound {
    pub value: usize,
    pub source: BoundSource,
}

/// Largest of the complete / diameter / bridge bounds and, when a hint is
/// supplied, `3` for `icn >= 3` and `|InvMax|`. Ties keep the earlier source.
pub fn rc_lower_bound(g: &SimpleGraph, hint: Option<StructuralHint>) -> LowerBound {
    if g.is_complete() {
        return LowerBound { value: 1, source: BoundSource::Complete };
    }
    let metrics = g.metrics().expect("rc is only defined for connected graphs");
    let mut best = LowerBound { value: metrics.diameter, source: BoundSource::Diameter };
    let mut offer = |value: usize, source: BoundSource| {
        if value > best.value {
            best = LowerBound { value, source };
        }
    };
    offer(metrics.bridge_count, BoundSource::Bridges);
    if let Some(h) = hint {
        if h.icn >= 3 {
            offer(3, BoundSource::IcsTriple);
        }
        offer(h.invmax, BoundSource::MaximalInvolutions);
    }
    best
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Backtracking nodes allowed per color level.
    pub node_budget: u64,
    /// Levels `k > 2` are searched only when the graph has at most this many edges.
    pub exhaustive_edge_limit: usize,
    /// Search every level regardless of `exhaustive_edge_limit`.
    pub override_gate: bool,
}

pub const DEFAULT_RC_BUDGET: u64 = 50_000_000;
pub const DEFAULT_EXHAUSTIVE_EDGE_LIMIT: usize = 22;

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: DEFAULT_RC_BUDGET,
            exhaustive_edge_limit: DEFAULT_EXHAUSTIVE_EDGE_LIMIT,
            override_gate: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RcKind {
    Exact(usize),
    Interval { lb: usize, ub: usize },
}

/// Why a level was not searched to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StopReason {
    BudgetExceeded { k: usize },
    Gated { k: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateOrigin {
    Complete,
    SpanningTree,
    Search,
    /// A supplied candidate, by label.
    Candidate(String),
}

impl fmt::Display for CertificateOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateOrigin::Complete => f.write_str("COMPLETE"),
            CertificateOrigin::SpanningTree => f.write_str("SPANNING_TREE"),
            CertificateOrigin::Search => f.write_str("SEARCH"),
            CertificateOrigin::Candidate(label) => f.write_str(label),
        }
    }
}

/// Outcome of [`rc_exact`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RcResult {
    pub kind: RcKind,
    /// Structural bound the search started from.
    pub lower_bound: LowerBound,
    /// Levels proven impossible by exhaustive search.
    pub refuted: Vec<usize>,
    pub upper_bound_certificate: Option<EdgeColoring>,
    pub certificate_origin: Option<CertificateOrigin>,
    pub stop: Option<StopReason>,
    pub stats: SearchStats,
}

impl RcResult {
    pub fn exact(&self) -> Option<usize> {
        match self.kind {
            RcKind::Exact(v) => Some(v),
            RcKind::Interval { .. } => None,
        }
    }

    pub fn bounds(&self) -> (usize, usize) {
        match self.kind {
            RcKind::Exact(v) => (v, v),
            RcKind::Interval { lb, ub } => (lb, ub),
        }
    }
}

/// Distinct colors on a BFS tree from vertex 0, color 1 elsewhere.
pub fn spanning_tree_coloring(g: &SimpleGraph) -> EdgeColoring {
    let n = g.vertex_count();
    let mut colors = vec![1; g.edge_count()];
    let mut seen = vec![false; n];
    let mut queue = alloc::collections::VecDeque::from([0usize]);
    let mut next = 0;
    if n > 0 {
        seen[0] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &(w, id) in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                next += 1;
                colors[id] = next;
                queue.push_back(w);
            }
        }
    }
    EdgeColoring { k: next.max(1), colors }
}

/// Exact `rc(g)` when the search completes within `config`, else an interval.
pub fn rc_exact(g: &SimpleGraph, config: &SearchConfig) -> RcResult {
    rc_exact_with_candidates(g, config, &[])
}

/// As [`rc_exact`], also trying labelled candidate colorings as upper
/// bounds. Candidates that fail verification are ignored; a verified
/// candidate meeting the structural lower bound ends the search early.
pub fn rc_exact_with_candidates(
    g: &SimpleGraph,
    config: &SearchConfig,
    candidates: &[(String, EdgeColoring)],
) -> RcResult {
    let lower_bound = rc_lower_bound(g, None);
    let mut result = RcResult {
        kind: RcKind::Exact(1),
        lower_bound,
        refuted: Vec::new(),
        upper_bound_certificate: None,
        certificate_origin: None,
        stop: None,
        stats: SearchStats::default(),
    };
    if g.is_complete() {
        result.upper_bound_certificate = Some(EdgeColoring::monochrome(g.edge_count()));
        result.certificate_origin = Some(CertificateOrigin::Complete);
        return result;
    }

    let mut best = (spanning_tree_coloring(g), CertificateOrigin::SpanningTree);
    for (label, c) in candidates {
        if c.len() != g.edge_count() {
            continue;
        }
        let c = c.compacted();
        if c.k() < best.0.k() && is_rainbow_connected(g, &c) {
            best = (c, CertificateOrigin::Candidate(label.to_string()));
        }
    }

    let mut k = lower_bound.value;
    while k < best.0.k() {
        let gated = k > 2 && g.edge_count() > config.exhaustive_edge_limit && !config.override_gate;
        if gated || k > MAX_SEARCH_COLORS {
            result.stop = Some(StopReason::Gated { k });
            break;
        }
        let mut search = KColoringSearch::new(g, k, config.node_budget);
        let outcome = search.run();
        result.stats.nodes += search.stats.nodes;
        result.stats.colorings_tested += search.stats.colorings_tested;
        match outcome {
            Outcome::Found(colors) => {
                let c = EdgeColoring { k, colors };
                debug_assert!(is_rainbow_connected(g, &c));
                best = (c, CertificateOrigin::Search);
                break;
            }
            Outcome::Exhausted => {
                result.refuted.push(k);
                k += 1;
            }
            Outcome::BudgetExceeded => {
                result.stop = Some(StopReason::BudgetExceeded { k });
                break;
            }
        }
    }
    let ub = best.0.k();
    result.kind = if k >= ub || result.stop.is_none() {
        RcKind::Exact(ub)
    } else {
        RcKind::Interval { lb: k, ub }
    };
    result.upper_bound_certificate = Some(best.0);
    result.certificate_origin = Some(best.1);
    result
}
