//! Constructive colorings of the enhanced power graph.
//!
//! Each strategy names edge classes `E_1, E_2, ...` in terms of the maximal
//! cyclic subgroups and colors class `E_i` with color `i`. When classes
//! overlap, the class painted first keeps the edge; edges in no class get
//! the strategy's default color.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::EdgeColoring;
use crate::awning::{verify_awning, AwningCertificate, Side};
use crate::cyclic::{pairs, CyclicDecomposition, WitnessMatrix};
use crate::graph::SimpleGraph;

/// How the `B_r` rows of an awning are colored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BRowReading {
    /// The row side of a pair always gets color 1, the column side color 2.
    Literal,
    /// The row side gets color 1 when `h[r][s]` is in `A_r` and color 2
    /// when it is in `B_r`; the column side gets the other color.
    Swapped,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// `m = 2`: each subgroup's clique in its own color.
    TwoMax,
    /// `m = 3`, `icn = 1`: two colors around a shared element of the two
    /// intersecting subgroups.
    StarIcn1,
    /// `m = 3`, `icn = 3`.
    StarIcn3,
    /// `icn >= 3` with no maximal involutions: generator spokes, other
    /// spokes and inner edges in three classes.
    Icn3Star,
    /// Every entry is a maximal involution: one color per subgroup.
    InvmaxEqMax,
    /// Pairwise distinct non-identity hubs `h[i][j]`.
    DistinctWitness(WitnessMatrix),
    /// Hubs and sides from an awning certificate.
    Awning { certificate: AwningCertificate, reading: BRowReading },
    /// `icn >= 3`, `|InvMax| = l >= 3`: involution spokes get colors
    /// `1..=l`, the other subgroups use the three-class scheme.
    InvmaxGe3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StrategyKind {
    TwoMax,
    StarIcn1,
    StarIcn3,
    Icn3Star,
    InvmaxEqMax,
    DistinctWitness,
    Awning,
    InvmaxGe3,
}

impl StrategyKind {
    pub const ALL: [StrategyKind; 8] = [
        StrategyKind::TwoMax,
        StrategyKind::StarIcn1,
        StrategyKind::StarIcn3,
        StrategyKind::Icn3Star,
        StrategyKind::InvmaxEqMax,
        StrategyKind::DistinctWitness,
        StrategyKind::Awning,
        StrategyKind::InvmaxGe3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StrategyKind::TwoMax => "TWO_MAX",
            StrategyKind::StarIcn1 => "STAR_ICN1",
            StrategyKind::StarIcn3 => "STAR_ICN3",
            StrategyKind::Icn3Star => "ICN3_STAR",
            StrategyKind::InvmaxEqMax => "INVMAX_EQ_MAX",
            StrategyKind::DistinctWitness => "DISTINCT_WITNESS",
            StrategyKind::Awning => "AWNING",
            StrategyKind::InvmaxGe3 => "INVMAX_GE3",
        }
    }
}

impl Strategy {
    pub fn kind(&self) -> StrategyKind {
        match self {
            Strategy::TwoMax => StrategyKind::TwoMax,
            Strategy::StarIcn1 => StrategyKind::StarIcn1,
            Strategy::StarIcn3 => StrategyKind::StarIcn3,
            Strategy::Icn3Star => StrategyKind::Icn3Star,
            Strategy::InvmaxEqMax => StrategyKind::InvmaxEqMax,
            Strategy::DistinctWitness(_) => StrategyKind::DistinctWitness,
            Strategy::Awning { .. } => StrategyKind::Awning,
            Strategy::InvmaxGe3 => StrategyKind::InvmaxGe3,
        }
    }

    /// Label used for certificates, e.g. `AWNING[swapped]`.
    pub fn label(&self) -> String {
        match self {
            Strategy::Awning { reading: BRowReading::Literal, .. } => "AWNING[literal]".into(),
            Strategy::Awning { reading: BRowReading::Swapped, .. } => "AWNING[swapped]".into(),
            other => other.kind().name().into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisNotMet {
    pub strategy: StrategyKind,
    pub reason: String,
}

impl fmt::Display for HypothesisNotMet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} does not apply: {}", self.strategy.name(), self.reason)
    }
}

impl core::error::Error for HypothesisNotMet {}

struct Painter<'g> {
    g: &'g SimpleGraph,
    colors: Vec<usize>,
}

impl<'g> Painter<'g> {
    fn new(g: &'g SimpleGraph) -> Self {
        Painter { g, colors: vec![0; g.edge_count()] }
    }

    fn paint(&mut self, u: usize, v: usize, color: usize) {
        if let Some(id) = self.g.edge_id(u, v) {
            if self.colors[id] == 0 {
                self.colors[id] = color;
            }
        }
    }

    /// Every edge with both ends in `members`.
    fn clique(&mut self, members: &[usize], color: usize, skip_identity: bool) {
        for (a, &u) in members.iter().enumerate() {
            for &v in &members[a + 1..] {
                if skip_identity && (u == 0 || v == 0) {
                    continue;
                }
                self.paint(u, v, color);
            }
        }
    }

    fn finish(self, default: usize, k: usize) -> EdgeColoring {
        let colors = self.colors.into_iter().map(|c| if c == 0 { default } else { c }).collect();
        EdgeColoring::new(k, colors).expect("strategy colors stay within 1..=k")
    }
}

fn members(d: &CyclicDecomposition, i: usize) -> Vec<usize> {
    d.members(i).to_vec()
}

/// Generator spokes in class 1, remaining spokes in class 2, inner edges in
/// class 3, over the given entries.
fn three_class(p: &mut Painter<'_>, d: &CyclicDecomposition, entries: &[usize]) {
    for &i in entries {
        p.paint(d.generator(i), 0, 1);
    }
    for &i in entries {
        for x in d.members(i).iter().filter(|&x| x != 0 && x != d.generator(i)) {
            p.paint(0, x, 2);
        }
    }
    for &i in entries {
        p.clique(&members(d, i), 3, true);
    }
}

/// Spokes `{a, h}` for `a` in `<x_r> \ <x_s>` and `{b, h}` for `b` in `<x_s> \ <x_r>`.
fn hub(p: &mut Painter<'_>, d: &CyclicDecomposition, r: usize, s: usize, h: usize, row: usize, col: usize) {
    for a in d.members(r).iter().filter(|&a| !d.members(s).contains(a)) {
        p.paint(a, h, row);
    }
    for b in d.members(s).iter().filter(|&b| !d.members(r).contains(b)) {
        p.paint(b, h, col);
    }
}

/// Builds the strategy's coloring of `g` (the enhanced power graph of the
/// group `d` was computed from, or a spanning subgraph of it, in which case
/// the coloring is the restriction).
pub fn build_coloring(
    strategy: &Strategy,
    d: &CyclicDecomposition,
    g: &SimpleGraph,
) -> Result<EdgeColoring, HypothesisNotMet> {
    let kind = strategy.kind();
    let fail = |reason: String| HypothesisNotMet { strategy: kind, reason };
    let m = d.m();
    let ics = d.ics_report();
    let (icn, invmax) = (ics.icn, ics.invmax_indices.len());
    let mut p = Painter::new(g);

    match strategy {
        Strategy::TwoMax => {
            if m != 2 {
                return Err(fail(format!("needs m = 2, got m = {m}")));
            }
            p.clique(&members(d, 0), 1, false);
            p.clique(&members(d, 1), 2, false);
            Ok(p.finish(1, 2))
        }
        Strategy::StarIcn1 => {
            if m != 3 || icn != 1 {
                return Err(fail(format!("needs m = 3 and icn = 1, got m = {m}, icn = {icn}")));
            }
            let lone = ics.ics_indices[0];
            let mut rest = (0..3).filter(|&i| i != lone);
            let (x2, x3) = (rest.next().unwrap(), rest.next().unwrap());
            let (m1, m2, m3) = (members(d, lone), members(d, x2), members(d, x3));
            p.clique(&m1, 1, false);
            p.clique(&m2, 1, true);
            for &x in m2.iter().chain(&m3) {
                p.paint(0, x, 2);
            }
            let shared: Vec<usize> = d.intersection(x2, x3).iter().filter(|&x| x != 0).collect();
            for a in m3.iter().filter(|&&a| !d.members(x2).contains(a)) {
                for &b in &shared {
                    p.paint(*a, b, 2);
                }
            }
            Ok(p.finish(1, 2))
        }
        Strategy::StarIcn3 => {
            if m != 3 || icn != 3 {
                return Err(fail(format!("needs m = 3 and icn = 3, got m = {m}, icn = {icn}")));
            }
            if invmax == m {
                for i in 0..3 {
                    p.clique(&members(d, i), i + 1, false);
                }
            } else if invmax == 0 {
                three_class(&mut p, d, &[0, 1, 2]);
            } else {
                return Err(fail(format!(
                    "icn = 3 colorings need InvMax empty or InvMax = Max, got |InvMax| = {invmax}"
                )));
            }
            Ok(p.finish(3, 3))
        }
        Strategy::Icn3Star => {
            if icn < 3 || invmax != 0 {
                return Err(fail(format!(
                    "needs icn >= 3 and no maximal involutions, got icn = {icn}, |InvMax| = {invmax}"
                )));
            }
            let all: Vec<usize> = (0..m).collect();
            three_class(&mut p, d, &all);
            Ok(p.finish(3, 3))
        }
        Strategy::InvmaxEqMax => {
            if invmax != m {
                return Err(fail(format!("needs InvMax = Max, got |InvMax| = {invmax}, m = {m}")));
            }
            for i in 0..m {
                p.clique(&members(d, i), i + 1, false);
            }
            Ok(p.finish(1, m))
        }
        Strategy::DistinctWitness(w) => {
            if m < 2 || w.m() != m {
                return Err(fail(format!("needs m >= 2 and a {m}-entry witness matrix")));
            }
            let mut seen = vec![false; d.order()];
            for (i, j, h) in w.entries() {
                if h == 0 || !d.intersection(i, j).contains(h) {
                    return Err(fail(format!("h[{i}][{j}] = {h} is not a non-identity common element")));
                }
                if core::mem::replace(&mut seen[h], true) {
                    return Err(fail(format!("h[{i}][{j}] = {h} repeats")));
                }
            }
            for (i, j, h) in w.entries() {
                hub(&mut p, d, i, j, h, 1, 2);
            }
            Ok(p.finish(1, 2))
        }
        Strategy::Awning { certificate, reading } => {
            if m < 2 {
                return Err(fail(format!("needs m >= 2, got m = {m}")));
            }
            if let Err(e) = verify_awning(d, certificate) {
                return Err(fail(format!("certificate rejected: {e}")));
            }
            let view = d.reordered(certificate.order());
            for (r, s) in pairs(m) {
                let row = match (reading, certificate.side(r, s)) {
                    (BRowReading::Swapped, Side::B) => 2,
                    _ => 1,
                };
                hub(&mut p, &view, r, s, certificate.witness(r, s), row, 3 - row);
            }
            Ok(p.finish(1, 2))
        }
        Strategy::InvmaxGe3 => {
            if icn < 3 || invmax < 3 {
                return Err(fail(format!(
                    "needs icn >= 3 and |InvMax| >= 3, got icn = {icn}, |InvMax| = {invmax}"
                )));
            }
            paint_involutions_then_three_class(&mut p, d, &ics.invmax_indices);
            Ok(p.finish(3, invmax))
        }
    }
}

fn paint_involutions_then_three_class(p: &mut Painter<'_>, d: &CyclicDecomposition, invmax: &[usize]) {
    for (c, &i) in invmax.iter().enumerate() {
        p.paint(0, d.generator(i), c + 1);
    }
    let rest: Vec<usize> = (0..d.m()).filter(|i| !invmax.contains(i)).collect();
    three_class(p, d, &rest);
}

/// A general-purpose upper-bound coloring for any group: maximal
/// involution spokes in distinct colors, the remaining subgroups in the
/// three-class scheme, `max(3, |InvMax|)` colors. Not tied to any
/// hypothesis, so it must be verified before use.
pub fn hub_fallback_coloring(d: &CyclicDecomposition, g: &SimpleGraph) -> EdgeColoring {
    let invmax = d.ics_report().invmax_indices;
    let mut p = Painter::new(g);
    paint_involutions_then_three_class(&mut p, d, &invmax);
    p.finish(3, invmax.len().max(3))
}
