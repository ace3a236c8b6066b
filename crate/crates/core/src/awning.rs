//! Awnings: witness systems `h[i][j]` with an A/B labelling of each
//! position, checked and searched against an ordering of the maximal
//! cyclic subgroups.
//!
//! Positions are the pairs `i < j` in row-major order. Sides partition
//! positions, not values, so a row may hold the same element twice with
//! different sides.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclic::{pair_index, pairs, CyclicDecomposition};
use crate::graph::{enhanced_power_graph, SimpleGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Side::A => "A",
            Side::B => "B",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AwningCertificate {
    order: Vec<usize>,
    witnesses: Vec<usize>,
    sides: Vec<Side>,
}

impl AwningCertificate {
    /// `witnesses` and `sides` are indexed by row-major pair position in
    /// the reordered list `order`.
    pub fn new(order: Vec<usize>, witnesses: Vec<usize>, sides: Vec<Side>) -> Self {
        AwningCertificate { order, witnesses, sides }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn m(&self) -> usize {
        self.order.len()
    }

    pub fn witness(&self, i: usize, j: usize) -> usize {
        self.witnesses[pair_index(self.m(), i, j)]
    }

    pub fn side(&self, i: usize, j: usize) -> Side {
        self.sides[pair_index(self.m(), i, j)]
    }

    /// `(i, j, h[i][j], side)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, Side)> + '_ {
        pairs(self.m()).zip(self.witnesses.iter().zip(&self.sides)).map(|((i, j), (&h, &s))| (i, j, h, s))
    }
}

/// The clause of the definition a certificate breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AwningCondition {
    /// `h[i][j]` is not in `<x_i> ∩ <x_j>`.
    Intersection,
    /// `r = j`, `h[i][r]` in `A_i` but `h[j][s]` in `A_j`.
    CaseA,
    /// `r = j`, `h[i][r]` in `B_i` but `h[j][s]` in `B_j`.
    CaseB,
    /// `r = s`, `h[i][r]` in `A_i` but `h[j][r]` in `B_j`.
    CaseC,
    /// `r = s`, `h[i][r]` in `B_i` but `h[j][r]` in `A_j`.
    CaseD,
}

impl AwningCondition {
    pub fn tag(self) -> &'static str {
        match self {
            AwningCondition::Intersection => "condition 2",
            AwningCondition::CaseA => "condition 3(a)",
            AwningCondition::CaseB => "condition 3(b)",
            AwningCondition::CaseC => "condition 3(c)",
            AwningCondition::CaseD => "condition 3(d)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AwningError {
    DimensionMismatch { m: usize, order: usize, witnesses: usize, sides: usize },
    /// For the intersection clause only `i` and `j` are meaningful.
    Violation { condition: AwningCondition, i: usize, j: usize, r: usize, s: usize },
}

impl fmt::Display for AwningError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AwningError::DimensionMismatch { m, order, witnesses, sides } => write!(
                f,
                "certificate shape does not fit m = {m}: order has {order} entries, {witnesses} witnesses, {sides} sides"
            ),
            AwningError::Violation { condition: AwningCondition::Intersection, i, j, .. } => {
                write!(f, "condition 2 fails at h[{i}][{j}]")
            }
            AwningError::Violation { condition, i, j, r, s } => {
                write!(f, "{} fails for h[{i}][{r}] and h[{j}][{s}]", condition.tag())
            }
        }
    }
}

impl core::error::Error for AwningError {}

fn is_permutation(order: &[usize], m: usize) -> bool {
    let mut seen = vec![false; m];
    order.len() == m && order.iter().all(|&i| i < m && !core::mem::replace(&mut seen[i], true))
}

/// The side that condition 3 forces at `(j, s)` from row `i`, if any.
fn forced(i_side: Side, r: usize, j: usize, s: usize) -> Option<(Side, AwningCondition)> {
    if r == j {
        Some(match i_side {
            Side::A => (Side::B, AwningCondition::CaseA),
            Side::B => (Side::A, AwningCondition::CaseB),
        })
    } else if r == s {
        Some(match i_side {
            Side::A => (Side::A, AwningCondition::CaseC),
            Side::B => (Side::B, AwningCondition::CaseD),
        })
    } else {
        None
    }
}

/// Checks conditions 1 to 3 literally. The first violation in row-major
/// order of `(i, j, s, r)` is returned.
pub fn verify_awning(d: &CyclicDecomposition, cert: &AwningCertificate) -> Result<(), AwningError> {
    let m = d.m();
    let npairs = m * m.saturating_sub(1) / 2;
    if !is_permutation(&cert.order, m) || cert.witnesses.len() != npairs || cert.sides.len() != npairs {
        return Err(AwningError::DimensionMismatch {
            m,
            order: cert.order.len(),
            witnesses: cert.witnesses.len(),
            sides: cert.sides.len(),
        });
    }
    let view = d.reordered(&cert.order);
    for (i, j) in pairs(m) {
        let h = cert.witness(i, j);
        if h >= d.order() || !view.intersection(i, j).contains(h) {
            return Err(AwningError::Violation { condition: AwningCondition::Intersection, i, j, r: j, s: j });
        }
    }
    for (i, j) in pairs(m) {
        for s in j + 1..m {
            for r in i + 1..m {
                if cert.witness(j, s) != cert.witness(i, r) {
                    continue;
                }
                if let Some((need, condition)) = forced(cert.side(i, r), r, j, s) {
                    if cert.side(j, s) != need {
                        return Err(AwningError::Violation { condition, i, j, r, s });
                    }
                }
            }
        }
    }
    Ok(())
}

/// How [`find_awning`] prunes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AwningMode {
    /// Conditions 1 to 3 only.
    Literal,
    /// Also requires that the two-coloring the certificate induces never
    /// paints one edge with both colors: position `(r, s)` colors
    /// `{a, h[r][s]}`, `a` in `<x_r> \ <x_s>`, with 1 on side A and 2 on
    /// side B, and `{b, h[r][s]}`, `b` in `<x_s> \ <x_r>`, with the other
    /// color.
    Coherent,
}

pub const DEFAULT_AWNING_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AwningSearch {
    pub mode: AwningMode,
    /// Witness/side assignments tried before giving up.
    pub node_budget: u64,
}

impl Default for AwningSearch {
    fn default() -> Self {
        AwningSearch { mode: AwningMode::Coherent, node_budget: DEFAULT_AWNING_BUDGET }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AwningVerdict {
    Found(AwningCertificate),
    None,
    /// The budget ran out first.
    Unknown,
    /// Fewer than two maximal cyclic subgroups.
    NotApplicable,
}

impl AwningVerdict {
    pub fn name(&self) -> &'static str {
        match self {
            AwningVerdict::Found(_) => "FOUND",
            AwningVerdict::None => "NONE",
            AwningVerdict::Unknown => "UNKNOWN",
            AwningVerdict::NotApplicable => "NOT_APPLICABLE",
        }
    }

    pub fn certificate(&self) -> Option<&AwningCertificate> {
        match self {
            AwningVerdict::Found(c) => Some(c),
            _ => None,
        }
    }
}

struct Search<'a> {
    m: usize,
    positions: Vec<(usize, usize)>,
    candidates: Vec<Vec<usize>>,
    // per position and candidate: (row-side edges, column-side edges)
    spokes: Vec<Vec<(Vec<usize>, Vec<usize>)>>,
    coherent: bool,
    h: Vec<usize>,
    side: Vec<Side>,
    paint: Vec<u8>,
    refs: Vec<u32>,
    budget: u64,
    nodes: u64,
    _view: &'a CyclicDecomposition,
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

impl<'a> Search<'a> {
    fn new(view: &'a CyclicDecomposition, config: &AwningSearch) -> Self {
        let m = view.m();
        let positions: Vec<(usize, usize)> = pairs(m).collect();
        let candidates: Vec<Vec<usize>> =
            positions.iter().map(|&(i, j)| view.intersection(i, j).to_vec()).collect();
        let coherent = config.mode == AwningMode::Coherent;
        let g = if coherent { Some(enhanced_power_graph(view)) } else { None };
        let spokes = positions
            .iter()
            .zip(&candidates)
            .map(|(&(r, s), cands)| match &g {
                Some(g) => cands.iter().map(|&h| spoke_edges(view, g, r, s, h)).collect(),
                None => Vec::new(),
            })
            .collect();
        let edges = g.as_ref().map_or(0, SimpleGraph::edge_count);
        Search {
            m,
            h: vec![0; positions.len()],
            side: vec![Side::A; positions.len()],
            positions,
            candidates,
            spokes,
            coherent,
            paint: vec![0; edges],
            refs: vec![0; edges],
            budget: config.node_budget,
            nodes: 0,
            _view: view,
        }
    }

    fn consistent(&self, p: usize, h: usize, side: Side) -> bool {
        let (j, s) = self.positions[p];
        for i in 0..j {
            for r in i + 1..self.m {
                let q = pair_index(self.m, i, r);
                if self.h[q] != h {
                    continue;
                }
                if let Some((need, _)) = forced(self.side[q], r, j, s) {
                    if need != side {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn try_paint(&mut self, p: usize, c: usize, side: Side) -> bool {
        let (row, col) = match side {
            Side::A => (1u8, 2u8),
            Side::B => (2u8, 1u8),
        };
        let (rows, cols) = &self.spokes[p][c];
        let clash = |e: &usize, color: u8| self.refs[*e] > 0 && self.paint[*e] != color;
        if rows.iter().any(|e| clash(e, row)) || cols.iter().any(|e| clash(e, col)) {
            return false;
        }
        for &e in rows {
            self.paint[e] = row;
            self.refs[e] += 1;
        }
        for &e in cols {
            self.paint[e] = col;
            self.refs[e] += 1;
        }
        true
    }

    fn unpaint(&mut self, p: usize, c: usize) {
        let (rows, cols) = &self.spokes[p][c];
        for &e in rows.iter().chain(cols) {
            self.refs[e] -= 1;
        }
    }

    fn descend(&mut self, p: usize) -> Step {
        if p == self.positions.len() {
            return Step::Found;
        }
        for c in 0..self.candidates[p].len() {
            let h = self.candidates[p][c];
            for side in [Side::A, Side::B] {
                self.nodes += 1;
                if self.nodes > self.budget {
                    return Step::OutOfBudget;
                }
                if !self.consistent(p, h, side) {
                    continue;
                }
                if self.coherent && !self.try_paint(p, c, side) {
                    continue;
                }
                self.h[p] = h;
                self.side[p] = side;
                match self.descend(p + 1) {
                    Step::Exhausted => {}
                    other => return other,
                }
                if self.coherent {
                    self.unpaint(p, c);
                }
            }
        }
        Step::Exhausted
    }
}

fn spoke_edges(
    view: &CyclicDecomposition,
    g: &SimpleGraph,
    r: usize,
    s: usize,
    h: usize,
) -> (Vec<usize>, Vec<usize>) {
    let side = |a: usize, b: usize| -> Vec<usize> {
        view.members(a)
            .iter()
            .filter(|&x| !view.members(b).contains(x))
            .filter_map(|x| g.edge_id(x, h))
            .collect()
    };
    (side(r, s), side(s, r))
}

/// Backtracking search over witnesses (ascending element index, identity
/// first) and sides (A before B), position by position in row-major order.
/// Returns the verdict and the number of nodes visited.
pub fn find_awning(d: &CyclicDecomposition, order: &[usize], config: &AwningSearch) -> (AwningVerdict, u64) {
    let m = d.m();
    assert!(is_permutation(order, m), "order must be a permutation of 0..m");
    if m < 2 {
        return (AwningVerdict::NotApplicable, 0);
    }
    let view = d.reordered(order);
    let mut search = Search::new(&view, config);
    let verdict = match search.descend(0) {
        Step::Found => AwningVerdict::Found(AwningCertificate::new(
            order.to_vec(),
            search.h.clone(),
            search.side.clone(),
        )),
        Step::Exhausted => AwningVerdict::None,
        Step::OutOfBudget => AwningVerdict::Unknown,
    };
    (verdict, search.nodes)
}

/// Verdicts of [`find_awning`] across several orderings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderProbe {
    /// Orders in ascending lexicographic rank.
    pub orders_tried: Vec<Vec<usize>>,
    /// Indices into `orders_tried`.
    pub found_for: Vec<usize>,
    pub not_found_for: Vec<usize>,
    pub unknown_for: Vec<usize>,
    /// Every permutation was tried.
    pub exhaustive: bool,
}

impl OrderProbe {
    pub fn is_applicable(&self) -> bool {
        !self.orders_tried.is_empty()
    }

    /// `Some(true)` when every tried order agrees and none ran out of budget.
    pub fn order_invariant(&self) -> Option<bool> {
        if !self.is_applicable() || !self.unknown_for.is_empty() {
            return None;
        }
        Some(self.found_for.is_empty() || self.not_found_for.is_empty())
    }
}

fn factorial(m: usize) -> u128 {
    (1..=m as u128).try_fold(1u128, |acc, x| acc.checked_mul(x)).unwrap_or(u128::MAX)
}

/// The permutation of `0..m` with the given lexicographic rank.
pub fn unrank_permutation(m: usize, mut rank: u128) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..m).collect();
    let mut out = Vec::with_capacity(m);
    for left in (1..=m).rev() {
        let block = factorial(left - 1);
        let idx = (rank / block) as usize;
        rank %= block;
        out.push(pool.remove(idx));
    }
    out
}

/// Runs [`find_awning`] under every ordering when `m! <= max_orders`,
/// otherwise under `max_orders` orderings at evenly spaced ranks.
pub fn awning_order_probe(d: &CyclicDecomposition, max_orders: usize, config: &AwningSearch) -> OrderProbe {
    let m = d.m();
    let mut probe = OrderProbe {
        orders_tried: Vec::new(),
        found_for: Vec::new(),
        not_found_for: Vec::new(),
        unknown_for: Vec::new(),
        exhaustive: true,
    };
    if m < 2 || max_orders == 0 {
        return probe;
    }
    let total = factorial(m);
    let ranks: Vec<u128> = if total <= max_orders as u128 {
        (0..total).collect()
    } else {
        probe.exhaustive = false;
        let step = total / max_orders as u128;
        (0..max_orders as u128).map(|t| t * step).collect()
    };
    for (idx, rank) in ranks.into_iter().enumerate() {
        let order = unrank_permutation(m, rank);
        match find_awning(d, &order, config).0 {
            AwningVerdict::Found(_) => probe.found_for.push(idx),
            AwningVerdict::None => probe.not_found_for.push(idx),
            AwningVerdict::Unknown => probe.unknown_for.push(idx),
            AwningVerdict::NotApplicable => unreachable!("m >= 2"),
        }
        probe.orders_tried.push(order);
    }
    probe
}
