//! Exhaustive search for a rainbow `k`-coloring.
//!
//! Edges are colored in id order, with colors introduced in ascending order
//! (edge 0 always gets color 1), so only one coloring per color permutation
//! class is visited.
//!
//! Every non-adjacent pair keeps a witness path: a walk of at most `k`
//! edges whose already-colored edges have distinct colors. Uncoloured edges
//! can still take any color, so a pair with no witness can never be
//! satisfied below the current node. Witnesses stay valid for every
//! ancestor node (fewer colored edges), so backtracking never has to
//! restore them. Each edge watches the pairs whose witness uses it; only
//! those pairs are re-examined when the edge gets a color.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::SimpleGraph;

pub(crate) const MAX_SEARCH_COLORS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Outcome {
    Found(Vec<usize>),
    Exhausted,
    BudgetExceeded,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Color assignments tried.
    pub nodes: u64,
    /// Complete colorings reached.
    pub colorings_tested: u64,
}

pub(crate) struct KColoringSearch<'g> {
    g: &'g SimpleGraph,
    k: usize,
    dist: Vec<usize>,
    colors: Vec<u8>,
    pairs: Vec<(usize, usize)>,
    witness: Vec<Vec<usize>>,
    watches: Vec<Vec<u32>>,
    budget: u64,
    pub stats: SearchStats,
    on_walk: Vec<bool>,
    scratch: Vec<usize>,
}

impl<'g> KColoringSearch<'g> {
    pub fn new(g: &'g SimpleGraph, k: usize, budget: u64) -> Self {
        assert!((1..=MAX_SEARCH_COLORS).contains(&k));
        let n = g.vertex_count();
        let pairs = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect::<Vec<_>>();
        KColoringSearch {
            g,
            k,
            dist: g.distance_matrix(),
            colors: vec![0; g.edge_count()],
            witness: vec![Vec::new(); pairs.len()],
            pairs,
            watches: vec![Vec::new(); g.edge_count()],
            budget,
            stats: SearchStats::default(),
            on_walk: vec![false; n],
            scratch: Vec::new(),
        }
    }

    pub fn run(&mut self) -> Outcome {
        for p in 0..self.pairs.len() {
            match self.find_witness(p) {
                Some(path) => self.install(p, path, usize::MAX, &mut Vec::new()),
                None => return Outcome::Exhausted,
            }
        }
        self.descend(0, 0)
    }

    fn descend(&mut self, pos: usize, max_used: usize) -> Outcome {
        if pos == self.colors.len() {
            self.stats.colorings_tested += 1;
            return Outcome::Found(self.colors.iter().map(|&c| c as usize).collect());
        }
        let top = (max_used + 1).min(self.k);
        for c in 1..=top {
            self.stats.nodes += 1;
            if self.stats.nodes > self.budget {
                self.colors[pos] = 0;
                return Outcome::BudgetExceeded;
            }
            if self.assign(pos, c as u8) {
                match self.descend(pos + 1, max_used.max(c)) {
                    Outcome::Exhausted => {}
                    other => return other,
                }
            }
            self.colors[pos] = 0;
        }
        Outcome::Exhausted
    }

    fn assign(&mut self, e: usize, c: u8) -> bool {
        self.colors[e] = c;
        let watching = core::mem::take(&mut self.watches[e]);
        let mut kept = Vec::with_capacity(watching.len());
        let mut ok = true;
        for &p in &watching {
            let p = p as usize;
            if !ok {
                kept.push(p as u32);
                continue;
            }
            if !self.witness[p].contains(&e) {
                continue;
            }
            if self.witness_valid(p) {
                kept.push(p as u32);
                continue;
            }
            match self.find_witness(p) {
                Some(path) => self.install(p, path, e, &mut kept),
                None => {
                    kept.push(p as u32);
                    ok = false;
                }
            }
        }
        self.watches[e] = kept;
        ok
    }

    fn install(&mut self, p: usize, path: Vec<usize>, current: usize, kept: &mut Vec<u32>) {
        for &ed in &path {
            if ed == current {
                kept.push(p as u32);
            } else {
                self.watches[ed].push(p as u32);
            }
        }
        self.witness[p] = path;
    }

    fn witness_valid(&self, p: usize) -> bool {
        let mut used = 0u64;
        for &ed in &self.witness[p] {
            let c = self.colors[ed];
            if c != 0 {
                let bit = 1u64 << (c - 1);
                if used & bit != 0 {
                    return false;
                }
                used |= bit;
            }
        }
        true
    }

    fn find_witness(&mut self, p: usize) -> Option<Vec<usize>> {
        let (u, v) = self.pairs[p];
        self.scratch.clear();
        self.on_walk[u] = true;
        let found = self.extend(u, v, 0, 0);
        self.on_walk[u] = false;
        found.then(|| self.scratch.clone())
    }

    // Colored edges first: a fully colored witness never needs revisiting.
    fn extend(&mut self, x: usize, target: usize, len: usize, used: u64) -> bool {
        if x == target {
            return true;
        }
        let n = self.g.vertex_count();
        let left = self.k - len;
        for pass in 0..2 {
            for &(w, id) in self.g.neighbors(x) {
                let c = self.colors[id];
                if (c != 0) != (pass == 0) || self.on_walk[w] {
                    continue;
                }
                if self.dist[w * n + target] + 1 > left {
                    continue;
                }
                let bit = if c == 0 { 0 } else { 1u64 << (c - 1) };
                if used & bit != 0 {
                    continue;
                }
                self.on_walk[w] = true;
                self.scratch.push(id);
                let found = self.extend(w, target, len + 1, used | bit);
                self.on_walk[w] = false;
                if found {
                    return true;
                }
                self.scratch.pop();
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rainbow::{is_rainbow_connected, EdgeColoring};

    fn search(g: &SimpleGraph, k: usize) -> Outcome {
        KColoringSearch::new(g, k, 10_000_000).run()
    }

    fn assert_found(g: &SimpleGraph, k: usize) {
        match search(g, k) {
            Outcome::Found(colors) => {
                assert_eq!(colors[0], 1);
                let c = EdgeColoring::new(k, colors).unwrap();
                assert!(is_rainbow_connected(g, &c));
            }
            other => panic!("expected a {k}-coloring, got {other:?}"),
        }
    }

    #[test]
    fn odd_cycle_needs_three() {
        let c5 = SimpleGraph::cycle(5);
        assert_eq!(search(&c5, 2), Outcome::Exhausted);
        assert_found(&c5, 3);
    }

    #[test]
    fn star_needs_one_color_per_leaf() {
        let s = SimpleGraph::star(4);
        assert_eq!(search(&s, 3), Outcome::Exhausted);
        assert_found(&s, 4);
    }

    #[test]
    fn c4_two_colors() {
        assert_found(&SimpleGraph::cycle(4), 2);
    }

    #[test]
    fn budget_is_reported() {
        let p = SimpleGraph::path(8);
        assert_eq!(KColoringSearch::new(&p, 7, 5).run(), Outcome::BudgetExceeded);
    }
}
