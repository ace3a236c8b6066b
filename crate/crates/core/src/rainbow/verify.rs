//! Rainbow path queries under a total edge coloring.
//!
//! A walk whose edge colors are pairwise distinct never repeats an edge,
//! and cutting its loops leaves a rainbow path, so the search explores
//! walks. The state of a partial walk is then just (vertex, used colors),
//! which makes failed states safe to memoize within one query.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::EdgeColoring;
use crate::graph::SimpleGraph;

/// The lexicographically first pair without a rainbow path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FailingPair {
    pub u: usize,
    pub v: usize,
}

struct PairQuery<'a> {
    g: &'a SimpleGraph,
    colors: &'a [usize],
    to_target: Vec<usize>,
    target: usize,
    used: Vec<u64>,
    used_count: usize,
    k: usize,
    dead: BTreeSet<(usize, u64)>,
    walk: Vec<usize>,
}

impl<'a> PairQuery<'a> {
    fn new(g: &'a SimpleGraph, c: &'a EdgeColoring, target: usize) -> Self {
        PairQuery {
            g,
            colors: c.colors(),
            to_target: g.bfs(target),
            target,
            used: vec![0; (c.k() + 1).div_ceil(64)],
            used_count: 0,
            k: c.k(),
            dead: BTreeSet::new(),
            walk: Vec::new(),
        }
    }

    fn reset(&mut self) {
        self.used.fill(0);
        self.used_count = 0;
        self.dead.clear();
        self.walk.clear();
    }

    fn memo_key(&self, x: usize) -> Option<(usize, u64)> {
        (self.used.len() == 1).then(|| (x, self.used[0]))
    }

    fn dfs(&mut self, x: usize) -> bool {
        self.walk.push(x);
        if x == self.target {
            return true;
        }
        let left = self.k - self.used_count;
        if self.to_target[x] > left || self.memo_key(x).is_some_and(|key| self.dead.contains(&key)) {
            self.walk.pop();
            return false;
        }
        for &(w, id) in self.g.neighbors(x) {
            if self.to_target[w] + 1 > left {
                continue;
            }
            let c = self.colors[id];
            let (word, bit) = (c / 64, 1u64 << (c % 64));
            if self.used[word] & bit != 0 {
                continue;
            }
            self.used[word] |= bit;
            self.used_count += 1;
            let found = self.dfs(w);
            self.used[word] &= !bit;
            self.used_count -= 1;
            if found {
                return true;
            }
        }
        if let Some(key) = self.memo_key(x) {
            self.dead.insert(key);
        }
        self.walk.pop();
        false
    }

    fn path_from(&mut self, source: usize) -> Option<Vec<usize>> {
        self.reset();
        if self.to_target[source] == usize::MAX {
            return None;
        }
        if !self.dfs(source) {
            return None;
        }
        Some(shortcut(&self.walk))
    }
}

/// Removes closed sub-walks so no vertex repeats.
fn shortcut(walk: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(walk.len());
    for &x in walk {
        if let Some(pos) = out.iter().position(|&y| y == x) {
            out.truncate(pos + 1);
        } else {
            out.push(x);
        }
    }
    out
}

/// A path from `u` to `v` whose edges carry pairwise distinct colors.
pub fn rainbow_path(g: &SimpleGraph, c: &EdgeColoring, u: usize, v: usize) -> Option<Vec<usize>> {
    assert_eq!(c.len(), g.edge_count(), "coloring must be total");
    PairQuery::new(g, c, v).path_from(u)
}

/// `Ok` iff every pair of vertices is joined by a rainbow path.
pub fn check_rainbow(g: &SimpleGraph, c: &EdgeColoring) -> Result<(), FailingPair> {
    assert_eq!(c.len(), g.edge_count(), "coloring must be total");
    let n = g.vertex_count();
    let mut first: Option<FailingPair> = None;
    for v in 1..n {
        let mut q = PairQuery::new(g, c, v);
        for u in 0..v {
            if g.has_edge(u, v) {
                continue;
            }
            if q.path_from(u).is_none() {
                let cand = FailingPair { u, v };
                if first.is_none_or(|f| (u, v) < (f.u, f.v)) {
                    first = Some(cand);
                }
                break;
            }
        }
    }
    first.map_or(Ok(()), Err)
}

pub fn is_rainbow_connected(g: &SimpleGraph, c: &EdgeColoring) -> bool {
    check_rainbow(g, c).is_ok()
}

/// Colors along a vertex path.
pub fn path_colors(g: &SimpleGraph, c: &EdgeColoring, path: &[usize]) -> Vec<usize> {
    path.windows(2)
        .map(|w| c.color(g.edge_id(w[0], w[1]).expect("consecutive path vertices are adjacent")))
        .collect()
}
