//! Simple undirected graphs over group elements.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclic::CyclicDecomposition;
use crate::group::FiniteGroup;

const NO_EDGE: u32 = u32::MAX;

/// Undirected simple graph on `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, and edge ids are positions in
/// the lexicographically sorted edge list.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<(usize, usize)>>,
    edge_ids: Vec<u32>,
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph").field("n", &self.n).field("edges", &self.edges).finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphError {
    DisconnectedGraph,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::DisconnectedGraph => write!(f, "graph is disconnected"),
        }
    }
}

impl core::error::Error for GraphError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphMetrics {
    pub diameter: usize,
    pub bridge_count: usize,
    pub is_complete: bool,
}

impl SimpleGraph {
    /// Builds a graph from arbitrary pairs; loops are dropped and duplicates merged.
    pub fn from_edges(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut edges: Vec<(usize, usize)> = pairs
            .into_iter()
            .filter(|(u, v)| u != v)
            .map(|(u, v)| {
                assert!(u < n && v < n, "edge ({u}, {v}) out of range for {n} vertices");
                (u.min(v), u.max(v))
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_ids = vec![NO_EDGE; n * n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
            edge_ids[u * n + v] = id as u32;
            edge_ids[v * n + u] = id as u32;
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        SimpleGraph { n, edges, adjacency, edge_ids }
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// `K_{1,k}` centred at vertex 0.
    pub fn star(k: usize) -> Self {
        Self::from_edges(k + 1, (1..=k).map(|v| (0, v)))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    /// `(neighbour, edge id)` pairs, ascending by neighbour.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        match self.edge_ids[u * self.n + v] {
            NO_EDGE => None,
            id => Some(id as usize),
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edge_ids[u * self.n + v] != NO_EDGE
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Adds an edge, returning a new graph (edge ids are recomputed).
    pub fn with_edge(&self, u: usize, v: usize) -> Self {
        Self::from_edges(self.n, self.edges.iter().copied().chain([(u, v)]))
    }

    pub fn is_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.n == other.n && self.edges.iter().all(|&(u, v)| other.has_edge(u, v))
    }

    /// BFS distances from `s`; `usize::MAX` marks unreachable vertices.
    pub fn bfs(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        dist[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &(w, _) in &self.adjacency[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Row-major all-pairs distance matrix.
    pub fn distance_matrix(&self) -> Vec<usize> {
        (0..self.n).flat_map(|s| self.bfs(s)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs(0).iter().all(|&d| d != usize::MAX)
    }

    /// Edge ids of all bridges, ascending.
    pub fn bridges(&self) -> Vec<usize> {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut out = Vec::new();
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, edge id used to enter, next adjacency slot)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(top) = stack.last_mut() {
                let (u, parent_edge, slot) = *top;
                if let Some(&(w, id)) = self.adjacency[u].get(slot) {
                    top.2 += 1;
                    if id == parent_edge {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, id, 0));
                    } else {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if low[u] > disc[p] {
                            out.push(parent_edge);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn metrics(&self) -> Result<GraphMetrics, GraphError> {
        let mut diameter = 0;
        for s in 0..self.n {
            for d in self.bfs(s) {
                if d == usize::MAX {
                    return Err(GraphError::DisconnectedGraph);
                }
                diameter = diameter.max(d);
            }
        }
        Ok(GraphMetrics {
            diameter,
            bridge_count: self.bridges().len(),
            is_complete: self.is_complete(),
        })
    }
}

/// `x ~ y` iff both lie in a common cyclic subgroup, built as the union of
/// cliques on the maximal cyclic subgroups.
pub fn enhanced_power_graph(d: &CyclicDecomposition) -> SimpleGraph {
    let mut pairs = Vec::new();
    for s in d.subgroups() {
        let members = s.members.to_vec();
        for (a, &u) in members.iter().enumerate() {
            for &v in &members[a + 1..] {
                pairs.push((u, v));
            }
        }
    }
    SimpleGraph::from_edges(d.order(), pairs)
}

/// `x ~ y` iff one is a power of the other.
pub fn power_graph(g: &FiniteGroup) -> SimpleGraph {
    let n = g.order();
    let mut pairs = Vec::new();
    for y in 0..n {
        for x in g.powers(y) {
            if x != y {
                pairs.push((x, y));
            }
        }
    }
    SimpleGraph::from_edges(n, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{GroupSpec, DEFAULT_ORDER_CAP};

    fn group(spec: &str) -> FiniteGroup {
        FiniteGroup::construct(&spec.parse::<GroupSpec>().unwrap(), DEFAULT_ORDER_CAP).unwrap()
    }

    fn epg(spec: &str) -> SimpleGraph {
        enhanced_power_graph(&CyclicDecomposition::of_group(&group(spec)))
    }

    #[test]
    fn edge_ids_are_lexicographic() {
        let g = SimpleGraph::from_edges(4, [(3, 1), (0, 2), (1, 0), (2, 0), (1, 1)]);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 3)]);
        assert_eq!(g.edge_id(3, 1), Some(2));
        assert_eq!(g.edge_id(2, 3), None);
    }

    #[test]
    fn cyclic_groups_give_complete_graphs() {
        for n in 1..=12 {
            assert!(epg(&alloc::format!("cyclic({n})")).is_complete());
        }
    }

    #[test]
    fn klein_is_a_star() {
        let g = epg("elementary_abelian(2,2)");
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(power_graph(&group("elementary_abelian(2,2)")), g);
    }

    #[test]
    fn s3_graph_and_metrics() {
        let g = epg("symmetric(3)");
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.degree(0), 5);
        assert_eq!(
            g.metrics().unwrap(),
            GraphMetrics { diameter: 2, bridge_count: 3, is_complete: false }
        );
    }

    #[test]
    fn power_graph_of_z6_misses_two_edges() {
        let z6 = group("cyclic(6)");
        let p = power_graph(&z6);
        assert!(!p.has_edge(2, 3));
        assert!(!p.has_edge(3, 4));
        assert_eq!(p.edge_count(), 13);
        let zp = power_graph(&group("cyclic(7)"));
        assert!(zp.is_complete());
    }

    #[test]
    fn metrics_of_standard_graphs() {
        assert_eq!(
            SimpleGraph::complete(4).metrics().unwrap(),
            GraphMetrics { diameter: 1, bridge_count: 0, is_complete: true }
        );
        assert_eq!(
            SimpleGraph::star(3).metrics().unwrap(),
            GraphMetrics { diameter: 2, bridge_count: 3, is_complete: false }
        );
        assert_eq!(SimpleGraph::path(5).bridges(), vec![0, 1, 2, 3]);
        assert!(SimpleGraph::cycle(5).bridges().is_empty());
        assert_eq!(
            SimpleGraph::from_edges(4, [(0, 1), (2, 3)]).metrics(),
            Err(GraphError::DisconnectedGraph)
        );
    }

    #[test]
    fn bridges_of_two_triangles_joined_by_an_edge() {
        let g = SimpleGraph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]);
        assert_eq!(g.bridges(), vec![g.edge_id(2, 3).unwrap()]);
    }
}
