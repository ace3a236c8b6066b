//! Brute-force rainbow connection on raw edge lists, sharing no code with
//! the library search: every `k^|E|` coloring is tried and checked by
//! enumerating simple paths.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Edges = Vec<(usize, usize)>;

pub fn vertex_count(edges: &[(usize, usize)]) -> usize {
    edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0)
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<(usize, usize)>> {
    let mut adj = vec![Vec::new(); n];
    for (id, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, id));
        adj[v].push((u, id));
    }
    adj
}

fn rainbow_path_exists(
    adj: &[Vec<(usize, usize)>],
    colors: &[usize],
    at: usize,
    target: usize,
    visited: &mut Vec<bool>,
    used: &mut Vec<bool>,
) -> bool {
    if at == target {
        return true;
    }
    for &(w, id) in &adj[at] {
        let c = colors[id];
        if visited[w] || used[c] {
            continue;
        }
        visited[w] = true;
        used[c] = true;
        let ok = rainbow_path_exists(adj, colors, w, target, visited, used);
        visited[w] = false;
        used[c] = false;
        if ok {
            return true;
        }
    }
    false
}

/// Colors are `0..k`.
pub fn is_rainbow(n: usize, edges: &[(usize, usize)], colors: &[usize], k: usize) -> bool {
    let adj = adjacency(n, edges);
    let mut visited = vec![false; n];
    let mut used = vec![false; k];
    for u in 0..n {
        for v in u + 1..n {
            visited[u] = true;
            let ok = rainbow_path_exists(&adj, colors, u, v, &mut visited, &mut used);
            visited[u] = false;
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Some rainbow coloring with `k` colors, found by counting through all of them.
pub fn rainbow_coloring(edges: &[(usize, usize)], k: usize) -> Option<Vec<usize>> {
    let n = vertex_count(edges);
    let mut colors = vec![0; edges.len()];
    loop {
        if is_rainbow(n, edges, &colors, k) {
            return Some(colors);
        }
        let mut i = 0;
        loop {
            if i == colors.len() {
                return None;
            }
            colors[i] += 1;
            if colors[i] < k {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// Smallest `k` admitting a rainbow coloring of a connected graph.
pub fn rc(edges: &[(usize, usize)]) -> usize {
    if edges.is_empty() {
        return 0;
    }
    (1..=edges.len())
        .find(|&k| rainbow_coloring(edges, k).is_some())
        .expect("a connected graph is rainbow connected with one color per edge")
}

fn canonical(n: usize, edges: &[(usize, usize)]) -> Edges {
    let mut deg = vec![0usize; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(deg[v]));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &by_degree {
        match classes.last_mut() {
            Some(c) if deg[c[0]] == deg[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best: Option<Edges> = None;
    let mut order = Vec::with_capacity(n);
    permute_classes(&classes, 0, &mut order, edges, &mut best);
    best.unwrap()
}

fn permute_classes(
    classes: &[Vec<usize>],
    at: usize,
    order: &mut Vec<usize>,
    edges: &[(usize, usize)],
    best: &mut Option<Edges>,
) {
    if at == classes.len() {
        let mut label = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            label[old] = new;
        }
        let mut relabelled: Edges = edges
            .iter()
            .map(|&(u, v)| (label[u].min(label[v]), label[u].max(label[v])))
            .collect();
        relabelled.sort_unstable();
        if best.as_ref().is_none_or(|b| relabelled < *b) {
            *best = Some(relabelled);
        }
        return;
    }
    let mut class = classes[at].clone();
    let len = class.len();
    heap_permutations(&mut class, len, &mut |perm| {
        let before = order.len();
        order.extend_from_slice(perm);
        permute_classes(classes, at + 1, order, edges, best);
        order.truncate(before);
    });
}

fn heap_permutations(items: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        visit(items);
        return;
    }
    for i in 0..k {
        heap_permutations(items, k - 1, visit);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        items.swap(j, k - 1);
    }
}

/// Every connected graph with `1..=max_edges` edges and no isolated
/// vertex, one per isomorphism class, grouped by edge count.
pub fn connected_graphs(max_edges: usize) -> Vec<Vec<Edges>> {
    let mut levels: Vec<Vec<Edges>> = vec![vec![vec![(0, 1)]]];
    while levels.len() < max_edges {
        let mut next = BTreeSet::new();
        for g in levels.last().unwrap() {
            let n = vertex_count(g);
            let present: BTreeSet<(usize, usize)> = g.iter().copied().collect();
            let mut extend = |e: (usize, usize), n: usize| {
                let mut h = g.clone();
                h.push(e);
                next.insert(canonical(n, &h));
            };
            for u in 0..n {
                for v in u + 1..n {
                    if !present.contains(&(u, v)) {
                        extend((u, v), n);
                    }
                }
                extend((u, n), n + 1);
            }
        }
        levels.push(next.into_iter().collect());
    }
    levels
}
