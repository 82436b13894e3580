//! Bipartite graphs with maximum-cardinality and maximum-weight matching.

use alloc::vec;
use alloc::vec::Vec;

/// A bipartite graph with weighted edges. Parallel edges are not allowed.
#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    adj: Vec<Vec<(usize, u64)>>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize) -> Self {
        Self {
            left,
            right,
            adj: vec![Vec::new(); left],
        }
    }

    pub fn left_count(&self) -> usize {
        self.left
    }

    pub fn right_count(&self) -> usize {
        self.right
    }

    pub fn add_edge(&mut self, l: usize, r: usize, weight: u64) {
        assert!(l < self.left && r < self.right, "edge endpoint out of range");
        debug_assert!(
            self.adj[l].iter().all(|&(r2, _)| r2 != r),
            "parallel edge {l} -> {r}"
        );
        self.adj[l].push((r, weight));
    }

    pub fn edges(&self, l: usize) -> &[(usize, u64)] {
        &self.adj[l]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }
}

#[derive(Clone, Debug)]
pub struct Matching {
    pub left_to_right: Vec<Option<usize>>,
    pub right_to_left: Vec<Option<usize>>,
    pub total_weight: u64,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.left_to_right.iter().filter(|m| m.is_some()).count()
    }

    /// Matched pairs ascending by left endpoint.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.left_to_right
            .iter()
            .enumerate()
            .filter_map(|(l, r)| r.map(|r| (l, r)))
            .collect()
    }
}

/// Maximum-cardinality matching by augmenting paths, deterministic: left
/// vertices are processed ascending and adjacency lists in insertion order.
pub fn max_bipartite_matching(g: &BipartiteGraph) -> Matching {
    let mut left_to_right: Vec<Option<usize>> = vec![None; g.left];
    let mut right_to_left: Vec<Option<usize>> = vec![None; g.right];
    for start in 0..g.left {
        let mut visited = vec![false; g.right];
        try_augment(g, start, &mut visited, &mut left_to_right, &mut right_to_left);
    }
    let total_weight = weight_of(g, &left_to_right);
    Matching {
        left_to_right,
        right_to_left,
        total_weight,
    }
}

fn try_augment(
    g: &BipartiteGraph,
    l: usize,
    visited: &mut [bool],
    l2r: &mut [Option<usize>],
    r2l: &mut [Option<usize>],
) -> bool {
    for &(r, _) in &g.adj[l] {
        if visited[r] {
            continue;
        }
        visited[r] = true;
        if r2l[r].is_none() || try_augment(g, r2l[r].unwrap(), visited, l2r, r2l) {
            l2r[l] = Some(r);
            r2l[r] = Some(l);
            return true;
        }
    }
    false
}

fn weight_of(g: &BipartiteGraph, l2r: &[Option<usize>]) -> u64 {
    let mut total = 0;
    for (l, m) in l2r.iter().enumerate() {
        if let Some(r) = *m {
            let (_, w) = g.adj[l].iter().find(|&&(r2, _)| r2 == r).unwrap();
            total += w;
        }
    }
    total
}

/// Maximum-weight matching (any cardinality) by successive augmentation
/// along a most-negative-cost path in the residual graph.
///
/// Augmenting always along a cheapest path keeps the residual free of
/// negative cycles, and the cheapest-path cost is nondecreasing over
/// rounds; stopping at the first nonnegative one is therefore optimal.
pub fn max_weight_bipartite_matching(g: &BipartiteGraph) -> Matching {
    let nl = g.left;
    let nr = g.right;
    let mut l2r: Vec<Option<usize>> = vec![None; nl];
    let mut r2l: Vec<Option<usize>> = vec![None; nr];
    const INF: i64 = i64::MAX / 4;

    loop {
        // Bellman-Ford over nodes 0..nl (left) and nl..nl+nr (right).
        // Unmatched edges go left -> right at cost -w, matched edges go
        // right -> left at cost +w. Sources: unmatched left vertices.
        let n = nl + nr;
        let mut dist = vec![INF; n];
        let mut pred: Vec<Option<usize>> = vec![None; n];
        for l in 0..nl {
            if l2r[l].is_none() {
                dist[l] = 0;
            }
        }
        for _ in 0..n {
            let mut changed = false;
            for l in 0..nl {
                for &(r, w) in &g.adj[l] {
                    if l2r[l] == Some(r) {
                        if dist[nl + r] < INF && dist[nl + r] + (w as i64) < dist[l] {
                            dist[l] = dist[nl + r] + w as i64;
                            pred[l] = Some(nl + r);
                            changed = true;
                        }
                    } else if dist[l] < INF && dist[l] - (w as i64) < dist[nl + r] {
                        dist[nl + r] = dist[l] - w as i64;
                        pred[nl + r] = Some(l);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }

        // Cheapest augmenting path ends at an unmatched right vertex.
        let mut best: Option<usize> = None;
        for r in 0..nr {
            if r2l[r].is_none() && dist[nl + r] < best.map_or(0, |b| dist[nl + b]) {
                best = Some(r);
            }
        }
        let Some(end) = best else { break };

        // Flip matched status along the path. Every matched edge on the
        // path has both endpoints re-pointed, so no explicit unmatching.
        let mut node = nl + end;
        loop {
            let prev = pred[node].expect("augmenting path must reach an unmatched left vertex");
            debug_assert!(prev < nl && node >= nl);
            l2r[prev] = Some(node - nl);
            r2l[node - nl] = Some(prev);
            match pred[prev] {
                Some(feeder) => {
                    debug_assert!(feeder >= nl);
                    node = feeder;
                }
                None => break,
            }
        }
    }

    let total_weight = weight_of(g, &l2r);
    Matching {
        left_to_right: l2r,
        right_to_left: r2l,
        total_weight,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cardinality_matching_finds_perfect_matching() {
        let mut g = BipartiteGraph::new(3, 3);
        g.add_edge(0, 0, 1);
        g.add_edge(0, 1, 1);
        g.add_edge(1, 0, 1);
        g.add_edge(2, 1, 1);
        g.add_edge(2, 2, 1);
        let m = max_bipartite_matching(&g);
        assert_eq!(m.size(), 3);
        assert_eq!(m.pairs(), vec![(0, 1), (1, 0), (2, 2)]);
    }

    #[test]
    fn cardinality_matching_honors_structure() {
        // Both left vertices only reach right vertex 0.
        let mut g = BipartiteGraph::new(2, 2);
        g.add_edge(0, 0, 1);
        g.add_edge(1, 0, 1);
        let m = max_bipartite_matching(&g);
        assert_eq!(m.size(), 1);
    }

    #[test]
    fn weight_matching_handles_ties_between_optima() {
        // {0-0} and {0-1, 1-0} both weigh 3; only the weight is pinned.
        let mut g = BipartiteGraph::new(2, 2);
        g.add_edge(0, 0, 3);
        g.add_edge(0, 1, 1);
        g.add_edge(1, 0, 2);
        let m = max_weight_bipartite_matching(&g);
        assert_eq!(m.total_weight, 3);
    }

    #[test]
    fn weight_matching_takes_two_light_edges_when_they_beat_one_heavy() {
        let mut g = BipartiteGraph::new(2, 2);
        g.add_edge(0, 0, 3);
        g.add_edge(0, 1, 2);
        g.add_edge(1, 0, 2);
        let m = max_weight_bipartite_matching(&g);
        assert_eq!(m.total_weight, 4);
        assert_eq!(m.size(), 2);
    }

    #[test]
    fn weight_matching_ignores_zero_gain_augmentation() {
        let mut g = BipartiteGraph::new(1, 1);
        g.add_edge(0, 0, 0);
        let m = max_weight_bipartite_matching(&g);
        assert_eq!(m.total_weight, 0);
        assert_eq!(m.size(), 0);
    }

    #[test]
    fn empty_graph_matches_nothing() {
        let g = BipartiteGraph::new(0, 5);
        let m = max_bipartite_matching(&g);
        assert_eq!(m.size(), 0);
        let m = max_weight_bipartite_matching(&g);
        assert_eq!(m.total_weight, 0);
    }
}
