//! Maximum-weight antichains via minimum flow with lower bounds.
//!
//! Each vertex `v` is split into `in(v) -> out(v)` with flow lower bound
//! `w(v)`; arcs of the poset become `out(u) -> in(v)` edges, minimal
//! vertices hang off the source and maximal vertices feed the sink, all
//! with unbounded capacity. Any feasible flow decomposes into source-sink
//! paths, i.e. maximal chains, and must route at least `w(v)` through every
//! vertex; the minimum flow value therefore equals, by LP duality on the
//! chain cover, the maximum weight of an antichain. The antichain itself
//! falls out of the final residual graph as the set of split arcs crossing
//! into the sink-side cut at their lower bound.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::digraph::SubPoset;

/// An antichain of a sub-poset, local ids ascending, with its total weight
/// under the weight vector it was computed for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Antichain {
    pub vertices: Vec<usize>,
    pub weight: u64,
}

/// Maximum-weight antichain; weights are indexed by local id. The empty
/// antichain (weight 0) can be returned when all weights are zero.
pub fn max_weight_antichain(p: &SubPoset<'_>, weights: &[u64]) -> Antichain {
    assert_eq!(weights.len(), p.len());
    let locals = solve_min_flow(p, weights);
    let weight = locals.iter().map(|&v| weights[v]).sum();
    Antichain {
        vertices: locals,
        weight,
    }
}

/// Maximum-weight antichain among the maximum-cardinality ones.
///
/// Rescaling weights to `Q + w(v)` with `Q = 1 + sum(w)` makes cardinality
/// dominate: an antichain with more vertices always outweighs one with
/// fewer, and among equal sizes the original weights decide. The returned
/// weight is under the original vector.
pub fn max_weight_maximum_antichain(p: &SubPoset<'_>, weights: &[u64]) -> Antichain {
    assert_eq!(weights.len(), p.len());
    let total: u64 = weights.iter().sum();
    let q = total + 1;
    let scaled: Vec<u64> = weights.iter().map(|&w| q + w).collect();
    let locals = solve_min_flow(p, &scaled);
    let weight = locals.iter().map(|&v| weights[v]).sum();
    Antichain {
        vertices: locals,
        weight,
    }
}

struct FlowArc {
    from: usize,
    to: usize,
    low: u64,
    flow: u64,
}

struct FlowNetwork {
    arcs: Vec<FlowArc>,
    /// Arc ids per node in both directions, for residual traversal.
    touching: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        Self {
            arcs: Vec::new(),
            touching: vec![Vec::new(); nodes],
        }
    }

    fn add(&mut self, from: usize, to: usize, low: u64) -> usize {
        let id = self.arcs.len();
        self.arcs.push(FlowArc {
            from,
            to,
            low,
            flow: 0,
        });
        self.touching[from].push(id);
        self.touching[to].push(id);
        id
    }
}

/// Returns the antichain locals extracted from a minimum feasible flow.
fn solve_min_flow(p: &SubPoset<'_>, weights: &[u64]) -> Vec<usize> {
    let n = p.len();
    if n == 0 {
        return Vec::new();
    }
    // Node layout: in(v) = 2v, out(v) = 2v + 1, source = 2n, sink = 2n + 1.
    let source = 2 * n;
    let sink = 2 * n + 1;
    let mut net = FlowNetwork::new(2 * n + 2);
    let mut split = vec![0usize; n];
    let mut from_source = BTreeMap::new();
    let mut to_sink = BTreeMap::new();
    let mut cross = BTreeMap::new();
    for v in 0..n {
        split[v] = net.add(2 * v, 2 * v + 1, weights[v]);
    }
    for v in 0..n {
        if p.in_neighbors(v).is_empty() {
            from_source.insert(v, net.add(source, 2 * v, 0));
        }
        if p.out_neighbors(v).is_empty() {
            to_sink.insert(v, net.add(2 * v + 1, sink, 0));
        }
        for &u in p.out_neighbors(v) {
            cross.insert((v, u), net.add(2 * v + 1, 2 * u, 0));
        }
    }

    // Feasible flow: route w(v) along one maximal chain through v, found by
    // walking first in-neighbors down and first out-neighbors up.
    for (v, &weight) in weights.iter().enumerate() {
        if weight == 0 {
            continue;
        }
        let mut down = vec![v];
        while let Some(&u) = p.in_neighbors(*down.last().unwrap()).first() {
            down.push(u);
        }
        let mut up = vec![v];
        while let Some(&u) = p.out_neighbors(*up.last().unwrap()).first() {
            up.push(u);
        }
        let push = weight;
        net.arcs[from_source[down.last().unwrap()]].flow += push;
        for w in down.windows(2) {
            net.arcs[cross[&(w[1], w[0])]].flow += push;
        }
        for &x in down.iter() {
            net.arcs[split[x]].flow += push;
        }
        for &x in up.iter().skip(1) {
            net.arcs[split[x]].flow += push;
        }
        for w in up.windows(2) {
            net.arcs[cross[&(w[0], w[1])]].flow += push;
        }
        net.arcs[to_sink[up.last().unwrap()]].flow += push;
    }

    // Minimize: push along sink-to-source residual paths until none remain.
    // Forward residual = unbounded capacity; backward residual = flow above
    // the lower bound.
    while let Some(path) = residual_path(&net, sink, source) {
        let mut slack = u64::MAX;
        for &(arc, forward) in &path {
            if !forward {
                slack = slack.min(net.arcs[arc].flow - net.arcs[arc].low);
            }
        }
        debug_assert!(slack > 0 && slack < u64::MAX);
        for &(arc, forward) in &path {
            if forward {
                net.arcs[arc].flow += slack;
            } else {
                net.arcs[arc].flow -= slack;
            }
        }
    }

    // Final residual cut: take split arcs whose tail is cut off from the
    // sink side while their head is inside it.
    let reachable = residual_reachable(&net, sink);
    (0..n)
        .filter(|&v| !reachable[2 * v] && reachable[2 * v + 1])
        .collect()
}

/// BFS over the residual graph from `start`; returns the first path to
/// `goal` as (arc id, traversed forward) steps, if any.
fn residual_path(net: &FlowNetwork, start: usize, goal: usize) -> Option<Vec<(usize, bool)>> {
    let nodes = net.touching.len();
    let mut seen = vec![false; nodes];
    let mut via: Vec<Option<(usize, usize, bool)>> = vec![None; nodes];
    let mut queue = alloc::collections::VecDeque::new();
    seen[start] = true;
    queue.push_back(start);
    while let Some(node) = queue.pop_front() {
        if node == goal {
            let mut path = Vec::new();
            let mut cur = goal;
            while let Some((prev, arc, forward)) = via[cur] {
                path.push((arc, forward));
                cur = prev;
            }
            path.reverse();
            return Some(path);
        }
        for &arc_id in &net.touching[node] {
            let arc = &net.arcs[arc_id];
            if arc.from == node && !seen[arc.to] {
                seen[arc.to] = true;
                via[arc.to] = Some((node, arc_id, true));
                queue.push_back(arc.to);
            }
            if arc.to == node && arc.flow > arc.low && !seen[arc.from] {
                seen[arc.from] = true;
                via[arc.from] = Some((node, arc_id, false));
                queue.push_back(arc.from);
            }
        }
    }
    None
}

fn residual_reachable(net: &FlowNetwork, start: usize) -> Vec<bool> {
    let nodes = net.touching.len();
    let mut seen = vec![false; nodes];
    let mut queue = alloc::collections::VecDeque::new();
    seen[start] = true;
    queue.push_back(start);
    while let Some(node) = queue.pop_front() {
        for &arc_id in &net.touching[node] {
            let arc = &net.arcs[arc_id];
            if arc.from == node && !seen[arc.to] {
                seen[arc.to] = true;
                queue.push_back(arc.to);
            }
            if arc.to == node && arc.flow > arc.low && !seen[arc.from] {
                seen[arc.from] = true;
                queue.push_back(arc.from);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::ContainmentDigraph;
    use crate::matrix::BinaryMatrix;

    fn full_of(m: &BinaryMatrix) -> ContainmentDigraph {
        ContainmentDigraph::from_matrix(m).unwrap()
    }

    #[test]
    fn chain_picks_heaviest_vertex() {
        let m = BinaryMatrix::from_rows(&[&[1, 1, 1], &[0, 1, 1], &[0, 0, 1]]);
        let dig = full_of(&m);
        let p = SubPoset::full(&dig);
        let w: Vec<u64> = (0..p.len()).map(|v| p.weight(v)).collect();
        let a = max_weight_antichain(&p, &w);
        assert_eq!(a.vertices, alloc::vec![2]);
        assert_eq!(a.weight, 3);
    }

    #[test]
    fn vee_weighs_top_against_both_leaves() {
        // {r1}, {r2} below {r1,r2,r3}: top weighs 3, leaves together 2.
        let m = BinaryMatrix::from_rows(&[&[1, 0, 1], &[0, 1, 1], &[0, 0, 1]]);
        let dig = full_of(&m);
        let p = SubPoset::full(&dig);
        let w: Vec<u64> = (0..p.len()).map(|v| p.weight(v)).collect();
        let a = max_weight_antichain(&p, &w);
        assert_eq!(a.vertices, alloc::vec![2]);
        assert_eq!(a.weight, 3);
        // Under unit weights the two leaves win.
        let unit = alloc::vec![1u64; 3];
        let a = max_weight_antichain(&p, &unit);
        assert_eq!(a.vertices, alloc::vec![0, 1]);
        assert_eq!(a.weight, 2);
    }

    #[test]
    fn zero_weights_allow_empty_antichain() {
        let m = BinaryMatrix::from_rows(&[&[1, 0], &[0, 1]]);
        let dig = full_of(&m);
        let p = SubPoset::full(&dig);
        let a = max_weight_antichain(&p, &[0, 0]);
        assert_eq!(a.weight, 0);
    }

    #[test]
    fn maximum_variant_prefers_cardinality_then_weight() {
        // Vee again: the maximum antichain {leaf, leaf} has 2 vertices and
        // weight 2, even though the top alone weighs 3.
        let m = BinaryMatrix::from_rows(&[&[1, 0, 1], &[0, 1, 1], &[0, 0, 1]]);
        let dig = full_of(&m);
        let p = SubPoset::full(&dig);
        let w: Vec<u64> = (0..p.len()).map(|v| p.weight(v)).collect();
        let a = max_weight_maximum_antichain(&p, &w);
        assert_eq!(a.vertices, alloc::vec![0, 1]);
        assert_eq!(a.weight, 2);
    }

    #[test]
    fn result_is_always_an_antichain() {
        let m = BinaryMatrix::from_rows(&[
            &[1, 0, 1, 1],
            &[0, 1, 1, 1],
            &[0, 0, 1, 1],
            &[0, 0, 0, 1],
        ]);
        let dig = full_of(&m);
        let p = SubPoset::full(&dig);
        let w: Vec<u64> = (0..p.len()).map(|v| p.weight(v)).collect();
        let a = max_weight_antichain(&p, &w);
        assert!(p.is_antichain(&a.vertices));
        assert!(a.weight >= w.iter().copied().max().unwrap());
    }
}
