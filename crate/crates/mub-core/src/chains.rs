//! Minimum chain partitions and poset width.
//!
//! The classic reduction: split every vertex into a tail copy and a head
//! copy, add an edge per arc, and take a maximum matching. Matched arcs
//! link consecutive chain elements, so the partition has `n - |matching|`
//! chains, which is minimum; by Dilworth's theorem on transitively closed
//! digraphs that count is the width.

use alloc::vec::Vec;

use crate::bipartite::{max_bipartite_matching, BipartiteGraph};
use crate::digraph::SubPoset;

/// A partition of a sub-poset's local vertices into chains. Each chain is
/// ascending (consecutive elements are arcs); chains are listed in order
/// of their first element.
#[derive(Clone, Debug)]
pub struct ChainPartition {
    pub chains: Vec<Vec<usize>>,
}

impl ChainPartition {
    pub fn num_chains(&self) -> usize {
        self.chains.len()
    }

    /// Last element of each chain, ascending.
    pub fn tops(&self) -> Vec<usize> {
        let mut tops: Vec<usize> = self
            .chains
            .iter()
            .map(|c| *c.last().expect("chains are nonempty"))
            .collect();
        tops.sort_unstable();
        tops
    }

    /// Consecutive-element arcs of all chains, ascending by tail.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs: Vec<(usize, usize)> = self
            .chains
            .iter()
            .flat_map(|c| c.windows(2).map(|w| (w[0], w[1])))
            .collect();
        arcs.sort_unstable();
        arcs
    }
}

pub fn min_chain_partition(p: &SubPoset<'_>) -> ChainPartition {
    let n = p.len();
    let mut g = BipartiteGraph::new(n, n);
    for u in 0..n {
        for &v in p.out_neighbors(u) {
            g.add_edge(u, v, 1);
        }
    }
    let m = max_bipartite_matching(&g);
    // A vertex unmatched on the right starts a chain; follow successors.
    let mut chains = Vec::with_capacity(n - m.size());
    for start in 0..n {
        if m.right_to_left[start].is_some() {
            continue;
        }
        let mut chain = alloc::vec![start];
        let mut cur = start;
        while let Some(next) = m.left_to_right[cur] {
            chain.push(next);
            cur = next;
        }
        chains.push(chain);
    }
    debug_assert_eq!(chains.iter().map(Vec::len).sum::<usize>(), n);
    ChainPartition { chains }
}

/// Poset width: the number of chains in a minimum chain partition.
pub fn width(p: &SubPoset<'_>) -> usize {
    min_chain_partition(p).num_chains()
}
