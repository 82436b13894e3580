//! Exact minimization of uncovered pairs.
//!
//! Fast path: when the digraph has as many sinks as its width, a minimum
//! chain partition is an optimal branching outright and the optimum is the
//! total weight of the sinks.
//!
//! General path: restrict attention to the *top poset*, the sub-poset
//! induced by a maximum antichain `N` of maximum total weight together
//! with everything above it. `N` is exactly the minimal-vertex set there,
//! and an optimal branching of the top poset extends to an optimal
//! branching of the whole digraph by partitioning the rest into `|N|`
//! chains below `N` (each chain telescopes, contributing nothing beyond
//! the `N` weight the top count already includes).
//!
//! On the top poset every maximal branching is determined up to a linear
//! completion by its set of in-stars (vertices of in-degree two or more,
//! with their chosen sources), and the uncovered count depends only on
//! that set. Star sets are small (sizes bounded by the width), so for a
//! width-bounded poset the search enumerates star sets, checks each for a
//! linear completion by a perfect-matching test, and keeps the cheapest.

use alloc::vec;
use alloc::vec::Vec;

use crate::antichain::max_weight_maximum_antichain;
use crate::bipartite::{max_bipartite_matching, BipartiteGraph};
use crate::branching::{uncovered_pairs, Branching, UncoveredReport};
use crate::chains::{min_chain_partition, width};
use crate::digraph::{ContainmentDigraph, SubPoset};
use crate::error::Error;
use crate::rowset::RowSet;

pub const DEFAULT_MAX_WIDTH: usize = 5;

#[derive(Clone, Debug)]
pub struct SolveConfig {
    /// Width guard for the general path; the star-set search is
    /// exponential in the width. The fast path ignores this.
    pub max_width: usize,
    /// Skip star sets violating the arc-count balance of maximal
    /// branchings whose leaves are the minimal vertices. Sound (see
    /// [`enumerate_star_sets`]); switchable for differential testing.
    pub prune_by_balance: bool,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self {
            max_width: DEFAULT_MAX_WIDTH,
            prune_by_balance: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveMethod {
    /// Sink count equals width; chain partition is optimal.
    ManyMaximal,
    /// Star-set search over the top poset.
    BoundedWidth { guesses: u64, completions: u64 },
}

/// How the digraph was split around the chosen antichain (digraph ids).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionSummary {
    pub antichain: Vec<usize>,
    pub below: Vec<usize>,
    pub above: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub beta: u64,
    pub branching: Branching,
    pub uncovered: UncoveredReport,
    pub method: SolveMethod,
    pub reduction: Option<ReductionSummary>,
}

/// Exact solve. Errors only with [`Error::WidthGuard`] when the general
/// path would search a poset wider than `config.max_width`.
pub fn solve(dig: &ContainmentDigraph, config: &SolveConfig) -> Result<Solution, Error> {
    if let Some(solution) = solve_many_maximal(dig) {
        return Ok(solution);
    }
    let full = SubPoset::full(dig);
    let w = width(&full);
    if w > config.max_width {
        return Err(Error::WidthGuard {
            width: w,
            max_width: config.max_width,
        });
    }
    let reduction = top_reduction(dig);
    let mut best: Option<(u64, Vec<(usize, usize)>)> = None;
    let mut guesses = 0u64;
    let mut completions = 0u64;
    enumerate_star_sets(&reduction.top, config.prune_by_balance, &mut |stars| {
        guesses += 1;
        if let Some((value, arcs)) = evaluate_star_set(&reduction.top, stars) {
            completions += 1;
            if best.as_ref().is_none_or(|(b, _)| value < *b) {
                best = Some((value, arcs));
            }
        }
    });
    let (opt, top_arcs) = best.expect("some star set always admits a linear completion");
    Ok(assemble_solution(
        dig,
        &reduction,
        &top_arcs,
        opt,
        SolveMethod::BoundedWidth {
            guesses,
            completions,
        },
    ))
}

/// Fast path: with as many sinks as the width, every bound collapses and a
/// minimum chain partition is an optimal branching (it is linear, each
/// chain telescopes to its sink's weight, and the sink weights already
/// equal the antichain lower bound).
pub fn solve_many_maximal(dig: &ContainmentDigraph) -> Option<Solution> {
    let full = SubPoset::full(dig);
    let partition = min_chain_partition(&full);
    let sinks = dig.sinks();
    if sinks.len() != partition.num_chains() {
        return None;
    }
    debug_assert_eq!(partition.tops(), sinks, "chain tops must be the sinks");
    let beta: u64 = sinks.iter().map(|&v| dig.weight(v)).sum();
    // Local ids equal digraph ids on the full sub-poset.
    let branching = Branching::new(partition.arcs());
    let uncovered = uncovered_pairs(dig, &branching).expect("chain arcs are containment arcs");
    assert_eq!(uncovered.total, beta, "chain partition must telescope to the sink weights");
    Some(Solution {
        beta,
        branching,
        uncovered,
        method: SolveMethod::ManyMaximal,
        reduction: None,
    })
}

/// The reduced instance of the general path.
#[derive(Clone, Debug)]
pub struct TopReduction<'a> {
    /// Maximum antichain of maximum weight (digraph ids, ascending).
    pub antichain: Vec<usize>,
    /// Vertices strictly below some antichain element.
    pub below: Vec<usize>,
    /// Vertices strictly above some antichain element.
    pub above: Vec<usize>,
    /// Sub-poset on `antichain + above`; its minimal vertices are exactly
    /// the antichain.
    pub top: SubPoset<'a>,
}

impl TopReduction<'_> {
    pub fn summary(&self) -> ReductionSummary {
        ReductionSummary {
            antichain: self.antichain.clone(),
            below: self.below.clone(),
            above: self.above.clone(),
        }
    }
}

pub fn top_reduction(dig: &ContainmentDigraph) -> TopReduction<'_> {
    let full = SubPoset::full(dig);
    let weights: Vec<u64> = (0..dig.len()).map(|v| dig.weight(v)).collect();
    let antichain = max_weight_maximum_antichain(&full, &weights).vertices;
    let mut in_antichain = vec![false; dig.len()];
    for &v in &antichain {
        in_antichain[v] = true;
    }
    let mut below = Vec::new();
    let mut above = Vec::new();
    for (v, &skip) in in_antichain.iter().enumerate() {
        if skip {
            continue;
        }
        if antichain.iter().any(|&n| dig.is_arc(v, n)) {
            below.push(v);
        } else if antichain.iter().any(|&n| dig.is_arc(n, v)) {
            above.push(v);
        } else {
            unreachable!("a maximum antichain is maximal: vertex {v} is comparable to it");
        }
    }
    let mut members: Vec<usize> = antichain.iter().chain(above.iter()).copied().collect();
    members.sort_unstable();
    let top = SubPoset::new(dig, members);
    debug_assert_eq!(
        top.minimal().iter().map(|&l| top.parent_id(l)).collect::<Vec<_>>(),
        antichain
    );
    TopReduction {
        antichain,
        below,
        above,
        top,
    }
}

/// An in-star: a center together with at least two of its in-neighbors.
/// Ids are local to the sub-poset the star was enumerated on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InStar {
    pub center: usize,
    pub sources: Vec<usize>,
}

/// A set of pairwise independent in-stars: centers distinct, source sets
/// disjoint. (A vertex may be one star's center and another's source; two
/// stars can never use each other's centers as sources both ways, as that
/// would need containment in both directions.)
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct InStarSet {
    pub stars: Vec<InStar>,
}

impl InStarSet {
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs: Vec<(usize, usize)> = self
            .stars
            .iter()
            .flat_map(|s| s.sources.iter().map(|&x| (x, s.center)))
            .collect();
        arcs.sort_unstable();
        arcs
    }

    pub fn centers(&self) -> Vec<usize> {
        self.stars.iter().map(|s| s.center).collect()
    }

    pub fn source_union(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self
            .stars
            .iter()
            .flat_map(|s| s.sources.iter().copied())
            .collect();
        all.sort_unstable();
        all
    }
}

/// Enumerates candidate star sets on `p`, deterministically: centers
/// ascending, star sizes ascending, source combinations in lexicographic
/// order. Star count and sizes are bounded by the width.
///
/// With `prune_by_balance`, only sets whose arc surplus matches the poset
/// are visited: a maximal branching has `|V| - |max|` arcs, and counting
/// those arcs by head gives `leaves = |max| + sum(p_i - 1)`; when the
/// leaves must be the minimal vertices of a top poset (`width` many), any
/// candidate with `sum(p_i - 1) != width - |max|` is uncompletable, so
/// skipping it cannot change the optimum. Without pruning, every set with
/// at most `width` stars of sizes `2..=width` is visited (the empty set
/// included).
pub fn enumerate_star_sets(
    p: &SubPoset<'_>,
    prune_by_balance: bool,
    visit: &mut dyn FnMut(&InStarSet),
) {
    let k = width(p);
    let surplus_target = k - p.maximal().len();
    let mut state = EnumState {
        set: InStarSet::default(),
        source_used: vec![false; p.len()],
        surplus: 0,
    };
    if !prune_by_balance || surplus_target == 0 {
        visit(&state.set);
    }
    if k >= 2 {
        extend_star_sets(p, k, prune_by_balance.then_some(surplus_target), 0, &mut state, visit);
    }
}

struct EnumState {
    set: InStarSet,
    source_used: Vec<bool>,
    surplus: usize,
}

fn extend_star_sets(
    p: &SubPoset<'_>,
    k: usize,
    target: Option<usize>,
    min_center: usize,
    state: &mut EnumState,
    visit: &mut dyn FnMut(&InStarSet),
) {
    if state.set.stars.len() == k {
        return;
    }
    for center in min_center..p.len() {
        let available: Vec<usize> = p
            .in_neighbors(center)
            .iter()
            .copied()
            .filter(|&u| !state.source_used[u])
            .collect();
        for size in 2..=k.min(available.len()) {
            let surplus = state.surplus + size - 1;
            if let Some(t) = target {
                if surplus > t {
                    break;
                }
            }
            for_each_combination(&available, size, &mut |sources| {
                state.set.stars.push(InStar {
                    center,
                    sources: sources.to_vec(),
                });
                for &x in sources {
                    state.source_used[x] = true;
                }
                let old_surplus = state.surplus;
                state.surplus = surplus;
                match target {
                    Some(t) => {
                        if surplus == t {
                            visit(&state.set);
                        } else {
                            extend_star_sets(p, k, target, center + 1, state, visit);
                        }
                    }
                    None => {
                        visit(&state.set);
                        extend_star_sets(p, k, target, center + 1, state, visit);
                    }
                }
                state.surplus = old_surplus;
                for &x in sources {
                    state.source_used[x] = false;
                }
                state.set.stars.pop();
            });
        }
    }
}

/// Lexicographic size-`size` combinations of `items`.
fn for_each_combination(items: &[usize], size: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(
        items: &[usize],
        size: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if chosen.len() == size {
            f(chosen);
            return;
        }
        let still_needed = size - chosen.len();
        for i in start..=items.len().saturating_sub(still_needed) {
            chosen.push(items[i]);
            rec(items, size, i + 1, chosen, f);
            chosen.pop();
        }
    }
    if size > items.len() {
        return;
    }
    let mut chosen = Vec::with_capacity(size);
    rec(items, size, 0, &mut chosen, f);
}

/// The bipartite completion test for a star set: left side lists vertices
/// still needing an outgoing arc (everything except star sources and
/// maximal vertices), right side those still accepting an incoming arc
/// (everything except centers and minimal vertices), edges are poset arcs.
/// Returns the graph plus both side's local vertex ids.
pub fn completion_graph(
    p: &SubPoset<'_>,
    stars: &InStarSet,
) -> (BipartiteGraph, Vec<usize>, Vec<usize>) {
    let n = p.len();
    let mut excluded_left = vec![false; n];
    let mut excluded_right = vec![false; n];
    for star in &stars.stars {
        excluded_right[star.center] = true;
        for &x in &star.sources {
            excluded_left[x] = true;
        }
    }
    let left: Vec<usize> = (0..n)
        .filter(|&v| !excluded_left[v] && !p.out_neighbors(v).is_empty())
        .collect();
    let right: Vec<usize> = (0..n)
        .filter(|&v| !excluded_right[v] && !p.in_neighbors(v).is_empty())
        .collect();
    let mut right_index = vec![usize::MAX; n];
    for (i, &v) in right.iter().enumerate() {
        right_index[v] = i;
    }
    let mut g = BipartiteGraph::new(left.len(), right.len());
    for (i, &u) in left.iter().enumerate() {
        for &v in p.out_neighbors(u) {
            if right_index[v] != usize::MAX {
                g.add_edge(i, right_index[v], 1);
            }
        }
    }
    (g, left, right)
}

/// Extends a star set to a full maximal branching of `p` whose leaves are
/// exactly the minimal vertices, if possible: the completion exists
/// precisely when the completion graph has a perfect matching.
pub fn linear_completion(p: &SubPoset<'_>, stars: &InStarSet) -> Option<Vec<(usize, usize)>> {
    let (g, left, right) = completion_graph(p, stars);
    if left.len() != right.len() {
        return None;
    }
    let m = max_bipartite_matching(&g);
    if m.size() != left.len() {
        return None;
    }
    let mut arcs = stars.arcs();
    arcs.extend(m.pairs().into_iter().map(|(l, r)| (left[l], right[r])));
    arcs.sort_unstable();
    Some(arcs)
}

/// Uncovered-pair total of an arc set within a sub-poset.
pub fn count_uncovered_local(p: &SubPoset<'_>, arcs: &[(usize, usize)]) -> u64 {
    let universe = p.digraph().num_rows();
    let mut total = 0u64;
    for v in 0..p.len() {
        let mut covered = RowSet::empty(universe);
        for &(u, head) in arcs {
            if head == v {
                covered.union_assign(p.support(u));
            }
        }
        total += p.support(v).difference_len(&covered) as u64;
    }
    total
}

/// Evaluates one star set: uncovered total and branching arcs of its
/// completion, or `None` when no completion exists. Distinct completions
/// of the same star set always cost the same, so any one represents it.
pub fn evaluate_star_set(
    p: &SubPoset<'_>,
    stars: &InStarSet,
) -> Option<(u64, Vec<(usize, usize)>)> {
    let arcs = linear_completion(p, stars)?;
    let value = count_uncovered_local(p, &arcs);
    Some((value, arcs))
}

/// Combines an optimal top-poset branching with a chain partition of the
/// remainder. The partition below the antichain has exactly `|antichain|`
/// chains topped by the antichain, so the chain arcs telescope and the
/// combined branching costs exactly the top-poset optimum.
pub fn assemble_solution(
    dig: &ContainmentDigraph,
    reduction: &TopReduction<'_>,
    top_arcs: &[(usize, usize)],
    opt: u64,
    method: SolveMethod,
) -> Solution {
    let mut arcs: Vec<(usize, usize)> = top_arcs
        .iter()
        .map(|&(u, v)| (reduction.top.parent_id(u), reduction.top.parent_id(v)))
        .collect();

    let mut lower_ids: Vec<usize> = reduction
        .below
        .iter()
        .chain(reduction.antichain.iter())
        .copied()
        .collect();
    lower_ids.sort_unstable();
    let lower = SubPoset::new(dig, lower_ids);
    let partition = min_chain_partition(&lower);
    assert_eq!(
        partition.num_chains(),
        reduction.antichain.len(),
        "the lower poset partitions into one chain per antichain element"
    );
    for chain in &partition.chains {
        let top_of_chain = lower.parent_id(*chain.last().unwrap());
        assert!(
            reduction.antichain.contains(&top_of_chain),
            "every chain must top out in the antichain"
        );
    }
    arcs.extend(
        partition
            .arcs()
            .into_iter()
            .map(|(u, v)| (lower.parent_id(u), lower.parent_id(v))),
    );

    let branching = Branching::new(arcs);
    let uncovered = uncovered_pairs(dig, &branching).expect("assembled arcs are containment arcs");
    assert_eq!(
        uncovered.total, opt,
        "extension must preserve the top-poset optimum"
    );
    Solution {
        beta: opt,
        branching,
        uncovered,
        method,
        reduction: Some(reduction.summary()),
    }
}
