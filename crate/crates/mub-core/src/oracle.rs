//! Brute-force reference implementations for testing.
//!
//! Everything here works from first definitions (set containment, row
//! membership, per-vertex arc choices) and deliberately avoids the
//! matching, flow and search machinery of the production paths, so the two
//! can certify each other. All entry points refuse instances above fixed
//! size guards.

use alloc::vec;
use alloc::vec::Vec;

use crate::digraph::SubPoset;
use crate::error::Error;

const MAX_MAXIMAL_BRANCHINGS: u128 = 10_000_000;
const MAX_ANTICHAIN_VERTICES: usize = 20;
const MAX_CHROMATIC_VERTICES: usize = 12;
const MAX_LINEAR_VERTICES: usize = 8;

/// Number of maximal branchings: every vertex with outgoing arcs picks
/// exactly one, independently.
pub fn maximal_branching_count(p: &SubPoset<'_>) -> u128 {
    (0..p.len())
        .map(|v| p.out_neighbors(v).len().max(1) as u128)
        .product()
}

/// Callback receiving one branching at a time as (tail, head) arc pairs.
pub type ArcVisitor<'a> = dyn FnMut(&[(usize, usize)]) + 'a;

/// Calls `visit` with every maximal branching of the sub-poset, as local
/// arcs ascending by tail. The caller is responsible for guarding size.
pub fn for_each_maximal_branching(p: &SubPoset<'_>, visit: &mut ArcVisitor<'_>) {
    let choosers: Vec<usize> = (0..p.len())
        .filter(|&v| !p.out_neighbors(v).is_empty())
        .collect();
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(choosers.len());
    descend(p, &choosers, 0, &mut arcs, visit);
}

fn descend(
    p: &SubPoset<'_>,
    choosers: &[usize],
    depth: usize,
    arcs: &mut Vec<(usize, usize)>,
    visit: &mut ArcVisitor<'_>,
) {
    if depth == choosers.len() {
        visit(arcs);
        return;
    }
    let v = choosers[depth];
    for &head in p.out_neighbors(v) {
        arcs.push((v, head));
        descend(p, choosers, depth + 1, arcs, visit);
        arcs.pop();
    }
}

/// Uncovered-pair count straight from the definition: a pair `(r, v)` is
/// uncovered when `r` lies in `v`'s support and in no chosen in-neighbor.
pub fn definitional_uncovered(p: &SubPoset<'_>, arcs: &[(usize, usize)]) -> u64 {
    let mut total = 0u64;
    for v in 0..p.len() {
        for r in p.support(v).iter() {
            let covered = arcs
                .iter()
                .any(|&(u, head)| head == v && p.support(u).contains(r));
            if !covered {
                total += 1;
            }
        }
    }
    total
}

#[derive(Clone, Debug)]
pub struct BruteBeta {
    pub beta: u64,
    /// All maximal branchings attaining the optimum, in enumeration order.
    pub optima: Vec<Vec<(usize, usize)>>,
}

/// Exact optimum by enumerating every maximal branching.
///
/// Restricting to maximal branchings is lossless: giving an idle vertex an
/// outgoing arc never changes any other vertex's in-neighborhood, so it
/// never uncovers anything (certified against
/// [`brute_beta_all_branchings`] in tests).
pub fn brute_beta(p: &SubPoset<'_>) -> Result<BruteBeta, Error> {
    let count = maximal_branching_count(p);
    if count > MAX_MAXIMAL_BRANCHINGS {
        return Err(Error::BruteGuard {
            what: "maximal branching enumeration",
            limit: MAX_MAXIMAL_BRANCHINGS,
            actual: count,
        });
    }
    let mut beta = u64::MAX;
    let mut optima: Vec<Vec<(usize, usize)>> = Vec::new();
    for_each_maximal_branching(p, &mut |arcs| {
        let total = definitional_uncovered(p, arcs);
        if total < beta {
            beta = total;
            optima.clear();
        }
        if total == beta {
            optima.push(arcs.to_vec());
        }
    });
    debug_assert!(beta < u64::MAX, "a poset always has at least one branching");
    Ok(BruteBeta { beta, optima })
}

/// Exact optimum over all branchings, maximal or not. Exists only to
/// certify the maximality restriction; the guard is tighter because every
/// vertex has an extra "no arc" choice.
pub fn brute_beta_all_branchings(p: &SubPoset<'_>) -> Result<u64, Error> {
    let count: u128 = (0..p.len())
        .map(|v| p.out_neighbors(v).len() as u128 + 1)
        .product();
    if count > MAX_MAXIMAL_BRANCHINGS {
        return Err(Error::BruteGuard {
            what: "full branching enumeration",
            limit: MAX_MAXIMAL_BRANCHINGS,
            actual: count,
        });
    }
    let mut best = u64::MAX;
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    descend_optional(p, 0, &mut arcs, &mut best);
    Ok(best)
}

fn descend_optional(p: &SubPoset<'_>, v: usize, arcs: &mut Vec<(usize, usize)>, best: &mut u64) {
    if v == p.len() {
        *best = (*best).min(definitional_uncovered(p, arcs));
        return;
    }
    descend_optional(p, v + 1, arcs, best);
    for &head in p.out_neighbors(v) {
        arcs.push((v, head));
        descend_optional(p, v + 1, arcs, best);
        arcs.pop();
    }
}

#[derive(Clone, Debug)]
pub struct BruteAntichains {
    pub max_weight: u64,
    pub max_weight_witness: Vec<usize>,
    /// Maximum cardinality (the width) and the best weight among
    /// antichains of that cardinality.
    pub max_cardinality: usize,
    pub max_cardinality_best_weight: u64,
    pub max_cardinality_witness: Vec<usize>,
}

/// Scans all vertex subsets for antichains.
pub fn brute_antichains(p: &SubPoset<'_>, weights: &[u64]) -> Result<BruteAntichains, Error> {
    assert_eq!(weights.len(), p.len());
    let n = p.len();
    if n > MAX_ANTICHAIN_VERTICES {
        return Err(Error::BruteGuard {
            what: "antichain subset scan",
            limit: MAX_ANTICHAIN_VERTICES as u128,
            actual: n as u128,
        });
    }
    let mut best = BruteAntichains {
        max_weight: 0,
        max_weight_witness: Vec::new(),
        max_cardinality: 0,
        max_cardinality_best_weight: 0,
        max_cardinality_witness: Vec::new(),
    };
    for mask in 0u32..1u32 << n {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if !p.is_antichain(&members) {
            continue;
        }
        let weight: u64 = members.iter().map(|&v| weights[v]).sum();
        if weight > best.max_weight {
            best.max_weight = weight;
            best.max_weight_witness = members.clone();
        }
        if members.len() > best.max_cardinality
            || (members.len() == best.max_cardinality && weight > best.max_cardinality_best_weight)
        {
            best.max_cardinality = members.len();
            best.max_cardinality_best_weight = weight;
            best.max_cardinality_witness = members;
        }
    }
    Ok(best)
}

/// Chromatic number by backtracking. Vertex `v` may only use colors up to
/// one past the highest color used before it, which prunes color
/// permutations.
pub fn brute_chromatic(n: usize, edges: &[(usize, usize)]) -> Result<usize, Error> {
    if n > MAX_CHROMATIC_VERTICES {
        return Err(Error::BruteGuard {
            what: "graph coloring",
            limit: MAX_CHROMATIC_VERTICES as u128,
            actual: n as u128,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        assert!(a < n && b < n && a != b, "bad edge ({a}, {b})");
        adj[a].push(b);
        adj[b].push(a);
    }
    for k in 1..=n {
        let mut colors = vec![usize::MAX; n];
        if color(&adj, &mut colors, 0, k) {
            return Ok(k);
        }
    }
    unreachable!("n colors always suffice")
}

fn color(adj: &[Vec<usize>], colors: &mut [usize], v: usize, k: usize) -> bool {
    if v == colors.len() {
        return true;
    }
    let used_before = colors[..v].iter().copied().max().map_or(0, |m| m + 1);
    for c in 0..k.min(used_before + 1) {
        if adj[v].iter().all(|&u| colors[u] != c) {
            colors[v] = c;
            if color(adj, colors, v + 1, k) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}

/// Exact optimum over linear branchings (out-degree and in-degree at most
/// one) by assigning each vertex a successor or none, heads used at most
/// once.
pub fn brute_beta_linear(p: &SubPoset<'_>) -> Result<u64, Error> {
    let n = p.len();
    if n > MAX_LINEAR_VERTICES {
        return Err(Error::BruteGuard {
            what: "linear branching enumeration",
            limit: MAX_LINEAR_VERTICES as u128,
            actual: n as u128,
        });
    }
    let mut best = u64::MAX;
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    let mut used_head = vec![false; n];
    descend_linear(p, 0, &mut arcs, &mut used_head, &mut best);
    Ok(best)
}

fn descend_linear(
    p: &SubPoset<'_>,
    v: usize,
    arcs: &mut Vec<(usize, usize)>,
    used_head: &mut [bool],
    best: &mut u64,
) {
    if v == p.len() {
        *best = (*best).min(definitional_uncovered(p, arcs));
        return;
    }
    descend_linear(p, v + 1, arcs, used_head, best);
    for &head in p.out_neighbors(v) {
        if used_head[head] {
            continue;
        }
        used_head[head] = true;
        arcs.push((v, head));
        descend_linear(p, v + 1, arcs, used_head, best);
        arcs.pop();
        used_head[head] = false;
    }
}
