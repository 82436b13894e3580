//! Lower and upper bounds on the optimum, and the conflict-graph check.
//!
//! For any matrix the chain
//!
//! ```text
//! alpha_w  <=  ww  <=  beta  <=  beta_linear
//! ```
//!
//! holds, where `alpha_w` is the maximum weight of an antichain (vertex
//! weight = support size), `ww` sums the widths of the principal
//! sub-posets of all rows, `beta` is the optimum, and `beta_linear` is the
//! optimum over branchings that are linear (in-degree at most one too).

use alloc::vec::Vec;

use crate::antichain::{max_weight_antichain, Antichain};
use crate::bipartite::{max_weight_bipartite_matching, BipartiteGraph};
use crate::branching::{uncovered_pairs, Branching};
use crate::chains::width;
use crate::digraph::{ContainmentDigraph, SubPoset};
use crate::error::Error;
use crate::matrix::BinaryMatrix;
use crate::oracle::brute_chromatic;

/// Sum of principal sub-poset widths, with the per-row breakdown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WwBound {
    pub total: u64,
    pub per_row: Vec<usize>,
}

/// `ww(M)`: row `r` contributes the width of the sub-poset of vertices
/// whose support contains `r`. Rows covered by no column contribute 0.
pub fn ww_bound(dig: &ContainmentDigraph) -> WwBound {
    let per_row: Vec<usize> = (0..dig.num_rows())
        .map(|r| {
            let p = dig
                .principal_subposet(r)
                .expect("row indices are in range by construction");
            width(&p)
        })
        .collect();
    let total = per_row.iter().map(|&w| w as u64).sum();
    WwBound { total, per_row }
}

/// `alpha_w(M)`: maximum total support size of an antichain. Vertex ids in
/// the witness are digraph ids.
pub fn alpha_w_bound(dig: &ContainmentDigraph) -> Antichain {
    let full = SubPoset::full(dig);
    let weights: Vec<u64> = (0..dig.len()).map(|v| dig.weight(v)).collect();
    max_weight_antichain(&full, &weights)
}

#[derive(Clone, Debug)]
pub struct LinearBound {
    pub value: u64,
    pub branching: Branching,
}

/// `beta_linear(M)`: exact optimum over linear branchings.
///
/// In a linear branching each covered vertex has exactly one in-neighbor,
/// so the uncovered count telescopes to `sum(|v|) - sum(|u| over arcs)`.
/// Choosing the arc set is then a maximum-weight bipartite matching: tails
/// on the left, heads on the right, arc `u -> v` weighted by `|u|`.
pub fn beta_linear(dig: &ContainmentDigraph) -> LinearBound {
    let n = dig.len();
    let mut g = BipartiteGraph::new(n, n);
    for (u, v) in dig.arcs() {
        g.add_edge(u, v, dig.weight(u));
    }
    let m = max_weight_bipartite_matching(&g);
    let total: u64 = (0..n).map(|v| dig.weight(v)).sum();
    let value = total - m.total_weight;
    let branching = Branching::new(m.pairs());
    debug_assert!(branching.is_linear());
    debug_assert_eq!(
        uncovered_pairs(dig, &branching).expect("matching arcs are containment arcs").total,
        value
    );
    LinearBound { value, branching }
}

/// The bound chain of one matrix, with witnesses.
#[derive(Clone, Debug)]
pub struct BoundsReport {
    pub alpha_w: u64,
    pub alpha_w_witness: Antichain,
    pub ww: u64,
    pub ww_per_row: Vec<usize>,
    pub beta_linear: u64,
    pub beta_linear_witness: Branching,
}

pub fn full_bounds_report(dig: &ContainmentDigraph) -> BoundsReport {
    let alpha = alpha_w_bound(dig);
    let ww = ww_bound(dig);
    let lin = beta_linear(dig);
    assert!(
        alpha.weight <= ww.total && ww.total <= lin.value,
        "bound chain violated: alpha_w={} ww={} beta_linear={}",
        alpha.weight,
        ww.total,
        lin.value
    );
    BoundsReport {
        alpha_w: alpha.weight,
        alpha_w_witness: alpha,
        ww: ww.total,
        ww_per_row: ww.per_row,
        beta_linear: lin.value,
        beta_linear_witness: lin.branching,
    }
}

/// The conflict graph of a row: vertices are the columns with a 1 in that
/// row, edges are conflicting pairs (overlapping, inclusion-incomparable
/// supports). Edge endpoints index into `columns`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictGraph {
    pub columns: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

pub fn conflict_graph(matrix: &BinaryMatrix, row: usize) -> Result<ConflictGraph, Error> {
    if row >= matrix.rows() {
        return Err(Error::RowOutOfRange {
            row,
            num_rows: matrix.rows(),
        });
    }
    let columns: Vec<usize> = (0..matrix.cols()).filter(|&c| matrix.get(row, c)).collect();
    let supports: Vec<_> = columns.iter().map(|&c| matrix.support_set(c)).collect();
    let mut edges = Vec::new();
    for i in 0..columns.len() {
        for j in i + 1..columns.len() {
            let (a, b) = (&supports[i], &supports[j]);
            // Overlap is implied: both supports contain `row`.
            if !a.is_subset(b) && !b.is_subset(a) {
                edges.push((i, j));
            }
        }
    }
    Ok(ConflictGraph { columns, edges })
}

/// Certifies on one row that the chromatic number of the conflict graph
/// equals the width of the principal sub-poset. Returns `(chromatic,
/// width)`; refuses conflict graphs above 12 vertices (exact coloring is
/// exponential).
pub fn chromatic_equals_width_check(
    matrix: &BinaryMatrix,
    row: usize,
) -> Result<(usize, usize), Error> {
    let cg = conflict_graph(matrix, row)?;
    let chromatic = brute_chromatic(cg.columns.len(), &cg.edges)?;
    let dig = ContainmentDigraph::from_matrix(matrix)?;
    let principal = dig.principal_subposet(row)?;
    let w = width(&principal);
    assert_eq!(
        chromatic, w,
        "conflict-graph coloring must match principal width"
    );
    Ok((chromatic, w))
}
