//! Branchings of the containment digraph and uncovered-pair accounting.
//!
//! A branching is an arc subset giving every vertex out-degree at most one.
//! For a vertex `v`, a row `r` of its support is *covered* when some chosen
//! in-neighbor of `v` contains `r`; the pair `(r, v)` is *uncovered*
//! otherwise. The solver minimizes the total number of uncovered pairs.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::digraph::ContainmentDigraph;
use crate::error::Error;
use crate::rowset::RowSet;

/// An arc subset, stored sorted and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branching {
    arcs: Vec<(usize, usize)>,
}

impl Branching {
    pub fn new(mut arcs: Vec<(usize, usize)>) -> Self {
        arcs.sort_unstable();
        arcs.dedup();
        Self { arcs }
    }

    pub fn empty() -> Self {
        Self { arcs: Vec::new() }
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Whether every vertex also has in-degree at most one.
    pub fn is_linear(&self) -> bool {
        let mut heads: Vec<usize> = self.arcs.iter().map(|&(_, v)| v).collect();
        heads.sort_unstable();
        heads.windows(2).all(|w| w[0] != w[1])
    }

    /// Vertices of `dig` with no outgoing arc in this branching (isolated
    /// vertices included).
    pub fn branching_maximal(&self, dig: &ContainmentDigraph) -> Vec<usize> {
        let mut has_out = vec![false; dig.len()];
        for &(u, _) in &self.arcs {
            if u < dig.len() {
                has_out[u] = true;
            }
        }
        (0..dig.len()).filter(|&v| !has_out[v]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BranchingIssue {
    VertexOutOfRange { vertex: usize },
    ArcNotInDigraph { from: usize, to: usize },
    OutDegreeExceeded { vertex: usize, degree: usize },
    /// Only reported when maximality is requested: the vertex has an
    /// outgoing arc in the digraph but none in the branching.
    NotMaximal { vertex: usize },
}

impl fmt::Display for BranchingIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BranchingIssue::VertexOutOfRange { vertex } => {
                write!(f, "vertex {vertex} out of range")
            }
            BranchingIssue::ArcNotInDigraph { from, to } => {
                write!(f, "arc {from} -> {to} is not a containment arc")
            }
            BranchingIssue::OutDegreeExceeded { vertex, degree } => {
                write!(f, "out-degree violation: vertex {vertex} has {degree} outgoing arcs")
            }
            BranchingIssue::NotMaximal { vertex } => {
                write!(f, "not maximal: vertex {vertex} could pick an outgoing arc")
            }
        }
    }
}

/// Validates a branching against a digraph. Returns every issue found, in
/// ascending vertex order per category; an empty list means valid.
pub fn verify_branching(
    dig: &ContainmentDigraph,
    branching: &Branching,
    require_maximal: bool,
) -> Vec<BranchingIssue> {
    let n = dig.len();
    let mut issues = Vec::new();
    let mut out_degree = vec![0usize; n];
    for &(u, v) in branching.arcs() {
        if u >= n || v >= n {
            issues.push(BranchingIssue::VertexOutOfRange {
                vertex: if u >= n { u } else { v },
            });
            continue;
        }
        if !dig.is_arc(u, v) {
            issues.push(BranchingIssue::ArcNotInDigraph { from: u, to: v });
            continue;
        }
        out_degree[u] += 1;
    }
    for (v, &d) in out_degree.iter().enumerate() {
        if d > 1 {
            issues.push(BranchingIssue::OutDegreeExceeded { vertex: v, degree: d });
        }
    }
    if require_maximal && issues.is_empty() {
        for (v, &d) in out_degree.iter().enumerate() {
            if d == 0 && !dig.out_neighbors(v).is_empty() {
                issues.push(BranchingIssue::NotMaximal { vertex: v });
            }
        }
    }
    issues
}

/// Uncovered pairs of a branching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UncoveredReport {
    /// Pairs `(row, vertex)`, ascending by vertex then row.
    pub pairs: Vec<(usize, usize)>,
    /// Uncovered count per vertex.
    pub per_vertex: Vec<u64>,
    pub total: u64,
}

/// Counts uncovered pairs. The branching must be valid (maximality is not
/// required); otherwise the issues are returned as an error.
pub fn uncovered_pairs(
    dig: &ContainmentDigraph,
    branching: &Branching,
) -> Result<UncoveredReport, Error> {
    let issues = verify_branching(dig, branching, false);
    if !issues.is_empty() {
        return Err(Error::InvalidBranching { issues });
    }
    let n = dig.len();
    let mut chosen_in: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in branching.arcs() {
        chosen_in[v].push(u);
    }
    let mut pairs = Vec::new();
    let mut per_vertex = vec![0u64; n];
    for v in 0..n {
        let mut covered = RowSet::empty(dig.num_rows());
        for &u in &chosen_in[v] {
            covered.union_assign(dig.support(u));
        }
        for r in dig.support(v).iter() {
            if !covered.contains(r) {
                pairs.push((r, v));
                per_vertex[v] += 1;
            }
        }
    }
    let total = per_vertex.iter().sum();
    Ok(UncoveredReport {
        pairs,
        per_vertex,
        total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::BinaryMatrix;

    fn e1_digraph() -> ContainmentDigraph {
        let m = BinaryMatrix::from_rows(&[&[1, 0, 1], &[0, 1, 1], &[0, 0, 1]]);
        ContainmentDigraph::from_matrix(&m).unwrap()
    }

    #[test]
    fn empty_branching_leaves_every_pair_uncovered() {
        let dig = e1_digraph();
        let report = uncovered_pairs(&dig, &Branching::empty()).unwrap();
        assert_eq!(report.total, 5);
        assert_eq!(report.per_vertex, vec![1, 1, 3]);
    }

    #[test]
    fn both_leaves_cover_two_rows_of_the_top() {
        let dig = e1_digraph();
        let b = Branching::new(vec![(0, 2), (1, 2)]);
        let report = uncovered_pairs(&dig, &b).unwrap();
        assert_eq!(report.total, 3);
        assert_eq!(report.per_vertex, vec![1, 1, 1]);
        assert_eq!(report.pairs, vec![(0, 0), (1, 1), (2, 2)]);
        assert!(!b.is_linear());
        assert_eq!(b.branching_maximal(&dig), vec![2]);
    }

    #[test]
    fn single_leaf_covers_one_row() {
        let dig = e1_digraph();
        let b = Branching::new(vec![(0, 2)]);
        let report = uncovered_pairs(&dig, &b).unwrap();
        assert_eq!(report.total, 4);
        assert!(b.is_linear());
    }

    #[test]
    fn rejects_out_degree_two() {
        // Chain digraph: vertex 0 has two outgoing containment arcs.
        let m = BinaryMatrix::from_rows(&[&[1, 1, 1], &[0, 1, 1], &[0, 0, 1]]);
        let dig = ContainmentDigraph::from_matrix(&m).unwrap();
        let b = Branching::new(vec![(0, 1), (0, 2)]);
        let issues = verify_branching(&dig, &b, false);
        assert_eq!(
            issues,
            vec![BranchingIssue::OutDegreeExceeded { vertex: 0, degree: 2 }]
        );
        assert!(uncovered_pairs(&dig, &b).is_err());
    }

    #[test]
    fn rejects_non_containment_arcs_and_bad_ids() {
        let dig = e1_digraph();
        let issues = verify_branching(&dig, &Branching::new(vec![(2, 0)]), false);
        assert_eq!(issues, vec![BranchingIssue::ArcNotInDigraph { from: 2, to: 0 }]);
        let issues = verify_branching(&dig, &Branching::new(vec![(0, 9)]), false);
        assert_eq!(issues, vec![BranchingIssue::VertexOutOfRange { vertex: 9 }]);
    }

    #[test]
    fn maximality_check_flags_idle_vertices() {
        let dig = e1_digraph();
        let issues = verify_branching(&dig, &Branching::new(vec![(0, 2)]), true);
        assert_eq!(issues, vec![BranchingIssue::NotMaximal { vertex: 1 }]);
        let issues = verify_branching(&dig, &Branching::new(vec![(0, 2), (1, 2)]), true);
        assert!(issues.is_empty());
    }

    #[test]
    fn duplicate_arcs_collapse() {
        let b = Branching::new(vec![(1, 2), (0, 2), (1, 2)]);
        assert_eq!(b.arcs(), &[(0, 2), (1, 2)]);
    }
}
