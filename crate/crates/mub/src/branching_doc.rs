//! On-disk branching format: a vertex table plus an arc list.
//!
//! The table pins the vertex numbering, so a document stays meaningful on
//! its own: vertex `i` is the support set `vertices[i]`, given as sorted
//! 1-based row numbers. Arcs refer to those ids. A document is only
//! accepted against a matrix whose containment digraph has exactly the
//! same table, which protects against id drift between tools.

use anyhow::{bail, Context, Result};
use mub_core::{Branching, ContainmentDigraph};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchingDoc {
    /// Support set of each vertex id, as ascending 1-based row numbers.
    pub vertices: Vec<Vec<usize>>,
    /// Branching arcs `[from, to]` between vertex ids.
    pub arcs: Vec<[usize; 2]>,
}

/// Ascending 1-based row numbers of every vertex support, in vertex order.
pub fn support_table(dig: &ContainmentDigraph) -> Vec<Vec<usize>> {
    (0..dig.len())
        .map(|v| dig.support(v).iter().map(|r| r + 1).collect())
        .collect()
}

impl BranchingDoc {
    pub fn from_branching(dig: &ContainmentDigraph, branching: &Branching) -> Self {
        BranchingDoc {
            vertices: support_table(dig),
            arcs: branching.arcs().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }

    /// Checks the vertex table against the digraph and returns the arc set.
    /// The arcs are not validated here; branching-level checks report
    /// richer diagnostics downstream.
    pub fn to_branching(&self, dig: &ContainmentDigraph) -> Result<Branching> {
        let expected = support_table(dig);
        if self.vertices != expected {
            bail!(
                "vertex table does not match the matrix: document lists {} vertices, \
                 the matrix has {} distinct supports{}",
                self.vertices.len(),
                expected.len(),
                first_table_mismatch(&self.vertices, &expected)
            );
        }
        Ok(Branching::new(
            self.arcs.iter().map(|&[u, v]| (u, v)).collect(),
        ))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).context("malformed branching JSON")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

fn first_table_mismatch(got: &[Vec<usize>], expected: &[Vec<usize>]) -> String {
    for (i, (g, e)) in got.iter().zip(expected.iter()).enumerate() {
        if g != e {
            return format!("; first mismatch at vertex {i}: document {g:?}, matrix {e:?}");
        }
    }
    String::new()
}
