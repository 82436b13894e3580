//! Solvers for the minimum uncovering branching problem on binary matrices.
//!
//! A binary matrix is read column-wise: each column has a *support set*, the
//! set of rows where it carries a 1. Distinct nonempty supports ordered by
//! strict containment form a digraph (transitively closed by construction).
//! A *branching* picks at most one outgoing arc per vertex; a pair `(r, v)`
//! with row `r` in vertex `v` is *uncovered* when no chosen in-neighbor of
//! `v` contains `r`. The objective is a branching minimizing the number of
//! uncovered pairs.
//!
//! Module map:
//!
//! * [`rowset`], [`matrix`]: bit-vector row sets and matrix parsing.
//! * [`digraph`]: the containment digraph and induced sub-posets.
//! * [`bipartite`], [`chains`], [`antichain`]: matching and poset kernels.
//! * [`bounds`]: lower/upper bounds and the conflict-graph check.
//! * [`branching`]: branching validation and uncovered-pair accounting.
//! * [`solver`]: the exact solver (fast path for posets with as many
//!   maximal elements as their width, bounded-width search otherwise).
//! * [`oracle`]: small brute-force reference implementations for tests.
//!
//! The crate is `no_std` (with `alloc`) and has no runtime dependencies.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod antichain;
pub mod bipartite;
pub mod bounds;
pub mod branching;
pub mod chains;
pub mod digraph;
pub mod error;
pub mod matrix;
pub mod oracle;
pub mod rowset;
pub mod solver;

pub use bounds::{full_bounds_report, BoundsReport};
pub use branching::{Branching, UncoveredReport};
pub use digraph::{ContainmentDigraph, SubPoset};
pub use error::Error;
pub use matrix::BinaryMatrix;
pub use rowset::RowSet;
pub use solver::{solve, Solution, SolveConfig, SolveMethod};
