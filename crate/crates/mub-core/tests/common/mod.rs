//! Shared helpers for the integration test suites.

use mub_core::{BinaryMatrix, ContainmentDigraph};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Seeded random matrix with dimensions drawn from `1..=max_rows` and
/// `1..=max_cols`.
pub fn random_matrix(seed: u64, max_rows: usize, max_cols: usize, density: f64) -> BinaryMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = rng.random_range(1..=max_rows);
    let cols = rng.random_range(1..=max_cols);
    let entries = (0..rows * cols).map(|_| rng.random_bool(density)).collect();
    BinaryMatrix::new(rows, cols, entries).expect("dimensions are valid")
}

/// Builds the digraph, skipping matrices whose columns are all zero.
pub fn digraph_of(matrix: &BinaryMatrix) -> Option<ContainmentDigraph> {
    ContainmentDigraph::from_matrix(matrix).ok()
}

/// Random weights in `0..=10`, one per vertex. Not every suite sharing
/// this module needs weights.
#[allow(dead_code)]
pub fn random_weights(seed: u64, n: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0123_4567_89ab);
    (0..n).map(|_| rng.random_range(0..=10)).collect()
}
