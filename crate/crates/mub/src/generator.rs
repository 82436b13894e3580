//! Reproducible random instances. The generator is pinned to ChaCha8 with
//! a 64-bit seed and row-major Bernoulli draws, and every output names its
//! parameters in the header, so a file can be regenerated from its own
//! first lines.

use anyhow::{ensure, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt::Write;

pub fn generate(rows: usize, cols: usize, density: f64, seed: u64) -> Result<String> {
    ensure!(rows >= 1, "rows must be at least 1, got {rows}");
    ensure!(cols >= 1, "cols must be at least 1, got {cols}");
    ensure!(
        density > 0.0 && density < 1.0,
        "density must lie strictly between 0 and 1, got {density}"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = String::new();
    let _ = writeln!(out, "# random binary matrix");
    let _ = writeln!(out, "# rows: {rows}");
    let _ = writeln!(out, "# cols: {cols}");
    let _ = writeln!(out, "# density: {density}");
    let _ = writeln!(out, "# seed: {seed}");
    let _ = writeln!(out, "# rng: chacha8, 64-bit seed, row-major Bernoulli draws");
    for _ in 0..rows {
        let mut line = String::with_capacity(2 * cols);
        for c in 0..cols {
            if c > 0 {
                line.push(' ');
            }
            line.push(if rng.random_bool(density) { '1' } else { '0' });
        }
        let _ = writeln!(out, "{line}");
    }
    Ok(out)
}
