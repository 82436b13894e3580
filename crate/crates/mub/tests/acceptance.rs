//! Acceptance gate: one test per shipped guarantee, each ending in a
//! single PASS line (run with `--nocapture` to see them). Failures panic
//! with a matching FAIL line. Counts and tolerances are pinned; every
//! numeric comparison here is exact.

use std::process::Command;
use std::time::Instant;

use mub_core::bipartite::BipartiteGraph;
use mub_core::bounds::{beta_linear, chromatic_equals_width_check, full_bounds_report};
use mub_core::branching::uncovered_pairs;
use mub_core::chains::width;
use mub_core::digraph::SubPoset;
use mub_core::oracle::{brute_antichains, brute_beta};
use mub_core::solver::{
    completion_graph, count_uncovered_local, enumerate_star_sets, evaluate_star_set,
    solve_many_maximal, top_reduction, InStarSet,
};
use mub_core::{solve, BinaryMatrix, ContainmentDigraph, SolveConfig};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

const DENSITIES: [f64; 3] = [0.3, 0.5, 0.7];

fn random_matrix(seed: u64, max_rows: usize, max_cols: usize, density: f64) -> BinaryMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = rng.random_range(1..=max_rows);
    let cols = rng.random_range(1..=max_cols);
    let entries = (0..rows * cols).map(|_| rng.random_bool(density)).collect();
    BinaryMatrix::new(rows, cols, entries).expect("dimensions are valid")
}

fn digraph_of(matrix: &BinaryMatrix) -> Option<ContainmentDigraph> {
    ContainmentDigraph::from_matrix(matrix).ok()
}

/// The reference instance stream: m <= 6, n <= 7, densities cycling
/// through {0.3, 0.5, 0.7}, first `count` seeds that yield a digraph.
fn instance_stream(base_seed: u64, count: usize) -> Vec<(u64, ContainmentDigraph)> {
    let mut out = Vec::with_capacity(count);
    let mut seed = base_seed;
    while out.len() < count {
        let density = DENSITIES[(seed % 3) as usize];
        let m = random_matrix(seed, 6, 7, density);
        if let Some(dig) = digraph_of(&m) {
            out.push((seed, dig));
        }
        seed += 1;
    }
    out
}

fn wide_config() -> SolveConfig {
    SolveConfig {
        max_width: 7,
        ..SolveConfig::default()
    }
}

#[test]
fn criterion_01_oracle_equivalence() {
    let started = Instant::now();
    let instances = instance_stream(0, 210);
    for (seed, dig) in &instances {
        let exact = solve(dig, &wide_config()).expect("n <= 7 bounds the width");
        let reference = brute_beta(&SubPoset::full(dig)).expect("desk-scale instance");
        assert_eq!(
            exact.beta, reference.beta,
            "criterion 01 FAIL: solver disagrees with the oracle on seed {seed}"
        );
    }
    let elapsed = started.elapsed();
    assert!(
        instances.len() >= 200,
        "criterion 01 FAIL: only {} instances",
        instances.len()
    );
    assert!(
        elapsed.as_secs() < 120,
        "criterion 01 FAIL: took {elapsed:?}, budget is two minutes"
    );
    println!(
        "criterion 01 PASS: solver equals brute-force beta on {} random instances in {:.1?}",
        instances.len(),
        elapsed
    );
}

#[test]
fn criterion_02_inequality_chain() {
    let instances = instance_stream(0, 210);
    for (seed, dig) in &instances {
        let bounds = full_bounds_report(dig);
        let solved = solve(dig, &wide_config()).unwrap().beta;
        let brute = brute_beta(&SubPoset::full(dig)).unwrap().beta;
        for beta in [solved, brute] {
            assert!(
                bounds.alpha_w <= bounds.ww
                    && bounds.ww <= beta
                    && beta <= bounds.beta_linear,
                "criterion 02 FAIL: chain broken on seed {seed}: \
                 alpha_w={} ww={} beta={beta} beta_linear={}",
                bounds.alpha_w,
                bounds.ww,
                bounds.beta_linear
            );
        }
    }
    println!(
        "criterion 02 PASS: alpha_w <= ww <= beta <= beta_linear on {} instances, \
         with beta from both the solver and the oracle",
        instances.len()
    );
}

#[test]
fn criterion_03_strictness_witness() {
    let m = BinaryMatrix::from_rows(&[&[1, 0, 1], &[0, 1, 1], &[0, 0, 1]]);
    let dig = ContainmentDigraph::from_matrix(&m).unwrap();
    let exact = solve(&dig, &SolveConfig::default()).unwrap().beta;
    let linear = beta_linear(&dig).value;
    assert!(
        exact == 3 && linear == 4,
        "criterion 03 FAIL: expected beta 3 and beta_linear 4, got {exact} and {linear}"
    );
    println!(
        "criterion 03 PASS: witness instance has beta = {exact} strictly below beta_linear = {linear}"
    );
}

#[test]
fn criterion_04_many_maximal_collapse() {
    let mut found = 0;
    let mut seed = 40_000u64;
    while found < 100 && seed < 50_000 {
        let density = DENSITIES[(seed % 3) as usize];
        let m = random_matrix(seed, 6, 7, density);
        seed += 1;
        let Some(dig) = digraph_of(&m) else { continue };
        let full = SubPoset::full(&dig);
        if dig.sinks().len() != width(&full) {
            continue;
        }
        let bounds = full_bounds_report(&dig);
        let sol = solve(&dig, &wide_config()).unwrap();
        assert!(
            bounds.alpha_w == bounds.ww
                && bounds.ww == sol.beta
                && sol.beta == bounds.beta_linear,
            "criterion 04 FAIL: quantities differ on seed {}: {} {} {} {}",
            seed - 1,
            bounds.alpha_w,
            bounds.ww,
            sol.beta,
            bounds.beta_linear
        );
        found += 1;
    }
    assert!(
        found >= 100,
        "criterion 04 FAIL: only {found} sink-count == width instances"
    );
    println!(
        "criterion 04 PASS: alpha_w = ww = beta = beta_linear on {found} instances \
         with as many sinks as their width"
    );
}

#[test]
fn criterion_05_chromatic_equals_row_width() {
    let mut pairs = 0;
    let mut seed = 50_000u64;
    while pairs < 500 && seed < 60_000 {
        let density = DENSITIES[(seed % 3) as usize];
        let m = random_matrix(seed, 6, 7, density);
        seed += 1;
        if digraph_of(&m).is_none() {
            continue;
        }
        for row in 0..m.rows() {
            match chromatic_equals_width_check(&m, row) {
                Ok((chi, wd)) => {
                    assert_eq!(
                        chi,
                        wd,
                        "criterion 05 FAIL: chromatic {chi} != width {wd} on seed {}, row {row}",
                        seed - 1
                    );
                    pairs += 1;
                }
                Err(_) => continue,
            }
        }
    }
    assert!(pairs >= 500, "criterion 05 FAIL: only {pairs} (instance, row) pairs");
    println!(
        "criterion 05 PASS: conflict-graph chromatic number equals row poset width \
         on {pairs} (instance, row) pairs"
    );
}

#[test]
fn criterion_06_linear_branchings_telescope() {
    let mut checked = 0;
    for (seed, dig) in &instance_stream(60_000, 250) {
        let mut linear_branchings = vec![beta_linear(dig).branching];
        let sol = solve(dig, &wide_config()).unwrap();
        if sol.branching.is_linear() {
            linear_branchings.push(sol.branching);
        }
        for b in &linear_branchings {
            assert!(b.is_linear(), "criterion 06 FAIL: witness not linear on seed {seed}");
            let uncovered = uncovered_pairs(dig, b).unwrap().total;
            let tops: u64 = b
                .branching_maximal(dig)
                .iter()
                .map(|&v| dig.weight(v))
                .sum();
            assert_eq!(
                uncovered, tops,
                "criterion 06 FAIL: uncovered {uncovered} != chain-top weight {tops} on seed {seed}"
            );
            checked += 1;
        }
    }
    assert!(checked >= 250, "criterion 06 FAIL: only {checked} linear branchings");
    println!(
        "criterion 06 PASS: every one of {checked} linear branchings has \
         uncovered count equal to its chain-top weight sum"
    );
}

/// All perfect matchings of a completion graph, as sorted arc lists.
fn all_completions(g: &BipartiteGraph, left: &[usize], right: &[usize]) -> Vec<Vec<(usize, usize)>> {
    fn rec(
        g: &BipartiteGraph,
        l: usize,
        used: &mut Vec<bool>,
        picked: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if l == g.left_count() {
            out.push(picked.clone());
            return;
        }
        for &(r, _) in g.edges(l) {
            if !used[r] {
                used[r] = true;
                picked.push((l, r));
                rec(g, l + 1, used, picked, out);
                picked.pop();
                used[r] = false;
            }
        }
    }
    if left.len() != right.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut used = vec![false; g.right_count()];
    rec(g, 0, &mut used, &mut Vec::new(), &mut out);
    out.iter()
        .map(|m| {
            let mut arcs: Vec<(usize, usize)> =
                m.iter().map(|&(l, r)| (left[l], right[r])).collect();
            arcs.sort_unstable();
            arcs
        })
        .collect()
}

fn multi_completion_base() -> BinaryMatrix {
    BinaryMatrix::from_rows(&[
        &[1, 0, 0, 1, 1, 1, 1],
        &[0, 1, 0, 1, 0, 1, 1],
        &[0, 0, 1, 0, 1, 1, 1],
        &[0, 0, 0, 0, 0, 1, 0],
        &[0, 0, 0, 0, 0, 0, 1],
    ])
}

fn permuted_matrix(base: &BinaryMatrix, seed: u64) -> BinaryMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut row_order: Vec<usize> = (0..base.rows()).collect();
    let mut col_order: Vec<usize> = (0..base.cols()).collect();
    row_order.shuffle(&mut rng);
    col_order.shuffle(&mut rng);
    let rows: Vec<Vec<u8>> = row_order
        .iter()
        .map(|&r| col_order.iter().map(|&c| u8::from(base.get(r, c))).collect())
        .collect();
    let borrowed: Vec<&[u8]> = rows.iter().map(|r| r.as_slice()).collect();
    BinaryMatrix::from_rows(&borrowed)
}

#[test]
fn criterion_07_completion_independence() {
    let base = multi_completion_base();
    let mut multi_guesses = 0;
    for seed in 70_000..70_100u64 {
        let m = if seed % 2 == 0 {
            permuted_matrix(&base, seed)
        } else {
            random_matrix(seed, 6, 7, 0.5)
        };
        let Some(dig) = digraph_of(&m) else { continue };
        if solve_many_maximal(&dig).is_some() {
            continue;
        }
        if width(&SubPoset::full(&dig)) > 7 {
            continue;
        }
        let red = top_reduction(&dig);
        let mut guesses: Vec<InStarSet> = Vec::new();
        enumerate_star_sets(&red.top, false, &mut |s| guesses.push(s.clone()));
        for stars in &guesses {
            let (g, left, right) = completion_graph(&red.top, stars);
            let completions = all_completions(&g, &left, &right);
            if completions.len() < 2 {
                continue;
            }
            multi_guesses += 1;
            let star_arcs = stars.arcs();
            let costs: Vec<u64> = completions
                .iter()
                .map(|l_arcs| {
                    let mut arcs = star_arcs.clone();
                    arcs.extend_from_slice(l_arcs);
                    count_uncovered_local(&red.top, &arcs)
                })
                .collect();
            assert!(
                costs.windows(2).all(|w| w[0] == w[1]),
                "criterion 07 FAIL: cost depends on the matching on seed {seed}: {costs:?}"
            );
        }
    }
    assert!(
        multi_guesses >= 50,
        "criterion 07 FAIL: only {multi_guesses} guesses with several completions"
    );
    println!(
        "criterion 07 PASS: uncovered count is matching-independent on {multi_guesses} \
         guesses with at least two linear completions"
    );
}

#[test]
fn criterion_08_antichain_against_bruteforce() {
    let mut checked = 0;
    let mut seed = 80_000u64;
    while checked < 300 && seed < 90_000 {
        let density = DENSITIES[(seed % 3) as usize];
        let m = random_matrix(seed, 8, 12, density);
        seed += 1;
        let Some(dig) = digraph_of(&m) else { continue };
        if dig.len() > 12 {
            continue;
        }
        let p = SubPoset::full(&dig);
        let weights: Vec<u64> = {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0123_4567_89ab);
            (0..dig.len()).map(|_| rng.random_range(0..=10)).collect()
        };
        let flow = mub_core::antichain::max_weight_antichain(&p, &weights);
        let brute = brute_antichains(&p, &weights).unwrap();
        assert_eq!(
            flow.weight,
            brute.max_weight,
            "criterion 08 FAIL: flow weight differs from brute force on seed {}",
            seed - 1
        );
        checked += 1;
    }
    assert!(checked >= 300, "criterion 08 FAIL: only {checked} digraphs");
    println!(
        "criterion 08 PASS: flow-based max-weight antichain equals brute force \
         on {checked} weighted digraphs with at most 12 vertices"
    );
}

#[test]
fn criterion_09_pruning_soundness() {
    let mut compared = 0;
    let mut seed = 90_000u64;
    while compared < 100 && seed < 99_000 {
        let density = DENSITIES[(seed % 3) as usize];
        let m = random_matrix(seed, 6, 7, density);
        seed += 1;
        let Some(dig) = digraph_of(&m) else { continue };
        if solve_many_maximal(&dig).is_some() {
            continue;
        }
        if width(&SubPoset::full(&dig)) > 7 {
            continue;
        }
        let red = top_reduction(&dig);
        if red.top.len() > 8 {
            continue;
        }
        let opt_of = |pruned: bool| {
            let mut best: Option<u64> = None;
            enumerate_star_sets(&red.top, pruned, &mut |s| {
                if let Some((value, _)) = evaluate_star_set(&red.top, s) {
                    best = Some(best.map_or(value, |b| b.min(value)));
                }
            });
            best.expect("some star set completes")
        };
        let pruned = opt_of(true);
        let unpruned = opt_of(false);
        assert_eq!(
            pruned,
            unpruned,
            "criterion 09 FAIL: pruned {pruned} != unpruned {unpruned} on seed {}",
            seed - 1
        );
        compared += 1;
    }
    assert!(compared >= 100, "criterion 09 FAIL: only {compared} instances");
    println!(
        "criterion 09 PASS: balance-pruned and unpruned guess enumerations agree \
         on {compared} instances with at most 8 top vertices"
    );
}

#[test]
fn criterion_10_byte_identical_json() {
    let dir = tempfile::tempdir().unwrap();
    let e1 = dir.path().join("e1.txt");
    std::fs::write(&e1, "1 0 1\n0 1 1\n0 0 1\n").unwrap();
    let generated = dir.path().join("gen.txt");
    let gen = Command::new(env!("CARGO_BIN_EXE_mub"))
        .args(["gen", "6", "7", "0.5", "123", "-o"])
        .arg(&generated)
        .output()
        .unwrap();
    assert!(gen.status.success());

    for path in [&e1, &generated] {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_mub"))
                .args(["solve", "--json", "--max-width", "7"])
                .arg(path)
                .env_remove("MUB_MAX_WIDTH")
                .output()
                .unwrap()
        };
        let first = run();
        let second = run();
        assert!(first.status.success(), "criterion 10 FAIL: solve errored");
        assert!(
            first.stdout == second.stdout && !first.stdout.is_empty(),
            "criterion 10 FAIL: repeated runs differ on {}",
            path.display()
        );
    }
    println!("criterion 10 PASS: repeated solve runs emit byte-identical JSON reports");
}
