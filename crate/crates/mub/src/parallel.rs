//! Multi-threaded guess evaluation. Star-set guesses are independent work
//! units sharing only the immutable top poset, so they are striped over
//! workers by index. Folding with the lexicographic minimum of
//! (value, guess index) picks the same winner the sequential solver finds
//! with its first-strictly-better rule, which keeps results identical for
//! every thread count.

use mub_core::chains::width;
use mub_core::digraph::SubPoset;
use mub_core::solver::{
    assemble_solution, enumerate_star_sets, evaluate_star_set, solve_many_maximal,
    top_reduction, InStarSet,
};
use mub_core::{ContainmentDigraph, Error, Solution, SolveConfig, SolveMethod};

type Best = Option<(u64, usize, Vec<(usize, usize)>)>;

fn fold(best: &mut Best, candidate: (u64, usize, Vec<(usize, usize)>)) {
    let better = best
        .as_ref()
        .is_none_or(|(bv, bi, _)| (candidate.0, candidate.1) < (*bv, *bi));
    if better {
        *best = Some(candidate);
    }
}

pub fn solve_with_threads(
    dig: &ContainmentDigraph,
    config: &SolveConfig,
    threads: usize,
) -> Result<Solution, Error> {
    let threads = threads.max(1);
    if threads == 1 {
        return mub_core::solve(dig, config);
    }
    if let Some(sol) = solve_many_maximal(dig) {
        return Ok(sol);
    }
    let full = SubPoset::full(dig);
    let w = width(&full);
    if w > config.max_width {
        return Err(Error::WidthGuard {
            width: w,
            max_width: config.max_width,
        });
    }
    let red = top_reduction(dig);
    let mut guesses: Vec<InStarSet> = Vec::new();
    enumerate_star_sets(&red.top, config.prune_by_balance, &mut |s| {
        guesses.push(s.clone())
    });

    let mut best: Best = None;
    let mut completions_total = 0u64;
    std::thread::scope(|scope| {
        let workers: Vec<_> = (0..threads)
            .map(|t| {
                let guesses = &guesses;
                let top = &red.top;
                scope.spawn(move || {
                    let mut completions = 0u64;
                    let mut local: Best = None;
                    for i in (t..guesses.len()).step_by(threads) {
                        if let Some((value, arcs)) = evaluate_star_set(top, &guesses[i]) {
                            completions += 1;
                            fold(&mut local, (value, i, arcs));
                        }
                    }
                    (completions, local)
                })
            })
            .collect();
        for worker in workers {
            let (completions, local) = worker.join().expect("worker panicked");
            completions_total += completions;
            if let Some(candidate) = local {
                fold(&mut best, candidate);
            }
        }
    });

    let (value, _, arcs) = best.expect("some star set always admits a linear completion");
    Ok(assemble_solution(
        dig,
        &red,
        &arcs,
        value,
        SolveMethod::BoundedWidth {
            guesses: guesses.len() as u64,
            completions: completions_total,
        },
    ))
}
