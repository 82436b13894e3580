//! Machine-readable reports and their plain-text rendering.
//!
//! The JSON layout is stable: field order is fixed by the struct
//! declarations, optional fields are omitted rather than set to null, and
//! nothing run-dependent (like timing) is included, so identical inputs
//! produce byte-identical documents. Timing goes to the text rendering
//! only.

use mub_core::{BoundsReport, ContainmentDigraph, Solution, SolveMethod, UncoveredReport};
use serde::{Deserialize, Serialize};

use crate::branching_doc::support_table;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    /// Vertex ids of a heaviest antichain.
    pub alpha_w_antichain: Vec<usize>,
    /// Arcs of an optimal linear branching.
    pub beta_linear_branching: Vec<[usize; 2]>,
    /// Arcs of an optimal branching; absent in bounds-only reports.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub optimal_branching: Option<Vec<[usize; 2]>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub rows: usize,
    pub cols: usize,
    pub distinct_supports: usize,
    pub zero_columns_dropped: usize,
    pub alpha_w: u64,
    pub ww: u64,
    pub ww_per_row: Vec<usize>,
    pub beta_linear: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub beta_exact: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub guesses: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub completions: Option<u64>,
    /// Support set of each vertex id, as ascending 1-based row numbers.
    pub vertex_supports: Vec<Vec<usize>>,
    pub witnesses: Witnesses,
}

pub fn method_name(method: &SolveMethod) -> &'static str {
    match method {
        SolveMethod::ManyMaximal => "theorem-many-maximal",
        SolveMethod::BoundedWidth { .. } => "bounded-width",
    }
}

impl Report {
    pub fn bounds(rows: usize, cols: usize, dig: &ContainmentDigraph, b: &BoundsReport) -> Self {
        Report {
            rows,
            cols,
            distinct_supports: dig.len(),
            zero_columns_dropped: dig.zero_columns_dropped(),
            alpha_w: b.alpha_w,
            ww: b.ww,
            ww_per_row: b.ww_per_row.clone(),
            beta_linear: b.beta_linear,
            beta_exact: None,
            method: None,
            guesses: None,
            completions: None,
            vertex_supports: support_table(dig),
            witnesses: Witnesses {
                alpha_w_antichain: b.alpha_w_witness.vertices.clone(),
                beta_linear_branching: arc_pairs(b.beta_linear_witness.arcs()),
                optimal_branching: None,
            },
        }
    }

    pub fn solve(
        rows: usize,
        cols: usize,
        dig: &ContainmentDigraph,
        b: &BoundsReport,
        sol: &Solution,
    ) -> Self {
        let mut report = Report::bounds(rows, cols, dig, b);
        report.beta_exact = Some(sol.beta);
        report.method = Some(method_name(&sol.method).to_owned());
        if let SolveMethod::BoundedWidth { guesses, completions } = sol.method {
            report.guesses = Some(guesses);
            report.completions = Some(completions);
        }
        report.witnesses.optimal_branching = Some(arc_pairs(sol.branching.arcs()));
        report
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

fn arc_pairs(arcs: &[(usize, usize)]) -> Vec<[usize; 2]> {
    arcs.iter().map(|&(u, v)| [u, v]).collect()
}

/// Renders a support as `{r1,r3}`, matching row naming everywhere else.
pub fn support_label(rows_1based: &[usize]) -> String {
    let inner: Vec<String> = rows_1based.iter().map(|r| format!("r{r}")).collect();
    format!("{{{}}}", inner.join(","))
}

fn arc_lines(out: &mut String, arcs: &[[usize; 2]], supports: &[Vec<usize>]) {
    if arcs.is_empty() {
        out.push_str("  (no arcs)\n");
    }
    for &[u, v] in arcs {
        out.push_str(&format!(
            "  {} -> {}\n",
            support_label(&supports[u]),
            support_label(&supports[v])
        ));
    }
}

/// Text report for the bounds command.
pub fn render_bounds_text(r: &Report) -> String {
    let mut out = String::new();
    push_instance_lines(&mut out, r);
    out.push_str(&format!(
        "bounds: alpha_w = {} <= ww = {} <= beta <= beta_linear = {}\n",
        r.alpha_w, r.ww, r.beta_linear
    ));
    out.push_str(&format!(
        "per-row widths: [{}]\n",
        join_nums(&r.ww_per_row)
    ));
    out.push_str(&format!(
        "heaviest antichain: {}\n",
        vertex_list(&r.witnesses.alpha_w_antichain, &r.vertex_supports)
    ));
    out.push_str("best linear branching:\n");
    arc_lines(&mut out, &r.witnesses.beta_linear_branching, &r.vertex_supports);
    out
}

/// Text report for the solve command. Uncovered pairs and timing are
/// computed per run and passed in.
pub fn render_solve_text(
    r: &Report,
    uncovered: &UncoveredReport,
    elapsed_ms: f64,
) -> String {
    let beta = r.beta_exact.expect("solve reports carry beta");
    let mut out = String::new();
    push_instance_lines(&mut out, r);
    out.push_str(&format!("beta = {beta}\n"));
    match r.method.as_deref() {
        Some("theorem-many-maximal") => {
            out.push_str("fast-path: theorem-many-maximal\n");
        }
        Some(name) => {
            out.push_str(&format!("method: {name}"));
            if let (Some(g), Some(c)) = (r.guesses, r.completions) {
                out.push_str(&format!(" (guesses = {g}, completions = {c})"));
            }
            out.push('\n');
        }
        None => {}
    }
    out.push_str(&format!(
        "bounds: alpha_w = {} <= ww = {} <= beta = {} <= beta_linear = {}\n",
        r.alpha_w, r.ww, beta, r.beta_linear
    ));
    out.push_str("optimal branching:\n");
    if let Some(arcs) = &r.witnesses.optimal_branching {
        arc_lines(&mut out, arcs, &r.vertex_supports);
    }
    out.push_str(&format!("uncovered pairs ({}):\n", uncovered.total));
    for &(row, v) in &uncovered.pairs {
        out.push_str(&format!(
            "  (r{}, {})\n",
            row + 1,
            support_label(&r.vertex_supports[v])
        ));
    }
    out.push_str(&format!("solved in {elapsed_ms:.3} ms\n"));
    out
}

fn push_instance_lines(out: &mut String, r: &Report) {
    out.push_str(&format!(
        "instance: {} rows x {} columns, {} distinct supports",
        r.rows, r.cols, r.distinct_supports
    ));
    if r.zero_columns_dropped > 0 {
        out.push_str(&format!(
            " ({} all-zero columns dropped)",
            r.zero_columns_dropped
        ));
    }
    out.push('\n');
}

fn vertex_list(ids: &[usize], supports: &[Vec<usize>]) -> String {
    let labels: Vec<String> = ids.iter().map(|&v| support_label(&supports[v])).collect();
    labels.join(", ")
}

fn join_nums(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    parts.join(", ")
}
