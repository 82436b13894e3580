//! DOT rendering of containment digraphs with an optional branching
//! overlay: plain arrows show the transitive reduction (the full arc set
//! would clutter the picture without adding order information), bold
//! arrows are branching arcs, including any transitive ones the reduction
//! would omit.

use mub_core::{Branching, ContainmentDigraph};

use crate::report::support_label;

pub fn render_dot(dig: &ContainmentDigraph, branching: Option<&Branching>) -> String {
    let n = dig.len();
    let in_branching = |u: usize, v: usize| {
        branching.is_some_and(|b| b.arcs().binary_search(&(u, v)).is_ok())
    };
    let mut out = String::from("digraph containment {\n  rankdir=BT;\n");
    for v in 0..n {
        let rows: Vec<usize> = dig.support(v).iter().map(|r| r + 1).collect();
        let mut label = support_label(&rows);
        let mult = dig.multiplicity(v);
        if mult > 1 {
            label.push_str(&format!(" x{mult}"));
        }
        out.push_str(&format!("  v{v} [label=\"{label}\"];\n"));
    }
    for u in 0..n {
        for &v in dig.out_neighbors(u) {
            let reduced = dig
                .out_neighbors(u)
                .iter()
                .any(|&w| w != v && dig.is_arc(w, v));
            if in_branching(u, v) {
                out.push_str(&format!("  v{u} -> v{v} [style=bold];\n"));
            } else if !reduced {
                out.push_str(&format!("  v{u} -> v{v};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}
