//! Induced-subgraph scans for graphs that every counterexample must contain.

use super::seagulls::wheel5;
use crate::constructions::cycle;
use crate::graph::iso::contains_induced;
use crate::graph::Graph;

/// `C4`, `C5`, `W5`, `K8` and the complement of `K_{1,6}`, by name.
pub fn builtin_patterns() -> Vec<(&'static str, Graph)> {
    let star = Graph::from_edges(7, (1..7).map(|i| (0, i))).expect("valid edges");
    vec![
        ("C4", cycle(4).expect("n ≥ 3")),
        ("C5", cycle(5).expect("n ≥ 3")),
        ("W5", wheel5()),
        ("K8", Graph::complete(8)),
        ("co-K1,6", star.complement()),
    ]
}

/// Whether `g` contains each pattern as an induced subgraph.
pub fn unavoidable_scan(g: &Graph, patterns: &[Graph]) -> Vec<bool> {
    patterns.iter().map(|h| contains_induced(g, h)).collect()
}
