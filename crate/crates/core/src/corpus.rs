//! Bundled test corpus: every connected graph on 1..=6 vertices,
//! one graph6 code per line (143 graphs: 1, 1, 2, 6, 21, 112 by order).

use crate::graph::Graph;

const CONNECTED_UPTO6: &str = include_str!("../data/connected_upto6.g6");

/// All connected graphs with at most six vertices, one per isomorphism class.
pub fn bundled_connected_graphs() -> Vec<Graph> {
    Graph::parse_graph6_file(CONNECTED_UPTO6).expect("bundled corpus parses")
}

/// Connected corpus graphs with at most `max_n` vertices.
pub fn connected_upto(max_n: usize) -> Vec<Graph> {
    bundled_connected_graphs()
        .into_iter()
        .filter(|g| g.n() <= max_n)
        .collect()
}

/// Corpus graphs plus their complements: since a graph and its complement
/// are never both disconnected, this hits every isomorphism class on
/// `1..=max_n` vertices (some classes twice).
pub fn all_graphs_upto(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for g in connected_upto(max_n) {
        let c = g.complement();
        out.push(g);
        out.push(c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn corpus_counts_by_order() {
        let graphs = bundled_connected_graphs();
        assert_eq!(graphs.len(), 143);
        let mut by_order = [0usize; 7];
        for g in &graphs {
            by_order[g.n()] += 1;
        }
        assert_eq!(by_order, [0, 1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn corpus_graphs_are_connected_and_distinct() {
        let graphs = bundled_connected_graphs();
        let mut seen = HashSet::new();
        for g in &graphs {
            assert!(g.is_connected());
            assert!(seen.insert(g.to_graph6()), "duplicate {}", g.to_graph6());
        }
    }

    #[test]
    fn reencoding_matches_the_file() {
        for (line, g) in CONNECTED_UPTO6.lines().zip(bundled_connected_graphs()) {
            assert_eq!(g.to_graph6(), line.trim());
        }
    }
}
