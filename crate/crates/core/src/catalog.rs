//! Small named graphs used as fixtures and witnesses.

use crate::graph::{self, Graph, Vertex};

/// `P4`, outcome D.
pub fn witness_dominator() -> Graph {
    graph::path(4).unwrap()
}

/// `P3`, outcome N.
pub fn witness_next() -> Graph {
    graph::path(3).unwrap()
}

/// Two adjacent centres with two leaves each, outcome S.
pub fn witness_staller() -> Graph {
    graph::double_star(2, 2)
}

/// Nine-vertex graph built from two triangles and the bridging vertices
/// `2, 3, 4, 5, 6`, together with its three-pair pairing dominating set.
pub fn pairing_example() -> (Graph, Vec<(Vertex, Vertex)>) {
    // Listed 1-based.
    let edges = [
        (3, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 7),
        (7, 8),
        (8, 9),
        (9, 7),
        (7, 5),
        (5, 3),
        (3, 6),
        (6, 7),
    ];
    let g = Graph::from_edges(9, edges.iter().map(|&(u, v)| (u - 1, v - 1))).unwrap();
    (g, vec![(0, 1), (7, 8), (2, 6)])
}

/// The 5-cycle: outcome D, no pairing dominating set.
pub fn c5() -> Graph {
    graph::cycle(5).unwrap()
}

/// Ten-vertex graph with outcome D and no pairing dominating set.
pub fn no_pairing_ten() -> Graph {
    let edges = [
        (1, 5),
        (5, 6),
        (6, 1),
        (1, 8),
        (8, 9),
        (9, 1),
        (9, 6),
        (6, 2),
        (2, 9),
        (9, 10),
        (10, 4),
        (4, 9),
        (9, 3),
        (3, 6),
        (6, 7),
        (7, 4),
        (4, 6),
    ];
    Graph::from_edges(10, edges.iter().map(|&(u, v)| (u - 1, v - 1))).unwrap()
}

/// Looks up a fixture by name (used by the CLI `generate` command).
pub fn by_name(name: &str) -> Option<Graph> {
    Some(match name {
        "p4" => witness_dominator(),
        "p3" => witness_next(),
        "double-star" => witness_staller(),
        "pairing-example" => pairing_example().0,
        "c5" => c5(),
        "no-pairing-10" => no_pairing_ten(),
        _ => return None,
    })
}

pub const NAMES: &[&str] = &[
    "p4",
    "p3",
    "double-star",
    "pairing-example",
    "c5",
    "no-pairing-10",
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(witness_staller().n(), 6);
        let (g, pairs) = pairing_example();
        assert_eq!((g.n(), g.m(), pairs.len()), (9, 12, 3));
        assert_eq!(no_pairing_ten().m(), 17);
        for name in NAMES {
            assert!(by_name(name).is_some());
        }
    }
}
