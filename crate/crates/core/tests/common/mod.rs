#![allow(dead_code)]

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use mbdom::game::{Solver, SolverConfig};
use mbdom::{Graph, Outcome, Player, Position};

/// Graphs with `lo..=hi` vertices, each edge present independently.
pub fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let slots = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), slots).prop_map(move |bits| {
            let mut it = bits.into_iter();
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| it.next().unwrap())
                .collect();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

pub fn rng() -> impl Strategy<Value = ChaCha8Rng> {
    any::<u64>().prop_map(ChaCha8Rng::seed_from_u64)
}

pub fn exact(g: &Graph) -> Outcome {
    let mut s = Solver::new(g, &SolverConfig::default()).unwrap();
    let p = Position::start(g.clone());
    let d = s.solve(&p, Player::Dominator).winner;
    let st = s.solve(&p, Player::Staller).winner;
    Outcome::from_winners(d, st).expect("outcome P is impossible")
}
