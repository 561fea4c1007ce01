mod common;

use proptest::prelude::*;

use common::{exact, graph};
use mbdom::game::{
    es_min_degree_criterion, es_sum_criterion, solve_position, Solver, SolverConfig,
};
use mbdom::{Cell, Player, Position};

/// Lets `winner` follow the solver's best move while the opponent tries every
/// reply. Returns false if some line ends with the other side winning.
fn best_line_holds(pos: &Position, to_move: Player, winner: Player) -> bool {
    if let Some(w) = pos.winner() {
        return w == winner;
    }
    let moves: Vec<usize> = if to_move == winner {
        vec![solve_position(pos, to_move).unwrap().best_move.unwrap()]
    } else {
        pos.unplayed().collect()
    };
    moves.into_iter().all(|v| {
        let mut next = pos.clone();
        next.claim(v, to_move).unwrap();
        best_line_holds(&next, to_move.other(), winner)
    })
}

proptest! {
    #[test]
    fn no_second_player_win(g in graph(0, 8)) {
        // exact() panics on outcome P.
        exact(&g);
    }

    #[test]
    fn adding_an_edge_never_hurts_dominator(g in graph(2, 8), pick in any::<prop::sample::Index>()) {
        let non_edges: Vec<_> = g
            .vertices()
            .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        prop_assume!(!non_edges.is_empty());
        let (u, v) = non_edges[pick.index(non_edges.len())];
        prop_assert!(exact(&g) <= exact(&g.with_edge(u, v).unwrap()));
    }

    #[test]
    fn erdos_selfridge_is_sound(g in graph(1, 10)) {
        let sum = es_sum_criterion(&g);
        if es_min_degree_criterion(&g) {
            prop_assert!(sum);
        }
        if sum {
            prop_assert_eq!(exact(&g), mbdom::Outcome::D);
        }
    }

    #[test]
    fn solving_is_deterministic(g in graph(0, 9), staller_first in any::<bool>()) {
        let p = Position::start(g);
        let who = if staller_first { Player::Staller } else { Player::Dominator };
        let a = solve_position(&p, who).unwrap();
        let b = solve_position(&p, who).unwrap();
        prop_assert_eq!(&a, &b);
        let with_order = Solver::new(p.graph(), &SolverConfig { degree_ordering: false, ..Default::default() })
            .unwrap()
            .solve(&p, who);
        prop_assert_eq!(with_order.winner, a.winner);
    }

    #[test]
    fn best_move_line_reaches_the_predicted_end(g in graph(1, 6), staller_first in any::<bool>()) {
        let p = Position::start(g);
        let first = if staller_first { Player::Staller } else { Player::Dominator };
        let w = solve_position(&p, first).unwrap().winner;
        prop_assert!(best_line_holds(&p, first, w.player()));
    }

    #[test]
    fn mid_game_positions(g in graph(1, 7), cells in proptest::collection::vec(0u8..3, 7)) {
        let coloring: Vec<Cell> = cells[..g.n()]
            .iter()
            .map(|c| [Cell::Unplayed, Cell::Dominator, Cell::Staller][*c as usize])
            .collect();
        let p = Position::new(g.clone(), coloring).unwrap();
        for who in [Player::Dominator, Player::Staller] {
            let r = solve_position(&p, who).unwrap();
            if let Some(w) = p.winner() {
                prop_assert_eq!(r.winner.player(), w);
            }
            if r.winner.player() == who && p.winner().is_none() {
                prop_assert!(best_line_holds(&p, who, who));
            }
        }
    }
}
