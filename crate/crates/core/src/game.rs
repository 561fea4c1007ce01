//! Exact solver: memoised minimax over positions, plus the Erdős–Selfridge
//! sufficient conditions for a Dominator win.
//!
//! Positions are encoded as a pair of bitmasks (Dominator's vertices,
//! Staller's vertices), so the exact engine handles at most 64 vertices and by
//! default refuses anything above [`DEFAULT_MAX_N`].

use num_bigint::BigUint;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::outcome::{Outcome, Player, Winner};
use crate::position::{Cell, Position};

pub const DEFAULT_MAX_N: usize = 24;
const HARD_MAX_N: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("graph has {n} vertices, the exact engine is capped at {cap}")]
    TooLarge { n: usize, cap: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub max_n: usize,
    /// Try vertices with larger closed neighbourhoods first.
    pub degree_ordering: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            max_n: DEFAULT_MAX_N,
            degree_ordering: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub winner: Winner,
    /// A winning move for the side to move if it wins, otherwise the
    /// smallest unplayed vertex. `None` only when the board is full.
    pub best_move: Option<Vertex>,
    pub states_explored: u64,
    pub memo_hits: u64,
}

/// Exact search state for one graph. The transposition table is kept between
/// calls, so solving the same graph for both first players shares work.
pub struct Solver {
    closed: Vec<u64>,
    all: u64,
    order: Vec<Vertex>,
    memo: FxHashMap<(u64, u64, bool), bool>,
    states: u64,
    hits: u64,
}

impl Solver {
    pub fn new(g: &Graph, cfg: &SolverConfig) -> Result<Self, EngineError> {
        let cap = cfg.max_n.min(HARD_MAX_N);
        if g.n() > cap {
            return Err(EngineError::TooLarge { n: g.n(), cap });
        }
        let closed = g.closed_masks().expect("n <= 64 checked above");
        let n = g.n();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut order: Vec<Vertex> = g.vertices().collect();
        if cfg.degree_ordering {
            order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        }
        Ok(Self {
            closed,
            all,
            order,
            memo: FxHashMap::default(),
            states: 0,
            hits: 0,
        })
    }

    fn dominated(&self, dom: u64) -> bool {
        self.closed.iter().all(|&c| c & dom != 0)
    }

    fn isolated(&self, stal: u64) -> bool {
        self.closed.iter().any(|&c| c & !stal == 0)
    }

    /// Unplayed vertices that would complete an isolation if Staller took them.
    fn threats(&self, dom: u64, stal: u64) -> u64 {
        let mut t = 0;
        for &c in &self.closed {
            if c & dom == 0 {
                let rest = c & !stal;
                if rest.count_ones() == 1 {
                    t |= rest;
                }
            }
        }
        t
    }

    /// Does Dominator win from (`dom`, `stal`) with `to_move` playing next?
    fn dominator_wins(&mut self, dom: u64, stal: u64, to_move: Player) -> bool {
        self.states += 1;
        if self.dominated(dom) {
            return true;
        }
        if self.isolated(stal) {
            return false;
        }
        let free = self.all & !(dom | stal);
        assert!(
            free != 0,
            "full board with neither player winning: dom={dom:#x} stal={stal:#x}"
        );
        let key = (dom, stal, to_move == Player::Dominator);
        if let Some(&r) = self.memo.get(&key) {
            self.hits += 1;
            return r;
        }

        let threats = self.threats(dom, stal);
        let result = match to_move {
            Player::Staller => {
                if threats != 0 {
                    false
                } else {
                    let mut dom_wins = true;
                    for i in 0..self.order.len() {
                        let v = self.order[i];
                        if free & (1 << v) != 0
                            && !self.dominator_wins(dom, stal | (1 << v), Player::Dominator)
                        {
                            dom_wins = false;
                            break;
                        }
                    }
                    dom_wins
                }
            }
            Player::Dominator => match threats.count_ones() {
                // Two open threats: Dominator can block only one.
                2.. => false,
                1 => self.dominator_wins(dom | threats, stal, Player::Staller),
                0 => {
                    let mut dom_wins = false;
                    for i in 0..self.order.len() {
                        let v = self.order[i];
                        if free & (1 << v) != 0
                            && self.dominator_wins(dom | (1 << v), stal, Player::Staller)
                        {
                            dom_wins = true;
                            break;
                        }
                    }
                    dom_wins
                }
            },
        };
        self.memo.insert(key, result);
        result
    }

    fn masks(p: &Position) -> (u64, u64) {
        p.coloring()
            .iter()
            .enumerate()
            .fold((0, 0), |(d, s), (v, c)| match c {
                Cell::Dominator => (d | 1 << v, s),
                Cell::Staller => (d, s | 1 << v),
                Cell::Unplayed => (d, s),
            })
    }

    /// Solves `p` (which must be on the graph this solver was built for).
    pub fn solve(&mut self, p: &Position, to_move: Player) -> SolveReport {
        assert_eq!(
            p.graph().n(),
            self.closed.len(),
            "position is on another graph"
        );
        let (dom, stal) = Self::masks(p);
        let states0 = self.states;
        let hits0 = self.hits;
        let dom_wins = self.dominator_wins(dom, stal, to_move);
        let winner = if dom_wins {
            Winner::DominatorWins
        } else {
            Winner::StallerWins
        };
        let free = self.all & !(dom | stal);
        let mut best_move = None;
        let already_over = self.dominated(dom) || self.isolated(stal);
        if winner.player() == to_move && !already_over {
            for i in 0..self.order.len() {
                let v = self.order[i];
                if free & (1 << v) == 0 {
                    continue;
                }
                let child = match to_move {
                    Player::Dominator => self.dominator_wins(dom | 1 << v, stal, Player::Staller),
                    Player::Staller => !self.dominator_wins(dom, stal | 1 << v, Player::Dominator),
                };
                if child {
                    best_move = Some(v);
                    break;
                }
            }
            debug_assert!(best_move.is_some());
        }
        if best_move.is_none() {
            best_move = (0..self.closed.len()).find(|&v| free & (1 << v) != 0);
        }
        SolveReport {
            winner,
            best_move,
            states_explored: self.states - states0,
            memo_hits: self.hits - hits0,
        }
    }

    pub fn states_explored(&self) -> u64 {
        self.states
    }
}

/// Solves `p` with `to_move` playing next, under the default configuration.
pub fn solve_position(p: &Position, to_move: Player) -> Result<SolveReport, EngineError> {
    solve_position_with(p, to_move, &SolverConfig::default())
}

pub fn solve_position_with(
    p: &Position,
    to_move: Player,
    cfg: &SolverConfig,
) -> Result<SolveReport, EngineError> {
    let mut s = Solver::new(p.graph(), cfg)?;
    Ok(s.solve(p, to_move))
}

/// Outcome of the starting position on `g`.
pub fn outcome(g: &Graph) -> Result<Outcome, EngineError> {
    outcome_with(g, &SolverConfig::default())
}

pub fn outcome_with(g: &Graph, cfg: &SolverConfig) -> Result<Outcome, EngineError> {
    let mut s = Solver::new(g, cfg)?;
    let p = Position::start(g.clone());
    let dom_first = s.solve(&p, Player::Dominator).winner;
    let stal_first = s.solve(&p, Player::Staller).winner;
    Ok(
        Outcome::from_winners(dom_first, stal_first).unwrap_or_else(|| {
            panic!(
                "second player wins both games on {g:?}; this contradicts the imagination strategy"
            )
        }),
    )
}

/// `Σ_u 2^{-|N[u]|} < 1/2`, evaluated exactly as `Σ_u 2^{M-|N[u]|} < 2^{M-1}`
/// with `M = max |N[u]|`.
pub fn es_sum_criterion(g: &Graph) -> bool {
    let sizes: Vec<usize> = g.vertices().map(|u| g.degree(u) + 1).collect();
    let Some(&m) = sizes.iter().max() else {
        return true;
    };
    let sum: BigUint = sizes.iter().map(|&s| BigUint::from(1u8) << (m - s)).sum();
    sum < BigUint::from(1u8) << (m - 1)
}

/// `|V| < 2^δ`. Vacuously true for the empty graph.
pub fn es_min_degree_criterion(g: &Graph) -> bool {
    match g.min_degree() {
        None => true,
        Some(d) if d >= 64 => true,
        Some(d) => (g.n() as u128) < (1u128 << d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, double_star, path};

    #[test]
    fn empty_graph_is_a_dominator_win() {
        let p = Position::start(Graph::empty(0));
        for who in [Player::Dominator, Player::Staller] {
            let r = solve_position(&p, who).unwrap();
            assert_eq!(r.winner, Winner::DominatorWins);
            assert_eq!(r.best_move, None);
        }
        assert_eq!(outcome(&Graph::empty(0)).unwrap(), Outcome::D);
    }

    #[test]
    fn p3_first_player_wins() {
        let p = Position::start(path(3).unwrap());
        let r = solve_position(&p, Player::Dominator).unwrap();
        assert_eq!(r.winner, Winner::DominatorWins);
        // Any opening wins here; the first one in vertex order is reported.
        assert_eq!(r.best_move, Some(0));
        let r = solve_position(&p, Player::Staller).unwrap();
        assert_eq!(r.winner, Winner::StallerWins);
        assert_eq!(r.best_move, Some(1));
    }

    #[test]
    fn small_outcomes() {
        assert_eq!(outcome(&path(4).unwrap()).unwrap(), Outcome::D);
        assert_eq!(outcome(&path(3).unwrap()).unwrap(), Outcome::N);
        assert_eq!(outcome(&double_star(2, 2)).unwrap(), Outcome::S);
        assert_eq!(outcome(&cycle(5).unwrap()).unwrap(), Outcome::D);
        assert_eq!(outcome(&Graph::empty(1)).unwrap(), Outcome::N);
        assert_eq!(outcome(&Graph::empty(2)).unwrap(), Outcome::S);
        assert_eq!(outcome(&complete(2).unwrap()).unwrap(), Outcome::D);
    }

    #[test]
    fn losing_side_gets_smallest_unplayed() {
        let p = Position::start(double_star(2, 2));
        let r = solve_position(&p, Player::Dominator).unwrap();
        assert_eq!(r.winner, Winner::StallerWins);
        assert_eq!(r.best_move, Some(0));
    }

    #[test]
    fn terminal_positions_short_circuit() {
        let mut p = Position::start(path(3).unwrap());
        p.claim(1, Player::Dominator).unwrap();
        let r = solve_position(&p, Player::Staller).unwrap();
        assert_eq!(r.winner, Winner::DominatorWins);
        assert_eq!(r.states_explored, 1);
        assert_eq!(r.best_move, Some(0));
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::empty(25);
        assert_eq!(outcome(&g), Err(EngineError::TooLarge { n: 25, cap: 24 }));
        let cfg = SolverConfig {
            max_n: 100,
            ..Default::default()
        };
        assert_eq!(
            outcome_with(&Graph::empty(65), &cfg),
            Err(EngineError::TooLarge { n: 65, cap: 64 })
        );
        assert_eq!(outcome_with(&g, &cfg).unwrap(), Outcome::S);
    }

    #[test]
    fn degree_ordering_agrees() {
        let cfg = SolverConfig {
            degree_ordering: true,
            ..Default::default()
        };
        for g in [path(6).unwrap(), double_star(2, 3), cycle(7).unwrap()] {
            assert_eq!(outcome(&g).unwrap(), outcome_with(&g, &cfg).unwrap());
        }
    }

    #[test]
    fn es_sum_examples() {
        assert!(!es_sum_criterion(&cycle(4).unwrap()));
        assert!(es_sum_criterion(&complete(4).unwrap()));
        assert!(!es_sum_criterion(&Graph::empty(1)));
        assert!(es_sum_criterion(&Graph::empty(0)));
    }

    #[test]
    fn es_min_degree_examples() {
        assert!(es_min_degree_criterion(&complete(4).unwrap()));
        assert!(!es_min_degree_criterion(&cycle(4).unwrap()));
        assert!(!es_min_degree_criterion(&cycle(5).unwrap()));
        assert!(es_min_degree_criterion(&Graph::empty(0)));
    }
}
