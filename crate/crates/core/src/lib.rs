//! Solvers for the Maker-Breaker domination game.
//!
//! Dominator and Staller alternately claim vertices of a graph. Dominator wins
//! when his vertices dominate the graph, Staller wins when she claims a whole
//! closed neighbourhood. This crate computes outcomes exactly
//! ([`game::outcome`]), in polynomial time on cographs and trees
//! ([`structured`]), finds pairing dominating sets ([`pairing`]) and builds the
//! POS-CNF and 3-SAT reduction instances ([`reductions`]).

pub mod catalog;
pub mod cotree;
pub mod enumerate;
pub mod game;
pub mod graph;
pub mod outcome;
pub mod pairing;
pub mod position;
pub mod reductions;
pub mod structured;

pub use cotree::{cotree_to_graph, parse_cotree, CotreeExpr};
pub use game::{outcome, solve_position, SolveReport};
pub use graph::{glue, join, parse_edge_list, union, Graph, Vertex};
pub use outcome::{Outcome, Player, Winner};
pub use position::{Cell, Position};
