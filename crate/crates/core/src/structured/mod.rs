//! Polynomial-time outcome computation on cographs and forests, the outcome
//! algebra of union and join, and the glue-neutrality test.

mod cograph;
mod neutral;
mod tree;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::{self, EngineError, SolverConfig};
use crate::graph::Graph;
use crate::outcome::Outcome;

pub use cograph::{cograph_outcome, cograph_pairing, recognize_cograph, RecognizedCograph};
pub use neutral::is_neutral;
pub use tree::{
    classify_irreducible_tree, reduce_pendant_p2, reduce_pendant_p2_by, tree_outcome,
    IrreducibleTreeClass, P2Reduction,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructuredError {
    #[error("input is not a tree")]
    NotATree,
    #[error("input is not a forest")]
    NotAForest,
    #[error("tree still has a pendant P2 ({0} - {1})")]
    PendantP2(usize, usize),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("vertex {0} out of range")]
    NoSuchVertex(usize),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Outcome of a disjoint union from the outcomes of its parts.
pub fn union_outcome(a: Outcome, b: Outcome) -> Outcome {
    use Outcome::*;
    match (a, b) {
        (S, _) | (_, S) | (N, N) => S,
        (D, D) => D,
        _ => N,
    }
}

/// Outcome of a join from the sizes and outcomes of its parts: `N` when one
/// side is a single vertex and the other has outcome `S`, `D` otherwise.
pub fn join_outcome(g_size: usize, a: Outcome, h_size: usize, b: Outcome) -> Outcome {
    if (g_size == 1 && b == Outcome::S) || (h_size == 1 && a == Outcome::S) {
        Outcome::N
    } else {
        Outcome::D
    }
}

/// Which solver produced an outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Tree,
    Cograph,
    Exact,
}

impl std::fmt::Display for Engine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Engine::Tree => "tree",
            Engine::Cograph => "cograph",
            Engine::Exact => "exact",
        })
    }
}

/// Picks the cheapest applicable solver: forests first, then cographs, then
/// the exact engine.
pub fn auto_outcome(g: &Graph, cfg: &SolverConfig) -> Result<(Outcome, Engine), StructuredError> {
    if g.is_forest() {
        return Ok((tree_outcome(g)?, Engine::Tree));
    }
    if let Some(c) = recognize_cograph(g) {
        return Ok((cograph_outcome(&c.expr), Engine::Cograph));
    }
    Ok((game::outcome_with(g, cfg)?, Engine::Exact))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Outcome::*;

    #[test]
    fn union_table() {
        let table = [
            (D, D, D),
            (D, N, N),
            (D, S, S),
            (N, D, N),
            (N, N, S),
            (N, S, S),
            (S, D, S),
            (S, N, S),
            (S, S, S),
        ];
        for (a, b, want) in table {
            assert_eq!(union_outcome(a, b), want, "{a} ∪ {b}");
        }
    }

    #[test]
    fn union_is_associative() {
        let all = [S, N, D];
        for a in all {
            for b in all {
                for c in all {
                    assert_eq!(
                        union_outcome(union_outcome(a, b), c),
                        union_outcome(a, union_outcome(b, c))
                    );
                }
            }
        }
    }

    #[test]
    fn join_examples() {
        assert_eq!(join_outcome(1, N, 6, S), N);
        assert_eq!(join_outcome(6, S, 1, N), N);
        assert_eq!(join_outcome(2, D, 2, D), D);
        assert_eq!(join_outcome(1, N, 3, N), D);
        assert_eq!(join_outcome(2, S, 2, S), D);
    }
}
