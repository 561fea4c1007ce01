//! Reduction instances: POS-CNF formulas become bipartite (or split) graphs
//! with the same game winner, and 3-SAT formulas become gadget graphs that
//! have a pairing dominating set exactly when the formula is satisfiable.

mod poscnf;
mod threesat;

use thiserror::Error;

pub use poscnf::{
    poscnf_to_graph, poscnf_to_split_graph, solve_poscnf, CnfPlayer, PosCnfFormula, PosCnfMap,
    POSCNF_MAX_VARS,
};
pub use threesat::{
    assignment_to_pairing, pairing_to_assignment, sat_brute_force, threesat_to_pairing_graph,
    GadgetMap, Literal, ThreeSatFormula, VariableGadget, SAT_MAX_VARS,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid formula: {0}")]
    InvalidFormula(String),
    #[error("{n} variables exceeds the brute-force cap of {cap}")]
    TooManyVariables { n: usize, cap: usize },
    #[error("gadget precondition violated: {0}")]
    Precondition(String),
    #[error("assignment does not satisfy the formula")]
    Unsatisfying,
    #[error("not a pairing dominating set of the gadget graph")]
    NotPairingDominating,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
