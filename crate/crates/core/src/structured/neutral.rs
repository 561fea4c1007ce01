use crate::game::SolverConfig;
use crate::graph::{Graph, Vertex};
use crate::outcome::Outcome;

use super::{auto_outcome, StructuredError};

/// Whether gluing `h` at `v` onto any graph leaves the outcome unchanged,
/// decided by `o(h) = N` and `o(h ∖ v) = D`. Uses the tree or cograph solver
/// when they apply and the exact engine otherwise.
pub fn is_neutral(h: &Graph, v: Vertex, cfg: &SolverConfig) -> Result<bool, StructuredError> {
    if v >= h.n() {
        return Err(StructuredError::NoSuchVertex(v));
    }
    if auto_outcome(h, cfg)?.0 != Outcome::N {
        return Ok(false);
    }
    let (rest, _) = h.remove_vertex(v).expect("v checked above");
    Ok(auto_outcome(&rest, cfg)?.0 == Outcome::D)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, hanging_split};

    #[test]
    fn examples() {
        let cfg = SolverConfig::default();
        assert!(is_neutral(&hanging_split(2).unwrap(), 0, &cfg).unwrap());
        assert!(is_neutral(&hanging_split(3).unwrap(), 0, &cfg).unwrap());
        let k2 = complete(2).unwrap();
        assert!(!is_neutral(&k2, 0, &cfg).unwrap());
        assert!(!is_neutral(&k2, 1, &cfg).unwrap());
        // K1 itself: o(K1) = N but K1 ∖ v is empty with outcome D.
        assert!(is_neutral(&Graph::empty(1), 0, &cfg).unwrap());
        // P4 has outcome D, so no vertex of it is neutral.
        assert!(!is_neutral(&crate::graph::path(4).unwrap(), 0, &cfg).unwrap());
        assert!(is_neutral(&k2, 2, &cfg).is_err());
    }
}
