use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};
use crate::outcome::Outcome;

use super::{union_outcome, StructuredError};

/// Shapes a tree without pendant `P2` can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IrreducibleTreeClass {
    K1,
    P2,
    /// `K_{1,n}` with `n ≥ 3`.
    Star,
    /// Two distinct vertices each adjacent to at least two leaves.
    TwoSupport,
}

impl IrreducibleTreeClass {
    pub fn outcome(self) -> Outcome {
        match self {
            IrreducibleTreeClass::P2 => Outcome::D,
            IrreducibleTreeClass::K1 | IrreducibleTreeClass::Star => Outcome::N,
            IrreducibleTreeClass::TwoSupport => Outcome::S,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P2Reduction {
    pub remainder: Graph,
    /// `map[i]` is the original index of remainder vertex `i`.
    pub map: Vec<Vertex>,
    /// Removed `(leaf, attachment)` pairs in removal order, original indices.
    pub trace: Vec<(Vertex, Vertex)>,
}

/// Pendant `P2`s of the live part of `t`: a leaf `x` whose neighbour `y` has
/// degree exactly 2.
fn pendant_p2s(t: &Graph, alive: &[bool], degree: &[usize]) -> Vec<(Vertex, Vertex)> {
    t.vertices()
        .filter(|&x| alive[x] && degree[x] == 1)
        .filter_map(|x| {
            let y = *t.neighbors(x).iter().find(|&&y| alive[y])?;
            (degree[y] == 2).then_some((x, y))
        })
        .collect()
}

/// Removes pendant `P2`s, smallest leaf first, until none is left.
pub fn reduce_pendant_p2(t: &Graph) -> Result<P2Reduction, StructuredError> {
    reduce_pendant_p2_by(t, |_| 0)
}

/// Same as [`reduce_pendant_p2`], with `pick` choosing which of the current
/// candidates (sorted by leaf) to remove next.
pub fn reduce_pendant_p2_by<F>(t: &Graph, mut pick: F) -> Result<P2Reduction, StructuredError>
where
    F: FnMut(&[(Vertex, Vertex)]) -> usize,
{
    if !t.is_tree() {
        return Err(StructuredError::NotATree);
    }
    let mut alive = vec![true; t.n()];
    let mut degree: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    let mut trace = Vec::new();
    loop {
        let cands = pendant_p2s(t, &alive, &degree);
        if cands.is_empty() {
            break;
        }
        let (x, y) = cands[pick(&cands) % cands.len()];
        for z in [x, y] {
            alive[z] = false;
            for &w in t.neighbors(z) {
                if alive[w] {
                    degree[w] -= 1;
                }
            }
        }
        trace.push((x, y));
    }
    let keep: Vec<Vertex> = t.vertices().filter(|&v| alive[v]).collect();
    let (remainder, map) = t.induced_subgraph(&keep);
    Ok(P2Reduction {
        remainder,
        map,
        trace,
    })
}

/// Classifies a tree that has no pendant `P2`.
pub fn classify_irreducible_tree(t: &Graph) -> Result<IrreducibleTreeClass, StructuredError> {
    if !t.is_tree() {
        return Err(StructuredError::NotATree);
    }
    let n = t.n();
    let degree: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    if let Some(&(x, y)) = pendant_p2s(t, &vec![true; n], &degree).first() {
        return Err(StructuredError::PendantP2(x, y));
    }
    match n {
        1 => return Ok(IrreducibleTreeClass::K1),
        2 => return Ok(IrreducibleTreeClass::P2),
        _ => {}
    }
    if degree.iter().any(|&d| d == n - 1) {
        return Ok(IrreducibleTreeClass::Star);
    }
    let supports = t
        .vertices()
        .filter(|&v| t.neighbors(v).iter().filter(|&&w| degree[w] == 1).count() >= 2)
        .count();
    if supports >= 2 {
        Ok(IrreducibleTreeClass::TwoSupport)
    } else {
        Err(StructuredError::Inconsistent(format!(
            "P2-irreducible tree matches no class: {t:?}"
        )))
    }
}

/// Outcome of a forest: each tree is reduced and classified, and the
/// component outcomes are combined with the union rule.
pub fn tree_outcome(t: &Graph) -> Result<Outcome, StructuredError> {
    if !t.is_forest() {
        return Err(StructuredError::NotAForest);
    }
    t.components().iter().try_fold(Outcome::D, |acc, comp| {
        let (tree, _) = t.induced_subgraph(comp);
        let red = reduce_pendant_p2(&tree)?;
        let class = classify_irreducible_tree(&red.remainder)?;
        Ok(union_outcome(acc, class.outcome()))
    })
}
