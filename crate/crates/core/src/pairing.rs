//! Pairing dominating sets.
//!
//! A set of disjoint pairs `(u_i, v_i)` such that the sets `N[u_i] ∩ N[v_i]`
//! cover every vertex. Whenever Staller takes one vertex of a pair, Dominator
//! answers with the other one, and his vertices end up dominating the graph.

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::position::Cell;

pub const DEFAULT_PAIRING_CAP: usize = 40;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairingError {
    #[error("vertex {0} appears in more than one pair")]
    Repeated(Vertex),
    #[error("pair ({0}, {0}) repeats a vertex")]
    Degenerate(Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: Vertex, n: usize },
    #[error("N[{0}] and N[{1}] are disjoint, the pair covers nothing")]
    EmptyIntersection(Vertex, Vertex),
    #[error("graph has {n} vertices, the pairing search is capped at {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("graph is not a forest")]
    NotAForest,
    #[error("vertex {0} is already occupied")]
    Occupied(Vertex),
}

/// Disjoint vertex pairs, each stored with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Pairing {
    pairs: Vec<(Vertex, Vertex)>,
}

impl Pairing {
    /// Checks that no vertex is used twice.
    pub fn new<I>(pairs: I) -> Result<Self, PairingError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut seen = FxHashSet::default();
        let mut out = Vec::new();
        for (u, v) in pairs {
            if u == v {
                return Err(PairingError::Degenerate(u));
            }
            for x in [u, v] {
                if !seen.insert(x) {
                    return Err(PairingError::Repeated(x));
                }
            }
            out.push((u.min(v), u.max(v)));
        }
        Ok(Self { pairs: out })
    }

    /// Like [`Pairing::new`], and additionally rejects pairs outside `g` or
    /// with disjoint closed neighbourhoods.
    pub fn for_graph<I>(g: &Graph, pairs: I) -> Result<Self, PairingError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let p = Self::new(pairs)?;
        for &(u, v) in &p.pairs {
            check_range(g, u)?;
            check_range(g, v)?;
            if common_closed(g, u, v).next().is_none() {
                return Err(PairingError::EmptyIntersection(u, v));
            }
        }
        Ok(p)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn pairs(&self) -> &[(Vertex, Vertex)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains_pair(&self, u: Vertex, v: Vertex) -> bool {
        self.pairs.contains(&(u.min(v), u.max(v)))
    }

    pub fn partner(&self, x: Vertex) -> Option<Vertex> {
        self.pairs.iter().find_map(|&(u, v)| match x {
            _ if x == u => Some(v),
            _ if x == v => Some(u),
            _ => None,
        })
    }

    /// Renames every vertex through `map` (new index → old index tables
    /// returned by the graph operators).
    pub fn translate(&self, map: &[Vertex]) -> Pairing {
        Pairing::new(self.pairs.iter().map(|&(u, v)| (map[u], map[v])))
            .expect("an injective map keeps pairs disjoint")
    }

    /// Concatenates two pairings on disjoint vertex sets.
    pub fn merge(&self, other: &Pairing) -> Result<Pairing, PairingError> {
        Pairing::new(self.pairs.iter().chain(&other.pairs).copied())
    }

    pub fn sorted(mut self) -> Pairing {
        self.pairs.sort_unstable();
        self
    }
}

/// JSON form `{"pairs": [[u, v], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingJson {
    pub pairs: Vec<[Vertex; 2]>,
}

impl Serialize for Pairing {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PairingJson {
            pairs: self.pairs.iter().map(|&(u, v)| [u, v]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Pairing {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = PairingJson::deserialize(d)?;
        Pairing::new(j.pairs.into_iter().map(|[u, v]| (u, v))).map_err(serde::de::Error::custom)
    }
}

fn check_range(g: &Graph, v: Vertex) -> Result<(), PairingError> {
    if v < g.n() {
        Ok(())
    } else {
        Err(PairingError::OutOfRange {
            vertex: v,
            n: g.n(),
        })
    }
}

/// `N[u] ∩ N[v]`.
fn common_closed(g: &Graph, u: Vertex, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
    g.vertices()
        .filter(move |&w| (w == u || g.has_edge(w, u)) && (w == v || g.has_edge(w, v)))
}

/// True iff the pairs are disjoint and `⋃ N[u_i] ∩ N[v_i] = V`.
pub fn is_pairing_dominating_set(g: &Graph, p: &Pairing) -> Result<bool, PairingError> {
    let mut covered = vec![false; g.n()];
    let mut seen = FxHashSet::default();
    for &(u, v) in p.pairs() {
        check_range(g, u)?;
        check_range(g, v)?;
        if u == v || !seen.insert(u) || !seen.insert(v) {
            return Ok(false);
        }
        for w in common_closed(g, u, v) {
            covered[w] = true;
        }
    }
    Ok(covered.into_iter().all(|c| c))
}

/// Exact search under the default size cap.
pub fn find_pairing_exact(g: &Graph) -> Result<Option<Pairing>, PairingError> {
    find_pairing_exact_with(g, DEFAULT_PAIRING_CAP)
}

/// Backtracking search for a pairing dominating set. Always branches on the
/// uncovered vertex with the fewest usable covering pairs. Sizes above 64 are
/// rejected whatever the cap.
pub fn find_pairing_exact_with(g: &Graph, cap: usize) -> Result<Option<Pairing>, PairingError> {
    let cap = cap.min(64);
    if g.n() > cap {
        return Err(PairingError::TooLarge { n: g.n(), cap });
    }
    let closed = g.closed_masks().expect("n <= 64");
    let n = g.n();
    let mut cands = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let cover = closed[u] & closed[v];
            if cover != 0 {
                cands.push(Cand {
                    u,
                    v,
                    ends: 1 << u | 1 << v,
                    cover,
                });
            }
        }
    }
    let mut covering: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, c) in cands.iter().enumerate() {
        for (w, list) in covering.iter_mut().enumerate() {
            if c.cover >> w & 1 == 1 {
                list.push(i);
            }
        }
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = Search {
        cands: &cands,
        covering: &covering,
        failed: FxHashSet::default(),
        chosen: Vec::new(),
    };
    if search.run(all, 0) {
        let pairs = search.chosen.iter().map(|&i| (cands[i].u, cands[i].v));
        Ok(Some(
            Pairing::new(pairs)
                .expect("search keeps pairs disjoint")
                .sorted(),
        ))
    } else {
        Ok(None)
    }
}

struct Cand {
    u: Vertex,
    v: Vertex,
    ends: u64,
    cover: u64,
}

struct Search<'a> {
    cands: &'a [Cand],
    covering: &'a [Vec<usize>],
    failed: FxHashSet<(u64, u64)>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, uncovered: u64, used: u64) -> bool {
        if uncovered == 0 {
            return true;
        }
        if self.failed.contains(&(uncovered, used)) {
            return false;
        }
        // Most constrained uncovered vertex.
        let mut best: Option<(usize, Vec<usize>)> = None;
        let mut rest = uncovered;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let usable: Vec<usize> = self.covering[w]
                .iter()
                .copied()
                .filter(|&i| self.cands[i].ends & used == 0)
                .collect();
            if best.as_ref().is_none_or(|(_, b)| usable.len() < b.len()) {
                let done = usable.is_empty();
                best = Some((w, usable));
                if done {
                    break;
                }
            }
        }
        let (_, options) = best.expect("uncovered is non-empty");
        for i in options {
            let c = &self.cands[i];
            let (cover, ends) = (c.cover, c.ends);
            self.chosen.push(i);
            if self.run(uncovered & !cover, used | ends) {
                return true;
            }
            self.chosen.pop();
        }
        self.failed.insert((uncovered, used));
        false
    }
}

/// Perfect matching of a forest by repeatedly matching a leaf with its
/// neighbour, returned as a pairing. `None` when the forest has no perfect
/// matching.
pub fn pairing_from_tree_matching(t: &Graph) -> Result<Option<Pairing>, PairingError> {
    if !t.is_forest() {
        return Err(PairingError::NotAForest);
    }
    let n = t.n();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    let mut pairs = Vec::new();
    let mut left = n;
    while left > 0 {
        // An isolated survivor can never be matched.
        if (0..n).any(|v| alive[v] && degree[v] == 0) {
            return Ok(None);
        }
        let x = (0..n)
            .find(|&v| alive[v] && degree[v] == 1)
            .expect("a non-empty forest without isolated vertices has a leaf");
        let y = *t
            .neighbors(x)
            .iter()
            .find(|&&y| alive[y])
            .expect("leaf has a live neighbour");
        for z in [x, y] {
            alive[z] = false;
            for &w in t.neighbors(z) {
                if alive[w] {
                    degree[w] -= 1;
                }
            }
        }
        pairs.push((x, y));
        left -= 2;
    }
    Ok(Some(
        Pairing::new(pairs)
            .expect("matched vertices are removed")
            .sorted(),
    ))
}

/// Dominator's bookkeeping while he follows a pairing strategy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingStrategyState {
    pairing: Pairing,
    occupied: Vec<Cell>,
}

impl PairingStrategyState {
    pub fn new(n: usize, pairing: Pairing) -> Self {
        Self {
            pairing,
            occupied: vec![Cell::Unplayed; n],
        }
    }

    pub fn pairing(&self) -> &Pairing {
        &self.pairing
    }

    pub fn occupied(&self) -> &[Cell] {
        &self.occupied
    }

    /// Marks a move that did not go through [`Self::strategy_response`],
    /// such as an opening move.
    pub fn record(&mut self, v: Vertex, cell: Cell) -> Result<(), PairingError> {
        match self.occupied.get(v) {
            None => Err(PairingError::OutOfRange {
                vertex: v,
                n: self.occupied.len(),
            }),
            Some(Cell::Unplayed) => {
                self.occupied[v] = cell;
                Ok(())
            }
            Some(_) => Err(PairingError::Occupied(v)),
        }
    }

    /// Records Staller's move and returns Dominator's answer: the partner of
    /// the vertex if it is still free, otherwise the smallest unplayed vertex.
    /// `None` when the board is full after Staller's move.
    pub fn strategy_response(
        &mut self,
        staller_move: Vertex,
    ) -> Result<Option<Vertex>, PairingError> {
        self.record(staller_move, Cell::Staller)?;
        let answer = self
            .pairing
            .partner(staller_move)
            .filter(|&p| self.occupied[p] == Cell::Unplayed)
            .or_else(|| self.occupied.iter().position(|&c| c == Cell::Unplayed));
        if let Some(a) = answer {
            self.occupied[a] = Cell::Dominator;
        }
        Ok(answer)
    }
}

/// Smallest `u` such that `G ∖ N[u]` has a pairing dominating set, together
/// with that pairing in `g`'s numbering. Playing `u` first and then following
/// the pairing wins for Dominator.
pub fn first_move_pairing(g: &Graph) -> Result<Option<(Vertex, Pairing)>, PairingError> {
    first_move_pairing_with(g, DEFAULT_PAIRING_CAP)
}

pub fn first_move_pairing_with(
    g: &Graph,
    cap: usize,
) -> Result<Option<(Vertex, Pairing)>, PairingError> {
    if g.n() > cap.min(64) {
        return Err(PairingError::TooLarge {
            n: g.n(),
            cap: cap.min(64),
        });
    }
    for u in g.vertices() {
        let (rest, map) = g.delete_closed_neighborhood(u).expect("u is in range");
        if let Some(p) = find_pairing_exact_with(&rest, cap)? {
            return Ok(Some((u, p.translate(&map))));
        }
    }
    Ok(None)
}
