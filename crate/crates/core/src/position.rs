//! Game positions: a graph plus an owner for every vertex.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::outcome::Player;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Cell {
    #[default]
    Unplayed,
    Dominator,
    Staller,
}

impl From<Player> for Cell {
    fn from(p: Player) -> Cell {
        match p {
            Player::Dominator => Cell::Dominator,
            Player::Staller => Cell::Staller,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PositionError {
    #[error("colouring has {got} entries for a graph on {n} vertices")]
    LengthMismatch { n: usize, got: usize },
    #[error("vertex {0} does not exist")]
    NoSuchVertex(Vertex),
    #[error("vertex {0} is already occupied")]
    Occupied(Vertex),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Position {
    graph: Graph,
    coloring: Vec<Cell>,
}

impl fmt::Debug for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .coloring
            .iter()
            .map(|c| match c {
                Cell::Unplayed => '.',
                Cell::Dominator => 'D',
                Cell::Staller => 'S',
            })
            .collect();
        write!(f, "Position({:?}, [{s}])", self.graph)
    }
}

impl Position {
    /// Starting position: everything unplayed.
    pub fn start(graph: Graph) -> Self {
        let coloring = vec![Cell::Unplayed; graph.n()];
        Self { graph, coloring }
    }

    pub fn new(graph: Graph, coloring: Vec<Cell>) -> Result<Self, PositionError> {
        if coloring.len() != graph.n() {
            return Err(PositionError::LengthMismatch {
                n: graph.n(),
                got: coloring.len(),
            });
        }
        Ok(Self { graph, coloring })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn coloring(&self) -> &[Cell] {
        &self.coloring
    }

    pub fn cell(&self, v: Vertex) -> Cell {
        self.coloring[v]
    }

    pub fn is_start(&self) -> bool {
        self.coloring.iter().all(|&c| c == Cell::Unplayed)
    }

    pub fn unplayed(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.coloring
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == Cell::Unplayed)
            .map(|(v, _)| v)
    }

    pub fn owned_by(&self, p: Player) -> impl Iterator<Item = Vertex> + '_ {
        let want = Cell::from(p);
        self.coloring
            .iter()
            .enumerate()
            .filter(move |(_, &c)| c == want)
            .map(|(v, _)| v)
    }

    /// Claims `v` for `p`.
    pub fn claim(&mut self, v: Vertex, p: Player) -> Result<(), PositionError> {
        match self.coloring.get(v) {
            None => Err(PositionError::NoSuchVertex(v)),
            Some(Cell::Unplayed) => {
                self.coloring[v] = p.into();
                Ok(())
            }
            Some(_) => Err(PositionError::Occupied(v)),
        }
    }

    /// True iff Dominator's vertices form a dominating set.
    pub fn dominator_has_won(&self) -> bool {
        self.graph.vertices().all(|u| {
            self.coloring[u] == Cell::Dominator
                || self
                    .graph
                    .neighbors(u)
                    .iter()
                    .any(|&v| self.coloring[v] == Cell::Dominator)
        })
    }

    /// The smallest vertex whose whole closed neighbourhood belongs to Staller.
    pub fn staller_has_won(&self) -> Option<Vertex> {
        self.graph.vertices().find(|&u| {
            self.coloring[u] == Cell::Staller
                && self
                    .graph
                    .neighbors(u)
                    .iter()
                    .all(|&v| self.coloring[v] == Cell::Staller)
        })
    }

    pub fn winner(&self) -> Option<Player> {
        if self.dominator_has_won() {
            Some(Player::Dominator)
        } else if self.staller_has_won().is_some() {
            Some(Player::Staller)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path, star};

    fn pos(g: Graph, cells: &str) -> Position {
        let c = cells
            .chars()
            .map(|ch| match ch {
                'D' => Cell::Dominator,
                'S' => Cell::Staller,
                _ => Cell::Unplayed,
            })
            .collect();
        Position::new(g, c).unwrap()
    }

    #[test]
    fn dominator_predicate() {
        assert!(pos(Graph::empty(1), "D").dominator_has_won());
        assert!(pos(path(3).unwrap(), ".D.").dominator_has_won());
        assert!(!pos(path(4).unwrap(), "D...").dominator_has_won());
        assert!(pos(Graph::empty(0), "").dominator_has_won());
    }

    #[test]
    fn staller_predicate() {
        assert_eq!(pos(Graph::empty(1), "S").staller_has_won(), Some(0));
        assert_eq!(pos(path(3).unwrap(), "S.S").staller_has_won(), None);
        assert_eq!(pos(star(3).unwrap(), "SS..").staller_has_won(), Some(1));
    }

    #[test]
    fn claims() {
        let mut p = Position::start(path(2).unwrap());
        p.claim(0, Player::Staller).unwrap();
        assert_eq!(
            p.claim(0, Player::Dominator),
            Err(PositionError::Occupied(0))
        );
        assert_eq!(
            p.claim(9, Player::Dominator),
            Err(PositionError::NoSuchVertex(9))
        );
        assert_eq!(p.unplayed().collect::<Vec<_>>(), vec![1]);
        assert!(Position::new(path(2).unwrap(), vec![]).is_err());
    }
}
