use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Player {
    Dominator,
    Staller,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Dominator => Player::Staller,
            Player::Staller => Player::Dominator,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Dominator => "Dominator",
            Player::Staller => "Staller",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Winner {
    DominatorWins,
    StallerWins,
}

impl Winner {
    pub fn player(self) -> Player {
        match self {
            Winner::DominatorWins => Player::Dominator,
            Winner::StallerWins => Player::Staller,
        }
    }

    pub fn of(p: Player) -> Winner {
        match p {
            Player::Dominator => Winner::DominatorWins,
            Player::Staller => Winner::StallerWins,
        }
    }
}

/// Outcome of a starting position, ordered `S < N < D`.
///
/// There is no `P` variant: a position where the second player always wins
/// does not exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Outcome {
    /// Staller wins whoever starts.
    S,
    /// The first player wins.
    N,
    /// Dominator wins whoever starts.
    D,
}

impl Outcome {
    /// Combines the winners with Dominator and with Staller moving first.
    /// Returns `None` for the impossible "second player wins" combination.
    pub fn from_winners(dominator_first: Winner, staller_first: Winner) -> Option<Outcome> {
        use Winner::*;
        match (dominator_first, staller_first) {
            (DominatorWins, DominatorWins) => Some(Outcome::D),
            (StallerWins, StallerWins) => Some(Outcome::S),
            (DominatorWins, StallerWins) => Some(Outcome::N),
            (StallerWins, DominatorWins) => None,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Outcome::S => 'S',
            Outcome::N => 'N',
            Outcome::D => 'D',
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Outcome::D => "Dominator always wins",
            Outcome::N => "First player wins",
            Outcome::S => "Staller always wins",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl std::str::FromStr for Outcome {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "S" | "s" => Ok(Outcome::S),
            "N" | "n" => Ok(Outcome::N),
            "D" | "d" => Ok(Outcome::D),
            other => Err(format!("unknown outcome {other:?}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order() {
        assert!(Outcome::S < Outcome::N && Outcome::N < Outcome::D);
    }

    #[test]
    fn winners_combine() {
        use Winner::*;
        assert_eq!(
            Outcome::from_winners(DominatorWins, StallerWins),
            Some(Outcome::N)
        );
        assert_eq!(Outcome::from_winners(StallerWins, DominatorWins), None);
    }
}
