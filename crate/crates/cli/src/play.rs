use std::io::{BufRead, Write};

use mbdom::game::{Solver, SolverConfig};
use mbdom::pairing::{find_pairing_exact, PairingStrategyState};
use mbdom::{Graph, Player, Position, Vertex};

use crate::error::CliError;

enum EngineSide {
    /// Exact search; the solver keeps its table across turns.
    Perfect(Box<Solver>),
    /// Dominator answering Staller with the partner of her vertex.
    Pairing(PairingStrategyState),
}

fn choose_engine(g: &Graph, engine: Player, max_n: usize) -> Result<EngineSide, CliError> {
    if g.n() <= max_n {
        let cfg = SolverConfig {
            max_n,
            degree_ordering: true,
        };
        return Ok(EngineSide::Perfect(Box::new(Solver::new(g, &cfg)?)));
    }
    if engine == Player::Staller {
        return Err(CliError::Cap(format!(
            "{} vertices is above the perfect-play cap of {max_n}; \
             the engine only plays Staller when it can search the whole game",
            g.n()
        )));
    }
    match find_pairing_exact(g)? {
        Some(p) => Ok(EngineSide::Pairing(PairingStrategyState::new(g.n(), p))),
        None => Err(CliError::Cap(format!(
            "{} vertices is above the perfect-play cap of {max_n} and the graph has no \
             pairing dominating set, so the engine has no guaranteed strategy",
            g.n()
        ))),
    }
}

fn show_board(pos: &Position, w: &mut dyn Write) -> std::io::Result<()> {
    let dom: Vec<Vertex> = pos.owned_by(Player::Dominator).collect();
    let stal: Vec<Vertex> = pos.owned_by(Player::Staller).collect();
    let free: Vec<Vertex> = pos.unplayed().collect();
    writeln!(w, "Dominator {dom:?}  Staller {stal:?}  free {free:?}")
}

/// Runs one game on `g`. The human plays `human`; lines of `input` are their
/// moves, `q` quits. Returns the winner, or `None` if the human quit.
pub fn play_session<R: BufRead, W: Write>(
    g: &Graph,
    human: Player,
    human_first: bool,
    max_n: usize,
    mut input: R,
    mut out: W,
) -> Result<Option<Player>, CliError> {
    let engine = human.other();
    let mut side = choose_engine(g, engine, max_n)?;
    if let EngineSide::Pairing(_) = side {
        writeln!(
            out,
            "graph above the perfect-play cap; the engine follows a pairing strategy"
        )?;
    }
    writeln!(
        out,
        "{} vertices. You are {human}. Enter a vertex number, or q to quit.",
        g.n()
    )?;
    let mut pos = Position::start(g.clone());
    let mut turn = if human_first { human } else { engine };
    let mut last_human: Option<Vertex> = None;
    loop {
        if let Some(w) = pos.winner() {
            match pos.staller_has_won() {
                Some(x) if w == Player::Staller => writeln!(
                    out,
                    "Staller wins: the closed neighbourhood of {x} is all Staller's"
                )?,
                _ => writeln!(out, "Dominator wins: every vertex is dominated")?,
            }
            return Ok(Some(w));
        }
        show_board(&pos, &mut out)?;
        if turn == human {
            write!(out, "your move> ")?;
            out.flush()?;
            let mut line = String::new();
            if input.read_line(&mut line)? == 0 {
                writeln!(out)?;
                return Ok(None);
            }
            let line = line.trim();
            if line.eq_ignore_ascii_case("q") {
                return Ok(None);
            }
            let v = match line.parse::<Vertex>() {
                Ok(v) if v < g.n() => v,
                _ => {
                    writeln!(out, "not a vertex: {line:?}")?;
                    continue;
                }
            };
            if pos.claim(v, human).is_err() {
                writeln!(out, "vertex {v} is already taken")?;
                continue;
            }
            last_human = Some(v);
        } else {
            let v = match &mut side {
                EngineSide::Perfect(s) => s
                    .solve(&pos, engine)
                    .best_move
                    .expect("a board with a free vertex and no winner"),
                EngineSide::Pairing(st) => match last_human {
                    Some(h) => st
                        .strategy_response(h)?
                        .expect("no winner yet, so a vertex is free"),
                    None => {
                        let v = pos.unplayed().next().expect("empty board");
                        st.record(v, mbdom::Cell::Dominator)?;
                        v
                    }
                },
            };
            pos.claim(v, engine)?;
            writeln!(out, "engine ({engine}) plays {v}")?;
        }
        turn = turn.other();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mbdom::graph::{double_star, path};

    fn session(g: &Graph, human: Player, first: bool, moves: &str) -> (Option<Player>, String) {
        let mut out = Vec::new();
        let w = play_session(g, human, first, 24, moves.as_bytes(), &mut out).unwrap();
        (w, String::from_utf8(out).unwrap())
    }

    #[test]
    fn engine_first_on_p3_plays_the_centre() {
        let (w, log) = session(&path(3).unwrap(), Player::Staller, false, "");
        assert_eq!(w, Some(Player::Dominator));
        assert!(log.contains("engine (Dominator) plays 1"), "{log}");
    }

    #[test]
    fn p2_answer() {
        let (w, log) = session(&path(2).unwrap(), Player::Staller, true, "0\n");
        assert_eq!(w, Some(Player::Dominator));
        assert!(log.contains("plays 1"));
    }

    #[test]
    fn staller_engine_wins_the_double_star() {
        let g = double_star(2, 2);
        for first in [true, false] {
            for order in [
                "0\n1\n2\n3\n4\n5\n",
                "5\n4\n3\n2\n1\n0\n",
                "1\n0\n2\n4\n3\n5\n",
            ] {
                let (w, _) = session(&g, Player::Dominator, first, order);
                assert_eq!(w, Some(Player::Staller));
            }
        }
    }

    #[test]
    fn bad_input_reprompts() {
        let (w, log) = session(&path(2).unwrap(), Player::Staller, true, "x\n7\n0\n");
        assert_eq!(w, Some(Player::Dominator));
        assert!(log.contains("not a vertex: \"x\""));
        assert!(log.contains("not a vertex: \"7\""));
        let (w, log) = session(&path(5).unwrap(), Player::Dominator, true, "2\n2\nq\n");
        assert_eq!(w, None);
        assert!(log.contains("vertex 2 is already taken"), "{log}");
    }

    #[test]
    fn large_graphs_need_a_pairing() {
        let g = path(6).unwrap();
        let mut out = Vec::new();
        let w = play_session(
            &g,
            Player::Staller,
            true,
            4,
            "0\n2\n4\n".as_bytes(),
            &mut out,
        )
        .unwrap();
        assert_eq!(w, Some(Player::Dominator));
        let log = String::from_utf8(out).unwrap();
        assert!(log.contains("pairing strategy"));
        assert!(matches!(
            play_session(&g, Player::Dominator, true, 4, "".as_bytes(), Vec::new()),
            Err(CliError::Cap(_))
        ));
        let c5 = mbdom::catalog::c5();
        assert!(matches!(
            play_session(&c5, Player::Staller, true, 4, "".as_bytes(), Vec::new()),
            Err(CliError::Cap(_))
        ));
    }
}
