use std::io::Write;
use std::time::Instant;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use mbdom::game::{Solver, SolverConfig};
use mbdom::structured::{cograph_outcome, recognize_cograph, tree_outcome, Engine};
use mbdom::{Outcome, Player, Position, Vertex, Winner};

use crate::error::CliError;
use crate::input::Loaded;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineChoice {
    /// Tree solver for forests, cograph solver for cographs, exact search otherwise.
    Auto,
    Exact,
    Cograph,
    Tree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FirstPlayer {
    Dominator,
    Staller,
}

impl From<FirstPlayer> for Player {
    fn from(p: FirstPlayer) -> Self {
        match p {
            FirstPlayer::Dominator => Player::Dominator,
            FirstPlayer::Staller => Player::Staller,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveOutput {
    pub outcome: Outcome,
    pub description: String,
    pub engine: Engine,
    pub n: usize,
    pub m: usize,
    /// Winning opening for Dominator moving first, when he wins that game.
    /// Only the exact engine reports moves.
    pub dominator_first_move: Option<Vertex>,
    pub staller_first_move: Option<Vertex>,
    pub first: Option<Player>,
    pub winner: Option<Winner>,
    pub states_explored: Option<u64>,
    pub memo_hits: Option<u64>,
    pub elapsed_us: u64,
}

fn exact(input: &Loaded, cfg: &SolverConfig) -> Result<SolveOutput, CliError> {
    let g = &input.graph;
    let mut s = Solver::new(g, cfg)?;
    let start = Position::start(g.clone());
    let d = s.solve(&start, Player::Dominator);
    let st = s.solve(&start, Player::Staller);
    let outcome =
        Outcome::from_winners(d.winner, st.winner).expect("second-player wins are impossible");
    let winning = |r: &mbdom::SolveReport, p: Player| {
        (r.winner.player() == p).then_some(r.best_move).flatten()
    };
    Ok(SolveOutput {
        dominator_first_move: winning(&d, Player::Dominator),
        staller_first_move: winning(&st, Player::Staller),
        states_explored: Some(s.states_explored()),
        memo_hits: Some(d.memo_hits + st.memo_hits),
        ..base(outcome, Engine::Exact, input)
    })
}

fn base(outcome: Outcome, engine: Engine, input: &Loaded) -> SolveOutput {
    SolveOutput {
        outcome,
        description: outcome.describe().to_string(),
        engine,
        n: input.graph.n(),
        m: input.graph.m(),
        dominator_first_move: None,
        staller_first_move: None,
        first: None,
        winner: None,
        states_explored: None,
        memo_hits: None,
        elapsed_us: 0,
    }
}

pub fn solve(
    input: &Loaded,
    engine: EngineChoice,
    first: Option<Player>,
    cfg: &SolverConfig,
) -> Result<SolveOutput, CliError> {
    let t = Instant::now();
    let g = &input.graph;
    let mut out = match engine {
        EngineChoice::Exact => exact(input, cfg)?,
        EngineChoice::Tree => {
            if !g.is_forest() {
                return Err(CliError::Parse("the tree engine needs a forest".into()));
            }
            base(tree_outcome(g)?, Engine::Tree, input)
        }
        EngineChoice::Cograph => {
            let o = match &input.cotree {
                Some(e) => cograph_outcome(e),
                None => {
                    let rec = recognize_cograph(g).ok_or_else(|| {
                        CliError::Parse("the cograph engine needs a P4-free graph".into())
                    })?;
                    cograph_outcome(&rec.expr)
                }
            };
            base(o, Engine::Cograph, input)
        }
        EngineChoice::Auto => match &input.cotree {
            Some(e) => base(cograph_outcome(e), Engine::Cograph, input),
            None if g.is_forest() => base(tree_outcome(g)?, Engine::Tree, input),
            None => match recognize_cograph(g) {
                Some(rec) => base(cograph_outcome(&rec.expr), Engine::Cograph, input),
                None => exact(input, cfg)?,
            },
        },
    };
    if let Some(p) = first {
        out.first = Some(p);
        out.winner = Some(match out.outcome {
            Outcome::D => Winner::DominatorWins,
            Outcome::S => Winner::StallerWins,
            Outcome::N => Winner::of(p),
        });
    }
    out.elapsed_us = t.elapsed().as_micros() as u64;
    Ok(out)
}

pub fn render(out: &SolveOutput, w: &mut dyn Write) -> std::io::Result<()> {
    writeln!(w, "{} (engine: {})", out.outcome, out.engine)?;
    writeln!(w, "{}", out.description)?;
    if let (Some(p), Some(win)) = (out.first, out.winner) {
        writeln!(w, "with {p} moving first, {} wins", win.player())?;
    }
    if let Some(v) = out.dominator_first_move {
        writeln!(w, "Dominator moving first wins with {v}")?;
    }
    if let Some(v) = out.staller_first_move {
        writeln!(w, "Staller moving first wins with {v}")?;
    }
    if let Some(s) = out.states_explored {
        writeln!(w, "{s} states explored")?;
    }
    writeln!(w, "n = {}, m = {}, {} µs", out.n, out.m, out.elapsed_us)
}
