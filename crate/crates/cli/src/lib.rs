//! Command-line front end: `solve`, `pairing`, `reduce`, `experiment`,
//! `play` and `generate`.

pub mod error;
pub mod experiment;
pub mod generate;
pub mod input;
pub mod pairing;
pub mod play;
pub mod reduce;
pub mod solve;

use std::io::{IsTerminal, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use mbdom::game::{SolverConfig, DEFAULT_MAX_N};
use mbdom::pairing::DEFAULT_PAIRING_CAP;

use error::CliError;
use experiment::{ExperimentConfig, ExperimentName};
use generate::GenerateWhat;
use input::{InputArgs, InputFormat};
use reduce::ReductionKind;
use solve::{EngineChoice, FirstPlayer};

#[derive(Debug, Parser)]
#[command(
    name = "mbdom",
    version,
    about = "Maker-Breaker domination game solver"
)]
pub struct Cli {
    /// Input format.
    #[arg(long, global = true, value_enum, default_value_t = InputFormat::Auto)]
    pub format: InputFormat,
    #[arg(long, global = true, value_enum, default_value_t = EngineChoice::Auto)]
    pub engine: EngineChoice,
    /// Seed for everything random.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Vertex cap for exhaustive search (exact engine, pairing search, perfect play).
    #[arg(long, global = true)]
    pub max_n: Option<usize>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Outcome of the game on a graph.
    Solve {
        #[command(flatten)]
        input: InputArgs,
        /// Also report who wins with this player moving first.
        #[arg(long, value_enum)]
        first: Option<FirstPlayer>,
    },
    /// Search for a pairing dominating set.
    Pairing {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Build a reduction graph from a formula file.
    Reduce {
        #[arg(value_enum)]
        kind: ReductionKind,
        /// Formula file, `-` for stdin.
        formula: PathBuf,
        /// Write the graph here instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Write the vertex map (JSON) here.
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Run a verification experiment.
    Experiment {
        #[arg(value_enum)]
        name: ExperimentName,
        /// Size limit (vertices, leaves or variables).
        #[arg(short, long)]
        n: Option<usize>,
        /// Number of random cases.
        #[arg(short, long)]
        count: Option<usize>,
    },
    /// Play against the engine in the terminal.
    Play {
        #[command(flatten)]
        input: InputArgs,
        /// Side you play.
        #[arg(long, value_enum, default_value_t = FirstPlayer::Dominator)]
        human: FirstPlayer,
        /// Let the engine move first.
        #[arg(long)]
        engine_first: bool,
    },
    /// Print a graph from a family or the fixture catalogue.
    Generate {
        #[command(subcommand)]
        what: GenerateWhat,
    },
}

fn solver_config(cli: &Cli) -> SolverConfig {
    SolverConfig {
        max_n: cli.max_n.unwrap_or(DEFAULT_MAX_N),
        ..SolverConfig::default()
    }
}

fn write_json<T: serde::Serialize>(v: &T, w: &mut dyn Write) -> Result<(), CliError> {
    writeln!(w, "{}", serde_json::to_string_pretty(v)?)?;
    Ok(())
}

/// Runs everything except `play`, which needs a terminal and is handled by [`run_play`].
pub fn run(cli: &Cli, w: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Solve { input, first } => {
            let loaded = input::load(input, cli.format)?;
            let out = solve::solve(
                &loaded,
                cli.engine,
                first.map(Into::into),
                &solver_config(cli),
            )?;
            if cli.json {
                write_json(&out, w)
            } else {
                Ok(solve::render(&out, w)?)
            }
        }
        Command::Pairing { input } => {
            let loaded = input::load(input, cli.format)?;
            let cap = cli.max_n.unwrap_or(DEFAULT_PAIRING_CAP);
            let out = pairing::pairing(&loaded, cli.engine, cap)?;
            if cli.json {
                write_json(&out, w)
            } else {
                Ok(pairing::render(&out, w)?)
            }
        }
        Command::Reduce {
            kind,
            formula,
            out,
            map,
        } => {
            let text = InputArgs {
                path: Some(formula.clone()),
                inline: None,
            }
            .read()?;
            let r = reduce::reduce(*kind, &text)?;
            reduce::write_outputs(&r, cli.json, out.as_deref(), map.as_deref(), w)
        }
        Command::Experiment { name, n, count } => {
            let cfg = ExperimentConfig::new(*name, *n, *count, cli.seed)?;
            let out = experiment::run(&cfg);
            if cli.json {
                write_json(&out, w)?;
            } else {
                experiment::render(&out, w)?;
            }
            if out.passed() {
                Ok(())
            } else {
                Err(CliError::Failed(format!(
                    "{} counterexamples",
                    out.counterexamples.len()
                )))
            }
        }
        Command::Generate { what } => generate::generate(what, cli.seed, cli.json, w),
        Command::Play { .. } => run_play(cli, std::io::stdin().lock(), w),
    }
}

pub fn run_play<R: std::io::BufRead>(
    cli: &Cli,
    stdin: R,
    w: &mut dyn Write,
) -> Result<(), CliError> {
    let Command::Play {
        input,
        human,
        engine_first,
    } = &cli.command
    else {
        unreachable!("called for play only");
    };
    if !std::io::stdin().is_terminal() {
        return Err(CliError::Env(
            "play needs an interactive terminal on stdin".into(),
        ));
    }
    let loaded = input::load(input, cli.format)?;
    let max_n = cli.max_n.unwrap_or(DEFAULT_MAX_N);
    play::play_session(
        &loaded.graph,
        (*human).into(),
        !engine_first,
        max_n,
        stdin,
        w,
    )?;
    Ok(())
}
