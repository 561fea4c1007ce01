use std::io::Read;
use std::path::PathBuf;

use clap::{Args, ValueEnum};

use mbdom::graph::GraphJson;
use mbdom::{cotree_to_graph, parse_cotree, parse_edge_list, CotreeExpr, Graph};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// Guess from the first character: `{` is JSON, `.`, `U` or `J` a cotree.
    Auto,
    EdgeList,
    Json,
    Cotree,
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Input file, `-` for stdin.
    pub path: Option<PathBuf>,
    /// Inline input; `;` separates edge-list lines.
    #[arg(short = 'e', long = "inline")]
    pub inline: Option<String>,
}

impl InputArgs {
    pub fn read(&self) -> Result<String, CliError> {
        if let Some(text) = &self.inline {
            return Ok(text.replace(';', "\n"));
        }
        match self.path.as_deref() {
            Some(p) if p.as_os_str() == "-" => {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s)?;
                Ok(s)
            }
            Some(p) => std::fs::read_to_string(p)
                .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", p.display()))),
            None => unreachable!("clap requires one input"),
        }
    }
}

/// A parsed graph, with its cotree when it was given as one.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub graph: Graph,
    pub cotree: Option<CotreeExpr>,
}

pub fn detect(text: &str) -> InputFormat {
    match text.trim_start().chars().next() {
        Some('{') => InputFormat::Json,
        Some('.' | 'U' | 'J') => InputFormat::Cotree,
        _ => InputFormat::EdgeList,
    }
}

pub fn parse(text: &str, fmt: InputFormat) -> Result<Loaded, CliError> {
    let fmt = match fmt {
        InputFormat::Auto => detect(text),
        f => f,
    };
    Ok(match fmt {
        InputFormat::EdgeList => Loaded {
            graph: parse_edge_list(text)?,
            cotree: None,
        },
        InputFormat::Json => {
            let j: GraphJson = serde_json::from_str(text)?;
            Loaded {
                graph: Graph::try_from(j)?,
                cotree: None,
            }
        }
        InputFormat::Cotree => {
            let e = parse_cotree(text)?;
            Loaded {
                graph: cotree_to_graph(&e),
                cotree: Some(e),
            }
        }
        InputFormat::Auto => unreachable!("resolved above"),
    })
}

pub fn load(src: &InputArgs, fmt: InputFormat) -> Result<Loaded, CliError> {
    parse(&src.read()?, fmt)
}
