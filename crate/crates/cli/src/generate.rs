use std::io::Write;

use clap::Subcommand;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use mbdom::catalog;
use mbdom::enumerate::{free_trees, random_cotree, random_graph, random_tree};
use mbdom::graph::{complete, cycle, double_star, hanging_split, path, star};
use mbdom::{cotree_to_graph, Graph};

use crate::error::CliError;

pub const FREE_TREE_CAP: usize = 16;

#[derive(Debug, Clone, Subcommand)]
pub enum GenerateWhat {
    /// A named fixture graph (see `generate fixtures`).
    Fixture {
        name: String,
    },
    /// List the fixture names.
    Fixtures,
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// K_{1,n}, centre 0.
    Star {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// Clique 0..n-1 with a pendant on every clique vertex but 0.
    HangingSplit {
        n: usize,
    },
    /// Adjacent centres 0 and 1 with a and b leaves.
    DoubleStar {
        a: usize,
        b: usize,
    },
    /// Random graph, each edge present with probability p.
    Random {
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
    },
    /// Uniform random labelled tree.
    RandomTree {
        n: usize,
    },
    /// Random cotree expression.
    RandomCotree {
        leaves: usize,
    },
    /// Every tree on n vertices up to isomorphism.
    FreeTrees {
        n: usize,
    },
}

fn emit(g: &Graph, json_out: bool, w: &mut dyn Write) -> Result<(), CliError> {
    if json_out {
        writeln!(w, "{}", serde_json::to_string(g)?)?;
    } else {
        write!(w, "{}", g.to_edge_list())?;
    }
    Ok(())
}

pub fn generate(
    what: &GenerateWhat,
    seed: u64,
    json_out: bool,
    w: &mut dyn Write,
) -> Result<(), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = match what {
        GenerateWhat::Fixtures => {
            for name in catalog::NAMES {
                writeln!(w, "{name}")?;
            }
            return Ok(());
        }
        GenerateWhat::Fixture { name } => catalog::by_name(name).ok_or_else(|| {
            CliError::Parse(format!(
                "unknown fixture {name:?}; known: {}",
                catalog::NAMES.join(", ")
            ))
        })?,
        GenerateWhat::Path { n } => path(*n)?,
        GenerateWhat::Cycle { n } => cycle(*n)?,
        GenerateWhat::Star { n } => star(*n)?,
        GenerateWhat::Complete { n } => complete(*n)?,
        GenerateWhat::HangingSplit { n } => hanging_split(*n)?,
        GenerateWhat::DoubleStar { a, b } => double_star(*a, *b),
        GenerateWhat::Random { n, p } => {
            if !(0.0..=1.0).contains(p) {
                return Err(CliError::Parse(format!(
                    "edge probability {p} is not in [0, 1]"
                )));
            }
            random_graph(*n, *p, &mut rng)
        }
        GenerateWhat::RandomTree { n } => random_tree(*n, &mut rng),
        GenerateWhat::RandomCotree { leaves } => {
            if *leaves == 0 {
                return Err(CliError::Parse("a cotree needs at least one leaf".into()));
            }
            let e = random_cotree(*leaves, &mut rng);
            if json_out {
                let out = json!({ "cotree": e.to_string(), "graph": cotree_to_graph(&e) });
                writeln!(w, "{out}")?;
            } else {
                writeln!(w, "{e}")?;
            }
            return Ok(());
        }
        GenerateWhat::FreeTrees { n } => {
            if *n > FREE_TREE_CAP {
                return Err(CliError::Cap(format!(
                    "free trees are enumerated up to n = {FREE_TREE_CAP}"
                )));
            }
            let trees = free_trees(*n);
            if json_out {
                writeln!(w, "{}", serde_json::to_string(&trees)?)?;
            } else {
                for (i, t) in trees.iter().enumerate() {
                    if i > 0 {
                        writeln!(w)?;
                    }
                    write!(w, "{}", t.to_edge_list())?;
                }
            }
            return Ok(());
        }
    };
    emit(&g, json_out, w)
}
