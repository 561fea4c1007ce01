use std::io::Write;

use serde::{Deserialize, Serialize};

use mbdom::pairing::{
    find_pairing_exact_with, first_move_pairing_with, pairing_from_tree_matching, Pairing,
};
use mbdom::structured::{cograph_pairing, recognize_cograph, Engine};
use mbdom::Vertex;

use crate::error::CliError;
use crate::input::Loaded;
use crate::solve::EngineChoice;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Opening {
    pub vertex: Vertex,
    pub pairing: Pairing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingOutput {
    pub engine: Engine,
    pub pairing: Option<Pairing>,
    /// When there is no pairing: an opening move after which the rest of the
    /// graph has one (exact engine only).
    pub opening: Option<Opening>,
}

fn via_cograph(input: &Loaded) -> Option<Option<Pairing>> {
    if let Some(e) = &input.cotree {
        return Some(cograph_pairing(e));
    }
    let rec = recognize_cograph(&input.graph)?;
    Some(cograph_pairing(&rec.expr).map(|p| p.translate(&rec.leaves).sorted()))
}

pub fn pairing(
    input: &Loaded,
    engine: EngineChoice,
    cap: usize,
) -> Result<PairingOutput, CliError> {
    let g = &input.graph;
    let exact = || -> Result<PairingOutput, CliError> {
        let pairing = find_pairing_exact_with(g, cap)?;
        let opening = match pairing {
            Some(_) => None,
            None => first_move_pairing_with(g, cap)?
                .map(|(vertex, pairing)| Opening { vertex, pairing }),
        };
        Ok(PairingOutput {
            engine: Engine::Exact,
            pairing,
            opening,
        })
    };
    let tree = || -> Result<PairingOutput, CliError> {
        Ok(PairingOutput {
            engine: Engine::Tree,
            pairing: pairing_from_tree_matching(g)?,
            opening: None,
        })
    };
    let cograph = |p: Option<Pairing>| PairingOutput {
        engine: Engine::Cograph,
        pairing: p,
        opening: None,
    };
    match engine {
        EngineChoice::Exact => exact(),
        EngineChoice::Tree if g.is_forest() => tree(),
        EngineChoice::Tree => Err(CliError::Parse("the tree engine needs a forest".into())),
        EngineChoice::Cograph => via_cograph(input)
            .map(cograph)
            .ok_or_else(|| CliError::Parse("the cograph engine needs a P4-free graph".into())),
        EngineChoice::Auto if input.cotree.is_none() && g.is_forest() => tree(),
        EngineChoice::Auto => match via_cograph(input) {
            Some(p) => Ok(cograph(p)),
            None => exact(),
        },
    }
}

fn pairs_text(p: &Pairing) -> String {
    p.pairs()
        .iter()
        .map(|(u, v)| format!("({u},{v})"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render(out: &PairingOutput, w: &mut dyn Write) -> std::io::Result<()> {
    match &out.pairing {
        Some(p) => {
            writeln!(
                w,
                "{} pairs: {} (engine: {})",
                p.len(),
                pairs_text(p),
                out.engine
            )?;
            writeln!(
                w,
                "Dominator wins by answering each Staller move with its partner, so the outcome is D"
            )?;
        }
        None => {
            writeln!(w, "none (engine: {})", out.engine)?;
            if let Some(o) = &out.opening {
                writeln!(
                    w,
                    "after opening with {}, the rest has pairs {}, so Dominator wins moving first",
                    o.vertex,
                    pairs_text(&o.pairing)
                )?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::{parse, InputFormat};
    use mbdom::pairing::is_pairing_dominating_set;

    fn run(text: &str) -> PairingOutput {
        pairing(
            &parse(text, InputFormat::Auto).unwrap(),
            EngineChoice::Auto,
            40,
        )
        .unwrap()
    }

    #[test]
    fn examples() {
        let c5 = run("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
        assert_eq!((c5.pairing, c5.engine), (None, Engine::Exact));
        let p6 = run("6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n");
        assert_eq!(p6.pairing.unwrap().len(), 3);
        let (g, pairs) = mbdom::catalog::pairing_example();
        let out = run(&g.to_edge_list());
        assert_eq!(out.pairing.as_ref().unwrap().len(), pairs.len());
        assert!(is_pairing_dominating_set(&g, &out.pairing.unwrap()).unwrap());
    }

    #[test]
    fn cograph_pairings_use_input_numbering() {
        // C4 given as an edge list: 0-1-2-3-0, a cograph.
        let text = "4 4\n0 1\n1 2\n2 3\n3 0\n";
        let out = run(text);
        assert_eq!(out.engine, Engine::Cograph);
        let g = parse(text, InputFormat::Auto).unwrap().graph;
        assert!(is_pairing_dominating_set(&g, &out.pairing.unwrap()).unwrap());
    }

    #[test]
    fn opening_reported_without_pairing() {
        let out = run("3 2\n0 1\n1 2\n");
        assert_eq!(out.pairing, None);
        let ex = pairing(
            &parse("3 2\n0 1\n1 2\n", InputFormat::Auto).unwrap(),
            EngineChoice::Exact,
            40,
        )
        .unwrap();
        assert_eq!(ex.opening.unwrap().vertex, 1);
    }
}
