use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use serde_json::{json, Value};

use mbdom::reductions::{
    poscnf_to_graph, poscnf_to_split_graph, threesat_to_pairing_graph, PosCnfFormula,
    ThreeSatFormula,
};
use mbdom::Graph;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReductionKind {
    /// POS-CNF formula to a bipartite graph with the same game winner.
    Poscnf,
    /// Same, with the variable vertices made a clique.
    PoscnfSplit,
    /// 3-SAT formula (DIMACS) to the pairing gadget graph.
    Threesat,
}

pub struct Reduced {
    pub graph: Graph,
    pub map: Value,
    pub summary: String,
}

pub fn reduce(kind: ReductionKind, text: &str) -> Result<Reduced, CliError> {
    let (graph, map, what) = match kind {
        ReductionKind::Poscnf | ReductionKind::PoscnfSplit => {
            let f = PosCnfFormula::parse(text)?;
            let (g, map) = if kind == ReductionKind::Poscnf {
                poscnf_to_graph(&f)
            } else {
                poscnf_to_split_graph(&f)
            };
            let extra = if f.catch_all_clause().is_some() {
                " (one all-variables clause appended)"
            } else {
                ""
            };
            let what = format!(
                "{} variables, {} clauses{extra}",
                f.num_vars(),
                f.clauses().len()
            );
            (g, map.to_json(), what)
        }
        ReductionKind::Threesat => {
            let f = ThreeSatFormula::parse_dimacs(text)?;
            let (g, map) = threesat_to_pairing_graph(&f)?;
            let what = format!("{} variables, {} clauses", f.num_vars(), f.clauses().len());
            (g, serde_json::to_value(&map)?, what)
        }
    };
    let summary = format!(
        "{what} -> graph with {} vertices and {} edges",
        graph.n(),
        graph.m()
    );
    Ok(Reduced {
        graph,
        map,
        summary,
    })
}

pub fn write_outputs(
    r: &Reduced,
    json_out: bool,
    out: Option<&Path>,
    map_out: Option<&Path>,
    w: &mut dyn Write,
) -> Result<(), CliError> {
    let body = if json_out {
        serde_json::to_string_pretty(&json!({ "graph": r.graph, "map": r.map }))? + "\n"
    } else {
        r.graph.to_edge_list()
    };
    match out {
        Some(p) => {
            std::fs::write(p, body)?;
            writeln!(w, "{}", r.summary)?;
            writeln!(w, "graph written to {}", p.display())?;
        }
        None => w.write_all(body.as_bytes())?,
    }
    if let Some(p) = map_out {
        std::fs::write(p, serde_json::to_string_pretty(&r.map)? + "\n")?;
        if out.is_some() {
            writeln!(w, "map written to {}", p.display())?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let r = reduce(ReductionKind::Poscnf, "p poscnf 4 3\n1 2\n1 4\n2 3 4\n").unwrap();
        assert_eq!((r.graph.n(), r.graph.m()), (10, 14));
        let r = reduce(ReductionKind::Poscnf, "p poscnf 2 1\n1 2\n").unwrap();
        assert_eq!((r.graph.n(), r.graph.m()), (4, 4));
        assert!(r.graph.vertices().all(|v| r.graph.degree(v) == 2));
        let r = reduce(ReductionKind::Threesat, "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n").unwrap();
        assert_eq!(r.graph.n(), 23);
        assert_eq!(r.map["clauses"], json!([21, 22]));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            reduce(ReductionKind::Threesat, "p cnf 3 1\n1 2 3 0\n"),
            Err(CliError::Parse(_))
        ));
        assert!(matches!(
            reduce(ReductionKind::Poscnf, "nonsense"),
            Err(CliError::Parse(_))
        ));
    }
}
