use std::collections::BTreeSet;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::graph::{Graph, GraphBuilder, Vertex};
use crate::outcome::Winner;

use super::ReductionError;

pub const POSCNF_MAX_VARS: usize = 12;

/// Positive CNF formula over variables `0..num_vars`. Every variable occurs
/// in some clause: if one does not, a clause containing all variables is
/// appended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosCnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<usize>>,
    catch_all: Option<usize>,
}

impl PosCnfFormula {
    /// Clauses use 0-based variable indices; each is sorted and deduplicated.
    pub fn new(num_vars: usize, clauses: Vec<Vec<usize>>) -> Result<Self, ReductionError> {
        if num_vars == 0 {
            return Err(ReductionError::InvalidFormula("no variables".into()));
        }
        let mut out = Vec::with_capacity(clauses.len() + 1);
        for (j, c) in clauses.into_iter().enumerate() {
            if c.is_empty() {
                return Err(ReductionError::InvalidFormula(format!(
                    "clause {} is empty",
                    j + 1
                )));
            }
            if let Some(&bad) = c.iter().find(|&&x| x >= num_vars) {
                return Err(ReductionError::InvalidFormula(format!(
                    "clause {} uses variable {} of {num_vars}",
                    j + 1,
                    bad + 1
                )));
            }
            let set: BTreeSet<usize> = c.into_iter().collect();
            out.push(set.into_iter().collect());
        }
        let used: BTreeSet<usize> = out.iter().flatten().copied().collect();
        let catch_all = if used.len() < num_vars {
            out.push((0..num_vars).collect());
            Some(out.len() - 1)
        } else {
            None
        };
        Ok(Self {
            num_vars,
            clauses: out,
            catch_all,
        })
    }

    /// Reads `p poscnf n m` followed by `m` clause lines of 1-based variable
    /// indices. Lines starting with `c` are comments.
    pub fn parse(text: &str) -> Result<Self, ReductionError> {
        let mut header = None;
        let mut clauses = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let l = raw.trim();
            if l.is_empty() || l.starts_with('c') {
                continue;
            }
            let bad = |msg: String| ReductionError::Parse { line, msg };
            if header.is_none() {
                let toks: Vec<&str> = l.split_whitespace().collect();
                match toks.as_slice() {
                    ["p", "poscnf", n, m] => {
                        let n: usize = n
                            .parse()
                            .map_err(|_| bad(format!("bad variable count {n:?}")))?;
                        let m: usize = m
                            .parse()
                            .map_err(|_| bad(format!("bad clause count {m:?}")))?;
                        header = Some((n, m));
                    }
                    _ => return Err(bad("expected header `p poscnf <vars> <clauses>`".into())),
                }
                continue;
            }
            let clause = l
                .split_whitespace()
                .map(|t| match t.parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(bad(format!("not a 1-based variable index: {t:?}"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            clauses.push(clause);
        }
        let (n, m) = header.ok_or(ReductionError::Parse {
            line: 1,
            msg: "missing header".into(),
        })?;
        if clauses.len() != m {
            return Err(ReductionError::Parse {
                line: text.lines().count(),
                msg: format!("header declares {m} clauses, found {}", clauses.len()),
            });
        }
        Self::new(n, clauses)
    }

    /// Text form accepted by [`PosCnfFormula::parse`] (the catch-all clause, if any, included).
    pub fn to_text(&self) -> String {
        let mut s = format!("p poscnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            let words: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            s.push_str(&words.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<usize>] {
        &self.clauses
    }

    /// Index of the appended all-variables clause, if one was needed.
    pub fn catch_all_clause(&self) -> Option<usize> {
        self.catch_all
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CnfPlayer {
    /// Sets the variables it picks to true.
    Prover,
    /// Sets the variables it picks to false.
    Disprover,
}

impl CnfPlayer {
    pub fn other(self) -> Self {
        match self {
            CnfPlayer::Prover => CnfPlayer::Disprover,
            CnfPlayer::Disprover => CnfPlayer::Prover,
        }
    }

    /// Prover plays the part of Dominator in the reduction graph.
    pub fn as_game_winner(self) -> Winner {
        match self {
            CnfPlayer::Prover => Winner::DominatorWins,
            CnfPlayer::Disprover => Winner::StallerWins,
        }
    }
}

/// Winner of the POS-CNF game under optimal play, by exhaustive search.
pub fn solve_poscnf(f: &PosCnfFormula, first: CnfPlayer) -> Result<CnfPlayer, ReductionError> {
    if f.num_vars > POSCNF_MAX_VARS {
        return Err(ReductionError::TooManyVariables {
            n: f.num_vars,
            cap: POSCNF_MAX_VARS,
        });
    }
    let clauses: Vec<u32> = f
        .clauses
        .iter()
        .map(|c| c.iter().fold(0u32, |m, &x| m | 1 << x))
        .collect();
    let all = (1u32 << f.num_vars) - 1;
    let mut memo = FxHashMap::default();
    let prover_wins = prover_wins(&clauses, all, 0, 0, first, &mut memo);
    Ok(if prover_wins {
        CnfPlayer::Prover
    } else {
        CnfPlayer::Disprover
    })
}

fn prover_wins(
    clauses: &[u32],
    all: u32,
    pro: u32,
    dis: u32,
    to_move: CnfPlayer,
    memo: &mut FxHashMap<(u32, u32, bool), bool>,
) -> bool {
    if clauses.iter().all(|&c| c & pro != 0) {
        return true;
    }
    if clauses.iter().any(|&c| c & !dis == 0) {
        return false;
    }
    let key = (pro, dis, to_move == CnfPlayer::Prover);
    if let Some(&r) = memo.get(&key) {
        return r;
    }
    let free = all & !(pro | dis);
    debug_assert!(free != 0, "a finished valuation is always decided");
    let moves = (0..32).filter(|i| free >> i & 1 == 1);
    let r = match to_move {
        CnfPlayer::Prover => moves
            .into_iter()
            .any(|i| prover_wins(clauses, all, pro | 1 << i, dis, CnfPlayer::Disprover, memo)),
        CnfPlayer::Disprover => moves
            .into_iter()
            .all(|i| prover_wins(clauses, all, pro, dis | 1 << i, CnfPlayer::Prover, memo)),
    };
    memo.insert(key, r);
    r
}

/// Where each variable and clause of a POS-CNF formula went in the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosCnfMap {
    /// Vertex `x_i` of variable `i`.
    pub vars: Vec<Vertex>,
    /// The two twin vertices `c_j^0, c_j^1` of clause `j`.
    pub clauses: Vec<[Vertex; 2]>,
    pub catch_all_clause: Option<usize>,
}

impl PosCnfMap {
    /// `{"vars": {"x1": .., ..}, "clauses": {"c1": [.., ..], ..}}`, 1-based names.
    pub fn to_json(&self) -> Value {
        let vars: serde_json::Map<String, Value> = self
            .vars
            .iter()
            .enumerate()
            .map(|(i, &v)| (format!("x{}", i + 1), json!(v)))
            .collect();
        let clauses: serde_json::Map<String, Value> = self
            .clauses
            .iter()
            .enumerate()
            .map(|(j, c)| (format!("c{}", j + 1), json!(c)))
            .collect();
        let mut out = json!({ "vars": vars, "clauses": clauses });
        if let Some(j) = self.catch_all_clause {
            out["catch_all_clause"] = json!(format!("c{}", j + 1));
        }
        out
    }
}

/// Bipartite graph with a vertex `x_i` per variable (indices `0..n`) and two
/// twin vertices per clause (`n + 2j` and `n + 2j + 1`), each adjacent to
/// the variables of its clause.
pub fn poscnf_to_graph(f: &PosCnfFormula) -> (Graph, PosCnfMap) {
    let n = f.num_vars;
    let mut b = GraphBuilder::new(n + 2 * f.clauses.len());
    let mut map = PosCnfMap {
        vars: (0..n).collect(),
        clauses: Vec::with_capacity(f.clauses.len()),
        catch_all_clause: f.catch_all,
    };
    for (j, c) in f.clauses.iter().enumerate() {
        let twins = [n + 2 * j, n + 2 * j + 1];
        for &x in c {
            for t in twins {
                b.add_edge(x, t);
            }
        }
        map.clauses.push(twins);
    }
    (b.build(), map)
}

/// [`poscnf_to_graph`] plus a clique on the variable vertices, which makes the
/// graph split.
pub fn poscnf_to_split_graph(f: &PosCnfFormula) -> (Graph, PosCnfMap) {
    let (g, map) = poscnf_to_graph(f);
    let mut b = GraphBuilder::from_graph(&g);
    for u in 0..f.num_vars {
        for v in u + 1..f.num_vars {
            b.add_edge(u, v);
        }
    }
    (b.build(), map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    fn four_var_formula() -> PosCnfFormula {
        PosCnfFormula::new(4, vec![vec![0, 1], vec![0, 3], vec![1, 2, 3]]).unwrap()
    }

    #[test]
    fn catch_all_clause() {
        let f = PosCnfFormula::new(3, vec![vec![0]]).unwrap();
        assert_eq!(f.clauses(), &[vec![0], vec![0, 1, 2]]);
        assert_eq!(f.catch_all_clause(), Some(1));
        assert_eq!(four_var_formula().catch_all_clause(), None);
        assert!(PosCnfFormula::new(2, vec![vec![]]).is_err());
        assert!(PosCnfFormula::new(2, vec![vec![2]]).is_err());
        assert!(PosCnfFormula::new(0, vec![]).is_err());
    }

    #[test]
    fn parse_and_print() {
        let f = PosCnfFormula::parse("c example\np poscnf 4 3\n1 2\n1 4\n2 3 4\n").unwrap();
        assert_eq!(f, four_var_formula());
        assert_eq!(PosCnfFormula::parse(&f.to_text()).unwrap(), f);
        assert!(matches!(
            PosCnfFormula::parse("p poscnf 2 1\n1 x\n"),
            Err(ReductionError::Parse { line: 2, .. })
        ));
        assert!(PosCnfFormula::parse("p cnf 2 1\n1 2\n").is_err());
        assert!(PosCnfFormula::parse("p poscnf 2 2\n1 2\n").is_err());
    }

    #[test]
    fn solver_examples() {
        let x1 = PosCnfFormula::new(1, vec![vec![0]]).unwrap();
        assert_eq!(
            solve_poscnf(&x1, CnfPlayer::Prover).unwrap(),
            CnfPlayer::Prover
        );
        assert_eq!(
            solve_poscnf(&x1, CnfPlayer::Disprover).unwrap(),
            CnfPlayer::Disprover
        );
        let or2 = PosCnfFormula::new(2, vec![vec![0, 1]]).unwrap();
        assert_eq!(
            solve_poscnf(&or2, CnfPlayer::Prover).unwrap(),
            CnfPlayer::Prover
        );
        assert_eq!(
            solve_poscnf(&or2, CnfPlayer::Disprover).unwrap(),
            CnfPlayer::Prover
        );
        let big = PosCnfFormula::new(13, vec![(0..13).collect()]).unwrap();
        assert!(solve_poscnf(&big, CnfPlayer::Prover).is_err());
    }

    #[test]
    fn graph_examples() {
        let (g, _) = poscnf_to_graph(&PosCnfFormula::new(2, vec![vec![0, 1]]).unwrap());
        assert_eq!(g.m(), 4);
        assert!(g.vertices().all(|v| g.degree(v) == 2) && g.is_connected());
        assert_eq!(g.n(), cycle(4).unwrap().n());

        let (g, map) = poscnf_to_graph(&four_var_formula());
        assert_eq!((g.n(), g.m()), (10, 14));
        assert!(g.is_bipartite());
        for [a, b] in map.clauses {
            assert_eq!(g.neighbors(a), g.neighbors(b));
        }

        let (g, _) = poscnf_to_graph(&PosCnfFormula::new(1, vec![vec![0]]).unwrap());
        assert_eq!((g.m(), g.degree(0)), (2, 2));
        assert!(g.is_tree() && g.n() == path(3).unwrap().n());
    }

    #[test]
    fn split_examples() {
        let or2 = PosCnfFormula::new(2, vec![vec![0, 1]]).unwrap();
        let (g, _) = poscnf_to_split_graph(&or2);
        assert_eq!(g.m(), 5);
        assert!(g.has_edge(0, 1));
        let x1 = PosCnfFormula::new(1, vec![vec![0]]).unwrap();
        assert_eq!(poscnf_to_split_graph(&x1).0, poscnf_to_graph(&x1).0);
        assert_eq!(poscnf_to_split_graph(&four_var_formula()).0.m(), 20);
    }

    #[test]
    fn map_json() {
        let (_, map) = poscnf_to_graph(&PosCnfFormula::new(2, vec![vec![0]]).unwrap());
        let j = map.to_json();
        assert_eq!(j["vars"]["x2"], 1);
        assert_eq!(j["clauses"]["c2"], json!([4, 5]));
        assert_eq!(j["catch_all_clause"], "c2");
    }
}
