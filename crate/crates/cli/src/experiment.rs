use std::io::Write;

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use mbdom::enumerate::{free_trees, random_cotree, random_graph};
use mbdom::game::{Solver, SolverConfig};
use mbdom::graph::hanging_split;
use mbdom::pairing::{
    find_pairing_exact, is_pairing_dominating_set, pairing_from_tree_matching, PairingStrategyState,
};
use mbdom::reductions::{
    assignment_to_pairing, pairing_to_assignment, poscnf_to_graph, poscnf_to_split_graph,
    sat_brute_force, solve_poscnf, threesat_to_pairing_graph, CnfPlayer, PosCnfFormula,
    ThreeSatFormula,
};
use mbdom::structured::{cograph_outcome, cograph_pairing, tree_outcome};
use mbdom::{cotree_to_graph, glue, Cell, Graph, Outcome, Player, Position};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentName {
    /// Every labelled graph up to the size limit has outcome S, N or D.
    NoP,
    /// Adding an edge never lowers the outcome.
    Monotonicity,
    /// A pairing dominating set forces outcome D, and its strategy wins.
    PairingSoundness,
    /// Cograph solver and pairing construction against the exact engine.
    CographOracle,
    /// Tree solver and leaf matching against the exact engine, all free trees.
    TreeOracle,
    /// POS-CNF and 3-SAT reductions against brute force.
    ReductionEquiv,
    /// Gluing hanging split graphs never changes the outcome.
    Neutrality,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub name: ExperimentName,
    /// Largest graph (or leaf count, or variable count) generated.
    pub n: usize,
    /// Number of random cases, where the experiment samples.
    pub count: usize,
    pub seed: u64,
}

impl ExperimentName {
    /// Default and largest allowed size limit, and default case count.
    fn limits(self) -> (usize, usize, usize) {
        match self {
            ExperimentName::NoP => (6, 7, 0),
            ExperimentName::Monotonicity => (7, 10, 1000),
            ExperimentName::PairingSoundness => (9, 12, 500),
            ExperimentName::CographOracle => (9, 14, 500),
            ExperimentName::TreeOracle => (10, 14, 0),
            ExperimentName::ReductionEquiv => (3, 4, 20),
            ExperimentName::Neutrality => (7, 9, 50),
        }
    }
}

impl ExperimentConfig {
    pub fn new(
        name: ExperimentName,
        n: Option<usize>,
        count: Option<usize>,
        seed: u64,
    ) -> Result<Self, CliError> {
        let (default_n, max_n, default_count) = name.limits();
        let n = n.unwrap_or(default_n);
        if n > max_n {
            return Err(CliError::Cap(format!(
                "size limit {n} exceeds {max_n} for this experiment"
            )));
        }
        Ok(Self {
            name,
            n,
            count: count.unwrap_or(default_count),
            seed,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub case: usize,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentOutput {
    pub name: ExperimentName,
    pub n: usize,
    pub seed: u64,
    pub cases: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl ExperimentOutput {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

type CaseResult = Result<(), String>;

fn exact(g: &Graph) -> Result<Outcome, String> {
    let cfg = SolverConfig {
        max_n: 64,
        ..SolverConfig::default()
    };
    let mut s = Solver::new(g, &cfg).map_err(|e| e.to_string())?;
    let start = Position::start(g.clone());
    let d = s.solve(&start, Player::Dominator).winner;
    let st = s.solve(&start, Player::Staller).winner;
    Outcome::from_winners(d, st).ok_or_else(|| format!("second player wins both games on {g:?}"))
}

fn case_rng(seed: u64, case: usize) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(case as u64);
    r
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let slots = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges = slots
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e);
    Graph::from_edges(n, edges).expect("slots are valid edges")
}

fn run_cases<F>(cases: usize, check: F) -> Vec<Counterexample>
where
    F: Fn(usize) -> CaseResult + Sync + Send,
{
    let results: Vec<CaseResult> = (0..cases).into_par_iter().map(check).collect();
    results
        .into_iter()
        .enumerate()
        .filter_map(|(case, r)| r.err().map(|detail| Counterexample { case, detail }))
        .collect()
}

fn no_p(cfg: &ExperimentConfig) -> (usize, Vec<Counterexample>) {
    let blocks: Vec<(usize, u64)> = (0..=cfg.n)
        .map(|n| (n, 1u64 << (n * n.saturating_sub(1) / 2)))
        .collect();
    let total: u64 = blocks.iter().map(|b| b.1).sum();
    let locate = |mut i: u64| {
        for &(n, size) in &blocks {
            if i < size {
                return (n, i);
            }
            i -= size;
        }
        unreachable!("case index within total")
    };
    let bad = run_cases(total as usize, |i| {
        let (n, mask) = locate(i as u64);
        exact(&graph_from_mask(n, mask)).map(|_| ())
    });
    (total as usize, bad)
}

fn monotonicity(cfg: &ExperimentConfig) -> (usize, Vec<Counterexample>) {
    let n_max = cfg.n.max(2);
    let bad = run_cases(cfg.count, |i| {
        let mut r = case_rng(cfg.seed, i);
        let n = r.random_range(2..=n_max);
        let g = random_graph(n, r.random_range(0.1..0.9), &mut r);
        let non_edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        if non_edges.is_empty() {
            return Ok(());
        }
        let (u, v) = non_edges[r.random_range(0..non_edges.len())];
        let h = g.with_edge(u, v).map_err(|e| e.to_string())?;
        let (a, b) = (exact(&g)?, exact(&h)?);
        if a > b {
            return Err(format!("{g:?} plus edge ({u},{v}): {a} -> {b}"));
        }
        Ok(())
    });
    (cfg.count, bad)
}

fn staller_lines_dominated(g: &Graph, st: &PairingStrategyState) -> Result<(), String> {
    let free: Vec<usize> = g
        .vertices()
        .filter(|&v| st.occupied()[v] == Cell::Unplayed)
        .collect();
    if free.is_empty() {
        let mine = |v: usize| st.occupied()[v] == Cell::Dominator;
        return if g
            .vertices()
            .all(|u| mine(u) || g.neighbors(u).iter().any(|&w| mine(w)))
        {
            Ok(())
        } else {
            Err(format!(
                "pairing strategy fails on {g:?} ending at {:?}",
                st.occupied()
            ))
        };
    }
    for v in free {
        let mut next = st.clone();
        next.strategy_response(v).map_err(|e| e.to_string())?;
        staller_lines_dominated(g, &next)?;
    }
    Ok(())
}

fn pairing_soundness(cfg: &ExperimentConfig) -> (usize, Vec<Counterexample>) {
    let bad = run_cases(cfg.count, |i| {
        let mut r = case_rng(cfg.seed, i);
        let n = r.random_range(1..=cfg.n.max(1));
        let g = random_graph(n, r.random_range(0.2..0.9), &mut r);
        let Some(p) = find_pairing_exact(&g).map_err(|e| e.to_string())? else {
            return Ok(());
        };
        let o = exact(&g)?;
        if o != Outcome::D {
            return Err(format!("{g:?} has pairing {p:?} but outcome {o}"));
        }
        if n <= 6 {
            staller_lines_dominated(&g, &PairingStrategyState::new(n, p))?;
        }
        Ok(())
    });
    (cfg.count, bad)
}

fn cograph_oracle(cfg: &ExperimentConfig) -> (usize, Vec<Counterexample>) {
    let bad = run_cases(cfg.count, |i| {
        let mut r = case_rng(cfg.seed, i);
        let e = random_cotree(r.random_range(1..=cfg.n.max(1)), &mut r);
        let g = cotree_to_graph(&e);
        let (a, b) = (cograph_outcome(&e), exact(&g)?);
        if a != b {
            return Err(format!("{e}: cograph solver {a}, exact {b}"));
        }
        match cograph_pairing(&e) {
            Some(p)
                if a != Outcome::D
                    || !is_pairing_dominating_set(&g, &p).map_err(|e| e.to_string())? =>
            {
                Err(format!("{e}: invalid pairing {p:?}"))
            }
            None if a == Outcome::D => Err(format!("{e}: outcome D but no pairing")),
            _ => Ok(()),
        }
    });
    (cfg.count, bad)
}

fn tree_oracle(cfg: &ExperimentConfig) -> (usize, Vec<Counterexample>) {
    let trees: Vec<Graph> = (1..=cfg.n).flat_map(free_trees).collect();
    let bad = run_cases(trees.len(), |i| {
        let t = &trees[i];
        let (a, b) = (tree_outcome(t).map_err(|e| e.to_string())?, exact(t)?);
        if a != b {
            return Err(format!("{t:?}: tree solver {a}, exact {b}"));
        }
        let matched = pairing_from_tree_matching(t)
            .map_err(|e| e.to_string())?
            .is_some();
        if matched != (a == Outcome::D) {
            return Err(format!(
                "{t:?}: outcome {a} but perfect matching = {matched}"
            ));
        }
        Ok(())
    });
    (trees.len(), bad)
}

fn poscnf_family(max_vars: usize) -> Vec<PosCnfFormula> {
    let mut out = vec![PosCnfFormula::new(4, vec![vec![0, 1], vec![0, 3], vec![1, 2, 3]]).unwrap()];
    for n in 1..=max_vars {
        let pool: Vec<Vec<usize>> = (1u32..1 << n)
            .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
            .collect();
        let k = pool.len();
        let mut picks: Vec<Vec<usize>> = vec![vec![]];
        for a in 0..k {
            picks.push(vec![a]);
            for b in a..k {
                picks.push(vec![a, b]);
                for c in b..k {
                    picks.push(vec![a, b, c]);
                }
            }
        }
        for pick in picks {
            let clauses = pick.iter().map(|&i| pool[i].clone()).collect();
            out.push(PosCnfFormula::new(n, clauses).unwrap());
        }
    }
    out
}

fn poscnf_case(f: &PosCnfFormula) -> CaseResult {
    for (g, _) in [poscnf_to_graph(f), poscnf_to_split_graph(f)] {
        let mut s = Solver::new(&g, &SolverConfig::default()).map_err(|e| e.to_string())?;
        let start = Position::start(g.clone());
        for (first, player) in [
            (CnfPlayer::Prover, Player::Dominator),
            (CnfPlayer::Disprover, Player::Staller),
        ] {
            let want = solve_poscnf(f, first)
                .map_err(|e| e.to_string())?
                .as_game_winner();
            let got = s.solve(&start, player).winner;
            if want != got {
                return Err(format!(
                    "{}with {first:?} first: formula {want:?}, graph {got:?}",
                    f.to_text()
                ));
            }
        }
    }
    Ok(())
}

fn random_threesat(r: &mut ChaCha8Rng) -> ThreeSatFormula {
    loop {
        let n = r.random_range(3..=4);
        let m = r.random_range(2..=6);
        let clauses = (0..m)
            .map(|_| {
                let mut vars: Vec<i32> = (1..=n as i32).collect();
                for i in 0..3 {
                    let j = r.random_range(i..vars.len());
                    vars.swap(i, j);
                }
                let mut c = [vars[0], vars[1], vars[2]];
                for l in &mut c {
                    if r.random_bool(0.5) {
                        *l = -*l;
                    }
                }
                c
            })
            .collect();
        let f = ThreeSatFormula::new(n, clauses).expect("distinct in-range literals");
        if f.check_gadget_precondition().is_ok() {
            return f;
        }
    }
}

fn threesat_case(f: &ThreeSatFormula) -> CaseResult {
    let e = |x: &dyn std::fmt::Display| x.to_string();
    let (g, m) = threesat_to_pairing_graph(f).map_err(|x| e(&x))?;
    let sat = sat_brute_force(f).map_err(|x| e(&x))?;
    let found = find_pairing_exact(&g).map_err(|x| e(&x))?;
    match (sat, found) {
        (None, None) => Ok(()),
        (Some(a), Some(p)) => {
            let q = assignment_to_pairing(f, &a, &m).map_err(|x| e(&x))?;
            if !is_pairing_dominating_set(&g, &q).map_err(|x| e(&x))? {
                return Err(format!(
                    "{}assignment pairing does not dominate",
                    f.to_dimacs()
                ));
            }
            let back = pairing_to_assignment(f, &q, &m).map_err(|x| e(&x))?;
            let other = pairing_to_assignment(f, &p, &m).map_err(|x| e(&x))?;
            if back != a || !f.evaluate(&other) {
                return Err(format!("{}round trip failed", f.to_dimacs()));
            }
            Ok(())
        }
        (s, p) => Err(format!(
            "{}satisfiable = {}, pairing = {}",
            f.to_dimacs(),
            s.is_some(),
            p.is_some()
        )),
    }
}

fn unsatisfiable_fixture() -> ThreeSatFormula {
    let all8 = (0..8)
        .map(|s| {
            let sign = |b: i32| if s >> b & 1 == 1 { -1 } else { 1 };
            [sign(0), 2 * sign(1), 3 * sign(2)]
        })
        .collect();
    ThreeSatFormula::new(3, all8).expect("valid")
}

fn reduction_equiv(cfg: &ExperimentConfig) -> (usize, Vec<Counterexample>) {
    let cnf = poscnf_family(cfg.n);
    let k = cnf.len();
    let total = k + 1 + cfg.count;
    let bad = run_cases(total, |i| {
        if i < k {
            poscnf_case(&cnf[i])
        } else if i == k {
            threesat_case(&unsatisfiable_fixture())
        } else {
            threesat_case(&random_threesat(&mut case_rng(cfg.seed, i)))
        }
    });
    (total, bad)
}

fn neutrality(cfg: &ExperimentConfig) -> (usize, Vec<Counterexample>) {
    let total = 4 * (cfg.count + 1);
    let bad = run_cases(total, |i| {
        let k = 2 + i / (cfg.count + 1);
        let h = hanging_split(k).map_err(|e| e.to_string())?;
        if i % (cfg.count + 1) == 0 {
            let (rest, _) = h.remove_vertex(0).map_err(|e| e.to_string())?;
            let (o, r) = (exact(&h)?, exact(&rest)?);
            return if (o, r) == (Outcome::N, Outcome::D) {
                Ok(())
            } else {
                Err(format!("H_{k}: outcome {o}, without v {r}"))
            };
        }
        let mut r = case_rng(cfg.seed, i);
        let n = r.random_range(1..=cfg.n.max(1));
        let g = random_graph(n, r.random_range(0.2..0.8), &mut r);
        let u = r.random_range(0..n);
        let glued = glue(&g, u, &h, 0).map_err(|e| e.to_string())?;
        let (a, b) = (exact(&g)?, exact(&glued.graph)?);
        if a != b {
            return Err(format!("H_{k} glued onto {g:?} at {u}: {a} -> {b}"));
        }
        Ok(())
    });
    (total, bad)
}

pub fn run(cfg: &ExperimentConfig) -> ExperimentOutput {
    let (cases, counterexamples) = match cfg.name {
        ExperimentName::NoP => no_p(cfg),
        ExperimentName::Monotonicity => monotonicity(cfg),
        ExperimentName::PairingSoundness => pairing_soundness(cfg),
        ExperimentName::CographOracle => cograph_oracle(cfg),
        ExperimentName::TreeOracle => tree_oracle(cfg),
        ExperimentName::ReductionEquiv => reduction_equiv(cfg),
        ExperimentName::Neutrality => neutrality(cfg),
    };
    ExperimentOutput {
        name: cfg.name,
        n: cfg.n,
        seed: cfg.seed,
        cases,
        counterexamples,
    }
}

pub fn render(out: &ExperimentOutput, w: &mut dyn Write) -> std::io::Result<()> {
    let name = out.name.to_possible_value().expect("no skipped variants");
    writeln!(
        w,
        "{}: {} ({} cases, n <= {}, seed {}, {} counterexamples)",
        name.get_name(),
        if out.passed() { "PASS" } else { "FAIL" },
        out.cases,
        out.n,
        out.seed,
        out.counterexamples.len()
    )?;
    for c in out.counterexamples.iter().take(10) {
        writeln!(w, "  case {}: {}", c.case, c.detail)?;
    }
    Ok(())
}
