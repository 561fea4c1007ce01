use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphBuilder, Vertex};
use crate::pairing::{is_pairing_dominating_set, Pairing};

use super::ReductionError;

pub const SAT_MAX_VARS: usize = 20;

/// DIMACS literal: `+i` is variable `i` (1-based), `-i` its negation.
pub type Literal = i32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeSatFormula {
    num_vars: usize,
    clauses: Vec<[Literal; 3]>,
}

fn var_of(l: Literal) -> usize {
    l.unsigned_abs() as usize - 1
}

impl ThreeSatFormula {
    /// Each clause has three nonzero literals on three distinct variables.
    pub fn new(num_vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self, ReductionError> {
        for (j, c) in clauses.iter().enumerate() {
            for &l in c {
                if l == 0 || l.unsigned_abs() as usize > num_vars {
                    return Err(ReductionError::InvalidFormula(format!(
                        "clause {}: literal {l} out of range 1..={num_vars}",
                        j + 1
                    )));
                }
            }
            let vars: BTreeSet<usize> = c.iter().map(|&l| var_of(l)).collect();
            if vars.len() != 3 {
                return Err(ReductionError::InvalidFormula(format!(
                    "clause {} repeats a variable",
                    j + 1
                )));
            }
        }
        Ok(Self { num_vars, clauses })
    }

    /// DIMACS CNF: `c` comments, a `p cnf n m` header, then literals with each
    /// clause terminated by `0`. Clauses may span lines.
    pub fn parse_dimacs(text: &str) -> Result<Self, ReductionError> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut cur: Vec<Literal> = Vec::new();
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            last_line = line;
            let l = raw.trim();
            if l.is_empty() || l.starts_with('c') || l.starts_with('%') {
                continue;
            }
            let bad = |msg: String| ReductionError::Parse { line, msg };
            if header.is_none() {
                let toks: Vec<&str> = l.split_whitespace().collect();
                match toks.as_slice() {
                    ["p", "cnf", n, m] => {
                        let n = n
                            .parse()
                            .map_err(|_| bad(format!("bad variable count {n:?}")))?;
                        let m = m
                            .parse()
                            .map_err(|_| bad(format!("bad clause count {m:?}")))?;
                        header = Some((n, m));
                    }
                    _ => return Err(bad("expected header `p cnf <vars> <clauses>`".into())),
                }
                continue;
            }
            for t in l.split_whitespace() {
                let lit: Literal = t
                    .parse()
                    .map_err(|_| bad(format!("not a literal: {t:?}")))?;
                if lit != 0 {
                    cur.push(lit);
                    continue;
                }
                let c: [Literal; 3] = cur
                    .as_slice()
                    .try_into()
                    .map_err(|_| bad(format!("clause has {} literals, expected 3", cur.len())))?;
                clauses.push(c);
                cur.clear();
            }
        }
        let (n, m) = header.ok_or(ReductionError::Parse {
            line: 1,
            msg: "missing header".into(),
        })?;
        if !cur.is_empty() {
            return Err(ReductionError::Parse {
                line: last_line,
                msg: "last clause is not terminated by 0".into(),
            });
        }
        if clauses.len() != m {
            return Err(ReductionError::Parse {
                line: last_line,
                msg: format!("header declares {m} clauses, found {}", clauses.len()),
            });
        }
        Self::new(n, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for [a, b, c] in &self.clauses {
            s.push_str(&format!("{a} {b} {c} 0\n"));
        }
        s
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    /// `assignment[i]` is the value of variable `i + 1`.
    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars
            && self
                .clauses
                .iter()
                .all(|c| c.iter().any(|&l| assignment[var_of(l)] == (l > 0)))
    }

    /// Every variable occurs both positively and negatively.
    pub fn check_gadget_precondition(&self) -> Result<(), ReductionError> {
        let mut pos = vec![false; self.num_vars];
        let mut neg = vec![false; self.num_vars];
        for &l in self.clauses.iter().flatten() {
            if l > 0 {
                pos[var_of(l)] = true;
            } else {
                neg[var_of(l)] = true;
            }
        }
        match (0..self.num_vars).find(|&i| !(pos[i] && neg[i])) {
            Some(i) => Err(ReductionError::Precondition(format!(
                "variable {} does not occur both positively and negatively",
                i + 1
            ))),
            None => Ok(()),
        }
    }
}

/// First satisfying assignment in counting order (variable 1 is the lowest
/// bit), or `None` if the formula is unsatisfiable.
pub fn sat_brute_force(f: &ThreeSatFormula) -> Result<Option<Vec<bool>>, ReductionError> {
    let n = f.num_vars;
    if n > SAT_MAX_VARS {
        return Err(ReductionError::TooManyVariables {
            n,
            cap: SAT_MAX_VARS,
        });
    }
    let clauses: Vec<(u32, u32)> = f
        .clauses
        .iter()
        .map(|c| {
            c.iter().fold((0, 0), |(p, q), &l| {
                if l > 0 {
                    (p | 1 << var_of(l), q)
                } else {
                    (p, q | 1 << var_of(l))
                }
            })
        })
        .collect();
    let hit = (0u32..1 << n).find(|&a| clauses.iter().all(|&(p, q)| a & p != 0 || !a & q != 0));
    Ok(hit.map(|a| (0..n).map(|i| a >> i & 1 == 1).collect()))
}

/// The seven vertices of one variable gadget: triangles `x y z` and
/// `x' y' z'` (primed fields `xp`, `yp`, `zp`) and `t` adjacent to `x`, `x'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariableGadget {
    pub x: Vertex,
    pub y: Vertex,
    pub z: Vertex,
    pub xp: Vertex,
    pub yp: Vertex,
    pub zp: Vertex,
    pub t: Vertex,
}

impl VariableGadget {
    fn at(base: Vertex) -> Self {
        Self {
            x: base,
            y: base + 1,
            z: base + 2,
            xp: base + 3,
            yp: base + 4,
            zp: base + 5,
            t: base + 6,
        }
    }

    fn contains(&self, v: Vertex) -> bool {
        (self.x..=self.t).contains(&v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetMap {
    pub vars: Vec<VariableGadget>,
    pub clauses: Vec<Vertex>,
}

/// Gadget graph: variable `i` occupies vertices `7i..7i+7` in the order of
/// [`VariableGadget`], clause `j` is vertex `7n + j`. A clause vertex sees
/// `x, y` of its positive variables and `x', y'` of its negated ones.
pub fn threesat_to_pairing_graph(
    f: &ThreeSatFormula,
) -> Result<(Graph, GadgetMap), ReductionError> {
    f.check_gadget_precondition()?;
    let n = f.num_vars;
    let vars: Vec<VariableGadget> = (0..n).map(|i| VariableGadget::at(7 * i)).collect();
    let clauses: Vec<Vertex> = (0..f.clauses.len()).map(|j| 7 * n + j).collect();
    let mut b = GraphBuilder::new(7 * n + clauses.len());
    for g in &vars {
        for (u, v) in [
            (g.x, g.y),
            (g.y, g.z),
            (g.x, g.z),
            (g.xp, g.yp),
            (g.yp, g.zp),
            (g.xp, g.zp),
            (g.t, g.x),
            (g.t, g.xp),
        ] {
            b.add_edge(u, v);
        }
    }
    for (c, &cv) in f.clauses.iter().zip(&clauses) {
        for &l in c {
            let g = &vars[var_of(l)];
            let (a, bb) = if l > 0 { (g.x, g.y) } else { (g.xp, g.yp) };
            b.add_edge(cv, a);
            b.add_edge(cv, bb);
        }
    }
    Ok((b.build(), GadgetMap { vars, clauses }))
}

/// Pairs `(x,y), (t,x'), (y',z')` for a true variable and `(x',y'), (t,x), (y,z)`
/// for a false one.
pub fn assignment_to_pairing(
    f: &ThreeSatFormula,
    a: &[bool],
    m: &GadgetMap,
) -> Result<Pairing, ReductionError> {
    if !f.evaluate(a) {
        return Err(ReductionError::Unsatisfying);
    }
    let pairs = m.vars.iter().zip(a).flat_map(|(g, &val)| {
        if val {
            [(g.x, g.y), (g.t, g.xp), (g.yp, g.zp)]
        } else {
            [(g.xp, g.yp), (g.t, g.x), (g.y, g.z)]
        }
    });
    Pairing::new(pairs).map_err(|e| ReductionError::Inconsistent(e.to_string()))
}

struct PairSet(Vec<(Vertex, Vertex)>);

impl PairSet {
    fn has(&self, u: Vertex, v: Vertex) -> bool {
        self.0
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    fn remove(&mut self, u: Vertex, v: Vertex) {
        self.0
            .retain(|&(a, b)| (a, b) != (u, v) && (a, b) != (v, u));
    }

    fn remove_touching(&mut self, x: Vertex) {
        self.0.retain(|&(a, b)| a != x && b != x);
    }

    fn pairing(&self) -> Pairing {
        Pairing::new(self.0.iter().copied()).expect("normalisation keeps pairs disjoint")
    }
}

/// Rewrites the `z` side of a gadget whose `t` is paired with the opposite
/// side, so that it holds the pair `(x, y)`.
fn normalise_side(d: &mut PairSet, x: Vertex, y: Vertex, z: Vertex) -> Result<(), ReductionError> {
    if d.has(x, y) {
        return Ok(());
    }
    if d.has(x, z) {
        d.remove(x, z);
        d.remove_touching(y);
    } else if d.has(y, z) {
        d.remove(y, z);
        d.remove_touching(x);
    } else {
        return Err(ReductionError::Inconsistent(format!(
            "vertex {z} is not covered"
        )));
    }
    d.0.push((x, y));
    Ok(())
}

/// Reads a satisfying assignment off a pairing dominating set of the gadget
/// graph. Each gadget is first rewritten into one of the two forms produced
/// by [`assignment_to_pairing`]; variable `i` is true iff `(x_i, y_i)` is a pair.
pub fn pairing_to_assignment(
    f: &ThreeSatFormula,
    p: &Pairing,
    m: &GadgetMap,
) -> Result<Vec<bool>, ReductionError> {
    let (g, _) = threesat_to_pairing_graph(f)?;
    let verify = |d: &Pairing| {
        is_pairing_dominating_set(&g, d).map_err(|e| ReductionError::Inconsistent(e.to_string()))
    };
    if !verify(p)? {
        return Err(ReductionError::NotPairingDominating);
    }
    let mut d = PairSet(p.pairs().to_vec());
    for gad in &m.vars {
        if d.has(gad.t, gad.xp) {
            normalise_side(&mut d, gad.x, gad.y, gad.z)?;
        } else if d.has(gad.t, gad.x) {
            normalise_side(&mut d, gad.xp, gad.yp, gad.zp)?;
        } else if d.has(gad.x, gad.xp) {
            // t is dominated through (x, x'); the other two pairs must be
            // (y, z) and (y', z'). Trade them for the true form.
            if !(d.has(gad.y, gad.z) && d.has(gad.yp, gad.zp)) {
                return Err(ReductionError::Inconsistent(format!(
                    "gadget at {} has (x, x') without both side pairs",
                    gad.x
                )));
            }
            d.remove(gad.x, gad.xp);
            d.remove(gad.y, gad.z);
            d.remove_touching(gad.t);
            d.0.push((gad.x, gad.y));
            d.0.push((gad.t, gad.xp));
        } else {
            return Err(ReductionError::Inconsistent(format!(
                "vertex {} is not covered",
                gad.t
            )));
        }
        if !verify(&d.pairing())? {
            return Err(ReductionError::Inconsistent(format!(
                "normalising gadget at {} broke domination",
                gad.x
            )));
        }
    }
    d.0.retain(|&(a, b)| m.vars.iter().any(|gad| gad.contains(a) && gad.contains(b)));
    if !verify(&d.pairing())? {
        return Err(ReductionError::Inconsistent(
            "dropping stray pairs broke domination".into(),
        ));
    }
    let a: Vec<bool> = m.vars.iter().map(|gad| d.has(gad.x, gad.y)).collect();
    if !f.evaluate(&a) {
        return Err(ReductionError::Inconsistent(
            "extracted assignment is unsatisfying".into(),
        ));
    }
    Ok(a)
}
