use crate::cotree::CotreeExpr;
use crate::graph::{Graph, Vertex};
use crate::outcome::Outcome;
use crate::pairing::Pairing;

use super::{join_outcome, union_outcome};

/// A cotree for a graph together with the vertex behind each leaf:
/// `leaves[i]` is the vertex of `g` that becomes vertex `i` of
/// `cotree_to_graph(&expr)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognizedCograph {
    pub expr: CotreeExpr,
    pub leaves: Vec<Vertex>,
}

/// Decomposes `g` into unions (over connected components) and joins (over
/// co-components). Returns `None` iff `g` has an induced `P4`. The empty graph
/// is not a cograph.
pub fn recognize_cograph(g: &Graph) -> Option<RecognizedCograph> {
    if g.is_empty() {
        return None;
    }
    let all: Vec<Vertex> = g.vertices().collect();
    let mut leaves = Vec::with_capacity(g.n());
    let expr = decompose(g, &all, &mut leaves)?;
    Some(RecognizedCograph { expr, leaves })
}

fn decompose(g: &Graph, verts: &[Vertex], leaves: &mut Vec<Vertex>) -> Option<CotreeExpr> {
    if verts.len() == 1 {
        leaves.push(verts[0]);
        return Some(CotreeExpr::Leaf);
    }
    let (sub, map) = g.induced_subgraph(verts);
    let comps = sub.components();
    let (parts, is_union) = if comps.len() > 1 {
        (comps, true)
    } else {
        let co = sub.complement().components();
        if co.len() == 1 {
            return None;
        }
        (co, false)
    };
    let children = parts
        .iter()
        .map(|part| {
            let orig: Vec<Vertex> = part.iter().map(|&i| map[i]).collect();
            decompose(g, &orig, leaves)
        })
        .collect::<Option<Vec<_>>>()?;
    Some(if is_union {
        CotreeExpr::Union(children)
    } else {
        CotreeExpr::Join(children)
    })
}

fn outcome_and_size(e: &CotreeExpr) -> (Outcome, usize) {
    match e {
        CotreeExpr::Leaf => (Outcome::N, 1),
        CotreeExpr::Union(cs) => cs
            .iter()
            .map(outcome_and_size)
            .reduce(|(a, sa), (b, sb)| (union_outcome(a, b), sa + sb))
            .expect("internal nodes have children"),
        CotreeExpr::Join(cs) => cs
            .iter()
            .map(outcome_and_size)
            .reduce(|(a, sa), (b, sb)| (join_outcome(sa, a, sb, b), sa + sb))
            .expect("internal nodes have children"),
    }
}

/// Outcome of the cograph described by `e`. A single vertex is `N`; unions
/// and joins combine their children from the left.
pub fn cograph_outcome(e: &CotreeExpr) -> Outcome {
    outcome_and_size(e).0
}

/// Binary cotree with the leaf labels filled in.
#[derive(Debug, Clone)]
enum Bin {
    Leaf(Vertex),
    Union(Box<Bin>, Box<Bin>),
    Join(Box<Bin>, Box<Bin>),
}

impl Bin {
    fn from_expr(e: &CotreeExpr, next: &mut Vertex) -> Bin {
        let fold = |cs: &[CotreeExpr], next: &mut Vertex, union: bool| {
            let mut it = cs.iter();
            let mut acc = Bin::from_expr(it.next().expect("internal nodes have children"), next);
            for c in it {
                let rhs = Box::new(Bin::from_expr(c, next));
                acc = if union {
                    Bin::Union(Box::new(acc), rhs)
                } else {
                    Bin::Join(Box::new(acc), rhs)
                };
            }
            acc
        };
        match e {
            CotreeExpr::Leaf => {
                *next += 1;
                Bin::Leaf(*next - 1)
            }
            CotreeExpr::Union(cs) => fold(cs, next, true),
            CotreeExpr::Join(cs) => fold(cs, next, false),
        }
    }

    fn size(&self) -> usize {
        match self {
            Bin::Leaf(_) => 1,
            Bin::Union(a, b) | Bin::Join(a, b) => a.size() + b.size(),
        }
    }

    fn outcome(&self) -> Outcome {
        match self {
            Bin::Leaf(_) => Outcome::N,
            Bin::Union(a, b) => union_outcome(a.outcome(), b.outcome()),
            Bin::Join(a, b) => join_outcome(a.size(), a.outcome(), b.size(), b.outcome()),
        }
    }

    fn first_two(&self) -> (Vertex, Vertex) {
        let mut out = Vec::with_capacity(2);
        self.collect_into(&mut out, 2);
        (out[0], out[1])
    }

    fn collect_into(&self, out: &mut Vec<Vertex>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        match self {
            Bin::Leaf(v) => out.push(*v),
            Bin::Union(a, b) | Bin::Join(a, b) => {
                a.collect_into(out, limit);
                b.collect_into(out, limit);
            }
        }
    }

    fn single(&self) -> Option<Vertex> {
        match self {
            Bin::Leaf(v) => Some(*v),
            _ => None,
        }
    }
}

/// Pairs for a subtree, following the inductive construction: unions merge
/// their parts' pairings, a join of two sides with at least two vertices each
/// pairs two vertices on each side, and a join with a single vertex `x`
/// reuses, extends or pairs `x` depending on the other side's outcome.
fn pairs_of(b: &Bin) -> Option<Vec<(Vertex, Vertex)>> {
    match b {
        Bin::Leaf(_) => None,
        Bin::Union(l, r) => {
            let mut p = pairs_of(l)?;
            p.extend(pairs_of(r)?);
            Some(p)
        }
        Bin::Join(l, r) => {
            if l.size() >= 2 && r.size() >= 2 {
                return Some(vec![l.first_two(), r.first_two()]);
            }
            let (x, other) = match l.single() {
                Some(x) => (x, r.as_ref()),
                None => (r.single().expect("one side is a single vertex"), l.as_ref()),
            };
            match other.outcome() {
                Outcome::S => None,
                Outcome::D => pairs_of(other),
                Outcome::N => pairs_with_universal(x, other),
            }
        }
    }
}

/// `x` is adjacent to every vertex of `other`, and `other` has outcome `N`.
fn pairs_with_universal(x: Vertex, other: &Bin) -> Option<Vec<(Vertex, Vertex)>> {
    match other {
        Bin::Leaf(y) => Some(vec![(x, *y)]),
        // An N join is a single vertex y joined with an S graph; x and y are
        // both universal.
        Bin::Join(p, q) => {
            let y = [(p, q), (q, p)]
                .into_iter()
                .find_map(|(k1, h)| k1.single().filter(|_| h.outcome() == Outcome::S))
                .expect("an N join has a single vertex facing an S side");
            Some(vec![(x, y)])
        }
        // An N union is a D part plus an N part; pair the D part on its own
        // and x together with the N part.
        Bin::Union(p, q) => {
            let (d_side, n_side) = if p.outcome() == Outcome::D {
                (p, q)
            } else {
                (q, p)
            };
            let mut s1 = pairs_of(d_side)?;
            let joined = Bin::Join(Box::new(Bin::Leaf(x)), n_side.clone());
            s1.extend(pairs_of(&joined)?);
            Some(s1)
        }
    }
}

/// A pairing dominating set of the cograph `cotree_to_graph(e)` (leaves
/// numbered left to right) when its outcome is `D`, and `None` otherwise.
pub fn cograph_pairing(e: &CotreeExpr) -> Option<Pairing> {
    let mut next = 0;
    let b = Bin::from_expr(e, &mut next);
    let pairs = pairs_of(&b)?;
    Some(
        Pairing::new(pairs)
            .expect("the construction never reuses a vertex")
            .sorted(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cotree::{cotree_to_graph, parse_cotree};
    use crate::graph::{complete, cycle, path};
    use crate::pairing::is_pairing_dominating_set;

    fn realises(g: &Graph, r: &RecognizedCograph) -> bool {
        let h = cotree_to_graph(&r.expr);
        h.n() == g.n()
            && h.vertices().all(|u| {
                h.vertices()
                    .all(|v| h.has_edge(u, v) == g.has_edge(r.leaves[u], r.leaves[v]))
            })
    }

    #[test]
    fn recognition_examples() {
        assert!(recognize_cograph(&path(4).unwrap()).is_none());
        assert!(recognize_cograph(&cycle(5).unwrap()).is_none());

        let k4 = complete(4).unwrap();
        let r = recognize_cograph(&k4).unwrap();
        assert_eq!(r.expr, CotreeExpr::Join(vec![CotreeExpr::Leaf; 4]));
        assert!(realises(&k4, &r));

        let p3 = path(3).unwrap();
        let r = recognize_cograph(&p3).unwrap();
        assert!(realises(&p3, &r));
        let CotreeExpr::Join(cs) = &r.expr else {
            panic!("P3 is a join")
        };
        assert_eq!(cs.len(), 2);
        assert!(cs.contains(&CotreeExpr::Leaf));
        assert!(cs.contains(&CotreeExpr::Union(vec![CotreeExpr::Leaf; 2])));
        assert!(recognize_cograph(&Graph::empty(0)).is_none());
    }

    #[test]
    fn outcome_examples() {
        assert_eq!(cograph_outcome(&CotreeExpr::Leaf), Outcome::N);
        assert_eq!(
            cograph_outcome(&parse_cotree("J(.,.)").unwrap()),
            Outcome::D
        );
        assert_eq!(
            cograph_outcome(&parse_cotree("J(.,U(.,.))").unwrap()),
            Outcome::N
        );
        assert_eq!(
            cograph_outcome(&parse_cotree("U(.,.)").unwrap()),
            Outcome::S
        );
    }

    #[test]
    fn pairing_examples() {
        let k2 = parse_cotree("J(.,.)").unwrap();
        assert_eq!(cograph_pairing(&k2), Some(Pairing::new([(0, 1)]).unwrap()));

        let c4 = parse_cotree("J(U(.,.),U(.,.))").unwrap();
        let p = cograph_pairing(&c4).unwrap();
        assert_eq!(p, Pairing::new([(0, 1), (2, 3)]).unwrap());
        assert!(is_pairing_dominating_set(&cotree_to_graph(&c4), &p).unwrap());

        let two_k2 = parse_cotree("U(J(.,.),J(.,.))").unwrap();
        assert_eq!(
            cograph_pairing(&two_k2),
            Some(Pairing::new([(0, 1), (2, 3)]).unwrap())
        );

        assert_eq!(cograph_pairing(&parse_cotree("J(.,U(.,.))").unwrap()), None);
        assert_eq!(cograph_pairing(&CotreeExpr::Leaf), None);
    }

    #[test]
    fn universal_vertex_cases() {
        // x joined with (K2 ∪ K1): the N-union case.
        let e = parse_cotree("J(.,U(J(.,.),.))").unwrap();
        let g = cotree_to_graph(&e);
        let p = cograph_pairing(&e).unwrap();
        assert!(is_pairing_dominating_set(&g, &p).unwrap());
        // x joined with (y joined with an S graph): pair the two universal vertices.
        let e = parse_cotree("J(.,J(.,U(.,.)))").unwrap();
        let p = cograph_pairing(&e).unwrap();
        assert_eq!(p, Pairing::new([(0, 1)]).unwrap());
        assert!(is_pairing_dominating_set(&cotree_to_graph(&e), &p).unwrap());
    }
}
