//! Graph families for exhaustive and randomised checks: every labelled graph on
//! `n` vertices, every free tree up to isomorphism, random graphs, random trees
//! and random cotrees.

use std::collections::BTreeSet;

use rand::Rng;

use crate::cotree::CotreeExpr;
use crate::graph::{Graph, GraphBuilder, Vertex};

/// All `2^(n(n-1)/2)` labelled graphs on `n` vertices, one per edge subset of `K_n`.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let slots: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(slots.len() < 64, "too many edge slots to enumerate");
    (0u64..1 << slots.len()).map(move |mask| {
        let mut b = GraphBuilder::new(n);
        for (i, &(u, v)) in slots.iter().enumerate() {
            if mask >> i & 1 == 1 {
                b.add_edge(u, v);
            }
        }
        b.build()
    })
}

/// Decodes a Prüfer sequence (entries in `0..len+2`) into a labelled tree.
pub fn tree_from_prufer(seq: &[Vertex]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: BTreeSet<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut b = GraphBuilder::new(n);
    for &x in seq {
        let leaf = *leaves.iter().next().expect("a leaf always exists");
        leaves.remove(&leaf);
        b.add_edge(leaf, x);
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let mut rest = leaves.into_iter();
    let (u, v) = (rest.next().unwrap(), rest.next().unwrap());
    b.add_edge(u, v);
    b.build()
}

/// All `n^(n-2)` labelled trees on `n ≥ 1` vertices.
pub fn all_labeled_trees(n: usize) -> Vec<Graph> {
    match n {
        0 => return vec![],
        1 => return vec![Graph::empty(1)],
        _ => {}
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let seq: Vec<Vertex> = (0..len)
                .map(|_| {
                    let d = code % n;
                    code /= n;
                    d
                })
                .collect();
            tree_from_prufer(&seq)
        })
        .collect()
}

/// Canonical string of a tree, equal for isomorphic trees. Roots at the
/// centre (or the smaller encoding over both centres) and encodes with the
/// usual sorted-parenthesis scheme.
pub fn tree_canonical_form(t: &Graph) -> String {
    assert!(t.is_tree(), "canonical form is only defined for trees");
    centers(t)
        .into_iter()
        .map(|c| encode_rooted(t, c, usize::MAX))
        .min()
        .unwrap()
}

fn centers(t: &Graph) -> Vec<Vertex> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    let mut layer: Vec<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in t.neighbors(leaf) {
                if degree[w] > 1 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
            degree[leaf] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn encode_rooted(t: &Graph, v: Vertex, parent: Vertex) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode_rooted(t, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// One representative of every free (unlabelled) tree on `n ≥ 1` vertices,
/// grown by attaching a leaf to every vertex of every tree on `n - 1` vertices.
pub fn free_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![];
    }
    let mut level = vec![Graph::empty(1)];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in t.vertices() {
                let mut b = GraphBuilder::from_graph(t);
                let leaf = b.add_vertex();
                b.add_edge(v, leaf);
                let g = b.build();
                if seen.insert(tree_canonical_form(&g)) {
                    next.push(g);
                }
            }
        }
        debug_assert!(next.iter().all(|g| g.n() == size));
        level = next;
    }
    level
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                b.add_edge(u, v);
            }
        }
    }
    b.build()
}

/// Uniform labelled tree on `n ≥ 1` vertices via a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    match n {
        0 => Graph::empty(0),
        1 => Graph::empty(1),
        _ => {
            let seq: Vec<Vertex> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
            tree_from_prufer(&seq)
        }
    }
}

/// Random cotree with exactly `leaves ≥ 1` leaves. Internal nodes get two or
/// three children and a random kind.
pub fn random_cotree<R: Rng + ?Sized>(leaves: usize, rng: &mut R) -> CotreeExpr {
    assert!(leaves >= 1);
    if leaves == 1 {
        return CotreeExpr::Leaf;
    }
    let arity = if leaves >= 3 && rng.random_bool(0.3) {
        3
    } else {
        2
    };
    // Random composition of `leaves` into `arity` positive parts.
    let mut cuts: BTreeSet<usize> = BTreeSet::new();
    while cuts.len() < arity - 1 {
        cuts.insert(rng.random_range(1..leaves));
    }
    let mut parts = Vec::with_capacity(arity);
    let mut prev = 0;
    for c in cuts.into_iter().chain(std::iter::once(leaves)) {
        parts.push(c - prev);
        prev = c;
    }
    let children = parts.into_iter().map(|k| random_cotree(k, rng)).collect();
    if rng.random_bool(0.5) {
        CotreeExpr::Union(children)
    } else {
        CotreeExpr::Join(children)
    }
}
