//! Simple undirected graphs on dense vertex indices `0..n`, the text and JSON
//! formats used to move them around, and the three composition operators
//! (disjoint union, join and glue).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("{name}({got}) is undefined, need n >= {min}")]
    TooSmall {
        name: &'static str,
        min: usize,
        got: usize,
    },
    #[error("graph has {n} vertices, at most {max} are supported here")]
    TooManyVertices { n: usize, max: usize },
}

/// An immutable simple undirected graph.
///
/// Adjacency is kept symmetric and irreflexive by every constructor.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<BTreeSet<Vertex>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// Mutable edge accumulator used by constructors in this crate.
#[derive(Clone, Debug)]
pub(crate) struct GraphBuilder {
    adj: Vec<BTreeSet<Vertex>>,
}

impl GraphBuilder {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub(crate) fn from_graph(g: &Graph) -> Self {
        Self { adj: g.adj.clone() }
    }

    pub(crate) fn add_vertex(&mut self) -> Vertex {
        self.adj.push(BTreeSet::new());
        self.adj.len() - 1
    }

    /// Panics on invalid input; callers inside the crate only pass checked indices.
    pub(crate) fn add_edge(&mut self, u: Vertex, v: Vertex) {
        assert!(u != v, "self-loop on {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub(crate) fn build(self) -> Graph {
        Graph { adj: self.adj }
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    /// Builds a graph from an edge list. Duplicate edges are ignored.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            b.add_edge(u, v);
        }
        Ok(b.build())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn neighbors(&self, u: Vertex) -> &BTreeSet<Vertex> {
        &self.adj[u]
    }

    pub fn degree(&self, u: Vertex) -> usize {
        self.adj[u].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(BTreeSet::len).min()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, u: Vertex) -> Result<(), GraphError> {
        if u < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: u,
                n: self.n(),
            })
        }
    }

    /// `N[u]`: `u` together with its neighbours.
    pub fn closed_neighborhood(&self, u: Vertex) -> Result<BTreeSet<Vertex>, GraphError> {
        self.check_vertex(u)?;
        let mut s = self.adj[u].clone();
        s.insert(u);
        Ok(s)
    }

    /// Closed neighbourhoods as bitmasks. Only defined for graphs with at most 64 vertices.
    pub fn closed_masks(&self) -> Result<Vec<u64>, GraphError> {
        if self.n() > 64 {
            return Err(GraphError::TooManyVertices {
                n: self.n(),
                max: 64,
            });
        }
        Ok(self
            .adj
            .iter()
            .enumerate()
            .map(|(u, s)| s.iter().fold(1u64 << u, |acc, &v| acc | (1u64 << v)))
            .collect())
    }

    /// Returns a copy with the extra edge `uv`.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let mut b = GraphBuilder::from_graph(self);
        b.add_edge(u, v);
        Ok(b.build())
    }

    /// Induced subgraph on `keep` (in the given order). The returned table maps
    /// each new index to the original vertex.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut new_index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = i;
        }
        let mut b = GraphBuilder::new(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = new_index[w];
                if j != usize::MAX && i < j {
                    b.add_edge(i, j);
                }
            }
        }
        (b.build(), keep.to_vec())
    }

    /// `G ∖ N[u]`, with the new-to-old index table.
    pub fn delete_closed_neighborhood(
        &self,
        u: Vertex,
    ) -> Result<(Graph, Vec<Vertex>), GraphError> {
        let closed = self.closed_neighborhood(u)?;
        let keep: Vec<Vertex> = self.vertices().filter(|v| !closed.contains(v)).collect();
        Ok(self.induced_subgraph(&keep))
    }

    /// `G ∖ {u}`, with the new-to-old index table.
    pub fn remove_vertex(&self, u: Vertex) -> Result<(Graph, Vec<Vertex>), GraphError> {
        self.check_vertex(u)?;
        let keep: Vec<Vertex> = self.vertices().filter(|&v| v != u).collect();
        Ok(self.induced_subgraph(&keep))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    b.add_edge(u, v);
                }
            }
        }
        b.build()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n()
    }

    /// Connected and acyclic. The empty graph is not a tree.
    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m() + 1 == self.n() && self.is_connected()
    }

    /// Proper 2-colouring check.
    pub fn is_bipartite(&self) -> bool {
        let mut color: Vec<Option<bool>> = vec![None; self.n()];
        for s in self.vertices() {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let cu = color[u].unwrap();
                for &v in &self.adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            stack.push(v);
                        }
                        Some(cv) if cv == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Looks for an induced path on four vertices, returned in path order.
    pub fn find_induced_p4(&self) -> Option<[Vertex; 4]> {
        for (b, c) in self.edges() {
            for (b, c) in [(b, c), (c, b)] {
                for &a in &self.adj[b] {
                    if a == c || self.has_edge(a, c) {
                        continue;
                    }
                    for &d in &self.adj[c] {
                        if d == b || d == a || self.has_edge(d, b) || self.has_edge(d, a) {
                            continue;
                        }
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
        None
    }

    /// Serialises in the edge-list text format (`n m` header, one edge per line).
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

/// Parses the edge-list text format: a header line `n m` followed by `m` lines `u v`.
/// Blank lines are skipped, CRLF line endings are accepted.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        msg: "missing `n m` header".into(),
    })?;
    let (n, m) = parse_pair(hline, header)?;

    let mut b = GraphBuilder::new(n);
    let mut seen = 0;
    for (line, l) in lines {
        if seen == m {
            return Err(GraphError::Parse {
                line,
                msg: format!("more than the {m} declared edges"),
            });
        }
        let (u, v) = parse_pair(line, l)?;
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::Parse {
                    line,
                    msg: format!("vertex {x} out of range 0..{n}"),
                });
            }
        }
        if u == v {
            return Err(GraphError::Parse {
                line,
                msg: format!("self-loop on vertex {u}"),
            });
        }
        b.add_edge(u, v);
        seen += 1;
    }
    if seen < m {
        return Err(GraphError::Parse {
            line: text.lines().count().max(1),
            msg: format!("expected {m} edge lines, found {seen}"),
        });
    }
    Ok(b.build())
}

fn parse_pair(line: usize, l: &str) -> Result<(usize, usize), GraphError> {
    let bad = |msg: String| GraphError::Parse { line, msg };
    let mut it = l.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let tok = it
            .next()
            .ok_or_else(|| bad(format!("expected two integers, got {l:?}")))?;
        tok.parse()
            .map_err(|_| bad(format!("not a non-negative integer: {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(bad(format!("trailing tokens in {l:?}")));
    }
    Ok((a, b))
}

/// JSON form `{"n": int, "edges": [[u, v], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(j: GraphJson) -> Result<Self, Self::Error> {
        Graph::from_edges(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = GraphJson::deserialize(d)?;
        Graph::try_from(j).map_err(serde::de::Error::custom)
    }
}

/// Disjoint union. `g` keeps its indices, `h`'s are shifted by `g.n()`.
pub fn union(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let mut b = GraphBuilder::from_graph(g);
    for _ in 0..h.n() {
        b.add_vertex();
    }
    for (u, v) in h.edges() {
        b.add_edge(u + off, v + off);
    }
    b.build()
}

/// Join: the disjoint union plus every edge between the two sides. Same numbering as [`union`].
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let mut b = GraphBuilder::from_graph(&union(g, h));
    for u in 0..g.n() {
        for v in 0..h.n() {
            b.add_edge(u, v + off);
        }
    }
    b.build()
}

/// Result of [`glue`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Glued {
    pub graph: Graph,
    /// The merged vertex. It takes over `u`'s index.
    pub w: Vertex,
    /// Index in `graph` of every vertex of the first operand (identity).
    pub g_map: Vec<Vertex>,
    /// Index in `graph` of every vertex of the second operand.
    pub h_map: Vec<Vertex>,
}

/// Glues `h` onto `g` by identifying `u ∈ g` with `v ∈ h`.
///
/// `g` keeps its numbering with the merged vertex in `u`'s slot; the other
/// vertices of `h` are appended in increasing order.
pub fn glue(g: &Graph, u: Vertex, h: &Graph, v: Vertex) -> Result<Glued, GraphError> {
    g.check_vertex(u)?;
    h.check_vertex(v)?;
    let mut b = GraphBuilder::from_graph(g);
    let mut h_map = vec![usize::MAX; h.n()];
    h_map[v] = u;
    for x in h.vertices().filter(|&x| x != v) {
        h_map[x] = b.add_vertex();
    }
    for (a, c) in h.edges() {
        b.add_edge(h_map[a], h_map[c]);
    }
    Ok(Glued {
        graph: b.build(),
        w: u,
        g_map: g.vertices().collect(),
        h_map,
    })
}

/// Path on `n ≥ 1` vertices, `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    at_least("path", 1, n)?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Cycle on `n ≥ 3` vertices.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    at_least("cycle", 3, n)?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `K_{1,n}` with centre 0 and leaves `1..=n`.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    at_least("star", 1, n)?;
    Graph::from_edges(n + 1, (1..=n).map(|i| (0, i)))
}

/// `K_n`.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    at_least("complete", 1, n)?;
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Hanging split graph `H_n` (`n ≥ 2`): a clique on `{0, 1, .., n-1}` where
/// vertex 0 is the distinguished vertex `v`, and a pendant vertex `n-1+i`
/// attached to each clique vertex `i ≥ 1`.
pub fn hanging_split(n: usize) -> Result<Graph, GraphError> {
    at_least("hanging_split", 2, n)?;
    let mut b = GraphBuilder::new(2 * n - 1);
    for u in 0..n {
        for v in u + 1..n {
            b.add_edge(u, v);
        }
    }
    for i in 1..n {
        b.add_edge(i, n - 1 + i);
    }
    Ok(b.build())
}

/// Two adjacent centres `0` and `1` carrying `a` and `b` leaves respectively.
pub fn double_star(a: usize, b: usize) -> Graph {
    let mut g = GraphBuilder::new(2 + a + b);
    g.add_edge(0, 1);
    for i in 0..a {
        g.add_edge(0, 2 + i);
    }
    for i in 0..b {
        g.add_edge(1, 2 + a + i);
    }
    g.build()
}

fn at_least(name: &'static str, min: usize, got: usize) -> Result<(), GraphError> {
    if got < min {
        Err(GraphError::TooSmall { name, min, got })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degree_sequence(g: &Graph) -> Vec<usize> {
        let mut d: Vec<usize> = g.vertices().map(|u| g.degree(u)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    #[test]
    fn parse_examples() {
        let k2 = parse_edge_list("2 1\n0 1").unwrap();
        assert_eq!(k2, complete(2).unwrap());
        let p4 = parse_edge_list("4 3\n0 1\n1 2\n2 3").unwrap();
        assert_eq!(p4, path(4).unwrap());
        let e3 = parse_edge_list("3 0").unwrap();
        assert_eq!(e3, Graph::empty(3));
    }

    #[test]
    fn parse_tolerates_crlf_and_duplicates() {
        let g = parse_edge_list("3 3\r\n0 1\r\n1 0\r\n1 2\r\n").unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = parse_edge_list("3 2\n0 1\n1 7\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 3, .. }), "{err}");
        let err = parse_edge_list("3 1\n2 2\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }), "{err}");
        let err = parse_edge_list("3 1\n0 x\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }), "{err}");
        let err = parse_edge_list("3\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 1, .. }), "{err}");
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 1\n1 2\n").is_err());
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = cycle(5).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":5,"edges":[[0,1],[0,4],[1,2],[2,3],[3,4]]}"#);
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,2]]}"#).is_err());
    }

    #[test]
    fn union_examples() {
        let k1 = Graph::empty(1);
        assert_eq!(union(&k1, &k1), Graph::empty(2));
        let p2 = path(2).unwrap();
        let two_k2 = union(&p2, &p2);
        assert_eq!(two_k2.n(), 4);
        assert_eq!(two_k2.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        let u = union(&path(4).unwrap(), &cycle(5).unwrap());
        assert_eq!((u.n(), u.m()), (9, 8));
    }

    #[test]
    fn join_examples() {
        let k1 = Graph::empty(1);
        assert_eq!(join(&k1, &k1), complete(2).unwrap());
        let p3 = join(&k1, &Graph::empty(2));
        assert_eq!(p3.degree(0), 2);
        assert_eq!(p3.m(), 2);
        let p2 = path(2).unwrap();
        assert_eq!(join(&p2, &p2), complete(4).unwrap());
    }

    #[test]
    fn glue_examples() {
        let k2 = complete(2).unwrap();
        let gl = glue(&k2, 1, &k2, 0).unwrap();
        assert_eq!(gl.w, 1);
        assert_eq!(gl.graph, path(3).unwrap());

        let p3 = path(3).unwrap();
        let gl = glue(&p3, 2, &p3, 0).unwrap();
        assert_eq!(gl.graph, path(5).unwrap());
        assert_eq!(gl.h_map, vec![2, 3, 4]);

        let gl = glue(&cycle(5).unwrap(), 3, &k2, 1).unwrap();
        assert_eq!((gl.graph.n(), gl.graph.m()), (6, 6));
        assert!(gl.graph.has_edge(3, gl.h_map[0]));

        assert!(glue(&k2, 2, &k2, 0).is_err());
        assert!(glue(&k2, 0, &k2, 5).is_err());
    }

    #[test]
    fn glue_neighbourhood_of_merged_vertex() {
        let g = star(3).unwrap();
        let h = cycle(4).unwrap();
        let gl = glue(&g, 0, &h, 2).unwrap();
        let expect: BTreeSet<_> = [1, 2, 3, gl.h_map[1], gl.h_map[3]].into_iter().collect();
        assert_eq!(gl.graph.neighbors(gl.w), &expect);
    }

    #[test]
    fn generators() {
        let h2 = hanging_split(2).unwrap();
        assert_eq!((h2.n(), h2.m()), (3, 2));
        assert_eq!(degree_sequence(&h2), degree_sequence(&path(3).unwrap()));
        assert_eq!(h2.degree(0), 1);

        let h3 = hanging_split(3).unwrap();
        assert_eq!((h3.n(), h3.m()), (5, 5));
        assert_eq!(degree_sequence(&h3), vec![3, 3, 2, 1, 1]);
        assert_eq!(h3.degree(0), 2);

        assert_eq!(degree_sequence(&star(3).unwrap()), vec![3, 1, 1, 1]);
        assert_eq!(cycle(5).unwrap().m(), 5);
        assert_eq!(complete(5).unwrap().m(), 10);
        assert_eq!(double_star(2, 2).n(), 6);

        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert!(hanging_split(1).is_err());
        assert!(star(0).is_err());
    }

    #[test]
    fn closed_neighbourhood_examples() {
        let set = |v: &[usize]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(Graph::empty(1).closed_neighborhood(0).unwrap(), set(&[0]));
        assert_eq!(
            path(3).unwrap().closed_neighborhood(1).unwrap(),
            set(&[0, 1, 2])
        );
        assert_eq!(
            cycle(5).unwrap().closed_neighborhood(0).unwrap(),
            set(&[4, 0, 1])
        );
        assert!(path(3).unwrap().closed_neighborhood(3).is_err());
    }

    #[test]
    fn delete_closed_neighbourhood_examples() {
        let (g, map) = path(3).unwrap().delete_closed_neighborhood(1).unwrap();
        assert_eq!(g.n(), 0);
        assert!(map.is_empty());

        let (g, map) = path(4).unwrap().delete_closed_neighborhood(0).unwrap();
        assert_eq!(g, complete(2).unwrap());
        assert_eq!(map, vec![2, 3]);

        let (g, map) = cycle(5).unwrap().delete_closed_neighborhood(0).unwrap();
        assert_eq!(g, path(2).unwrap());
        assert_eq!(map, vec![2, 3]);
    }

    #[test]
    fn structure_predicates() {
        assert!(path(5).unwrap().is_tree());
        assert!(!cycle(5).unwrap().is_forest());
        assert!(union(&path(2).unwrap(), &Graph::empty(1)).is_forest());
        assert!(!Graph::empty(0).is_tree());
        assert!(cycle(6).unwrap().is_bipartite());
        assert!(!cycle(5).unwrap().is_bipartite());
        assert!(path(4).unwrap().find_induced_p4().is_some());
        assert!(cycle(4).unwrap().find_induced_p4().is_none());
        assert!(cycle(5).unwrap().find_induced_p4().is_some());
    }
}
