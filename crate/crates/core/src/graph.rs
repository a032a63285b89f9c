//! Simple graphs: forbidden patterns, shadows and heavy graphs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::detect::embed;
use crate::error::{Error, Result};

/// A simple graph on vertices `0..n` with edges stored as sorted pairs in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PatternGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl PatternGraph {
    /// Builds a graph, canonicalizing the edge order. Loops, duplicates and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut canon = Vec::new();
        for (u, v) in edges {
            let e = (u.min(v), u.max(v));
            if u == v {
                return Err(Error::WrongArity {
                    edge: vec![u, v],
                    expected: 2,
                    found: 1,
                });
            }
            if e.1 >= n {
                return Err(Error::VertexOutOfRange {
                    edge: vec![e.0, e.1],
                    n,
                });
            }
            canon.push(e);
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge {
                edge: vec![w[0].0, w[0].1],
            });
        }
        Ok(Self { n, edges: canon })
    }

    pub(crate) fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < n));
        Self { n, edges }
    }

    pub fn empty(n: usize) -> Self {
        Self { n, edges: Vec::new() }
    }

    /// Complete graph `K_k`.
    pub fn complete(k: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..k {
            for v in u + 1..k {
                edges.push((u, v));
            }
        }
        Self::from_sorted(k, edges)
    }

    /// Path on `k` vertices (`k - 1` edges).
    pub fn path(k: usize) -> Self {
        let edges = (1..k).map(|v| (v - 1, v)).collect();
        Self::from_sorted(k, edges)
    }

    /// Cycle on `k >= 3` vertices.
    pub fn cycle(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::BadParams(format!("cycle needs at least 3 vertices, got {k}")));
        }
        let mut edges: Vec<_> = (1..k).map(|v| (v - 1, v)).collect();
        edges.push((0, k - 1));
        edges.sort_unstable();
        Ok(Self::from_sorted(k, edges))
    }

    /// Star with `leaves` edges; the center is vertex 0.
    pub fn star(leaves: usize) -> Self {
        let edges = (1..=leaves).map(|v| (0, v)).collect();
        Self::from_sorted(leaves + 1, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn adjacency(&self) -> Adjacency {
        let mut adj = Adjacency::new(self.n);
        for &(u, v) in &self.edges {
            adj.insert(u, v);
        }
        adj
    }

    /// True iff some (not necessarily induced) subgraph is isomorphic to
    /// `pattern`.
    pub fn contains_subgraph(&self, pattern: &PatternGraph) -> bool {
        if pattern.n > self.n {
            return false;
        }
        let host = self.adjacency();
        embed::search(&host, pattern, &[], &mut |_| true)
    }

    /// Edge-set containment on the same vertex set.
    pub fn is_edge_subset_of(&self, other: &PatternGraph) -> bool {
        self.n == other.n && self.edges.iter().all(|&(u, v)| other.has_edge(u, v))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PatternJson {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
            r: None,
            graph: None,
        })
        .expect("graph serialization cannot fail")
    }

    /// Parses `{"n": .., "edges": [[u, v], ..]}`; an optional `"r": 2` or
    /// `"graph": true` marker is accepted.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: PatternJson = serde_json::from_str(text).map_err(json_error)?;
        if let Some(r) = raw.r {
            if r != 2 {
                return Err(Error::Parse {
                    location: "r".into(),
                    message: format!("a graph must have r = 2, found {r}"),
                });
            }
        }
        Self::new(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v))).map_err(|e| Error::Parse {
            location: "edges".into(),
            message: e.to_string(),
        })
    }
}

impl fmt::Display for PatternGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Shorthand pattern names: `K4`, `P6` (six vertices), `C5` (five vertices),
/// `S2` (two edges).
impl FromStr for PatternGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParams(format!("unknown pattern `{s}` (expected Kk, Pk, Ck or Sk)"));
        let mut chars = s.chars();
        let kind = chars.next().ok_or_else(bad)?;
        let size: usize = chars.as_str().parse().map_err(|_| bad())?;
        match kind.to_ascii_uppercase() {
            'K' => Ok(Self::complete(size)),
            'P' => Ok(Self::path(size)),
            'C' => Self::cycle(size),
            'S' => Ok(Self::star(size)),
            _ => Err(bad()),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PatternJson {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    graph: Option<bool>,
}

pub(crate) fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        location: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    }
}

/// Dense symmetric adjacency matrix with cached degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjacency {
    n: usize,
    bits: Vec<bool>,
    degree: Vec<usize>,
}

impl Adjacency {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            bits: vec![false; n * n],
            degree: vec![0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn has(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.n + v]
    }

    pub fn insert(&mut self, u: usize, v: usize) {
        if !self.has(u, v) {
            self.bits[u * self.n + v] = true;
            self.bits[v * self.n + u] = true;
            self.degree[u] += 1;
            self.degree[v] += 1;
        }
    }

    pub fn remove(&mut self, u: usize, v: usize) {
        if self.has(u, v) {
            self.bits[u * self.n + v] = false;
            self.bits[v * self.n + u] = false;
            self.degree[u] -= 1;
            self.degree[v] -= 1;
        }
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&w| self.has(v, w))
    }

    pub fn to_graph(&self) -> PatternGraph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has(u, v) {
                    edges.push((u, v));
                }
            }
        }
        PatternGraph::from_sorted(self.n, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(matches!(PatternGraph::new(3, [(1, 1)]), Err(Error::WrongArity { .. })));
        assert!(matches!(
            PatternGraph::new(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { .. })
        ));
        assert!(matches!(
            PatternGraph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn named_patterns_use_vertex_counts() {
        let p: PatternGraph = "P4".parse().unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (4, 3));
        let c: PatternGraph = "C3".parse().unwrap();
        assert_eq!(c, PatternGraph::complete(3));
        let s: PatternGraph = "S2".parse().unwrap();
        assert_eq!((s.vertex_count(), s.edge_count()), (3, 2));
        assert!("X3".parse::<PatternGraph>().is_err());
        assert!("C2".parse::<PatternGraph>().is_err());
    }

    #[test]
    fn subgraph_containment() {
        let c4 = PatternGraph::cycle(4).unwrap();
        assert!(PatternGraph::complete(4).contains_subgraph(&c4));
        assert!(!PatternGraph::star(5).contains_subgraph(&PatternGraph::path(4)));
        assert!(PatternGraph::path(5).contains_subgraph(&PatternGraph::path(4)));
        assert!(!PatternGraph::cycle(5).unwrap().contains_subgraph(&PatternGraph::complete(3)));
    }

    #[test]
    fn json_accepts_markers() {
        let g = PatternGraph::from_json(r#"{"n":3,"edges":[[1,0],[1,2]],"graph":true}"#).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert!(PatternGraph::from_json(r#"{"n":3,"edges":[[0,1]],"r":3}"#).is_err());
        assert_eq!(PatternGraph::from_json(&g.to_json()).unwrap(), g);
    }
}
