//! Uniform hypergraphs and their pair multiplicities.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{json_error, Adjacency, PatternGraph};

/// An `r`-uniform hypergraph on vertices `0..n`. Each hyperedge is stored
/// sorted and the edge list is kept in lexicographic order without repeats.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

/// Checks the hypergraph invariants on raw data, without canonicalizing.
/// Edges may be given in any vertex order; duplicates are detected up to
/// vertex order.
pub fn validate(n: usize, r: usize, edges: &[Vec<usize>]) -> Result<()> {
    if r < 2 {
        return Err(Error::BadParams(format!("uniformity must be at least 2, got {r}")));
    }
    let mut seen = Vec::with_capacity(edges.len());
    for edge in edges {
        let mut sorted = edge.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if edge.len() != r || sorted.len() != r {
            return Err(Error::WrongArity {
                edge: edge.clone(),
                expected: r,
                found: sorted.len(),
            });
        }
        if sorted[r - 1] >= n {
            return Err(Error::VertexOutOfRange {
                edge: edge.clone(),
                n,
            });
        }
        seen.push(sorted);
    }
    seen.sort_unstable();
    if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateEdge { edge: w[0].clone() });
    }
    Ok(())
}

impl Hypergraph {
    pub fn new(n: usize, r: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        validate(n, r, &edges)?;
        let mut edges = edges;
        for e in &mut edges {
            e.sort_unstable();
        }
        edges.sort_unstable();
        Ok(Self { n, r, edges })
    }

    pub fn empty(n: usize, r: usize) -> Result<Self> {
        Self::new(n, r, Vec::new())
    }

    /// Internal constructor for generators that already produce valid,
    /// sorted hyperedges (in any order across edges).
    pub(crate) fn from_trusted(n: usize, r: usize, mut edges: Vec<Vec<usize>>) -> Self {
        edges.sort_unstable();
        debug_assert!(validate(n, r, &edges).is_ok());
        Self { n, r, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_edge(&self, edge: &[usize]) -> bool {
        self.edges.binary_search_by(|e| e.as_slice().cmp(edge)).is_ok()
    }

    /// Pair multiplicities: for every pair, the number of hyperedges that
    /// contain it. Only pairs with positive count are stored.
    pub fn shadow_multiplicity(&self) -> EdgeMultiplicityMap {
        let mut mult = BTreeMap::new();
        for e in &self.edges {
            for_each_pair(e, |p| *mult.entry(p).or_insert(0) += 1);
        }
        EdgeMultiplicityMap { n: self.n, mult }
    }

    /// Graph of the pairs contained in at least `t` hyperedges.
    pub fn heavy_graph(&self, t: usize) -> PatternGraph {
        self.shadow_multiplicity().at_least(t)
    }

    pub fn shadow(&self) -> PatternGraph {
        self.heavy_graph(1)
    }

    /// For each pair with positive multiplicity, the indices of the
    /// hyperedges containing it, in index order.
    pub fn pair_covers(&self) -> BTreeMap<(usize, usize), Vec<usize>> {
        let mut covers: BTreeMap<_, Vec<usize>> = BTreeMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            for_each_pair(e, |p| covers.entry(p).or_default().push(i));
        }
        covers
    }

    pub(crate) fn heavy_adjacency(&self, t: usize) -> Adjacency {
        let mut adj = Adjacency::new(self.n);
        for (&(u, v), &m) in &self.shadow_multiplicity().mult {
            if m >= t {
                adj.insert(u, v);
            }
        }
        adj
    }

    /// True iff any two hyperedges share at most one vertex.
    pub fn is_linear(&self) -> bool {
        self.shadow_multiplicity().max() <= 1
    }

    /// Canonical compact JSON: `{"n":..,"r":..,"edges":[[..],..]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&HypergraphJson {
            n: self.n,
            r: self.r,
            edges: self.edges.clone(),
        })
        .expect("hypergraph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: HypergraphJson = serde_json::from_str(text).map_err(json_error)?;
        if raw.r < 2 {
            return Err(Error::Parse {
                location: "r".into(),
                message: format!("uniformity must be at least 2, got {}", raw.r),
            });
        }
        for (i, e) in raw.edges.iter().enumerate() {
            if e.len() != raw.r {
                return Err(Error::Parse {
                    location: format!("edges[{i}]"),
                    message: format!("edge {e:?} has length {}, but r = {}", e.len(), raw.r),
                });
            }
        }
        Self::new(raw.n, raw.r, raw.edges).map_err(|e| Error::Parse {
            location: "edges".into(),
            message: e.to_string(),
        })
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-graph(n={}, |E|={})", self.r, self.n, self.edges.len())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HypergraphJson {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

/// Calls `f` on every pair `(a, b)`, `a < b`, of a sorted vertex list.
#[inline]
pub(crate) fn for_each_pair(edge: &[usize], mut f: impl FnMut((usize, usize))) {
    for (i, &a) in edge.iter().enumerate() {
        for &b in &edge[i + 1..] {
            f((a, b));
        }
    }
}

/// Pair → number of hyperedges containing the pair. Absent pairs have
/// multiplicity zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeMultiplicityMap {
    n: usize,
    mult: BTreeMap<(usize, usize), usize>,
}

impl EdgeMultiplicityMap {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> usize {
        self.mult.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
    }

    /// Pairs with positive multiplicity, in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.mult.iter().map(|(&p, &m)| (p, m))
    }

    pub fn total(&self) -> usize {
        self.mult.values().sum()
    }

    pub fn max(&self) -> usize {
        self.mult.values().copied().max().unwrap_or(0)
    }

    pub fn at_least(&self, t: usize) -> PatternGraph {
        let edges = self
            .mult
            .iter()
            .filter(|&(_, &m)| m >= t)
            .map(|(&p, _)| p)
            .collect();
        PatternGraph::from_sorted(self.n, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, 3, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(validate(4, 3, &[vec![0, 1, 2]]).is_ok());
        assert!(matches!(
            validate(3, 3, &[vec![0, 1, 3]]),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            validate(4, 3, &[vec![0, 1, 2], vec![0, 1, 2]]),
            Err(Error::DuplicateEdge { .. })
        ));
        assert!(matches!(
            validate(4, 3, &[vec![0, 1, 2], vec![2, 0, 1]]),
            Err(Error::DuplicateEdge { .. })
        ));
        assert!(matches!(
            validate(4, 3, &[vec![0, 1, 1]]),
            Err(Error::WrongArity { found: 2, .. })
        ));
        assert!(matches!(validate(4, 3, &[vec![0, 1]]), Err(Error::WrongArity { .. })));
    }

    #[test]
    fn multiplicities_by_enumeration() {
        let hg = h(4, &[&[0, 1, 2], &[0, 1, 3]]);
        let m = hg.shadow_multiplicity();
        assert_eq!(m.get(0, 1), 2);
        assert_eq!(m.get(1, 0), 2);
        for (u, v) in [(0, 2), (1, 2), (0, 3), (1, 3)] {
            assert_eq!(m.get(u, v), 1);
        }
        assert_eq!(m.get(2, 3), 0);
        assert_eq!(h(5, &[]).shadow_multiplicity().total(), 0);
    }

    #[test]
    fn heavy_graph_is_star() {
        let hg = h(4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3]]);
        assert_eq!(hg.heavy_graph(2).edges(), &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(hg.heavy_graph(2).vertex_count(), 4);
        assert_eq!(hg.heavy_graph(1).edge_count(), 6);
    }

    #[test]
    fn serialization_is_canonical() {
        let hg = Hypergraph::new(5, 3, vec![vec![4, 3, 2], vec![2, 1, 0]]).unwrap();
        assert_eq!(hg.to_json(), r#"{"n":5,"r":3,"edges":[[0,1,2],[2,3,4]]}"#);
        assert_eq!(Hypergraph::from_json(&hg.to_json()).unwrap(), hg);
    }

    #[test]
    fn parse_reports_arity_mismatch() {
        let err = Hypergraph::from_json(r#"{"n":5,"r":3,"edges":[[0,1,2],[1,2]]}"#).unwrap_err();
        match err {
            Error::Parse { location, .. } => assert_eq!(location, "edges[1]"),
            other => panic!("unexpected {other:?}"),
        }
        let err = Hypergraph::from_json("{\"n\":5,\n\"r\":3,\n\"edges\":[[0,1,2]] x").unwrap_err();
        match err {
            Error::Parse { location, .. } => assert!(location.starts_with("line 3")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Hypergraph::from_json(r#"{"n":5,"r":3,"edges":[],"extra":1}"#).is_err());
    }
}
