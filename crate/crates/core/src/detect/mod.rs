//! Detection of t-heavy and t-wise Berge copies of a pattern graph, with
//! checkable witnesses.
//!
//! A hypergraph contains a *t-heavy* copy of `F` when the graph of pairs
//! covered by at least `t` hyperedges contains `F`. It contains a *t-wise
//! Berge* copy when, in addition, every pattern edge can be given `t`
//! covering hyperedges such that all `t * |E(F)|` chosen hyperedges are
//! distinct.

mod certificate;
pub(crate) mod embed;
mod extract;

pub use certificate::{greedy_certificate, strip_representatives, Certificate, Representatives};
pub use extract::{extract_berge_from_heavy, extract_expansion3, ExpansionCopy};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::PatternGraph;
use crate::hypergraph::Hypergraph;
use crate::matching::max_matching;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Covering hyperedges may be shared between pattern edges.
    Heavy,
    /// All covering hyperedges are pairwise distinct.
    Berge,
}

impl Mode {
    pub const ALL: [Mode; 2] = [Mode::Heavy, Mode::Berge];
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Heavy => "heavy",
            Mode::Berge => "berge",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "heavy" => Ok(Mode::Heavy),
            "berge" => Ok(Mode::Berge),
            _ => Err(Error::BadParams(format!("unknown mode `{s}`"))),
        }
    }
}

/// Injection of the pattern vertices plus, for each pattern edge in
/// canonical order, the indices of its `t` covering hyperedges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BergeWitness {
    #[serde(rename = "i")]
    pub injection: Vec<usize>,
    #[serde(rename = "h")]
    pub assignment: Vec<Vec<usize>>,
    pub mode: Mode,
    pub t: usize,
}

impl BergeWitness {
    /// The embedded image of the pattern (the essence), as a graph on the
    /// host vertex set.
    pub fn essence(&self, pattern: &PatternGraph, host_n: usize) -> Result<PatternGraph> {
        PatternGraph::new(
            host_n,
            pattern
                .edges()
                .iter()
                .map(|&(x, y)| (self.injection[x], self.injection[y])),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness serialization cannot fail")
    }
}

/// Searches for a `t`-heavy or `t`-wise Berge copy of `pattern` in `host`.
///
/// Embeddings of the pattern into the `t`-heavy graph are enumerated in a
/// fixed order. In heavy mode the first embedding is returned with the first
/// `t` covering hyperedges of every edge. In Berge mode each embedding is
/// tested by a maximum matching between edge slots (each pattern edge
/// repeated `t` times) and hyperedges; the first saturating matching wins.
pub fn find_copy(
    host: &Hypergraph,
    pattern: &PatternGraph,
    t: usize,
    mode: Mode,
) -> Result<Option<BergeWitness>> {
    if t == 0 {
        return Err(Error::BadParams("multiplicity t must be positive".into()));
    }
    if pattern.vertex_count() > host.vertex_count() {
        return Ok(None);
    }
    if mode == Mode::Berge && host.edge_count() < t * pattern.edge_count() {
        return Ok(None);
    }
    let heavy = host.heavy_adjacency(t);
    let covers = host.pair_covers();
    let cover = |u: usize, v: usize| -> &[usize] {
        covers
            .get(&(u.min(v), u.max(v)))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    };
    let mut found = None;
    embed::search(&heavy, pattern, &[], &mut |map| {
        let assignment = match mode {
            Mode::Heavy => Some(
                pattern
                    .edges()
                    .iter()
                    .map(|&(x, y)| cover(map[x], map[y])[..t].to_vec())
                    .collect(),
            ),
            Mode::Berge => disjoint_assignment(pattern, map, t, |u, v| cover(u, v)),
        };
        match assignment {
            Some(assignment) => {
                found = Some(BergeWitness {
                    injection: map.to_vec(),
                    assignment,
                    mode,
                    t,
                });
                true
            }
            None => false,
        }
    });
    Ok(found)
}

/// Given an embedding `map`, assigns `t` covering hyperedges to every
/// pattern edge so that all assigned hyperedges are distinct, or returns
/// `None` when no such system exists. Hyperedge identifiers are opaque.
pub(crate) fn disjoint_assignment<'a>(
    pattern: &PatternGraph,
    map: &[usize],
    t: usize,
    cover: impl Fn(usize, usize) -> &'a [usize],
) -> Option<Vec<Vec<usize>>> {
    let edges = pattern.edges();
    let lists: Vec<&[usize]> = edges.iter().map(|&(x, y)| cover(map[x], map[y])).collect();
    if lists.iter().any(|l| l.len() < t) {
        return None;
    }
    let mut ids: Vec<usize> = lists.iter().flat_map(|l| l.iter().copied()).collect();
    ids.sort_unstable();
    ids.dedup();
    if ids.len() < t * edges.len() {
        return None;
    }
    let local: Vec<Vec<usize>> = lists
        .iter()
        .map(|l| l.iter().map(|id| ids.binary_search(id).unwrap()).collect())
        .collect();
    let slots: Vec<Vec<usize>> = local
        .iter()
        .flat_map(|l| std::iter::repeat_n(l.clone(), t))
        .collect();
    let m = max_matching(ids.len(), &slots);
    if !m.saturates_left() {
        return None;
    }
    Some(
        (0..edges.len())
            .map(|j| {
                let mut hs: Vec<usize> = (0..t).map(|c| ids[m.left[j * t + c].unwrap()]).collect();
                hs.sort_unstable();
                hs
            })
            .collect(),
    )
}

/// Checks a witness against the definitions: injective vertex map, `t`
/// distinct covering hyperedges per pattern edge, and in Berge mode global
/// distinctness of all assigned hyperedges.
pub fn verify_witness(
    host: &Hypergraph,
    pattern: &PatternGraph,
    t: usize,
    mode: Mode,
    w: &BergeWitness,
) -> bool {
    if w.t != t || w.mode != mode || t == 0 {
        return false;
    }
    if w.injection.len() != pattern.vertex_count()
        || w.assignment.len() != pattern.edge_count()
        || w.injection.iter().any(|&v| v >= host.vertex_count())
    {
        return false;
    }
    let mut img = w.injection.clone();
    img.sort_unstable();
    if img.windows(2).any(|p| p[0] == p[1]) {
        return false;
    }
    let edges = host.edges();
    let mut all = Vec::new();
    for (&(x, y), hs) in pattern.edges().iter().zip(&w.assignment) {
        let (u, v) = (w.injection[x], w.injection[y]);
        let mut sorted = hs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if hs.len() != t || sorted.len() != t {
            return false;
        }
        for &h in hs {
            if h >= edges.len() || !edges[h].contains(&u) || !edges[h].contains(&v) {
                return false;
            }
        }
        all.extend(sorted);
    }
    if mode == Mode::Berge {
        let total = all.len();
        all.sort_unstable();
        all.dedup();
        if all.len() != total {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(n: usize, edges: &[[usize; 3]]) -> Hypergraph {
        Hypergraph::new(n, 3, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    /// Each triangle edge extended by two private apex vertices.
    pub(crate) fn berge_triangle() -> Hypergraph {
        hg(9, &[[0, 1, 3], [0, 1, 4], [1, 2, 5], [1, 2, 6], [0, 2, 7], [0, 2, 8]])
    }

    #[test]
    fn finds_two_wise_berge_triangle() {
        let h = berge_triangle();
        let k3 = PatternGraph::complete(3);
        let w = find_copy(&h, &k3, 2, Mode::Berge).unwrap().unwrap();
        assert!(verify_witness(&h, &k3, 2, Mode::Berge, &w));
        let mut img = w.injection.clone();
        img.sort();
        assert_eq!(img, vec![0, 1, 2]);
        assert!(find_copy(&h, &k3, 3, Mode::Heavy).unwrap().is_none());
    }

    #[test]
    fn star_host_heavy_but_not_berge() {
        let h = hg(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3]]);
        let s2 = PatternGraph::star(2);
        let w = find_copy(&h, &s2, 2, Mode::Heavy).unwrap().unwrap();
        assert_eq!(w.injection, vec![0, 1, 2]);
        assert!(verify_witness(&h, &s2, 2, Mode::Heavy, &w));
        assert!(find_copy(&h, &s2, 2, Mode::Berge).unwrap().is_none());
    }

    #[test]
    fn tampered_witnesses_are_rejected() {
        let h = berge_triangle();
        let k3 = PatternGraph::complete(3);
        let w = find_copy(&h, &k3, 2, Mode::Berge).unwrap().unwrap();

        let mut bad = w.clone();
        bad.injection[1] = bad.injection[0];
        assert!(!verify_witness(&h, &k3, 2, Mode::Berge, &bad));

        let mut reuse = w.clone();
        reuse.assignment[1] = reuse.assignment[0].clone();
        assert!(!verify_witness(&h, &k3, 2, Mode::Berge, &reuse));

        // A reused hyperedge across edges is still fine in heavy mode as long
        // as it covers both edges.
        let h2 = hg(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3]]);
        let s2 = PatternGraph::star(2);
        let shared = BergeWitness {
            injection: vec![0, 1, 2],
            assignment: vec![vec![0, 1], vec![0, 2]],
            mode: Mode::Heavy,
            t: 2,
        };
        assert!(verify_witness(&h2, &s2, 2, Mode::Heavy, &shared));
        let as_berge = BergeWitness {
            mode: Mode::Berge,
            ..shared
        };
        assert!(!verify_witness(&h2, &s2, 2, Mode::Berge, &as_berge));
    }

    #[test]
    fn witness_json_shape() {
        let w = BergeWitness {
            injection: vec![2, 0],
            assignment: vec![vec![1, 3]],
            mode: Mode::Berge,
            t: 2,
        };
        assert_eq!(w.to_json(), r#"{"i":[2,0],"h":[[1,3]],"mode":"berge","t":2}"#);
        assert_eq!(serde_json::from_str::<BergeWitness>(&w.to_json()).unwrap(), w);
    }

    #[test]
    fn oversized_pattern_is_absent_not_error() {
        let h = hg(4, &[[0, 1, 2]]);
        assert_eq!(find_copy(&h, &PatternGraph::complete(5), 1, Mode::Heavy).unwrap(), None);
        assert!(find_copy(&h, &PatternGraph::complete(2), 0, Mode::Heavy).is_err());
    }
}
