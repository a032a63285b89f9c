use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::designs::pack_preserving_heavy;
use crate::count::binomial;
use crate::error::{Error, Result};
use crate::graph::{json_error, PatternGraph};
use crate::hypergraph::Hypergraph;

/// A `d`-regular graph, optionally with a perfect matching `M ⊆ E(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularSeed {
    graph: PatternGraph,
    degree: usize,
    matching: Option<Vec<(usize, usize)>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeedJson {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    matching: Option<Vec<(usize, usize)>>,
}

impl RegularSeed {
    pub fn new(graph: PatternGraph, matching: Option<Vec<(usize, usize)>>) -> Result<Self> {
        let degrees = graph.degrees();
        let degree = degrees.first().copied().unwrap_or(0);
        if degrees.iter().any(|&d| d != degree) {
            return Err(Error::SeedNotRegular(format!(
                "graph degrees range over {:?}",
                degrees.iter().minmax().into_option()
            )));
        }
        let matching = match matching {
            None => None,
            Some(m) => {
                let m: Vec<_> = m.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
                let mut seen = vec![false; graph.vertex_count()];
                for &(a, b) in &m {
                    if !graph.has_edge(a, b) || seen[a] || seen[b] {
                        return Err(Error::SeedMismatch(format!(
                            "({a}, {b}) is not a matching edge of the seed"
                        )));
                    }
                    seen[a] = true;
                    seen[b] = true;
                }
                if seen.iter().any(|s| !s) {
                    return Err(Error::SeedMismatch("matching is not perfect".into()));
                }
                Some(m)
            }
        };
        Ok(Self {
            graph,
            degree,
            matching,
        })
    }

    /// `K_{d+1}` with matching `(0,1), (2,3), ...` for odd `d`; `K_{d+2}`
    /// minus the matching `(0,1), (2,3), ...`, carrying the matching
    /// `(1,2), (3,4), ..., (d+1,0)` for even `d`.
    pub fn builtin(d: usize) -> Self {
        if d % 2 == 1 {
            let m = d + 1;
            let matching = (0..m / 2).map(|i| (2 * i, 2 * i + 1)).collect();
            Self::new(PatternGraph::complete(m), Some(matching)).expect("complete graph seed")
        } else {
            let m = d + 2;
            let edges = (0..m)
                .tuple_combinations()
                .filter(|&(a, b): &(usize, usize)| !(a % 2 == 0 && b == a + 1));
            let graph = PatternGraph::new(m, edges).expect("cocktail party seed");
            let matching = (d > 0).then(|| {
                (0..m / 2)
                    .map(|i| (2 * i + 1, (2 * i + 2) % m))
                    .collect()
            });
            Self::new(graph, matching).expect("cocktail party seed")
        }
    }

    pub fn graph(&self) -> &PatternGraph {
        &self.graph
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn matching(&self) -> Option<&[(usize, usize)]> {
        self.matching.as_deref()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&SeedJson {
            n: self.graph.vertex_count(),
            edges: self.graph.edges().to_vec(),
            matching: self.matching.clone(),
        })
        .expect("seed serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: SeedJson = serde_json::from_str(text).map_err(json_error)?;
        Self::new(PatternGraph::new(raw.n, raw.edges)?, raw.matching)
    }
}

/// `floor(n/k)` blocks, a seed copy on each, and `{v} ∪ E` for every vertex
/// `v` of an earlier block and seed hyperedge `E` of a later block. The seed
/// must be regular; its degree is `t - 1`.
pub fn gen_construction1(n: usize, seed: &Hypergraph) -> Result<Hypergraph> {
    let k = seed.vertex_count();
    seed_degree(seed)?;
    let r = seed.uniformity() + 1;
    let blocks = n.checked_div(k).unwrap_or(0);
    let mut edges = Vec::new();
    for j in 1..blocks {
        for e in seed.edges() {
            let shifted: Vec<usize> = e.iter().map(|&x| x + j * k).collect();
            for v in 0..j * k {
                let mut h = Vec::with_capacity(r);
                h.push(v);
                h.extend_from_slice(&shifted);
                edges.push(h);
            }
        }
    }
    Ok(Hypergraph::from_trusted(n, r, edges))
}

pub fn construction1_size(n: usize, seed: &Hypergraph) -> Result<u64> {
    seed_degree(seed)?;
    let k = seed.vertex_count() as u64;
    if k == 0 {
        return Ok(0);
    }
    Ok(seed.edge_count() as u64 * k * binomial(n as u64 / k, 2))
}

fn seed_degree(seed: &Hypergraph) -> Result<usize> {
    let mut deg = vec![0usize; seed.vertex_count()];
    for e in seed.edges() {
        for &v in e {
            deg[v] += 1;
        }
    }
    match deg.iter().minmax().into_option() {
        Some((lo, hi)) if lo != hi => Err(Error::SeedNotRegular(format!(
            "vertex degrees range from {lo} to {hi}"
        ))),
        _ => Ok(deg.first().copied().unwrap_or(0)),
    }
}

/// `t - 1` disjoint blocks of `r - 2` vertices at the front, and every
/// `A_i ∪ {x, y}` with `x, y` in the remaining vertices.
pub fn gen_construction2(n: usize, r: usize, t: usize) -> Result<Hypergraph> {
    check_c2(n, r, t)?;
    let start = (t - 1) * (r - 2);
    let mut edges = Vec::new();
    for i in 0..t - 1 {
        let block: Vec<usize> = (i * (r - 2)..(i + 1) * (r - 2)).collect();
        for (x, y) in (start..n).tuple_combinations() {
            let mut e = block.clone();
            e.push(x);
            e.push(y);
            edges.push(e);
        }
    }
    Ok(Hypergraph::from_trusted(n, r, edges))
}

pub fn construction2_size(n: usize, r: usize, t: usize) -> Result<u64> {
    check_c2(n, r, t)?;
    Ok((t as u64 - 1) * binomial((n - (t - 1) * (r - 2)) as u64, 2))
}

fn check_c2(n: usize, r: usize, t: usize) -> Result<()> {
    if r < 3 || t == 0 || n <= (t - 1) * (r - 2) + 1 {
        return Err(Error::BadParams(format!(
            "need r >= 3, t >= 1 and n > (t-1)(r-2)+1, got n = {n}, r = {r}, t = {t}"
        )));
    }
    Ok(())
}

/// Blocks of size `m` carrying seed copies. For blocks `i < j`, all triples
/// made of a seed edge in `A_i` and a vertex of `A_j`, and of a vertex of
/// `A_i` and a seed edge in `A_j`; for even `t` the matching edges are
/// skipped on the `A_j` side.
pub fn gen_construction3(n: usize, t: usize, seed: &RegularSeed) -> Result<Hypergraph> {
    let late = c3_late_edges(t, seed)?;
    let m = seed.graph.vertex_count();
    let blocks = n.checked_div(m).unwrap_or(0);
    let mut edges = Vec::new();
    for i in 0..blocks {
        for j in i + 1..blocks {
            let (oi, oj) = (i * m, j * m);
            for &(a, b) in seed.graph.edges() {
                for w in oj..oj + m {
                    edges.push(vec![oi + a, oi + b, w]);
                }
            }
            for &(a, b) in &late {
                for w in oi..oi + m {
                    edges.push(vec![w, oj + a, oj + b]);
                }
            }
        }
    }
    Ok(Hypergraph::from_trusted(n, 3, edges))
}

pub fn construction3_size(n: usize, t: usize, seed: &RegularSeed) -> Result<u64> {
    let late = c3_late_edges(t, seed)?.len() as u64;
    let m = seed.graph.vertex_count() as u64;
    if m == 0 {
        return Ok(0);
    }
    Ok(binomial(n as u64 / m, 2) * m * (seed.graph.edge_count() as u64 + late))
}

fn c3_late_edges(t: usize, seed: &RegularSeed) -> Result<Vec<(usize, usize)>> {
    if t == 0 {
        return Err(Error::BadParams("t must be positive".into()));
    }
    if t % 2 == 1 {
        if seed.degree != (t - 1) / 2 {
            return Err(Error::SeedMismatch(format!(
                "odd t = {t} needs a {}-regular seed, got degree {}",
                (t - 1) / 2,
                seed.degree
            )));
        }
        return Ok(seed.graph.edges().to_vec());
    }
    if seed.degree != t / 2 {
        return Err(Error::SeedMismatch(format!(
            "even t = {t} needs a {}-regular seed, got degree {}",
            t / 2,
            seed.degree
        )));
    }
    let matching = seed
        .matching
        .as_ref()
        .ok_or_else(|| Error::SeedMismatch(format!("even t = {t} needs a perfect matching")))?;
    Ok(seed
        .graph
        .edges()
        .iter()
        .copied()
        .filter(|e| !matching.contains(e))
        .collect())
}

/// Largest `t0 <= n/2` such that `pattern` is not a subgraph of
/// `K_{t0-1, n-t0+1}`.
pub fn bipartite_threshold(n: usize, pattern: &PatternGraph) -> Result<usize> {
    let k = pattern.vertex_count();
    if pattern.edge_count() == 0 {
        return Err(Error::BadPattern);
    }
    if k > 24 {
        return Err(Error::TooLarge(format!("pattern has {k} vertices")));
    }
    let sides = bipartition_sizes(pattern);
    let fits = |a: usize, b: usize| sides.iter().any(|&(x, y)| (x <= a && y <= b) || (x <= b && y <= a));
    Ok((1..=n / 2)
        .filter(|&t0| !fits(t0 - 1, n - t0 + 1))
        .max()
        .unwrap_or(1))
}

/// Colour class sizes over all proper 2-colourings.
fn bipartition_sizes(pattern: &PatternGraph) -> Vec<(usize, usize)> {
    let k = pattern.vertex_count();
    let mut out = Vec::new();
    for mask in 0u32..1 << k {
        if pattern
            .edges()
            .iter()
            .all(|&(a, b)| (mask >> a & 1) != (mask >> b & 1))
        {
            let ones = mask.count_ones() as usize;
            out.push((ones, k - ones));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Output of the combined construction together with the branch it came
/// from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction4 {
    pub hypergraph: Hypergraph,
    /// 1: fixed vertices plus packing; 2: clique blocks plus packing.
    pub branch: u8,
    pub t0: usize,
    pub base_size: usize,
    pub packing_size: usize,
}

/// The larger of the two combined constructions for a pattern on `k`
/// vertices: `t0 - 1` fixed vertices each in every triple once, or
/// `K_{k-1}` blocks at threshold `2k - 3`. Each base is topped up with a
/// greedy packing that never changes which pairs are `t`-heavy.
pub fn gen_construction4(n: usize, t: usize, pattern: &PatternGraph) -> Result<Construction4> {
    let k = pattern.vertex_count();
    let t0 = bipartite_threshold(n, pattern)?;
    if t <= t0 || t + 3 < 2 * k {
        return Err(Error::PreconditionViolated(format!(
            "need t > t0 = {t0} and t >= 2k - 3 = {}, got t = {t}",
            (2 * k).saturating_sub(3)
        )));
    }
    let base1 = gen_construction2(n, 3, t0)?;
    let extra1 = pack_preserving_heavy(&base1, t, t - t0);
    let base2 = gen_construction3(n, 2 * k - 3, &RegularSeed::new(PatternGraph::complete(k - 1), None)?)?;
    let extra2 = pack_preserving_heavy(&base2, t, t + 3 - 2 * k);
    let (branch, base, extra) = if base1.edge_count() + extra1.len() > base2.edge_count() + extra2.len() {
        (1, base1, extra1)
    } else {
        (2, base2, extra2)
    };
    let (base_size, packing_size) = (base.edge_count(), extra.len());
    let mut edges = base.edges().to_vec();
    edges.extend(extra);
    Ok(Construction4 {
        hypergraph: Hypergraph::from_trusted(n, 3, edges),
        branch,
        t0,
        base_size,
        packing_size,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::{find_copy, Mode};

    #[test]
    fn construction1_matching_seed() {
        let seed = Hypergraph::new(2, 2, vec![vec![0, 1]]).unwrap();
        let h = gen_construction1(6, &seed).unwrap();
        assert_eq!(h.edge_count(), 6);
        assert_eq!(construction1_size(6, &seed).unwrap(), 6);
        let mult = h.shadow_multiplicity();
        for u in 0..6 {
            for v in u + 1..6 {
                if u / 2 != v / 2 {
                    assert_eq!(mult.get(u, v), 1, "pair {u},{v}");
                }
            }
        }
        let bad = Hypergraph::new(3, 2, vec![vec![0, 1]]).unwrap();
        assert!(matches!(gen_construction1(6, &bad), Err(Error::SeedNotRegular(_))));
    }

    #[test]
    fn construction1_cycle_seed_heavy_edges_stay_in_blocks() {
        let seed = Hypergraph::new(5, 2, (0..5).map(|i| vec![i, (i + 1) % 5]).collect()).unwrap();
        let h = gen_construction1(10, &seed).unwrap();
        for &(u, v) in h.heavy_graph(3).edges() {
            assert_eq!(u / 5, v / 5);
        }
    }

    #[test]
    fn construction2_sizes() {
        assert_eq!(gen_construction2(10, 3, 2).unwrap().edge_count(), 36);
        assert_eq!(gen_construction2(8, 4, 3).unwrap().edge_count(), 12);
        assert_eq!(construction2_size(8, 4, 3).unwrap(), 12);
        let fixed = gen_construction2(7, 3, 2).unwrap();
        assert!(fixed.edges().iter().all(|e| e[0] == 0));
        assert_eq!(fixed.edge_count(), 15);
        assert!(gen_construction2(3, 3, 3).is_err());
    }

    #[test]
    fn builtin_seeds() {
        for d in 0..7 {
            let s = RegularSeed::builtin(d);
            assert_eq!(s.degree(), d);
            assert!(s.graph().degrees().iter().all(|&x| x == d));
            if d > 0 {
                assert!(s.matching().is_some());
            }
        }
        let s = RegularSeed::builtin(2);
        assert_eq!(RegularSeed::from_json(&s.to_json()).unwrap(), s);
    }

    #[test]
    fn construction3_cross_multiplicity() {
        let seed = RegularSeed::new(PatternGraph::complete(2), None).unwrap();
        let h = gen_construction3(8, 3, &seed).unwrap();
        assert_eq!(h.edge_count() as u64, construction3_size(8, 3, &seed).unwrap());
        let mult = h.shadow_multiplicity();
        for u in 0..8 {
            for v in u + 1..8 {
                if u / 2 != v / 2 {
                    assert_eq!(mult.get(u, v), 2);
                }
            }
        }
    }

    #[test]
    fn construction3_even_t() {
        let c4 = PatternGraph::cycle(4).unwrap();
        let seed = RegularSeed::new(c4, Some(vec![(0, 1), (2, 3)])).unwrap();
        let h = gen_construction3(8, 4, &seed).unwrap();
        let mult = h.shadow_multiplicity();
        for u in 0..4 {
            for v in 4..8 {
                assert_eq!(mult.get(u, v), 3);
            }
        }
        let heavy = h.heavy_graph(4);
        assert_eq!(heavy.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3), (4, 7), (5, 6)]);
        let k3 = RegularSeed::new(PatternGraph::complete(3), None).unwrap();
        assert!(matches!(gen_construction3(9, 4, &k3), Err(Error::SeedMismatch(_))));
        assert!(RegularSeed::new(PatternGraph::complete(3), Some(vec![(0, 1)])).is_err());
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(bipartite_threshold(10, &PatternGraph::path(4)).unwrap(), 2);
        assert_eq!(bipartite_threshold(10, &PatternGraph::star(2)).unwrap(), 1);
        assert_eq!(bipartite_threshold(10, &PatternGraph::complete(3)).unwrap(), 5);
    }

    #[test]
    fn construction4_cherry() {
        let s2 = PatternGraph::star(2);
        let at3 = gen_construction4(10, 3, &s2).unwrap();
        let seed = RegularSeed::new(PatternGraph::complete(2), None).unwrap();
        assert_eq!(at3.hypergraph, gen_construction3(10, 3, &seed).unwrap());
        assert_eq!(at3.packing_size, 0);

        let at4 = gen_construction4(10, 4, &s2).unwrap();
        assert!(at4.hypergraph.edge_count() >= at3.hypergraph.edge_count());
        assert_eq!(find_copy(&at4.hypergraph, &s2, 4, Mode::Heavy).unwrap(), None);
        assert!(matches!(gen_construction4(10, 2, &s2), Err(Error::PreconditionViolated(_))));
    }
}
