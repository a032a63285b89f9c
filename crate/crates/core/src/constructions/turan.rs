use itertools::Itertools;

use super::Partition;
use crate::count::{binomial, elementary_symmetric};
use crate::error::{Error, Result};
use crate::graph::PatternGraph;
use crate::hypergraph::Hypergraph;

/// Complete balanced `p`-partite graph on `n` vertices.
pub fn gen_turan_graph(n: usize, p: usize) -> Result<PatternGraph> {
    let part = Partition::balanced(n, p)?;
    let mut edges = Vec::new();
    for u in 0..n {
        let pu = part.part_of(u);
        for v in u + 1..n {
            if part.part_of(v) != pu {
                edges.push((u, v));
            }
        }
    }
    Ok(PatternGraph::from_sorted(n, edges))
}

/// `sum_{i<j} |A_i| |A_j|` for the balanced partition.
pub fn turan_graph_edges(n: usize, p: usize) -> Result<u64> {
    let sizes = sizes_u64(&Partition::balanced(n, p)?);
    Ok(elementary_symmetric(&sizes, 2))
}

/// Complete balanced `p`-partite `r`-uniform hypergraph: all `r`-sets with
/// at most one vertex in each part.
pub fn gen_turan_hypergraph(n: usize, p: usize, r: usize) -> Result<Hypergraph> {
    check_rp(n, p, r)?;
    let part = Partition::balanced(n, p)?;
    let mut edges = Vec::new();
    for chosen in part.parts().iter().combinations(r) {
        for e in chosen.into_iter().cloned().multi_cartesian_product() {
            edges.push(e);
        }
    }
    Ok(Hypergraph::from_trusted(n, r, edges))
}

pub fn turan_hypergraph_size(n: usize, p: usize, r: usize) -> Result<u64> {
    check_rp(n, p, r)?;
    Ok(elementary_symmetric(&sizes_u64(&Partition::balanced(n, p)?), r))
}

/// The Turán hypergraph plus, for every pair `{u, v}` inside one part, `t - 1`
/// hyperedges `{u, v} ∪ S` where `S` runs over the lexicographically first
/// `r - 2`-sets meeting `r - 2` distinct other parts. Same-part pairs then
/// have multiplicity exactly `t - 1`.
pub fn gen_q(n: usize, p: usize, r: usize, t: usize) -> Result<Hypergraph> {
    if t == 0 {
        return Err(Error::BadParams("t must be positive".into()));
    }
    let base = gen_turan_hypergraph(n, p, r)?;
    let part = Partition::balanced(n, p)?;
    let mut edges = base.edges().to_vec();
    for (pi, range) in part.parts().iter().enumerate() {
        if range.len() < 2 || t == 1 {
            continue;
        }
        let others: Vec<usize> = (0..n).filter(|v| !range.contains(v)).collect();
        let supports: Vec<Vec<usize>> = others
            .iter()
            .copied()
            .combinations(r - 2)
            .filter(|s| s.iter().map(|&v| part.part_of(v)).all_unique())
            .take(t - 1)
            .collect();
        if supports.len() < t - 1 {
            return Err(Error::TooFewSupportSets {
                part: pi,
                needed: t - 1,
                available: supports.len() as u64,
            });
        }
        for pair in range.clone().combinations(2) {
            for s in &supports {
                let mut e: Vec<usize> = pair.iter().chain(s).copied().collect();
                e.sort_unstable();
                edges.push(e);
            }
        }
    }
    Ok(Hypergraph::from_trusted(n, r, edges))
}

/// `|T^r(n,p)| + (t - 1) (C(n,2) - e(T(n,p)))`, after checking that every part
/// has enough support sets.
pub fn q_size(n: usize, p: usize, r: usize, t: usize) -> Result<u64> {
    if t == 0 {
        return Err(Error::BadParams("t must be positive".into()));
    }
    check_rp(n, p, r)?;
    let part = Partition::balanced(n, p)?;
    let sizes = sizes_u64(&part);
    for (pi, &size) in sizes.iter().enumerate() {
        if size < 2 {
            continue;
        }
        let mut rest = sizes.clone();
        rest.remove(pi);
        let available = elementary_symmetric(&rest, r - 2);
        if available < (t - 1) as u64 {
            return Err(Error::TooFewSupportSets {
                part: pi,
                needed: t - 1,
                available,
            });
        }
    }
    let within = binomial(n as u64, 2) - elementary_symmetric(&sizes, 2);
    Ok(elementary_symmetric(&sizes, r) + (t as u64 - 1) * within)
}

fn check_rp(n: usize, p: usize, r: usize) -> Result<()> {
    if r < 2 || r > p || p > n {
        return Err(Error::BadParams(format!(
            "need 2 <= r <= p <= n, got r = {r}, p = {p}, n = {n}"
        )));
    }
    Ok(())
}

fn sizes_u64(part: &Partition) -> Vec<u64> {
    part.sizes().into_iter().map(|s| s as u64).collect()
}
