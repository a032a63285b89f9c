use crate::detect::{disjoint_assignment, find_copy, BergeWitness, Mode};
use crate::error::{Error, Result};
use crate::graph::PatternGraph;
use crate::hypergraph::Hypergraph;

/// Turns a `t`-heavy copy into a `t'`-wise Berge copy on the same essence,
/// where `t' = floor(t / m)` and `m = min(C(r, 2), |E(F)|)`.
///
/// Every hyperedge covers at most `m` essence edges and every essence edge
/// is covered at least `t` times, so after duplicating each essence edge `t'`
/// times Hall's condition holds and the maximum matching saturates all slots.
pub fn extract_berge_from_heavy(
    host: &Hypergraph,
    pattern: &PatternGraph,
    t: usize,
) -> Result<BergeWitness> {
    if pattern.edge_count() == 0 {
        return Err(Error::BadPattern);
    }
    let r = host.uniformity();
    let m = (r * (r - 1) / 2).min(pattern.edge_count());
    let level = t / m;
    if level == 0 {
        return Err(Error::ThresholdTooSmall { t, required: m });
    }
    let heavy = find_copy(host, pattern, t, Mode::Heavy)?.ok_or(Error::NoHeavyCopy { t })?;
    let covers = host.pair_covers();
    let assignment = disjoint_assignment(pattern, &heavy.injection, level, |u, v| {
        covers
            .get(&(u.min(v), u.max(v)))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    })
    .ok_or_else(|| {
        Error::PreconditionViolated("slot matching is not saturating despite the Hall bound".into())
    })?;
    Ok(BergeWitness {
        injection: heavy.injection,
        assignment,
        mode: Mode::Berge,
        t: level,
    })
}

/// A copy of the 3-uniform expansion of a pattern found inside a host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionCopy {
    /// Pattern vertex → host vertex.
    pub injection: Vec<usize>,
    /// Host hyperedge index chosen for each pattern edge, canonical order.
    pub hyperedges: Vec<usize>,
    /// Third vertex of each chosen hyperedge.
    pub apexes: Vec<usize>,
    pub hypergraph: Hypergraph,
}

/// Greedily picks, for each essence edge in canonical order, the first
/// covering hyperedge whose third vertex is not yet used. With
/// `t >= |V(F)| + |E(F)| - 2` a free third vertex always exists.
pub fn extract_expansion3(
    host: &Hypergraph,
    pattern: &PatternGraph,
    t: usize,
) -> Result<ExpansionCopy> {
    if host.uniformity() != 3 {
        return Err(Error::BadParams(format!(
            "expansion extraction needs a 3-uniform host, got r = {}",
            host.uniformity()
        )));
    }
    let required = (pattern.vertex_count() + pattern.edge_count()).saturating_sub(2);
    if t < required {
        return Err(Error::ThresholdTooSmall { t, required });
    }
    let heavy = find_copy(host, pattern, t, Mode::Heavy)?.ok_or(Error::NoHeavyCopy { t })?;
    let covers = host.pair_covers();
    let mut used = vec![false; host.vertex_count()];
    for &v in &heavy.injection {
        used[v] = true;
    }
    let mut chosen = Vec::with_capacity(pattern.edge_count());
    let mut apexes = Vec::with_capacity(pattern.edge_count());
    for &(x, y) in pattern.edges() {
        let (u, v) = (heavy.injection[x], heavy.injection[y]);
        let pick = covers[&(u.min(v), u.max(v))].iter().find_map(|&h| {
            let apex = host.edges()[h].iter().copied().find(|&w| w != u && w != v)?;
            (!used[apex]).then_some((h, apex))
        });
        let (h, apex) = pick.ok_or_else(|| {
            Error::PreconditionViolated(format!("no free apex for essence edge ({u}, {v})"))
        })?;
        used[apex] = true;
        chosen.push(h);
        apexes.push(apex);
    }
    let hypergraph = Hypergraph::from_trusted(
        host.vertex_count(),
        3,
        chosen.iter().map(|&h| host.edges()[h].clone()).collect(),
    );
    Ok(ExpansionCopy {
        injection: heavy.injection,
        hyperedges: chosen,
        apexes,
        hypergraph,
    })
}
