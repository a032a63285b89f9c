use std::collections::BTreeMap;

use crate::graph::PatternGraph;
use crate::hypergraph::{for_each_pair, Hypergraph};
use crate::matching::max_matching;

/// Result of the pick-or-mark pass over the hyperedges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub t: usize,
    /// Number of hyperedges for which no pair could be picked.
    pub marked: usize,
    /// `levels[i]` is the graph of pairs picked exactly `i` times, `0..=t`.
    pub levels: Vec<PatternGraph>,
    /// The pair picked for each hyperedge, or `None` if it was marked.
    pub picks: Vec<Option<(usize, usize)>>,
}

impl Certificate {
    /// `marked + sum_i i * |E(G_i)|`, which equals the number of hyperedges.
    pub fn accounted(&self) -> usize {
        self.marked
            + self
                .levels
                .iter()
                .enumerate()
                .map(|(i, g)| i * g.edge_count())
                .sum::<usize>()
    }

    /// The graph `G_t` of pairs picked `t` times.
    pub fn saturated(&self) -> &PatternGraph {
        &self.levels[self.t]
    }
}

/// Walks the hyperedges in canonical order. Each hyperedge picks its
/// lexicographically smallest pair that has been picked fewer than `t` times
/// so far; if every pair is saturated the hyperedge is marked instead.
pub fn greedy_certificate(host: &Hypergraph, t: usize) -> Certificate {
    let mut count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut picks = Vec::with_capacity(host.edge_count());
    let mut marked = 0;
    for e in host.edges() {
        let mut pick = None;
        for_each_pair(e, |p| {
            if pick.is_none() && count.get(&p).copied().unwrap_or(0) < t {
                pick = Some(p);
            }
        });
        match pick {
            Some(p) => *count.entry(p).or_insert(0) += 1,
            None => marked += 1,
        }
        picks.push(pick);
    }
    let n = host.vertex_count();
    let mut levels = vec![Vec::new(); t + 1];
    for u in 0..n {
        for v in u + 1..n {
            let c = count.get(&(u, v)).copied().unwrap_or(0);
            levels[c].push((u, v));
        }
    }
    Certificate {
        t,
        marked,
        levels: levels
            .into_iter()
            .map(|edges| PatternGraph::from_sorted(n, edges))
            .collect(),
        picks,
    }
}

/// A system of distinct representative pairs for as many hyperedges as
/// possible, and the hyperedges left over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representatives {
    /// `(pair, hyperedge index)`, sorted by pair. Pairs and hyperedges are
    /// each used at most once and every pair lies inside its hyperedge.
    pub assignment: Vec<((usize, usize), usize)>,
    /// The hyperedges that received no representative.
    pub remainder: Hypergraph,
}

impl Representatives {
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.assignment.iter().map(|&(p, _)| p)
    }
}

/// Maximum matching between hyperedges and the pairs they contain. No
/// augmenting path remains, so the represented set cannot be enlarged.
pub fn strip_representatives(host: &Hypergraph) -> Representatives {
    let covers = host.pair_covers();
    let pair_ids: Vec<(usize, usize)> = covers.keys().copied().collect();
    let adj: Vec<Vec<usize>> = host
        .edges()
        .iter()
        .map(|e| {
            let mut ids = Vec::new();
            for_each_pair(e, |p| ids.push(pair_ids.binary_search(&p).unwrap()));
            ids
        })
        .collect();
    let m = max_matching(pair_ids.len(), &adj);
    let mut assignment: Vec<_> = m
        .left
        .iter()
        .enumerate()
        .filter_map(|(h, p)| p.map(|p| (pair_ids[p], h)))
        .collect();
    assignment.sort_unstable();
    let remainder = host
        .edges()
        .iter()
        .zip(&m.left)
        .filter(|(_, p)| p.is_none())
        .map(|(e, _)| e.clone())
        .collect();
    Representatives {
        assignment,
        remainder: Hypergraph::from_trusted(host.vertex_count(), host.uniformity(), remainder),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(n: usize, edges: &[[usize; 3]]) -> Hypergraph {
        Hypergraph::new(n, 3, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn greedy_trace_two_edges() {
        let c = greedy_certificate(&hg(4, &[[0, 1, 2], [0, 1, 3]]), 1);
        assert_eq!(c.marked, 0);
        assert_eq!(c.levels[1].edges(), &[(0, 1), (0, 3)]);
        assert_eq!(c.picks, vec![Some((0, 1)), Some((0, 3))]);
        assert_eq!(c.accounted(), 2);
    }

    #[test]
    fn greedy_complete_four_vertices() {
        let all = hg(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]);
        let c = greedy_certificate(&all, 1);
        assert_eq!(c.marked, 0);
        assert_eq!(c.levels[1].edge_count(), 4);
        assert_eq!(c.accounted(), 4);
    }

    #[test]
    fn greedy_marks_when_saturated() {
        // 20 triples but only 15 pairs: with t = 1 at least 5 get marked.
        let mut all = Vec::new();
        for a in 0..6 {
            for b in a + 1..6 {
                for c in b + 1..6 {
                    all.push([a, b, c]);
                }
            }
        }
        let c = greedy_certificate(&hg(6, &all), 1);
        assert!(c.marked >= 5);
        assert_eq!(c.accounted(), 20);
        assert_eq!(c.picks.iter().filter(|p| p.is_none()).count(), c.marked);

        let empty = greedy_certificate(&hg(4, &[]), 2);
        assert_eq!((empty.marked, empty.accounted()), (0, 0));
        assert_eq!(empty.levels[0].edge_count(), 6);
        assert!(empty.levels[1..].iter().all(|g| g.edge_count() == 0));
    }

    #[test]
    fn representatives_examples() {
        let one = strip_representatives(&hg(3, &[[0, 1, 2]]));
        assert_eq!(one.assignment.len(), 1);
        assert_eq!(one.remainder.edge_count(), 0);

        let fan = strip_representatives(&hg(5, &[[0, 1, 2], [0, 1, 3], [0, 1, 4]]));
        assert_eq!(fan.assignment.len(), 3);
        for &(p, h) in &fan.assignment {
            let e = &fan_edges()[h];
            assert!(e.contains(&p.0) && e.contains(&p.1));
        }
    }

    fn fan_edges() -> Vec<Vec<usize>> {
        vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]]
    }
}
