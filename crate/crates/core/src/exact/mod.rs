//! Exact Turán numbers for small parameters: a branch-and-bound search over
//! `r`-sets, a naive subset enumerator and a definition-level detection
//! oracle.

mod brute;

pub use brute::{brute_force_detect, MAX_HOST_EDGES, MAX_HOST_VERTICES, MAX_PATTERN_VERTICES};

use itertools::Itertools;

use crate::count::binomial;
use crate::detect::{disjoint_assignment, embed, Mode};
use crate::error::{Error, Result};
use crate::graph::{Adjacency, PatternGraph};
use crate::hypergraph::{for_each_pair, Hypergraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub value: usize,
    pub extremal: Hypergraph,
    pub nodes_explored: u64,
    /// The search finished, so `value` is the Turán number.
    pub exhausted: bool,
}

impl SolveResult {
    pub fn to_json(&self) -> String {
        let extremal: serde_json::Value =
            serde_json::from_str(&self.extremal.to_json()).expect("hypergraph JSON is valid");
        serde_json::to_string(&serde_json::json!({
            "value": self.value,
            "exhausted": self.exhausted,
            "nodes_explored": self.nodes_explored,
            "extremal": extremal,
        }))
        .expect("result serialization cannot fail")
    }
}

/// Incrementally maintained host: pair multiplicities, covering lists and
/// the `t`-heavy adjacency.
struct Host<'a> {
    n: usize,
    t: usize,
    mode: Mode,
    pattern: &'a PatternGraph,
    sets: &'a [Vec<usize>],
    covers: Vec<Vec<usize>>,
    heavy: Adjacency,
}

impl<'a> Host<'a> {
    fn new(n: usize, t: usize, mode: Mode, pattern: &'a PatternGraph, sets: &'a [Vec<usize>]) -> Self {
        Self {
            n,
            t,
            mode,
            pattern,
            sets,
            covers: vec![Vec::new(); n * n],
            heavy: Adjacency::new(n),
        }
    }

    fn add(&mut self, id: usize) {
        let (n, t) = (self.n, self.t);
        for_each_pair(&self.sets[id], |(a, b)| {
            self.covers[a * n + b].push(id);
            if self.covers[a * n + b].len() == t {
                self.heavy.insert(a, b);
            }
        });
    }

    fn remove(&mut self, id: usize) {
        let (n, t) = (self.n, self.t);
        for_each_pair(&self.sets[id], |(a, b)| {
            let c = &mut self.covers[a * n + b];
            if c.len() == t {
                self.heavy.remove(a, b);
            }
            let pos = c.iter().rposition(|&x| x == id).expect("set was added");
            c.remove(pos);
        });
    }

    /// Whether the current host, assumed free, stays free after adding `id`.
    fn can_add(&mut self, id: usize) -> bool {
        self.add(id);
        let hit = self.copy_through(id);
        self.remove(id);
        !hit
    }

    /// A copy in the current host that a previously free host lacked must
    /// use a pair of the new set: in heavy mode one that just became heavy,
    /// in Berge mode any heavy pair, since the set may serve as a cover.
    fn copy_through(&self, id: usize) -> bool {
        let n = self.n;
        let mut pairs = Vec::new();
        for_each_pair(&self.sets[id], |(a, b)| {
            let m = self.covers[a * n + b].len();
            if m == self.t || (self.mode == Mode::Berge && m > self.t) {
                pairs.push((a, b));
            }
        });
        for (a, b) in pairs {
            for &(x, y) in self.pattern.edges() {
                for fixed in [[(x, a), (y, b)], [(x, b), (y, a)]] {
                    let found = embed::search(&self.heavy, self.pattern, &fixed, &mut |map| match self.mode {
                        Mode::Heavy => true,
                        Mode::Berge => {
                            disjoint_assignment(self.pattern, map, self.t, |u, v| {
                                &self.covers[u.min(v) * n + u.max(v)]
                            })
                            .is_some()
                        }
                    });
                    if found {
                        return true;
                    }
                }
            }
        }
        false
    }
}

struct Search<'a> {
    host: Host<'a>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
    cap: usize,
    exhausted: bool,
}

impl Search<'_> {
    fn run(&mut self, cands: Vec<usize>) {
        if self.nodes >= self.budget {
            self.exhausted = false;
            return;
        }
        self.nodes += 1;
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        let bound = (self.chosen.len() + cands.len()).min(self.cap);
        if bound <= self.best.len() {
            return;
        }
        let Some((&c, rest)) = cands.split_first() else {
            return;
        };
        self.host.add(c);
        self.chosen.push(c);
        let kept: Vec<usize> = rest.iter().copied().filter(|&d| self.host.can_add(d)).collect();
        self.run(kept);
        self.chosen.pop();
        self.host.remove(c);
        self.run(rest.to_vec());
    }
}

/// Largest number of `r`-sets on `n` vertices with no `t`-heavy (or
/// `t`-wise Berge) copy of `pattern`.
///
/// Include-first branch and bound over `r`-sets in lexicographic order,
/// seeded by the greedy lexicographic free family. After every inclusion the
/// undecided sets that would create a copy are dropped; containment is
/// monotone, so they can never be added later. The bound is the current size
/// plus the number of surviving sets, capped at `(t-1) C(n,2) / C(r,2)` when
/// the pattern is a single edge. Hitting `node_budget` returns the best
/// family found with `exhausted = false`.
pub fn exact_turan(
    n: usize,
    r: usize,
    pattern: &PatternGraph,
    t: usize,
    mode: Mode,
    node_budget: u64,
) -> Result<SolveResult> {
    if pattern.edge_count() == 0 {
        return Err(Error::BadPattern);
    }
    if t == 0 || r < 2 || r > n {
        return Err(Error::BadParams(format!(
            "need t >= 1 and 2 <= r <= n, got n = {n}, r = {r}, t = {t}"
        )));
    }
    if binomial(n as u64, r as u64) > 5_000 {
        return Err(Error::TooLarge(format!("C({n},{r}) r-sets")));
    }
    let sets: Vec<Vec<usize>> = (0..n).combinations(r).collect();
    let mut host = Host::new(n, t, mode, pattern, &sets);

    let mut greedy = Vec::new();
    for id in 0..sets.len() {
        if host.can_add(id) {
            host.add(id);
            greedy.push(id);
        }
    }
    for &id in greedy.iter().rev() {
        host.remove(id);
    }

    let cap = if pattern.edge_count() == 1 {
        ((t as u64 - 1) * binomial(n as u64, 2) / binomial(r as u64, 2)) as usize
    } else {
        usize::MAX
    };
    let cands: Vec<usize> = (0..sets.len()).filter(|&id| host.can_add(id)).collect();
    let mut search = Search {
        host,
        chosen: Vec::new(),
        best: greedy,
        nodes: 0,
        budget: node_budget,
        cap,
        exhausted: true,
    };
    search.run(cands);
    let edges = search.best.iter().map(|&id| sets[id].clone()).collect();
    Ok(SolveResult {
        value: search.best.len(),
        extremal: Hypergraph::from_trusted(n, r, edges),
        nodes_explored: search.nodes,
        exhausted: search.exhausted,
    })
}

/// Enumerates every family of `r`-sets and keeps the largest one that
/// `brute_force_detect` declares free. Only for `C(n, r) <= 16`.
pub fn naive_turan(n: usize, r: usize, pattern: &PatternGraph, t: usize, mode: Mode) -> Result<(usize, Hypergraph)> {
    if pattern.edge_count() == 0 {
        return Err(Error::BadPattern);
    }
    if r < 2 || r > n {
        return Err(Error::BadParams(format!("need 2 <= r <= n, got r = {r}, n = {n}")));
    }
    let sets: Vec<Vec<usize>> = (0..n).combinations(r).collect();
    if sets.len() > 16 {
        return Err(Error::TooLarge(format!("{} r-sets; naive enumeration allows 16", sets.len())));
    }
    let mut best = (0, Hypergraph::from_trusted(n, r, Vec::new()));
    for mask in 0u32..1 << sets.len() {
        if mask.count_ones() as usize <= best.0 {
            continue;
        }
        let edges: Vec<Vec<usize>> = (0..sets.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| sets[i].clone())
            .collect();
        let h = Hypergraph::from_trusted(n, r, edges);
        if !brute_force_detect(&h, pattern, t, mode)? {
            best = (h.edge_count(), h);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::find_copy;

    #[test]
    fn clique_free_at_t_one_matches_turan_hypergraph() {
        let res = exact_turan(6, 3, &PatternGraph::complete(4), 1, Mode::Heavy, 10_000_000).unwrap();
        assert!(res.exhausted);
        assert_eq!(res.value, 8);
        assert_eq!(find_copy(&res.extremal, &PatternGraph::complete(4), 1, Mode::Heavy).unwrap(), None);
    }

    #[test]
    fn agrees_with_naive_enumeration() {
        let s2 = PatternGraph::star(2);
        for mode in Mode::ALL {
            for t in 1..=3 {
                let fast = exact_turan(5, 3, &s2, t, mode, 10_000_000).unwrap();
                let (slow, _) = naive_turan(5, 3, &s2, t, mode).unwrap();
                assert!(fast.exhausted);
                assert_eq!(fast.value, slow, "mode {mode}, t {t}");
                assert!(!brute_force_detect(&fast.extremal, &s2, t, mode).unwrap());
            }
        }
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(
            exact_turan(5, 3, &PatternGraph::empty(2), 1, Mode::Heavy, 100).unwrap_err(),
            Error::BadPattern
        );
        let single = exact_turan(5, 3, &PatternGraph::complete(2), 2, Mode::Heavy, 1_000_000).unwrap();
        assert!(single.exhausted);
        assert!(single.value <= 10 / 3);
    }

    #[test]
    fn budget_is_reported() {
        let res = exact_turan(6, 3, &PatternGraph::complete(4), 2, Mode::Heavy, 5).unwrap();
        assert!(!res.exhausted);
        assert_eq!(res.nodes_explored, 5);
        assert_eq!(res.extremal.edge_count(), res.value);
    }
}
