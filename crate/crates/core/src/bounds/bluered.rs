use serde::{Deserialize, Serialize};

use crate::count::binomial;
use crate::error::{Error, Result};
use crate::graph::{json_error, Adjacency, PatternGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colour {
    Blue,
    Red,
}

/// A simple graph whose edges are coloured blue or red.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlueRedGraph {
    n: usize,
    colour: Vec<Option<Colour>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BlueRedJson {
    n: usize,
    blue: Vec<(usize, usize)>,
    red: Vec<(usize, usize)>,
}

impl BlueRedGraph {
    pub fn new(
        n: usize,
        blue: impl IntoIterator<Item = (usize, usize)>,
        red: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut g = Self::empty(n);
        let both = blue
            .into_iter()
            .map(|e| (e, Colour::Blue))
            .chain(red.into_iter().map(|e| (e, Colour::Red)));
        for ((u, v), c) in both {
            if u == v || u >= n || v >= n {
                return Err(Error::BadParams(format!("({u}, {v}) is not a pair of distinct vertices below {n}")));
            }
            if g.colour(u, v).is_some() {
                return Err(Error::BadParams(format!("pair ({u}, {v}) listed twice")));
            }
            g.set(u, v, Some(c));
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            colour: vec![None; n * n],
        }
    }

    pub fn monochrome(g: &PatternGraph, c: Colour) -> Self {
        let mut out = Self::empty(g.vertex_count());
        for &(u, v) in g.edges() {
            out.set(u, v, Some(c));
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn colour(&self, u: usize, v: usize) -> Option<Colour> {
        self.colour[u * self.n + v]
    }

    pub(crate) fn set(&mut self, u: usize, v: usize, c: Option<Colour>) {
        self.colour[u * self.n + v] = c;
        self.colour[v * self.n + u] = c;
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.colour(u, v).is_some()
    }

    fn pairs(&self, want: impl Fn(Option<Colour>) -> bool) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if want(self.colour(u, v)) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn blue_edges(&self) -> Vec<(usize, usize)> {
        self.pairs(|c| c == Some(Colour::Blue))
    }

    pub fn red_edges(&self) -> Vec<(usize, usize)> {
        self.pairs(|c| c == Some(Colour::Red))
    }

    pub fn blue_graph(&self) -> PatternGraph {
        PatternGraph::from_sorted(self.n, self.blue_edges())
    }

    pub fn red_graph(&self) -> PatternGraph {
        PatternGraph::from_sorted(self.n, self.red_edges())
    }

    pub fn underlying(&self) -> PatternGraph {
        PatternGraph::from_sorted(self.n, self.pairs(|c| c.is_some()))
    }

    pub fn is_monochromatic(&self) -> bool {
        self.blue_edges().is_empty() || self.red_edges().is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&BlueRedJson {
            n: self.n,
            blue: self.blue_edges(),
            red: self.red_edges(),
        })
        .expect("blue-red serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: BlueRedJson = serde_json::from_str(text).map_err(json_error)?;
        Self::new(raw.n, raw.blue, raw.red)
    }

    fn blue_adjacency(&self) -> Adjacency {
        let mut adj = Adjacency::new(self.n);
        for (u, v) in self.blue_edges() {
            adj.insert(u, v);
        }
        adj
    }

    /// Blue `r`-clique degree plus `t` times red degree minus `t - 1` times
    /// degree, for every vertex.
    pub fn d_star(&self, r: usize, t: usize) -> Vec<i64> {
        let blue = self.blue_adjacency();
        (0..self.n)
            .map(|v| {
                let nb: Vec<usize> = blue.neighbors(v).collect();
                let cliques = cliques_within(&blue, &nb, r - 1) as i64;
                let (mut red, mut deg) = (0i64, 0i64);
                for w in 0..self.n {
                    match self.colour(v, w) {
                        Some(Colour::Red) => {
                            red += 1;
                            deg += 1;
                        }
                        Some(Colour::Blue) => deg += 1,
                        None => {}
                    }
                }
                cliques + t as i64 * red - (t as i64 - 1) * deg
            })
            .collect()
    }
}

/// Number of `r`-vertex cliques.
pub fn count_cliques(g: &PatternGraph, r: usize) -> u64 {
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    cliques_within(&g.adjacency(), &all, r)
}

/// Cliques of size `r` using only vertices from `cand` (sorted).
fn cliques_within(adj: &Adjacency, cand: &[usize], r: usize) -> u64 {
    if r == 0 {
        return 1;
    }
    if r == 1 {
        return cand.len() as u64;
    }
    let mut total = 0;
    for (i, &v) in cand.iter().enumerate() {
        let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|&w| adj.has(v, w)).collect();
        if next.len() + 1 >= r {
            total += cliques_within(adj, &next, r - 1);
        }
    }
    total
}

/// `N(K_r, blue) + t |red| + (t - 1) (C(n,2) - |E|)`.
pub fn g_value(g: &BlueRedGraph, r: usize, t: usize) -> u64 {
    let blue = g.blue_graph();
    let red = g.red_edges().len() as u64;
    let edges = blue.edge_count() as u64 + red;
    let t = t as u64;
    count_cliques(&blue, r) + t * red + t.saturating_sub(1) * (binomial(g.n as u64, 2) - edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::gen_turan_graph;

    #[test]
    fn clique_counts() {
        assert_eq!(count_cliques(&PatternGraph::complete(4), 3), 4);
        assert_eq!(count_cliques(&gen_turan_graph(6, 3).unwrap(), 3), 8);
        assert_eq!(count_cliques(&PatternGraph::cycle(5).unwrap(), 3), 0);
        assert_eq!(count_cliques(&PatternGraph::complete(5), 1), 5);
        assert_eq!(count_cliques(&PatternGraph::complete(5), 5), 1);
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_value(&BlueRedGraph::empty(5), 3, 3), 20);
        let c4 = BlueRedGraph::monochrome(&gen_turan_graph(4, 2).unwrap(), Colour::Red);
        assert_eq!(g_value(&c4, 3, 2), 10);
        let t = BlueRedGraph::monochrome(&gen_turan_graph(4, 3).unwrap(), Colour::Blue);
        assert_eq!(g_value(&t, 3, 2), 3);
    }

    #[test]
    fn d_star_sums_track_symmetrization_gain() {
        let g = BlueRedGraph::new(4, [(0, 1), (1, 2)], [(2, 3)]).unwrap();
        let d = g.d_star(3, 2);
        assert_eq!(d, vec![-1, -2, 0, 1]);
    }

    #[test]
    fn json_round_trip_and_validation() {
        let g = BlueRedGraph::new(3, [(0, 1)], [(1, 2)]).unwrap();
        assert_eq!(g.to_json(), r#"{"n":3,"blue":[[0,1]],"red":[[1,2]]}"#);
        assert_eq!(BlueRedGraph::from_json(&g.to_json()).unwrap(), g);
        assert!(BlueRedGraph::new(3, [(0, 1)], [(1, 0)]).is_err());
        assert!(BlueRedGraph::new(3, [(0, 3)], []).is_err());
    }
}
