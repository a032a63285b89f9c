//! Seeded instance generators for property checks.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{count_cliques, BlueRedGraph, Colour};
use crate::graph::PatternGraph;
use crate::hypergraph::Hypergraph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Each `r`-set is kept independently with probability `p`.
pub fn random_hypergraph<R: Rng>(rng: &mut R, n: usize, r: usize, p: f64) -> Hypergraph {
    let edges = (0..n).combinations(r).filter(|_| rng.gen_bool(p)).collect();
    Hypergraph::from_trusted(n, r, edges)
}

/// A random 3-uniform hypergraph with a planted `t`-heavy copy of `pattern`:
/// every image edge receives `t` distinct covering triples, on top of noise
/// of density `p`. Returns the host and the planted injection.
pub fn planted_heavy<R: Rng>(
    rng: &mut R,
    n: usize,
    pattern: &PatternGraph,
    t: usize,
    p: f64,
) -> (Hypergraph, Vec<usize>) {
    assert!(pattern.vertex_count() <= n && t + 2 <= n, "instance too small to plant");
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(rng);
    let image = vertices[..pattern.vertex_count()].to_vec();
    let mut edges: Vec<Vec<usize>> = (0..n).combinations(3).filter(|_| rng.gen_bool(p)).collect();
    for &(x, y) in pattern.edges() {
        let (u, v) = (image[x], image[y]);
        let mut others: Vec<usize> = (0..n).filter(|&w| w != u && w != v).collect();
        others.shuffle(rng);
        for &w in &others[..t] {
            let mut e = vec![u, v, w];
            e.sort_unstable();
            edges.push(e);
        }
    }
    edges.sort_unstable();
    edges.dedup();
    (Hypergraph::from_trusted(n, 3, edges), image)
}

/// Pairs are visited in random order and kept with probability `p` unless
/// they would complete a `K_k`; kept edges are coloured uniformly.
pub fn random_kk_free_bluered<R: Rng>(rng: &mut R, n: usize, k: usize, p: f64) -> BlueRedGraph {
    let mut pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    pairs.shuffle(rng);
    let mut kept: Vec<(usize, usize)> = Vec::new();
    for (u, v) in pairs {
        if !rng.gen_bool(p) {
            continue;
        }
        kept.push((u, v));
        let g = PatternGraph::new(n, kept.iter().copied()).expect("distinct pairs");
        if count_cliques(&g, k) > 0 {
            kept.pop();
        }
    }
    let mut g = BlueRedGraph::empty(n);
    for (u, v) in kept {
        let c = if rng.gen_bool(0.5) { Colour::Blue } else { Colour::Red };
        g.set(u, v, Some(c));
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::{find_copy, Mode};

    #[test]
    fn generators_are_deterministic_and_sound() {
        let a = random_hypergraph(&mut rng(7), 7, 3, 0.3);
        let b = random_hypergraph(&mut rng(7), 7, 3, 0.3);
        assert_eq!(a, b);

        let k3 = PatternGraph::complete(3);
        let (h, image) = planted_heavy(&mut rng(1), 10, &k3, 6, 0.05);
        assert!(find_copy(&h, &k3, 6, Mode::Heavy).unwrap().is_some());
        let mult = h.shadow_multiplicity();
        assert!(mult.get(image[0], image[1]) >= 6);

        for seed in 0..20 {
            let g = random_kk_free_bluered(&mut rng(seed), 8, 4, 0.6);
            assert_eq!(count_cliques(&g.underlying(), 4), 0);
        }
    }
}
