use itertools::Itertools;

use crate::detect::Mode;
use crate::error::{Error, Result};
use crate::graph::PatternGraph;
use crate::hypergraph::Hypergraph;

pub const MAX_PATTERN_VERTICES: usize = 8;
pub const MAX_HOST_VERTICES: usize = 10;
pub const MAX_HOST_EDGES: usize = 200;

/// Decides containment straight from the definitions: every injection of the
/// pattern vertices, and in Berge mode every way of handing out `t`-subsets
/// of covering hyperedges with no hyperedge used twice.
pub fn brute_force_detect(host: &Hypergraph, pattern: &PatternGraph, t: usize, mode: Mode) -> Result<bool> {
    if t == 0 {
        return Err(Error::BadParams("multiplicity t must be positive".into()));
    }
    if pattern.vertex_count() > MAX_PATTERN_VERTICES
        || host.vertex_count() > MAX_HOST_VERTICES
        || host.edge_count() > MAX_HOST_EDGES
    {
        return Err(Error::TooLarge(format!(
            "brute force handles |V(F)| <= {MAX_PATTERN_VERTICES}, n <= {MAX_HOST_VERTICES}, |H| <= {MAX_HOST_EDGES}"
        )));
    }
    let k = pattern.vertex_count();
    let n = host.vertex_count();
    if k > n {
        return Ok(false);
    }
    let covering = |u: usize, v: usize| -> Vec<usize> {
        host.edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| e.contains(&u) && e.contains(&v))
            .map(|(i, _)| i)
            .collect()
    };
    for image in (0..n).permutations(k) {
        let lists: Vec<Vec<usize>> = pattern
            .edges()
            .iter()
            .map(|&(x, y)| covering(image[x], image[y]))
            .collect();
        if lists.iter().any(|l| l.len() < t) {
            continue;
        }
        let found = match mode {
            Mode::Heavy => true,
            Mode::Berge => assign(&lists, t, &mut vec![false; host.edge_count()]),
        };
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

fn assign(lists: &[Vec<usize>], t: usize, used: &mut [bool]) -> bool {
    let Some((first, rest)) = lists.split_first() else {
        return true;
    };
    let free: Vec<usize> = first.iter().copied().filter(|&h| !used[h]).collect();
    for pick in free.into_iter().combinations(t) {
        for &h in &pick {
            used[h] = true;
        }
        let ok = assign(rest, t, used);
        for &h in &pick {
            used[h] = false;
        }
        if ok {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::gen_sts;

    #[test]
    fn definitions_on_small_cases() {
        let tri = Hypergraph::new(
            9,
            3,
            vec![
                vec![0, 1, 3],
                vec![0, 1, 4],
                vec![1, 2, 5],
                vec![1, 2, 6],
                vec![0, 2, 7],
                vec![0, 2, 8],
            ],
        )
        .unwrap();
        let k3 = PatternGraph::complete(3);
        assert!(brute_force_detect(&tri, &k3, 2, Mode::Berge).unwrap());
        assert!(!brute_force_detect(&tri, &k3, 3, Mode::Heavy).unwrap());

        let fano = gen_sts(7).unwrap();
        assert!(!brute_force_detect(&fano, &PatternGraph::complete(2), 2, Mode::Heavy).unwrap());
        assert!(brute_force_detect(&fano, &PatternGraph::complete(3), 1, Mode::Berge).unwrap());

        let star = Hypergraph::new(4, 3, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3]]).unwrap();
        let s2 = PatternGraph::star(2);
        assert!(brute_force_detect(&star, &s2, 2, Mode::Heavy).unwrap());
        assert!(!brute_force_detect(&star, &s2, 2, Mode::Berge).unwrap());
    }

    #[test]
    fn caps() {
        let big = Hypergraph::empty(11, 3).unwrap();
        assert!(matches!(
            brute_force_detect(&big, &PatternGraph::complete(2), 1, Mode::Heavy),
            Err(Error::TooLarge(_))
        ));
    }
}
