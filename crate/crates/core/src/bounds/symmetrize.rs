use serde::Serialize;

use super::bluered::{count_cliques, g_value, BlueRedGraph, Colour};
use crate::count::elementary_symmetric;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum StepKind {
    /// Vertex `from` takes over the coloured neighbourhood of `to`.
    Vertex { from: usize, to: usize },
    /// Part `from` takes over the coloured neighbourhood of part `to`,
    /// keeping the red edges between them.
    Part { from: Vec<usize>, to: Vec<usize> },
    /// The red edges between two parts become blue.
    JoinBlue { a: Vec<usize>, b: Vec<usize> },
    /// Every blue edge at a part becomes red.
    SplitRed { a: Vec<usize> },
    /// A vertex moves from a larger part to a smaller one.
    Balance { vertex: usize, to: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    #[serde(flatten)]
    pub kind: StepKind,
    pub g_before: u64,
    pub g_after: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symmetrization {
    pub graph: BlueRedGraph,
    /// Vertex classes of the complete multipartite endpoint.
    pub parts: Vec<Vec<usize>>,
    pub steps: Vec<Step>,
    pub initial_g: u64,
    pub final_g: u64,
}

struct State {
    g: BlueRedGraph,
    r: usize,
    t: usize,
    value: u64,
    steps: Vec<Step>,
}

impl State {
    fn d_star(&self) -> Vec<i64> {
        self.g.d_star(self.r, self.t)
    }

    fn record(&mut self, kind: StepKind) {
        let after = g_value(&self.g, self.r, self.t);
        self.steps.push(Step {
            kind,
            g_before: self.value,
            g_after: after,
        });
        self.value = after;
    }

    fn clone_vertex(&mut self, u: usize, v: usize) {
        for w in 0..self.g.vertex_count() {
            if w != u && w != v {
                self.g.set(u, w, self.g.colour(v, w));
            }
        }
        self.g.set(u, v, None);
        self.record(StepKind::Vertex { from: u, to: v });
    }

    fn clone_part(&mut self, from: &[usize], to: &[usize]) {
        let rep = to[0];
        for w in 0..self.g.vertex_count() {
            if from.contains(&w) || to.contains(&w) {
                continue;
            }
            let c = self.g.colour(rep, w);
            for &u in from {
                self.g.set(u, w, c);
            }
        }
        self.record(StepKind::Part {
            from: from.to_vec(),
            to: to.to_vec(),
        });
    }

    /// `d*(x) + |X|` for each part; moving `B` onto `A` changes g by
    /// `|B| (phi(A) - phi(B))`.
    fn phi(&self, parts: &[Vec<usize>]) -> Vec<i64> {
        let d = self.d_star();
        parts.iter().map(|p| d[p[0]] + p.len() as i64).collect()
    }

    fn part_colour(&self, parts: &[Vec<usize>], a: usize, b: usize) -> Option<Colour> {
        self.g.colour(parts[a][0], parts[b][0])
    }
}

/// Runs the symmetrization pipeline on a `K_k`-free blue-red graph and
/// returns a complete multipartite endpoint with `g` at least the input's.
///
/// Vertex level: the max-`d*` vertex absorbs its non-neighbours one at a
/// time; a non-neighbour with larger `d*` takes over instead, together with
/// everything absorbed so far. Part level: the part maximising
/// `d*(x) + |X|` absorbs the parts joined to it by red edges, again handing
/// over to a red neighbour with a larger value. Families of red-joined parts
/// are then recoloured whenever joining two of them blue or turning a
/// part's blue edges red strictly raises `g`, and the loop repeats. Finally
/// vertices move from the largest to the smallest part while that does not
/// lower `g`. Every step is logged with `g` before and after.
pub fn symmetrize(input: &BlueRedGraph, k: usize, r: usize, t: usize) -> Result<Symmetrization> {
    if r < 2 || t == 0 || k < 2 {
        return Err(Error::BadParams(format!(
            "need r >= 2, t >= 1 and k >= 2, got r = {r}, t = {t}, k = {k}"
        )));
    }
    if count_cliques(&input.underlying(), k) > 0 {
        return Err(Error::InputNotKkFree { k });
    }
    let initial_g = g_value(input, r, t);
    let mut s = State {
        g: input.clone(),
        r,
        t,
        value: initial_g,
        steps: Vec::new(),
    };
    let mut parts = vertex_phase(&mut s);
    loop {
        let families = part_phase(&mut s, &parts);
        if !recolour(&mut s, &parts, &families) {
            break;
        }
    }
    balance(&mut s, &mut parts);
    parts.sort();
    Ok(Symmetrization {
        final_g: s.value,
        graph: s.g,
        parts,
        steps: s.steps,
        initial_g,
    })
}

fn vertex_phase(s: &mut State) -> Vec<Vec<usize>> {
    let mut remaining: Vec<usize> = (0..s.g.vertex_count()).collect();
    let mut parts = Vec::new();
    while !remaining.is_empty() {
        let d = s.d_star();
        let mut active = *remaining
            .iter()
            .max_by_key(|&&v| (d[v], std::cmp::Reverse(v)))
            .unwrap();
        let mut group = vec![active];
        loop {
            let next = remaining
                .iter()
                .copied()
                .find(|&u| !group.contains(&u) && !s.g.adjacent(active, u));
            let Some(u) = next else { break };
            let d = s.d_star();
            if d[u] <= d[active] {
                s.clone_vertex(u, active);
            } else {
                for &v in &group {
                    s.clone_vertex(v, u);
                }
                active = u;
            }
            group.push(u);
        }
        group.sort_unstable();
        remaining.retain(|v| !group.contains(v));
        parts.push(group);
    }
    parts
}

/// Returns the families of parts, each a red clique of parts, with blue
/// edges between different families.
fn part_phase(s: &mut State, parts: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let p = parts.len();
    let mut settled = vec![false; p];
    let mut families = Vec::new();
    while settled.iter().any(|&x| !x) {
        let phi = s.phi(parts);
        let mut active = (0..p)
            .filter(|&i| !settled[i])
            .max_by_key(|&i| (phi[i], std::cmp::Reverse(i)))
            .unwrap();
        let mut family = vec![active];
        loop {
            let next = (0..p).find(|&y| {
                !settled[y] && !family.contains(&y) && s.part_colour(parts, active, y) == Some(Colour::Red)
            });
            let Some(y) = next else { break };
            let phi = s.phi(parts);
            if phi[y] <= phi[active] {
                s.clone_part(&parts[y], &parts[active]);
            } else {
                for &f in &family {
                    s.clone_part(&parts[f], &parts[y]);
                }
                active = y;
            }
            family.push(y);
        }
        family.sort_unstable();
        for &f in &family {
            settled[f] = true;
        }
        families.push(family);
    }
    families
}

/// Applies one strictly improving recolouring, if any.
fn recolour(s: &mut State, parts: &[Vec<usize>], families: &[Vec<usize>]) -> bool {
    if families.len() < 2 {
        return false;
    }
    let Some(fam) = families.iter().find(|f| f.len() >= 2) else {
        return false;
    };
    let (a, b) = (&parts[fam[0]], &parts[fam[1]]);
    let sizes: Vec<u64> = families
        .iter()
        .filter(|f| *f != fam)
        .map(|f| f.iter().map(|&i| parts[i].len() as u64).sum())
        .collect();
    let x = elementary_symmetric(&sizes, s.r - 2) as i128;
    let y = elementary_symmetric(&sizes, s.r - 1) as i128;
    let z: i128 = sizes.iter().map(|&v| v as i128).sum();
    let (la, lb, t) = (a.len() as i128, b.len() as i128, s.t as i128);
    let join = la * lb * (x - t);
    let split = la * (t * z - y);
    if join <= 0 && split <= 0 {
        return false;
    }
    if join >= split {
        for &u in a {
            for &v in b {
                s.g.set(u, v, Some(Colour::Blue));
            }
        }
        s.record(StepKind::JoinBlue {
            a: a.clone(),
            b: b.clone(),
        });
    } else {
        for &u in a {
            for w in 0..s.g.vertex_count() {
                if s.g.colour(u, w) == Some(Colour::Blue) {
                    s.g.set(u, w, Some(Colour::Red));
                }
            }
        }
        s.record(StepKind::SplitRed { a: a.clone() });
    }
    true
}

fn balance(s: &mut State, parts: &mut [Vec<usize>]) {
    loop {
        let Some(big) = (0..parts.len()).max_by_key(|&i| (parts[i].len(), std::cmp::Reverse(i))) else {
            return;
        };
        let small = (0..parts.len())
            .min_by_key(|&i| (parts[i].len(), i))
            .unwrap();
        if parts[big].len() < parts[small].len() + 2 {
            return;
        }
        let w = *parts[big].last().unwrap();
        let b = parts[small][0];
        let saved = s.g.clone();
        for x in 0..s.g.vertex_count() {
            if x != w && x != b {
                s.g.set(w, x, s.g.colour(b, x));
            }
        }
        s.g.set(w, b, None);
        if g_value(&s.g, s.r, s.t) < s.value {
            s.g = saved;
            return;
        }
        parts[big].pop();
        parts[small].push(w);
        parts[small].sort_unstable();
        s.record(StepKind::Balance {
            vertex: w,
            to: parts[small].clone(),
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::gen_turan_graph;
    use crate::graph::PatternGraph;

    #[test]
    fn monoblue_multipartite_is_a_fixpoint() {
        let g = BlueRedGraph::monochrome(&gen_turan_graph(6, 3).unwrap(), Colour::Blue);
        let out = symmetrize(&g, 4, 3, 2).unwrap();
        assert_eq!(out.graph, g);
        assert_eq!(out.initial_g, out.final_g);
        assert_eq!(out.parts, vec![vec![0, 1], vec![2, 3], vec![4, 5]]);
    }

    #[test]
    fn unbalanced_red_bipartite_gets_balanced() {
        let k31 = PatternGraph::new(4, [(0, 3), (1, 3), (2, 3)]).unwrap();
        let g = BlueRedGraph::monochrome(&k31, Colour::Red);
        assert_eq!(g_value(&g, 3, 2), 9);
        let out = symmetrize(&g, 3, 3, 2).unwrap();
        assert_eq!(out.final_g, 10);
        assert_eq!(out.graph.underlying().edge_count(), 4);
        assert!(out.graph.blue_edges().is_empty());
    }

    #[test]
    fn rejects_graphs_containing_the_clique() {
        let g = BlueRedGraph::monochrome(&PatternGraph::complete(4), Colour::Red);
        assert_eq!(symmetrize(&g, 4, 3, 2).unwrap_err(), Error::InputNotKkFree { k: 4 });
    }

    #[test]
    fn steps_never_lower_g() {
        let g = BlueRedGraph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4)], [(2, 3), (4, 5), (0, 5)]).unwrap();
        let out = symmetrize(&g, 4, 3, 2).unwrap();
        assert!(out.final_g >= out.initial_g);
        for st in &out.steps {
            assert!(st.g_after >= st.g_before, "{st:?}");
        }
        assert_eq!(g_value(&out.graph, 3, 2), out.final_g);
        assert!(out.graph.is_monochromatic());
    }
}
