//! Backtracking enumeration of (non-induced) embeddings of a pattern graph
//! into a host adjacency matrix.

use crate::graph::{Adjacency, PatternGraph};

const UNMAPPED: usize = usize::MAX;

struct Plan {
    /// Pattern vertices in placement order.
    order: Vec<usize>,
    /// For each position, the pattern neighbours placed before it.
    back: Vec<Vec<usize>>,
    degree: Vec<usize>,
}

/// Placement order: pre-assigned vertices first, then repeatedly the unplaced
/// vertex with the most already-placed neighbours, then highest degree, then
/// lowest index.
fn plan(pattern: &PatternGraph, fixed: &[(usize, usize)]) -> Plan {
    let k = pattern.vertex_count();
    let adj = pattern.adjacency();
    let degree = pattern.degrees();
    let mut placed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    for &(x, _) in fixed {
        if !placed[x] {
            placed[x] = true;
            order.push(x);
        }
    }
    while order.len() < k {
        let next = (0..k)
            .filter(|&x| !placed[x])
            .max_by_key(|&x| {
                let linked = adj.neighbors(x).filter(|&y| placed[y]).count();
                (linked, degree[x], std::cmp::Reverse(x))
            })
            .expect("an unplaced vertex exists");
        placed[next] = true;
        order.push(next);
    }
    let back = order
        .iter()
        .enumerate()
        .map(|(pos, &x)| order[..pos].iter().copied().filter(|&y| adj.has(x, y)).collect())
        .collect();
    Plan {
        order,
        back,
        degree,
    }
}

/// Enumerates injective maps `V(pattern) -> V(host)` that send pattern edges
/// to host edges, honouring the pre-assignments in `fixed` (pattern vertex,
/// host vertex). `visit` receives each complete map indexed by pattern
/// vertex; returning `true` stops the search. Returns whether it stopped.
pub(crate) fn search(
    host: &Adjacency,
    pattern: &PatternGraph,
    fixed: &[(usize, usize)],
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let k = pattern.vertex_count();
    if k > host.len() {
        return false;
    }
    let plan = plan(pattern, fixed);
    let mut map = vec![UNMAPPED; k];
    let mut used = vec![false; host.len()];
    for &(x, v) in fixed {
        if v >= host.len() || (used[v] && map[x] != v) || (map[x] != UNMAPPED && map[x] != v) {
            return false;
        }
        map[x] = v;
        used[v] = true;
    }
    let start = plan.order.iter().take_while(|&&x| map[x] != UNMAPPED).count();
    for (pos, &x) in plan.order.iter().enumerate().take(start) {
        let v = map[x];
        if host.degree(v) < plan.degree[x] || plan.back[pos].iter().any(|&y| !host.has(v, map[y])) {
            return false;
        }
    }
    extend(host, &plan, start, &mut map, &mut used, visit)
}

fn extend(
    host: &Adjacency,
    plan: &Plan,
    pos: usize,
    map: &mut [usize],
    used: &mut [bool],
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if pos == plan.order.len() {
        return visit(map);
    }
    let x = plan.order[pos];
    let back = &plan.back[pos];
    let need = plan.degree[x];
    let fits = |v: usize, used: &[bool], map: &[usize]| {
        !used[v] && host.degree(v) >= need && back.iter().all(|&y| host.has(v, map[y]))
    };
    let candidates: Vec<usize> = match back.first() {
        Some(&y) => host.neighbors(map[y]).filter(|&v| fits(v, used, map)).collect(),
        None => (0..host.len()).filter(|&v| fits(v, used, map)).collect(),
    };
    for v in candidates {
        map[x] = v;
        used[v] = true;
        let stop = extend(host, plan, pos + 1, map, used, visit);
        used[v] = false;
        map[x] = UNMAPPED;
        if stop {
            return true;
        }
    }
    false
}
