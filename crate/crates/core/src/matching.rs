//! Maximum bipartite matching (Hopcroft–Karp).

use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub size: usize,
    /// `left[i] = Some(j)` iff left vertex `i` is matched to right vertex `j`.
    pub left: Vec<Option<usize>>,
    pub right: Vec<Option<usize>>,
}

impl Matching {
    pub fn saturates_left(&self) -> bool {
        self.size == self.left.len()
    }
}

const INF: usize = usize::MAX;

/// `adj[i]` lists the right-side neighbours of left vertex `i`; right
/// vertices are `0..right_len`.
pub fn max_matching(right_len: usize, adj: &[Vec<usize>]) -> Matching {
    let left_len = adj.len();
    let mut left = vec![None; left_len];
    let mut right = vec![None; right_len];
    let mut dist = vec![INF; left_len];
    let mut size = 0;
    loop {
        if !bfs(adj, &left, &right, &mut dist) {
            break;
        }
        let mut next = vec![0usize; left_len];
        for i in 0..left_len {
            if left[i].is_none() && dfs(i, adj, &mut left, &mut right, &mut dist, &mut next) {
                size += 1;
            }
        }
    }
    Matching { size, left, right }
}

fn bfs(
    adj: &[Vec<usize>],
    left: &[Option<usize>],
    right: &[Option<usize>],
    dist: &mut [usize],
) -> bool {
    let mut queue = VecDeque::new();
    for (i, m) in left.iter().enumerate() {
        if m.is_none() {
            dist[i] = 0;
            queue.push_back(i);
        } else {
            dist[i] = INF;
        }
    }
    let mut found = false;
    while let Some(i) = queue.pop_front() {
        for &j in &adj[i] {
            match right[j] {
                None => found = true,
                Some(k) if dist[k] == INF => {
                    dist[k] = dist[i] + 1;
                    queue.push_back(k);
                }
                Some(_) => {}
            }
        }
    }
    found
}

fn dfs(
    i: usize,
    adj: &[Vec<usize>],
    left: &mut [Option<usize>],
    right: &mut [Option<usize>],
    dist: &mut [usize],
    next: &mut [usize],
) -> bool {
    while next[i] < adj[i].len() {
        let j = adj[i][next[i]];
        next[i] += 1;
        let ok = match right[j] {
            None => true,
            Some(k) => dist[k] == dist[i] + 1 && dfs(k, adj, left, right, dist, next),
        };
        if ok {
            left[i] = Some(j);
            right[j] = Some(i);
            return true;
        }
    }
    dist[i] = INF;
    false
}
