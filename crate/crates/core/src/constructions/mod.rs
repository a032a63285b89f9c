//! Deterministic generators for the extremal constructions, each with an
//! exact size formula.

mod blocks;
mod designs;
mod turan;

pub use blocks::{
    bipartite_threshold, construction1_size, construction2_size, construction3_size,
    gen_construction1, gen_construction2, gen_construction3, gen_construction4, Construction4,
    RegularSeed,
};
pub use designs::{design_target, gen_packing, gen_sts, pack_preserving_heavy};
pub use turan::{
    gen_q, gen_turan_graph, gen_turan_hypergraph, q_size, turan_graph_edges,
    turan_hypergraph_size,
};

use std::ops::Range;

use crate::error::{Error, Result};

/// Disjoint contiguous vertex intervals covering `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<Range<usize>>,
    balanced: bool,
}

impl Partition {
    /// `p` parts whose sizes differ by at most one, larger parts first.
    pub fn balanced(n: usize, p: usize) -> Result<Self> {
        if p == 0 || p > n {
            return Err(Error::BadParams(format!("need 1 <= p <= n, got p = {p}, n = {n}")));
        }
        let (q, extra) = (n / p, n % p);
        let mut start = 0;
        let parts = (0..p)
            .map(|i| {
                let len = q + usize::from(i < extra);
                let part = start..start + len;
                start += len;
                part
            })
            .collect();
        Ok(Self {
            parts,
            balanced: true,
        })
    }

    /// Arbitrary sizes, laid out contiguously in the given order.
    pub fn from_sizes(sizes: &[usize]) -> Self {
        let mut start = 0;
        let parts: Vec<_> = sizes
            .iter()
            .map(|&len| {
                let part = start..start + len;
                start += len;
                part
            })
            .collect();
        let balanced = match (sizes.iter().min(), sizes.iter().max()) {
            (Some(lo), Some(hi)) => hi - lo <= 1,
            _ => true,
        };
        Self { parts, balanced }
    }

    pub fn parts(&self) -> &[Range<usize>] {
        &self.parts
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.len()).collect()
    }

    pub fn is_balanced(&self) -> bool {
        self.balanced
    }

    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(&v))
    }
}
