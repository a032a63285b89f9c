use std::collections::HashMap;

use itertools::Itertools;

use crate::count::binomial;
use crate::error::{Error, Result};
use crate::hypergraph::{for_each_pair, Hypergraph};

/// Steiner triple system on `n` points: Bose for `n ≡ 3 (mod 6)`, Skolem for
/// `n ≡ 1 (mod 6)`.
pub fn gen_sts(n: usize) -> Result<Hypergraph> {
    let triples = match n % 6 {
        3 => bose(n / 3),
        1 => skolem(n / 6),
        _ => return Err(Error::BadResidue { n }),
    };
    let edges = triples
        .into_iter()
        .map(|mut e| {
            e.sort_unstable();
            e.to_vec()
        })
        .collect();
    Ok(Hypergraph::from_trusted(n, 3, edges))
}

/// Points `(x, i)` of `Z_v × Z_3` are numbered `x + i v`.
fn bose(v: usize) -> Vec<[usize; 3]> {
    let half = v.div_ceil(2);
    let op = |x: usize, y: usize| (x + y) * half % v;
    let pt = |x: usize, i: usize| x + (i % 3) * v;
    let mut out: Vec<[usize; 3]> = (0..v).map(|x| [pt(x, 0), pt(x, 1), pt(x, 2)]).collect();
    for i in 0..3 {
        for (x, y) in (0..v).tuple_combinations() {
            out.push([pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
        }
    }
    out
}

/// Points `(x, i)` of `Z_{2m} × Z_3` are numbered `x + 2 i m`; the point at
/// infinity is `6m`.
fn skolem(m: usize) -> Vec<[usize; 3]> {
    let q = 2 * m;
    let op = |x: usize, y: usize| {
        let s = (x + y) % q;
        if s.is_multiple_of(2) {
            s / 2
        } else {
            (s - 1) / 2 + m
        }
    };
    let pt = |x: usize, i: usize| x + (i % 3) * q;
    let inf = 3 * q;
    let mut out: Vec<[usize; 3]> = (0..m).map(|x| [pt(x, 0), pt(x, 1), pt(x, 2)]).collect();
    for i in 0..3 {
        for x in 0..m {
            out.push([inf, pt(x + m, i), pt(x, i + 1)]);
        }
        for (x, y) in (0..q).tuple_combinations() {
            out.push([pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
        }
    }
    out
}

/// Greedy packing: `r`-sets in lexicographic order, each kept iff no pair
/// inside it would exceed multiplicity `lambda`.
pub fn gen_packing(n: usize, r: usize, lambda: usize) -> Result<Hypergraph> {
    if lambda == 0 || r < 2 || r > n {
        return Err(Error::BadParams(format!(
            "need lambda >= 1 and 2 <= r <= n, got lambda = {lambda}, r = {r}, n = {n}"
        )));
    }
    let mut count = vec![0usize; n * n];
    let mut edges = Vec::new();
    for e in (0..n).combinations(r) {
        let mut ok = true;
        for_each_pair(&e, |(a, b)| ok &= count[a * n + b] < lambda);
        if ok {
            for_each_pair(&e, |(a, b)| count[a * n + b] += 1);
            edges.push(e);
        }
    }
    Ok(Hypergraph::from_trusted(n, r, edges))
}

/// `lambda C(n,2) / C(r,2)`, the size of a λ-fold design if one exists.
pub fn design_target(n: usize, r: usize, lambda: usize) -> f64 {
    lambda as f64 * binomial(n as u64, 2) as f64 / binomial(r as u64, 2) as f64
}

/// Greedy lexicographic packing of triples with pair multiplicity at most
/// `lambda` among the new triples, skipping triples of `base` and any triple
/// that would make a pair of `base` reach multiplicity `t`. The `t`-heavy
/// graph of the union equals that of `base`.
pub fn pack_preserving_heavy(base: &Hypergraph, t: usize, lambda: usize) -> Vec<Vec<usize>> {
    let n = base.vertex_count();
    let mut out = Vec::new();
    if lambda == 0 {
        return out;
    }
    let m0: HashMap<(usize, usize), usize> = base.shadow_multiplicity().iter().collect();
    let mut pc = vec![0usize; n * n];
    for e in (0..n).combinations(3) {
        if base.contains_edge(&e) {
            continue;
        }
        let mut ok = true;
        for_each_pair(&e, |(a, b)| {
            let c = pc[a * n + b];
            let m = m0.get(&(a, b)).copied().unwrap_or(0);
            ok &= c < lambda && (m >= t || m + c + 1 < t);
        });
        if ok {
            for_each_pair(&e, |(a, b)| pc[a * n + b] += 1);
            out.push(e);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_steiner(n: usize) {
        let h = gen_sts(n).unwrap();
        assert_eq!(h.edge_count(), n * (n - 1) / 6, "n = {n}");
        let mult = h.shadow_multiplicity();
        for u in 0..n {
            for v in u + 1..n {
                assert_eq!(mult.get(u, v), 1, "n = {n}, pair {u},{v}");
            }
        }
    }

    #[test]
    fn steiner_systems() {
        for n in [3, 7, 9, 13, 15, 19, 21, 25, 27, 31, 33] {
            assert_steiner(n);
        }
        assert_eq!(gen_sts(8), Err(Error::BadResidue { n: 8 }));
        assert_eq!(gen_sts(11), Err(Error::BadResidue { n: 11 }));
    }

    #[test]
    fn packing_respects_cap() {
        let p = gen_packing(7, 3, 1).unwrap();
        assert!(p.shadow_multiplicity().max() <= 1);
        assert!(p.edge_count() <= 7);
        let p = gen_packing(9, 3, 2).unwrap();
        assert!(p.shadow_multiplicity().max() <= 2);
        assert!(p.edge_count() as f64 >= 0.8 * design_target(9, 3, 2));
        assert!(gen_packing(4, 3, 0).is_err());
        assert!(gen_packing(2, 3, 1).is_err());
    }

    #[test]
    fn preserving_packing_keeps_heavy_graph() {
        let base = Hypergraph::new(6, 3, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]]).unwrap();
        let extra = pack_preserving_heavy(&base, 2, 2);
        let mut all = base.edges().to_vec();
        all.extend(extra.iter().cloned());
        let union = Hypergraph::new(6, 3, all).unwrap();
        assert_eq!(union.heavy_graph(2), base.heavy_graph(2));
        assert!(!extra.is_empty());
        assert!(pack_preserving_heavy(&base, 2, 0).is_empty());
    }
}
