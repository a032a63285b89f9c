//! The acceptance battery: ten checks, each returning a one-line verdict.

use std::time::{Duration, Instant};

use rand::Rng;
use serde::Serialize;

use crate::bounds::{blue_red_bound, count_cliques, g_value, symmetrize, BlueRedGraph, Colour};
use crate::constructions::{
    gen_construction2, gen_construction3, gen_construction4, gen_packing, gen_q, gen_sts,
    gen_turan_graph, RegularSeed,
};
use crate::count::binomial;
use crate::detect::{
    extract_berge_from_heavy, extract_expansion3, find_copy, greedy_certificate, verify_witness,
    Mode,
};
use crate::exact::{brute_force_detect, exact_turan};
use crate::graph::PatternGraph;
use crate::hypergraph::Hypergraph;
use crate::random::{planted_heavy, random_hypergraph, random_kk_free_bluered, rng};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl std::fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{verdict}] {:>2} {}: {}", self.id, self.name, self.detail)
    }
}

pub const CRITERIA: [fn() -> CriterionReport; 10] = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
];

pub fn run_all() -> Vec<CriterionReport> {
    CRITERIA.iter().map(|c| c()).collect()
}

fn report(id: u8, name: &'static str, passed: bool, detail: String) -> CriterionReport {
    CriterionReport {
        id,
        name,
        passed,
        detail,
    }
}

fn pattern_set() -> Vec<(&'static str, PatternGraph)> {
    vec![
        ("S2", PatternGraph::star(2)),
        ("P4", PatternGraph::path(4)),
        ("K3", PatternGraph::complete(3)),
        ("C4", PatternGraph::cycle(4).expect("C4")),
        ("K4", PatternGraph::complete(4)),
    ]
}

fn contains(h: &Hypergraph, f: &PatternGraph, t: usize, mode: Mode) -> bool {
    find_copy(h, f, t, mode).expect("valid parameters").is_some()
}

pub fn criterion_1() -> CriterionReport {
    let start = Instant::now();
    let k4 = PatternGraph::complete(4);
    let mut ok = true;
    let mut parts = Vec::new();
    let mut q6 = 0;
    for n in 6..=8 {
        let q = gen_q(n, 3, 3, 2).expect("Q is feasible");
        let sizes: Vec<u64> = (0..3).map(|i| (n / 3 + usize::from(i < n % 3)) as u64).collect();
        let transversal = sizes[0] * sizes[1] * sizes[2];
        let crossing = sizes[0] * sizes[1] + sizes[0] * sizes[2] + sizes[1] * sizes[2];
        let predicted = transversal + binomial(n as u64, 2) - crossing;
        let free = !contains(&q, &k4, 2, Mode::Heavy) && !contains(&q, &k4, 2, Mode::Berge);
        ok &= q.edge_count() as u64 == predicted && free;
        parts.push(format!("n={n} |Q|={} predicted={predicted} free={free}", q.edge_count()));
        if n == 6 {
            q6 = q.edge_count();
        }
    }
    let solved = exact_turan(6, 3, &k4, 2, Mode::Heavy, 10_000_000).expect("solver runs");
    ok &= solved.exhausted && solved.value >= q6;
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(300);
    parts.push(format!(
        "exact(6)={} gap={} nodes={} exhausted={} in {:.1?}",
        solved.value,
        solved.value as i64 - q6 as i64,
        solved.nodes_explored,
        solved.exhausted,
        elapsed
    ));
    report(1, "Q-construction exactness", ok, parts.join("; "))
}

pub fn criterion_2() -> CriterionReport {
    let start = Instant::now();
    let patterns = pattern_set();
    let mut r = rng(2);
    let total = 1200;
    let mut agree = 0;
    let mut positives = 0;
    for i in 0..total {
        let n = r.gen_range(4..=7);
        let p = r.gen_range(0.15..0.85);
        let h = random_hypergraph(&mut r, n, 3, p);
        let (_, f) = &patterns[r.gen_range(0..patterns.len())];
        let t = r.gen_range(1..=3);
        let mode = Mode::ALL[i % 2];
        let fast = contains(&h, f, t, mode);
        let slow = brute_force_detect(&h, f, t, mode).expect("within caps");
        agree += usize::from(fast == slow);
        positives += usize::from(slow);
    }
    let elapsed = start.elapsed();
    let ok = agree == total && elapsed < Duration::from_secs(120);
    report(
        2,
        "detection oracle equivalence",
        ok,
        format!("{agree}/{total} agree ({positives} contain a copy) in {elapsed:.1?}"),
    )
}

pub fn criterion_3() -> CriterionReport {
    let mut violations = 0;
    let mut checks = 0;
    let mut patterns = pattern_set();
    patterns.push(("K2", PatternGraph::complete(2)));
    for n in [7, 9, 13, 15] {
        let sts = gen_sts(n).expect("admissible order");
        for (_, f) in &patterns {
            checks += 1;
            violations += usize::from(contains(&sts, f, 2, Mode::Heavy));
        }
    }
    report(
        3,
        "linear-hypergraph freeness",
        violations == 0,
        format!("{violations} violations over {checks} (system, pattern) checks"),
    )
}

pub fn criterion_4() -> CriterionReport {
    let k3 = PatternGraph::complete(3);
    let mut r = rng(4);
    let total = 200;
    let mut good = 0;
    for _ in 0..total {
        let n = r.gen_range(9..=12);
        let (h, _) = planted_heavy(&mut r, n, &k3, 6, 0.1);
        good += usize::from(
            contains(&h, &k3, 6, Mode::Heavy)
                && extract_berge_from_heavy(&h, &k3, 6)
                    .map(|w| w.t == 2 && verify_witness(&h, &k3, 2, Mode::Berge, &w))
                    .unwrap_or(false),
        );
    }
    report(
        4,
        "extraction soundness",
        good == total,
        format!("{good}/{total} 6-heavy triangles yield verified 2-wise Berge witnesses"),
    )
}

pub fn criterion_5() -> CriterionReport {
    let k3 = PatternGraph::complete(3);
    let mut r = rng(5);
    let total = 200;
    let mut good = 0;
    for _ in 0..total {
        let n = r.gen_range(7..=10);
        let (h, _) = planted_heavy(&mut r, n, &k3, 4, 0.1);
        let Ok(copy) = extract_expansion3(&h, &k3, 4) else {
            continue;
        };
        let mut apexes = copy.apexes.clone();
        apexes.sort_unstable();
        apexes.dedup();
        let covers = k3.edges().iter().zip(&copy.hyperedges).all(|(&(x, y), &e)| {
            let edge = &h.edges()[e];
            edge.contains(&copy.injection[x]) && edge.contains(&copy.injection[y])
        });
        let mut distinct = copy.hyperedges.clone();
        distinct.sort_unstable();
        distinct.dedup();
        good += usize::from(
            copy.hyperedges.len() == 3
                && distinct.len() == 3
                && apexes.len() == 3
                && apexes.iter().all(|a| !copy.injection.contains(a))
                && covers,
        );
    }
    report(
        5,
        "expansion extraction",
        good == total,
        format!("{good}/{total} expansions with distinct outside apexes"),
    )
}

pub fn criterion_6() -> CriterionReport {
    let p4 = PatternGraph::path(4);
    let c3 = PatternGraph::cycle(3).expect("C3");
    let mut mismatches = 0;
    let mut hits = 0;
    for n in 8..=14 {
        let h = gen_construction2(n, 3, 2).expect("feasible");
        mismatches += usize::from(h.edge_count() as u64 != binomial(n as u64 - 1, 2));
        hits += usize::from(contains(&h, &p4, 2, Mode::Heavy));
        hits += usize::from(contains(&h, &c3, 2, Mode::Heavy));
    }
    report(
        6,
        "path/cycle lower bound",
        mismatches == 0 && hits == 0,
        format!("n=8..14: {mismatches} size mismatches, {hits} detector hits"),
    )
}

/// Complete multipartite with the given parts, and a single colour between
/// any two parts.
fn is_monochrome_multipartite(g: &BlueRedGraph, parts: &[Vec<usize>]) -> bool {
    let n = g.vertex_count();
    let mut part = vec![usize::MAX; n];
    for (i, p) in parts.iter().enumerate() {
        for &v in p {
            part[v] = i;
        }
    }
    if part.contains(&usize::MAX) {
        return false;
    }
    for u in 0..n {
        for v in u + 1..n {
            if g.adjacent(u, v) != (part[u] != part[v]) {
                return false;
            }
        }
    }
    parts.iter().enumerate().all(|(i, a)| {
        parts[i + 1..]
            .iter()
            .all(|b| a.iter().all(|&u| b.iter().all(|&v| g.colour(u, v) == g.colour(a[0], b[0]))))
    })
}

pub fn criterion_7() -> CriterionReport {
    let (k, r3, t) = (4, 3, 2);
    let mut rngs = rng(7);
    let total = 500;
    let mut violations = 0;
    let mut worst_slack = i64::MAX;
    for _ in 0..total {
        let n = rngs.gen_range(3..=10);
        let p = rngs.gen_range(0.2..0.9);
        let g = random_kk_free_bluered(&mut rngs, n, k, p);
        let out = symmetrize(&g, k, r3, t).expect("input is K4-free");
        let monotone = out.steps.iter().all(|s| s.g_after >= s.g_before) && out.final_g >= out.initial_g;
        let bound = blue_red_bound(n, k, r3, t);
        let shape = out.graph.is_monochromatic() && is_monochrome_multipartite(&out.graph, &out.parts);
        let free = count_cliques(&out.graph.underlying(), k) == 0;
        let within = (out.final_g as i64) <= bound && (g_value(&g, r3, t) as i64) <= bound;
        worst_slack = worst_slack.min(bound - out.final_g as i64);
        violations += usize::from(!(monotone && shape && free && within));
    }
    let mut attained = true;
    for n in 3..=10 {
        let turan = gen_turan_graph(n, k - 1).expect("n >= 3");
        let best = [Colour::Blue, Colour::Red]
            .iter()
            .map(|&c| g_value(&BlueRedGraph::monochrome(&turan, c), r3, t) as i64)
            .max()
            .unwrap();
        attained &= best == blue_red_bound(n, k, r3, t);
    }
    report(
        7,
        "symmetrization monotonicity and bound",
        violations == 0 && attained,
        format!(
            "{violations} violations over {total} graphs (min slack {worst_slack}); monochromatic Turán graphs attain the bound for n=3..10: {attained}"
        ),
    )
}

pub fn criterion_8() -> CriterionReport {
    let patterns = pattern_set();
    let mut hosts: Vec<Hypergraph> = Vec::new();
    let mut r = rng(8);
    for _ in 0..500 {
        let n = r.gen_range(4..=8);
        let p = r.gen_range(0.1..0.9);
        hosts.push(random_hypergraph(&mut r, n, 3, p));
    }
    let random_count = hosts.len();
    for n in 6..=8 {
        hosts.push(gen_q(n, 3, 3, 2).expect("feasible"));
    }
    for n in [7, 9, 13] {
        hosts.push(gen_sts(n).expect("admissible"));
    }
    for n in 8..=10 {
        hosts.push(gen_construction2(n, 3, 2).expect("feasible"));
    }
    hosts.push(gen_construction2(8, 4, 3).expect("feasible"));
    let pm = RegularSeed::new(PatternGraph::complete(2), None).expect("regular");
    hosts.push(gen_construction3(10, 3, &pm).expect("seed fits"));
    let c4 = RegularSeed::new(PatternGraph::cycle(4).expect("C4"), Some(vec![(0, 1), (2, 3)])).expect("regular");
    hosts.push(gen_construction3(8, 4, &c4).expect("seed fits"));
    hosts.push(gen_construction4(10, 4, &PatternGraph::star(2)).expect("feasible").hypergraph);
    hosts.push(gen_packing(9, 3, 2).expect("valid"));
    let mut violations = 0;
    let mut checks = 0;
    for (i, h) in hosts.iter().enumerate() {
        for t in 1..=3 {
            let cert = greedy_certificate(h, t);
            violations += usize::from(cert.accounted() != h.edge_count());
            let (_, f) = &patterns[(i + t) % patterns.len()];
            if !contains(h, f, t, Mode::Berge) && cert.saturated().contains_subgraph(f) {
                violations += 1;
            }
            checks += 1;
        }
    }
    report(
        8,
        "greedy certificate identity",
        violations == 0,
        format!(
            "{violations} violations over {checks} checks ({random_count} random hosts, {} generator outputs)",
            hosts.len() - random_count
        ),
    )
}

pub fn criterion_9() -> CriterionReport {
    let s2 = PatternGraph::star(2);
    let solve = |t, mode| exact_turan(5, 3, &s2, t, mode, 10_000_000).expect("solver runs");
    let mut ok = true;
    let mut values = Vec::new();
    let mut berge = Vec::new();
    for t in 1..=3 {
        let h = solve(t, Mode::Heavy);
        let b = solve(t, Mode::Berge);
        ok &= h.exhausted && b.exhausted && h.value <= b.value;
        values.push(format!("t={t}: heavy={} berge={}", h.value, b.value));
        berge.push(b.value);
    }
    for t in 2..=3 {
        ok &= berge[t - 1] <= berge[t - 2] + 10;
    }
    report(9, "Berge recursion at desk scale", ok, values.join(", "))
}

pub fn criterion_10() -> CriterionReport {
    let s2 = PatternGraph::star(2);
    let t = 3;
    let mut ok = true;
    let mut parts = Vec::new();
    for n in [30, 40, 60] {
        let out = gen_construction4(n, t, &s2).expect("t = 2k - 3 is feasible");
        let size = out.hypergraph.edge_count();
        let floor = 0.7 * t as f64 * (n * n) as f64 / 6.0;
        let free = !contains(&out.hypergraph, &s2, t, Mode::Heavy);
        if n == 60 {
            ok = size as f64 >= floor && free;
        }
        parts.push(format!("n={n}: {size} >= {floor:.0}? {} free={free}", size as f64 >= floor));
    }
    report(10, "asymptotic-trend check", ok, parts.join("; "))
}
