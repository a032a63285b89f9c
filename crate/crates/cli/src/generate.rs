use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use heavyberge::constructions::{
    construction1_size, construction2_size, construction3_size, design_target, gen_construction1,
    gen_construction2, gen_construction3, gen_construction4, gen_packing, gen_q, gen_sts,
    gen_turan_hypergraph, q_size, turan_hypergraph_size, RegularSeed,
};
use heavyberge::count::binomial;
use heavyberge::{find_copy, Hypergraph, Mode, PatternGraph};
use serde::Serialize;

use crate::read_pattern;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    Turan,
    #[value(name = "Q", alias = "q")]
    Q,
    C1,
    C2,
    C3,
    C4,
    Sts,
    Packing,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    pub generator: Generator,
    #[arg(long)]
    pub n: usize,
    /// Number of parts (turan, Q).
    #[arg(long)]
    pub parts: Option<usize>,
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    #[arg(long)]
    pub t: Option<usize>,
    /// Maximum pair multiplicity (packing).
    #[arg(long)]
    pub lambda: Option<usize>,
    /// Seed file: a regular hypergraph (c1) or a regular graph with optional
    /// matching (c3).
    #[arg(long)]
    pub seed: Option<PathBuf>,
    /// Degree of the built-in c3 seed when no seed file is given.
    #[arg(long)]
    pub degree: Option<usize>,
    /// Pattern for c4, and for the freeness check of every generator.
    #[arg(long)]
    pub pattern: Option<String>,
    /// Threshold of the freeness check.
    #[arg(long)]
    pub check_t: Option<usize>,
    #[arg(long, value_enum, default_value_t = CliMode::Heavy)]
    pub check_mode: CliMode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CliMode {
    Heavy,
    Berge,
}

impl From<CliMode> for Mode {
    fn from(m: CliMode) -> Self {
        match m {
            CliMode::Heavy => Mode::Heavy,
            CliMode::Berge => Mode::Berge,
        }
    }
}

#[derive(Serialize)]
pub struct Freeness {
    pub pattern: String,
    pub t: usize,
    pub mode: Mode,
    pub free: bool,
}

#[derive(Serialize)]
pub struct GenerateReport {
    pub generator: String,
    pub size: usize,
    pub predicted: serde_json::Value,
    pub freeness: Option<Freeness>,
    #[serde(skip_serializing_if = "serde_json::Map::is_empty")]
    pub extra: serde_json::Map<String, serde_json::Value>,
}

fn need<T: Copy>(value: Option<T>, flag: &str, generator: Generator) -> Result<T> {
    match value {
        Some(v) => Ok(v),
        None => bail!("--{flag} is required for {generator:?}"),
    }
}

pub fn run(args: &GenerateArgs) -> Result<(Hypergraph, GenerateReport)> {
    let g = args.generator;
    let n = args.n;
    let mut extra = serde_json::Map::new();
    let (h, predicted, default_check): (Hypergraph, serde_json::Value, Option<(String, usize)>) = match g {
        Generator::Turan => {
            let p = need(args.parts, "parts", g)?;
            let h = gen_turan_hypergraph(n, p, args.r)?;
            (h, turan_hypergraph_size(n, p, args.r)?.into(), Some((format!("K{}", p + 1), 1)))
        }
        Generator::Q => {
            let p = need(args.parts, "parts", g)?;
            let t = need(args.t, "t", g)?;
            let h = gen_q(n, p, args.r, t)?;
            (h, q_size(n, p, args.r, t)?.into(), Some((format!("K{}", p + 1), t)))
        }
        Generator::C1 => {
            let path = need(args.seed.as_ref(), "seed", g)?;
            let seed = Hypergraph::from_json(&read(path)?)?;
            let h = gen_construction1(n, &seed)?;
            (h, construction1_size(n, &seed)?.into(), None)
        }
        Generator::C2 => {
            let t = need(args.t, "t", g)?;
            let h = gen_construction2(n, args.r, t)?;
            let k = 2 * t.saturating_sub(1) * (args.r - 2) + 2;
            (h, construction2_size(n, args.r, t)?.into(), Some((format!("P{k}"), t)))
        }
        Generator::C3 => {
            let t = need(args.t, "t", g)?;
            let seed = match (&args.seed, args.degree) {
                (Some(path), _) => RegularSeed::from_json(&read(path)?)?,
                (None, Some(d)) => RegularSeed::builtin(d),
                (None, None) => RegularSeed::builtin(if t % 2 == 1 { (t - 1) / 2 } else { t / 2 }),
            };
            let h = gen_construction3(n, t, &seed)?;
            (h, construction3_size(n, t, &seed)?.into(), None)
        }
        Generator::C4 => {
            let t = need(args.t, "t", g)?;
            let spec = need(args.pattern.as_deref(), "pattern", g)?;
            let out = gen_construction4(n, t, &read_pattern(spec)?)?;
            extra.insert("branch".into(), out.branch.into());
            extra.insert("t0".into(), out.t0.into());
            extra.insert("packing_size".into(), out.packing_size.into());
            (out.hypergraph, out.base_size.into(), Some((spec.to_string(), t)))
        }
        Generator::Sts => {
            let h = gen_sts(n)?;
            (h, (binomial(n as u64, 2) / 3).into(), Some(("K2".into(), 2)))
        }
        Generator::Packing => {
            let lambda = need(args.lambda, "lambda", g)?;
            let h = gen_packing(n, args.r, lambda)?;
            (h, design_target(n, args.r, lambda).into(), Some(("K2".into(), lambda + 1)))
        }
    };
    let check = match (&args.pattern, args.check_t, default_check) {
        (Some(p), Some(t), _) => Some((p.clone(), t)),
        (Some(p), None, Some((_, t))) => Some((p.clone(), t)),
        (None, t, Some((p, dt))) => Some((p, t.unwrap_or(dt))),
        _ => None,
    };
    let freeness = match check {
        Some((spec, t)) => {
            let pattern: PatternGraph = read_pattern(&spec)?;
            let mode = args.check_mode.into();
            let free = find_copy(&h, &pattern, t, mode)?.is_none();
            Some(Freeness {
                pattern: spec,
                t,
                mode,
                free,
            })
        }
        None => None,
    };
    let report = GenerateReport {
        generator: format!("{g:?}").to_lowercase(),
        size: h.edge_count(),
        predicted,
        freeness,
        extra,
    };
    Ok((h, report))
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}
