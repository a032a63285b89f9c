//! `heavyberge`: generate extremal constructions, detect heavy and Berge
//! copies, evaluate bounds and run exact searches.

mod generate;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use heavyberge::bounds::{symmetrize, theorem_bounds, BlueRedGraph};
use heavyberge::exact::exact_turan;
use heavyberge::{find_copy, selftest, Hypergraph, PatternGraph};
use serde_json::json;

use generate::{CliMode, GenerateArgs};

#[derive(Parser, Debug)]
#[command(name = "heavyberge", version, about)]
struct Cli {
    /// Write the primary output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a construction. The sidecar report goes next to `--out`, or to
    /// stderr.
    Generate(GenerateArgs),
    /// Exit 0 if the hypergraph is free of the pattern, 1 if it contains it.
    Check {
        #[arg(long)]
        input: PathBuf,
        /// Kk, Pk, Ck, Sk or a pattern graph JSON file.
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value_t = CliMode::Heavy)]
        mode: CliMode,
    },
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
        /// Kk, Pk or Ck.
        #[arg(long)]
        pattern: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    TuranExact {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value_t = CliMode::Heavy)]
        mode: CliMode,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    Symmetrize {
        /// Blue-red graph JSON: {"n", "blue", "red"}.
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the acceptance battery.
    Selftest,
}

pub(crate) fn read_pattern(spec: &str) -> Result<PatternGraph> {
    if let Ok(p) = spec.parse() {
        return Ok(p);
    }
    let text = std::fs::read_to_string(spec).with_context(|| format!("`{spec}` is neither a named pattern nor a readable file"))?;
    Ok(PatternGraph::from_json(&text)?)
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, format!("{text}\n")).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            writeln!(stdout, "{text}")?;
            Ok(())
        }
    }
}

fn sidecar(path: &Path) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    path.with_file_name(format!("{stem}.report.json"))
}

fn table(rows: &[(String, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}")).collect::<Vec<_>>().join("\n")
}

fn run(cli: Cli) -> Result<ExitCode> {
    let out = cli.out.as_deref();
    match cli.command {
        Command::Generate(args) => {
            let (h, report) = generate::run(&args)?;
            let report = serde_json::to_string_pretty(&report)?;
            emit(out, &h.to_json())?;
            match out {
                Some(path) => std::fs::write(sidecar(path), format!("{report}\n"))?,
                None => eprintln!("{report}"),
            }
        }
        Command::Check {
            input,
            pattern,
            t,
            mode,
        } => {
            let h = Hypergraph::from_json(&read_file(&input)?)?;
            let f = read_pattern(&pattern)?;
            return match find_copy(&h, &f, t, mode.into())? {
                None => {
                    emit(out, "free")?;
                    Ok(ExitCode::SUCCESS)
                }
                Some(w) => {
                    emit(out, &format!("contained\n{}", w.to_json()))?;
                    Ok(ExitCode::from(1))
                }
            };
        }
        Command::Bounds {
            n,
            r,
            t,
            pattern,
            format,
        } => {
            let report = theorem_bounds(n, r, t, pattern.parse()?)?;
            let text = match format {
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv().trim_end().to_string(),
                Format::Table => report.to_table().trim_end().to_string(),
            };
            emit(out, &text)?;
        }
        Command::TuranExact {
            n,
            r,
            pattern,
            t,
            mode,
            budget,
            format,
        } => {
            let res = exact_turan(n, r, &read_pattern(&pattern)?, t, mode.into(), budget)?;
            let text = match format {
                Format::Json => res.to_json(),
                Format::Csv => format!(
                    "value,exhausted,nodes_explored\n{},{},{}",
                    res.value, res.exhausted, res.nodes_explored
                ),
                Format::Table => table(&[
                    ("value".into(), res.value.to_string()),
                    ("exhausted".into(), res.exhausted.to_string()),
                    ("nodes explored".into(), res.nodes_explored.to_string()),
                    ("extremal".into(), res.extremal.to_json()),
                ]),
            };
            emit(out, &text)?;
        }
        Command::Symmetrize {
            input,
            k,
            r,
            t,
            format,
        } => {
            let g = BlueRedGraph::from_json(&read_file(&input)?)?;
            let res = symmetrize(&g, k, r, t)?;
            let text = match format {
                Format::Json => {
                    let graph: serde_json::Value = serde_json::from_str(&res.graph.to_json())?;
                    serde_json::to_string_pretty(&json!({
                        "initial_g": res.initial_g,
                        "final_g": res.final_g,
                        "parts": res.parts,
                        "steps": res.steps,
                        "graph": graph,
                    }))?
                }
                Format::Csv | Format::Table => {
                    let mut lines = vec!["step,op,g_before,g_after".to_string()];
                    for (i, s) in res.steps.iter().enumerate() {
                        let op = serde_json::to_value(&s.kind)?;
                        lines.push(format!("{i},{},{},{}", op["op"].as_str().unwrap_or("?"), s.g_before, s.g_after));
                    }
                    let parts: Vec<String> = res.parts.iter().map(|p| p.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).collect();
                    lines.push(format!("final,{},{},{}", parts.join("|"), res.initial_g, res.final_g));
                    if format == Format::Table {
                        lines.iter().map(|l| l.replace(',', "\t")).collect::<Vec<_>>().join("\n")
                    } else {
                        lines.join("\n")
                    }
                }
            };
            emit(out, &text)?;
        }
        Command::Selftest => {
            let reports = selftest::run_all();
            let lines: Vec<String> = reports.iter().map(ToString::to_string).collect();
            emit(out, &lines.join("\n"))?;
            if reports.iter().any(|r| !r.passed) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
