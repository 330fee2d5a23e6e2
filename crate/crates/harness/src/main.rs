use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use kiso::certify::{certify_families, certify_instance, Grid};
use kiso::input::read_source;
use kiso::verify::{conjecture_survey, verify_stream, CsvRow, SurveyOptions, VerifyOptions};
use kiso_core::construct::{construct, Regime};
use kiso_core::families::{check_instance, generate};
use kiso_core::partition::{
    compute_partition, lowest, refine_thm2, refine_thm3, theorem6_witnesses, SharedReading,
};
use kiso_core::props::{
    is_dominating, is_irredundant, is_k_isolating, is_maximal_irredundant, PrivateNeighborTable,
};
use kiso_core::solve::{gamma, iota, ir_guarded};
use kiso_core::{parse_graph6, Graph, VertexSet};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "kiso",
    version,
    about = "Domination, irredundance and k-isolation: exact solvers, checks and certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Source {
    /// graph6 input file, or `-` for standard input.
    #[arg(long, default_value = "-")]
    g6: String,
}

#[derive(Subcommand)]
enum Command {
    /// Check every inequality and the constructive bounds over a graph6 stream.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Skip graphs with more vertices.
        #[arg(long)]
        max_n: Option<usize>,
        /// Worker threads (0: one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write the aggregate report as JSON here instead of standard output.
        #[arg(long)]
        json: Option<String>,
        /// Write one CSV row per graph here.
        #[arg(long)]
        csv: Option<String>,
        /// Solve ir above the order cap.
        #[arg(long)]
        force: bool,
        /// Reading of the shared block used when k = Δ - 1.
        #[arg(long, default_value = "i-adjacency")]
        reading: SharedReading,
        /// Random maximal irredundant sets per graph, with random representatives.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Largest ι_k/ir per (Δ, k) over a graph6 stream.
    Survey {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0)]
        min_delta: usize,
        #[arg(long)]
        max_delta: Option<usize>,
        /// Largest k surveyed.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        json: Option<String>,
        #[arg(long)]
        force: bool,
    },
    /// Certify the extremal families against their claimed values.
    Certify {
        /// small, large or all.
        #[arg(long, default_value = "small")]
        grid: Grid,
        /// Certify one instance instead of a grid.
        #[arg(long)]
        name: Option<String>,
        #[arg(long, value_delimiter = ',')]
        params: Vec<usize>,
        #[arg(long)]
        json: Option<String>,
    },
    /// Exact value and lexicographically least witness of an invariant.
    Solve {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        invariant: Invariant,
        /// Clique size for iota.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        force: bool,
    },
    /// Partition blocks induced by a maximal irredundant set, with refinements.
    Partition {
        #[command(flatten)]
        source: Source,
        /// Comma-separated vertices; defaults to the solver's ir witness.
        #[arg(long)]
        iset: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value = "i-adjacency")]
        reading: SharedReading,
        #[arg(long)]
        force: bool,
    },
    /// Certified k-isolating set built from a maximal irredundant set.
    Construct {
        #[command(flatten)]
        source: Source,
        /// Defaults to every applicable k.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        iset: Option<String>,
        #[arg(long, default_value = "i-adjacency")]
        reading: SharedReading,
        /// Attach a greedy packing lower bound.
        #[arg(long)]
        packing: bool,
        #[arg(long)]
        force: bool,
    },
    /// Generate an extremal family instance.
    Family {
        #[arg(long)]
        name: String,
        #[arg(long, value_delimiter = ',')]
        params: Vec<usize>,
        /// Print only the graph6 line.
        #[arg(long)]
        emit_g6: bool,
        /// Print the witness sets with vertex labels.
        #[arg(long)]
        emit_witnesses: bool,
    },
    /// Evaluate the set predicates for a vertex set.
    Check {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        iset: String,
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Invariant {
    Gamma,
    Ir,
    Iota,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e)
            if e.downcast_ref::<io::Error>()
                .is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(value: &impl Serialize, path: Option<&str>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match path {
        Some(p) => std::fs::write(p, text + "\n").with_context(|| format!("writing {p}")),
        None => {
            let mut out = io::stdout().lock();
            writeln!(out, "{text}")?;
            Ok(())
        }
    }
}

fn graphs(source: &Source) -> Result<Vec<(String, Graph)>> {
    let lines = read_source(&source.g6)
        .with_context(|| format!("opening {}", source.g6))?
        .read_all()?;
    if lines.is_empty() {
        bail!("no graphs in {}", source.g6);
    }
    lines
        .into_iter()
        .map(|l| {
            let g = parse_graph6(&l.text).with_context(|| format!("line {}", l.line))?;
            Ok((l.text, g))
        })
        .collect()
}

fn parse_set(text: &str, g: &Graph) -> Result<VertexSet> {
    let s = VertexSet::parse_list(text)?;
    g.check_set(&s)?;
    Ok(s)
}

fn input_set(iset: Option<&str>, g: &Graph, force: bool) -> Result<VertexSet> {
    match iset {
        Some(t) => parse_set(t, g),
        None => Ok(ir_guarded(g, force)?.witness),
    }
}

/// One JSON document for a single graph, an array otherwise.
fn emit_all(values: Vec<Value>) -> Result<()> {
    if values.len() == 1 {
        emit(&values[0], None)
    } else {
        emit(&values, None)
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify {
            source,
            max_n,
            jobs,
            json,
            csv,
            force,
            reading,
            samples,
            seed,
        } => {
            let opts = VerifyOptions {
                max_n,
                force,
                jobs,
                reading,
                samples,
                seed,
                ..Default::default()
            };
            let reader =
                read_source(&source.g6).with_context(|| format!("opening {}", source.g6))?;
            let mut writer = match &csv {
                Some(p) => Some(csv::Writer::from_writer(BufWriter::new(
                    File::create(p).with_context(|| format!("creating {p}"))?,
                ))),
                None => None,
            };
            let agg = verify_stream(reader, &opts, |rec| {
                if let Some(w) = writer.as_mut() {
                    w.serialize(CsvRow::from(rec))?;
                }
                Ok(())
            })?;
            if let Some(mut w) = writer {
                w.flush()?;
            }
            emit(&agg, json.as_deref())?;
            eprintln!(
                "verified {} graphs ({} parse errors, {} skipped): {} hard failures, {} informational flags",
                agg.verified,
                agg.parse_errors.len(),
                agg.skipped.len(),
                agg.hard_failures,
                agg.informational.len()
            );
            Ok(agg.passed())
        }
        Command::Survey {
            source,
            min_delta,
            max_delta,
            k,
            max_n,
            jobs,
            json,
            force,
        } => {
            let opts = SurveyOptions {
                min_delta,
                max_delta: max_delta.unwrap_or(usize::MAX),
                max_k: k.unwrap_or(usize::MAX),
                max_n,
                force,
                jobs,
            };
            let reader =
                read_source(&source.g6).with_context(|| format!("opening {}", source.g6))?;
            let report = conjecture_survey(reader, &opts)?;
            emit(&report, json.as_deref())?;
            Ok(true)
        }
        Command::Certify {
            grid,
            name,
            params,
            json,
        } => {
            let report = match name {
                Some(name) => certify_families(&[(name.as_str(), params)]),
                None => certify_families(&grid.entries()),
            };
            emit(&report, json.as_deref())?;
            for r in report.rows.iter().filter(|r| !r.passed) {
                eprintln!(
                    "FAILED {} {:?}: {}",
                    r.name,
                    r.params,
                    r.error.as_deref().unwrap_or("claim mismatch")
                );
            }
            Ok(report.passed())
        }
        Command::Solve {
            source,
            invariant,
            k,
            force,
        } => {
            let mut out = Vec::new();
            for (text, g) in graphs(&source)? {
                let (r, k) = match invariant {
                    Invariant::Gamma => (gamma(&g), None),
                    Invariant::Ir => (ir_guarded(&g, force)?, None),
                    Invariant::Iota => {
                        let k = k.context("--k is required for iota")?;
                        (iota(&g, k)?, Some(k))
                    }
                };
                let mut v = serde_json::to_value(&r)?;
                v["graph6"] = json!(text);
                if let Some(k) = k {
                    v["k"] = json!(k);
                }
                out.push(v);
            }
            emit_all(out)?;
            Ok(true)
        }
        Command::Partition {
            source,
            iset,
            k,
            reading,
            force,
        } => {
            let mut out = Vec::new();
            for (text, g) in graphs(&source)? {
                let i = input_set(iset.as_deref(), &g, force)?;
                let p = compute_partition(&g, &i)?;
                let witnesses = theorem6_witnesses(&g, &p)?;
                let mut v = json!({
                    "graph6": text,
                    "delta": g.max_degree(),
                    "partition": p,
                    "theorem6": witnesses,
                });
                if let Some(k) = k {
                    v["k"] = json!(k);
                    match Regime::of(k, g.max_degree())? {
                        Regime::DeltaMinusOne => {
                            v["refinement"] =
                                serde_json::to_value(refine_thm2(&g, &p, k, reading)?)?
                        }
                        Regime::DeltaMinusTwo => {
                            v["refinement"] = serde_json::to_value(refine_thm3(&g, &p, k)?)?
                        }
                        _ => {}
                    }
                }
                out.push(v);
            }
            emit_all(out)?;
            Ok(true)
        }
        Command::Construct {
            source,
            k,
            iset,
            reading,
            packing,
            force,
        } => {
            let mut out = Vec::new();
            let mut ok = true;
            for (text, g) in graphs(&source)? {
                let i = input_set(iset.as_deref(), &g, force)?;
                let ks: Vec<usize> = match k {
                    Some(k) => vec![k],
                    None => Regime::applicable_ks(g.max_degree()).collect(),
                };
                for k in ks {
                    let mut cert = construct(&g, &i, k, reading, lowest)?.certificate;
                    if packing {
                        cert.attach_packing(&g)?;
                    }
                    ok &= cert.satisfied && cert.isolating_verified;
                    let mut v = serde_json::to_value(&cert)?;
                    v["graph6"] = json!(text);
                    out.push(v);
                }
            }
            emit_all(out)?;
            Ok(ok)
        }
        Command::Family {
            name,
            params,
            emit_g6,
            emit_witnesses,
        } => {
            let inst = generate(&name, &params)?;
            let check = check_instance(&inst);
            if emit_g6 {
                println!("{}", kiso_core::encode_graph6(&inst.graph)?);
                return Ok(check.is_ok());
            }
            if emit_witnesses {
                let label = |s: &Option<VertexSet>| {
                    s.map(|s| {
                        s.iter()
                            .map(|v| {
                                let l = inst
                                    .labels
                                    .iter()
                                    .find(|(_, &i)| i == v)
                                    .map(|(l, _)| l.clone());
                                (v.to_string(), l.unwrap_or_default())
                            })
                            .collect::<BTreeMap<_, _>>()
                    })
                };
                emit(
                    &json!({
                        "name": inst.name,
                        "params": inst.params,
                        "irredundant": label(&inst.witness_irredundant),
                        "isolating": label(&inst.witness_isolating),
                        "dominating": label(&inst.witness_dominating),
                    }),
                    None,
                )?;
                return Ok(check.is_ok());
            }
            let mut v = serde_json::to_value(&inst)?;
            v["certificate"] = serde_json::to_value(certify_instance(&inst))?;
            emit(&v, None)?;
            Ok(check.is_ok())
        }
        Command::Check { source, iset, k } => {
            let mut out = Vec::new();
            for (text, g) in graphs(&source)? {
                let s = parse_set(&iset, &g)?;
                let pn: BTreeMap<String, VertexSet> = PrivateNeighborTable::new(&g, &s)?
                    .entries
                    .iter()
                    .map(|(x, p)| (x.to_string(), *p))
                    .collect();
                let mut v = json!({
                    "graph6": text,
                    "set": s,
                    "dominating": is_dominating(&g, &s),
                    "irredundant": is_irredundant(&g, &s),
                    "maximal_irredundant": is_maximal_irredundant(&g, &s),
                    "private_neighbors": pn,
                });
                if let Some(k) = k {
                    v["k"] = json!(k);
                    v["k_isolating"] = json!(is_k_isolating(&g, &s, k));
                }
                out.push(v);
            }
            emit_all(out)?;
            Ok(true)
        }
    }
}
