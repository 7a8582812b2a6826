use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use cokernel::cotree::build_cotree;
use cokernel::driver::{
    brute_force_solve, gen_planted, gen_planted_nested, is_yes, kernelize, Instance, KernelConfig, KernelResult,
    NoReason, R4Mode, Verdict,
};
use cokernel::graph::{read_edit_set_text, read_instance_text, write_instance_text};
use cokernel::sparsepath::{analyze, check_forest, counterexample_tree};
use cokernel::{EditSet, VertexSet};

#[derive(Parser)]
#[command(name = "cokernel", version, about = "Kernelization for cograph edge editing")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the reduction rules and settle the kernel.
    Kernelize {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = R4Arg::Exact)]
        r4: R4Arg,
        /// Budgets below this are solved by brute force.
        #[arg(long)]
        brute_threshold: Option<usize>,
        /// Coefficient of the size bound `c·k²·(1 + log₂ 2k)`.
        #[arg(long)]
        size_coefficient: Option<usize>,
        #[arg(long)]
        no_size_check: bool,
        /// Never brute force; stop at the kernel.
        #[arg(long)]
        no_brute: bool,
        /// Work cap of the exact Rule 4 search.
        #[arg(long)]
        search_cap: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Decide the instance by P4 branching.
    Solve { file: PathBuf },
    /// Write a generated instance in the text format.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        seed: u64,
        /// Generate a long-spine instance with a planted nested module.
        #[arg(long)]
        nested: bool,
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// Spine length; defaults to the larger of `n` and `51t + k + 2`.
        #[arg(long)]
        scale: Option<usize>,
        /// Print the full generator record as JSON instead.
        #[arg(long)]
        json: bool,
    },
    /// Check that two instances have the same answer.
    Verify { a: PathBuf, b: PathBuf },
    /// Print the canonical cotree of a cograph.
    Cotree { file: PathBuf },
    /// Check the sparse-path lemma on the counterexample tree for `k`.
    Counterexample {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        c: usize,
    },
    /// Report the edit paths, sparse witness and nested module for an edit set.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        edits: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum R4Arg {
    Exact,
    Assisted,
    Off,
}

impl From<R4Arg> for R4Mode {
    fn from(a: R4Arg) -> Self {
        match a {
            R4Arg::Exact => R4Mode::Exact,
            R4Arg::Assisted => R4Mode::Assisted,
            R4Arg::Off => R4Mode::Off,
        }
    }
}

fn read_instance(path: &Path) -> Result<Instance> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let (graph, k) = read_instance_text(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(Instance::new(graph, k))
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn verdict_code(v: &Verdict) -> ExitCode {
    match v {
        Verdict::No { .. } => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    }
}

fn pairs_line(s: &EditSet) -> String {
    s.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
}

fn summary(res: &KernelResult) -> String {
    let mut out = String::new();
    match &res.verdict {
        Verdict::Yes { edits } => {
            writeln!(out, "YES with {} edits: {}", edits.len(), pairs_line(edits)).unwrap();
        }
        Verdict::No { why } => {
            let why = match why {
                NoReason::Rule4 { forced } => format!("Rule 4 forces {} pairs", forced.len()),
                NoReason::BruteForce => "brute force found no solution".into(),
                NoReason::SizeBound => "kernel exceeds the size bound".into(),
            };
            writeln!(out, "NO ({why})").unwrap();
        }
        Verdict::Reduced { instance } => {
            writeln!(out, "REDUCED to n = {}, k = {}", instance.graph.n(), instance.k).unwrap();
            out.push_str(&write_instance_text(&instance.graph, instance.k));
        }
    }
    let rules: Vec<String> = res.stats.applications.iter().map(|(r, c)| format!("{r:?} x{c}")).collect();
    writeln!(out, "rules: {}", if rules.is_empty() { "none".into() } else { rules.join(", ") }).unwrap();
    writeln!(out, "kernel: n = {}, k = {}", res.kernel.graph.n(), res.kernel.k).unwrap();
    writeln!(out, "work units: {}", res.stats.work_units).unwrap();
    for w in &res.warnings {
        writeln!(out, "warning: {w}").unwrap();
    }
    out
}

fn set_line(name: &str, s: &VertexSet) -> String {
    let ids: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("# {name}: {}\n", ids.join(" "))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Kernelize {
            file,
            r4,
            brute_threshold,
            size_coefficient,
            no_size_check,
            no_brute,
            search_cap,
            json,
        } => {
            let inst = read_instance(&file)?;
            let defaults = KernelConfig::default();
            let config = KernelConfig {
                r4: r4.into(),
                brute_threshold: brute_threshold.unwrap_or(defaults.brute_threshold),
                allow_brute: !no_brute,
                size_check: !no_size_check,
                size_coefficient: size_coefficient.unwrap_or(defaults.size_coefficient),
                search_cap: search_cap.unwrap_or(defaults.search_cap),
                iteration_cap: None,
            };
            let res = kernelize(&inst, &config)?;
            if json {
                print_json(&res)?;
            } else {
                print!("{}", summary(&res));
            }
            Ok(verdict_code(&res.verdict))
        }
        Command::Solve { file } => {
            let inst = read_instance(&file)?;
            let found = brute_force_solve(&inst);
            print_json(&json!({ "yes": found.is_some(), "k": inst.k, "edits": found }))?;
            Ok(if found.is_some() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Gen { n, k, seed, nested, t, scale, json } => {
            if nested {
                let scale = scale.unwrap_or(n.max(51 * t + k + 2));
                let p = gen_planted_nested(t, k, scale, seed)?;
                if json {
                    print_json(&p)?;
                } else {
                    let m = &p.module;
                    let mut out = format!("# nested module, t = {}\n", m.t);
                    for (name, s) in [("A", &m.a), ("B", &m.b), ("C", &m.c), ("K", &m.k_set), ("I", &m.i_set)] {
                        out.push_str(&set_line(name, s));
                    }
                    for (u, v) in p.planted.iter() {
                        writeln!(out, "# planted {u} {v}").unwrap();
                    }
                    out.push_str(&write_instance_text(&p.instance.graph, p.instance.k));
                    print!("{out}");
                }
            } else {
                let (inst, planted) = gen_planted(n, k, seed)?;
                if json {
                    print_json(&json!({ "instance": inst, "planted": planted }))?;
                } else {
                    let mut out = String::new();
                    for (u, v) in planted.iter() {
                        writeln!(out, "# planted {u} {v}").unwrap();
                    }
                    out.push_str(&write_instance_text(&inst.graph, inst.k));
                    print!("{out}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { a, b } => {
            let (a, b) = (read_instance(&a)?, read_instance(&b)?);
            let (ya, yb) = (is_yes(&a)?, is_yes(&b)?);
            print_json(&json!({ "equivalent": ya == yb, "a_yes": ya, "b_yes": yb }))?;
            Ok(if ya == yb { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Cotree { file } => {
            let inst = read_instance(&file)?;
            let t = build_cotree(&inst.graph)?;
            print_json(&json!({ "cotree": t.to_string(), "nodes": t.node_count() }))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Counterexample { k, c } => {
            let (tree, cover) = counterexample_tree(k)?;
            let report = check_forest(&tree, &cover, c)?;
            print_json(&json!({ "k": k, "nodes": tree.node_count(), "report": report }))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze { file, edits } => {
            let inst = read_instance(&file)?;
            let text = fs::read_to_string(&edits).with_context(|| format!("reading {}", edits.display()))?;
            let s = read_edit_set_text(&text).with_context(|| format!("parsing {}", edits.display()))?;
            let report = analyze(&inst.graph, &s, inst.k)?;
            print_json(&json!({ "edits": s, "analysis": report }))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
