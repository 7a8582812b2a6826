//! The kernelization pipeline, exact solvers and instance generators.

mod generate;
mod oracle;

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

pub use generate::{
    gen_nested_compact, gen_planted, gen_planted_nested, random_cotree, random_graph, rng_from_seed, PlantedNested,
};
pub use oracle::{
    brute_force_avoiding, brute_force_solve, enumerate_optima, is_yes, minimum_edit, optimum_capped,
    verify_equivalence, OptimaReport, ENUMERATION_BUDGET,
};

use crate::error::{Error, Result};
use crate::graph::{EditSet, Graph};
use crate::rules::{
    detect_nested_t_module, rule1_comodule, rule2_module_reduce, rule3_module_extract, rule4_apply, Reduction,
    Rule4Outcome, RuleApplication, RuleKind, DEFAULT_SEARCH_CAP,
};
use crate::sparsepath::extract_nested_module;

/// Default brute-force threshold: budgets below it are solved exactly.
pub const BRUTE_THRESHOLD: usize = 559;

/// Default coefficient of the kernel size bound `c·k²·(1 + log₂ 2k)`.
pub const SIZE_COEFFICIENT: usize = 409;

/// A graph with an edit budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub k: usize,
}

impl Instance {
    pub fn new(graph: Graph, k: usize) -> Self {
        Instance { graph, k }
    }
}

impl Serialize for Instance {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("Instance", 3)?;
        st.serialize_field("n", &self.graph.n())?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("edges", &self.graph.edges())?;
        st.end()
    }
}

/// How Rule 4 candidates are found.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum R4Mode {
    /// Exhaustive 6-tuple search.
    #[default]
    Exact,
    /// Extraction from a minimum edit set found by the exact solver.
    Assisted,
    Off,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelConfig {
    pub r4: R4Mode,
    pub brute_threshold: usize,
    pub allow_brute: bool,
    pub size_check: bool,
    pub size_coefficient: usize,
    /// Work cap handed to the exact Rule 4 search.
    pub search_cap: u64,
    /// Maximum rule applications; `None` means `4(n + k)² + 16`.
    pub iteration_cap: Option<usize>,
}

impl Default for KernelConfig {
    fn default() -> Self {
        KernelConfig {
            r4: R4Mode::Exact,
            brute_threshold: BRUTE_THRESHOLD,
            allow_brute: true,
            size_check: true,
            size_coefficient: SIZE_COEFFICIENT,
            search_cap: DEFAULT_SEARCH_CAP,
            iteration_cap: None,
        }
    }
}

/// `coefficient · k² · (1 + log₂ 2k)`, and 0 for `k = 0`.
pub fn size_bound(coefficient: usize, k: usize) -> f64 {
    if k == 0 {
        return 0.0;
    }
    let k = k as f64;
    coefficient as f64 * k * k * (1.0 + (2.0 * k).log2())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum NoReason {
    /// Rule 4 found more forced pairs than the remaining budget.
    Rule4 {
        forced: EditSet,
    },
    BruteForce,
    /// The kernel is larger than the size bound.
    SizeBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    /// Edits on the input graph, at most `k` of them.
    Yes {
        edits: EditSet,
    },
    No {
        why: NoReason,
    },
    Reduced {
        instance: Instance,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct KernelStats {
    pub applications: BTreeMap<RuleKind, usize>,
    pub iterations: usize,
    /// Rule 4 search steps plus brute-force search nodes.
    pub work_units: u64,
    pub r4_capped: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelResult {
    pub verdict: Verdict,
    pub trace: Vec<RuleApplication>,
    /// The instance once no rule applies (or when Rule 4 answered NO).
    pub kernel: Instance,
    pub stats: KernelStats,
    pub warnings: Vec<String>,
}

enum R4Step {
    Applied(Box<Reduction>),
    No(EditSet),
    Nothing,
}

fn rule4_step(
    g: &Graph,
    k: usize,
    config: &KernelConfig,
    stats: &mut KernelStats,
    warnings: &mut Vec<String>,
) -> Result<R4Step> {
    // five nonempty parts are needed
    if g.n() < 5 {
        return Ok(R4Step::Nothing);
    }
    let module = match config.r4 {
        R4Mode::Off => return Ok(R4Step::Nothing),
        R4Mode::Exact => {
            let search = detect_nested_t_module(g, k, config.search_cap);
            stats.work_units += search.work;
            stats.r4_capped |= search.capped;
            search.found
        }
        R4Mode::Assisted => {
            let Some(s) = minimum_edit(g, k) else {
                return Ok(R4Step::Nothing);
            };
            match extract_nested_module(g, &s, k) {
                Ok(found) => found.map(|e| e.module),
                Err(Error::Extraction(msg)) => {
                    warnings.push(format!("assisted Rule 4 extraction failed: {msg}"));
                    None
                }
                Err(e) => return Err(e),
            }
        }
    };
    let Some(m) = module else {
        return Ok(R4Step::Nothing);
    };
    Ok(match rule4_apply(g, k, &m)? {
        Rule4Outcome::Applied(r) if r.application.edits.is_empty() => R4Step::Nothing,
        Rule4Outcome::Applied(r) => R4Step::Applied(r),
        Rule4Outcome::No { forced } => R4Step::No(forced),
    })
}

/// Applies R1, R2, R3, R4 in priority order, restarting from R1 after every
/// application, then settles the kernel by brute force or the size bound.
///
/// A YES certificate is computed on the input graph and checked against the
/// kernel's answer.
pub fn kernelize(inst: &Instance, config: &KernelConfig) -> Result<KernelResult> {
    let mut g = inst.graph.clone();
    let mut k = inst.k;
    let mut trace = Vec::new();
    let mut stats = KernelStats::default();
    let mut warnings = Vec::new();
    let n0 = inst.graph.n() + inst.k;
    let cap = config.iteration_cap.unwrap_or(4 * n0 * n0 + 16);

    loop {
        let step = rule1_comodule(&g, k).or_else(|| rule2_module_reduce(&g, k)).or_else(|| rule3_module_extract(&g, k));
        let reduction = match step {
            Some(r) => r,
            None => match rule4_step(&g, k, config, &mut stats, &mut warnings)? {
                R4Step::Applied(r) => *r,
                R4Step::Nothing => break,
                R4Step::No(forced) => {
                    return Ok(KernelResult {
                        verdict: Verdict::No { why: NoReason::Rule4 { forced } },
                        trace,
                        kernel: Instance::new(g, k),
                        stats,
                        warnings,
                    });
                }
            },
        };
        if stats.iterations == cap {
            return Err(Error::IterationCap { cap, trace });
        }
        stats.iterations += 1;
        *stats.applications.entry(reduction.application.rule).or_default() += 1;
        g = reduction.graph;
        k = reduction.k;
        trace.push(reduction.application);
    }

    let kernel = Instance::new(g, k);
    let verdict = if config.allow_brute && k < config.brute_threshold {
        let mut nodes = 0;
        let kernel_yes = oracle::solve_by_components(&kernel.graph, k, &mut nodes).is_some();
        let verdict = if kernel_yes {
            let edits = oracle::solve_by_components(&inst.graph, inst.k, &mut nodes)
                .ok_or_else(|| Error::Inconsistent("kernel is a YES instance but the input has no solution".into()))?;
            Verdict::Yes { edits }
        } else {
            Verdict::No { why: NoReason::BruteForce }
        };
        stats.work_units += nodes;
        verdict
    } else {
        if config.r4 != R4Mode::Exact {
            warnings.push(format!("Rule 4 detection ran in {:?} mode; other nested modules may remain", config.r4));
        }
        if stats.r4_capped {
            warnings.push(format!("exact Rule 4 search hit its work cap of {}", config.search_cap));
        }
        let over = config.size_check && kernel.graph.n() as f64 > size_bound(config.size_coefficient, k);
        if over && config.r4 == R4Mode::Exact && !stats.r4_capped {
            Verdict::No { why: NoReason::SizeBound }
        } else {
            if over {
                warnings.push("kernel exceeds the size bound but Rule 4 was not searched exhaustively".into());
            }
            Verdict::Reduced { instance: kernel.clone() }
        }
    };
    Ok(KernelResult { verdict, trace, kernel, stats, warnings })
}

/// Replays a trace from `inst`, returning the resulting instance.
pub fn replay_trace(inst: &Instance, trace: &[RuleApplication]) -> Result<Instance> {
    let mut g = inst.graph.clone();
    let mut k = inst.k;
    for app in trace {
        (g, k) = app.replay(&g, k)?;
    }
    Ok(Instance::new(g, k))
}

#[cfg(test)]
mod tests;
