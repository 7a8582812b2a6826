//! Reduction rules R1 to R4, the Guillemot rules RG1 to RG3, and reducedness.

mod guillemot;
mod nested;
mod ours;

use serde::Serialize;

use crate::error::Result;
use crate::graph::{EditSet, Graph, VertexSet};

pub use guillemot::{is_reduced_guillemot, rg1, rg2, rg3};
pub use nested::{
    detect_nested_t_module, reconstruct_side, rule4_apply, NestedSearch, NestedTModule, Rule4Outcome,
    DEFAULT_SEARCH_CAP,
};
pub use ours::{is_reduced_ours, rule1_comodule, rule2_module_reduce, rule3_module_extract};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RuleKind {
    R1,
    R2,
    R3,
    R4,
    RG1,
    RG2,
    RG3,
}

impl RuleKind {
    pub const ALL: [RuleKind; 7] =
        [RuleKind::R1, RuleKind::R2, RuleKind::R3, RuleKind::R4, RuleKind::RG1, RuleKind::RG2, RuleKind::RG3];
}

/// What made a rule fire.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// R1: a comodule inducing a cograph.
    Comodule { set: VertexSet },
    /// R2: an independent module larger than `k + 1`.
    IndependentModule { set: VertexSet },
    /// R3 and RG3: the extracted module.
    Module { set: VertexSet },
    /// R4.
    Nested { module: NestedTModule },
    /// RG1: every cograph component.
    Components { sets: Vec<VertexSet> },
    /// RG2: a component split as `left ⊕ right`.
    Join { component: VertexSet, left: VertexSet, right: VertexSet },
}

/// One rule application, recorded so it can be replayed.
///
/// Replay on the pre-graph: append a copy of `G[copied_from]` (new ids start
/// at the old vertex count and are listed in `added`), toggle `edits`, delete
/// `removed`, then renumber the survivors in increasing order. All ids refer
/// to the graph before renumbering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleApplication {
    pub rule: RuleKind,
    pub witness: Witness,
    pub edits: EditSet,
    pub removed: Vec<usize>,
    pub added: Vec<usize>,
    pub k_delta: i64,
    pub copied_from: Vec<usize>,
}

impl RuleApplication {
    pub(crate) fn new(rule: RuleKind, witness: Witness) -> Self {
        Self {
            rule,
            witness,
            edits: EditSet::new(),
            removed: Vec::new(),
            added: Vec::new(),
            k_delta: 0,
            copied_from: Vec::new(),
        }
    }

    /// Re-applies the recorded changes to `(g, k)`.
    pub fn replay(&self, g: &Graph, k: usize) -> Result<(Graph, usize)> {
        let copied = g.with_copy_of(&self.copied_from);
        let edited = copied.edit(&self.edits)?;
        let removed: VertexSet = self.removed.iter().copied().collect();
        removed.check_range(edited.n())?;
        let (out, _) = edited.remove_vertices(&removed);
        let k = usize::try_from(k as i64 + self.k_delta)
            .map_err(|_| crate::Error::Precondition(format!("budget {k} cannot absorb delta {}", self.k_delta)))?;
        Ok((out, k))
    }
}

/// Outcome of one rule firing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub graph: Graph,
    pub k: usize,
    pub application: RuleApplication,
}

impl Reduction {
    pub(crate) fn from_application(g: &Graph, k: usize, application: RuleApplication) -> Reduction {
        let (graph, k) = application.replay(g, k).expect("rules only record applications that replay on their input");
        Reduction { graph, k, application }
    }
}

/// Applies a single rule by kind. R4 uses exact detection with the default cap.
pub fn apply_rule(kind: RuleKind, g: &Graph, k: usize) -> Option<Reduction> {
    match kind {
        RuleKind::R1 => rule1_comodule(g, k),
        RuleKind::R2 => rule2_module_reduce(g, k),
        RuleKind::R3 => rule3_module_extract(g, k),
        RuleKind::R4 => {
            let m = detect_nested_t_module(g, k, DEFAULT_SEARCH_CAP).found?;
            match rule4_apply(g, k, &m).ok()? {
                Rule4Outcome::Applied(r) if !r.application.edits.is_empty() => Some(*r),
                _ => None,
            }
        }
        RuleKind::RG1 => rg1(g, k),
        RuleKind::RG2 => rg2(g, k),
        RuleKind::RG3 => rg3(g, k),
    }
}

#[cfg(test)]
mod tests;
