//! Modules, comodules, `t`-modules and the modular decomposition.

mod decomposition;

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EditSet, Graph, VertexSet};

pub use decomposition::{modular_decomposition, MdKind, MdNode, ModularDecomposition};

/// Whether every vertex outside `x` sees all of `x` or none of it.
pub fn is_module(g: &Graph, x: &VertexSet) -> bool {
    let bits = x.to_bitset(g.n());
    module_mask_cost(g, &bits) == 0
}

pub(crate) fn module_mask_cost(g: &Graph, x: &FixedBitSet) -> usize {
    let size = x.count_ones(..);
    (0..g.n())
        .filter(|&y| !x.contains(y))
        .map(|y| {
            let seen = g.row(y).intersection_count(x);
            seen.min(size - seen)
        })
        .sum()
}

/// Minimum number of cut pairs to edit so that `subject` becomes a module,
/// together with one repair achieving it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleReport {
    pub subject: VertexSet,
    pub cost: usize,
    pub repair: EditSet,
}

/// Each outside vertex must end up fully joined or fully cut off from the
/// subject, and those choices are independent, so the minimum splits per vertex.
/// Ties go to deleting edges.
pub fn module_cost(g: &Graph, x: &VertexSet) -> Result<ModuleReport> {
    x.check_range(g.n())?;
    let bits = x.to_bitset(g.n());
    let size = x.len();
    let mut repair = EditSet::new();
    for y in (0..g.n()).filter(|&y| !bits.contains(y)) {
        let seen = g.row(y).intersection_count(&bits);
        let delete = seen <= size - seen;
        for v in x.iter() {
            if g.has_edge(y, v) == delete {
                repair.insert(y, v);
            }
        }
    }
    Ok(ModuleReport { subject: x.clone(), cost: repair.len(), repair })
}

pub fn is_t_module(g: &Graph, x: &VertexSet, t: usize) -> Result<bool> {
    Ok(module_cost(g, x)?.cost <= t)
}

/// The guess-a-pivot test for `t`-modules of size at least `k + t + 1`.
///
/// Pivots are tried in id order; the first one whose outside neighbourhood can
/// be copied onto all of `x` with at most `t` edits wins.
pub fn certified_t_module(g: &Graph, x: &VertexSet, t: usize, k: usize) -> Result<Option<EditSet>> {
    x.check_range(g.n())?;
    if x.len() < k + t + 1 {
        return Err(Error::Precondition(format!(
            "certified t-module needs |X| >= k+t+1 = {}, got {}",
            k + t + 1,
            x.len()
        )));
    }
    let bits = x.to_bitset(g.n());
    for pivot in x.iter() {
        let mut repair = EditSet::new();
        'outside: for y in (0..g.n()).filter(|&y| !bits.contains(y)) {
            let target = g.has_edge(pivot, y);
            for v in x.iter() {
                if g.has_edge(v, y) != target {
                    repair.insert(v, y);
                    if repair.len() > t {
                        break 'outside;
                    }
                }
            }
        }
        if repair.len() <= t {
            return Ok(Some(repair));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComoduleKind {
    Component,
    CoComponent,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ComoduleReport {
    pub comodule: VertexSet,
    pub kind: ComoduleKind,
}

/// Components when `g` is disconnected, co-components when its complement is;
/// empty when both are connected.
pub fn proper_comodules(g: &Graph) -> Vec<ComoduleReport> {
    let tag = |sets: Vec<VertexSet>, kind| {
        sets.into_iter().map(|comodule| ComoduleReport { comodule, kind }).collect::<Vec<_>>()
    };
    let comps = g.components();
    if comps.len() > 1 {
        return tag(comps, ComoduleKind::Component);
    }
    let co = g.co_components();
    if co.len() > 1 {
        return tag(co, ComoduleKind::CoComponent);
    }
    Vec::new()
}

/// All comodules including `V` itself (which is always a component or a
/// co-component), sorted.
pub fn comodules(g: &Graph) -> Vec<VertexSet> {
    if g.n() == 0 {
        return Vec::new();
    }
    let mut all: Vec<VertexSet> = proper_comodules(g).into_iter().map(|c| c.comodule).collect();
    all.push(VertexSet::full(g.n()));
    all.sort();
    all
}

pub fn is_comodule(g: &Graph, x: &VertexSet) -> bool {
    !x.is_empty() && (g.components().contains(x) || g.co_components().contains(x))
}

/// Whether some edge leaves `x`.
pub fn has_outgoing_edge(g: &Graph, x: &VertexSet) -> bool {
    let bits = x.to_bitset(g.n());
    x.iter().any(|v| g.row(v).difference(&bits).next().is_some())
}

/// Whether `x` is a module that Rule 3 may extract: not `V`, not a comodule,
/// containing an edge, and with at least one edge leaving it.
///
/// The last condition rules out unions of components, which Rule 1 already
/// handles and on which extraction would cycle forever.
pub fn is_rule3_module(g: &Graph, x: &VertexSet) -> bool {
    x.len() >= 2
        && x.len() < g.n()
        && is_module(g, x)
        && g.has_edge_within(x)
        && has_outgoing_edge(g, x)
        && !is_comodule(g, x)
}

/// Every module qualifying for Rule 3, sorted and deduplicated; empty iff none exists.
///
/// Every module is either a strong module or a union of children of a
/// degenerate node. When such a union qualifies, so does a union of two of
/// those children, so strong modules plus child pairs cover all cases.
pub fn rule3_candidates(g: &Graph) -> Vec<VertexSet> {
    let md = modular_decomposition(g);
    let mut found = BTreeSet::new();
    for (i, node) in md.nodes.iter().enumerate() {
        if i != 0 && is_rule3_module(g, &node.vertices) {
            found.insert(node.vertices.clone());
        }
        let degenerate = matches!(node.kind, MdKind::Series | MdKind::Parallel);
        if !degenerate || node.children.len() < 3 {
            continue;
        }
        let kids: Vec<&MdNode> = md.children(i).collect();
        for a in 0..kids.len() {
            for b in a + 1..kids.len() {
                if node.kind == MdKind::Parallel && kids[a].kind == MdKind::Leaf && kids[b].kind == MdKind::Leaf {
                    continue;
                }
                let x = kids[a].vertices.union(&kids[b].vertices);
                if is_rule3_module(g, &x) {
                    found.insert(x);
                }
            }
        }
    }
    found.into_iter().collect()
}

/// For each parallel node of the decomposition, its leaf children: the
/// maximal independent modules of size at least two. Sorted.
pub fn independent_modules(g: &Graph) -> Vec<VertexSet> {
    let md = modular_decomposition(g);
    let mut out: Vec<VertexSet> = md
        .nodes
        .iter()
        .enumerate()
        .filter(|(_, node)| node.kind == MdKind::Parallel)
        .map(|(i, _)| {
            md.children(i).filter(|c| c.kind == MdKind::Leaf).flat_map(|c| c.vertices.iter()).collect::<VertexSet>()
        })
        .filter(|s| s.len() >= 2)
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests;
