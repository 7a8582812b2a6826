use super::{Reduction, RuleApplication, RuleKind, Witness};
use crate::graph::{EditSet, Graph, VertexSet};
use crate::modular::{comodules, independent_modules, rule3_candidates};

/// R1: remove a comodule that induces a cograph.
///
/// A cograph loses all of `V`; otherwise the first qualifying comodule in
/// sorted order goes.
pub fn rule1_comodule(g: &Graph, k: usize) -> Option<Reduction> {
    if g.n() == 0 {
        return None;
    }
    let set = if g.is_cograph() {
        VertexSet::full(g.n())
    } else {
        comodules(g).into_iter().find(|c| g.induced(&c.to_vec()).is_cograph())?
    };
    let mut app = RuleApplication::new(RuleKind::R1, Witness::Comodule { set: set.clone() });
    app.removed = set.to_vec();
    Some(Reduction::from_application(g, k, app))
}

/// R2: shrink an independent module of more than `k + 1` vertices to its
/// `k + 1` smallest ids.
pub fn rule2_module_reduce(g: &Graph, k: usize) -> Option<Reduction> {
    let set = independent_modules(g).into_iter().find(|m| m.len() > k + 1)?;
    let mut app = RuleApplication::new(RuleKind::R2, Witness::IndependentModule { set: set.clone() });
    app.removed = set.iter().skip(k + 1).collect();
    Some(Reduction::from_application(g, k, app))
}

/// R3: make the smallest qualifying module independent in place and append a
/// disjoint copy of what it induced.
pub fn rule3_module_extract(g: &Graph, k: usize) -> Option<Reduction> {
    let set = rule3_candidates(g).into_iter().next()?;
    Some(extract(g, k, RuleKind::R3, &set, &set))
}

/// Empties `G[kept]`, deletes `set ∖ kept` and appends a copy of `G[set]`.
pub(super) fn extract(g: &Graph, k: usize, rule: RuleKind, set: &VertexSet, kept: &VertexSet) -> Reduction {
    let mut app = RuleApplication::new(rule, Witness::Module { set: set.clone() });
    let mut edits = EditSet::new();
    for u in kept.iter() {
        for v in kept.iter().filter(|&v| v > u) {
            if g.has_edge(u, v) {
                edits.insert(u, v);
            }
        }
    }
    app.edits = edits;
    app.copied_from = set.to_vec();
    app.added = (g.n()..g.n() + set.len()).collect();
    app.removed = set.difference(kept).to_vec();
    Reduction::from_application(g, k, app)
}

/// True when none of R1, R2, R3 applies.
pub fn is_reduced_ours(g: &Graph, k: usize) -> bool {
    rule1_comodule(g, k).is_none() && rule2_module_reduce(g, k).is_none() && rule3_module_extract(g, k).is_none()
}
