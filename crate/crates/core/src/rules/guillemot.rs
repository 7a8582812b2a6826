use super::ours::extract;
use super::{Reduction, RuleApplication, RuleKind, Witness};
use crate::graph::{EditSet, Graph, VertexSet};
use crate::modular::{is_module, modular_decomposition, MdKind};

/// RG1: remove every connected component that is a cograph. `k` is unchanged.
pub fn rg1(g: &Graph, k: usize) -> Option<Reduction> {
    let sets: Vec<VertexSet> = g.components().into_iter().filter(|c| g.induced(&c.to_vec()).is_cograph()).collect();
    if sets.is_empty() {
        return None;
    }
    let mut app = RuleApplication::new(RuleKind::RG1, Witness::Components { sets: sets.clone() });
    let mut removed: Vec<usize> = sets.iter().flat_map(|s| s.iter()).collect();
    removed.sort_unstable();
    app.removed = removed;
    Some(Reduction::from_application(g, k, app))
}

/// RG2: split the first component that is a join `G1 ⊕ G2` into `G1 + G2`.
///
/// `G1` takes the first half (rounded down) of the component's co-components
/// ordered by smallest member, `G2` the rest.
pub fn rg2(g: &Graph, k: usize) -> Option<Reduction> {
    for component in g.components() {
        let mask = component.to_bitset(g.n());
        let co = g.co_components_within(&mask);
        if co.len() < 2 {
            continue;
        }
        let half = co.len() / 2;
        let left: VertexSet = co[..half].iter().flat_map(|s| s.ones()).collect();
        let right: VertexSet = co[half..].iter().flat_map(|s| s.ones()).collect();
        let mut edits = EditSet::new();
        for u in left.iter() {
            for v in right.iter() {
                edits.insert(u, v);
            }
        }
        let mut app = RuleApplication::new(RuleKind::RG2, Witness::Join { component, left, right });
        app.edits = edits;
        return Some(Reduction::from_application(g, k, app));
    }
    None
}

/// RG3: a non-trivial module strictly inside a component that is not an
/// independent set of at most `k + 1` vertices is replaced by
/// `min(|M|, k + 1)` independent vertices with its neighbourhood, and a
/// disjoint copy of `G[M]` is added.
///
/// The kept vertices are the smallest ids of `M`; they already carry its
/// outside neighbourhood.
pub fn rg3(g: &Graph, k: usize) -> Option<Reduction> {
    let set = rg3_candidates(g, k).into_iter().next()?;
    let kept: VertexSet = set.iter().take(k + 1).collect();
    Some(extract(g, k, RuleKind::RG3, &set, &kept))
}

fn rg3_qualifies(g: &Graph, comps: &[VertexSet], m: &VertexSet, k: usize) -> bool {
    m.len() >= 2
        && comps.iter().any(|c| m.is_subset(c) && m.len() < c.len())
        && (g.has_edge_within(m) || m.len() > k + 1)
        && is_module(g, m)
}

/// Qualifying modules, sorted. Like Rule 3, every qualifying module is a
/// strong module, a pair of children of a degenerate node, or (for the
/// independent case) the leaf children of a parallel node.
fn rg3_candidates(g: &Graph, k: usize) -> Vec<VertexSet> {
    let md = modular_decomposition(g);
    let comps = g.components();
    let mut found = std::collections::BTreeSet::new();
    for (i, node) in md.nodes.iter().enumerate() {
        if rg3_qualifies(g, &comps, &node.vertices, k) {
            found.insert(node.vertices.clone());
        }
        if node.kind == MdKind::Parallel {
            let leaves: VertexSet =
                md.children(i).filter(|c| c.kind == MdKind::Leaf).flat_map(|c| c.vertices.iter()).collect();
            if rg3_qualifies(g, &comps, &leaves, k) {
                found.insert(leaves);
            }
        }
        if matches!(node.kind, MdKind::Series | MdKind::Parallel) && node.children.len() >= 3 {
            let kids: Vec<&VertexSet> = md.children(i).map(|c| &c.vertices).collect();
            for a in 0..kids.len() {
                for b in a + 1..kids.len() {
                    let m = kids[a].union(kids[b]);
                    if rg3_qualifies(g, &comps, &m, k) {
                        found.insert(m);
                    }
                }
            }
        }
    }
    found.into_iter().collect()
}

/// True when none of RG1, RG2, RG3 applies.
pub fn is_reduced_guillemot(g: &Graph, k: usize) -> bool {
    rg1(g, k).is_none() && rg2(g, k).is_none() && rg3(g, k).is_none()
}
