use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::graph::{full_mask, Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MdKind {
    Leaf,
    Parallel,
    Series,
    Prime,
}

#[derive(Clone, Debug, Serialize)]
pub struct MdNode {
    pub kind: MdKind,
    pub vertices: VertexSet,
    pub children: Vec<usize>,
}

/// Tree of strong modules; node 0 is the root (`V`).
#[derive(Clone, Debug, Serialize)]
pub struct ModularDecomposition {
    pub nodes: Vec<MdNode>,
}

impl ModularDecomposition {
    pub fn root(&self) -> &MdNode {
        &self.nodes[0]
    }

    pub fn node(&self, i: usize) -> &MdNode {
        &self.nodes[i]
    }

    pub fn children(&self, i: usize) -> impl Iterator<Item = &MdNode> + '_ {
        self.nodes[i].children.iter().map(|&c| &self.nodes[c])
    }
}

/// Polynomial modular decomposition by recursive splitting.
///
/// Disconnected parts give parallel nodes, co-disconnected parts give series
/// nodes, and the maximal strong modules below a prime node are recovered
/// from pairwise module closures.
pub fn modular_decomposition(g: &Graph) -> ModularDecomposition {
    let mut md = ModularDecomposition { nodes: Vec::new() };
    if g.n() > 0 {
        build(g, full_mask(g.n()), &mut md);
    }
    md
}

fn build(g: &Graph, set: FixedBitSet, md: &mut ModularDecomposition) -> usize {
    let id = md.nodes.len();
    let vertices = VertexSet::from_bitset(&set);
    if set.count_ones(..) == 1 {
        md.nodes.push(MdNode { kind: MdKind::Leaf, vertices, children: Vec::new() });
        return id;
    }
    md.nodes.push(MdNode { kind: MdKind::Prime, vertices, children: Vec::new() });
    let comps = g.components_within(&set);
    let (kind, parts) = if comps.len() > 1 {
        (MdKind::Parallel, comps)
    } else {
        let co = g.co_components_within(&set);
        if co.len() > 1 {
            (MdKind::Series, co)
        } else {
            (MdKind::Prime, prime_parts(g, &set))
        }
    };
    md.nodes[id].kind = kind;
    let children = parts.into_iter().map(|p| build(g, p, md)).collect();
    md.nodes[id].children = children;
    id
}

/// Smallest module of `G[set]` containing `seed`; stops early once it equals `set`.
pub(crate) fn module_closure(g: &Graph, set: &FixedBitSet, seed: &FixedBitSet) -> FixedBitSet {
    let mut m = seed.clone();
    let total = set.count_ones(..);
    loop {
        let mut grow = FixedBitSet::with_capacity(g.n());
        let size = m.count_ones(..);
        for y in set.ones().filter(|&y| !m.contains(y)) {
            let seen = g.row(y).intersection_count(&m);
            if seen != 0 && seen != size {
                grow.insert(y);
            }
        }
        if grow.is_clear() {
            return m;
        }
        m.union_with(&grow);
        if m.count_ones(..) == total {
            return m;
        }
    }
}

/// Maximal strong modules of a connected, co-connected `G[set]`.
fn prime_parts(g: &Graph, set: &FixedBitSet) -> Vec<FixedBitSet> {
    let total = set.count_ones(..);
    let mut unassigned = set.clone();
    let mut parts = Vec::new();
    while let Some(v) = unassigned.minimum() {
        let mut part = FixedBitSet::with_capacity(g.n());
        part.insert(v);
        for w in unassigned.ones().filter(|&w| w != v) {
            if part.contains(w) {
                continue;
            }
            let mut seed = FixedBitSet::with_capacity(g.n());
            seed.insert(v);
            seed.insert(w);
            let m = module_closure(g, set, &seed);
            if m.count_ones(..) < total {
                part.union_with(&m);
            }
        }
        unassigned.difference_with(&part);
        parts.push(part);
    }
    parts
}
