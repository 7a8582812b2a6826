//! Edit paths, `c`-sparse subpaths, and nested-module extraction.

mod extract;
mod lemmas;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::cotree::{Cotree, DescendingPath, RootedForest};
use crate::error::{Error, Result};
use crate::graph::EditSet;

pub use extract::{analyze, extract_nested_module, Analysis, Extraction, SPARSITY};
pub use lemmas::{
    check_forest, check_pathcase, counterexample_tree, random_forest_instance, random_path_instance, LemmaReport,
};

/// A multiset of descending paths in a rooted forest.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct PathCover {
    paths: Vec<DescendingPath>,
}

impl PathCover {
    pub fn new(paths: Vec<DescendingPath>) -> Self {
        Self { paths }
    }

    pub fn paths(&self) -> &[DescendingPath] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn check_descending(&self, forest: &RootedForest) -> Result<()> {
        match self.paths.iter().find(|p| !p.is_descending_in(forest)) {
            Some(p) => Err(Error::NotDescending(format!("{:?}", p.nodes()))),
            None => Ok(()),
        }
    }

    /// Errors unless every edge of `forest` lies on some path.
    pub fn check_covering(&self, forest: &RootedForest) -> Result<()> {
        self.check_descending(forest)?;
        let mut covered = FixedBitSet::with_capacity(forest.id_space());
        for p in &self.paths {
            for (_, child) in p.edges() {
                covered.insert(child);
            }
        }
        match forest.edges().into_iter().find(|&(_, c)| !covered.contains(c)) {
            Some((parent, child)) => Err(Error::NotCovering { child, parent }),
            None => Ok(()),
        }
    }

    /// Cuts each path down to its longest prefix whose edges all lie in
    /// `forest`. Paths with no edge left are dropped.
    pub fn restrict_to(&self, forest: &RootedForest) -> PathCover {
        let paths = self
            .paths
            .iter()
            .filter_map(|p| {
                let nodes = p.nodes();
                if !forest.contains(nodes[0]) {
                    return None;
                }
                let len = 1 + nodes.windows(2).take_while(|w| forest.has_edge(w[0], w[1])).count();
                (len >= 2).then(|| DescendingPath::new(nodes[..len].to_vec()))
            })
            .collect();
        PathCover { paths }
    }
}

/// The two halves of each edited pair's leaf-to-leaf path, split at the LCA.
///
/// Pairs are taken in sorted order and the half towards the smaller endpoint
/// comes first. A half with no edge (an endpoint equal to the LCA) cannot occur
/// for two distinct leaves.
pub fn edit_paths(t: &Cotree, s: &EditSet) -> Result<PathCover> {
    s.check_range(t.n())?;
    let mut paths = Vec::with_capacity(2 * s.len());
    for (x, y) in s.iter() {
        let z = t.lca_of_vertices(x, y);
        for leaf in [x, y] {
            let nodes = t.descending_path(z, t.leaf(leaf));
            if nodes.len() >= 2 {
                paths.push(DescendingPath::new(nodes));
            }
        }
    }
    Ok(PathCover { paths })
}

/// A subpath `Q` of cover path `parent_index`, starting `start` nodes in,
/// that shares an edge with `intersect_count ≤ |E(Q)| / c` cover paths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SparseWitness {
    pub path: DescendingPath,
    pub parent_index: usize,
    pub start: usize,
    pub intersect_count: usize,
    pub c: usize,
}

/// First `c`-sparse subpath, by cover-path index, then start offset, then length.
///
/// Every contiguous subpath is tried; duplicated cover paths count separately.
pub fn find_c_sparse(forest: &RootedForest, cover: &PathCover, c: usize) -> Result<Option<SparseWitness>> {
    if c == 0 {
        return Err(Error::Precondition("sparsity constant must be positive".into()));
    }
    cover.check_descending(forest)?;
    // for every edge, identified by its child, the set of cover paths using it
    let mut users = vec![FixedBitSet::with_capacity(cover.len()); forest.id_space()];
    for (i, p) in cover.paths().iter().enumerate() {
        for (_, child) in p.edges() {
            users[child].insert(i);
        }
    }
    for (i, p) in cover.paths().iter().enumerate() {
        let nodes = p.nodes();
        for start in 0..p.edge_count() {
            let mut hit = FixedBitSet::with_capacity(cover.len());
            for end in start + 1..nodes.len() {
                hit.union_with(&users[nodes[end]]);
                let edges = end - start;
                let count = hit.count_ones(..);
                if count * c <= edges {
                    return Ok(Some(SparseWitness {
                        path: p.subpath(start, edges),
                        parent_index: i,
                        start,
                        intersect_count: count,
                        c,
                    }));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests;
