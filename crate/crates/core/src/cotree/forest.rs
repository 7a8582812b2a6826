use std::collections::BTreeSet;

use serde::Serialize;

use super::{Cotree, NodeId};
use crate::error::{Error, Result};
use crate::sparsepath::PathCover;

/// A rooted forest over the node ids `0..id_space`, some of which may be absent.
///
/// Forests derived from a cotree keep the cotree's node ids, so leaf-set
/// queries can always be answered by the original tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootedForest {
    parent: Vec<Option<NodeId>>,
    present: Vec<bool>,
    #[serde(skip)]
    children: Vec<Vec<NodeId>>,
}

impl RootedForest {
    /// Forest in which every id is present; `parent[u] == None` marks a root.
    pub fn from_parents(parent: Vec<Option<NodeId>>) -> Result<Self> {
        let n = parent.len();
        if let Some(&p) = parent.iter().flatten().find(|&&p| p >= n) {
            return Err(Error::NotDescending(format!("parent id {p} out of range")));
        }
        // every upward walk must reach a root within n steps
        for start in 0..n {
            let mut cur = start;
            let mut steps = 0;
            while let Some(p) = parent[cur] {
                cur = p;
                steps += 1;
                if steps > n {
                    return Err(Error::NotDescending(format!("cycle through node {start}")));
                }
            }
        }
        Ok(Self::assemble(parent, vec![true; n]))
    }

    pub fn from_cotree(t: &Cotree) -> Self {
        let parent = (0..t.node_count()).map(|u| t.parent(u)).collect();
        Self::assemble(parent, vec![true; t.node_count()])
    }

    fn assemble(parent: Vec<Option<NodeId>>, present: Vec<bool>) -> Self {
        let mut children = vec![Vec::new(); parent.len()];
        for (u, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                children[p].push(u);
            }
        }
        Self { parent, present, children }
    }

    /// Keeps the nodes selected by `keep`; an edge survives when both ends do.
    pub fn subforest(&self, keep: impl Fn(NodeId) -> bool) -> Self {
        let present: Vec<bool> = (0..self.id_space()).map(|u| self.present[u] && keep(u)).collect();
        let parent = (0..self.id_space())
            .map(|u| match self.parent[u] {
                Some(p) if present[u] && present[p] => Some(p),
                _ => None,
            })
            .collect();
        Self::assemble(parent, present)
    }

    /// Drops the edges above the given child nodes.
    pub fn without_edges_above(&self, children: &BTreeSet<NodeId>) -> Self {
        let parent = (0..self.id_space()).map(|u| if children.contains(&u) { None } else { self.parent[u] }).collect();
        Self::assemble(parent, self.present.clone())
    }

    pub fn id_space(&self) -> usize {
        self.parent.len()
    }

    pub fn contains(&self, u: NodeId) -> bool {
        self.present.get(u).copied().unwrap_or(false)
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.id_space()).filter(|&u| self.present[u])
    }

    pub fn node_count(&self) -> usize {
        self.present.iter().filter(|&&p| p).count()
    }

    pub fn is_empty(&self) -> bool {
        self.node_count() == 0
    }

    pub fn parent(&self, u: NodeId) -> Option<NodeId> {
        if self.contains(u) {
            self.parent[u]
        } else {
            None
        }
    }

    pub fn children(&self, u: NodeId) -> &[NodeId] {
        &self.children[u]
    }

    pub fn roots(&self) -> Vec<NodeId> {
        self.nodes().filter(|&u| self.parent[u].is_none()).collect()
    }

    /// Edges as `(parent, child)`, ordered by child id.
    pub fn edges(&self) -> Vec<(NodeId, NodeId)> {
        self.nodes().filter_map(|u| self.parent[u].map(|p| (p, u))).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.nodes().filter(|&u| self.parent[u].is_some()).count()
    }

    pub fn has_edge(&self, parent: NodeId, child: NodeId) -> bool {
        self.contains(child) && self.parent[child] == Some(parent)
    }

    /// Whether the forest is a single path.
    pub fn is_path(&self) -> bool {
        self.roots().len() == 1 && self.nodes().all(|u| self.children[u].len() <= 1)
    }
}

/// Path `p_0, ..., p_r` where each `p_{i+1}` is a child of `p_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct DescendingPath {
    nodes: Vec<NodeId>,
}

impl DescendingPath {
    pub fn new(nodes: Vec<NodeId>) -> Self {
        assert!(!nodes.is_empty(), "a descending path has at least one node");
        Self { nodes }
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn top(&self) -> NodeId {
        self.nodes[0]
    }

    pub fn bottom(&self) -> NodeId {
        *self.nodes.last().unwrap()
    }

    pub fn edge_count(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Edges as `(parent, child)`, top-down.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.nodes.windows(2).map(|w| (w[0], w[1]))
    }

    /// Subpath starting at node offset `start` with `edges` edges.
    pub fn subpath(&self, start: usize, edges: usize) -> DescendingPath {
        DescendingPath::new(self.nodes[start..=start + edges].to_vec())
    }

    /// Longest prefix whose nodes all satisfy `keep`; `None` if the top fails.
    pub fn prefix_while(&self, keep: impl Fn(NodeId) -> bool) -> Option<DescendingPath> {
        let len = self.nodes.iter().take_while(|&&u| keep(u)).count();
        (len > 0).then(|| DescendingPath::new(self.nodes[..len].to_vec()))
    }

    pub fn is_descending_in(&self, forest: &RootedForest) -> bool {
        forest.contains(self.top()) && self.edges().all(|(p, c)| forest.has_edge(p, c))
    }
}

/// The trees `T'` (nodes with at least `k + 2` leaf descendants) and `T''`
/// (`T'` minus every edge no cover path uses).
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisTrees {
    pub t_prime: RootedForest,
    pub t_double_prime: RootedForest,
    /// `(parent, child)` edges of `T'` missing from `T''`.
    pub dropped: Vec<(NodeId, NodeId)>,
}

pub fn analysis_trees(t: &Cotree, k: usize, cover: &PathCover) -> Result<AnalysisTrees> {
    let host = RootedForest::from_cotree(t);
    let mut covered = BTreeSet::new();
    for path in cover.paths() {
        if !path.is_descending_in(&host) {
            return Err(Error::NotDescending(format!("{:?}", path.nodes())));
        }
        covered.extend(path.edges().map(|(_, c)| c));
    }
    let threshold = k + 2;
    let t_prime = host.subforest(|u| t.descendant_count(u) >= threshold);
    let dropped: Vec<(NodeId, NodeId)> = t_prime.edges().into_iter().filter(|(_, c)| !covered.contains(c)).collect();
    let t_double_prime = t_prime.without_edges_above(&dropped.iter().map(|&(_, c)| c).collect());
    Ok(AnalysisTrees { t_prime, t_double_prime, dropped })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_keeps_only_the_root() {
        let k = 2;
        let t: Cotree = "(+ 0 1 2 3 4)".parse().unwrap();
        let trees = analysis_trees(&t, k, &PathCover::default()).unwrap();
        assert_eq!(trees.t_prime.nodes().collect::<Vec<_>>(), vec![t.root()]);
        assert_eq!(trees.t_prime.edge_count(), 0);
    }

    #[test]
    fn small_trees_give_empty_t_prime() {
        let t: Cotree = "(x 0 (+ 1 2))".parse().unwrap();
        let trees = analysis_trees(&t, 2, &PathCover::default()).unwrap();
        assert!(trees.t_prime.is_empty());
    }

    #[test]
    fn uncovered_edges_are_dropped() {
        let t: Cotree = "(x (+ 0 1 2) (+ 3 4 5))".parse().unwrap();
        let left = t.parent(t.leaf(0)).unwrap();
        let right = t.parent(t.leaf(3)).unwrap();
        let cover = PathCover::new(vec![DescendingPath::new(vec![t.root(), left, t.leaf(0)])]);
        let trees = analysis_trees(&t, 1, &cover).unwrap();
        assert_eq!(trees.t_prime.edge_count(), 2);
        assert_eq!(trees.dropped, vec![(t.root(), right)]);
        assert!(trees.t_double_prime.has_edge(t.root(), left));
        assert!(!trees.t_double_prime.has_edge(t.root(), right));
    }

    #[test]
    fn rejects_non_descending_cover() {
        let t: Cotree = "(x (+ 0 1) (+ 2 3))".parse().unwrap();
        let cover = PathCover::new(vec![DescendingPath::new(vec![t.leaf(0), t.root()])]);
        assert!(analysis_trees(&t, 0, &cover).is_err());
    }

    #[test]
    fn forest_rejects_cycles() {
        assert!(RootedForest::from_parents(vec![Some(1), Some(0)]).is_err());
        let f = RootedForest::from_parents(vec![None, Some(0), Some(1)]).unwrap();
        assert!(f.is_path());
        assert_eq!(f.edges(), vec![(0, 1), (1, 2)]);
    }
}
