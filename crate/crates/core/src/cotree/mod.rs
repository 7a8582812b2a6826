//! Cotrees: construction from cographs, realization back to graphs, and the
//! tree queries used by the sparse-path analysis.

mod forest;
mod text;

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

pub use forest::{analysis_trees, AnalysisTrees, DescendingPath, RootedForest};

use crate::error::{Error, Result};
use crate::graph::{full_mask, Graph, VertexSet};

pub type NodeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeLabel {
    /// Join of the children (`⊕`).
    Series,
    /// Disjoint union of the children (`+`).
    Parallel,
    Leaf(usize),
}

impl NodeLabel {
    pub fn is_leaf(self) -> bool {
        matches!(self, NodeLabel::Leaf(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CotreeNode {
    pub label: NodeLabel,
    pub parent: Option<NodeId>,
    pub children: Vec<NodeId>,
}

/// Cotree expression used to assemble trees; normalized by [`Cotree::from_expr`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoExpr {
    Leaf(usize),
    Series(Vec<CoExpr>),
    Parallel(Vec<CoExpr>),
}

impl CoExpr {
    fn min_leaf(&self) -> usize {
        match self {
            CoExpr::Leaf(v) => *v,
            CoExpr::Series(cs) | CoExpr::Parallel(cs) => cs.iter().map(CoExpr::min_leaf).min().unwrap_or(usize::MAX),
        }
    }

    /// Flattens same-label nesting, drops unary nodes and sorts children by
    /// smallest leaf.
    fn normalize(self) -> Result<CoExpr> {
        let (series, children) = match self {
            CoExpr::Leaf(_) => return Ok(self),
            CoExpr::Series(cs) => (true, cs),
            CoExpr::Parallel(cs) => (false, cs),
        };
        if children.is_empty() {
            return Err(Error::InvalidCotree("internal node without children".into()));
        }
        let mut flat = Vec::with_capacity(children.len());
        for c in children {
            match c.normalize()? {
                CoExpr::Series(gc) if series => flat.extend(gc),
                CoExpr::Parallel(gc) if !series => flat.extend(gc),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            return Ok(flat.pop().unwrap());
        }
        flat.sort_by_key(CoExpr::min_leaf);
        Ok(if series { CoExpr::Series(flat) } else { CoExpr::Parallel(flat) })
    }
}

/// Canonical cotree.
///
/// Internal nodes have at least two children, labels alternate along every
/// root-leaf path, children are ordered by their smallest leaf and node ids are
/// assigned in preorder, so equal cographs give equal trees.
#[derive(Clone, PartialEq, Eq)]
pub struct Cotree {
    nodes: Vec<CotreeNode>,
    leaf_of: Vec<NodeId>,
    depth: Vec<usize>,
    /// Leaves in preorder; `De(u)` is `leaf_order[span[u].0..span[u].1]`.
    leaf_order: Vec<usize>,
    span: Vec<(usize, usize)>,
}

impl Cotree {
    pub fn from_expr(expr: CoExpr) -> Result<Cotree> {
        let expr = expr.normalize()?;
        let mut tree = Cotree {
            nodes: Vec::new(),
            leaf_of: Vec::new(),
            depth: Vec::new(),
            leaf_order: Vec::new(),
            span: Vec::new(),
        };
        tree.push(&expr, None, 0);
        let n = tree.leaf_order.len();
        let mut leaf_of = vec![usize::MAX; n];
        for (id, node) in tree.nodes.iter().enumerate() {
            if let NodeLabel::Leaf(v) = node.label {
                if v >= n || leaf_of[v] != usize::MAX {
                    return Err(Error::InvalidCotree(format!(
                        "leaves must be a permutation of 0..{n}, found {v} twice or out of range"
                    )));
                }
                leaf_of[v] = id;
            }
        }
        tree.leaf_of = leaf_of;
        Ok(tree)
    }

    fn push(&mut self, expr: &CoExpr, parent: Option<NodeId>, depth: usize) -> NodeId {
        let id = self.nodes.len();
        let start = self.leaf_order.len();
        let (label, children) = match expr {
            CoExpr::Leaf(v) => (NodeLabel::Leaf(*v), &[][..]),
            CoExpr::Series(cs) => (NodeLabel::Series, &cs[..]),
            CoExpr::Parallel(cs) => (NodeLabel::Parallel, &cs[..]),
        };
        self.nodes.push(CotreeNode { label, parent, children: Vec::new() });
        self.depth.push(depth);
        self.span.push((start, start));
        if let NodeLabel::Leaf(v) = label {
            self.leaf_order.push(v);
        }
        for c in children {
            let cid = self.push(c, Some(id), depth + 1);
            self.nodes[id].children.push(cid);
        }
        self.span[id].1 = self.leaf_order.len();
        id
    }

    pub fn to_expr(&self) -> CoExpr {
        self.expr_at(self.root())
    }

    fn expr_at(&self, u: NodeId) -> CoExpr {
        let kids = || self.nodes[u].children.iter().map(|&c| self.expr_at(c)).collect();
        match self.nodes[u].label {
            NodeLabel::Leaf(v) => CoExpr::Leaf(v),
            NodeLabel::Series => CoExpr::Series(kids()),
            NodeLabel::Parallel => CoExpr::Parallel(kids()),
        }
    }

    /// Number of leaves, i.e. vertices of the realized graph.
    pub fn n(&self) -> usize {
        self.leaf_of.len()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn root(&self) -> NodeId {
        0
    }

    pub fn node(&self, u: NodeId) -> &CotreeNode {
        &self.nodes[u]
    }

    pub fn nodes(&self) -> &[CotreeNode] {
        &self.nodes
    }

    pub fn label(&self, u: NodeId) -> NodeLabel {
        self.nodes[u].label
    }

    pub fn parent(&self, u: NodeId) -> Option<NodeId> {
        self.nodes[u].parent
    }

    pub fn children(&self, u: NodeId) -> &[NodeId] {
        &self.nodes[u].children
    }

    pub fn depth(&self, u: NodeId) -> usize {
        self.depth[u]
    }

    /// Leaf node carrying vertex `v`.
    pub fn leaf(&self, v: usize) -> NodeId {
        self.leaf_of[v]
    }

    /// Depth of the leaf carrying vertex `v`.
    pub fn leaf_depth(&self, v: usize) -> usize {
        self.depth[self.leaf_of[v]]
    }

    /// `De(u)`: the vertices whose leaves descend from `u`.
    pub fn descendant_leaves(&self, u: NodeId) -> VertexSet {
        self.descendant_slice(u).iter().copied().collect()
    }

    pub(crate) fn descendant_slice(&self, u: NodeId) -> &[usize] {
        let (a, b) = self.span[u];
        &self.leaf_order[a..b]
    }

    pub fn descendant_count(&self, u: NodeId) -> usize {
        let (a, b) = self.span[u];
        b - a
    }

    /// Whether `v` is `u` or a descendant of `u`.
    pub fn is_ancestor(&self, u: NodeId, v: NodeId) -> bool {
        let (a, b) = self.span[u];
        let (c, d) = self.span[v];
        a <= c && d <= b && self.depth[u] <= self.depth[v]
    }

    pub fn lca(&self, mut x: NodeId, mut y: NodeId) -> NodeId {
        while self.depth[x] > self.depth[y] {
            x = self.nodes[x].parent.unwrap();
        }
        while self.depth[y] > self.depth[x] {
            y = self.nodes[y].parent.unwrap();
        }
        while x != y {
            x = self.nodes[x].parent.unwrap();
            y = self.nodes[y].parent.unwrap();
        }
        x
    }

    /// Least common ancestor of the leaves of vertices `u` and `v`.
    pub fn lca_of_vertices(&self, u: usize, v: usize) -> NodeId {
        self.lca(self.leaf_of[u], self.leaf_of[v])
    }

    /// Path of node ids from `top` down to `bottom`; `top` must be an ancestor.
    pub fn descending_path(&self, top: NodeId, bottom: NodeId) -> Vec<NodeId> {
        let mut path = vec![bottom];
        let mut cur = bottom;
        while cur != top {
            cur = self.nodes[cur].parent.expect("top is an ancestor of bottom");
            path.push(cur);
        }
        path.reverse();
        path
    }

    pub fn is_canonical(&self) -> bool {
        self.nodes.iter().all(|node| match node.label {
            NodeLabel::Leaf(_) => node.children.is_empty(),
            label => node.children.len() >= 2 && node.children.iter().all(|&c| self.nodes[c].label != label),
        })
    }

    /// The cograph whose edges are the leaf pairs with a `⊕` least common ancestor.
    pub fn realize(&self) -> Graph {
        let mut g = Graph::new(self.n());
        for node in &self.nodes {
            if node.label != NodeLabel::Series {
                continue;
            }
            for (i, &a) in node.children.iter().enumerate() {
                for &b in &node.children[i + 1..] {
                    for &x in self.descendant_slice(a) {
                        for &y in self.descendant_slice(b) {
                            g.add_edge(x, y);
                        }
                    }
                }
            }
        }
        g
    }
}

/// Builds the canonical cotree of `g`, or reports an induced `P4`.
///
/// Splits into components (parallel node) or co-components (series node)
/// until singletons remain. A part that is both connected and co-connected
/// on two or more vertices means `g` is not a cograph.
pub fn build_cotree(g: &Graph) -> Result<Cotree> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    match decompose(g, &full_mask(g.n())) {
        Some(expr) => Cotree::from_expr(expr),
        None => Err(Error::NotCograph(g.find_induced_p4().expect("a prime part contains an induced P4"))),
    }
}

fn decompose(g: &Graph, mask: &FixedBitSet) -> Option<CoExpr> {
    if mask.count_ones(..) == 1 {
        return Some(CoExpr::Leaf(mask.minimum().unwrap()));
    }
    let comps = g.components_within(mask);
    if comps.len() > 1 {
        let children = comps.iter().map(|c| decompose(g, c)).collect::<Option<_>>()?;
        return Some(CoExpr::Parallel(children));
    }
    let cocomps = g.co_components_within(mask);
    if cocomps.len() > 1 {
        let children = cocomps.iter().map(|c| decompose(g, c)).collect::<Option<_>>()?;
        return Some(CoExpr::Series(children));
    }
    None
}

impl fmt::Debug for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cotree({self})")
    }
}

impl Serialize for Cotree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
