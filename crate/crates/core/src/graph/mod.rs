//! Simple undirected graphs over dense vertex ids, edit sets, cuts and
//! induced-P4 search.

mod format;
mod p4;
mod sets;

use std::fmt;

use fixedbitset::FixedBitSet;

pub use format::{read_edit_set_text, read_instance_text, write_edit_set_text, write_instance_text};
pub use sets::{EditSet, VertexSet};

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`, stored as bitset adjacency rows.
///
/// Neighbors are always iterated in increasing id order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<FixedBitSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self { rows: vec![FixedBitSet::with_capacity(n); n] }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            g.rows[u].insert_range(..);
            g.rows[u].set(u, false);
        }
        g
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    #[inline]
    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.set_edge(u, v, true);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.set_edge(u, v, false);
    }

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        assert_ne!(u, v, "self-loops are not allowed");
        self.rows[u].set(v, present);
        self.rows[v].set(u, present);
    }

    pub fn toggle(&mut self, u: usize, v: usize) {
        let present = self.has_edge(u, v);
        self.set_edge(u, v, !present);
    }

    /// Adjacency row of `u` as a bitset over `0..n`.
    #[inline]
    pub fn row(&self, u: usize) -> &FixedBitSet {
        &self.rows[u]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[u].ones()
    }

    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            out.extend(self.rows[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            let row = &mut g.rows[u];
            row.insert_range(..);
            row.difference_with(&self.rows[u]);
            row.set(u, false);
        }
        g
    }

    /// Symmetric difference of the edge set with `s`.
    pub fn edit(&self, s: &EditSet) -> Result<Graph> {
        s.check_range(self.n())?;
        let mut g = self.clone();
        for (u, v) in s {
            g.toggle(u, v);
        }
        Ok(g)
    }

    /// All pairs (edges and non-edges) with exactly one endpoint in `x`.
    pub fn cut(&self, x: &VertexSet) -> Result<EditSet> {
        x.check_range(self.n())?;
        let mut out = EditSet::new();
        for u in x {
            for v in (0..self.n()).filter(|&v| !x.contains(v)) {
                out.insert(u, v);
            }
        }
        Ok(out)
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Deletes `removed` and renumbers the survivors in increasing order.
    ///
    /// Returns the new graph and the old-to-new id map.
    pub fn remove_vertices(&self, removed: &VertexSet) -> (Graph, Vec<Option<usize>>) {
        let kept: Vec<usize> = (0..self.n()).filter(|&v| !removed.contains(v)).collect();
        let mut map = vec![None; self.n()];
        for (i, &v) in kept.iter().enumerate() {
            map[v] = Some(i);
        }
        (self.induced(&kept), map)
    }

    /// Appends a disjoint copy of `G[source]`; new vertex `n + i` copies `source[i]`.
    pub fn with_copy_of(&self, source: &[usize]) -> Graph {
        let n = self.n();
        let total = n + source.len();
        let mut g = Graph::new(total);
        for u in 0..n {
            for v in self.rows[u].ones().filter(|&v| v > u) {
                g.add_edge(u, v);
            }
        }
        for (i, &u) in source.iter().enumerate() {
            for (j, &v) in source.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(n + i, n + j);
                }
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let all = full_mask(self.n());
        self.components_within(&all).iter().map(VertexSet::from_bitset).collect()
    }

    /// Connected components of the complement.
    pub fn co_components(&self) -> Vec<VertexSet> {
        let all = full_mask(self.n());
        self.co_components_within(&all).iter().map(VertexSet::from_bitset).collect()
    }

    /// Components of `G[mask]`, ordered by smallest member.
    pub(crate) fn components_within(&self, mask: &FixedBitSet) -> Vec<FixedBitSet> {
        self.search_within(mask, false)
    }

    /// Components of the complement of `G[mask]`, ordered by smallest member.
    pub(crate) fn co_components_within(&self, mask: &FixedBitSet) -> Vec<FixedBitSet> {
        self.search_within(mask, true)
    }

    fn search_within(&self, mask: &FixedBitSet, complement: bool) -> Vec<FixedBitSet> {
        let n = self.n();
        let mut unvisited = mask.clone();
        let mut out = Vec::new();
        let mut frontier = FixedBitSet::with_capacity(n);
        while let Some(start) = unvisited.minimum() {
            let mut comp = FixedBitSet::with_capacity(n);
            unvisited.set(start, false);
            comp.insert(start);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                frontier.clone_from(&unvisited);
                if complement {
                    frontier.difference_with(&self.rows[u]);
                } else {
                    frontier.intersect_with(&self.rows[u]);
                }
                for v in frontier.ones() {
                    unvisited.set(v, false);
                    comp.insert(v);
                    stack.push(v);
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components_within(&full_mask(self.n())).len() == 1
    }

    /// Whether `G[x]` has at least one edge.
    pub fn has_edge_within(&self, x: &VertexSet) -> bool {
        let mask = x.to_bitset(self.n());
        x.iter().any(|u| !self.rows[u].is_disjoint(&mask))
    }

    pub fn is_independent(&self, x: &VertexSet) -> bool {
        !self.has_edge_within(x)
    }

    pub fn is_cograph(&self) -> bool {
        self.find_induced_p4().is_none()
    }
}

pub(crate) fn full_mask(n: usize) -> FixedBitSet {
    let mut m = FixedBitSet::with_capacity(n);
    m.insert_range(..);
    m
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n()).field("edges", &self.edges()).finish()
    }
}
