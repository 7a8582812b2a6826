use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use super::{find_c_sparse, PathCover, SparseWitness};
use crate::cotree::{DescendingPath, NodeId, RootedForest};
use crate::error::{Error, Result};

/// Balanced binary tree with `k` leaves whose level-`i` edges (top level 1)
/// are subdivided `k / 2^i` times, covered by its `k` root-to-leaf paths.
pub fn counterexample_tree(k: usize) -> Result<(RootedForest, PathCover)> {
    if k < 2 || !k.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(k));
    }
    let mut parent: Vec<Option<NodeId>> = vec![None];
    let mut paths = Vec::new();
    grow(&mut parent, &mut paths, vec![0], k);
    let forest = RootedForest::from_parents(parent)?;
    Ok((forest, PathCover::new(paths)))
}

fn grow(parent: &mut Vec<Option<NodeId>>, paths: &mut Vec<DescendingPath>, trail: Vec<NodeId>, leaves: usize) {
    if leaves == 1 {
        paths.push(DescendingPath::new(trail));
        return;
    }
    // the two edges below a node with `leaves` leaves are subdivided `leaves / 2` times
    let subdivisions = leaves / 2;
    for _ in 0..2 {
        let mut branch = trail.clone();
        for _ in 0..=subdivisions {
            let id = parent.len();
            parent.push(Some(*branch.last().unwrap()));
            branch.push(id);
        }
        grow(parent, paths, branch, leaves / 2);
    }
}

/// Outcome of checking one instance of the path or forest lemma.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub edges: usize,
    pub paths: usize,
    pub c: usize,
    /// Edge count from which the lemma promises a witness.
    pub bound: f64,
    pub hypothesis_met: bool,
    pub witness: Option<SparseWitness>,
}

impl LemmaReport {
    /// The lemma holds on this instance: its hypothesis fails or a witness exists.
    pub fn consistent(&self) -> bool {
        !self.hypothesis_met || self.witness.is_some()
    }
}

/// Path case: a path-shaped tree with at least `4ck` edges, covered by `k`
/// descending paths, has a `c`-sparse subpath.
pub fn check_pathcase(tree: &RootedForest, cover: &PathCover, c: usize) -> Result<LemmaReport> {
    if !tree.is_path() {
        return Err(Error::Precondition("tree is not a path".into()));
    }
    let bound = (4 * c * cover.len()) as f64;
    report(tree, cover, c, bound)
}

/// Forest case: at least `4ck(1 + log₂ k)` edges suffice for any forest.
pub fn check_forest(forest: &RootedForest, cover: &PathCover, c: usize) -> Result<LemmaReport> {
    let k = cover.len() as f64;
    let bound = if cover.is_empty() { 0.0 } else { 4.0 * c as f64 * k * (1.0 + k.log2()) };
    report(forest, cover, c, bound)
}

fn report(forest: &RootedForest, cover: &PathCover, c: usize, bound: f64) -> Result<LemmaReport> {
    cover.check_covering(forest)?;
    let edges = forest.edge_count();
    Ok(LemmaReport {
        edges,
        paths: cover.len(),
        c,
        bound,
        hypothesis_met: !cover.is_empty() && edges as f64 >= bound,
        witness: find_c_sparse(forest, cover, c)?,
    })
}

/// A path with `4ck + extra` edges covered by exactly `k` random descending
/// subpaths. Some paths tile the tree, the rest overlap them at random.
pub fn random_path_instance<R: Rng>(rng: &mut R, k: usize, c: usize, extra: usize) -> (RootedForest, PathCover) {
    assert!(k >= 1 && c >= 1);
    let edges = 4 * c * k + extra;
    let parent = (0..=edges).map(|i| i.checked_sub(1)).collect();
    let forest = RootedForest::from_parents(parent).expect("a chain is acyclic");
    let tiles = rng.gen_range(1..=k.min(edges));
    let mut cuts: Vec<usize> = rand::seq::index::sample(rng, edges - 1, tiles - 1).into_iter().map(|i| i + 1).collect();
    cuts.push(0);
    cuts.push(edges);
    cuts.sort_unstable();
    let mut spans: Vec<(usize, usize)> = cuts
        .windows(2)
        .map(|w| {
            let top = w[0].saturating_sub(rng.gen_range(0..=2));
            let bottom = (w[1] + rng.gen_range(0..=2)).min(edges);
            (top, bottom)
        })
        .collect();
    while spans.len() < k {
        let top = rng.gen_range(0..edges);
        let bottom = rng.gen_range(top + 1..=edges);
        spans.push((top, bottom));
    }
    spans.shuffle(rng);
    let paths = spans.into_iter().map(|(top, bottom)| DescendingPath::new((top..=bottom).collect())).collect();
    (forest, PathCover::new(paths))
}

/// A random forest built from `k` hanging chains with total length at least
/// `4ck(1 + log₂ k) + extra`, covered by `k` paths: each chain plus a random
/// stretch of the ancestors above its attachment point.
pub fn random_forest_instance<R: Rng>(rng: &mut R, k: usize, c: usize, extra: usize) -> (RootedForest, PathCover) {
    assert!(k >= 1 && c >= 1);
    let kf = k as f64;
    let target = (4.0 * c as f64 * kf * (1.0 + kf.log2())).ceil() as usize + extra;
    // random composition of `target` into `k` positive chain lengths
    let mut cuts: Vec<usize> = rand::seq::index::sample(rng, target - 1, k - 1).into_iter().map(|i| i + 1).collect();
    cuts.push(0);
    cuts.push(target);
    cuts.sort_unstable();
    let mut parent: Vec<Option<NodeId>> = Vec::new();
    let mut paths = Vec::with_capacity(k);
    for w in cuts.windows(2) {
        let len = w[1] - w[0];
        let mut trail = Vec::new();
        if parent.is_empty() || rng.gen_bool(0.25) {
            parent.push(None);
            trail.push(parent.len() - 1);
        } else {
            let mut cur = rng.gen_range(0..parent.len());
            let climb = rng.gen_range(0..=3);
            trail.push(cur);
            for _ in 0..climb {
                match parent[cur] {
                    Some(p) => {
                        cur = p;
                        trail.push(cur);
                    }
                    None => break,
                }
            }
            trail.reverse();
        }
        for _ in 0..len {
            parent.push(Some(*trail.last().unwrap()));
            trail.push(parent.len() - 1);
        }
        paths.push(DescendingPath::new(trail));
    }
    paths.shuffle(rng);
    let forest = RootedForest::from_parents(parent).expect("chains only hang below existing nodes");
    (forest, PathCover::new(paths))
}
