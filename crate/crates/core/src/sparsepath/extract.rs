use serde::Serialize;

use super::{edit_paths, find_c_sparse, PathCover, SparseWitness};
use crate::cotree::{analysis_trees, build_cotree, Cotree, DescendingPath, NodeId, NodeLabel};
use crate::error::{Error, Result};
use crate::graph::{EditSet, Graph, VertexSet};
use crate::rules::{is_reduced_ours, reconstruct_side, NestedTModule};

/// Sparsity constant under which a nested module is guaranteed to exist.
pub const SPARSITY: usize = 51;

/// A nested `ℓ`-module read off a sparse edit path, with the choices made.
#[derive(Clone, Debug, Serialize)]
pub struct Extraction {
    pub module: NestedTModule,
    /// The sparse path `Q₀` found among the edit paths.
    pub witness: SparseWitness,
    /// The first `51ℓ` edges of `Q₀`.
    pub q: DescendingPath,
    pub ell: usize,
    /// Positions in `q` of the upper nodes of the cuts `(u,u')`, `(v,v')`, `(w,w')`.
    pub cut_indices: [usize; 3],
    pub cuts: [(NodeId, NodeId); 3],
    /// `x, x', y, y', z, z'`.
    pub pivots: [usize; 6],
    /// Positions of the internal nodes of `q` that are not free.
    pub non_free: Vec<usize>,
    /// Pairs the nested module rule edits.
    pub forced: EditSet,
}

/// Everything derived from an instance and an edit set that makes it a cograph.
#[derive(Clone, Debug, Serialize)]
pub struct Analysis {
    pub cotree: Cotree,
    pub reduced: bool,
    pub t_prime_nodes: Vec<NodeId>,
    pub t_double_prime_edges: Vec<(NodeId, NodeId)>,
    pub edit_paths: PathCover,
    pub sparse_witness: Option<SparseWitness>,
    pub extraction: Option<Extraction>,
}

struct Prepared {
    cotree: Cotree,
    t_prime_nodes: Vec<NodeId>,
    t_double_prime_edges: Vec<(NodeId, NodeId)>,
    edit_paths: PathCover,
    witness: Option<SparseWitness>,
}

fn prepare(g: &Graph, s: &EditSet, k: usize) -> Result<Prepared> {
    let h = g.edit(s)?;
    let cotree = build_cotree(&h).map_err(|e| match e {
        Error::NotCograph(p) => Error::Precondition(format!("edited graph still has the induced P4 {p:?}")),
        other => other,
    })?;
    let cover = edit_paths(&cotree, s)?;
    let trees = analysis_trees(&cotree, k, &cover)?;
    let restricted = cover.restrict_to(&trees.t_double_prime);
    let witness = find_c_sparse(&trees.t_double_prime, &restricted, SPARSITY)?;
    Ok(Prepared {
        t_prime_nodes: trees.t_prime.nodes().collect(),
        t_double_prime_edges: trees.t_double_prime.edges(),
        cotree,
        edit_paths: cover,
        witness,
    })
}

/// Builds the report behind the `analyze` command. Extraction is attempted
/// only when the instance is reduced under the first three rules.
pub fn analyze(g: &Graph, s: &EditSet, k: usize) -> Result<Analysis> {
    let prep = prepare(g, s, k)?;
    let reduced = is_reduced_ours(g, k);
    let extraction = match (&prep.witness, reduced) {
        (Some(w), true) => Some(extract_from(g, s, k, &prep.cotree, w.clone())?),
        _ => None,
    };
    Ok(Analysis {
        cotree: prep.cotree,
        reduced,
        t_prime_nodes: prep.t_prime_nodes,
        t_double_prime_edges: prep.t_double_prime_edges,
        edit_paths: prep.edit_paths,
        sparse_witness: prep.witness,
        extraction,
    })
}

/// Reads a nested `ℓ`-module off a 51-sparse edit path of the cotree of
/// `g △ s`, or `None` when `T''` has no such path.
///
/// `g` must be reduced under R1–R3 and `s` must turn it into a cograph. A
/// missing cut or a module failing validation is reported as an error.
pub fn extract_nested_module(g: &Graph, s: &EditSet, k: usize) -> Result<Option<Extraction>> {
    let prep = prepare(g, s, k)?;
    if !is_reduced_ours(g, k) {
        return Err(Error::Precondition("rules 1-3 still apply".into()));
    }
    match prep.witness {
        Some(w) => extract_from(g, s, k, &prep.cotree, w).map(Some),
        None => Ok(None),
    }
}

fn extract_from(g: &Graph, s: &EditSet, k: usize, t: &Cotree, witness: SparseWitness) -> Result<Extraction> {
    let ell = witness.intersect_count;
    let q = witness.path.subpath(0, SPARSITY * ell);
    let nodes = q.nodes();
    let edited = s.vertices();
    let last = nodes.len() - 1;
    // F_Q(u) for internal positions
    let fringe =
        |i: usize| -> VertexSet { t.descendant_leaves(nodes[i]).difference(&t.descendant_leaves(nodes[i + 1])) };
    let free: Vec<bool> = (0..=last).map(|i| i > 0 && i < last && fringe(i).is_disjoint(&edited)).collect();
    let non_free = (1..last).filter(|&i| !free[i]).collect();
    let find_cut = |lo: usize, hi: usize| -> Result<usize> {
        (lo..hi)
            .find(|&i| free[i] && free[i + 1] && t.label(nodes[i]) == NodeLabel::Series)
            .ok_or_else(|| Error::Extraction(format!("no cut between positions {lo} and {hi} of Q")))
    };
    let iu = find_cut(43 * ell, 50 * ell)?;
    let iv = find_cut(23 * ell, 30 * ell)?;
    let iw = find_cut(3 * ell, 10 * ell)?;
    let pivot = |i: usize| fringe(i).first().expect("fringes of internal nodes are nonempty");
    let pivots = [pivot(iu), pivot(iu + 1), pivot(iv), pivot(iv + 1), pivot(iw), pivot(iw + 1)];

    let de_u = t.descendant_leaves(nodes[iu]);
    let de_v = t.descendant_leaves(nodes[iv]);
    let de_w = t.descendant_leaves(nodes[iw]);
    for (name, de, (p, p2)) in [
        ("u", &de_u, (pivots[0], pivots[1])),
        ("v", &de_v, (pivots[2], pivots[3])),
        ("w", &de_w, (pivots[4], pivots[5])),
    ] {
        if &reconstruct_side(g, p, p2) != de {
            return Err(Error::Extraction(format!(
                "pivots ({p}, {p2}) do not reconstruct the leaves of cut node {name}"
            )));
        }
    }
    let a = de_u.clone();
    let b = de_v.difference(&a);
    let c = de_w.difference(&de_v);
    let x = pivots[0];
    let outside: VertexSet = (0..g.n()).filter(|&v| !de_w.contains(v)).collect();
    let k_set: VertexSet = outside.iter().filter(|&v| g.has_edge(x, v)).collect();
    let i_set = outside.difference(&k_set);
    let module = NestedTModule::new(g, a, b, c, k_set, i_set, ell);
    module.validate(g, k).map_err(|e| Error::Extraction(format!("extracted partition is invalid: {e}")))?;
    let forced = module.forced_pairs(g);
    if forced.is_empty() {
        return Err(Error::Extraction("extracted module forces no edit".into()));
    }
    Ok(Extraction {
        module,
        witness,
        cuts: [iu, iv, iw].map(|i| (nodes[i], nodes[i + 1])),
        cut_indices: [iu, iv, iw],
        q,
        ell,
        pivots,
        non_free,
        forced,
    })
}
