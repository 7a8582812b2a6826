//! Seeded instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::Instance;
use crate::cotree::{CoExpr, Cotree};
use crate::error::{Error, Result};
use crate::graph::{EditSet, Graph, VertexSet};
use crate::rules::NestedTModule;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random canonical cotree on `n ≥ 1` leaves: parts are merged two to four
/// at a time under a random label until one remains.
pub fn random_cotree<R: Rng>(rng: &mut R, n: usize) -> Cotree {
    assert!(n >= 1, "a cotree needs a leaf");
    let mut parts: Vec<CoExpr> = (0..n).map(CoExpr::Leaf).collect();
    while parts.len() > 1 {
        let take = rng.gen_range(2..=parts.len().min(4));
        let kids = (0..take)
            .map(|_| {
                let i = rng.gen_range(0..parts.len());
                parts.swap_remove(i)
            })
            .collect();
        parts.push(if rng.gen_bool(0.5) { CoExpr::Series(kids) } else { CoExpr::Parallel(kids) });
    }
    Cotree::from_expr(parts.pop().unwrap()).expect("leaves 0..n each appear once")
}

/// Random graph where each pair is an edge with probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Realizes a random cotree on `n` leaves and toggles `k` distinct random pairs.
///
/// The instance budget is `k`, so the planted pairs certify a YES answer.
pub fn gen_planted(n: usize, k: usize, seed: u64) -> Result<(Instance, EditSet)> {
    if n == 0 {
        return Err(Error::Precondition("need at least one vertex".into()));
    }
    let pairs = n * (n - 1) / 2;
    if k > pairs {
        return Err(Error::Precondition(format!("cannot plant {k} edits among {pairs} pairs")));
    }
    let mut rng = rng_from_seed(seed);
    let graph = random_cotree(&mut rng, n).realize();
    let mut planted = EditSet::new();
    while planted.len() < k {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            planted.insert(u, v);
        }
    }
    let graph = graph.edit(&planted)?;
    Ok((Instance::new(graph, k), planted))
}

/// A generated instance with a known nested module.
#[derive(Clone, Debug, Serialize)]
pub struct PlantedNested {
    pub instance: Instance,
    pub module: NestedTModule,
    /// Pairs toggled in the cograph to obtain the instance.
    pub planted: EditSet,
    /// Cotree of the cograph before planting.
    pub cotree: Cotree,
}

/// Hands out shuffled vertex ids.
struct Ids {
    order: Vec<usize>,
    next: usize,
}

impl Ids {
    fn new<R: Rng>(rng: &mut R, n: usize) -> Self {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        Ids { order, next: 0 }
    }

    fn take(&mut self, count: usize) -> Vec<usize> {
        let out = self.order[self.next..self.next + count].to_vec();
        self.next += count;
        out
    }
}

fn leaves(ids: &[usize]) -> Vec<CoExpr> {
    ids.iter().copied().map(CoExpr::Leaf).collect()
}

/// Cotree shaped as a long alternating spine `q_0 (⊕), q_1 (+), …` with `t`
/// planted deletions between leaves at the bottom and leaves at the root.
///
/// The spine has `scale` edges (one more when `scale` is even, so the bottom
/// is a `+` node). Non-root `⊕` nodes carry one side leaf or a `+` node of
/// 2 to `k+1` leaves; `+` nodes carry 1 to `k+1` leaf children. The root
/// carries `s_1..s_t`, the bottom carries `a_1..a_t` and 1 to `k+1` more
/// leaves, and the pairs `a_j s_j` are deleted. The recorded module cuts the
/// spine at the first `⊕` node in each of the position ranges
/// `[43t, 50t)`, `[23t, 30t)` and `[3t, 10t)`.
pub fn gen_planted_nested(t: usize, k: usize, scale: usize, seed: u64) -> Result<PlantedNested> {
    if t == 0 || k == 0 {
        return Err(Error::Precondition("t and k must be positive".into()));
    }
    let need = 51 * t + k + 2;
    if scale < need {
        return Err(Error::Precondition(format!("scale must be at least 51t + k + 2 = {need}")));
    }
    let len = scale | 1;
    let mut rng = rng_from_seed(seed);
    let sizes: Vec<usize> = (0..=len)
        .map(|i| match i {
            0 => t,
            i if i == len => t + rng.gen_range(1..=k + 1),
            _ => rng.gen_range(1..=k + 1),
        })
        .collect();
    let n: usize = sizes.iter().sum();
    let mut ids = Ids::new(&mut rng, n);
    let fringe: Vec<Vec<usize>> = sizes.iter().map(|&s| ids.take(s)).collect();
    let s_side = &fringe[0];
    let a_side = &fringe[len][..t];

    let mut expr = CoExpr::Parallel(leaves(&fringe[len]));
    for i in (0..len).rev() {
        let side = &fringe[i];
        expr = if i == 0 {
            let mut kids = vec![expr];
            kids.extend(leaves(side));
            CoExpr::Series(kids)
        } else if i % 2 == 0 {
            let side_expr = if side.len() == 1 { CoExpr::Leaf(side[0]) } else { CoExpr::Parallel(leaves(side)) };
            CoExpr::Series(vec![expr, side_expr])
        } else {
            let mut kids = vec![expr];
            kids.extend(leaves(side));
            CoExpr::Parallel(kids)
        };
    }
    let cotree = Cotree::from_expr(expr)?;
    let planted = EditSet::from_pairs(a_side.iter().copied().zip(s_side.iter().copied()))?;
    let graph = cotree.realize().edit(&planted)?;

    let cut = |lo: usize, hi: usize| (lo..hi).find(|i| i % 2 == 0).expect("ranges span 7t positions");
    let (iu, iv, iw) = (cut(43 * t, 50 * t), cut(23 * t, 30 * t), cut(3 * t, 10 * t));
    let below = |from: usize| -> VertexSet { fringe[from..].iter().flatten().copied().collect() };
    let a = below(iu);
    let b = below(iv).difference(&a);
    let c = below(iw).difference(&below(iv));
    let k_set: VertexSet = (0..iw).step_by(2).flat_map(|i| fringe[i].iter().copied()).collect();
    let i_set: VertexSet = (1..iw).step_by(2).flat_map(|i| fringe[i].iter().copied()).collect();
    let module = NestedTModule::new(&graph, a, b, c, k_set, i_set, t);
    Ok(PlantedNested { instance: Instance::new(graph, k), module, planted, cotree })
}

/// Small instance realizing the nested module layout directly:
/// `((((A ⊕ B⊕) + B₊) ⊕ C⊕) + C₊) ⊕ K) + I` with `A`, `B⊕`, `B₊`, `C⊕`, `C₊`
/// independent, followed by `planted` deleted edges between distinct members
/// of `A` and one vertex of `K`.
///
/// `|A| = k + t + 1` or one more, each side set has `3t + 1` or `3t + 2`
/// vertices, and `K`, `I` have one or two.
pub fn gen_nested_compact(t: usize, k: usize, planted: usize, seed: u64) -> Result<PlantedNested> {
    if t == 0 || planted > t {
        return Err(Error::Precondition("need t >= 1 and at most t planted edits".into()));
    }
    let mut rng = rng_from_seed(seed);
    let side = |rng: &mut ChaCha8Rng| 3 * t + 1 + rng.gen_range(0..=1);
    let sizes = [
        k + t + 1 + rng.gen_range(0..=1),
        side(&mut rng),
        side(&mut rng),
        side(&mut rng),
        side(&mut rng),
        rng.gen_range(1..=2),
        rng.gen_range(1..=2),
    ];
    let n = sizes.iter().sum();
    let mut ids = Ids::new(&mut rng, n);
    let [a, bs, bp, cs, cp, kk, ii] = sizes.map(|s| ids.take(s));
    let par = |v: &[usize]| CoExpr::Parallel(leaves(v));
    let mut e = CoExpr::Series(vec![par(&a), par(&bs)]);
    e = CoExpr::Parallel(vec![e, par(&bp)]);
    e = CoExpr::Series(vec![e, par(&cs)]);
    e = CoExpr::Parallel(vec![e, par(&cp)]);
    let mut top = vec![e];
    top.extend(leaves(&kk));
    e = CoExpr::Series(top);
    let mut outer = vec![e];
    outer.extend(leaves(&ii));
    let cotree = Cotree::from_expr(CoExpr::Parallel(outer))?;
    let edits = EditSet::from_pairs(a.iter().take(planted).map(|&v| (v, kk[0])))?;
    let graph = cotree.realize().edit(&edits)?;
    let set = |v: &[usize]| v.iter().copied().collect::<VertexSet>();
    let module = NestedTModule::new(
        &graph,
        set(&a),
        set(&bs).union(&set(&bp)),
        set(&cs).union(&set(&cp)),
        set(&kk),
        set(&ii),
        t,
    );
    Ok(PlantedNested { instance: Instance::new(graph, k), module, planted: edits, cotree })
}
