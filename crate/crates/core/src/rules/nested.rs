use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::{Reduction, RuleApplication, RuleKind, Witness};
use crate::error::{Error, Result};
use crate::graph::{EditSet, Graph, VertexSet};
use crate::modular::module_mask_cost;

/// Default work cap for exact detection, counted in reconstructed 6-tuples.
pub const DEFAULT_SEARCH_CAP: u64 = 20_000_000;

/// A partition `(A, B, C, K, I)` of `V` together with the side sets
/// `B⊕, B₊, C⊕, C₊` it induces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NestedTModule {
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
    #[serde(rename = "k")]
    pub k_set: VertexSet,
    #[serde(rename = "i")]
    pub i_set: VertexSet,
    pub t: usize,
    pub b_series: VertexSet,
    pub b_parallel: VertexSet,
    pub c_series: VertexSet,
    pub c_parallel: VertexSet,
}

struct Masks {
    a: FixedBitSet,
    ab: FixedBitSet,
    k: FixedBitSet,
    i: FixedBitSet,
}

impl Masks {
    fn new(n: usize, a: &VertexSet, b: &VertexSet, k: &VertexSet, i: &VertexSet) -> Self {
        let a = a.to_bitset(n);
        let mut ab = b.to_bitset(n);
        ab.union_with(&a);
        Masks { a, ab, k: k.to_bitset(n), i: i.to_bitset(n) }
    }

    fn sides(&self, g: &Graph, b: &VertexSet, c: &VertexSet) -> [VertexSet; 4] {
        let sees_all = |v: usize, m: &FixedBitSet| m.is_subset(g.row(v));
        let sees_none = |v: usize, m: &FixedBitSet| g.row(v).is_disjoint(m);
        let base = |v: usize| sees_all(v, &self.k) && sees_none(v, &self.i);
        [
            b.iter().filter(|&v| base(v) && sees_all(v, &self.a)).collect(),
            b.iter().filter(|&v| base(v) && sees_none(v, &self.a)).collect(),
            c.iter().filter(|&v| base(v) && sees_all(v, &self.ab)).collect(),
            c.iter().filter(|&v| base(v) && sees_none(v, &self.ab)).collect(),
        ]
    }
}

impl NestedTModule {
    /// Assembles the partition and computes its side sets; see [`validate`](Self::validate).
    pub fn new(
        g: &Graph,
        a: VertexSet,
        b: VertexSet,
        c: VertexSet,
        k_set: VertexSet,
        i_set: VertexSet,
        t: usize,
    ) -> Self {
        let masks = Masks::new(g.n(), &a, &b, &k_set, &i_set);
        let [b_series, b_parallel, c_series, c_parallel] = masks.sides(g, &b, &c);
        Self { a, b, c, k_set, i_set, t, b_series, b_parallel, c_series, c_parallel }
    }

    pub fn parts(&self) -> [&VertexSet; 5] {
        [&self.a, &self.b, &self.c, &self.k_set, &self.i_set]
    }

    /// Checks every defining condition against `g` and budget `k`.
    pub fn validate(&self, g: &Graph, k: usize) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidNestedModule(msg));
        let n = g.n();
        let mut seen = FixedBitSet::with_capacity(n);
        for (name, part) in ["A", "B", "C", "K", "I"].iter().zip(self.parts()) {
            part.check_range(n)?;
            if part.is_empty() {
                return bad(format!("{name} is empty"));
            }
            for v in part.iter() {
                if seen.put(v) {
                    return bad(format!("vertex {v} lies in two parts"));
                }
            }
        }
        if seen.count_ones(..) != n {
            return bad("the five parts do not cover V".into());
        }
        if self.a.len() <= k + self.t {
            return bad(format!("|A| = {} is not larger than k + t = {}", self.a.len(), k + self.t));
        }
        let ab = self.a.union(&self.b);
        let abc = ab.union(&self.c);
        for (name, set) in [("A", &self.a), ("A∪B", &ab), ("A∪B∪C", &abc)] {
            let cost = module_mask_cost(g, &set.to_bitset(n));
            if cost > self.t {
                return bad(format!("{name} needs {cost} edits to become a module, t = {}", self.t));
            }
        }
        let masks = Masks::new(n, &self.a, &self.b, &self.k_set, &self.i_set);
        let sides = masks.sides(g, &self.b, &self.c);
        let stored = [&self.b_series, &self.b_parallel, &self.c_series, &self.c_parallel];
        for ((name, got), want) in ["B⊕", "B₊", "C⊕", "C₊"].iter().zip(stored).zip(&sides) {
            if got != want {
                return bad(format!("{name} is {got:?}, expected {want:?}"));
            }
            if want.len() < 3 * self.t + 1 {
                return bad(format!("|{name}| = {} < 3t+1 = {}", want.len(), 3 * self.t + 1));
            }
        }
        Ok(())
    }

    /// Edges between `A` and `I` and non-edges between `A` and `K`.
    pub fn forced_pairs(&self, g: &Graph) -> EditSet {
        let mut out = EditSet::new();
        for a in self.a.iter() {
            for v in self.i_set.iter().filter(|&v| g.has_edge(a, v)) {
                out.insert(a, v);
            }
            for v in self.k_set.iter().filter(|&v| !g.has_edge(a, v)) {
                out.insert(a, v);
            }
        }
        out
    }
}

/// `{x, x'}` plus every vertex adjacent to exactly one of them.
///
/// When `x` and `x'` are unedited leaves hanging just below and at a cut of
/// the cotree, this is exactly the leaf set of the upper cut node.
pub fn reconstruct_side(g: &Graph, x: usize, x2: usize) -> VertexSet {
    VertexSet::from_bitset(&reconstruct_mask(g, x, x2))
}

fn reconstruct_mask(g: &Graph, x: usize, x2: usize) -> FixedBitSet {
    let mut m = g.row(x).clone();
    m.symmetric_difference_with(g.row(x2));
    m.insert(x);
    m.insert(x2);
    m
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NestedSearch {
    pub found: Option<NestedTModule>,
    /// The work cap stopped the search before it finished.
    pub capped: bool,
    pub work: u64,
}

/// Exact search over ordered 6-tuples `(x, x', y, y', z, z')` of distinct
/// vertices.
///
/// `A`, `B ∪ A`, `C ∪ B ∪ A` come from reconstructing the pairs, `K` is the
/// neighbourhood of `x` outside them and `t` is the largest of the three
/// module costs. Tuples yielding the same sets are evaluated once, so the
/// first valid partition in tuple order is returned. Partitions that force no
/// edit are skipped, since the rule would change nothing on them.
pub fn detect_nested_t_module(g: &Graph, k: usize, cap: u64) -> NestedSearch {
    let n = g.n();
    let mut search = NestedSearch { found: None, capped: false, work: 0 };
    if n < 5 {
        return search;
    }
    let recon: Vec<Vec<FixedBitSet>> = (0..n).map(|x| (0..n).map(|x2| reconstruct_mask(g, x, x2)).collect()).collect();
    let size = |m: &FixedBitSet| m.count_ones(..);
    let mut seen_a = HashSet::new();
    for x in 0..n {
        for x2 in (0..n).filter(|&x2| x2 != x) {
            let a = &recon[x][x2];
            let cost_a = module_mask_cost(g, a);
            if size(a) <= k + cost_a {
                continue;
            }
            let mut outside = g.row(x).clone();
            outside.difference_with(a);
            if !seen_a.insert((a.clone(), outside)) {
                continue;
            }
            let mut seen_b = HashSet::new();
            for y in (0..n).filter(|&y| y != x && y != x2) {
                for y2 in (0..n).filter(|&y2| y2 != y && y2 != x && y2 != x2) {
                    let mut b = recon[y][y2].clone();
                    b.difference_with(a);
                    if size(&b) < 2 || !seen_b.insert(b.clone()) {
                        continue;
                    }
                    let mut ab = b.clone();
                    ab.union_with(a);
                    let t_ab = cost_a.max(module_mask_cost(g, &ab));
                    if size(a) <= k + t_ab || size(&b) < 2 * (3 * t_ab + 1) {
                        continue;
                    }
                    let mut seen_c = HashSet::new();
                    for z in (0..n).filter(|&z| ![x, x2, y, y2].contains(&z)) {
                        for z2 in (0..n).filter(|&z2| z2 != z && ![x, x2, y, y2].contains(&z2)) {
                            search.work += 1;
                            if search.work > cap {
                                search.capped = true;
                                return search;
                            }
                            let mut c = recon[z][z2].clone();
                            c.difference_with(&ab);
                            if size(&c) < 2 || !seen_c.insert(c.clone()) {
                                continue;
                            }
                            if let Some(m) = try_assemble(g, k, x, a, &b, &ab, &c, t_ab) {
                                search.found = Some(m);
                                return search;
                            }
                        }
                    }
                }
            }
        }
    }
    search
}

#[allow(clippy::too_many_arguments)]
fn try_assemble(
    g: &Graph,
    k: usize,
    x: usize,
    a: &FixedBitSet,
    b: &FixedBitSet,
    ab: &FixedBitSet,
    c: &FixedBitSet,
    t_ab: usize,
) -> Option<NestedTModule> {
    let mut abc = c.clone();
    abc.union_with(ab);
    let t = t_ab.max(module_mask_cost(g, &abc));
    let big = 2 * (3 * t + 1);
    if a.count_ones(..) <= k + t || b.count_ones(..) < big || c.count_ones(..) < big {
        return None;
    }
    let mut kset = g.row(x).clone();
    kset.difference_with(&abc);
    let mut iset = crate::graph::full_mask(g.n());
    iset.difference_with(&abc);
    iset.difference_with(&kset);
    if kset.is_clear() || iset.is_clear() {
        return None;
    }
    let m = NestedTModule::new(
        g,
        VertexSet::from_bitset(a),
        VertexSet::from_bitset(b),
        VertexSet::from_bitset(c),
        VertexSet::from_bitset(&kset),
        VertexSet::from_bitset(&iset),
        t,
    );
    let sides = [&m.b_series, &m.b_parallel, &m.c_series, &m.c_parallel];
    let sized = sides.iter().all(|s| s.len() > 3 * t);
    (sized && !m.forced_pairs(g).is_empty()).then_some(m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rule4Outcome {
    /// The forced pairs were edited and the budget lowered. The edit set may
    /// be empty, in which case the rule changed nothing.
    Applied(Box<Reduction>),
    /// More pairs are forced than the budget allows.
    No { forced: EditSet },
}

/// R4: edit every `A`–`I` edge and every `A`–`K` non-edge, paying one unit of
/// budget per pair.
pub fn rule4_apply(g: &Graph, k: usize, m: &NestedTModule) -> Result<Rule4Outcome> {
    m.validate(g, k)?;
    let forced = m.forced_pairs(g);
    if forced.len() > k {
        return Ok(Rule4Outcome::No { forced });
    }
    let mut app = RuleApplication::new(RuleKind::R4, Witness::Nested { module: m.clone() });
    app.k_delta = -(forced.len() as i64);
    app.edits = forced;
    Ok(Rule4Outcome::Applied(Box::new(Reduction::from_application(g, k, app))))
}
