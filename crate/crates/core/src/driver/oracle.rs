//! Exact solvers used to resolve small kernels and to check the rules.

use serde::Serialize;

use super::Instance;
use crate::error::{Error, Result};
use crate::graph::{EditSet, Graph};

/// Search nodes a single enumeration may visit before giving up.
pub const ENUMERATION_BUDGET: u64 = 400_000_000;

/// Edit set of size at most `k` turning the instance into a cograph.
///
/// Branches on the six pairs of the first induced P4, never toggling a pair
/// twice on one branch. Branch `j` also leaves pairs `0..j` of the same P4
/// alone, since any solution using one of those is found in an earlier branch.
pub fn brute_force_solve(inst: &Instance) -> Option<EditSet> {
    brute_force_avoiding(&inst.graph, inst.k, &EditSet::new())
}

/// Like [`brute_force_solve`] but never edits a pair of `forbidden`.
pub fn brute_force_avoiding(g: &Graph, k: usize, forbidden: &EditSet) -> Option<EditSet> {
    let mut stats = 0;
    solve_counted(g, k, forbidden, &mut stats)
}

pub(crate) fn solve_counted(g: &Graph, k: usize, forbidden: &EditSet, nodes: &mut u64) -> Option<EditSet> {
    let mut work = g.clone();
    let mut chosen = EditSet::new();
    let mut fixed = forbidden.clone();
    branch(&mut work, k, &mut chosen, &mut fixed, nodes).then_some(chosen)
}

fn branch(g: &mut Graph, k: usize, chosen: &mut EditSet, fixed: &mut EditSet, nodes: &mut u64) -> bool {
    *nodes += 1;
    let Some([a, b, c, d]) = g.find_induced_p4() else {
        return true;
    };
    if k == 0 {
        return false;
    }
    let quad = [a, b, c, d];
    let mut pinned = Vec::new();
    let mut found = false;
    'pairs: for i in 0..4 {
        for j in i + 1..4 {
            let (u, v) = (quad[i], quad[j]);
            if fixed.contains(u, v) {
                continue;
            }
            g.toggle(u, v);
            chosen.insert(u, v);
            fixed.insert(u, v);
            if branch(g, k - 1, chosen, fixed, nodes) {
                found = true;
                break 'pairs;
            }
            g.toggle(u, v);
            chosen.remove(u, v);
            // stays fixed: later siblings assume this pair untouched
            pinned.push((u, v));
        }
    }
    if !found {
        for (u, v) in pinned {
            fixed.remove(u, v);
        }
    }
    found
}

/// Smallest edit set of size at most `max_k`, by iterative deepening.
pub fn minimum_edit(g: &Graph, max_k: usize) -> Option<EditSet> {
    (0..=max_k).find_map(|k| brute_force_avoiding(g, k, &EditSet::new()))
}

/// The optimum and every optimal edit set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OptimaReport {
    pub opt: usize,
    pub solutions: Vec<EditSet>,
}

/// Graph on at most 32 vertices as adjacency masks.
#[derive(Clone)]
struct Masks {
    rows: Vec<u32>,
}

impl Masks {
    fn new(g: &Graph) -> Result<Masks> {
        if g.n() > 32 {
            return Err(Error::TooLarge(format!("{} vertices, exhaustive search handles 32", g.n())));
        }
        let rows = (0..g.n()).map(|u| g.neighbors(u).fold(0u32, |m, v| m | 1 << v)).collect();
        Ok(Masks { rows })
    }

    fn toggle(&mut self, u: usize, v: usize) {
        self.rows[u] ^= 1 << v;
        self.rows[v] ^= 1 << u;
    }

    /// Induced P4 `a-b-c-d` exists iff for some edge `bc` there are `a` seeing
    /// only `b` and `d` seeing only `c` with `ad` absent.
    fn has_p4(&self) -> bool {
        let n = self.rows.len();
        for b in 0..n {
            let nb = self.rows[b];
            let mut cs = nb & !((1u32 << b) | ((1u32 << b) - 1));
            while cs != 0 {
                let c = cs.trailing_zeros() as usize;
                cs &= cs - 1;
                let nc = self.rows[c];
                let ends_b = nb & !nc & !(1 << c);
                let ends_c = nc & !nb & !(1 << b);
                if ends_b == 0 || ends_c == 0 {
                    continue;
                }
                let mut as_ = ends_b;
                while as_ != 0 {
                    let a = as_.trailing_zeros() as usize;
                    as_ &= as_ - 1;
                    if ends_c & !self.rows[a] != 0 {
                        return true;
                    }
                }
            }
        }
        false
    }
}

struct Enumerator {
    masks: Masks,
    pairs: Vec<(usize, usize)>,
    picked: Vec<usize>,
    visited: u64,
    budget: u64,
    solutions: Vec<EditSet>,
    stop_at_first: bool,
}

impl Enumerator {
    fn new(g: &Graph, budget: u64, stop_at_first: bool) -> Result<Self> {
        let n = g.n();
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Ok(Enumerator {
            masks: Masks::new(g)?,
            pairs,
            picked: Vec::new(),
            visited: 0,
            budget,
            solutions: Vec::new(),
            stop_at_first,
        })
    }

    /// Every cograph-making subset of exactly `size` pairs.
    fn level(&mut self, size: usize, from: usize) -> Result<()> {
        if self.picked.len() == size {
            self.visited += 1;
            if self.visited > self.budget {
                return Err(Error::TooLarge(format!("more than {} subsets", self.budget)));
            }
            if !self.masks.has_p4() {
                let set = EditSet::from_pairs(self.picked.iter().map(|&i| self.pairs[i]))?;
                self.solutions.push(set);
            }
            return Ok(());
        }
        let remaining = size - self.picked.len();
        for i in from..=self.pairs.len().saturating_sub(remaining) {
            if self.stop_at_first && !self.solutions.is_empty() {
                return Ok(());
            }
            let (u, v) = self.pairs[i];
            self.masks.toggle(u, v);
            self.picked.push(i);
            let r = self.level(size, i + 1);
            self.picked.pop();
            self.masks.toggle(u, v);
            r?;
        }
        Ok(())
    }

    /// Smallest size with a solution, trying sizes up to `cap`.
    fn run(&mut self, cap: usize) -> Result<Option<usize>> {
        for size in 0..=cap.min(self.pairs.len()) {
            self.level(size, 0)?;
            if !self.solutions.is_empty() {
                return Ok(Some(size));
            }
        }
        Ok(None)
    }
}

/// Exact optimum with all optimal edit sets, by trying every subset of vertex
/// pairs in order of increasing size.
///
/// Refuses graphs over 32 vertices and stops with [`Error::TooLarge`] once the
/// subset count passes [`ENUMERATION_BUDGET`].
pub fn enumerate_optima(g: &Graph) -> Result<OptimaReport> {
    let mut e = Enumerator::new(g, ENUMERATION_BUDGET, false)?;
    let opt = e.run(usize::MAX)?.expect("editing every pair into a clique always works");
    Ok(OptimaReport { opt, solutions: e.solutions })
}

/// `min(opt(g), cap + 1)` by exhaustive enumeration, summed over connected
/// components since no optimal edit needs a pair between two of them.
pub fn optimum_capped(g: &Graph, cap: usize) -> Result<usize> {
    let mut total = 0;
    for comp in g.components() {
        if total > cap {
            break;
        }
        let sub = g.induced(&comp.to_vec());
        let mut e = Enumerator::new(&sub, ENUMERATION_BUDGET, true)?;
        total += e.run(cap - total)?.unwrap_or(cap - total + 1);
    }
    Ok(total.min(cap + 1))
}

/// Whether the instance is a YES instance, by exhaustive enumeration.
pub fn is_yes(inst: &Instance) -> Result<bool> {
    Ok(optimum_capped(&inst.graph, inst.k)? <= inst.k)
}

/// Whether both instances have the same answer.
pub fn verify_equivalence(a: &Instance, b: &Instance) -> Result<bool> {
    Ok(is_yes(a)? == is_yes(b)?)
}

/// Brute force applied per component, with the edits shifted back to `g`'s ids.
pub(crate) fn solve_by_components(g: &Graph, k: usize, nodes: &mut u64) -> Option<EditSet> {
    let mut out = EditSet::new();
    let mut left = k;
    for comp in g.components() {
        let ids: Vec<usize> = comp.to_vec();
        let sub = g.induced(&ids);
        let s = (0..=left).find_map(|b| solve_counted(&sub, b, &EditSet::new(), nodes))?;
        left -= s.len();
        for (u, v) in s.iter() {
            out.insert(ids[u], ids[v]);
        }
    }
    Some(out)
}
