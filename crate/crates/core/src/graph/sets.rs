use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A set of vertex ids, iterated in increasing order.
///
/// The derived ordering is lexicographic over the sorted members, which is the
/// tie-break used whenever a rule has to choose between candidate sets.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self(BTreeSet::new())
    }

    pub fn singleton(v: usize) -> Self {
        Self(BTreeSet::from([v]))
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    pub fn from_bitset(bits: &FixedBitSet) -> Self {
        bits.ones().collect()
    }

    pub fn to_bitset(&self, n: usize) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(n);
        for &v in &self.0 {
            bits.insert(v);
        }
        bits
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        self.0.remove(&v)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.0.union(&other.0).copied().collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.0.intersection(&other.0).copied().collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.0.difference(&other.0).copied().collect()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }

    pub(crate) fn check_range(&self, n: usize) -> Result<()> {
        match self.last() {
            Some(v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(vs: [usize; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// A set of unordered vertex pairs, stored as `(min, max)`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<(usize, usize)>", try_from = "Vec<(usize, usize)>")]
pub struct EditSet(BTreeSet<(usize, usize)>);

#[inline]
pub(crate) fn canonical(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl EditSet {
    pub fn new() -> Self {
        Self(BTreeSet::new())
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Result<Self> {
        let mut set = Self::new();
        for (u, v) in pairs {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.0.insert(canonical(u, v));
        }
        Ok(set)
    }

    /// Inserts the pair `{u, v}`. Panics on `u == v`.
    pub fn insert(&mut self, u: usize, v: usize) -> bool {
        assert_ne!(u, v, "edit pairs join two distinct vertices");
        self.0.insert(canonical(u, v))
    }

    pub fn remove(&mut self, u: usize, v: usize) -> bool {
        self.0.remove(&canonical(u, v))
    }

    /// Symmetric difference with a single pair.
    pub fn toggle(&mut self, u: usize, v: usize) {
        if !self.remove(u, v) {
            self.insert(u, v);
        }
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        u != v && self.0.contains(&canonical(u, v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (usize, usize)> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn max_vertex(&self) -> Option<usize> {
        self.0.iter().map(|&(_, v)| v).max()
    }

    /// Vertices incident to at least one pair.
    pub fn vertices(&self) -> VertexSet {
        self.0.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    pub fn symmetric_difference(&self, other: &EditSet) -> EditSet {
        Self(self.0.symmetric_difference(&other.0).copied().collect())
    }

    pub fn union(&self, other: &EditSet) -> EditSet {
        Self(self.0.union(&other.0).copied().collect())
    }

    pub fn is_subset(&self, other: &EditSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Number of pairs with exactly one endpoint in `x`.
    pub fn crossing_count(&self, x: &VertexSet) -> usize {
        self.0.iter().filter(|&&(u, v)| x.contains(u) != x.contains(v)).count()
    }

    /// Renames every endpoint through `map`; `None` if some endpoint was dropped.
    pub fn relabel(&self, map: &[Option<usize>]) -> Option<EditSet> {
        let mut out = EditSet::new();
        for &(u, v) in &self.0 {
            let nu = (*map.get(u)?)?;
            let nv = (*map.get(v)?)?;
            out.insert(nu, nv);
        }
        Some(out)
    }

    pub(crate) fn check_range(&self, n: usize) -> Result<()> {
        match self.max_vertex() {
            Some(v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl fmt::Debug for EditSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl From<EditSet> for Vec<(usize, usize)> {
    fn from(set: EditSet) -> Self {
        set.0.into_iter().collect()
    }
}

impl TryFrom<Vec<(usize, usize)>> for EditSet {
    type Error = Error;

    fn try_from(pairs: Vec<(usize, usize)>) -> Result<Self> {
        EditSet::from_pairs(pairs)
    }
}

impl FromIterator<(usize, usize)> for EditSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        let mut set = EditSet::new();
        for (u, v) in iter {
            set.insert(u, v);
        }
        set
    }
}

impl<'a> IntoIterator for &'a EditSet {
    type Item = (usize, usize);
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, (usize, usize)>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}
