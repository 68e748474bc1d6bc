use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Vertex labels are arbitrary non-negative integers; nothing assumes contiguity.
pub type VertexId = u32;

/// A finite vertex set, stored as a strictly increasing sequence.
///
/// Sets are ordered shortlex: first by cardinality, then lexicographically
/// over the sorted vertex sequence. This is the canonical edge order of
/// [`Clutter`](crate::Clutter).
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(Vec<VertexId>);

impl EdgeSet {
    pub fn new(vertices: impl IntoIterator<Item = VertexId>) -> Self {
        let mut v: Vec<VertexId> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        EdgeSet(v)
    }

    pub fn empty() -> Self {
        EdgeSet(Vec::new())
    }

    pub fn singleton(v: VertexId) -> Self {
        EdgeSet(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn min(&self) -> Option<VertexId> {
        self.0.first().copied()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for x in &self.0 {
            for y in it.by_ref() {
                match y.cmp(x) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn intersects(&self, other: &EdgeSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return true,
            }
        }
        false
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        !self.intersects(other)
    }

    pub fn intersection_len(&self, other: &EdgeSet) -> usize {
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        EdgeSet(out)
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(
            self.0
                .iter()
                .copied()
                .filter(|v| other.contains(*v))
                .collect(),
        )
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(
            self.0
                .iter()
                .copied()
                .filter(|v| !other.contains(*v))
                .collect(),
        )
    }

    pub fn with(&self, v: VertexId) -> EdgeSet {
        match self.0.binary_search(&v) {
            Ok(_) => self.clone(),
            Err(pos) => {
                let mut out = self.0.clone();
                out.insert(pos, v);
                EdgeSet(out)
            }
        }
    }

    pub fn without(&self, v: VertexId) -> EdgeSet {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                let mut out = self.0.clone();
                out.remove(pos);
                EdgeSet(out)
            }
            Err(_) => self.clone(),
        }
    }

    /// All 2-element subsets, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = EdgeSet> + '_ {
        let v = &self.0;
        (0..v.len()).flat_map(move |i| ((i + 1)..v.len()).map(move |j| EdgeSet(vec![v[i], v[j]])))
    }
}

impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<VertexId> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        EdgeSet::new(iter)
    }
}

impl From<&[VertexId]> for EdgeSet {
    fn from(v: &[VertexId]) -> Self {
        EdgeSet::new(v.iter().copied())
    }
}

impl<const N: usize> From<[VertexId; N]> for EdgeSet {
    fn from(v: [VertexId; N]) -> Self {
        EdgeSet::new(v)
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = &'a VertexId;
    type IntoIter = std::slice::Iter<'a, VertexId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_sorts_and_dedups() {
        assert_eq!(EdgeSet::new([3, 1, 3, 2]).as_slice(), &[1, 2, 3]);
    }

    #[test]
    fn shortlex_order() {
        let mut v = vec![
            EdgeSet::from([1, 2]),
            EdgeSet::from([3]),
            EdgeSet::from([1, 3]),
            EdgeSet::empty(),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                EdgeSet::empty(),
                EdgeSet::from([3]),
                EdgeSet::from([1, 2]),
                EdgeSet::from([1, 3])
            ]
        );
    }

    #[test]
    fn set_algebra() {
        let a = EdgeSet::from([1, 2, 4]);
        let b = EdgeSet::from([2, 3, 4, 5]);
        assert_eq!(a.union(&b), EdgeSet::from([1, 2, 3, 4, 5]));
        assert_eq!(a.intersection(&b), EdgeSet::from([2, 4]));
        assert_eq!(a.difference(&b), EdgeSet::from([1]));
        assert_eq!(a.intersection_len(&b), 2);
        assert!(EdgeSet::from([2, 4]).is_subset(&a));
        assert!(!EdgeSet::from([2, 3]).is_subset(&a));
        assert!(EdgeSet::empty().is_subset(&a));
        assert!(a.intersects(&b));
        assert!(EdgeSet::from([1]).is_disjoint(&b));
        assert_eq!(a.with(3), EdgeSet::from([1, 2, 3, 4]));
        assert_eq!(a.without(2), EdgeSet::from([1, 4]));
    }

    #[test]
    fn pairs_enumerates_two_subsets() {
        let p: Vec<_> = EdgeSet::from([1, 2, 3]).pairs().collect();
        assert_eq!(
            p,
            vec![
                EdgeSet::from([1, 2]),
                EdgeSet::from([1, 3]),
                EdgeSet::from([2, 3])
            ]
        );
    }
}
