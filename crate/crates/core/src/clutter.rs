//! Canonical clutters and their minor and lattice algebra.
//!
//! A [`Clutter`] is a finite antichain of vertex sets. Edges are kept in
//! shortlex order, so two clutters are equal exactly when their edge
//! sequences are equal. The two extreme clutters are [`Clutter::zero`] (no
//! edges) and [`Clutter::one`] (the single empty edge).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::edge::{EdgeSet, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Clutter {
    edges: Vec<EdgeSet>,
}

/// Cheap superset filter: bit `v mod 64` is set for each vertex.
fn signature(e: &EdgeSet) -> u64 {
    e.iter().fold(0u64, |acc, v| acc | (1u64 << (v % 64)))
}

impl Clutter {
    /// The clutter with no edges.
    pub fn zero() -> Self {
        Clutter { edges: Vec::new() }
    }

    /// The clutter whose only edge is the empty set.
    pub fn one() -> Self {
        Clutter {
            edges: vec![EdgeSet::empty()],
        }
    }

    /// Keeps exactly the inclusion-minimal input sets, deduplicated and in
    /// canonical order.
    pub fn minimalize(sets: impl IntoIterator<Item = EdgeSet>) -> Self {
        let mut sets: Vec<EdgeSet> = sets.into_iter().collect();
        sets.sort_unstable();
        sets.dedup();
        if sets.first().is_some_and(|e| e.is_empty()) {
            return Clutter::one();
        }
        let mut kept: Vec<EdgeSet> = Vec::with_capacity(sets.len());
        let mut sigs: Vec<u64> = Vec::with_capacity(sets.len());
        for e in sets {
            let sig = signature(&e);
            let subsumed = kept
                .iter()
                .zip(&sigs)
                .take_while(|(f, _)| f.len() < e.len())
                .any(|(f, &fs)| fs & !sig == 0 && f.is_subset(&e));
            if !subsumed {
                kept.push(e);
                sigs.push(sig);
            }
        }
        Clutter { edges: kept }
    }

    /// Convenience constructor from raw vertex lists; the input is minimalized.
    pub fn from_slices(sets: &[&[VertexId]]) -> Self {
        Clutter::minimalize(sets.iter().map(|s| EdgeSet::from(*s)))
    }

    /// Wraps edges that are already a canonical antichain.
    pub(crate) fn from_canonical(edges: Vec<EdgeSet>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        Clutter { edges }
    }

    pub fn edges(&self) -> &[EdgeSet] {
        &self.edges
    }

    pub fn iter(&self) -> std::slice::Iter<'_, EdgeSet> {
        self.edges.iter()
    }

    pub fn into_edges(self) -> Vec<EdgeSet> {
        self.edges
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    /// No edges at all; the same as [`Clutter::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.edges.len() == 1 && self.edges[0].is_empty()
    }

    pub fn contains_edge(&self, e: &EdgeSet) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    /// Structural check of the antichain and strict canonical order invariants.
    pub fn is_canonical(&self) -> bool {
        let ordered = self.edges.windows(2).all(|w| w[0] < w[1]);
        let antichain = self.edges.iter().enumerate().all(|(i, e)| {
            self.edges[i + 1..]
                .iter()
                .all(|f| !e.is_subset(f) && !f.is_subset(e))
        });
        ordered && antichain
    }

    pub fn vertex_set(&self) -> EdgeSet {
        EdgeSet::new(self.edges.iter().flat_map(|e| e.iter()))
    }

    /// Largest edge cardinality. Undefined on [`Clutter::zero`].
    pub fn rank(&self) -> Result<usize> {
        self.edges
            .iter()
            .map(EdgeSet::len)
            .max()
            .ok_or(Error::RankOfEmptyClutter)
    }

    pub fn delete_vertex(&self, v: VertexId) -> Clutter {
        Clutter {
            edges: self
                .edges
                .iter()
                .filter(|e| !e.contains(v))
                .cloned()
                .collect(),
        }
    }

    pub fn contract_vertex(&self, v: VertexId) -> Clutter {
        if !self.edges.iter().any(|e| e.contains(v)) {
            return self.clone();
        }
        Clutter::minimalize(self.edges.iter().map(|e| e.without(v)))
    }

    /// Deletes every vertex of `set`.
    pub fn delete(&self, set: &EdgeSet) -> Clutter {
        Clutter {
            edges: self
                .edges
                .iter()
                .filter(|e| e.is_disjoint(set))
                .cloned()
                .collect(),
        }
    }

    /// Contracts every vertex of `set`.
    pub fn contract(&self, set: &EdgeSet) -> Clutter {
        if set.is_empty() {
            return self.clone();
        }
        Clutter::minimalize(self.edges.iter().map(|e| e.difference(set)))
    }

    /// The minor `H[S; T]`: delete every vertex of `delete`, then contract
    /// every vertex of `contract`. The two sets must be disjoint.
    pub fn restrict(&self, delete: &EdgeSet, contract: &EdgeSet) -> Result<Clutter> {
        if delete.intersects(contract) {
            return Err(Error::OverlappingSets {
                delete: delete.clone(),
                contract: contract.clone(),
            });
        }
        Ok(self.delete(delete).contract(contract))
    }

    /// Minimalized union.
    pub fn join(&self, other: &Clutter) -> Clutter {
        Clutter::minimalize(self.edges.iter().chain(other.edges.iter()).cloned())
    }

    /// Minimalized pairwise unions.
    pub fn meet(&self, other: &Clutter) -> Clutter {
        Clutter::minimalize(
            self.edges
                .iter()
                .flat_map(|s| other.edges.iter().map(move |t| s.union(t))),
        )
    }
}

impl<'a> IntoIterator for &'a Clutter {
    type Item = &'a EdgeSet;
    type IntoIter = std::slice::Iter<'a, EdgeSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.edges.iter()
    }
}

impl FromIterator<EdgeSet> for Clutter {
    fn from_iter<I: IntoIterator<Item = EdgeSet>>(iter: I) -> Self {
        Clutter::minimalize(iter)
    }
}

impl fmt::Display for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
