//! Semi-matchings, expanded minor matchings and `kK2` minors.
//!
//! A semi-matching of a clutter `H` is a family of pairs `(L_i, S_i)` with
//!
//! 1. `|L_i| = 2`, `L_i ⊆ S_i` and `S_i ∈ H`,
//! 2. the `L_i` pairwise disjoint,
//! 3. (3a) `L_i ⊄ S_j` for `i ≠ j`,
//! 4. every edge of `H` inside `⋃ S_i` containing some `L_i`.
//!
//! It is an expanded minor matching if moreover (3b) `L_i ∩ S_j = ∅` for
//! `i ≠ j`. Expanded minor matchings are exactly the certificates of `kK2`
//! minors, and every semi-matching of a bounded-rank clutter contains one of
//! linear size, which [`extract_minor_matching`] finds constructively.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::edge::{EdgeSet, VertexId};
use crate::error::{Error, Result};

mod expansion;
mod extract;
mod minor;
mod semi;

pub use expansion::{expansion, expansion_with_budget, DEFAULT_EXPANSION_BUDGET};
pub use extract::{
    build_conflict_graph, extract_minor_matching, extract_minor_matching_traced,
    greedy_independent_set, ChoiceFunction, ConflictGraph, Extraction,
};
pub use minor::{
    find_kk2_minor, find_kk2_minor_with_budget, is_k_matching, matching_to_minor, MinorWitness,
    DEFAULT_MINOR_BUDGET,
};
pub use semi::{
    count_semi_matchings, enumerate_semi_matchings, enumerate_semi_matchings_with_budget,
    extend_semi_matching, is_expanded_minor_matching, is_semi_matching, satisfies_condition_four,
    DEFAULT_ENUMERATION_BUDGET,
};

/// One `(L, S)` pair: a 2-set `L` inside the edge `S`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SemiMatchingPair {
    pair: EdgeSet,
    edge: EdgeSet,
}

impl SemiMatchingPair {
    pub fn new(pair: EdgeSet, edge: EdgeSet) -> Result<Self> {
        if pair.len() != 2 {
            return Err(Error::InvalidInput(format!(
                "pair {pair} must have exactly two vertices"
            )));
        }
        if !pair.is_subset(&edge) {
            return Err(Error::InvalidInput(format!(
                "pair {pair} is not inside {edge}"
            )));
        }
        Ok(SemiMatchingPair { pair, edge })
    }

    pub fn pair(&self) -> &EdgeSet {
        &self.pair
    }

    pub fn edge(&self) -> &EdgeSet {
        &self.edge
    }
}

impl fmt::Debug for SemiMatchingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.pair, self.edge)
    }
}

/// A family of pairs with pairwise disjoint 2-sets, ordered by the smallest
/// vertex of each 2-set. Validity against a host clutter is checked by
/// [`is_semi_matching`], not stored.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemiMatching {
    pairs: Vec<SemiMatchingPair>,
}

impl SemiMatching {
    pub fn empty() -> Self {
        SemiMatching { pairs: Vec::new() }
    }

    pub fn new(mut pairs: Vec<SemiMatchingPair>) -> Result<Self> {
        pairs.sort();
        for (i, p) in pairs.iter().enumerate() {
            if let Some(q) = pairs[i + 1..].iter().find(|q| q.pair.intersects(&p.pair)) {
                return Err(Error::InvalidInput(format!(
                    "pairs {} and {} are not disjoint",
                    p.pair, q.pair
                )));
            }
        }
        Ok(SemiMatching { pairs })
    }

    /// Builds from `(L, S)` vertex lists.
    pub fn from_slices(pairs: &[(&[VertexId], &[VertexId])]) -> Result<Self> {
        let pairs = pairs
            .iter()
            .map(|(l, s)| SemiMatchingPair::new(EdgeSet::from(*l), EdgeSet::from(*s)))
            .collect::<Result<Vec<_>>>()?;
        SemiMatching::new(pairs)
    }

    pub(crate) fn from_sorted(pairs: Vec<SemiMatchingPair>) -> Self {
        debug_assert!(pairs.windows(2).all(|w| w[0] < w[1]));
        SemiMatching { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[SemiMatchingPair] {
        &self.pairs
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SemiMatchingPair> {
        self.pairs.iter()
    }

    /// The 2-sets `L_i`, in order.
    pub fn blocks(&self) -> Vec<EdgeSet> {
        self.pairs.iter().map(|p| p.pair.clone()).collect()
    }

    /// `⋃ L_i`.
    pub fn pair_union(&self) -> EdgeSet {
        EdgeSet::new(self.pairs.iter().flat_map(|p| p.pair.iter()))
    }

    /// `⋃ S_i`.
    pub fn edge_union(&self) -> EdgeSet {
        EdgeSet::new(self.pairs.iter().flat_map(|p| p.edge.iter()))
    }

    /// The sub-family at the given indices.
    pub fn select(&self, indices: &[usize]) -> SemiMatching {
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        SemiMatching {
            pairs: idx.into_iter().map(|i| self.pairs[i].clone()).collect(),
        }
    }

    pub fn is_subfamily_of(&self, other: &SemiMatching) -> bool {
        self.pairs.iter().all(|p| other.pairs.contains(p))
    }
}

impl Ord for SemiMatching {
    /// Size first, then lexicographic over pairs.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.pairs
            .len()
            .cmp(&other.pairs.len())
            .then_with(|| self.pairs.cmp(&other.pairs))
    }
}

impl PartialOrd for SemiMatching {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> IntoIterator for &'a SemiMatching {
    type Item = &'a SemiMatchingPair;
    type IntoIter = std::slice::Iter<'a, SemiMatchingPair>;

    fn into_iter(self) -> Self::IntoIter {
        self.pairs.iter()
    }
}

impl fmt::Debug for SemiMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.pairs.iter()).finish()
    }
}
