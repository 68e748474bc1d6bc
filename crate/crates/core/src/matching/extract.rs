//! Constructive extraction of an expanded minor matching from a
//! semi-matching.
//!
//! Given a semi-matching of `ℓ` pairs in a clutter of rank `r`:
//!
//! 1. build the conflict graph (`i ~ j` iff `|S_i ∩ L_j| = 1` or
//!    `|S_j ∩ L_i| = 1`), which has at most `(r-2)ℓ` edges;
//! 2. take a greedy minimum-degree independent set `I`, of size at least
//!    `ℓ/(2r-3)`;
//! 3. pick one vertex `g(L_j)` from every pair outside `I` so that as many
//!    `i ∈ I` as possible have `S_i` avoiding every picked vertex. A uniform
//!    random pick keeps each `i` with probability at least `2^-(r-2)`; the
//!    method of conditional expectations fixes the picks one at a time
//!    without ever dropping below that expectation.
//!
//! The surviving pairs form an expanded minor matching of size at least
//! `ℓ 2^-(r-2) / (2r-3)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::clutter::Clutter;
use crate::edge::VertexId;
use crate::error::{Error, Result};

use super::semi::is_semi_matching;
use super::SemiMatching;

/// Conflict graph on the indices of a semi-matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl ConflictGraph {
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut list: Vec<(usize, usize)> = edges
            .into_iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        list.sort_unstable();
        list.dedup();
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in &list {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        ConflictGraph {
            n,
            edges: list,
            adjacency,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .all(|&i| self.adjacency[i].iter().all(|j| !set.contains(j)))
    }
}

pub fn build_conflict_graph(m: &SemiMatching) -> ConflictGraph {
    let pairs = m.pairs();
    let mut edges = Vec::new();
    for i in 0..pairs.len() {
        for j in (i + 1)..pairs.len() {
            let a = pairs[i].edge().intersection_len(pairs[j].pair());
            let b = pairs[j].edge().intersection_len(pairs[i].pair());
            if a == 1 || b == 1 {
                edges.push((i, j));
            }
        }
    }
    ConflictGraph::from_edges(pairs.len(), edges)
}

/// Repeatedly takes a minimum-degree vertex (smallest index on ties) of the
/// remaining graph and discards its neighbors. Returns sorted indices.
pub fn greedy_independent_set(g: &ConflictGraph) -> Vec<usize> {
    let mut alive = vec![true; g.n];
    let mut degree: Vec<usize> = (0..g.n).map(|i| g.adjacency[i].len()).collect();
    let mut out = Vec::new();

    let remove = |v: usize, alive: &mut Vec<bool>, degree: &mut Vec<usize>| {
        alive[v] = false;
        for &u in &g.adjacency[v] {
            if alive[u] {
                degree[u] -= 1;
            }
        }
    };

    while let Some(v) = (0..g.n)
        .filter(|&i| alive[i])
        .min_by_key(|&i| (degree[i], i))
    {
        out.push(v);
        let nbrs: Vec<usize> = g.adjacency[v]
            .iter()
            .copied()
            .filter(|&u| alive[u])
            .collect();
        remove(v, &mut alive, &mut degree);
        for u in nbrs {
            remove(u, &mut alive, &mut degree);
        }
    }
    out.sort_unstable();
    out
}

/// One vertex picked from each of a set of blocks, keyed by block index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChoiceFunction {
    assignment: BTreeMap<usize, VertexId>,
}

impl ChoiceFunction {
    pub fn get(&self, block: usize) -> Option<VertexId> {
        self.assignment.get(&block).copied()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, VertexId)> + '_ {
        self.assignment.iter().map(|(&k, &v)| (k, v))
    }
}

/// Everything the extraction computed, for inspection and testing.
#[derive(Clone, Debug)]
pub struct Extraction {
    pub matching: SemiMatching,
    pub conflict_graph: ConflictGraph,
    pub independent: Vec<usize>,
    pub choice: ChoiceFunction,
}

/// `E|I'(g)|` with the blocks in `fixed` pinned and all others uniform:
/// `Σ_{i ∈ I} Π_{j ∉ I} P[g(L_j) ∉ S_i]`.
fn conditional_expectation(
    m: &SemiMatching,
    independent: &[usize],
    outside: &[usize],
    fixed: &BTreeMap<usize, VertexId>,
) -> BigRational {
    let pairs = m.pairs();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut total = BigRational::zero();
    for &i in independent {
        let s = pairs[i].edge();
        let mut term = BigRational::one();
        for &j in outside {
            let factor = match fixed.get(&j) {
                Some(&x) if s.contains(x) => BigRational::zero(),
                Some(_) => BigRational::one(),
                None => {
                    let avoiding = pairs[j].pair().len() - pairs[j].pair().intersection_len(s);
                    BigRational::from_integer(BigInt::from(avoiding)) * &half
                }
            };
            term *= factor;
            if term.is_zero() {
                break;
            }
        }
        total += term;
    }
    total
}

pub fn extract_minor_matching(h: &Clutter, m: &SemiMatching) -> Result<SemiMatching> {
    Ok(extract_minor_matching_traced(h, m)?.matching)
}

pub fn extract_minor_matching_traced(h: &Clutter, m: &SemiMatching) -> Result<Extraction> {
    if !is_semi_matching(h, m) {
        return Err(Error::precondition(
            "input is not a semi-matching of the clutter",
        ));
    }
    let conflict_graph = build_conflict_graph(m);
    if m.is_empty() {
        return Ok(Extraction {
            matching: SemiMatching::empty(),
            conflict_graph,
            independent: Vec::new(),
            choice: ChoiceFunction::default(),
        });
    }
    let r = h.rank()?;
    if r < 2 {
        return Err(Error::precondition("rank must be at least 2"));
    }
    let independent = greedy_independent_set(&conflict_graph);

    if r == 2 {
        return Ok(Extraction {
            matching: m.select(&independent),
            conflict_graph,
            independent,
            choice: ChoiceFunction::default(),
        });
    }

    let outside: Vec<usize> = (0..m.len()).filter(|i| !independent.contains(i)).collect();
    let mut fixed: BTreeMap<usize, VertexId> = BTreeMap::new();
    for &j in &outside {
        let mut best: Option<(VertexId, BigRational)> = None;
        for x in m.pairs()[j].pair().iter() {
            fixed.insert(j, x);
            let value = conditional_expectation(m, &independent, &outside, &fixed);
            if best.as_ref().is_none_or(|(_, b)| value > *b) {
                best = Some((x, value));
            }
        }
        let (x, _) = best.expect("pairs have two vertices");
        fixed.insert(j, x);
    }

    let pairs = m.pairs();
    let survivors: Vec<usize> = independent
        .iter()
        .copied()
        .filter(|&i| fixed.values().all(|&x| !pairs[i].edge().contains(x)))
        .collect();

    Ok(Extraction {
        matching: m.select(&survivors),
        conflict_graph,
        independent,
        choice: ChoiceFunction { assignment: fixed },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::is_expanded_minor_matching;

    fn staircase(n: u32) -> (Clutter, SemiMatching) {
        let edges: Vec<Vec<u32>> = (1..=n)
            .map(|i| std::iter::once(i).chain((1..=i).map(|j| n + j)).collect())
            .collect();
        let h = Clutter::minimalize(edges.iter().map(|e| e.iter().copied().collect()));
        let m = SemiMatching::new(
            (1..=n)
                .map(|i| {
                    crate::matching::SemiMatchingPair::new(
                        [i, n + i].into(),
                        edges[(i - 1) as usize].iter().copied().collect(),
                    )
                    .unwrap()
                })
                .collect(),
        )
        .unwrap();
        (h, m)
    }

    #[test]
    fn conflict_graph_of_matching_is_edgeless() {
        let m = SemiMatching::from_slices(&[(&[1, 2], &[1, 2]), (&[3, 4], &[3, 4])]).unwrap();
        assert_eq!(build_conflict_graph(&m).edge_count(), 0);
    }

    #[test]
    fn staircase_conflicts() {
        let (_, m) = staircase(3);
        let g = build_conflict_graph(&m);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn single_pair_graph() {
        let m = SemiMatching::from_slices(&[(&[1, 2], &[1, 2, 3])]).unwrap();
        let g = build_conflict_graph(&m);
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn greedy_examples() {
        let edgeless = ConflictGraph::from_edges(5, []);
        assert_eq!(greedy_independent_set(&edgeless), vec![0, 1, 2, 3, 4]);
        let triangle = ConflictGraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
        assert_eq!(greedy_independent_set(&triangle).len(), 1);
        let path = ConflictGraph::from_edges(3, [(0, 1), (1, 2)]);
        assert_eq!(greedy_independent_set(&path), vec![0, 2]);
    }

    #[test]
    fn rank_two_keeps_everything() {
        let h = Clutter::from_slices(&[&[1, 2], &[3, 4]]);
        let m = SemiMatching::from_slices(&[(&[1, 2], &[1, 2]), (&[3, 4], &[3, 4])]).unwrap();
        assert_eq!(extract_minor_matching(&h, &m).unwrap(), m);
    }

    #[test]
    fn staircase_extraction() {
        let (h, m) = staircase(3);
        let out = extract_minor_matching(&h, &m).unwrap();
        assert!(!out.is_empty());
        assert!(is_expanded_minor_matching(&h, &out));
        assert!(out.is_subfamily_of(&m));
    }

    #[test]
    fn empty_input() {
        let h = Clutter::from_slices(&[&[1, 2, 3]]);
        assert_eq!(
            extract_minor_matching(&h, &SemiMatching::empty()).unwrap(),
            SemiMatching::empty()
        );
    }

    #[test]
    fn rejects_non_semi_matching() {
        let h = Clutter::from_slices(&[&[1, 2], &[2, 3], &[3, 4]]);
        let m = SemiMatching::from_slices(&[(&[1, 2], &[1, 2]), (&[3, 4], &[3, 4])]).unwrap();
        assert!(matches!(
            extract_minor_matching(&h, &m),
            Err(Error::Precondition(_))
        ));
    }
}
