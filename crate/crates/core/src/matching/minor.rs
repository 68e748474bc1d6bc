use serde::{Deserialize, Serialize};

use crate::clutter::Clutter;
use crate::edge::{EdgeSet, VertexId};
use crate::error::{Error, Result};

use super::semi::is_expanded_minor_matching;
use super::SemiMatching;

/// Default cap on the number of candidate minors `find_kk2_minor` evaluates.
pub const DEFAULT_MINOR_BUDGET: usize = 10_000_000;

/// Certificate that `H[delete; contract]` is the matching `matching`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub delete: EdgeSet,
    pub contract: EdgeSet,
    pub matching: Vec<EdgeSet>,
}

impl MinorWitness {
    /// The clutter formed by the matching edges.
    pub fn matching_clutter(&self) -> Clutter {
        Clutter::minimalize(self.matching.iter().cloned())
    }

    /// Re-evaluates the minor and compares it with the claimed matching.
    pub fn verify(&self, h: &Clutter) -> bool {
        let pairwise_disjoint =
            self.matching.iter().enumerate().all(|(i, a)| {
                a.len() == 2 && self.matching[i + 1..].iter().all(|b| a.is_disjoint(b))
            });
        pairwise_disjoint
            && h.restrict(&self.delete, &self.contract)
                .is_ok_and(|m| m == self.matching_clutter())
    }
}

/// True iff `h` has exactly `k` edges, all of size two and pairwise disjoint.
pub fn is_k_matching(h: &Clutter, k: usize) -> bool {
    h.len() == k && h.iter().all(|e| e.len() == 2) && h.vertex_set().len() == 2 * k
}

/// Turns an expanded minor matching into an explicit minor: contract
/// `⋃S_i \ ⋃L_i` and delete everything outside `⋃S_i`.
pub fn matching_to_minor(h: &Clutter, m: &SemiMatching) -> Result<MinorWitness> {
    if !is_expanded_minor_matching(h, m) {
        return Err(Error::precondition(
            "input is not an expanded minor matching of the clutter",
        ));
    }
    let edge_union = m.edge_union();
    let witness = MinorWitness {
        delete: h.vertex_set().difference(&edge_union),
        contract: edge_union.difference(&m.pair_union()),
        matching: m.blocks(),
    };
    debug_assert!(witness.verify(h));
    Ok(witness)
}

pub fn find_kk2_minor(h: &Clutter, k: usize) -> Result<Option<MinorWitness>> {
    find_kk2_minor_with_budget(h, k, DEFAULT_MINOR_BUDGET)
}

/// Exact search for a `kK2` minor.
///
/// A `kK2` minor exists iff some expanded minor matching of size `k`
/// exists, and then `H[V \ (A ∪ B); B] ≅ kK2` with `A = ⋃L_i` (`|A| = 2k`)
/// and `B = ⋃S_i \ A` (`|B| ≤ (r-2)k`). We choose `k` disjoint pairs, each
/// inside some edge, then try every contraction set `B` of at most
/// `(r-2)k` vertices drawn from edges that meet `A` in exactly one pair.
pub fn find_kk2_minor_with_budget(
    h: &Clutter,
    k: usize,
    budget: usize,
) -> Result<Option<MinorWitness>> {
    let vertices = h.vertex_set();
    let r = h.rank().unwrap_or(0).max(2);
    let max_contract = (r - 2).saturating_mul(k);

    let mut candidates: Vec<EdgeSet> = h.iter().flat_map(|e| e.pairs()).collect();
    candidates.sort_unstable();
    candidates.dedup();

    let mut search = Search {
        h,
        vertices: &vertices,
        candidates: &candidates,
        k,
        max_contract,
        budget,
        evaluated: 0,
    };
    let mut chosen = Vec::with_capacity(k);
    search.choose_pairs(0, &mut chosen)
}

struct Search<'a> {
    h: &'a Clutter,
    vertices: &'a EdgeSet,
    candidates: &'a [EdgeSet],
    k: usize,
    max_contract: usize,
    budget: usize,
    evaluated: usize,
}

impl Search<'_> {
    fn choose_pairs(
        &mut self,
        start: usize,
        chosen: &mut Vec<EdgeSet>,
    ) -> Result<Option<MinorWitness>> {
        if chosen.len() == self.k {
            return self.try_contractions(chosen);
        }
        let remaining = self.k - chosen.len();
        for idx in start..self.candidates.len() {
            if self.candidates.len() - idx < remaining {
                break;
            }
            let cand = &self.candidates[idx];
            if chosen.iter().all(|p| p.is_disjoint(cand)) {
                chosen.push(cand.clone());
                if let Some(w) = self.choose_pairs(idx + 1, chosen)? {
                    return Ok(Some(w));
                }
                chosen.pop();
            }
        }
        Ok(None)
    }

    fn try_contractions(&mut self, pairs: &[EdgeSet]) -> Result<Option<MinorWitness>> {
        let a = EdgeSet::new(pairs.iter().flat_map(|p| p.iter()));
        // Every pair must survive as an edge, so it needs an edge S with
        // S ∩ A equal to that pair; the contracted vertices come from such edges.
        let mut pool: Vec<VertexId> = Vec::new();
        for p in pairs {
            let mut found = false;
            for s in self.h.iter().filter(|s| s.intersection(&a) == *p) {
                found = true;
                pool.extend(s.difference(&a).iter());
            }
            if !found {
                return Ok(None);
            }
        }
        let pool = EdgeSet::new(pool);
        let target = Clutter::minimalize(pairs.iter().cloned());
        let limit = self.max_contract.min(pool.len());

        for size in 0..=limit {
            let mut idx: Vec<usize> = (0..size).collect();
            loop {
                self.evaluated += 1;
                if self.evaluated > self.budget {
                    return Err(Error::ResourceLimit {
                        what: "kK2 minor search",
                        budget: self.budget,
                    });
                }
                let contract = EdgeSet::new(idx.iter().map(|&i| pool.as_slice()[i]));
                let delete = self.vertices.difference(&a.union(&contract));
                if self.h.restrict(&delete, &contract)? == target {
                    return Ok(Some(MinorWitness {
                        delete,
                        contract,
                        matching: pairs.to_vec(),
                    }));
                }
                if !next_combination(&mut idx, pool.len()) {
                    break;
                }
            }
        }
        Ok(None)
    }
}

/// Advances `idx` to the next `idx.len()`-combination of `0..n`.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in (i + 1)..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(sets: &[&[VertexId]]) -> Clutter {
        Clutter::from_slices(sets)
    }

    fn kk2(k: u32) -> Clutter {
        Clutter::minimalize((0..k).map(|i| EdgeSet::from([2 * i, 2 * i + 1])))
    }

    #[test]
    fn k_matching_recognizer() {
        assert!(is_k_matching(&c(&[&[1, 2], &[7, 9]]), 2));
        assert!(!is_k_matching(&c(&[&[1, 2], &[2, 3]]), 2));
        assert!(is_k_matching(&Clutter::zero(), 0));
        assert!(!is_k_matching(&Clutter::one(), 0));
        assert!(!is_k_matching(&c(&[&[1, 2, 3]]), 1));
    }

    #[test]
    fn matching_to_minor_examples() {
        let h = c(&[&[1, 2, 3], &[4, 5]]);
        let m = SemiMatching::from_slices(&[(&[1, 2], &[1, 2, 3]), (&[4, 5], &[4, 5])]).unwrap();
        let w = matching_to_minor(&h, &m).unwrap();
        assert_eq!(w.delete, EdgeSet::empty());
        assert_eq!(w.contract, EdgeSet::from([3]));
        assert_eq!(w.matching_clutter(), c(&[&[1, 2], &[4, 5]]));
        assert!(w.verify(&h));

        let h = kk2(3);
        let m = SemiMatching::from_slices(&[
            (&[0, 1], &[0, 1]),
            (&[2, 3], &[2, 3]),
            (&[4, 5], &[4, 5]),
        ])
        .unwrap();
        let w = matching_to_minor(&h, &m).unwrap();
        assert!(w.delete.is_empty() && w.contract.is_empty());
        assert_eq!(w.matching_clutter(), h);

        let h = c(&[&[1, 2, 3], &[4, 5], &[5, 9]]);
        let m = SemiMatching::from_slices(&[(&[1, 2], &[1, 2, 3])]).unwrap();
        let w = matching_to_minor(&h, &m).unwrap();
        assert!(w.delete.contains(9));
        assert!(w.verify(&h));
    }

    #[test]
    fn matching_to_minor_rejects_semi_matching() {
        let h = c(&[&[1, 3], &[2, 3, 4]]);
        let m = SemiMatching::from_slices(&[(&[1, 3], &[1, 3]), (&[2, 4], &[2, 3, 4])]).unwrap();
        assert!(matches!(
            matching_to_minor(&h, &m),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn matchings_contain_themselves() {
        for k in 0..=4 {
            let w = find_kk2_minor(&kk2(k), k as usize)
                .unwrap()
                .expect("witness");
            assert!(w.delete.is_empty() && w.contract.is_empty());
            assert!(w.verify(&kk2(k)));
        }
    }

    #[test]
    fn staircase_two_is_free() {
        let h = c(&[&[1, 3], &[2, 3, 4]]);
        assert_eq!(find_kk2_minor(&h, 2).unwrap(), None);
    }

    #[test]
    fn c6_has_an_induced_two_matching() {
        let c6 = c(&[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 6], &[6, 1]]);
        let w = find_kk2_minor(&c6, 2)
            .unwrap()
            .expect("C6 \\ {3,6} = {12,45}");
        assert!(w.verify(&c6));
        assert_eq!(find_kk2_minor(&c6, 3).unwrap(), None);
    }

    #[test]
    fn trivial_clutters() {
        assert!(find_kk2_minor(&Clutter::zero(), 0).unwrap().is_some());
        assert!(find_kk2_minor(&Clutter::one(), 0).unwrap().is_none());
        assert!(find_kk2_minor(&Clutter::zero(), 1).unwrap().is_none());
    }

    #[test]
    fn budget_is_enforced() {
        let h = kk2(4);
        assert!(find_kk2_minor_with_budget(&h, 4, 0)
            .unwrap_err()
            .is_resource_limit());
    }

    #[test]
    fn combinations() {
        let mut idx = vec![0, 1];
        let mut seen = vec![idx.clone()];
        while next_combination(&mut idx, 4) {
            seen.push(idx.clone());
        }
        assert_eq!(seen.len(), 6);
        let mut empty: Vec<usize> = vec![];
        assert!(!next_combination(&mut empty, 3));
    }
}
