use crate::clutter::Clutter;
use crate::edge::EdgeSet;
use crate::error::{Error, Result};

use super::expansion::expansion;
use super::{SemiMatching, SemiMatchingPair};

/// Default cap on the number of semi-matchings an enumeration may produce.
pub const DEFAULT_ENUMERATION_BUDGET: usize = 1_000_000;

/// Conditions 1 and 3a (condition 2 is a type invariant).
fn satisfies_structure(h: &Clutter, m: &SemiMatching) -> bool {
    let edges_present = m.iter().all(|p| h.contains_edge(p.edge()));
    let no_pair_inside_other_edge = m.iter().enumerate().all(|(i, p)| {
        m.iter()
            .enumerate()
            .all(|(j, q)| i == j || !p.pair().is_subset(q.edge()))
    });
    edges_present && no_pair_inside_other_edge
}

/// Condition 4: every edge inside `⋃ S_i` contains some `L_i`.
pub fn satisfies_condition_four(h: &Clutter, m: &SemiMatching) -> bool {
    let union = m.edge_union();
    h.iter()
        .filter(|s| s.is_subset(&union))
        .all(|s| m.iter().any(|p| p.pair().is_subset(s)))
}

pub fn is_semi_matching(h: &Clutter, m: &SemiMatching) -> bool {
    satisfies_structure(h, m) && satisfies_condition_four(h, m)
}

/// A semi-matching that also satisfies 3b: `L_i ∩ S_j = ∅` for `i ≠ j`.
pub fn is_expanded_minor_matching(h: &Clutter, m: &SemiMatching) -> bool {
    let separated = m.iter().enumerate().all(|(i, p)| {
        m.iter()
            .enumerate()
            .all(|(j, q)| i == j || p.pair().is_disjoint(q.edge()))
    });
    separated && is_semi_matching(h, m)
}

/// Candidate `(L, S)` pairs ordered by `L`, then `S`.
fn candidate_pairs(h: &Clutter) -> Vec<SemiMatchingPair> {
    let mut out: Vec<SemiMatchingPair> = h
        .iter()
        .flat_map(|s| {
            s.pairs().map(move |l| SemiMatchingPair {
                pair: l,
                edge: s.clone(),
            })
        })
        .collect();
    out.sort();
    out
}

/// Depth-first walk over all families satisfying 1, 2 and 3a, calling
/// `visit` on those that also satisfy 4. Families are grown in candidate
/// order, so each is visited once with its pairs already sorted.
fn walk<F>(h: &Clutter, mut visit: F) -> Result<()>
where
    F: FnMut(&[SemiMatchingPair]) -> Result<()>,
{
    let candidates = candidate_pairs(h);
    let mut current: Vec<SemiMatchingPair> = Vec::new();

    fn compatible(a: &SemiMatchingPair, b: &SemiMatchingPair) -> bool {
        a.pair.is_disjoint(&b.pair) && !a.pair.is_subset(&b.edge) && !b.pair.is_subset(&a.edge)
    }

    fn rec<F>(
        h: &Clutter,
        candidates: &[SemiMatchingPair],
        start: usize,
        current: &mut Vec<SemiMatchingPair>,
        visit: &mut F,
    ) -> Result<()>
    where
        F: FnMut(&[SemiMatchingPair]) -> Result<()>,
    {
        if satisfies_condition_four(h, &SemiMatching::from_sorted(current.clone())) {
            visit(current)?;
        }
        for idx in start..candidates.len() {
            let cand = &candidates[idx];
            if current.iter().all(|p| compatible(p, cand)) {
                current.push(cand.clone());
                rec(h, candidates, idx + 1, current, visit)?;
                current.pop();
            }
        }
        Ok(())
    }

    rec(h, &candidates, 0, &mut current, &mut visit)
}

pub fn enumerate_semi_matchings(h: &Clutter) -> Result<Vec<SemiMatching>> {
    enumerate_semi_matchings_with_budget(h, DEFAULT_ENUMERATION_BUDGET)
}

/// All semi-matchings of `h`, the empty one included, sorted by size and
/// then lexicographically.
pub fn enumerate_semi_matchings_with_budget(
    h: &Clutter,
    budget: usize,
) -> Result<Vec<SemiMatching>> {
    let mut out = Vec::new();
    walk(h, |pairs| {
        if out.len() >= budget {
            return Err(Error::ResourceLimit {
                what: "semi-matching enumeration",
                budget,
            });
        }
        out.push(SemiMatching::from_sorted(pairs.to_vec()));
        Ok(())
    })?;
    out.sort();
    Ok(out)
}

/// Number of semi-matchings, without materializing them.
pub fn count_semi_matchings(h: &Clutter, budget: usize) -> Result<usize> {
    let mut n = 0usize;
    walk(h, |_| {
        if n >= budget {
            return Err(Error::ResourceLimit {
                what: "semi-matching enumeration",
                budget,
            });
        }
        n += 1;
        Ok(())
    })?;
    Ok(n)
}

/// Lifts a semi-matching of `H ∘ ({R}, C)` back to `H` by adding `(R, C)`
/// and replacing each `S'_i` with the least edge `S_i` of `H` (canonical
/// order) such that `S'_i ⊆ S_i ⊆ S'_i ∪ C` and `R ⊄ S_i`.
pub fn extend_semi_matching(
    m_prime: &SemiMatching,
    h: &Clutter,
    r: &EdgeSet,
    c: &EdgeSet,
) -> Result<SemiMatching> {
    if r.len() != 2 {
        return Err(Error::precondition(format!(
            "{r} must have exactly two vertices"
        )));
    }
    if !r.is_subset(c) {
        return Err(Error::precondition(format!("{r} is not inside {c}")));
    }
    if !h.contains_edge(c) {
        return Err(Error::precondition(format!(
            "{c} is not an edge of the clutter"
        )));
    }
    let expanded = expansion(h, std::slice::from_ref(r), c)?;
    if !is_semi_matching(&expanded, m_prime) {
        return Err(Error::InvalidInput(
            "input is not a semi-matching of the expanded clutter".into(),
        ));
    }

    let mut pairs = Vec::with_capacity(m_prime.len() + 1);
    for p in m_prime {
        let upper = p.edge().union(c);
        let lifted = h
            .iter()
            .find(|s| p.edge().is_subset(s) && s.is_subset(&upper) && !r.is_subset(s))
            .ok_or_else(|| {
                Error::precondition(format!("no edge of the clutter lifts {}", p.edge()))
            })?;
        pairs.push(SemiMatchingPair::new(p.pair().clone(), lifted.clone())?);
    }
    pairs.push(SemiMatchingPair::new(r.clone(), c.clone())?);
    SemiMatching::new(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edge::VertexId;

    fn c(sets: &[&[VertexId]]) -> Clutter {
        Clutter::from_slices(sets)
    }

    fn c6() -> Clutter {
        c(&[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 6], &[6, 1]])
    }

    fn sm(pairs: &[(&[VertexId], &[VertexId])]) -> SemiMatching {
        SemiMatching::from_slices(pairs).unwrap()
    }

    #[test]
    fn matching_is_semi_matching() {
        let h = c(&[&[1, 2], &[3, 4], &[5, 6]]);
        let m = sm(&[(&[1, 2], &[1, 2]), (&[3, 4], &[3, 4]), (&[5, 6], &[5, 6])]);
        assert!(is_semi_matching(&h, &m));
        assert!(is_expanded_minor_matching(&h, &m));
    }

    #[test]
    fn staircase_two() {
        // a1 = 1, a2 = 2, b1 = 3, b2 = 4
        let h = c(&[&[1, 3], &[2, 3, 4]]);
        let m = sm(&[(&[1, 3], &[1, 3]), (&[2, 4], &[2, 3, 4])]);
        assert!(is_semi_matching(&h, &m));
        assert!(!is_expanded_minor_matching(&h, &m));
    }

    #[test]
    fn c6_condition_four_fails() {
        let m = sm(&[(&[1, 2], &[1, 2]), (&[3, 4], &[3, 4])]);
        assert!(!is_semi_matching(&c6(), &m));
    }

    #[test]
    fn expanded_minor_matching_with_large_edge() {
        let h = c(&[&[1, 2, 3], &[4, 5]]);
        let m = sm(&[(&[1, 2], &[1, 2, 3]), (&[4, 5], &[4, 5])]);
        assert!(is_expanded_minor_matching(&h, &m));
    }

    #[test]
    fn edge_outside_host_is_rejected() {
        let m = sm(&[(&[1, 2], &[1, 2, 7])]);
        assert!(!is_semi_matching(&c6(), &m));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(
            enumerate_semi_matchings(&Clutter::zero()).unwrap(),
            vec![SemiMatching::empty()]
        );
        assert_eq!(
            enumerate_semi_matchings(&c(&[&[1, 2], &[3, 4]]))
                .unwrap()
                .len(),
            4
        );
        let all = enumerate_semi_matchings(&c6()).unwrap();
        assert_eq!(all.len(), 10);
        assert_eq!(all.iter().filter(|m| m.len() == 2).count(), 3);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(count_semi_matchings(&c6(), 100).unwrap(), 10);
    }

    #[test]
    fn enumeration_budget() {
        assert!(enumerate_semi_matchings_with_budget(&c6(), 5)
            .unwrap_err()
            .is_resource_limit());
        assert!(count_semi_matchings(&c6(), 9)
            .unwrap_err()
            .is_resource_limit());
    }

    #[test]
    fn extension_example() {
        let h = c(&[&[1, 2], &[3, 4, 5]]);
        let m_prime = sm(&[(&[1, 2], &[1, 2])]);
        let out = extend_semi_matching(
            &m_prime,
            &h,
            &EdgeSet::from([3, 4]),
            &EdgeSet::from([3, 4, 5]),
        )
        .unwrap();
        assert_eq!(out, sm(&[(&[1, 2], &[1, 2]), (&[3, 4], &[3, 4, 5])]));
        assert!(is_semi_matching(&h, &out));
    }

    #[test]
    fn extension_of_empty() {
        let h = c(&[&[1, 2], &[3, 4, 5]]);
        let out = extend_semi_matching(
            &SemiMatching::empty(),
            &h,
            &EdgeSet::from([4, 5]),
            &EdgeSet::from([3, 4, 5]),
        )
        .unwrap();
        assert_eq!(out, sm(&[(&[4, 5], &[3, 4, 5])]));
    }

    #[test]
    fn extension_preconditions() {
        let h = c(&[&[1, 2], &[3, 4, 5]]);
        let empty = SemiMatching::empty();
        assert!(
            extend_semi_matching(&empty, &h, &EdgeSet::from([3]), &EdgeSet::from([3, 4, 5]))
                .is_err()
        );
        assert!(extend_semi_matching(
            &empty,
            &h,
            &EdgeSet::from([1, 3]),
            &EdgeSet::from([3, 4, 5])
        )
        .is_err());
        assert!(
            extend_semi_matching(&empty, &h, &EdgeSet::from([3, 4]), &EdgeSet::from([3, 4]))
                .is_err()
        );
        let bogus = sm(&[(&[1, 2], &[1, 2, 3])]);
        assert!(matches!(
            extend_semi_matching(
                &bogus,
                &h,
                &EdgeSet::from([3, 4]),
                &EdgeSet::from([3, 4, 5])
            ),
            Err(Error::InvalidInput(_))
        ));
    }
}
