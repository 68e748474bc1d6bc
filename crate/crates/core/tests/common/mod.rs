//! Brute-force oracles shared by the integration tests. They only use the
//! library for data types and canonical ordering, never for the operation
//! under test.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use clutter_core::reductions::{CnfFormula, SetCoverInstance};
use clutter_core::{Clutter, EdgeSet, VertexId};
use proptest::prelude::*;

pub fn arb_clutter(n: u32, max_edges: usize, max_rank: usize) -> impl Strategy<Value = Clutter> {
    let edges = prop::collection::vec(
        prop::collection::btree_set(1..=n, 1..=max_rank),
        0..=max_edges,
    )
    .prop_map(|es| Clutter::minimalize(es.into_iter().map(EdgeSet::new)));
    prop_oneof![
        1 => Just(Clutter::zero()),
        1 => Just(Clutter::one()),
        18 => edges,
    ]
}

pub fn arb_nonempty_clutter(
    n: u32,
    max_edges: usize,
    max_rank: usize,
) -> impl Strategy<Value = Clutter> {
    prop::collection::vec(
        prop::collection::btree_set(1..=n, 1..=max_rank),
        1..=max_edges,
    )
    .prop_map(|es| Clutter::minimalize(es.into_iter().map(EdgeSet::new)))
}

fn vertices(h: &Clutter) -> Vec<VertexId> {
    h.iter()
        .flat_map(|e| e.iter())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

fn hits_all(h: &Clutter, t: &BTreeSet<VertexId>) -> bool {
    h.iter().all(|e| e.iter().any(|v| t.contains(&v)))
}

/// Minimal transversals by enumerating every subset of `V(H)`.
pub fn brute_blocker(h: &Clutter) -> Clutter {
    let vs = vertices(h);
    assert!(vs.len() <= 16, "oracle is exponential");
    let mut out = Vec::new();
    for mask in 0u32..(1 << vs.len()) {
        let t: BTreeSet<VertexId> = (0..vs.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| vs[i])
            .collect();
        if !hits_all(h, &t) {
            continue;
        }
        let minimal = t.iter().all(|x| {
            let mut smaller = t.clone();
            smaller.remove(x);
            !hits_all(h, &smaller)
        });
        if minimal {
            out.push(EdgeSet::new(t));
        }
    }
    Clutter::minimalize(out)
}

fn is_matching_clutter(h: &Clutter, k: usize) -> bool {
    if h.len() != k || h.iter().any(|e| e.len() != 2) {
        return false;
    }
    let mut seen = BTreeSet::new();
    h.iter().flat_map(|e| e.iter()).all(|v| seen.insert(v))
}

fn delete_one(h: &Clutter, v: VertexId) -> Clutter {
    Clutter::minimalize(h.iter().filter(|e| !e.iter().any(|x| x == v)).cloned())
}

fn contract_one(h: &Clutter, v: VertexId) -> Clutter {
    Clutter::minimalize(h.iter().map(|e| EdgeSet::new(e.iter().filter(|&x| x != v))))
}

/// Every minor reachable by single-vertex deletions and contractions.
pub fn minor_closure(h: &Clutter) -> HashSet<Clutter> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(h.clone());
    queue.push_back(h.clone());
    while let Some(cur) = queue.pop_front() {
        for v in vertices(&cur) {
            for next in [delete_one(&cur, v), contract_one(&cur, v)] {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

pub fn brute_has_kk2_minor(h: &Clutter, k: usize) -> bool {
    minor_closure(h).iter().any(|m| is_matching_clutter(m, k))
}

/// A semi-matching as plain `(pair, edge)` vectors, sorted.
pub type PlainMatching = Vec<(Vec<VertexId>, Vec<VertexId>)>;

/// All semi-matchings by testing every subfamily of candidate pairs.
pub fn brute_semi_matchings(h: &Clutter) -> Vec<PlainMatching> {
    let mut cands: Vec<(Vec<VertexId>, Vec<VertexId>)> = Vec::new();
    for s in h.iter() {
        let e: Vec<VertexId> = s.iter().collect();
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                cands.push((vec![e[i], e[j]], e.clone()));
            }
        }
    }
    assert!(cands.len() <= 20, "oracle is exponential");
    let mut out = Vec::new();
    for mask in 0u32..(1 << cands.len()) {
        let fam: Vec<&(Vec<VertexId>, Vec<VertexId>)> = (0..cands.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| &cands[i])
            .collect();
        if is_plain_semi_matching(h, &fam) {
            let mut plain: PlainMatching = fam.into_iter().cloned().collect();
            plain.sort();
            out.push(plain);
        }
    }
    out.sort();
    out
}

fn subset(a: &[VertexId], b: &[VertexId]) -> bool {
    a.iter().all(|x| b.contains(x))
}

fn is_plain_semi_matching(h: &Clutter, fam: &[&(Vec<VertexId>, Vec<VertexId>)]) -> bool {
    for (i, a) in fam.iter().enumerate() {
        for (j, b) in fam.iter().enumerate() {
            if i == j {
                continue;
            }
            if a.0.iter().any(|x| b.0.contains(x)) || subset(&a.0, &b.1) {
                return false;
            }
        }
    }
    let union: Vec<VertexId> = fam.iter().flat_map(|p| p.1.iter().copied()).collect();
    h.iter().all(|f| {
        let f: Vec<VertexId> = f.iter().collect();
        !subset(&f, &union) || fam.iter().any(|p| subset(&p.0, &f))
    })
}

pub fn brute_sat(f: &CnfFormula) -> bool {
    let n = f.num_vars();
    (0u32..(1 << n)).any(|mask| {
        f.clauses().iter().all(|c| {
            c.iter().any(|&l| {
                let value = mask >> (l.unsigned_abs() - 1) & 1 == 1;
                value == (l > 0)
            })
        })
    })
}

fn covers(inst: &SetCoverInstance, mask: u32) -> bool {
    (1..=inst.universe_size()).all(|u| {
        inst.sets()
            .iter()
            .enumerate()
            .any(|(i, s)| mask >> i & 1 == 1 && s.elements.contains(&u))
    })
}

/// Inclusion-minimal covers as sorted index lists.
pub fn brute_minimal_covers(inst: &SetCoverInstance) -> Vec<Vec<usize>> {
    let m = inst.sets().len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << m) {
        if covers(inst, mask)
            && (0..m).all(|i| mask >> i & 1 == 0 || !covers(inst, mask & !(1 << i)))
        {
            out.push((0..m).filter(|i| mask >> i & 1 == 1).collect());
        }
    }
    out.sort();
    out
}

/// Minimum cost over all covering subfamilies, with the given per-set cost.
pub fn brute_min_cost<T: Clone + Ord + std::ops::Add<Output = T>>(
    inst: &SetCoverInstance,
    zero: T,
    cost: impl Fn(usize) -> T,
) -> Option<T> {
    let m = inst.sets().len();
    (0u32..(1 << m))
        .filter(|&mask| covers(inst, mask))
        .map(|mask| {
            (0..m)
                .filter(|i| mask >> i & 1 == 1)
                .fold(zero.clone(), |acc, i| acc + cost(i))
        })
        .min()
}
