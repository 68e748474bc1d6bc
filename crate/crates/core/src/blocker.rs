//! Minimal transversals.
//!
//! The blocker is the meet of the singleton clutters `{{s} : s in S}` over
//! all edges `S`. We fold one edge at a time (Berge's scheme): transversals
//! that already hit the new edge survive unchanged, the others are extended
//! by one vertex of the edge, and an extension is kept only if it contains
//! no surviving transversal through the added vertex. That test is exactly
//! the minimalization of the meet, restricted to the only comparisons that
//! can succeed.

use crate::clutter::Clutter;
use crate::edge::EdgeSet;
use crate::error::{Error, Result};

/// Default cap on the number of sets held by one intermediate fold step.
pub const DEFAULT_BLOCKER_BUDGET: usize = 1_000_000;

pub fn blocker(h: &Clutter) -> Result<Clutter> {
    blocker_with_budget(h, DEFAULT_BLOCKER_BUDGET)
}

pub fn blocker_with_budget(h: &Clutter, budget: usize) -> Result<Clutter> {
    let mut acc = Clutter::one();
    for edge in h {
        acc = fold_edge(&acc, edge, budget)?;
    }
    Ok(acc)
}

fn fold_edge(acc: &Clutter, edge: &EdgeSet, budget: usize) -> Result<Clutter> {
    let (kept, missing): (Vec<&EdgeSet>, Vec<&EdgeSet>) =
        acc.iter().partition(|t| t.intersects(edge));

    let generated = kept
        .len()
        .saturating_add(missing.len().saturating_mul(edge.len()));
    if generated > budget {
        return Err(Error::ResourceLimit {
            what: "intermediate blocker size",
            budget,
        });
    }

    // Surviving transversals through each vertex of the new edge.
    let through: Vec<Vec<&EdgeSet>> = edge
        .iter()
        .map(|s| kept.iter().copied().filter(|t| t.contains(s)).collect())
        .collect();

    let mut out: Vec<EdgeSet> = kept.iter().map(|t| (*t).clone()).collect();
    for t in &missing {
        for (s, witnesses) in edge.iter().zip(&through) {
            let candidate = t.with(s);
            if !witnesses.iter().any(|w| w.is_subset(&candidate)) {
                out.push(candidate);
            }
        }
    }
    out.sort_unstable();
    Ok(Clutter::from_canonical(out))
}

/// True iff `t` meets every edge of `h`.
pub fn is_transversal(h: &Clutter, t: &EdgeSet) -> bool {
    h.iter().all(|e| e.intersects(t))
}

/// Maximal independent sets of `h` inside `V(h)`: the complements of the
/// blocker's sets. They form a clutter, returned in canonical order.
pub fn maximal_independent_sets(h: &Clutter) -> Result<Clutter> {
    maximal_independent_sets_with_budget(h, DEFAULT_BLOCKER_BUDGET)
}

pub fn maximal_independent_sets_with_budget(h: &Clutter, budget: usize) -> Result<Clutter> {
    let universe = h.vertex_set();
    let b = blocker_with_budget(h, budget)?;
    Ok(Clutter::minimalize(
        b.iter().map(|t| universe.difference(t)),
    ))
}
