use crate::clutter::Clutter;
use crate::edge::EdgeSet;
use crate::error::{Error, Result};

/// Default cap on the number of choice functions an expansion may visit.
pub const DEFAULT_EXPANSION_BUDGET: usize = 1 << 20;

/// The expansion `H ∘ ({R_i}, C)`: the join, over every choice of one vertex
/// from each block, of `H[chosen; C \ chosen]`.
pub fn expansion(h: &Clutter, blocks: &[EdgeSet], c: &EdgeSet) -> Result<Clutter> {
    expansion_with_budget(h, blocks, c, DEFAULT_EXPANSION_BUDGET)
}

pub fn expansion_with_budget(
    h: &Clutter,
    blocks: &[EdgeSet],
    c: &EdgeSet,
    budget: usize,
) -> Result<Clutter> {
    for (i, r) in blocks.iter().enumerate() {
        if !r.is_subset(c) {
            return Err(Error::precondition(format!("block {r} is not inside {c}")));
        }
        if let Some(q) = blocks[i + 1..].iter().find(|q| q.intersects(r)) {
            return Err(Error::precondition(format!("blocks {r} and {q} overlap")));
        }
    }
    let count = blocks
        .iter()
        .try_fold(1usize, |acc, r| acc.checked_mul(r.len()));
    match count {
        Some(n) if n <= budget => {}
        _ => {
            return Err(Error::ResourceLimit {
                what: "choice functions in expansion",
                budget,
            })
        }
    }
    if blocks.iter().any(EdgeSet::is_empty) {
        return Ok(Clutter::zero());
    }

    let mut parts = Vec::new();
    let mut digits = vec![0usize; blocks.len()];
    loop {
        let image = EdgeSet::new(blocks.iter().zip(&digits).map(|(r, &d)| r.as_slice()[d]));
        let contracted = c.difference(&image);
        parts.extend(h.restrict(&image, &contracted)?.into_edges());

        // odometer over the blocks
        let mut pos = 0;
        loop {
            if pos == blocks.len() {
                return Ok(Clutter::minimalize(parts));
            }
            digits[pos] += 1;
            if digits[pos] < blocks[pos].len() {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}
