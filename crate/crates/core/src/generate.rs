//! Clutter families used throughout the tests and by the `gen` command.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clutter::Clutter;
use crate::edge::{EdgeSet, VertexId};
use crate::error::{Error, Result};

/// `kK2 = {{2i, 2i+1} : i < k}`.
pub fn kk2(k: u32) -> Clutter {
    Clutter::minimalize((0..k).map(|i| EdgeSet::from([2 * i, 2 * i + 1])))
}

/// The staircase clutter `S_i = {a_i} ∪ {b_1, ..., b_i}` for `i = 1..=n`,
/// with `a_i` labelled `i` and `b_j` labelled `n + j`.
pub fn staircase(n: u32) -> Result<Clutter> {
    if n == 0 {
        return Err(Error::Domain("staircase size must be positive".into()));
    }
    Ok(Clutter::minimalize((1..=n).map(|i| {
        EdgeSet::new(std::iter::once(i).chain((1..=i).map(|j| n + j)))
    })))
}

/// `m` edges over `{1..=n}`, each of uniformly random size in `1..=min(r, n)`,
/// then minimalized. Deterministic in `seed`.
pub fn random(n: u32, m: usize, r: u32, seed: u64) -> Result<Clutter> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_with(&mut rng, n, m, r)
}

/// Same as [`random`] but drawing from a caller-owned generator.
pub fn random_with<R: Rng + ?Sized>(rng: &mut R, n: u32, m: usize, r: u32) -> Result<Clutter> {
    if n == 0 || r == 0 {
        return Err(Error::Domain(
            "random clutter needs n >= 1 and r >= 1".into(),
        ));
    }
    let max_size = r.min(n) as usize;
    let edges: Vec<EdgeSet> = (0..m)
        .map(|_| {
            let size = rng.gen_range(1..=max_size);
            sample(rng, n as usize, size)
                .into_iter()
                .map(|i| i as VertexId + 1)
                .collect()
        })
        .collect();
    Ok(Clutter::minimalize(edges))
}
