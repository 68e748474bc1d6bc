//! The blocker-size bound for `(k+1)K2`-minor-free clutters of rank `r`:
//!
//! ```text
//! |b(H)| ≤ Σ_{m=0}^{k·(2r-3)·2^(r-2)} C(|H|, m) · C(r, 2)^m
//! ```

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::blocker::blocker;
use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::matching::find_kk2_minor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundParams {
    edge_count: usize,
    r: u32,
    k: u32,
}

impl BoundParams {
    pub fn new(edge_count: usize, r: u32, k: u32) -> Result<Self> {
        if r < 2 {
            return Err(Error::Domain(format!(
                "rank bound must be at least 2, got {r}"
            )));
        }
        Ok(BoundParams { edge_count, r, k })
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn k(&self) -> u32 {
        self.k
    }
}

/// `(2r-3)·2^(r-2)`, the linear factor in the summation limit.
pub fn matching_factor(r: u32) -> BigUint {
    assert!(r >= 2);
    BigUint::from(2 * r - 3) << (r - 2)
}

fn binomial(n: usize, m: usize) -> BigUint {
    if m > n {
        return BigUint::zero();
    }
    let m = m.min(n - m);
    let mut acc = BigUint::one();
    for i in 0..m {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn theorem1_bound(p: &BoundParams) -> BigUint {
    let limit = matching_factor(p.r) * BigUint::from(p.k);
    // terms with m > |H| vanish
    let upper = limit
        .to_usize()
        .map_or(p.edge_count, |l| l.min(p.edge_count));
    let pairs = BigUint::from(p.r) * BigUint::from(p.r - 1) / BigUint::from(2u32);

    let mut sum = BigUint::zero();
    let mut choose = BigUint::one();
    let mut power = BigUint::one();
    for m in 0..=upper {
        if m > 0 {
            choose = choose * BigUint::from(p.edge_count - m + 1) / BigUint::from(m);
            power *= &pairs;
        }
        sum += &choose * &power;
    }
    debug_assert_eq!(choose, binomial(p.edge_count, upper));
    sum
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub params: BoundParams,
    #[serde(serialize_with = "as_decimal")]
    pub bound: BigUint,
    pub observed_blocker_size: Option<usize>,
    pub within_bound: Option<bool>,
}

fn as_decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

/// Membership in `C_{r,k}`: rank at most `r` and no `kK2` minor.
pub fn class_membership(h: &Clutter, r: usize, k: usize) -> Result<bool> {
    if h.is_zero() {
        return Err(Error::precondition(
            "class membership is undefined for the empty clutter",
        ));
    }
    if h.rank()? > r {
        return Ok(false);
    }
    Ok(find_kk2_minor(h, k)?.is_none())
}

/// Computes `|b(H)|` and the bound at `(|H|, max(rk(H), 2), k)` for a
/// clutter with no `(k+1)K2` minor. Rank 0 and 1 clutters are evaluated at
/// `r = 2`, which they satisfy as an upper rank bound.
pub fn verify_bound(h: &Clutter, k: usize) -> Result<BoundReport> {
    if h.is_zero() {
        return Err(Error::precondition(
            "bound is undefined for the empty clutter",
        ));
    }
    if find_kk2_minor(h, k + 1)?.is_some() {
        return Err(Error::NotInClass { k: k + 1 });
    }
    let r = h.rank()?.max(2);
    let params = BoundParams::new(
        h.len(),
        u32::try_from(r).map_err(|_| Error::Domain("rank too large".into()))?,
        u32::try_from(k).map_err(|_| Error::Domain("k too large".into()))?,
    )?;
    let bound = theorem1_bound(&params);
    let observed = blocker(h)?.len();
    Ok(BoundReport {
        params,
        within_bound: Some(BigUint::from(observed) <= bound),
        observed_blocker_size: Some(observed),
        bound,
    })
}

/// A report carrying only the bound.
pub fn bound_report(p: BoundParams) -> BoundReport {
    BoundReport {
        bound: theorem1_bound(&p),
        params: p,
        observed_blocker_size: None,
        within_bound: None,
    }
}
