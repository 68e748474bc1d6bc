//! Exact combinatorics of clutters (Sperner families).
//!
//! * [`Clutter`]: canonical antichains with deletion, contraction, join and
//!   meet.
//! * [`blocker`]: minimal transversals and maximal independent sets.
//! * [`matching`]: semi-matchings, expanded minor matchings, the expansion
//!   operator and an exact `kK2`-minor search.
//! * [`bounds`]: the blocker-size bound for `kK2`-minor-free clutters of
//!   bounded rank.
//! * [`reductions`]: Set Cover and SAT answered by scanning a blocker.
//!
//! Everything is a pure function over immutable values. The exponential
//! routines take explicit budgets and fail with
//! [`Error::ResourceLimit`] instead of running away.

pub mod blocker;
pub mod bounds;
pub mod clutter;
pub mod edge;
pub mod error;
pub mod generate;
pub mod laws;
pub mod matching;
pub mod reductions;

pub use blocker::{
    blocker, blocker_with_budget, is_transversal, maximal_independent_sets,
    maximal_independent_sets_with_budget,
};
pub use bounds::{class_membership, theorem1_bound, verify_bound, BoundParams, BoundReport};
pub use clutter::Clutter;
pub use edge::{EdgeSet, VertexId};
pub use error::{Error, Result};
