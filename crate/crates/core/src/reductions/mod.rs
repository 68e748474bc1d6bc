//! Problems whose answers can be read from a blocker.
//!
//! Both reductions build a clutter from the instance, compute its blocker
//! exactly, and scan the blocker's sets for the answer.

mod sat;
mod setcover;

pub use sat::{cnf_to_clutter, literal_vertex, solve_sat, Assignment, CnfFormula, Literal};
pub use setcover::{
    parse_rational, setcover_to_clutter, solve_setcover, spot_check_monotone, Cover,
    MonotoneOracle, NamedSet, Objective, SetCoverInstance,
};
