mod common;

use clutter_core::reductions::{
    cnf_to_clutter, setcover_to_clutter, solve_sat, solve_setcover, CnfFormula, NamedSet,
    Objective, SetCoverInstance,
};
use clutter_core::{blocker, Error};
use common::{brute_min_cost, brute_minimal_covers, brute_sat};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn arb_cnf(max_vars: u32, max_clauses: usize) -> impl Strategy<Value = CnfFormula> {
    (1..=max_vars).prop_flat_map(move |n| {
        let lit = (1..=n as i32, any::<bool>()).prop_map(|(v, neg)| if neg { -v } else { v });
        prop::collection::vec(prop::collection::vec(lit, 1..=3), 0..=max_clauses)
            .prop_map(move |cs| CnfFormula::new(n, cs).unwrap())
    })
}

fn arb_setcover(max_sets: usize, max_elems: u32) -> impl Strategy<Value = SetCoverInstance> {
    (1..=max_elems, 1..=max_sets).prop_flat_map(|(n, m)| {
        (
            prop::collection::vec(prop::collection::btree_set(1..=n, 0..=n as usize), m),
            prop::collection::vec(0i64..20, m),
            Just(n),
        )
            .prop_map(|(sets, weights, n)| {
                let named = sets
                    .into_iter()
                    .enumerate()
                    .map(|(i, s)| NamedSet {
                        name: format!("S{i}"),
                        elements: s.into_iter().collect(),
                    })
                    .collect();
                let w = weights
                    .into_iter()
                    .map(|x| BigRational::from_integer(x.into()))
                    .collect();
                SetCoverInstance::new(n, named, Some(w)).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sat_matches_truth_table(f in arb_cnf(10, 16)) {
        let got = solve_sat(&f).unwrap();
        prop_assert_eq!(got.is_some(), brute_sat(&f));
        if let Some(a) = got {
            prop_assert!(f.is_satisfied_by(&a));
        }
    }

    #[test]
    fn superset_clause_keeps_decision(f in arb_cnf(8, 10), pick in any::<prop::sample::Index>(), extra in 1i32..=8) {
        prop_assume!(!f.clauses().is_empty());
        let mut clauses = f.clauses().to_vec();
        let mut sup = clauses[pick.index(clauses.len())].clone();
        let lit = if extra as u32 <= f.num_vars() { extra } else { 1 };
        sup.push(lit);
        clauses.push(sup);
        let g = CnfFormula::new(f.num_vars(), clauses).unwrap();
        prop_assert_eq!(cnf_to_clutter(&g), cnf_to_clutter(&f));
        prop_assert_eq!(solve_sat(&g).unwrap().is_some(), solve_sat(&f).unwrap().is_some());
    }

    #[test]
    fn covers_are_the_blocker(inst in arb_setcover(8, 8)) {
        match setcover_to_clutter(&inst) {
            Err(Error::Infeasible { .. }) => prop_assert!(brute_minimal_covers(&inst).is_empty()),
            Err(e) => prop_assert!(false, "unexpected error {}", e),
            Ok(h) => {
                let b = blocker(&h).unwrap();
                let mut got: Vec<Vec<usize>> =
                    b.iter().map(|t| t.iter().map(|i| i as usize).collect()).collect();
                got.sort();
                prop_assert_eq!(got, brute_minimal_covers(&inst));
            }
        }
    }

    #[test]
    fn setcover_costs_match_brute_force(inst in arb_setcover(10, 12)) {
        let w = inst.weights().unwrap().to_vec();
        let card = brute_min_cost(&inst, 0usize, |_| 1);
        let weighted = brute_min_cost(&inst, BigRational::from_integer(BigInt::from(0)), |i| w[i].clone());
        match solve_setcover(&inst, Objective::Cardinality) {
            Err(Error::Infeasible { .. }) => prop_assert!(card.is_none()),
            Err(e) => prop_assert!(false, "unexpected error {}", e),
            Ok(c) => {
                prop_assert!(inst.is_cover(&c.sets));
                prop_assert_eq!(c.cost, BigRational::from_integer(BigInt::from(card.unwrap())));
                let cw = solve_setcover(&inst, Objective::Weighted).unwrap();
                prop_assert!(inst.is_cover(&cw.sets));
                prop_assert_eq!(cw.cost, weighted.unwrap());
            }
        }
    }
}

#[test]
fn pigeonhole_three_into_two_is_unsat() {
    // p_{i,j}: pigeon i in hole j, variable 2*(i-1)+j.
    let var = |i: i32, j: i32| 2 * (i - 1) + j;
    let mut clauses = Vec::new();
    for i in 1..=3 {
        clauses.push(vec![var(i, 1), var(i, 2)]);
    }
    for j in 1..=2 {
        for a in 1..=3 {
            for b in a + 1..=3 {
                clauses.push(vec![-var(a, j), -var(b, j)]);
            }
        }
    }
    let f = CnfFormula::new(6, clauses).unwrap();
    assert!(!brute_sat(&f));
    assert_eq!(solve_sat(&f).unwrap(), None);
}
