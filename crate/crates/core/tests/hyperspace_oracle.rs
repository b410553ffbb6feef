//! The materialized lift against a pointwise construction, and the cluster
//! condition against bicompleteness of the lift.

use proptest::prelude::*;

use qubench::filters;
use qubench::hyperspace::{cluster_condition_check, hyper_point, lift};
use qubench::relcore::{preorders, PointSet, QUSpace, Relation};
use qubench::workbench::gen_space;
use qubench::Exec;

/// `U_H` built from its definition, one hyper-pair at a time.
fn lifted_by_definition(u: &Relation) -> Relation {
    let n = u.size();
    let hyper = (1usize << n) - 1;
    let rows = (0..hyper)
        .map(|i| {
            let a = hyper_point(n, i);
            PointSet::from_points(
                hyper,
                (0..hyper).filter(|&j| {
                    let b = hyper_point(n, j);
                    b.iter().all(|y| a.iter().any(|x| u.contains(x, y)))
                        && a.iter().all(|x| b.iter().any(|y| u.contains(x, y)))
                }),
            )
        })
        .collect();
    Relation::from_rows(rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lift_matches_definition(n in 1usize..5, k in 1usize..4, seed in any::<u64>()) {
        let space = gen_space(n, k, seed).unwrap().space;
        let lifted = lift(&space, 8, Exec::Parallel).unwrap();
        for (u, uh) in space.base().iter().zip(lifted.base()) {
            prop_assert_eq!(uh, &lifted_by_definition(u));
        }
        prop_assert_eq!(lifted.min_entourage(), &lifted_by_definition(space.min_entourage()));
    }

    #[test]
    fn cluster_condition_iff_lift_bicomplete(n in 1usize..5, k in 1usize..3, seed in any::<u64>()) {
        let space = gen_space(n, k, seed).unwrap().space;
        let v = cluster_condition_check(&space, 8, Exec::Sequential).unwrap();
        let bicomplete = filters::is_bicomplete(&lift(&space, 8, Exec::Sequential).unwrap());
        prop_assert_eq!(v.holds, bicomplete);
        prop_assert!(v.consistent());
    }
}

#[test]
fn sequential_and_parallel_lifts_agree() {
    for r in preorders(3) {
        let space = QUSpace::from_base(3, vec![r]).unwrap();
        assert_eq!(
            lift(&space, 3, Exec::Sequential).unwrap(),
            lift(&space, 3, Exec::Parallel).unwrap()
        );
    }
}
