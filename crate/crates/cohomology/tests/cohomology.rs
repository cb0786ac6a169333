mod common;

use std::sync::Arc;

use cohomology::*;
use exact_linalg::{FinAbGroup, IntMatrix};
use group_core::catalog::{abelian, cyclic, small_groups, symmetric};
use group_core::{subgroup_reps, FiniteGroup, Subgroup};
use lattice_core::{direct_sum, induced_lattice, regular_lattice, Lattice};
use proptest::prelude::*;

fn c2() -> Arc<FiniteGroup> {
    Arc::new(cyclic(2))
}

fn z2() -> FinAbGroup {
    FinAbGroup::cyclic(2)
}

#[test]
fn hat0_examples() {
    let g = c2();
    let whole = Subgroup::whole(&g);
    assert_eq!(tate_hat0(&whole, &Lattice::trivial(&g, 1)), z2());
    assert!(tate_hat0(&whole, &Lattice::from_signs(&g, &[-1]).unwrap()).is_trivial());
    for (_, g) in small_groups(12) {
        let g = Arc::new(g);
        let reg = regular_lattice(&g);
        for h in subgroup_reps(&g).unwrap() {
            assert!(tate_hat0(&h, &reg).is_trivial());
        }
    }
}

#[test]
fn hat_minus1_examples() {
    let g = c2();
    let whole = Subgroup::whole(&g);
    let sign = Lattice::from_signs(&g, &[-1]).unwrap();
    assert_eq!(tate_hat_minus1(&whole, &sign), z2());

    let c3 = Arc::new(cyclic(3));
    let m = Lattice::new(c3.clone(), vec![IntMatrix::from_rows(&[[0, -1], [1, -1]])]).unwrap();
    let h = Subgroup::whole(&c3);
    assert_eq!(tate_hat_minus1(&h, &m), bar_oracle(&h, &m, Degree::MinusOne).unwrap());
    assert_eq!(tate_hat_minus1(&h, &m), FinAbGroup::cyclic(3));
}

#[test]
fn h1_examples() {
    let g = c2();
    let whole = Subgroup::whole(&g);
    assert!(h1_cocycles(&whole, &Lattice::trivial(&g, 1)).unwrap().is_trivial());
    let sign = Lattice::from_signs(&g, &[-1]).unwrap();
    assert_eq!(h1_cocycles(&whole, &sign).unwrap(), z2());
    assert_eq!(h1_cocycles(&whole, &sign).unwrap(), tate_hat_minus1(&whole, &sign));
    let s3 = Arc::new(symmetric(3));
    let reg = regular_lattice(&s3);
    for h in subgroup_reps(&s3).unwrap() {
        assert!(h1_cocycles(&h, &reg).unwrap().is_trivial());
    }
}

#[test]
fn h1_cap() {
    let g = c2();
    let r = h1_cocycles_capped(&Subgroup::whole(&g), &Lattice::trivial(&g, 3), 4);
    assert!(matches!(r, Err(CohomologyError::CapExceeded { .. })));
}

#[test]
fn classify_examples() {
    let g = c2();
    let r = classify(&regular_lattice(&g)).unwrap();
    assert!(r.flabby && r.coflabby);
    let r = classify(&Lattice::from_signs(&g, &[-1]).unwrap()).unwrap();
    assert!(!r.flabby && !r.coflabby);
    let top = r.entries.iter().find(|e| e.order == 2).unwrap();
    assert_eq!(top.hat_minus1, z2());
    assert_eq!(top.key, "2.1");
    let text = r.to_string();
    assert!(text.contains("flabby: no"));
    let json = serde_json::to_string(&r).unwrap();
    let back: CohomologyReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, r);
}

#[test]
fn classify_is_independent_of_jobs() {
    let g = Arc::new(abelian(&[2, 2]));
    let mut rng = common::rng(1);
    let m = common::random_lattice(&mut rng, &g, 6);
    assert_eq!(classify_jobs(&m, 1).unwrap(), classify_jobs(&m, 3).unwrap());
}

#[test]
fn oracle_examples() {
    let g = c2();
    let whole = Subgroup::whole(&g);
    let z = Lattice::trivial(&g, 1);
    assert_eq!(bar_oracle(&whole, &z, Degree::Zero).unwrap(), z2());
    let sign = Lattice::from_signs(&g, &[-1]).unwrap();
    assert_eq!(bar_oracle(&whole, &sign, Degree::MinusOne).unwrap(), z2());
    let big = Arc::new(abelian(&[2, 2, 2, 2]));
    assert!(matches!(
        bar_oracle(&Subgroup::whole(&big), &Lattice::trivial(&big, 1), Degree::One),
        Err(CohomologyError::CapExceeded { .. })
    ));
}

#[test]
fn permutation_lattices_are_flabby_and_coflabby() {
    for (name, g) in small_groups(16) {
        let g = Arc::new(g);
        for h in subgroup_reps(&g).unwrap() {
            let r = classify(&induced_lattice(&g, &h)).unwrap();
            assert!(r.flabby && r.coflabby, "{name}, subgroup of order {}", h.order());
        }
    }
}

#[test]
fn conjugation_invariance() {
    let g = Arc::new(symmetric(3));
    let mut rng = common::rng(9);
    let t = Subgroup::generated_by(&g, &[g.generators()[0]]);
    assert!(!t.is_normal());
    for _ in 0..10 {
        let m = common::random_lattice(&mut rng, &g, 6);
        for x in 0..g.order() {
            let c = t.conjugate(x);
            assert_eq!(tate_hat0(&t, &m), tate_hat0(&c, &m));
            assert_eq!(tate_hat_minus1(&t, &m), tate_hat_minus1(&c, &m));
            assert_eq!(h1_cocycles(&t, &m).unwrap(), h1_cocycles(&c, &m).unwrap());
        }
    }
}

fn check_against_oracle(g: &Arc<FiniteGroup>, m: &Lattice) {
    for h in subgroup_reps(g).unwrap() {
        let a = tate_hat_minus1(&h, m);
        let b = tate_hat0(&h, m);
        let c = h1_cocycles(&h, m).unwrap();
        assert_eq!(a, bar_oracle(&h, m, Degree::MinusOne).unwrap());
        assert_eq!(b, bar_oracle(&h, m, Degree::Zero).unwrap());
        assert_eq!(c, bar_oracle(&h, m, Degree::One).unwrap());
        assert_eq!((a.free_rank, b.free_rank, c.free_rank), (0, 0, 0));
        if h.is_cyclic() {
            assert_eq!(c, a);
        }
    }
}

#[test]
fn cyclic_four_rank_three_matches_oracle() {
    let g = Arc::new(cyclic(4));
    let mut rng = common::rng(4);
    for _ in 0..30 {
        let m = common::random_lattice(&mut rng, &g, 3);
        check_against_oracle(&g, &m);
    }
}

#[test]
fn tate_pruner_separates_sign_and_trivial() {
    let g = c2();
    let a = direct_sum(&Lattice::trivial(&g, 1), &Lattice::from_signs(&g, &[-1]).unwrap()).unwrap();
    let b = regular_lattice(&g);
    assert!(tate_pruner(&a, &b).is_some());
    assert!(tate_pruner(&b, &b).is_none());
}

fn groups_up_to_8() -> Vec<Arc<FiniteGroup>> {
    small_groups(8).into_iter().map(|(_, g)| Arc::new(g)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn additivity(gi in 0usize..100, seed in 0u64..10_000) {
        let groups = groups_up_to_8();
        let g = &groups[gi % groups.len()];
        let mut rng = common::rng(seed);
        let a = common::random_lattice(&mut rng, g, 4);
        let b = common::random_lattice(&mut rng, g, 4);
        let s = direct_sum(&a, &b).unwrap();
        for h in subgroup_reps(g).unwrap() {
            prop_assert_eq!(tate_hat0(&h, &s), tate_hat0(&h, &a).direct_sum(&tate_hat0(&h, &b)));
            prop_assert_eq!(tate_hat_minus1(&h, &s), tate_hat_minus1(&h, &a).direct_sum(&tate_hat_minus1(&h, &b)));
            prop_assert_eq!(h1_cocycles(&h, &s).unwrap(), h1_cocycles(&h, &a).unwrap().direct_sum(&h1_cocycles(&h, &b).unwrap()));
        }
    }

    #[test]
    fn oracle_agreement(gi in 0usize..100, seed in 0u64..10_000) {
        let groups = groups_up_to_8();
        let g = &groups[gi % groups.len()];
        let mut rng = common::rng(seed);
        let m = common::random_lattice(&mut rng, g, 4);
        check_against_oracle(g, &m);
    }
}
