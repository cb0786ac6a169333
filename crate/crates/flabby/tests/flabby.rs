mod common;

use std::sync::Arc;

use cohomology::{bar_oracle, classify, is_flabby, keyed_reps, Degree};
use exact_linalg::{Int, IntMatrix};
use flabby::*;
use group_core::{catalog, subgroup_reps, FiniteGroup, Subgroup};
use lattice_core::samples::augmentation_kernel;
use lattice_core::{
    direct_sum, dual, induced_lattice, inflate, iso_search, regular_lattice, IsoOptions, Lattice, LatticeDoc,
};
use proptest::prelude::*;

fn group(name: &str) -> Arc<FiniteGroup> {
    Arc::new(catalog::by_name(name).unwrap())
}

fn norm_one_character(g: &Arc<FiniteGroup>) -> Lattice {
    dual(&augmentation_kernel(&regular_lattice(g)))
}

#[test]
fn trivial_c2_resolution() {
    let g = group("C2");
    let r = flabby_resolution(&Lattice::trivial(&g, 1)).unwrap();
    assert_eq!(r.p.rank(), 3);
    assert_eq!(r.e.rank(), 2);
    check_exactness(&r).unwrap();
    // ℤ → ℤ[C2] ⊕ ℤ lands in the fixed vectors, spanned by the norm and the trivial summand.
    let a = &r.inject.matrix;
    assert_eq!(a[(0, 0)], a[(1, 0)]);
}

#[test]
fn sign_resolution_has_trivial_e() {
    let g = group("C2");
    let sign = Lattice::from_signs(&g, &[-1]).unwrap();
    let r = flabby_resolution(&sign).unwrap();
    assert_eq!(r.p.rank(), 2);
    assert_eq!(r.e, Lattice::trivial(&g, 1));
}

#[test]
fn exactness_on_random_lattices() {
    let mut rng = common::rng(11);
    let groups: Vec<_> = catalog::small_groups(12).into_iter().map(|(_, g)| Arc::new(g)).collect();
    for i in 0..200 {
        let g = &groups[i % groups.len()];
        let m = common::random_lattice(&mut rng, g, 5);
        let r = flabby_resolution(&m).unwrap();
        check_exactness(&r).unwrap();
        assert!(is_flabby(&r.e).unwrap());
        if g.order() <= 8 && r.e.rank() <= 6 {
            for h in subgroup_reps(g).unwrap() {
                assert!(bar_oracle(&h, &r.e, Degree::MinusOne).unwrap().is_trivial());
            }
        }
    }
}

#[test]
fn adding_permutation_summand_keeps_similarity_invariants() {
    // Ĥ⁰ of a permutation summand is nonzero, so only Ĥ⁻¹ and H¹ are compared.
    for name in ["S3", "V4"] {
        let g = group(name);
        let m = norm_one_character(&g);
        let base = classify(&flabby_resolution(&m).unwrap().e).unwrap();
        for h in subgroup_reps(&g).unwrap() {
            let mp = direct_sum(&m, &induced_lattice(&g, &h)).unwrap();
            let r = flabby_resolution(&mp).unwrap();
            check_exactness(&r).unwrap();
            let t = classify(&r.e).unwrap();
            for (x, y) in base.entries.iter().zip(&t.entries) {
                assert_eq!((&x.hat_minus1, &x.h1), (&y.hat_minus1, &y.h1), "{name} {}", x.key);
            }
        }
    }
}

#[test]
fn cyclic_groups_are_endo_miyata() {
    let g = group("C6");
    let v = rho_invertible(&norm_one_character(&g)).unwrap();
    assert_eq!(v.invertible, Invertibility::Yes(YesReason::EndoMiyata));
    assert_eq!(v.invertible.reason(), "endo-miyata");
    assert!(v.retract_rational_conclusion.is_some());
}

#[test]
fn permutation_lattices_have_invertible_class() {
    let g = group("V4");
    for h in subgroup_reps(&g).unwrap() {
        let v = rho_invertible(&induced_lattice(&g, &h)).unwrap();
        assert!(v.invertible.is_yes(), "{}: {}", h.describe(), v.invertible);
    }
    let v = rho_invertible(&regular_lattice(&g)).unwrap();
    match &v.invertible {
        Invertibility::Yes(YesReason::Certificate(c)) => assert!(verify_certificate(&v.split_target, c)),
        other => panic!("expected certificate, got {other}"),
    }
}

#[test]
fn norm_one_character_of_v4_is_not_invertible() {
    let g = group("V4");
    let v = rho_invertible(&norm_one_character(&g)).unwrap();
    assert!(v.invertible.is_no(), "{}", v.invertible);
    assert!(v.retract_rational_conclusion.unwrap().contains("not retract rational"));
}

#[test]
fn augmentation_ideal_of_v4_is_invertible() {
    // I_G has flabby class [ℤ] up to sign, via 0 → I_G → ℤ[G] → ℤ → 0 dualized.
    let g = group("V4");
    let v = rho_invertible(&augmentation_kernel(&regular_lattice(&g))).unwrap();
    assert!(v.invertible.is_yes(), "{}", v.invertible);
}

#[test]
fn tampered_certificate_is_rejected() {
    let g = group("V4");
    let v = rho_invertible(&regular_lattice(&g)).unwrap();
    let Invertibility::Yes(YesReason::Certificate(c)) = v.invertible else { panic!() };
    let mut bad = (*c).clone();
    bad.section[(0, 0)] += &Int::one();
    assert!(!verify_certificate(&v.split_target, &bad));
    let mut bad = (*c).clone();
    bad.cover_subgroups.pop();
    assert!(!verify_certificate(&v.split_target, &bad));
}

#[test]
fn kernel_reduction_agrees() {
    let big = group("C2xC2xC2");
    let v4 = group("V4");
    // Projection onto the first two factors: generators a, b, c ↦ a, b, 1.
    let images = [v4.generators()[0], v4.generators()[1], v4.identity()];
    let proj = group_core::hom_from_images(&big, &v4, &images).unwrap();
    for m in [norm_one_character(&v4), regular_lattice(&v4), Lattice::from_signs(&v4, &[-1, 1]).unwrap()] {
        let lifted = inflate(&m, &big, &proj).unwrap();
        let down = rho_invertible_with(&m, &RhoOptions { reduce_kernel: false, ..Default::default() }).unwrap();
        let reduced = rho_invertible(&lifted).unwrap();
        let full = rho_invertible_with(&lifted, &RhoOptions { reduce_kernel: false, ..Default::default() }).unwrap();
        assert!(reduced.reduced);
        assert_eq!(reduced.acting_order, rho_invertible(&m).unwrap().acting_order);
        assert_eq!(full.acting_order, 8);
        assert_eq!(down.invertible.is_yes(), reduced.invertible.is_yes());
        assert_eq!(down.invertible.is_yes(), full.invertible.is_yes(), "{}", full.invertible);
    }
}

#[test]
fn decide_rejects_flabby_class_of_norm_one_character() {
    let g = group("V4");
    let r = flabby_resolution(&norm_one_character(&g)).unwrap();
    assert!(is_flabby(&r.e).unwrap());
    let d = decide(&r.e, &RhoOptions::default()).unwrap();
    assert!(d.is_no(), "{d}");
    // A non-flabby input is caught by the guard.
    let d = decide(&norm_one_character(&g), &RhoOptions::default()).unwrap();
    assert!(matches!(d, Invertibility::No(NoWitness::NotFlabby { .. })), "{d}");
}

#[test]
fn permutation_certificate_examples() {
    let g = group("C2");
    let mut rng = common::rng(5);
    let conj = common::random_unimodular(&mut rng, 2, 6, 2);
    let m = regular_lattice(&g).change_basis(&conj).unwrap();
    match permutation_certificate(&m).unwrap() {
        PermutationVerdict::Basis(x) => assert!(m.change_basis(&x).unwrap().is_permutation_basis()),
        other => panic!("{other:?}"),
    }
    let sign = Lattice::from_signs(&g, &[-1]).unwrap();
    assert!(matches!(permutation_certificate(&sign).unwrap(), PermutationVerdict::NotPermutation(_)));
    match permutation_certificate(&Lattice::trivial(&g, 1)).unwrap() {
        PermutationVerdict::Basis(x) => assert_eq!(x, IntMatrix::identity(1)),
        other => panic!("{other:?}"),
    }
}

#[test]
fn candidates_for_sign_plus_trivial() {
    // ℤ⁻ ⊕ ℤ has the fixed ranks of ℤ[C2] but a different Ĥ⁰.
    let g = group("C2");
    let sign = Lattice::from_signs(&g, &[-1]).unwrap();
    let m = direct_sum(&sign, &Lattice::trivial(&g, 1)).unwrap();
    assert!(permutation_candidates(&m).unwrap().is_empty());
    assert!(matches!(permutation_certificate(&m).unwrap(), PermutationVerdict::NotPermutation(_)));
    assert_eq!(permutation_candidates(&regular_lattice(&g)).unwrap(), vec![vec![1, 0]]);
}

#[test]
fn orbit_counts_match_fixed_ranks_of_induced_lattices() {
    for (_, g) in catalog::small_groups(12) {
        let g = Arc::new(g);
        let reps = subgroup_reps(&g).unwrap();
        for h in &reps {
            let p = induced_lattice(&g, h);
            for k in &reps {
                assert_eq!(orbit_count(h, k), lattice_core::fixed_rank(&p, k));
            }
        }
    }
}

#[test]
fn candidates_contain_true_multiplicities() {
    for (_, g) in catalog::small_groups(8) {
        let g = Arc::new(g);
        let reps = subgroup_reps(&g).unwrap();
        for (i, h) in reps.iter().enumerate() {
            let mut want = vec![0; reps.len()];
            want[i] = 1;
            assert!(permutation_candidates(&induced_lattice(&g, h)).unwrap().contains(&want));
        }
    }
}

#[test]
fn permutation_certificate_on_sums() {
    let g = group("S3");
    let reps = subgroup_reps(&g).unwrap();
    let m = direct_sum(&induced_lattice(&g, &reps[1]), &induced_lattice(&g, &reps[2])).unwrap();
    let mut rng = common::rng(9);
    let b = common::random_unimodular(&mut rng, m.rank(), 8, 1);
    let m = m.change_basis(&b).unwrap();
    match permutation_certificate(&m).unwrap() {
        PermutationVerdict::Basis(x) => {
            let q = m.change_basis(&x).unwrap();
            assert!(q.is_permutation_basis());
            assert!(iso_search(&q, &m, &IsoOptions::default()).is_isomorphic());
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn verdict_json() {
    let g = group("V4");
    let v = rho_invertible(&regular_lattice(&g)).unwrap();
    let doc = RhoDoc::new(&v);
    assert_eq!(doc.invertible, Some(true));
    assert_eq!(doc.reason, "certificate");
    let s = serde_json::to_string(&doc).unwrap();
    let back: RhoDoc = serde_json::from_str(&s).unwrap();
    assert_eq!(back, doc);
    let rd = ResolutionDoc::new(&v.resolution, &lattice_core::GroupRef::Named("V4".into()));
    let e: LatticeDoc = serde_json::from_str(&serde_json::to_string(&rd.e).unwrap()).unwrap();
    assert_eq!(e.build().unwrap(), v.resolution.e);
}

#[test]
fn keyed_reps_cover_summands() {
    let g = group("S3");
    let r = flabby_resolution(&Lattice::trivial(&g, 1)).unwrap();
    assert_eq!(r.summands.len(), keyed_reps(&g).unwrap().len());
    let _ = Subgroup::whole(&g);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn certificates_verify(seed in 0u64..10_000, which in 0usize..3) {
        let names = ["V4", "S3", "D4"];
        let g = group(names[which]);
        let mut rng = common::rng(seed);
        let m = common::random_lattice(&mut rng, &g, 3);
        let v = rho_invertible(&m).unwrap();
        if let Invertibility::Yes(YesReason::Certificate(c)) = &v.invertible {
            prop_assert!(verify_certificate(&v.split_target, c));
        }
        if v.invertible.is_yes() {
            for (_, h) in keyed_reps(v.split_target.group()).unwrap() {
                prop_assert!(cohomology::h1_cocycles(&h, &v.split_target).unwrap().is_trivial());
            }
        }
    }
}
