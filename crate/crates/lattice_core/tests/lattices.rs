mod common;

use std::sync::Arc;

use exact_linalg::{charpoly, is_saturated, Int, IntMatrix, IntPoly};
use group_core::catalog::{abelian, cyclic, dihedral, heisenberg, small_groups, symmetric};
use group_core::{quotient_group, subgroup_reps, Subgroup};
use lattice_core::*;
use proptest::prelude::*;

fn c2() -> Arc<group_core::FiniteGroup> {
    Arc::new(cyclic(2))
}

fn sign(g: &Arc<group_core::FiniteGroup>) -> Lattice {
    Lattice::from_signs(g, &[-1]).unwrap()
}

#[test]
fn validation_examples() {
    let g = Arc::new(symmetric(3));
    let triv = Lattice::new_with_rank(g.clone(), 1, vec![IntMatrix::identity(1); 2]).unwrap();
    assert!(triv.elements().iter().all(|m| m.is_identity()));

    let s = sign(&c2());
    assert_eq!(s.matrix(1), &IntMatrix::from_rows(&[[-1]]));
    assert!(s.matrix(0).is_identity());

    let bad = Lattice::new(c2(), vec![IntMatrix::from_rows(&[[2]])]);
    assert_eq!(bad, Err(LatticeError::NotUnimodular("g".into())));

    // A swap has order 2, which is not compatible with a generator of order 3.
    let c3 = Arc::new(cyclic(3));
    let bad = Lattice::new(c3, vec![IntMatrix::from_rows(&[[0, 1], [1, 0]])]);
    assert!(matches!(bad, Err(LatticeError::RelationViolated { .. })));
}

#[test]
fn induced_examples() {
    let g = Arc::new(dihedral(4));
    let whole = induced_lattice(&g, &Subgroup::whole(&g));
    assert_eq!(whole.rank(), 1);
    assert!(whole.elements().iter().all(|m| m.is_identity()));

    let reg = regular_lattice(&c2());
    assert_eq!(reg.action()[0], IntMatrix::from_rows(&[[0, 1], [1, 0]]));

    let h = Arc::new(heisenberg(3));
    let center: Vec<usize> = (0..27).filter(|&z| (0..27).all(|x| h.mul(z, x) == h.mul(x, z))).collect();
    let z = Subgroup::from_elements(&h, center);
    let l = induced_lattice(&h, &z);
    assert_eq!(l.rank(), 9);
    assert!(l.is_permutation_basis());
    // The center acts trivially on cosets of a normal subgroup containing it.
    assert_eq!(l.action_kernel().elements(), z.elements());
}

#[test]
fn induced_lattices_are_permutation_lattices() {
    for (name, g) in small_groups(16) {
        let g = Arc::new(g);
        for h in subgroup_reps(&g).unwrap() {
            let l = induced_lattice(&g, &h);
            assert_eq!(l.rank(), g.order() / h.order(), "{name}");
            assert!(l.elements().iter().all(|m| m.is_permutation()), "{name}");
        }
    }
}

#[test]
fn dual_examples() {
    let g = c2();
    let t = Lattice::trivial(&g, 1);
    assert_eq!(dual(&t), t);
    let r = regular_lattice(&g);
    assert_eq!(dual(&r), r);
    let s3 = Arc::new(symmetric(3));
    let reps = subgroup_reps(&s3).unwrap();
    let mut rng = common::rng(7);
    for _ in 0..20 {
        let l = common::random_lattice(&mut rng, &s3, 6);
        assert_eq!(dual(&dual(&l)), l);
        let d = dual(&l);
        for h in &reps {
            assert_eq!(fixed_rank(&d, h), fixed_rank(&l, h));
        }
    }
}

#[test]
fn direct_sum_examples() {
    let g = c2();
    let z = Lattice::trivial(&g, 1);
    let s = sign(&g);
    assert_eq!(direct_sum(&s, &Lattice::zero(&g)).unwrap(), s);
    let zs = direct_sum(&z, &s).unwrap();
    assert_eq!(zs.rank(), 2);
    assert_eq!(zs.action()[0], IntMatrix::from_rows(&[[1, 0], [0, -1]]));
    let other = Arc::new(cyclic(3));
    assert_eq!(direct_sum(&z, &Lattice::trivial(&other, 1)), Err(LatticeError::GroupMismatch));
}

#[test]
fn tensor_examples() {
    let g = Arc::new(symmetric(3));
    let mut rng = common::rng(3);
    let m = common::random_lattice(&mut rng, &g, 5);
    assert_eq!(tensor(&Lattice::trivial(&g, 1), &m).unwrap(), m);

    let a = regular_lattice(&c2());
    let b = regular_lattice(&Arc::new(cyclic(3)));
    let t = tensor_outer(&a, &b);
    assert_eq!(t.rank(), 6);
    assert_eq!(t.group().order(), 6);
    let reg = regular_lattice(t.group());
    let v = iso_search(&t, &reg, &IsoOptions::default());
    match v {
        IsoVerdict::Isomorphic(x) => assert!(is_intertwiner(&t, &reg, &x)),
        other => panic!("expected isomorphism, got {other:?}"),
    }
}

#[test]
fn fixed_examples() {
    let g = c2();
    let whole = Subgroup::whole(&g);
    assert_eq!(fixed_rank(&sign(&g), &whole), 0);
    let reg = regular_lattice(&g);
    assert_eq!(fixed_basis(&reg, &whole), IntMatrix::from_rows(&[[1], [1]]));
    let (sub, inc) = fixed_sublattice(&reg, &whole).unwrap();
    assert_eq!(sub.rank(), 1);
    assert!(LatticeMap::new(sub, reg.clone(), inc.matrix).is_ok());

    let s3 = Arc::new(symmetric(3));
    let t = Subgroup::generated_by(&s3, &[s3.generators()[0]]);
    let l = regular_lattice(&s3);
    assert_eq!(fixed_sublattice(&l, &t).unwrap_err(), LatticeError::NotNormal);
    assert_eq!(fixed_rank(&l, &t), 3);
}

#[test]
fn restrict_and_inflate_examples() {
    let c6 = Arc::new(cyclic(6));
    let reg = regular_lattice(&c6);
    let c2sub = Subgroup::generated_by(&c6, &[c6.pow(c6.generators()[0], 3)]);
    let r = restrict(&reg, &c2sub);
    assert_eq!(r.rank(), 6);
    assert_eq!(r.group().order(), 2);
    // Three swap blocks: char poly (T^2 - 1)^3, fixed rank 3.
    let swap = IntPoly::from_i64(&[-1, 0, 1]);
    assert_eq!(charpoly(&r.action()[0]), swap.mul(&swap).mul(&swap));
    assert_eq!(fixed_rank(&r, &Subgroup::whole(r.group())), 3);

    let c3sub = Subgroup::generated_by(&c6, &[c6.pow(c6.generators()[0], 2)]);
    let (q, proj) = quotient_group(&c6, &c3sub).unwrap();
    let q = Arc::new(q);
    let s = sign(&q);
    let inf = inflate(&s, &c6, &proj).unwrap();
    assert_eq!(inf.rank(), 1);
    assert_eq!(inf.action()[0], IntMatrix::from_rows(&[[-1]]));
    let (back, _) = deflate(&inf, &c3sub).unwrap();
    assert_eq!(back.action()[0], IntMatrix::from_rows(&[[-1]]));
    assert!(matches!(deflate(&reg, &c3sub), Err(LatticeError::ActionNotTrivialOnKernel(_))));
}

#[test]
fn character_kernel_examples() {
    let g = c2();
    let triv = Lattice::trivial(&g, 2);
    let k = character_kernel_sublattice(&triv, &[Character::new(3, vec![1, 1])]).unwrap();
    assert_eq!(k.lattice.rank(), 2);
    assert_eq!(k.index, Int::from(3));

    let reg = regular_lattice(&g);
    let k = character_kernel_sublattice(&reg, &[Character::new(2, vec![1, 1])]).unwrap();
    assert_eq!(k.index, Int::from(2));
    assert!(LatticeMap::new(k.lattice.clone(), reg.clone(), k.inclusion.matrix.clone()).is_ok());

    // x_1 mod 2 is not preserved by the swap.
    let bad = character_kernel_sublattice(&reg, &[Character::new(2, vec![1, 0])]);
    assert_eq!(bad.unwrap_err(), LatticeError::KernelNotStable);
}

#[test]
fn iso_examples() {
    let g = c2();
    let z = Lattice::trivial(&g, 1);
    assert_eq!(iso_search(&z, &z, &IsoOptions::default()), IsoVerdict::Isomorphic(IntMatrix::identity(1)));
    assert!(matches!(
        iso_search(&z, &sign(&g), &IsoOptions::default()),
        IsoVerdict::NotIsomorphic(IsoWitness::CharPoly { .. })
    ));
    let pruner = |_: &Lattice, _: &Lattice| Some("forced".to_string());
    let reg = regular_lattice(&g);
    let twisted = reg.change_basis(&IntMatrix::from_rows(&[[1, 1], [0, 1]])).unwrap();
    let opts = IsoOptions::default().with_pruner(&pruner);
    assert_eq!(iso_search(&reg, &twisted, &opts), IsoVerdict::NotIsomorphic(IsoWitness::Invariant("forced".into())));
}

#[test]
fn iso_recovers_random_conjugates() {
    let mut rng = common::rng(11);
    for g in [abelian(&[2, 2]), cyclic(4), symmetric(3), dihedral(4)] {
        let g = Arc::new(g);
        for _ in 0..8 {
            let a = common::random_lattice(&mut rng, &g, 6);
            let b = common::random_unimodular(&mut rng, a.rank(), a.rank(), 1);
            let a2 = a.change_basis(&b).unwrap();
            match iso_search(&a, &a2, &IsoOptions::default()) {
                IsoVerdict::Isomorphic(x) => assert!(is_intertwiner(&a, &a2, &x)),
                other => panic!("expected isomorphism, got {other:?}"),
            }
        }
    }
}

#[test]
fn fixed_sublattice_invariants() {
    let mut rng = common::rng(5);
    for g in [symmetric(3), abelian(&[2, 2]), cyclic(6)] {
        let g = Arc::new(g);
        let reps = subgroup_reps(&g).unwrap();
        for _ in 0..10 {
            let a = common::random_lattice(&mut rng, &g, 5);
            let b = common::random_lattice(&mut rng, &g, 5);
            let s = direct_sum(&a, &b).unwrap();
            for h in &reps {
                let basis = fixed_basis(&s, h);
                assert!(basis.cols() == 0 || is_saturated(&basis));
                assert_eq!(basis.cols(), fixed_rank(&a, h) + fixed_rank(&b, h));
            }
        }
    }
}

#[test]
fn doc_round_trip() {
    let text = r#"{"group": {"order_cap": 64, "generators": [{"name": "tau", "image": [1, 0]}]},
                   "rank": 1, "action": {"tau": [[-1]]}}"#;
    let doc: LatticeDoc = serde_json::from_str(text).unwrap();
    let l = doc.build().unwrap();
    assert_eq!(l.action()[0], IntMatrix::from_rows(&[[-1]]));
    let again: LatticeDoc = serde_json::from_str(&serde_json::to_string(&LatticeDoc::from_lattice(&l)).unwrap()).unwrap();
    assert_eq!(again.build().unwrap(), l);

    let named: LatticeDoc = serde_json::from_str(r#"{"group": "C2", "rank": 1, "action": {"g": [[2]]}}"#).unwrap();
    assert!(matches!(named.build(), Err(LatticeError::NotUnimodular(_))));
    let unknown: LatticeDoc = serde_json::from_str(r#"{"group": "C2", "rank": 1, "action": {"h": [[1]]}}"#).unwrap();
    assert!(matches!(unknown.build(), Err(LatticeError::UnknownGenerator(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn character_kernel_index(n in 1i64..12, row in proptest::collection::vec(-20i64..20, 1..5)) {
        let g = c2();
        let p = Lattice::trivial(&g, row.len());
        let k = character_kernel_sublattice(&p, &[Character::new(n, row.clone())]).unwrap();
        let content = row.iter().fold(Int::zero(), |acc, &x| acc.gcd(&Int::from(x)));
        let image_order = Int::from(n).div_exact(&Int::from(n).gcd(&content));
        prop_assert_eq!(k.index, image_order);
    }

    #[test]
    fn double_dual_is_identity(seed in 0u64..1000) {
        let g = Arc::new(dihedral(4));
        let mut rng = common::rng(seed);
        let l = common::random_lattice(&mut rng, &g, 6);
        prop_assert_eq!(dual(&dual(&l)), l);
    }
}
