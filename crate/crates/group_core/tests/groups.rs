use std::collections::BTreeSet;
use std::sync::Arc;

use group_core::catalog::{abelian, cyclic, heisenberg, heisenberg_relations, small_groups, symmetric};
use group_core::{
    all_subgroups, parse_word, quotient_group, subgroup_reps, sylow_all_cyclic, FiniteGroup, GroupDoc, GroupError,
    Subgroup,
};

fn gens(list: &[(&str, Vec<usize>)]) -> Vec<(String, Vec<usize>)> {
    list.iter().map(|(n, p)| (n.to_string(), p.clone())).collect()
}

// Brute force: every subset closed under multiplication that contains 1.
fn brute_subgroups(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    assert!(n <= 16);
    let mut out = BTreeSet::new();
    for mask in 0u32..(1u32 << n) {
        if mask & 1 == 0 {
            continue;
        }
        let els: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if els.iter().all(|&a| els.iter().all(|&b| mask >> g.mul(a, b) & 1 == 1)) {
            out.insert(els);
        }
    }
    out
}

#[test]
fn build_examples() {
    let c2 = FiniteGroup::from_permutations(&gens(&[("t", vec![1, 0])]), 64).unwrap();
    assert_eq!(c2.order(), 2);

    let c6 = FiniteGroup::from_permutations(
        &gens(&[("sigma", vec![1, 2, 0, 3, 4]), ("tau", vec![0, 1, 2, 4, 3])]),
        64,
    )
    .unwrap();
    assert_eq!(c6.order(), 6);
    assert!(c6.is_cyclic());
    assert_eq!(c6.generator_names(), &["sigma".to_string(), "tau".to_string()]);
    assert_eq!(c6.element_order(c6.generators()[0]), 3);
    assert_eq!(c6.element_order(c6.generators()[1]), 2);

    let h = heisenberg(3);
    let names = h.generator_names().to_vec();
    let rels = heisenberg_relations(3);
    let perms: Vec<(String, Vec<usize>)> = {
        let doc = GroupDoc::regular(&h);
        doc.generators.iter().map(|g| (g.name.clone(), g.image.clone())).collect()
    };
    let h2 = FiniteGroup::from_permutations_with_relations(&perms, &rels, 64).unwrap();
    assert_eq!(h2.order(), 27);
    assert_eq!(h2.exponent(), 3);
    assert!(!h2.is_abelian());
    let w = parse_word("sigma2 sigma3", &names).unwrap();
    let w2 = parse_word("sigma3 sigma1 sigma2", &names).unwrap();
    assert_eq!(h2.eval_word(&w), h2.eval_word(&w2));
}

#[test]
fn build_errors() {
    let s4 = gens(&[("t", vec![1, 0, 2, 3]), ("c", vec![1, 2, 3, 0])]);
    assert_eq!(FiniteGroup::from_permutations(&s4, 10), Err(GroupError::ClosureExceedsCap { cap: 10 }));

    let c6 = gens(&[("g", vec![1, 2, 3, 4, 5, 0])]);
    let names = vec!["g".to_string()];
    let rel = vec![(parse_word("g^3", &names).unwrap(), parse_word("1", &names).unwrap())];
    assert!(matches!(
        FiniteGroup::from_permutations_with_relations(&c6, &rel, 64),
        Err(GroupError::RelationViolated { .. })
    ));

    // A loop of order 5 with an element of order 2 cannot be a group.
    let loop5 = vec![
        vec![0, 1, 2, 3, 4],
        vec![1, 0, 3, 4, 2],
        vec![2, 4, 0, 1, 3],
        vec![3, 2, 4, 0, 1],
        vec![4, 3, 1, 2, 0],
    ];
    assert!(matches!(
        FiniteGroup::from_table(loop5, vec![1, 2], vec!["a".into(), "b".into()]),
        Err(GroupError::NonAssociative(..))
    ));
}

#[test]
fn subgroup_rep_examples() {
    let c6 = Arc::new(cyclic(6));
    let reps = subgroup_reps(&c6).unwrap();
    assert_eq!(reps.iter().map(|s| s.order()).collect::<Vec<_>>(), vec![1, 2, 3, 6]);

    let v4 = Arc::new(abelian(&[2, 2]));
    assert_eq!(subgroup_reps(&v4).unwrap().len(), 5);

    let s3 = Arc::new(symmetric(3));
    let reps = subgroup_reps(&s3).unwrap();
    assert_eq!(reps.len(), 4);
    // Oracle: brute-force subgroups, grouped into conjugacy classes by hand.
    let brute = brute_subgroups(&s3);
    assert_eq!(brute.len(), 6);
    let mut classes: BTreeSet<BTreeSet<Vec<usize>>> = BTreeSet::new();
    for s in &brute {
        let class: BTreeSet<Vec<usize>> = (0..6)
            .map(|g| {
                let mut c: Vec<usize> = s.iter().map(|&h| s3.conj(g, h)).collect();
                c.sort();
                c
            })
            .collect();
        classes.insert(class);
    }
    assert_eq!(classes.len(), reps.len());
}

#[test]
fn subgroup_class_sizes_sum_to_brute_force_count() {
    for (name, g) in small_groups(16) {
        let g = Arc::new(g);
        let reps = subgroup_reps(&g).unwrap();
        let total: usize = reps.iter().map(|s| g.order() / normalizer_order(&g, s)).sum();
        let brute = brute_subgroups(&g);
        assert_eq!(total, brute.len(), "group {name}");
        assert_eq!(all_subgroups(&g).len(), brute.len(), "group {name}");
        // Deterministic ordering: by order then element list.
        for w in reps.windows(2) {
            let key = |s: &Subgroup| (s.order(), s.elements().to_vec());
            assert!(key(&w[0]) < key(&w[1]));
        }
    }
}

fn normalizer_order(g: &FiniteGroup, s: &Subgroup) -> usize {
    (0..g.order())
        .filter(|&x| {
            let mut c: Vec<usize> = s.elements().iter().map(|&h| g.conj(x, h)).collect();
            c.sort();
            c == s.elements()
        })
        .count()
}

#[test]
fn sylow_examples() {
    assert!(sylow_all_cyclic(&cyclic(6)));
    assert!(!sylow_all_cyclic(&abelian(&[2, 2])));
    let pi = FiniteGroup::from_permutations(
        &gens(&[("sigma3", vec![1, 2, 3, 4, 0, 5, 6]), ("tau", vec![0, 1, 2, 3, 4, 6, 5])]),
        64,
    )
    .unwrap();
    assert_eq!(pi.order(), 10);
    assert!(sylow_all_cyclic(&pi));
    assert!(sylow_all_cyclic(&symmetric(3)));
    assert!(!sylow_all_cyclic(&group_core::catalog::quaternion()));
}

#[test]
fn quotient_examples() {
    let c6 = Arc::new(cyclic(6));
    let whole = Subgroup::whole(&c6);
    let (q, _) = quotient_group(&c6, &whole).unwrap();
    assert_eq!(q.order(), 1);

    let c3 = Subgroup::generated_by(&c6, &[c6.pow(c6.generators()[0], 2)]);
    assert_eq!(c3.order(), 3);
    let (q, proj) = quotient_group(&c6, &c3).unwrap();
    assert_eq!(q.order(), 2);
    assert_eq!(proj.len(), 6);

    let h = Arc::new(heisenberg(3));
    // Center by brute force: elements commuting with everything.
    let center: Vec<usize> = (0..27).filter(|&z| (0..27).all(|x| h.mul(z, x) == h.mul(x, z))).collect();
    assert_eq!(center.len(), 3);
    let z = Subgroup::from_elements(&h, center);
    let (q, _) = quotient_group(&h, &z).unwrap();
    assert_eq!(q.order(), 9);
    assert!(q.is_abelian());
    assert_eq!(q.exponent(), 3);

    let s3 = Arc::new(symmetric(3));
    let t = Subgroup::generated_by(&s3, &[s3.generators()[0]]);
    assert_eq!(quotient_group(&s3, &t), Err(GroupError::NotNormal));
}

#[test]
fn projections_are_homomorphisms() {
    let mut groups = small_groups(64);
    groups.push(("Heis3".into(), heisenberg(3)));
    for (name, g) in groups {
        let g = Arc::new(g);
        g.check_associative().unwrap();
        for &s in g.generators() {
            assert_eq!(g.order() % g.element_order(s), 0);
        }
        for n in subgroup_reps(&g).unwrap().into_iter().filter(|s| s.is_normal()) {
            let (q, proj) = quotient_group(&g, &n).unwrap();
            for a in 0..g.order() {
                for b in 0..g.order() {
                    assert_eq!(proj[g.mul(a, b)], q.mul(proj[a], proj[b]), "{name}");
                }
            }
        }
    }
}

#[test]
fn cap_is_enforced() {
    let g = Arc::new(group_core::catalog::cyclic(70));
    assert!(matches!(
        group_core::subgroup_reps_capped(&g, 64),
        Err(GroupError::CapExceeded { order: 70, cap: 64 })
    ));
}

#[test]
fn group_doc_round_trip() {
    let doc: GroupDoc = serde_json::from_str(
        r#"{"order_cap": 64, "generators": [{"name": "tau", "image": [1, 0]}]}"#,
    )
    .unwrap();
    let g = doc.build().unwrap();
    assert_eq!(g.order(), 2);
    let back: GroupDoc = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(back, doc);
}
