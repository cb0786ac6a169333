use exact_linalg::{Int, IntMatrix};
use group_core::Word;
use monomial_action::*;
use proptest::prelude::*;

fn s(v: &[&str]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn rel(l: &str, r: &str) -> (String, String) {
    (l.to_string(), r.to_string())
}

/// C2 × C3 on K(ζ₃)(x, y): g swaps x and y, h scales both by ζ and ζ⁻¹ and
/// the Galois part inverts ζ.
fn small_action() -> MonomialAction {
    let g = MonomialMap { a: IntMatrix::from_rows(&[[0, 1], [1, 0]]), c: vec![0, 0], t: -1 };
    let h = MonomialMap { a: IntMatrix::identity(2), c: vec![1, 2], t: 1 };
    MonomialAction::new(
        3,
        s(&["x", "y"]),
        vec![("g".into(), g), ("h".into(), h)],
        &[rel("g^2", "1"), rel("h^3", "1"), rel("g h", "h g")],
    )
    .unwrap()
}

#[test]
fn empty_word_is_identity() {
    let a = small_action();
    let m = a.compose(&Word::identity());
    assert_eq!(m, MonomialMap::identity(2, 3));
    assert_eq!(m.t, 1);
}

#[test]
fn small_action_satisfies_relations() {
    let a = small_action();
    assert!(a.verify().holds());
    // τ-twist: g h g⁻¹ sends x to ζ^{-2}·x = ζ·x, equal to h.
    assert_eq!(a.compose_str("g h g^-1").unwrap(), a.compose_str("h").unwrap());
}

#[test]
fn corrupted_coefficient_is_reported() {
    let a = small_action();
    let mut doc = MonomialDoc::from_action(&a);
    doc.generators.get_mut("h").unwrap().c[0] = 2;
    let bad = doc.build().unwrap();
    match bad.verify() {
        Verification::Fails(f) => {
            assert_eq!(f.index, 2);
            assert_eq!(f.variable.as_deref(), Some("x"));
        }
        Verification::Holds => panic!("corruption not detected"),
    }
    assert!(matches!(exponent_lattice(&bad), Err(MonomialError::UnverifiedAction(_))));
}

#[test]
fn trivial_action_satisfies_anything() {
    let a = MonomialAction::new(5, s(&["x"]), vec![("s".into(), MonomialMap::identity(1, 5))], &[rel("s^7", "s^2")]).unwrap();
    assert!(a.verify().holds());
}

#[test]
fn purely_monomial_composition_is_matrix_product() {
    let p = MonomialMap { a: IntMatrix::from_rows(&[[1, 1], [0, 1]]), c: vec![0, 0], t: 1 };
    let q = MonomialMap { a: IntMatrix::from_rows(&[[0, -1], [1, 0]]), c: vec![0, 0], t: 1 };
    let a = MonomialAction::new(1, s(&["x", "y"]), vec![("p".into(), p.clone()), ("q".into(), q.clone())], &[]).unwrap();
    assert!(a.is_purely_monomial());
    let m = a.compose_str("p q p").unwrap();
    assert_eq!(m.a, p.a.mul(&q.a).mul(&p.a));
    assert!(m.c.iter().all(|&x| x == 0));
}

#[test]
fn validation_errors() {
    let bad = MonomialMap { a: IntMatrix::from_rows(&[[2]]), c: vec![0], t: 1 };
    assert!(matches!(
        MonomialAction::new(3, s(&["x"]), vec![("g".into(), bad)], &[]),
        Err(MonomialError::NotUnimodular(_))
    ));
    let twist = MonomialMap { a: IntMatrix::identity(1), c: vec![0], t: 3 };
    assert!(matches!(
        MonomialAction::new(6, s(&["x"]), vec![("g".into(), twist)], &[]),
        Err(MonomialError::BadTwist { .. })
    ));
    let shape = MonomialMap { a: IntMatrix::identity(2), c: vec![0], t: 1 };
    assert!(matches!(
        MonomialAction::new(3, s(&["x", "y"]), vec![("g".into(), shape)], &[]),
        Err(MonomialError::BadShape { .. })
    ));
}

#[test]
fn permutation_of_variables_gives_permutation_lattice() {
    let cyc = MonomialMap { a: IntMatrix::from_rows(&[[0, 0, 1], [1, 0, 0], [0, 1, 0]]), c: vec![0; 3], t: 1 };
    let a = MonomialAction::new(1, s(&["a", "b", "c"]), vec![("r".into(), cyc)], &[rel("r^3", "1")]).unwrap();
    let l = exponent_lattice(&a).unwrap();
    assert_eq!(l.group().order(), 3);
    assert!(l.is_permutation_basis());
}

#[test]
fn identity_change_is_certified() {
    let a = small_action();
    let v = certify_change(&a, &ChangeOfVariables { new_vars: s(&["x", "y"]), b: IntMatrix::identity(2) });
    assert!(v.certified);
    assert_eq!(v.det, Int::one());
    let b = v.action.unwrap();
    assert_eq!(b.generators(), a.generators());
}

#[test]
fn change_rewrites_coefficients() {
    // u = xy is fixed by h; v = x stays an eigenvector.
    let a = small_action();
    let ch = ChangeOfVariables::from_monomials(
        a.vars(),
        &[("u".into(), vec![("x".into(), 1), ("y".into(), 1)]), ("v".into(), vec![("x".into(), 1)])],
    )
    .unwrap();
    let v = certify_change(&a, &ch);
    assert!(v.certified);
    let b = v.action.unwrap();
    assert_eq!(b.generator("h").unwrap().c, vec![0, 1]);
    // g: u ↦ u, v ↦ y = u v⁻¹.
    assert_eq!(b.generator("g").unwrap().a, IntMatrix::from_rows(&[[1, 1], [0, -1]]));
    assert!(b.verify().holds());
}

#[test]
fn non_unimodular_change_is_rejected_but_descends() {
    let a = small_action();
    let ch = ChangeOfVariables { new_vars: s(&["X", "Y"]), b: IntMatrix::from_rows(&[[3, 0], [0, 3]]) };
    let v = certify_change(&a, &ch);
    assert!(!v.certified);
    assert_eq!(v.det, Int::from(9));
    let d = substitute(&a, &ch).unwrap();
    assert!(d.generator("h").unwrap().is_identity(3));
    let d = drop_trivial_generators(&d, &["h"]).unwrap();
    assert_eq!(d.generator_names(), &s(&["g"]));
    assert!(d.verify().holds());
    assert!(matches!(drop_trivial_generators(&a, &["h"]), Err(MonomialError::NotTrivial(_))));
}

#[test]
fn unstable_substitution_fails() {
    let a = small_action();
    assert!(matches!(restrict_variables(&a, &["x"]), Err(MonomialError::NotStable(_))));
}

#[test]
fn doc_round_trip() {
    let a = small_action();
    let doc = MonomialDoc::from_action(&a);
    let json = serde_json::to_string(&doc).unwrap();
    assert!(json.contains("\"A\""));
    let back: MonomialDoc = serde_json::from_str(&json).unwrap();
    assert_eq!(back.build().unwrap(), a);
}

fn arb_map(n: usize, e: i64) -> impl Strategy<Value = MonomialMap> {
    (
        proptest::collection::vec((0..n, 0..n, -2i64..=2), 0..5),
        proptest::collection::vec(0..e, n),
        prop_oneof![Just(1i64), Just(e - 1)],
    )
        .prop_map(move |(ops, c, t)| {
            let mut a = IntMatrix::identity(n);
            for (i, j, k) in ops {
                if i != j {
                    for col in 0..n {
                        let x = a[(j, col)].clone();
                        a[(i, col)] += &(&x * &Int::from(k));
                    }
                }
            }
            MonomialMap { a, c, t }
        })
}

fn arb_word(k: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec((0..k, -2i64..=2), 0..=6).prop_map(Word)
}

proptest! {
    #[test]
    fn composition_is_associative(f in arb_map(3, 5), g in arb_map(3, 5), w1 in arb_word(2), w2 in arb_word(2)) {
        let a = MonomialAction::new(5, s(&["x", "y", "z"]), vec![("f".into(), f), ("g".into(), g)], &[]).unwrap();
        let whole = a.compose(&w1.concat(&w2));
        let split = a.compose(&w1).compose(&a.compose(&w2), 5);
        prop_assert_eq!(whole, split);
        let inv = a.compose(&w1).inverse(5);
        prop_assert!(a.compose(&w1).compose(&inv, 5).is_identity(5));
    }

    #[test]
    fn twist_is_multiplicative(f in arb_map(2, 7), g in arb_map(2, 7), w in arb_word(2)) {
        let a = MonomialAction::new(7, s(&["x", "y"]), vec![("f".into(), f.clone()), ("g".into(), g.clone())], &[]).unwrap();
        let m = a.compose(&w);
        let expected = w.0.iter().fold(1i64, |acc, &(i, k)| {
            let t = if i == 0 { f.t } else { g.t };
            (acc * (t as i64).pow(k.rem_euclid(6) as u32)).rem_euclid(7)
        });
        prop_assert_eq!(m.t, expected);
    }
}
