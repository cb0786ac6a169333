use exact_linalg::{solve_one, 
    determinant, invariant_factors, is_saturated, kernel, kernel_image_cokernel, rank, saturate, smith,
    smith_normal_form, FinAbGroup, Int, IntMatrix, Solver,
};
use proptest::prelude::*;

// Independent determinant by cofactor expansion, small sizes only.
fn cofactor_det(a: &[Vec<i64>]) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return a[0][0] as i128;
    }
    let mut total = 0i128;
    for j in 0..n {
        if a[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> =
            a[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &v)| v).collect()).collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total += sign * a[0][j] as i128 * cofactor_det(&minor);
    }
    total
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

// Determinantal divisors: the invariant factors are d_k / d_{k-1}.
fn minor_gcd_oracle(a: &[Vec<i64>]) -> Vec<i128> {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut divisors = vec![1i128];
    for k in 1..=m.min(n) {
        let mut g = 0i128;
        for rs in subsets(m, k) {
            for cs in subsets(n, k) {
                let sub: Vec<Vec<i64>> = rs.iter().map(|&i| cs.iter().map(|&j| a[i][j]).collect()).collect();
                g = gcd(g, cofactor_det(&sub));
            }
        }
        if g == 0 {
            break;
        }
        divisors.push(g);
    }
    divisors.windows(2).map(|w| w[1] / w[0]).collect()
}

fn to_i128(v: &[Int]) -> Vec<i128> {
    v.iter().map(|x| x.to_i64().unwrap() as i128).collect()
}

fn matrix_strategy(max_dim: usize, bound: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(-bound..=bound, c), r)
    })
}

#[test]
fn snf_examples_against_oracle() {
    for rows in [vec![vec![2, 0], vec![0, 3]], vec![vec![1, 2], vec![3, 4]]] {
        let a = IntMatrix::from_rows(&rows);
        assert_eq!(to_i128(&invariant_factors(&a)), minor_gcd_oracle(&rows));
    }
}

#[test]
fn cokernel_examples() {
    let (k, _, c) = kernel_image_cokernel(&IntMatrix::from_rows(&[[2]]));
    assert_eq!(k.cols(), 0);
    assert_eq!(c, FinAbGroup::cyclic(2));
    let (k, _, c) = kernel_image_cokernel(&IntMatrix::identity(4));
    assert_eq!(k.cols(), 0);
    assert!(c.is_trivial());
    let (_, _, c) = kernel_image_cokernel(&IntMatrix::from_rows(&[[2, 0], [0, 3]]));
    assert_eq!(c, FinAbGroup::cyclic(6));
}

#[test]
fn saturation_index_matches_determinant_ratio() {
    // span{(2,2),(0,4)} has determinant 8 and saturates to Z^2.
    let s = IntMatrix::from_rows(&[[2, 0], [2, 4]]);
    let (sat, idx) = saturate(&s);
    assert_eq!(cofactor_det(&[vec![2, 0], vec![2, 4]]).abs(), 8);
    assert_eq!(idx.to_i64(), Some(8));
    assert_eq!(determinant(&sat).abs(), Int::one());
    let pure = IntMatrix::from_rows(&[[1], [1], [0]]);
    let (sat, idx) = saturate(&pure);
    assert_eq!(sat, pure);
    assert!(idx.is_one());
}

#[test]
fn snf_round_trip_thousand_random() {
    use proptest::strategy::ValueTree;
    use proptest::test_runner::TestRunner;
    let mut runner = TestRunner::deterministic();
    let strat = matrix_strategy(12, 50);
    for _ in 0..1000 {
        let rows = strat.new_tree(&mut runner).unwrap().current();
        let a = IntMatrix::from_rows(&rows);
        let (u, d, v) = smith_normal_form(&a);
        assert_eq!(u.mul(&a).mul(&v), d);
        assert!(determinant(&u).is_unit());
        assert!(determinant(&v).is_unit());
        let diag: Vec<Int> = (0..d.rows().min(d.cols())).map(|i| d[(i, i)].clone()).filter(|x| !x.is_zero()).collect();
        assert!(diag.windows(2).all(|w| w[0].divides(&w[1])));
    }
}

proptest! {
    #[test]
    fn diagonal_matches_minor_gcds(rows in matrix_strategy(5, 9)) {
        let a = IntMatrix::from_rows(&rows);
        prop_assert_eq!(to_i128(&invariant_factors(&a)), minor_gcd_oracle(&rows));
    }

    #[test]
    fn kernel_plus_image_rank(rows in matrix_strategy(8, 3)) {
        let a = IntMatrix::from_rows(&rows);
        let k = kernel(&a);
        prop_assert!(a.mul(&k).is_zero());
        prop_assert_eq!(k.cols() + rank(&a), a.cols());
        if k.cols() > 0 {
            prop_assert!(is_saturated(&k));
        }
    }

    #[test]
    fn solver_recovers_combinations(rows in matrix_strategy(6, 5), coeffs in prop::collection::vec(-4i64..=4, 6)) {
        let b = IntMatrix::from_rows(&rows);
        let x: Vec<Int> = coeffs.iter().take(b.cols()).map(|&c| Int::from(c)).collect();
        let y = b.mul_vec(&x);
        let sol = Solver::new(&b).solve_vec(&y).expect("y lies in the span");
        prop_assert_eq!(b.mul_vec(&sol), y);
    }

    #[test]
    fn determinant_matches_cofactor(rows in (1usize..=5).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-9i64..=9, n), n))) {
        let a = IntMatrix::from_rows(&rows);
        prop_assert_eq!(determinant(&a).to_i64().unwrap() as i128, cofactor_det(&rows));
        let s = smith(&a, false, false);
        let prod: i128 = to_i128(&s.diag).iter().product();
        if s.rank() == rows.len() {
            prop_assert_eq!(prod, cofactor_det(&rows).abs());
        }
    }
}

proptest! {
    #[test]
    fn solve_one_matches_solver(rows in 1usize..6, cols in 1usize..6, entries in proptest::collection::vec(-6i64..6, 36), x in proptest::collection::vec(-5i64..5, 6), perturb in 0i64..3) {
        let a = IntMatrix::from_vec(rows, cols, entries[..rows * cols].iter().map(|&v| Int::from(v)).collect());
        let xv: Vec<Int> = x[..cols].iter().map(|&v| Int::from(v)).collect();
        let mut b = a.mul_vec(&xv);
        b[0] += &Int::from(perturb);
        let expect = Solver::new(&a).solve_vec(&b);
        let got = solve_one(&a, &b);
        prop_assert_eq!(expect.is_some(), got.is_some());
        if let Some(s) = got {
            prop_assert_eq!(a.mul_vec(&s), b);
        }
    }
}
