//! Small groups realized as permutation groups.

use crate::group::{direct_product, FiniteGroup};
use crate::word::Word;


fn perm_group(gens: Vec<(&str, Vec<usize>)>) -> FiniteGroup {
    let gens: Vec<(String, Vec<usize>)> = gens.into_iter().map(|(n, p)| (n.to_string(), p)).collect();
    FiniteGroup::from_permutations(&gens, usize::MAX).expect("catalog group")
}

fn cycle(n: usize) -> Vec<usize> {
    (0..n).map(|i| (i + 1) % n).collect()
}

/// Cyclic group of order `n` with generator `g`.
pub fn cyclic(n: usize) -> FiniteGroup {
    perm_group(vec![("g", cycle(n.max(1)))])
}

pub fn cyclic_named(n: usize, name: &str) -> FiniteGroup {
    perm_group(vec![(name, cycle(n.max(1)))])
}

/// `C_{n1} × C_{n2} × ...` with generators `g1, g2, ...`.
pub fn abelian(orders: &[usize]) -> FiniteGroup {
    let degree: usize = orders.iter().sum();
    let mut gens = Vec::new();
    let mut off = 0;
    for (k, &n) in orders.iter().enumerate() {
        let mut p: Vec<usize> = (0..degree).collect();
        for i in 0..n {
            p[off + i] = off + (i + 1) % n;
        }
        off += n;
        gens.push((format!("g{}", k + 1), p));
    }
    FiniteGroup::from_permutations(&gens, usize::MAX).expect("abelian group")
}

/// Dihedral group of order `2n`, generators `r` (rotation) and `s` (reflection).
pub fn dihedral(n: usize) -> FiniteGroup {
    let r = cycle(n);
    let s: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    perm_group(vec![("r", r), ("s", s)])
}

/// Symmetric group on `n` points, generated by a transposition and an n-cycle.
pub fn symmetric(n: usize) -> FiniteGroup {
    let mut t: Vec<usize> = (0..n).collect();
    if n >= 2 {
        t.swap(0, 1);
    }
    perm_group(vec![("t", t), ("c", cycle(n))])
}

pub fn alternating4() -> FiniteGroup {
    perm_group(vec![("a", vec![1, 2, 0, 3]), ("b", vec![0, 2, 3, 1])])
}

/// Quaternion group of order 8 through its regular action.
pub fn quaternion() -> FiniteGroup {
    // Elements ±1, ±i, ±j, ±k encoded as (sign, unit) with unit in {1,i,j,k}.
    let mul_unit = |a: usize, b: usize| -> (bool, usize) {
        const T: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        T[a][b]
    };
    let enc = |neg: bool, u: usize| u + if neg { 4 } else { 0 };
    let left = |g: usize| -> Vec<usize> {
        (0..8)
            .map(|x| {
                let (gn, gu) = (g >= 4, g % 4);
                let (xn, xu) = (x >= 4, x % 4);
                let (n, u) = mul_unit(gu, xu);
                enc(gn ^ xn ^ n, u)
            })
            .collect()
    };
    perm_group(vec![("i", left(1)), ("j", left(2))])
}

/// Nonabelian group of order `p^3` and exponent `p` (odd `p`) in its regular
/// action, as unitriangular 3×3 matrices over `Z/p`. Generators:
/// `sigma1 = I+E13` (central), `sigma2 = I+E12`, `sigma3 = I+E23`,
/// so that `sigma2 sigma3 = sigma3 sigma1 sigma2`.
pub fn heisenberg(p: usize) -> FiniteGroup {
    // (x, y, z) stands for I + x E12 + y E23 + z E13.
    let idx = |x: usize, y: usize, z: usize| x + p * y + p * p * z;
    let mulm = |a: (usize, usize, usize), b: (usize, usize, usize)| {
        ((a.0 + b.0) % p, (a.1 + b.1) % p, (a.2 + b.2 + a.0 * b.1) % p)
    };
    let left = |g: (usize, usize, usize)| -> Vec<usize> {
        let mut img = vec![0; p * p * p];
        for z in 0..p {
            for y in 0..p {
                for x in 0..p {
                    let r = mulm(g, (x, y, z));
                    img[idx(x, y, z)] = idx(r.0, r.1, r.2);
                }
            }
        }
        img
    };
    perm_group(vec![("sigma1", left((0, 0, 1))), ("sigma2", left((1, 0, 0))), ("sigma3", left((0, 1, 0)))])
}

/// Relations of the order-`p^3` exponent-`p` presentation over generators
/// `sigma1, sigma2, sigma3`.
pub fn heisenberg_relations(p: usize) -> Vec<(Word, Word)> {
    let e = p as i64;
    vec![
        (Word(vec![(0, e)]), Word::identity()),
        (Word(vec![(1, e)]), Word::identity()),
        (Word(vec![(2, e)]), Word::identity()),
        (Word(vec![(0, 1), (1, 1)]), Word(vec![(1, 1), (0, 1)])),
        (Word(vec![(0, 1), (2, 1)]), Word(vec![(2, 1), (0, 1)])),
        (Word(vec![(1, 1), (2, 1)]), Word(vec![(2, 1), (0, 1), (1, 1)])),
    ]
}

/// Named catalog used by the CLI and fixture generation.
pub fn by_name(name: &str) -> Option<FiniteGroup> {
    let g = match name {
        "trivial" => cyclic(1),
        "C2xC2" | "V4" => abelian(&[2, 2]),
        "C2xC4" => abelian(&[2, 4]),
        "C2xC2xC2" => abelian(&[2, 2, 2]),
        "C2xC6" => abelian(&[2, 6]),
        "C3xC3" => abelian(&[3, 3]),
        "C4xC4" => abelian(&[4, 4]),
        "C2xC2xC2xC2" => abelian(&[2, 2, 2, 2]),
        "S3" => symmetric(3),
        "S4" => symmetric(4),
        "A4" => alternating4(),
        "Q8" => quaternion(),
        "D4" => dihedral(4),
        "D5" => dihedral(5),
        "D6" => dihedral(6),
        "D8" => dihedral(8),
        "C2xS3" => direct_product(&cyclic(2), &symmetric(3)),
        "C2xD4" => direct_product(&cyclic(2), &dihedral(4)),
        "C2xQ8" => direct_product(&cyclic(2), &quaternion()),
        "Heis3" => heisenberg(3),
        _ => {
            let n: usize = name.strip_prefix('C')?.parse().ok()?;
            cyclic(n)
        }
    };
    Some(g)
}

/// Fixture set of small groups: every group of order at most 8 up to
/// isomorphism, plus a selection of orders 9 to 16.
pub fn small_groups(max_order: usize) -> Vec<(String, FiniteGroup)> {
    let list = [
        "trivial", "C2", "C3", "C4", "C2xC2", "C5", "C6", "S3", "C7", "C8", "C2xC4", "C2xC2xC2", "D4", "Q8", "C9",
        "C3xC3", "C10", "D5", "C12", "C2xC6", "A4", "D6", "C14", "C16", "C4xC4", "C2xC2xC2xC2", "D8", "C2xD4",
        "C2xQ8",
    ];
    list.iter()
        .filter_map(|n| by_name(n).map(|g| (n.to_string(), g)))
        .filter(|(_, g)| g.order() <= max_order)
        .collect()
}

