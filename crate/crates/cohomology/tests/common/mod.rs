#![allow(dead_code)]

use std::sync::Arc;

use exact_linalg::IntMatrix;
use group_core::FiniteGroup;
use lattice_core::samples::{atoms, elementary_product};
use lattice_core::{direct_sum_all, Lattice};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Product of random elementary matrices, optionally with a row swap.
pub fn random_unimodular(rng: &mut StdRng, n: usize, steps: usize, max: i64) -> IntMatrix {
    if n < 2 {
        return IntMatrix::identity(n);
    }
    let ops: Vec<(usize, usize, i64)> =
        (0..steps).map(|_| (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(-max..=max))).collect();
    let mut m = elementary_product(n, &ops);
    if rng.random_bool(0.5) {
        m.swap_rows(0, n - 1);
    }
    m
}

/// Sum of random building blocks of total rank at most `max_rank`, disguised
/// by a unimodular change of basis.
pub fn random_lattice(rng: &mut StdRng, g: &Arc<FiniteGroup>, max_rank: usize) -> Lattice {
    let pool = atoms(g, max_rank);
    let mut parts: Vec<Lattice> = Vec::new();
    let mut rank = 0;
    for _ in 0..4 {
        let a = &pool[rng.random_range(0..pool.len())];
        if rank + a.rank() > max_rank || a.rank() == 0 {
            continue;
        }
        rank += a.rank();
        parts.push(a.clone());
        if rng.random_bool(0.35) {
            break;
        }
    }
    if parts.is_empty() {
        parts.push(Lattice::trivial(g, 1));
    }
    let sum = direct_sum_all(&parts).unwrap();
    let b = random_unimodular(rng, sum.rank(), 2 * sum.rank(), 2);
    sum.change_basis(&b).unwrap()
}
