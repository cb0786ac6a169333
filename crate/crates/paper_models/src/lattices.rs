use std::sync::Arc;

use exact_linalg::{is_unimodular, Int, IntMatrix};
use group_core::FiniteGroup;
use lattice_core::{Lattice, LatticeMap};

use crate::cyclotomic::{check_odd_prime, cyclotomic};
use crate::error::PaperError;

/// `π = ⟨σ₃, τ⟩ ≅ C_p × C₂` acting on `p + 2` points: `σ₃` cycles the first
/// `p` points and `τ` swaps the last two.
pub fn pi_group(p: i64) -> Result<Arc<FiniteGroup>, PaperError> {
    let n = check_odd_prime(p)?;
    let sigma: Vec<usize> = (0..n).map(|i| (i + 1) % n).chain([n, n + 1]).collect();
    let tau: Vec<usize> = (0..n).chain([n + 1, n]).collect();
    let gens = vec![("sigma3".to_string(), sigma), ("tau".to_string(), tau)];
    Ok(Arc::new(FiniteGroup::from_permutations(&gens, usize::MAX)?))
}

/// Companion matrix of `Φ_p`: `e_i ↦ e_{i+1}` and `e_{p−1} ↦ −Σ e_i`.
fn cyclic_block(p: usize) -> IntMatrix {
    cyclotomic(p).poly().companion()
}

/// The lattice spanned by `u_1, …, u_{p−1}, w_1, …, w_{p−1}` (in that order)
/// with `σ₃` cycling each block through `Φ_p` and
/// `τ: u_i ↦ −u_i + w_i − w_{i−1}`, `w_i ↦ w_i`, where `w_0 = −Σ w_i`.
pub fn case1_lattice(p: i64) -> Result<Lattice, PaperError> {
    let g = pi_group(p)?;
    let n = p as usize - 1;
    let c = cyclic_block(p as usize);
    let sigma = c.block_diag(&c);
    let mut tau = IntMatrix::identity(2 * n);
    for i in 0..n {
        tau[(i, i)] = Int::from(-1);
        tau[(n + i, i)] += &Int::one();
        if i == 0 {
            for k in 0..n {
                tau[(n + k, i)] += &Int::one();
            }
        } else {
            tau[(n + i - 1, i)] -= &Int::one();
        }
    }
    Ok(Lattice::new(g, vec![sigma, tau])?)
}

/// `ℤ[T]/(Φ_p Φ_{2p})` with `ρ` acting as the companion matrix `C`,
/// `σ₃ = C^{p+1}` and `τ = C^p`.
pub fn lambda_lattice(p: i64) -> Result<Lattice, PaperError> {
    let g = pi_group(p)?;
    let n = p as usize;
    let c = cyclotomic(n).poly().mul(&cyclotomic(2 * n).poly()).companion();
    Ok(Lattice::new(g, vec![c.pow(n as u64 + 1), c.pow(n as u64)])?)
}

/// `ℤ[⟨τ⟩] ⊗ ℤ[⟨σ₃⟩]/Φ_p`: `σ₃ = I₂ ⊗ C(Φ_p)` and `τ` swaps the two blocks.
pub fn lambda_tensor(p: i64) -> Result<Lattice, PaperError> {
    let g = pi_group(p)?;
    let c = cyclic_block(p as usize);
    let swap = IntMatrix::from_rows(&[[0, 1], [1, 0]]);
    let n = c.rows();
    Ok(Lattice::new(g, vec![IntMatrix::identity(2).kron(&c), swap.kron(&IntMatrix::identity(n))])?)
}

/// `ρ(σ₃)ρ(τ)`, a generator of the cyclic group `π`.
pub fn rho_matrix(m: &Lattice) -> IntMatrix {
    m.action()[0].mul(&m.action()[1])
}

/// The map `Λ → M` sending `ρ^k` to `ρ^k·v` with `v = u_1 − w_1`, checked to
/// be a unimodular intertwiner.
pub fn verify_case1_iso(p: i64) -> Result<LatticeMap, PaperError> {
    let m = case1_lattice(p)?;
    let lambda = lambda_lattice(p)?;
    let n = m.rank();
    let rho = rho_matrix(&m);
    let mut v = vec![Int::zero(); n];
    v[0] = Int::one();
    v[n / 2] = Int::from(-1);
    let mut cols = Vec::with_capacity(n);
    for _ in 0..n {
        let next = rho.mul_vec(&v);
        cols.push(std::mem::replace(&mut v, next));
    }
    let x = IntMatrix::from_columns(n, &cols);
    if !is_unimodular(&x) {
        return Err(PaperError::IsoCheckFailed(format!("orbit matrix of v is not unimodular for p = {p}")));
    }
    LatticeMap::new(lambda, m, x).map_err(|e| PaperError::IsoCheckFailed(e.to_string()))
}
