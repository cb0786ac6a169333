use std::collections::BTreeSet;

use exact_linalg::{Int, IntPoly};
use serde::{Deserialize, Serialize};

use crate::error::PaperError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicPoly {
    pub index: usize,
    /// Constant term first.
    pub coeffs: Vec<Int>,
}

impl CyclotomicPoly {
    pub fn poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.clone())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

pub fn is_prime(n: i64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

pub(crate) fn check_odd_prime(p: i64) -> Result<usize, PaperError> {
    if p > 2 && is_prime(p) {
        Ok(p as usize)
    } else {
        Err(PaperError::NotOddPrime(p))
    }
}

/// `Φ_n` as `(Tⁿ − 1) / ∏_{d | n, d < n} Φ_d`.
pub fn cyclotomic(n: usize) -> CyclotomicPoly {
    assert!(n >= 1);
    let mut num = vec![Int::zero(); n + 1];
    num[0] = Int::from(-1);
    num[n] = Int::one();
    let mut q = IntPoly::new(num);
    for d in (1..n).filter(|d| n % d == 0) {
        let (quot, rem) = q.div_rem_monic(&cyclotomic(d).poly());
        debug_assert!(rem.degree().is_none());
        q = quot;
    }
    CyclotomicPoly { index: n, coeffs: q.coeffs().to_vec() }
}

/// Euler's totient by trial division.
pub fn euler_phi(mut n: usize) -> usize {
    let mut out = n;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            while n % d == 0 {
                n /= d;
            }
            out -= out / d;
        }
        d += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// `Φ_p(T²) = Φ_p(T)·Φ_{2p}(T)` as polynomials, and `Σ σ^{2i} = Σ σ^i` in
/// `ℤ[C_p]` because doubling permutes the exponents mod `p`.
pub fn cyclotomic_identity(p: i64) -> Result<bool, PaperError> {
    let p = check_odd_prime(p)?;
    let phi_p = cyclotomic(p).poly();
    let lhs = phi_p.compose_power(2);
    let rhs = phi_p.mul(&cyclotomic(2 * p).poly());
    let doubled: BTreeSet<usize> = (0..p).map(|i| 2 * i % p).collect();
    Ok(lhs == rhs && doubled.len() == p)
}
