use std::fmt;

use serde::{Deserialize, Serialize};

use crate::int::Int;
use crate::matrix::IntMatrix;
use crate::normal_form::invariant_factors;

/// Finitely generated abelian group `Z^free_rank ⊕ Z/d1 ⊕ ... ⊕ Z/dk`
/// with `d1 | d2 | ... | dk` and every `di >= 2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize, Default)]
pub struct FinAbGroup {
    pub invariant_factors: Vec<Int>,
    pub free_rank: usize,
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        FinAbGroup::default()
    }

    pub fn cyclic(n: i64) -> Self {
        FinAbGroup::from_diagonal(&[Int::from(n)], 0)
    }

    /// From a Smith diagonal (positive, divisibility chain) plus extra free rank.
    /// Entries equal to 1 are dropped; zeros count as free summands.
    pub fn from_diagonal(diag: &[Int], extra_free: usize) -> Self {
        let mut free = extra_free;
        let mut factors = Vec::new();
        for d in diag {
            if d.is_zero() {
                free += 1;
            } else if !d.is_unit() {
                factors.push(d.abs());
            }
        }
        let chained = factors.windows(2).all(|w| w[0].divides(&w[1]));
        if !chained {
            let diag_m = IntMatrix::diagonal(&factors);
            factors = invariant_factors(&diag_m).into_iter().filter(|d| !d.is_one()).collect();
        }
        FinAbGroup { invariant_factors: factors, free_rank: free }
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty() && self.free_rank == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of a finite group; `None` when there is a free part.
    pub fn order(&self) -> Option<Int> {
        self.is_finite().then(|| self.invariant_factors.iter().product())
    }

    /// Number of cyclic factors whose order is divisible by `p`; for a group
    /// of exponent `p` this is its dimension over `F_p`.
    pub fn p_rank(&self, p: i64) -> usize {
        let p = Int::from(p);
        self.invariant_factors.iter().filter(|d| p.divides(d)).count()
    }

    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        let mut all = self.invariant_factors.clone();
        all.extend(other.invariant_factors.iter().cloned());
        all.sort();
        FinAbGroup::from_diagonal(&all, self.free_rank + other.free_rank)
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("ℤ".to_string()),
            r => parts.push(format!("ℤ^{r}")),
        }
        for d in &self.invariant_factors {
            parts.push(format!("ℤ/{d}"));
        }
        write!(f, "{}", parts.join(" ⊕ "))
    }
}
