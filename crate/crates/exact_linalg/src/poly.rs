use std::fmt;

use serde::{Deserialize, Serialize};

use crate::int::Int;
use crate::matrix::IntMatrix;

/// Dense integer polynomial, coefficients from the constant term upward.
/// Trailing zeros are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::from_i64(&[1])
    }

    /// `x^n`
    pub fn monomial(n: usize) -> Self {
        let mut c = vec![Int::zero(); n + 1];
        c[n] = Int::one();
        IntPoly { coeffs: c }
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &IntPoly, i: usize| p.coeffs.get(i).cloned().unwrap_or_default();
        IntPoly::new((0..n).map(|i| get(self, i) + get(other, i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &IntPoly, i: usize| p.coeffs.get(i).cloned().unwrap_or_default();
        IntPoly::new((0..n).map(|i| get(self, i) - get(other, i)).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return IntPoly::zero();
        }
        let mut out = vec![Int::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_mul(a, b);
            }
        }
        IntPoly::new(out)
    }

    /// `p(x^k)`
    pub fn compose_power(&self, k: usize) -> IntPoly {
        if self.coeffs.is_empty() {
            return IntPoly::zero();
        }
        let mut out = vec![Int::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] = c.clone();
        }
        IntPoly::new(out)
    }

    /// Division by a monic polynomial: `(quotient, remainder)`.
    pub fn div_rem_monic(&self, d: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(d.is_monic(), "divisor must be monic");
        let dd = d.degree().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (IntPoly::zero(), self.clone());
        }
        let mut q = vec![Int::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (i, di) in d.coeffs.iter().enumerate() {
                r[k + i].sub_mul(&c, di);
            }
            q[k] = c;
        }
        (IntPoly::new(q), IntPoly::new(r))
    }

    /// Evaluates at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, a: &IntMatrix) -> IntMatrix {
        assert!(a.is_square());
        let n = a.rows();
        let mut acc = IntMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(a);
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        acc
    }

    pub fn eval(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Companion matrix in the column convention: `e_i ↦ e_{i+1}`, and the last
    /// basis vector goes to minus the coefficient column.
    pub fn companion(&self) -> IntMatrix {
        assert!(self.is_monic(), "companion matrix needs a monic polynomial");
        let n = self.degree().unwrap();
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n.saturating_sub(1) {
            m[(i + 1, i)] = Int::one();
        }
        for i in 0..n {
            m[(i, n - 1)] = -&self.coeffs[i];
        }
        m
    }
}

/// Characteristic polynomial `det(xI - A)` by the Faddeev–LeVerrier recurrence.
/// All divisions are exact over the integers.
pub fn charpoly(a: &IntMatrix) -> IntPoly {
    assert!(a.is_square());
    let n = a.rows();
    let mut coeffs = vec![Int::zero(); n + 1];
    coeffs[n] = Int::one();
    let mut m = IntMatrix::identity(n);
    for k in 1..=n {
        let am = a.mul(&m);
        let c = (-am.trace()).div_exact(&Int::from(k as i64));
        coeffs[n - k] = c.clone();
        m = am;
        for i in 0..n {
            m[(i, i)] += &c;
        }
    }
    IntPoly::new(coeffs)
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = !a.is_one() || i == 0;
            if show_coeff {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "T")?,
                _ => write!(f, "T^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_companion_recovers_poly() {
        let p = IntPoly::from_i64(&[1, 0, 1, 0, 1]);
        assert_eq!(charpoly(&p.companion()), p);
        assert!(p.eval_matrix(&p.companion()).is_zero());
    }

    #[test]
    fn monic_division() {
        let num = IntPoly::from_i64(&[-1, 0, 0, 1]);
        let d = IntPoly::from_i64(&[-1, 1]);
        let (q, r) = num.div_rem_monic(&d);
        assert_eq!(q, IntPoly::from_i64(&[1, 1, 1]));
        assert_eq!(r, IntPoly::zero());
        assert_eq!(q.to_string(), "T^2 + T + 1");
    }
}
