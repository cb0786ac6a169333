use std::sync::Arc;

use cohomology::{h1_cocycles, tate_hat0};
use exact_linalg::{is_unimodular, kernel, smith, unimodular_inverse, Int, IntMatrix, Solver};
use group_core::{catalog, Subgroup};
use lattice_core::Lattice;
use serde::{Deserialize, Serialize};

use crate::error::PaperError;

/// Multiplicities of the sign lattice `ℤ⁻` (a), the trivial lattice `ℤ` (b)
/// and the regular lattice `ℤ[C₂]` (c).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReinerCounts {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl ReinerCounts {
    pub fn rank(&self) -> usize {
        self.a + self.b + 2 * self.c
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReinerDecomposition {
    pub counts: ReinerCounts,
    /// Columns: `a` sign vectors, `b` fixed vectors, then `c` pairs `(x, τx)`.
    pub basis: IntMatrix,
}

/// `diag(−1)^a ⊕ I_b ⊕ swap^c`.
pub fn block_form(counts: ReinerCounts) -> IntMatrix {
    let n = counts.rank();
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..counts.a {
        m[(i, i)] = Int::from(-1);
    }
    for i in counts.a..counts.a + counts.b {
        m[(i, i)] = Int::one();
    }
    for k in 0..counts.c {
        let i = counts.a + counts.b + 2 * k;
        m[(i, i + 1)] = Int::one();
        m[(i + 1, i)] = Int::one();
    }
    m
}

/// The model lattice `(ℤ⁻)^a ⊕ ℤ^b ⊕ ℤ[C₂]^c` over `C₂ = ⟨tau⟩`.
pub fn reiner_model(counts: ReinerCounts) -> Lattice {
    let g = Arc::new(catalog::cyclic_named(2, "tau"));
    Lattice::new_with_rank(g, counts.rank(), vec![block_form(counts)]).expect("involution")
}

fn involution(m: &Lattice) -> Result<IntMatrix, PaperError> {
    let g = m.group();
    if g.order() != 2 {
        return Err(PaperError::NotC2(g.order()));
    }
    Ok(m.matrix(1 - g.identity()).clone())
}

/// Counts from cohomology: `b = dim Ĥ⁰`, `a = dim H¹`, `c = (rank − a − b)/2`.
pub fn reiner_counts(m: &Lattice) -> Result<ReinerCounts, PaperError> {
    involution(m)?;
    let whole = Subgroup::whole(m.group());
    let b = tate_hat0(&whole, m).p_rank(2);
    let a = h1_cocycles(&whole, m)?.p_rank(2);
    let rest = m.rank() - a - b;
    debug_assert!(rest % 2 == 0);
    Ok(ReinerCounts { a, b, c: rest / 2 })
}

/// Splits a `C₂`-lattice into sign, trivial and regular summands.
///
/// The regular generators `x_i` come from a Smith form of `1 + T` on the
/// fixed lattice; they are then corrected by anti-invariant vectors so that
/// the `(1 − T)x_i` extend to a basis of the anti-invariants.
pub fn reiner_decompose(m: &Lattice) -> Result<ReinerDecomposition, PaperError> {
    let counts = reiner_counts(m)?;
    let t = involution(m)?;
    match construct_basis(&t, counts) {
        Some(basis) => Ok(ReinerDecomposition { counts, basis }),
        None => Err(PaperError::BasisSearchExhausted(counts)),
    }
}

fn construct_basis(t: &IntMatrix, counts: ReinerCounts) -> Option<IntMatrix> {
    let n = t.rows();
    let id = IntMatrix::identity(n);
    let plus = kernel(&t.sub(&id));
    let minus = kernel(&t.add(&id));
    let norm = id.add(t);
    let c = counts.c;
    if plus.cols() != counts.b + c || minus.cols() != counts.a + c {
        return None;
    }

    let coords = Solver::new(&plus).solve(&norm)?;
    let s = smith(&coords, true, true);
    let (u, v) = (s.u?, s.v?);
    if s.diag.len() != plus.cols() || s.diag.iter().take(c).any(|d| !d.is_one()) {
        return None;
    }
    let fixed = plus.mul(&unimodular_inverse(&u)?);
    let mut xs: Vec<Vec<Int>> = (0..c).map(|i| v.column(i)).collect();

    let minus_solver = Solver::new(&minus);
    let s_cols: Vec<Vec<Int>> = xs.iter().map(|x| minus_solver.solve_vec(&id.sub(t).mul_vec(x))).collect::<Option<_>>()?;
    let w = lift_mod2(&s_cols, minus.cols())?;
    for (k, (x, si)) in xs.iter_mut().zip(&s_cols).enumerate() {
        let diff: Vec<Int> = (0..si.len()).map(|r| (&w[(r, k)] - &si[r]).div_exact(&Int::from(2))).collect();
        x.iter_mut().zip(minus.mul_vec(&diff)).for_each(|(a, b)| *a += &b);
    }

    let mut cols: Vec<Vec<Int>> = Vec::with_capacity(n);
    for k in c..minus.cols() {
        cols.push(minus.mul_vec(&w.column(k)));
    }
    for j in c..plus.cols() {
        cols.push(fixed.column(j));
    }
    for x in &xs {
        cols.push(x.clone());
        cols.push(t.mul_vec(x));
    }
    let basis = IntMatrix::from_columns(n, &cols);
    let inv = unimodular_inverse(&basis)?;
    (inv.mul(t).mul(&basis) == block_form(counts)).then_some(basis)
}

fn bit(x: &Int) -> u8 {
    u8::from(!x.mod_floor(&Int::from(2)).is_zero())
}

/// A unimodular `n × n` matrix whose first columns agree with `cols` mod 2,
/// or `None` when they are dependent over `𝔽₂`.
fn lift_mod2(cols: &[Vec<Int>], n: usize) -> Option<IntMatrix> {
    let mut g: Vec<Vec<u8>> = cols.iter().map(|c| c.iter().map(bit).collect()).collect();
    for e in 0..n {
        if g.len() == n {
            break;
        }
        let mut unit = vec![0u8; n];
        unit[e] = 1;
        g.push(unit);
        if f2_rank(&g) < g.len() {
            g.pop();
        }
    }
    if g.len() != n || f2_rank(&g) != n {
        return None;
    }
    // Rows of `a` are the rows of the matrix whose columns are `g`.
    let mut a: Vec<Vec<u8>> = (0..n).map(|r| g.iter().map(|col| col[r]).collect()).collect();
    enum Op {
        Swap(usize, usize),
        Add(usize, usize),
    }
    let mut ops = Vec::new();
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col] == 1)?;
        if piv != col {
            a.swap(piv, col);
            ops.push(Op::Swap(piv, col));
        }
        for r in 0..n {
            if r != col && a[r][col] == 1 {
                for k in 0..n {
                    a[r][k] ^= a[col][k];
                }
                ops.push(Op::Add(r, col));
            }
        }
    }
    let mut w = IntMatrix::identity(n);
    for op in ops.iter().rev() {
        match *op {
            Op::Swap(i, j) => w.swap_rows(i, j),
            Op::Add(i, j) => w.row_sub_mul(i, j, &Int::one()),
        }
    }
    debug_assert!(is_unimodular(&w));
    Some(w)
}

fn f2_rank(rows: &[Vec<u8>]) -> usize {
    let mut m = rows.to_vec();
    let width = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..width {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][col] == 1) else { continue };
        m.swap(piv, rank);
        for r in 0..m.len() {
            if r != rank && m[r][col] == 1 {
                let src = m[rank].clone();
                m[r].iter_mut().zip(src).for_each(|(a, b)| *a ^= b);
            }
        }
        rank += 1;
    }
    rank
}
