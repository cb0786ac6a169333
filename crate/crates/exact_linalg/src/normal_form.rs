use crate::finab::FinAbGroup;
use crate::int::Int;
use crate::matrix::IntMatrix;

/// Result of a Smith normal form computation: `u * a * v = diag(diag, 0...)`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub rows: usize,
    pub cols: usize,
    /// Nonzero diagonal entries, positive, each dividing the next.
    pub diag: Vec<Int>,
    pub u: Option<IntMatrix>,
    pub v: Option<IntMatrix>,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    pub fn d_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.rows, self.cols);
        for (i, x) in self.diag.iter().enumerate() {
            d[(i, i)] = x.clone();
        }
        d
    }

    pub fn cokernel(&self) -> FinAbGroup {
        FinAbGroup::from_diagonal(&self.diag, self.rows - self.rank())
    }
}

/// Smith normal form with optional transformation tracking.
///
/// Pivot: the nonzero entry of least absolute value in the active block,
/// ties broken by lowest row, then lowest column.
pub fn smith(a: &IntMatrix, track_u: bool, track_v: bool) -> Smith {
    let (m, n) = (a.rows(), a.cols());
    let mut w = a.clone();
    let mut u = track_u.then(|| IntMatrix::identity(m));
    let mut v = track_v.then(|| IntMatrix::identity(n));
    let mut diag = Vec::new();

    for t in 0..m.min(n) {
        'pivot: loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let x = &w[(i, j)];
                    if x.is_zero() {
                        continue;
                    }
                    match best {
                        None => best = Some((i, j)),
                        Some((bi, bj)) => {
                            if x.cmp_abs(&w[(bi, bj)]) == std::cmp::Ordering::Less {
                                best = Some((i, j));
                            }
                        }
                    }
                    if x.is_unit() {
                        break;
                    }
                }
                if let Some((bi, bj)) = best {
                    if w[(bi, bj)].is_unit() {
                        break;
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(m, n, diag, u, v);
            };
            w.swap_rows(t, pi);
            if let Some(u) = u.as_mut() {
                u.swap_rows(t, pi);
            }
            w.swap_cols(t, pj);
            if let Some(v) = v.as_mut() {
                v.swap_cols(t, pj);
            }

            let p = w[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..m {
                if w[(i, t)].is_zero() {
                    continue;
                }
                let q = w[(i, t)].div_floor(&p);
                w.row_sub_mul(i, t, &q);
                if let Some(u) = u.as_mut() {
                    u.row_sub_mul(i, t, &q);
                }
                if !w[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if w[(t, j)].is_zero() {
                    continue;
                }
                let q = w[(t, j)].div_floor(&p);
                w.col_sub_mul(j, t, &q);
                if let Some(v) = v.as_mut() {
                    v.col_sub_mul(j, t, &q);
                }
                if !w[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue 'pivot;
            }
            if !p.is_unit() {
                for i in t + 1..m {
                    for j in t + 1..n {
                        if !p.divides(&w[(i, j)]) {
                            // Pull the offending row into the pivot row and redo.
                            w.row_sub_mul(t, i, &Int::from(-1));
                            if let Some(u) = u.as_mut() {
                                u.row_sub_mul(t, i, &Int::from(-1));
                            }
                            continue 'pivot;
                        }
                    }
                }
            }
            break;
        }
        if w[(t, t)].is_negative() {
            w.negate_row(t);
            if let Some(u) = u.as_mut() {
                u.negate_row(t);
            }
        }
        diag.push(w[(t, t)].clone());
    }
    finish(m, n, diag, u, v)
}

fn finish(m: usize, n: usize, diag: Vec<Int>, u: Option<IntMatrix>, v: Option<IntMatrix>) -> Smith {
    Smith { rows: m, cols: n, diag, u, v }
}

/// `(U, D, V)` with `U·A·V = D`.
pub fn smith_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let s = smith(a, true, true);
    let d = s.d_matrix();
    (s.u.unwrap(), d, s.v.unwrap())
}

pub fn invariant_factors(a: &IntMatrix) -> Vec<Int> {
    smith(a, false, false).diag
}

pub fn rank(a: &IntMatrix) -> usize {
    if a.rows() <= a.cols() {
        hermite_rows(&a.clone(), false).rank
    } else {
        hermite_rows(&a.transpose(), false).rank
    }
}

/// Row-style Hermite normal form: `u * a = h`, with `h` in row echelon form,
/// positive pivots and entries above each pivot reduced into `[0, pivot)`.
#[derive(Clone, Debug)]
pub struct Hermite {
    pub h: IntMatrix,
    pub u: Option<IntMatrix>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

pub fn hermite_rows(a: &IntMatrix, track: bool) -> Hermite {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = track.then(|| IntMatrix::identity(m));
    let mut r = 0;
    let mut pivots = Vec::new();
    for col in 0..n {
        if r == m {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..m {
                if h[(i, col)].is_zero() {
                    continue;
                }
                if best.map_or(true, |b| h[(i, col)].cmp_abs(&h[(b, col)]) == std::cmp::Ordering::Less) {
                    best = Some(i);
                }
            }
            let Some(bi) = best else { break };
            h.swap_rows(r, bi);
            if let Some(u) = u.as_mut() {
                u.swap_rows(r, bi);
            }
            let p = h[(r, col)].clone();
            let mut done = true;
            for i in r + 1..m {
                if h[(i, col)].is_zero() {
                    continue;
                }
                let q = h[(i, col)].div_floor(&p);
                h.row_sub_mul(i, r, &q);
                if let Some(u) = u.as_mut() {
                    u.row_sub_mul(i, r, &q);
                }
                if !h[(i, col)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(r, col)].is_zero() {
            continue;
        }
        if h[(r, col)].is_negative() {
            h.negate_row(r);
            if let Some(u) = u.as_mut() {
                u.negate_row(r);
            }
        }
        let p = h[(r, col)].clone();
        for i in 0..r {
            if h[(i, col)].is_zero() {
                continue;
            }
            let q = h[(i, col)].div_floor(&p);
            h.row_sub_mul(i, r, &q);
            if let Some(u) = u.as_mut() {
                u.row_sub_mul(i, r, &q);
            }
        }
        pivots.push(col);
        r += 1;
    }
    Hermite { h, u, rank: r, pivots }
}

/// Column-style Hermite basis of the column span of `a` (zero columns dropped).
pub fn column_hermite_basis(a: &IntMatrix) -> IntMatrix {
    let hr = hermite_rows(&a.transpose(), false);
    let rows: Vec<usize> = (0..hr.rank).collect();
    let mut out = IntMatrix::zeros(a.rows(), rows.len());
    for (k, &i) in rows.iter().enumerate() {
        for j in 0..a.rows() {
            out[(j, k)] = hr.h[(i, j)].clone();
        }
    }
    out
}

/// Saturated basis of `{x : a x = 0}` straight from the Smith transform.
pub fn kernel_raw(a: &IntMatrix) -> IntMatrix {
    let s = smith(a, false, true);
    let r = s.rank();
    s.v.unwrap().columns_range(r, a.cols())
}

/// Saturated kernel basis in column Hermite form.
pub fn kernel(a: &IntMatrix) -> IntMatrix {
    let k = kernel_raw(a);
    if k.cols() == 0 {
        return k;
    }
    column_hermite_basis(&k)
}

/// Basis of the column span of `a`, column Hermite form.
pub fn image(a: &IntMatrix) -> IntMatrix {
    column_hermite_basis(a)
}

pub fn cokernel(a: &IntMatrix) -> FinAbGroup {
    smith(a, false, false).cokernel()
}

pub fn kernel_image_cokernel(a: &IntMatrix) -> (IntMatrix, IntMatrix, FinAbGroup) {
    (kernel(a), image(a), cokernel(a))
}

/// Basis of `span_Q(S) ∩ Z^n` together with the index of `span_Z(S)` in it.
pub fn saturate(s: &IntMatrix) -> (IntMatrix, Int) {
    let n = s.rows();
    let factors = invariant_factors(s);
    let index: Int = factors.iter().product();
    if factors.is_empty() {
        return (IntMatrix::zeros(n, 0), Int::one());
    }
    let left = kernel_raw(&s.transpose());
    let sat = if left.cols() == 0 { IntMatrix::identity(n) } else { kernel_raw(&left.transpose()) };
    (column_hermite_basis(&sat), index)
}

/// True when the columns of `s` span a pure sublattice.
pub fn is_saturated(s: &IntMatrix) -> bool {
    invariant_factors(s).iter().all(|d| d.is_one())
}

/// Fraction-free determinant (Bareiss).
pub fn determinant(a: &IntMatrix) -> Int {
    assert!(a.is_square(), "determinant of a non-square matrix");
    let n = a.rows();
    if n == 0 {
        return Int::one();
    }
    let mut m = a.clone();
    let mut sign = 1i64;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            let Some(sw) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                return Int::zero();
            };
            m.swap_rows(k, sw);
            sign = -sign;
        }
        let pivot = m[(k, k)].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let val = &(&m[(i, j)] * &pivot) - &(&m[(i, k)] * &m[(k, j)]);
                m[(i, j)] = val.div_exact(&prev);
            }
            m[(i, k)] = Int::zero();
        }
        prev = pivot;
    }
    let d = m[(n - 1, n - 1)].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

pub fn is_unimodular(a: &IntMatrix) -> bool {
    a.is_square() && determinant(a).is_unit()
}

/// Inverse of a unimodular matrix, `None` otherwise.
pub fn unimodular_inverse(a: &IntMatrix) -> Option<IntMatrix> {
    if !a.is_square() {
        return None;
    }
    let h = hermite_rows(a, true);
    if h.h.is_identity() {
        h.u
    } else {
        None
    }
}

/// Precomputed solver for `B x = y` over the integers.
#[derive(Clone, Debug)]
pub struct Solver {
    smith: Smith,
}

impl Solver {
    pub fn new(b: &IntMatrix) -> Self {
        Solver { smith: smith(b, true, true) }
    }

    pub fn rank(&self) -> usize {
        self.smith.rank()
    }

    /// Integer solution of `B x = y` for a single vector.
    pub fn solve_vec(&self, y: &[Int]) -> Option<Vec<Int>> {
        let u = self.smith.u.as_ref().unwrap();
        let v = self.smith.v.as_ref().unwrap();
        let uy = u.mul_vec(y);
        let r = self.rank();
        if uy[r..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut z = vec![Int::zero(); self.smith.cols];
        for i in 0..r {
            if !self.smith.diag[i].divides(&uy[i]) {
                return None;
            }
            z[i] = uy[i].div_exact(&self.smith.diag[i]);
        }
        Some(v.mul_vec(&z))
    }

    /// Integer solution of `B X = Y` column by column.
    pub fn solve(&self, y: &IntMatrix) -> Option<IntMatrix> {
        let u = self.smith.u.as_ref().unwrap();
        let v = self.smith.v.as_ref().unwrap();
        let uy = u.mul(y);
        let r = self.rank();
        let mut z = IntMatrix::zeros(self.smith.cols, y.cols());
        for i in 0..uy.rows() {
            for j in 0..uy.cols() {
                let x = &uy[(i, j)];
                if i >= r {
                    if !x.is_zero() {
                        return None;
                    }
                } else {
                    if !self.smith.diag[i].divides(x) {
                        return None;
                    }
                    z[(i, j)] = x.div_exact(&self.smith.diag[i]);
                }
            }
        }
        Some(v.mul(&z))
    }
}

pub fn solve(b: &IntMatrix, y: &IntMatrix) -> Option<IntMatrix> {
    Solver::new(b).solve(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    #[test]
    fn snf_small_examples() {
        let s = smith(&m(&[&[2, 0], &[0, 3]]), false, false);
        assert_eq!(s.diag, vec![Int::from(1), Int::from(6)]);
        let s = smith(&m(&[&[1, 2], &[3, 4]]), false, false);
        assert_eq!(s.diag, vec![Int::from(1), Int::from(2)]);
        let (u, d, v) = smith_normal_form(&IntMatrix::zeros(2, 3));
        assert!(d.is_zero());
        assert!(u.is_identity() && v.is_identity());
    }

    #[test]
    fn hermite_and_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = unimodular_inverse(&a).unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(unimodular_inverse(&m(&[&[2, 0], &[0, 1]])).is_none());
    }

    #[test]
    fn saturation_examples() {
        let (b, idx) = saturate(&m(&[&[2], &[0]]));
        assert_eq!(b, m(&[&[1], &[0]]));
        assert_eq!(idx, Int::from(2));
        let (b, idx) = saturate(&m(&[&[2, 0], &[2, 4]]));
        assert_eq!(b, IntMatrix::identity(2));
        assert_eq!(idx, Int::from(8));
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&m(&[&[1, 2], &[3, 4]])), Int::from(-2));
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])), Int::from(-1));
        assert_eq!(determinant(&m(&[&[2, 0, 1], &[1, 1, 0], &[0, 3, 1]])), Int::from(5));
    }
}

/// One integer solution of `a x = b` without forming the row transform:
/// the kernel of `[a | −b]` is saturated, so a solution exists iff the last
/// coordinates of a kernel basis have gcd 1.
pub fn solve_one(a: &IntMatrix, b: &[Int]) -> Option<Vec<Int>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length");
    let n = a.cols();
    let mut aug = IntMatrix::zeros(a.rows(), n + 1);
    aug.set_block(0, 0, a);
    for (i, x) in b.iter().enumerate() {
        aug[(i, n)] = -x.clone();
    }
    let k = kernel_raw(&aug);
    let mut g = Int::zero();
    let mut combo = vec![Int::zero(); n + 1];
    for j in 0..k.cols() {
        let c = &k[(n, j)];
        if c.is_zero() {
            continue;
        }
        let (ng, s, t) = g.extended_gcd(c);
        // combo <- s*combo + t*column j
        for (i, slot) in combo.iter_mut().enumerate() {
            *slot = &(&s * &*slot) + &(&t * &k[(i, j)]);
        }
        g = ng;
    }
    if !g.is_one() {
        return None;
    }
    combo.truncate(n);
    Some(combo)
}
