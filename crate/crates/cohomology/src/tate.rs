use exact_linalg::{cokernel, kernel, FinAbGroup, IntMatrix, Solver};
use group_core::Subgroup;
use lattice_core::{fixed_basis, same_group, Lattice};

use crate::error::CohomologyError;

/// Default bound on `|H| · rank` for the cocycle system.
pub const DEFAULT_COCHAIN_CAP: usize = 4096;

pub fn cochain_cap() -> usize {
    std::env::var("LATNOETHER_CAP_COCHAIN")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_COCHAIN_CAP)
}

pub(crate) fn check_parent(h: &Subgroup, m: &Lattice) -> Result<(), CohomologyError> {
    if same_group(h.parent(), m.group()) {
        Ok(())
    } else {
        Err(CohomologyError::GroupMismatch)
    }
}

/// `N_H = Σ_{h ∈ H} ρ(h)`.
pub fn norm_matrix(h: &Subgroup, m: &Lattice) -> IntMatrix {
    let mut n = IntMatrix::zeros(m.rank(), m.rank());
    for &x in h.elements() {
        n = n.add(m.matrix(x));
    }
    n
}

/// Coordinates of the columns of `y` in the basis `b` (columns of `y` lie in its span).
fn coordinates(b: &IntMatrix, y: &IntMatrix) -> IntMatrix {
    Solver::new(b).solve(y).expect("columns lie in the sublattice")
}

/// `Ĥ⁰(H, M) = M^H / N_H M`, as the cokernel of `N_H` written in a basis of `M^H`.
pub fn tate_hat0(h: &Subgroup, m: &Lattice) -> FinAbGroup {
    let fixed = fixed_basis(m, h);
    if fixed.cols() == 0 {
        return FinAbGroup::trivial();
    }
    let n = norm_matrix(h, m);
    cokernel(&coordinates(&fixed, &n))
}

/// `Ĥ⁻¹(H, M) = ker N_H / I_H M`, with `I_H M` spanned by `(ρ(s) − I)M` over
/// the generators `s` of `H`.
pub fn tate_hat_minus1(h: &Subgroup, m: &Lattice) -> FinAbGroup {
    let r = m.rank();
    let k = kernel(&norm_matrix(h, m));
    if k.cols() == 0 {
        return FinAbGroup::trivial();
    }
    let id = IntMatrix::identity(r);
    let mut aug = IntMatrix::zeros(r, 0);
    for &s in h.generators() {
        aug = aug.hstack(&m.matrix(s).sub(&id));
    }
    cokernel(&coordinates(&k, &aug))
}

/// `H¹(H, M) = Z¹/B¹` for inhomogeneous cochains `f: H → M`.
///
/// The cocycle identity `f(xs) = f(x) + x·f(s)` is imposed for every element
/// `x` and every generator `s` of `H` (this implies it for all pairs). The
/// identities along a spanning tree are solved directly, expressing every
/// `f(x)` through the generator values; the remaining ones are the
/// constraints on those values.
pub fn h1_cocycles(h: &Subgroup, m: &Lattice) -> Result<FinAbGroup, CohomologyError> {
    h1_cocycles_capped(h, m, cochain_cap())
}

pub fn h1_cocycles_capped(h: &Subgroup, m: &Lattice, cap: usize) -> Result<FinAbGroup, CohomologyError> {
    check_parent(h, m)?;
    let size = h.order() * m.rank();
    if size > cap {
        return Err(CohomologyError::CapExceeded { what: "cochain system |H|*rank", size, cap });
    }
    let (local, embed) = h.as_group();
    let n = m.rank();
    let k = local.generators().len();
    if n == 0 || k == 0 {
        return Ok(FinAbGroup::trivial());
    }
    let rho = |x: usize| m.matrix(embed[x]);
    // f(x) = F[x] · (f(s_1), ..., f(s_k)).
    let mut f: Vec<Option<IntMatrix>> = vec![None; local.order()];
    f[0] = Some(IntMatrix::zeros(n, k * n));
    for &x in &local.bfs_order()[1..] {
        let (y, j) = local.spanning_step(x).unwrap();
        let mut fx = f[y].clone().unwrap();
        let block = fx.block(0, j * n, n, n).add(rho(y));
        fx.set_block(0, j * n, &block);
        f[x] = Some(fx);
    }
    let f: Vec<IntMatrix> = f.into_iter().map(Option::unwrap).collect();
    let mut constraints = IntMatrix::zeros(0, k * n);
    for x in 0..local.order() {
        for (j, &s) in local.generators().iter().enumerate() {
            let xs = local.mul(x, s);
            if local.spanning_step(xs) == Some((x, j)) {
                continue;
            }
            let mut rhs = f[x].clone();
            let block = rhs.block(0, j * n, n, n).add(rho(x));
            rhs.set_block(0, j * n, &block);
            let diff = f[xs].sub(&rhs);
            if !diff.is_zero() {
                constraints = constraints.vstack(&diff);
            }
        }
    }
    let z = if constraints.rows() == 0 { IntMatrix::identity(k * n) } else { kernel(&constraints) };
    if z.cols() == 0 {
        return Ok(FinAbGroup::trivial());
    }
    // Coboundaries: f(s_j) = (ρ(s_j) − 1)m.
    let id = IntMatrix::identity(n);
    let mut b = IntMatrix::zeros(0, n);
    for &s in local.generators() {
        b = b.vstack(&rho(s).sub(&id));
    }
    Ok(cokernel(&coordinates(&z, &b)))
}
