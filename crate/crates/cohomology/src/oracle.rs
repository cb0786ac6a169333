//! Reference computations straight from the standard complex, using every
//! element (and every pair of elements) of the subgroup. Slow by design.

use exact_linalg::{cokernel, kernel, FinAbGroup, Int, IntMatrix, Solver};
use group_core::Subgroup;
use lattice_core::Lattice;

use crate::error::CohomologyError;
use crate::tate::check_parent;

pub const ORACLE_MAX_ORDER: usize = 8;
pub const ORACLE_MAX_RANK: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    MinusOne,
    Zero,
    One,
}

fn torsion(g: FinAbGroup) -> FinAbGroup {
    FinAbGroup { free_rank: 0, ..g }
}

pub fn bar_oracle(h: &Subgroup, m: &Lattice, degree: Degree) -> Result<FinAbGroup, CohomologyError> {
    check_parent(h, m)?;
    if h.order() > ORACLE_MAX_ORDER {
        return Err(CohomologyError::CapExceeded { what: "oracle subgroup order", size: h.order(), cap: ORACLE_MAX_ORDER });
    }
    if m.rank() > ORACLE_MAX_RANK {
        return Err(CohomologyError::CapExceeded { what: "oracle rank", size: m.rank(), cap: ORACLE_MAX_RANK });
    }
    let n = m.rank();
    let id = IntMatrix::identity(n);
    let els = h.elements();
    Ok(match degree {
        // M^H is pure and contains N·M with finite index, so M^H/NM is the
        // torsion of M/NM.
        Degree::Zero => {
            let mut norm = IntMatrix::zeros(n, n);
            for &x in els {
                norm = norm.add(m.matrix(x));
            }
            torsion(cokernel(&norm))
        }
        // ker N is pure and contains I_H·M with finite index.
        Degree::MinusOne => {
            let mut aug = IntMatrix::zeros(n, 0);
            for &x in els {
                aug = aug.hstack(&m.matrix(x).sub(&id));
            }
            torsion(cokernel(&aug))
        }
        Degree::One => {
            let k = els.len();
            let pos = |x: usize| els.iter().position(|&e| e == x).unwrap();
            // Unknowns: f(x) for every x ∈ H. Equations: f(xy) − f(x) − x·f(y) = 0.
            let mut d1 = IntMatrix::zeros(k * k * n, k * n);
            for (a, &x) in els.iter().enumerate() {
                for (b, &y) in els.iter().enumerate() {
                    let row = (a * k + b) * n;
                    let c = pos(h.parent().mul(x, y));
                    for i in 0..n {
                        d1[(row + i, c * n + i)] += &Int::one();
                        d1[(row + i, a * n + i)] -= &Int::one();
                        for j in 0..n {
                            d1[(row + i, b * n + j)] -= &m.matrix(x)[(i, j)];
                        }
                    }
                }
            }
            let z = kernel(&d1);
            if z.cols() == 0 {
                return Ok(FinAbGroup::trivial());
            }
            let mut d0 = IntMatrix::zeros(0, n);
            for &x in els {
                d0 = d0.vstack(&m.matrix(x).sub(&id));
            }
            let coords = Solver::new(&z).solve(&d0).expect("coboundaries are cocycles");
            cokernel(&coords)
        }
    })
}
