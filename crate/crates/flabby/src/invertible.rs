use std::fmt;

use cohomology::{h1_cocycles, keyed_reps, CohomologyError};
use exact_linalg::{is_unimodular, kernel, solve_one, FinAbGroup, Int, IntMatrix};
use group_core::{sylow_all_cyclic, Subgroup};
use lattice_core::{deflate, direct_sum_all, dual, fixed_basis, induced_lattice, Lattice};
use log::debug;
use serde::{Deserialize, Serialize};

use crate::error::FlabbyError;
use crate::resolution::{cover_map, fixed_point_cover, flabby_resolution, minimal_flabby_resolution, Resolution};

/// Options for [`rho_invertible_with`].
#[derive(Clone, Copy, Debug)]
pub struct RhoOptions {
    /// Pass to `π/π₀` first, `π₀` being the kernel of the action.
    pub reduce_kernel: bool,
    /// Largest rank of `E` for which the splitting system is attempted.
    pub max_split_rank: usize,
}

impl Default for RhoOptions {
    fn default() -> Self {
        RhoOptions { reduce_kernel: true, max_split_rank: 96 }
    }
}

/// Evidence that `E` is a direct summand of a permutation lattice `P'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitCertificate {
    /// Summands `ℤ[G/K_i]` of `P'` as element lists of `K_i`.
    pub cover_subgroups: Vec<Vec<usize>>,
    /// `P' → E`, rank E × rank P'.
    pub cover: IntMatrix,
    /// Equivariant section `E → P'` with `cover · section = I`.
    pub section: IntMatrix,
    /// `[section | basis of ker(cover)]`: unimodular, and it conjugates the
    /// action on `E ⊕ ker(cover)` to the permutation action on `P'`.
    pub basis: IntMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum YesReason {
    EndoMiyata,
    Certificate(Box<SplitCertificate>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoWitness {
    /// `E` failed flabbiness (construction guard).
    NotFlabby { subgroup: String, group: FinAbGroup },
    /// `H¹(H, E) ≠ 0`, impossible for a summand of a permutation lattice.
    H1Obstruction { subgroup: String, group: FinAbGroup },
    /// A cover `P' → E` surjective on all fixed points has no section.
    NonSplit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Invertibility {
    Yes(YesReason),
    No(NoWitness),
    Unknown(String),
}

impl Invertibility {
    pub fn reason(&self) -> &'static str {
        match self {
            Invertibility::Yes(YesReason::EndoMiyata) => "endo-miyata",
            Invertibility::Yes(YesReason::Certificate(_)) => "certificate",
            Invertibility::No(NoWitness::NotFlabby { .. }) => "not-flabby",
            Invertibility::No(NoWitness::H1Obstruction { .. }) => "h1-obstruction",
            Invertibility::No(NoWitness::NonSplit) => "non-split",
            Invertibility::Unknown(_) => "unknown",
        }
    }

    pub fn is_yes(&self) -> bool {
        matches!(self, Invertibility::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Invertibility::No(_))
    }
}

impl fmt::Display for Invertibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Invertibility::Yes(_) => write!(f, "yes ({})", self.reason()),
            Invertibility::No(NoWitness::NotFlabby { subgroup, group }) => {
                write!(f, "no (E not flabby: H^-1 = {group} on subgroup {subgroup})")
            }
            Invertibility::No(NoWitness::H1Obstruction { subgroup, group }) => {
                write!(f, "no (H^1 = {group} on subgroup {subgroup})")
            }
            Invertibility::No(NoWitness::NonSplit) => write!(f, "no (fixed-point surjective cover does not split)"),
            Invertibility::Unknown(why) => write!(f, "unknown ({why})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RhoVerdict {
    pub resolution: Resolution,
    /// Flabby lattice similar to `resolution.e` on which the invertibility
    /// test ran; certificates refer to it.
    pub split_target: Lattice,
    /// Order of the group the resolution was computed over.
    pub acting_order: usize,
    /// True when the action kernel was divided out first.
    pub reduced: bool,
    pub invertible: Invertibility,
    pub retract_rational_conclusion: Option<String>,
}

pub fn rho_invertible(m: &Lattice) -> Result<RhoVerdict, FlabbyError> {
    rho_invertible_with(m, &RhoOptions::default())
}

pub fn rho_invertible_with(m: &Lattice, opts: &RhoOptions) -> Result<RhoVerdict, FlabbyError> {
    let mut lat = m.clone();
    let mut reduced = false;
    if opts.reduce_kernel {
        let k = m.action_kernel();
        if k.order() > 1 {
            lat = deflate(m, &k)?.0;
            reduced = true;
        }
    }
    let res = flabby_resolution(&lat)?;
    // Invertibility is a property of the similarity class, so the expensive
    // steps run on the flabby lattice of a smaller resolution.
    let (invertible, split_target) = if sylow_all_cyclic(lat.group()) {
        (decide(&res.e, opts)?, res.e.clone())
    } else {
        let small = minimal_flabby_resolution(&lat)?.e;
        (decide(&small, opts)?, small)
    };
    let retract_rational_conclusion = match &invertible {
        Invertibility::Yes(_) => Some(
            "rho(M) is invertible, so the invariant field of the associated multiplicative action is retract rational"
                .to_string(),
        ),
        Invertibility::No(_) => Some(
            "rho(M) is not invertible, so the invariant field of the associated multiplicative action is not retract rational"
                .to_string(),
        ),
        Invertibility::Unknown(_) => None,
    };
    Ok(RhoVerdict {
        acting_order: lat.group().order(),
        resolution: res,
        split_target,
        reduced,
        invertible,
        retract_rational_conclusion,
    })
}

/// Invertibility of a flabby lattice `E`.
pub fn decide(e: &Lattice, opts: &RhoOptions) -> Result<Invertibility, FlabbyError> {
    if let Some((subgroup, group)) = cohomology::flabby_witness(e)? {
        return Ok(Invertibility::No(NoWitness::NotFlabby { subgroup, group }));
    }
    if sylow_all_cyclic(e.group()) {
        return Ok(Invertibility::Yes(YesReason::EndoMiyata));
    }
    for (key, h) in keyed_reps(e.group())? {
        match h1_cocycles(&h, e) {
            Ok(g) if !g.is_trivial() => {
                return Ok(Invertibility::No(NoWitness::H1Obstruction { subgroup: key, group: g }));
            }
            Ok(_) => {}
            Err(CohomologyError::CapExceeded { .. }) => {}
            Err(err) => return Err(err.into()),
        }
    }
    if e.rank() > opts.max_split_rank {
        return Ok(Invertibility::Unknown(format!("rank {} above splitting bound {}", e.rank(), opts.max_split_rank)));
    }
    Ok(match split_certificate(e)? {
        Some(c) => Invertibility::Yes(YesReason::Certificate(Box::new(c))),
        None => Invertibility::No(NoWitness::NonSplit),
    })
}

const PRIMES: [u64; 3] = [2_147_483_647, 2_147_483_629, 2_147_483_587];

/// Looks for an equivariant section of a fixed-point surjective permutation
/// cover. `None` means `E` is not invertible: the kernel of such a cover is
/// coflabby and extensions of an invertible lattice by a coflabby one split.
pub fn split_certificate(e: &Lattice) -> Result<Option<SplitCertificate>, FlabbyError> {
    let n = e.rank();
    let summands = fixed_point_cover(e)?;
    let (pp, cover) = cover_map(e, &summands);
    if n == 0 {
        return Ok(Some(trivial_certificate(&pp, cover)));
    }
    let ed = dual(e);
    // A G-map E → ℤ[G/K] is determined by a K-invariant functional f on E:
    // x ↦ Σ_{gK} f(g⁻¹x)·[gK]. Composed with the cover it is
    // T = Σ_{gK} ρ(g)v (ρ°(g)f)ᵀ, stored sparsely by flat n×n index.
    let mut unknowns: Vec<(usize, Vec<Int>)> = Vec::new();
    let mut columns: Vec<Vec<(usize, Int)>> = Vec::new();
    for (i, (k, v)) in summands.iter().enumerate() {
        let fb = fixed_basis(&ed, k);
        let reps: Vec<usize> = k.left_cosets().iter().map(|c| c[0]).collect();
        for j in 0..fb.cols() {
            let f = fb.column(j);
            let mut t = IntMatrix::zeros(n, n);
            for &r in &reps {
                let u = e.matrix(r).mul_vec(v);
                let w = ed.matrix(r).mul_vec(&f);
                for a in 0..n {
                    if u[a].is_zero() {
                        continue;
                    }
                    for b in 0..n {
                        if !w[b].is_zero() {
                            t[(a, b)] += &(&u[a] * &w[b]);
                        }
                    }
                }
            }
            columns.push(t.data().iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k, x.clone())).collect());
            unknowns.push((i, f));
        }
    }
    debug!("splitting system: {} equations, {} unknowns, cover rank {}", n * n, columns.len(), pp.rank());
    if columns.is_empty() {
        return Ok(None);
    }
    let diag: Vec<usize> = (0..n).map(|i| i * n + i).collect();
    for &p in &PRIMES {
        // Any solution of a subsystem spanning the row space of [A | I]
        // solves the whole system; a subsystem without solutions rules it out.
        let rows = independent_rows(&columns, &diag, n * n, p);
        let mut pos = vec![usize::MAX; n * n];
        for (r, &k) in rows.iter().enumerate() {
            pos[k] = r;
        }
        let mut a = IntMatrix::zeros(rows.len(), columns.len());
        for (u, col) in columns.iter().enumerate() {
            for (k, x) in col {
                if pos[*k] != usize::MAX {
                    a[(pos[*k], u)] = x.clone();
                }
            }
        }
        let b: Vec<Int> = rows.iter().map(|k| if diag.contains(k) { Int::one() } else { Int::zero() }).collect();
        let Some(c) = solve_one(&a, &b) else {
            return Ok(None);
        };
        let section = assemble_section(&summands, &unknowns, &c, &ed, n);
        let cert = certificate(&summands, cover.clone(), section);
        let ok = verify_certificate(e, &cert);
        if ok {
            return Ok(Some(cert));
        }
        debug!("row selection mod {p} missed the row space, retrying");
    }
    Err(FlabbyError::InternalExactnessCheckFailed(format!("splitting certificate for rank {n} failed")))
}

// Rows of the flat system [A | I] that are independent mod p, greedily in order.
fn independent_rows(columns: &[Vec<(usize, Int)>], diag: &[usize], nrows: usize, p: u64) -> Vec<usize> {
    let width = columns.len() + 1;
    let mut dense = vec![0u64; nrows * width];
    let pm = Int::from(p as i64);
    for (u, col) in columns.iter().enumerate() {
        for (k, x) in col {
            dense[k * width + u] = x.mod_floor(&pm).to_i64().unwrap() as u64;
        }
    }
    for &k in diag {
        dense[k * width + width - 1] = 1;
    }
    let inv = |x: u64| pow_mod(x, p - 2, p);
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut chosen = Vec::new();
    for k in 0..nrows {
        if basis.len() == width {
            break;
        }
        let mut row = dense[k * width..(k + 1) * width].to_vec();
        if row.iter().all(|&x| x == 0) {
            continue;
        }
        for (piv, b) in &basis {
            let f = row[*piv];
            if f != 0 {
                for (x, y) in row.iter_mut().zip(b) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        if let Some(piv) = row.iter().position(|&x| x != 0) {
            let s = inv(row[piv]);
            for x in row.iter_mut() {
                *x = *x * s % p;
            }
            basis.push((piv, row));
            chosen.push(k);
        }
    }
    chosen
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

// Rows of summand i are indexed by its cosets gK, row gK being
// f_i ∘ ρ(g⁻¹) = (ρ°(g) f_i)ᵀ.
fn assemble_section(
    summands: &[(Subgroup, Vec<Int>)],
    unknowns: &[(usize, Vec<Int>)],
    c: &[Int],
    ed: &Lattice,
    n: usize,
) -> IntMatrix {
    let mut fsum: Vec<Vec<Int>> = summands.iter().map(|_| vec![Int::zero(); n]).collect();
    for ((i, f), coef) in unknowns.iter().zip(c) {
        for (s, x) in fsum[*i].iter_mut().zip(f) {
            *s += &(coef * x);
        }
    }
    let mut rows: Vec<Vec<Int>> = Vec::new();
    for ((k, _), f) in summands.iter().zip(&fsum) {
        for coset in k.left_cosets() {
            rows.push(ed.matrix(coset[0]).mul_vec(f));
        }
    }
    IntMatrix::from_int_rows(rows, n)
}

fn trivial_certificate(pp: &Lattice, cover: IntMatrix) -> SplitCertificate {
    SplitCertificate {
        cover_subgroups: Vec::new(),
        cover,
        section: IntMatrix::zeros(pp.rank(), 0),
        basis: IntMatrix::identity(pp.rank()),
    }
}

fn certificate(summands: &[(Subgroup, Vec<Int>)], cover: IntMatrix, section: IntMatrix) -> SplitCertificate {
    let kb = kernel(&cover);
    let basis = section.hstack(&kb);
    SplitCertificate {
        cover_subgroups: summands.iter().map(|(k, _)| k.elements().to_vec()).collect(),
        cover,
        section,
        basis,
    }
}

/// Checks a certificate against `e` from scratch: `P'` is rebuilt from the
/// subgroup list, `cover` and `section` must be `G`-maps with
/// `cover · section = I`, and `basis` must be `[section | ker(cover)]` and
/// unimodular, so `P' ≅ E ⊕ ker(cover)`.
pub fn verify_certificate(e: &Lattice, c: &SplitCertificate) -> bool {
    let g = e.group();
    let n = e.rank();
    let parts: Vec<Lattice> = c
        .cover_subgroups
        .iter()
        .map(|els| induced_lattice(g, &Subgroup::from_elements(g, els.clone())))
        .collect();
    let pp = if parts.is_empty() { Lattice::zero(g) } else { direct_sum_all(&parts).expect("same group") };
    let r = pp.rank();
    if c.cover.rows() != n || c.cover.cols() != r || c.section.rows() != r || c.section.cols() != n {
        return false;
    }
    if c.basis.rows() != r || c.basis.cols() != r || !c.cover.mul(&c.section).is_identity() {
        return false;
    }
    for (k, me) in e.action().iter().enumerate() {
        let mp = &pp.action()[k];
        if me.mul(&c.cover) != c.cover.mul(mp) || mp.mul(&c.section) != c.section.mul(me) {
            return false;
        }
    }
    if c.basis.columns_range(0, n) != c.section || !c.cover.mul(&c.basis.columns_range(n, r)).is_zero() {
        return false;
    }
    is_unimodular(&c.basis)
}
