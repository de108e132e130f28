//! Level-rank index maps, Uglov's bijection `Υ_m^e` and the affine
//! permutations `w̃_{e,m,s}` acting on charged multipartitions.

use num_integer::Integer;

use crate::abacus::{divmod, from_beta, pull_back, to_beta};
use crate::error::{check_modulus, Error, Result};
use crate::partition::{ChargedMultiPartition, ChargedPartition, Partition};
use crate::quotient::upsilon;

/// `x = m q + r` with `0 <= r < m`.
pub fn qr(x: i64, m: usize) -> Result<(i64, usize)> {
    check_modulus(m)?;
    let (q, r) = divmod(x, m as i64);
    Ok((q, r as usize))
}

/// `(q_m^e, r_m^e)(x, y) = (e q_m(x) + y, r_m(x))`.
pub fn qr_em(x: i64, y: usize, e: usize, m: usize) -> Result<(i64, usize)> {
    check_modulus(e)?;
    check_modulus(m)?;
    if y >= e {
        return Err(Error::OutOfRange {
            value: y as i64,
            bound: e,
        });
    }
    Ok(qr_em_raw(x, y, e, m))
}

fn qr_em_raw(x: i64, y: usize, e: usize, m: usize) -> (i64, usize) {
    let (q, r) = divmod(x, m as i64);
    (e as i64 * q + y as i64, r as usize)
}

/// `(q_e^m, r_e^m)`, the inverse of [`qr_em`].
pub fn qr_em_inv(q: i64, r: usize, e: usize, m: usize) -> Result<(i64, usize)> {
    check_modulus(e)?;
    check_modulus(m)?;
    if r >= m {
        return Err(Error::OutOfRange {
            value: r as i64,
            bound: m,
        });
    }
    Ok(qr_em_raw(q, r, m, e))
}

fn component_abaci(cmp: &ChargedMultiPartition) -> Vec<crate::abacus::BetaSet> {
    (0..cmp.num_components())
        .map(|i| to_beta(&cmp.component(i)))
        .collect()
}

fn from_abaci(abaci: &[crate::abacus::BetaSet]) -> ChargedMultiPartition {
    ChargedMultiPartition::from_components(abaci.iter().map(from_beta).collect())
}

/// Uglov's bijection `Υ_m^e`: the bead `(x, y)` of the `e`-abacus moves to
/// `(q_m^e, r_m^e)(x, y)` on the `m`-abacus.
pub fn uglov(cmp: &ChargedMultiPartition, m: usize) -> Result<ChargedMultiPartition> {
    check_modulus(m)?;
    let e = cmp.num_components();
    let abaci = component_abaci(cmp);
    let out = pull_back(&abaci, m, |p, j| qr_em_raw(p, j, m, e));
    Ok(from_abaci(&out))
}

pub(crate) fn require_coprime(e: usize, m: usize) -> Result<()> {
    check_modulus(e)?;
    check_modulus(m)?;
    if e.gcd(&m) != 1 {
        return Err(Error::NotCoprime { e, m });
    }
    Ok(())
}

/// The permutation `w` of `[0, e)` with `w(r_e(m b + s)) = b`, as the table `i ↦ w(i)`.
pub fn w_perm(e: usize, m: usize, s: i64) -> Result<Vec<usize>> {
    require_coprime(e, m)?;
    let mut perm = vec![usize::MAX; e];
    for b in 0..e {
        let (_, r) = divmod(m as i64 * b as i64 + s, e as i64);
        perm[r as usize] = b;
    }
    debug_assert!(perm.iter().all(|&b| b < e));
    Ok(perm)
}

/// The affine permutation `w̃_{e,m,s} = ξ_{e,m,s} ∘ (id × w_{e,m,s})` of `Z × [0, e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffinePermData {
    e: usize,
    perm: Vec<usize>,
    /// Translation applied to beads landing in target component `b`: `-q_e(m b + s)`.
    shifts: Vec<i64>,
}

impl AffinePermData {
    pub fn new(perm: Vec<usize>, shifts: Vec<i64>) -> Result<Self> {
        let e = perm.len();
        check_modulus(e)?;
        if shifts.len() != e {
            return Err(Error::ComponentMismatch {
                expected: e,
                found: shifts.len(),
            });
        }
        let mut seen = vec![false; e];
        for &b in &perm {
            if b >= e || std::mem::replace(&mut seen[b], true) {
                return Err(Error::InvalidArgument(format!(
                    "{perm:?} is not a permutation of 0..{e}"
                )));
            }
        }
        Ok(AffinePermData { e, perm, shifts })
    }

    pub fn identity(e: usize) -> Self {
        AffinePermData {
            e,
            perm: (0..e).collect(),
            shifts: vec![0; e],
        }
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    /// `w̃(a, i) = (a + shifts[w(i)], w(i))`.
    pub fn apply_point(&self, a: i64, i: usize) -> (i64, usize) {
        let b = self.perm[i];
        (a + self.shifts[b], b)
    }

    fn inverse_perm(&self) -> Vec<usize> {
        let mut inv = vec![0; self.e];
        for (i, &b) in self.perm.iter().enumerate() {
            inv[b] = i;
        }
        inv
    }
}

/// Packages `w_{e,m,s}` with the shifts `−q_e(m b + s)`.
pub fn affine_perm(e: usize, m: usize, s: i64) -> Result<AffinePermData> {
    let perm = w_perm(e, m, s)?;
    let shifts = (0..e)
        .map(|b| -divmod(m as i64 * b as i64 + s, e as i64).0)
        .collect();
    Ok(AffinePermData { e, perm, shifts })
}

/// Applies `w̃` bead-by-bead to the `e`-abacus of `cmp`.
pub fn apply_affine(
    ap: &AffinePermData,
    cmp: &ChargedMultiPartition,
) -> Result<ChargedMultiPartition> {
    if cmp.num_components() != ap.e {
        return Err(Error::ComponentMismatch {
            expected: ap.e,
            found: cmp.num_components(),
        });
    }
    let inv = ap.inverse_perm();
    let abaci = component_abaci(cmp);
    let out = pull_back(&abaci, ap.e, |y, b| (y - ap.shifts[b], inv[b]));
    Ok(from_abaci(&out))
}

/// Pointwise check of the square relating `w̃_{e,m,s}`, `w̃_{m,e,t}` and `(q_m^e, r_m^e)`.
pub fn check_square(x: i64, e: usize, m: usize, s: i64, t: i64) -> Result<bool> {
    let left = affine_perm(e, m, s)?;
    let right = affine_perm(m, e, t)?;
    let (a, i) = divmod(x + s, e as i64);
    let (a, i) = left.apply_point(a, i as usize);
    let via_left = qr_em_raw(a, i, e, m);
    let (c, d) = divmod(x + t, m as i64);
    let via_right = right.apply_point(c, d as usize);
    Ok(via_left == via_right)
}

/// Compares `Υ_m^e ∘ w̃_{e,m,s} ∘ Υ_e(|p, s⟩)` with `w̃_{m,e,t} ∘ Υ_m(|p, t⟩)`.
pub fn check_uglov_diagram(p: &Partition, e: usize, m: usize, s: i64, t: i64) -> Result<bool> {
    let left = affine_perm(e, m, s)?;
    let right = affine_perm(m, e, t)?;
    let via_left = uglov(
        &apply_affine(&left, &upsilon(&ChargedPartition::new(p.clone(), s), e)?)?,
        m,
    )?;
    let via_right = apply_affine(&right, &upsilon(&ChargedPartition::new(p.clone(), t), m)?)?;
    Ok(via_left == via_right)
}
