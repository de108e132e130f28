//! `Φ_e`-Harish-Chandra series of `GL_n`: cuspidal pairs, the series
//! decomposition by `e`-core, the bijection onto `e`-multipartitions, signs,
//! wreath-product dimensions and the predicted Hecke specializations.

use std::fmt;

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{check_modulus, Error, Result};
use crate::partition::{ChargedMultiPartition, MultiCharge, MultiPartition, Partition};
use crate::poly::{generic_degree, mod_cyclotomic, IntPolynomial};
use crate::quotient::{a_vector, e_core, e_quotient_charged, hook_lengths, is_e_core};

/// A `Φ_e`-cuspidal pair `(T × GL_{n−ae}, λ)` of `GL_n`, recorded by `a` and the `e`-core `λ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CuspidalPairGL {
    pub n: usize,
    pub e: usize,
    pub a: usize,
    pub core: Partition,
}

impl CuspidalPairGL {
    pub fn new(n: usize, e: usize, core: Partition) -> Result<Self> {
        check_modulus(e)?;
        if !is_e_core(&core, e)? {
            return Err(Error::NotCore {
                partition: core.to_string(),
                e,
            });
        }
        let rest = n
            .checked_sub(core.size())
            .filter(|r| r % e == 0)
            .ok_or_else(|| {
                Error::InvalidArgument(format!("|{core}| is not n - a*e for n = {n}, e = {e}"))
            })?;
        Ok(CuspidalPairGL {
            n,
            e,
            a: rest / e,
            core,
        })
    }

    /// Series consisting of the core alone.
    pub fn is_cuspidal_singleton(&self) -> bool {
        self.a == 0
    }

    pub fn wreath_group(&self) -> WreathGroupDescriptor {
        WreathGroupDescriptor {
            e: self.e,
            a: self.a,
        }
    }
}

/// The relative Weyl group `Z_e ≀ S_a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WreathGroupDescriptor {
    pub e: usize,
    pub a: usize,
}

impl WreathGroupDescriptor {
    pub fn order(&self) -> u128 {
        (self.e as u128).pow(self.a as u32) * factorial(self.a)
    }

    /// Irreducible characters, indexed by `e`-multipartitions of `a`.
    pub fn irreducibles(&self) -> Vec<MultiPartition> {
        MultiPartition::all_of_size(self.e, self.a)
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Number of standard Young tableaux of shape `p`, by the hook length formula.
pub fn count_syt(p: &Partition) -> u128 {
    let hooks: u128 = hook_lengths(p).into_iter().map(|h| h as u128).product();
    factorial(p.size()) / hooks
}

/// Degree of the irreducible character of `Z_e ≀ S_a` indexed by `mp`.
pub fn wreath_dim(mp: &MultiPartition) -> u128 {
    let mut dim = factorial(mp.size());
    for comp in mp.components() {
        dim = dim / factorial(comp.size()) * count_syt(comp);
    }
    dim
}

/// One cuspidal pair per `e`-core of size `n − a e`, ordered by core size and
/// then by decreasing lexicographic order of the core.
pub fn hc_pairs(n: usize, e: usize) -> Result<Vec<CuspidalPairGL>> {
    check_modulus(e)?;
    let mut pairs = Vec::new();
    for a in (0..=n / e).rev() {
        for core in Partition::all_of_size(n - a * e) {
            if is_e_core(&core, e)? {
                pairs.push(CuspidalPairGL { n, e, a, core });
            }
        }
    }
    Ok(pairs)
}

/// The series containing `p` and the image of `p` under `χ`, computed with charge `e + ℓ_core`.
pub fn hc_series_of(p: &Partition, e: usize) -> Result<(CuspidalPairGL, ChargedMultiPartition)> {
    let core = e_core(p, e)?;
    let charged = e_quotient_charged(p, e, core.len() as i64)?;
    let pair = CuspidalPairGL {
        n: p.size(),
        e,
        a: (p.size() - core.size()) / e,
        core,
    };
    Ok((pair, charged))
}

/// One `Φ_e`-Harish-Chandra series of `GL_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HcSeries {
    pub n: usize,
    pub e: usize,
    pub a: usize,
    pub core: Partition,
    pub members: Vec<Partition>,
    /// `χ` images of the members, in the same order.
    pub quotients: Vec<MultiPartition>,
    /// The common charge vector `b⃗_{e,ℓ}(core)`.
    pub charges: MultiCharge,
}

impl HcSeries {
    pub fn pair(&self) -> CuspidalPairGL {
        CuspidalPairGL {
            n: self.n,
            e: self.e,
            a: self.a,
            core: self.core.clone(),
        }
    }
}

/// Partitions of `n` grouped by `e`-core, one entry per cuspidal pair.
pub fn hc_partition(n: usize, e: usize) -> Result<Vec<HcSeries>> {
    let mut series: Vec<HcSeries> = hc_pairs(n, e)?
        .into_iter()
        .map(|pair| {
            let charges = e_quotient_charged(&pair.core, e, pair.core.len() as i64)
                .map(|c| c.multicharge().clone())?;
            Ok(HcSeries {
                n,
                e,
                a: pair.a,
                core: pair.core,
                members: Vec::new(),
                quotients: Vec::new(),
                charges,
            })
        })
        .collect::<Result<_>>()?;
    for p in Partition::all_of_size(n) {
        let (pair, image) = hc_series_of(&p, e)?;
        let slot = series
            .iter_mut()
            .find(|s| s.core == pair.core)
            .expect("every e-core of size n - a*e has a pair");
        debug_assert_eq!(image.multicharge(), &slot.charges);
        slot.members.push(p);
        slot.quotients.push(image.into_parts().0);
    }
    Ok(series)
}

/// All partitions of `n` with `e`-core `pair_e.core` and `m`-core `pair_m.core`.
pub fn intersection(
    n: usize,
    e: usize,
    pair_e: &CuspidalPairGL,
    m: usize,
    pair_m: &CuspidalPairGL,
) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for p in Partition::all_of_size(n) {
        if e_core(&p, e)? == pair_e.core && e_core(&p, m)? == pair_m.core {
            out.push(p);
        }
    }
    Ok(out)
}

/// The sign `ε` in `Deg_p ≡ ε · deg χ(p) (mod Φ_e)`.
///
/// Fails with [`Error::TheoremViolation`] when the remainder is not a constant
/// of absolute value `deg χ(p)`.
pub fn epsilon_sign(p: &Partition, e: usize) -> Result<i8> {
    let (_, image) = hc_series_of(p, e)?;
    let rem = mod_cyclotomic(&generic_degree(p)?, e)?;
    let violation = |detail: String| Error::TheoremViolation {
        partition: p.to_string(),
        e,
        detail,
    };
    let c = rem
        .as_constant()
        .ok_or_else(|| violation(format!("remainder {rem} is not constant")))?;
    let dim = BigInt::from(wreath_dim(image.multipartition()));
    if c.abs() != dim {
        return Err(violation(format!(
            "remainder {c} does not have absolute value deg chi = {dim}"
        )));
    }
    Ok(if c.is_negative() { -1 } else { 1 })
}

/// Sign `ε` in `e^a a! · Deg_p ≡ ε · deg χ(p) · Deg_λ · ∏_{i=n−ae+1}^{n} (x^i − 1) / (x^e − 1)^a (mod Φ_e)`,
/// where `λ` is the `e`-core of `p` and `a` its weight.
///
/// With `λ = ∅` this is the congruence of [`epsilon_sign`] up to the unit
/// `e^a a!` at a primitive `e`-th root of unity.
pub fn degree_congruence_sign(p: &Partition, e: usize) -> Result<i8> {
    let (pair, image) = hc_series_of(p, e)?;
    let n = p.size();
    let mut weight_factor = IntPolynomial::one();
    for i in n - pair.a * e + 1..=n {
        weight_factor = &weight_factor * &IntPolynomial::x_pow_minus_one(i);
    }
    for _ in 0..pair.a {
        weight_factor = weight_factor.exact_div(&IntPolynomial::x_pow_minus_one(e))?;
    }
    let scale: BigInt = BigInt::from(e).pow(pair.a as u32) * BigInt::from(factorial(pair.a));
    let lhs = mod_cyclotomic(&(&IntPolynomial::constant(scale) * &generic_degree(p)?), e)?;
    let dim = IntPolynomial::constant(BigInt::from(wreath_dim(image.multipartition())));
    let rhs = mod_cyclotomic(
        &(&(&dim * &generic_degree(&pair.core)?) * &weight_factor),
        e,
    )?;
    if lhs == rhs {
        Ok(1)
    } else if lhs == -rhs.clone() {
        Ok(-1)
    } else {
        Err(Error::TheoremViolation {
            partition: p.to_string(),
            e,
            detail: format!("{lhs} is not +-({rhs}) mod Phi_{e}"),
        })
    }
}

/// Which generic group the specialization is predicted for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Variant {
    #[serde(rename = "gl")]
    GL,
    #[serde(rename = "gu")]
    GU,
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(Variant::GL),
            "gu" => Ok(Variant::GU),
            _ => Err(Error::Parse(format!(
                "unknown variant {s:?}, expected gl or gu"
            ))),
        }
    }
}

/// `exp(2πi·root) · x^{x_exponent}`, with `root` reduced into `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HeckeParam {
    root: Rational64,
    x_exponent: Rational64,
}

fn reduce_mod_one(r: Rational64) -> Rational64 {
    r - r.floor()
}

impl HeckeParam {
    pub fn new(root: Rational64, x_exponent: Rational64) -> Self {
        HeckeParam {
            root: reduce_mod_one(root),
            x_exponent,
        }
    }

    /// `x^k`.
    pub fn x_power(k: i64) -> Self {
        Self::new(Rational64::zero(), Rational64::from_integer(k))
    }

    pub fn root(&self) -> Rational64 {
        self.root
    }

    pub fn x_exponent(&self) -> Rational64 {
        self.x_exponent
    }

    /// The value at `x = exp(2πi/m)`, as an argument in `Q/Z`.
    pub fn argument_at_root(&self, m: usize) -> Rational64 {
        reduce_mod_one(self.root + self.x_exponent / Rational64::from_integer(m as i64))
    }

    /// `x ↦ −x`.
    pub fn substitute_neg_x(&self) -> Self {
        Self::new(self.root + self.x_exponent / 2, self.x_exponent)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.root + Rational64::new(1, 2), self.x_exponent)
    }
}

impl fmt::Display for HeckeParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let half = Rational64::new(1, 2);
        let sign_prefix = if self.root.is_zero() {
            String::new()
        } else if self.root == half {
            "-".to_string()
        } else {
            format!("exp(2*pi*i*{})*", self.root)
        };
        let k = self.x_exponent;
        if k.is_zero() {
            if sign_prefix.is_empty() {
                f.write_str("1")
            } else if sign_prefix == "-" {
                f.write_str("-1")
            } else {
                write!(f, "exp(2*pi*i*{})", self.root)
            }
        } else if k == Rational64::from_integer(1) {
            write!(f, "{sign_prefix}x")
        } else {
            write!(f, "{sign_prefix}x^{k}")
        }
    }
}

impl Serialize for HeckeParam {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Predicted parameters `u_{τ,j}` and `u_{σ,0}, u_{σ,1}` of the Ariki–Koike algebra of a series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeckeSpecialization {
    pub variant: Variant,
    pub e: usize,
    pub tau: Vec<HeckeParam>,
    pub sigma: [HeckeParam; 2],
}

impl HeckeSpecialization {
    /// Apply `x ↦ −x` to every parameter.
    pub fn substitute_neg_x(&self) -> Self {
        HeckeSpecialization {
            variant: match self.variant {
                Variant::GL => Variant::GU,
                Variant::GU => Variant::GL,
            },
            e: self.e,
            tau: self.tau.iter().map(HeckeParam::substitute_neg_x).collect(),
            sigma: [
                self.sigma[0].substitute_neg_x(),
                self.sigma[1].substitute_neg_x(),
            ],
        }
    }

    /// Argument of `ω = −u_{σ,1}/u_{σ,0}` at `x = exp(2πi/m)`.
    pub fn omega_at_root(&self, m: usize) -> Rational64 {
        reduce_mod_one(
            self.sigma[1].argument_at_root(m) - self.sigma[0].argument_at_root(m)
                + Rational64::new(1, 2),
        )
    }
}

/// `u_{τ,j} = x^{a_j}` (GL) or `(−x)^{a_j}` (GU), `u_σ = (1, −x^e)` or `(1, −(−x)^e)`.
pub fn specialization(pair: &CuspidalPairGL, variant: Variant) -> Result<HeckeSpecialization> {
    if pair.a == 0 {
        return Err(Error::TrivialSeries);
    }
    let a = a_vector(&pair.core, pair.e)?;
    let gl = HeckeSpecialization {
        variant: Variant::GL,
        e: pair.e,
        tau: a
            .as_slice()
            .iter()
            .map(|&k| HeckeParam::x_power(k))
            .collect(),
        sigma: [
            HeckeParam::x_power(0),
            HeckeParam::x_power(pair.e as i64).neg(),
        ],
    };
    Ok(match variant {
        Variant::GL => gl,
        Variant::GU => gl.substitute_neg_x(),
    })
}
