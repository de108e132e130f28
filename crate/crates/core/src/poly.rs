//! Exact integer polynomials: cyclotomic polynomials, `Φ_e`-multiplicities,
//! generic orders and degrees for `GL_n`, and Ennola substitutions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{check_modulus, Error, Result};
use crate::partition::Partition;
use crate::quotient::hook_lengths;

/// A polynomial in `x` with arbitrary-precision integer coefficients.
/// Coefficient `i` multiplies `x^i`; trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut p = IntPolynomial {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new([c.into()])
    }

    /// `c x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c.into());
        Self::new(coeffs)
    }

    /// `x^k − 1`.
    pub fn x_pow_minus_one(k: usize) -> Self {
        Self::monomial(1, k) - Self::one()
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// The constant value if the polynomial has degree at most 0.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Division with remainder by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
        let d = divisor.degree().expect("division by zero polynomial");
        assert!(
            divisor.leading().is_some_and(One::is_one),
            "divisor must be monic"
        );
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (IntPolynomial::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = std::mem::take(&mut rem[k + d]);
            if c.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs[..d].iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quot[k] = c;
        }
        (IntPolynomial::new(quot), IntPolynomial::new(rem))
    }

    /// Exact quotient `self / divisor` for a divisor with leading coefficient ±1.
    pub fn exact_div(&self, divisor: &IntPolynomial) -> Result<IntPolynomial> {
        let lead = divisor
            .leading()
            .ok_or_else(|| Error::InexactDivision("division by zero".into()))?;
        let (sign, monic) = if lead.is_one() {
            (false, divisor.clone())
        } else if (-lead).is_one() {
            (true, -divisor.clone())
        } else {
            return Err(Error::InexactDivision(format!(
                "divisor {divisor} is not monic up to sign"
            )));
        };
        let (q, r) = self.div_rem_monic(&monic);
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!(
                "{self} is not divisible by {divisor}"
            )));
        }
        Ok(if sign { -q } else { q })
    }

    /// `f(−x)`.
    pub fn substitute_neg_x(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().enumerate().map(|(i, c)| {
            if i % 2 == 1 {
                -c
            } else {
                c.clone()
            }
        }))
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)))
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        self + (-rhs)
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl std::iter::Product for IntPolynomial {
    fn product<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::one(), |acc, p| &acc * &p)
    }
}

/// Sparse rendering with descending exponents, e.g. `x^3 - 2*x + 1`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = abs.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{abs}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{abs}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `Φ_d` for every divisor `d` of `e`, computed bottom-up.
fn cyclotomic_table(e: usize) -> BTreeMap<usize, IntPolynomial> {
    let divisors: Vec<usize> = (1..=e).filter(|d| e.is_multiple_of(*d)).collect();
    let mut table = BTreeMap::<usize, IntPolynomial>::new();
    for &d in &divisors {
        let lower: IntPolynomial = divisors
            .iter()
            .filter(|&&c| c < d && d % c == 0)
            .map(|c| table[c].clone())
            .product();
        let phi = IntPolynomial::x_pow_minus_one(d)
            .exact_div(&lower)
            .expect("x^d - 1 is the product of the Phi_c with c | d");
        table.insert(d, phi);
    }
    table
}

/// The `e`-th cyclotomic polynomial.
pub fn cyclotomic(e: usize) -> Result<IntPolynomial> {
    check_modulus(e)?;
    Ok(cyclotomic_table(e).remove(&e).expect("e divides itself"))
}

/// `r_e(f)`: the largest power of `Φ_e` dividing `f`.
pub fn phi_multiplicity(f: &IntPolynomial, e: usize) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let phi = cyclotomic(e)?;
    let mut current = f.clone();
    let mut count = 0;
    loop {
        let (q, r) = current.div_rem_monic(&phi);
        if !r.is_zero() {
            return Ok(count);
        }
        current = q;
        count += 1;
    }
}

/// Remainder of `f` modulo `Φ_e`.
pub fn mod_cyclotomic(f: &IntPolynomial, e: usize) -> Result<IntPolynomial> {
    Ok(f.div_rem_monic(&cyclotomic(e)?).1)
}

fn q_factorial(n: usize) -> IntPolynomial {
    (1..=n).map(IntPolynomial::x_pow_minus_one).product()
}

/// `|GL_n|(x) = x^{n(n−1)/2} ∏_{i=1}^{n} (x^i − 1)`.
pub fn gl_order(n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::InvalidArgument("gl_order needs n >= 1".into()));
    }
    Ok(&IntPolynomial::monomial(1, n * (n - 1) / 2) * &q_factorial(n))
}

/// Generic degree of the unipotent character indexed by `p` (the `q`-hook formula).
/// `(n)` gives 1 and `(1^n)` gives `x^{n(n−1)/2}`.
pub fn generic_degree(p: &Partition) -> Result<IntPolynomial> {
    let hooks: IntPolynomial = hook_lengths(p)
        .into_iter()
        .map(IntPolynomial::x_pow_minus_one)
        .product();
    let numerator = &IntPolynomial::monomial(1, p.weighted_size()) * &q_factorial(p.size());
    numerator.exact_div(&hooks)
}

/// True iff `r_e(Deg_p) = r_e(|GL_{|p|}|)`.
pub fn singular_check(p: &Partition, e: usize) -> Result<bool> {
    check_modulus(e)?;
    if p.size() == 0 {
        return Ok(true);
    }
    Ok(phi_multiplicity(&generic_degree(p)?, e)? == phi_multiplicity(&gl_order(p.size())?, e)?)
}

/// `f(−x)`.
pub fn ennola_substitute(f: &IntPolynomial) -> IntPolynomial {
    f.substitute_neg_x()
}

/// The index `e⁻` with `Φ_{e⁻}(x) = ±Φ_e(−x)`.
pub fn ennola_e(e: usize) -> Result<usize> {
    check_modulus(e)?;
    Ok(if e.is_odd() {
        2 * e
    } else if e.is_multiple_of(4) {
        e
    } else {
        e / 2
    })
}
