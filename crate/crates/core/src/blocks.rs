//! Residue multisets, Lyle–Mathas block keys and block partitions of
//! specialized Ariki–Koike algebras, plus the generating-function identities
//! relating residues to abaci.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use serde::Serialize;

use crate::abacus::{to_beta, BetaSet};
use crate::error::{check_modulus, Error, Result};
use crate::hc_series::{
    hc_partition, specialization, CuspidalPairGL, HcSeries, HeckeSpecialization, Variant,
};
use crate::levelrank::require_coprime;
use crate::partition::{
    ChargedMultiPartition, ChargedPartition, MultiCharge, MultiPartition, Partition,
};
use crate::poly::ennola_e;
use crate::quotient::{e_core, e_quotient_charged, upsilon};

/// Box count per integer residue `k = e·(content + s_j) + j`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ResidueMultiset(pub BTreeMap<i64, usize>);

impl ResidueMultiset {
    pub fn mass(&self) -> usize {
        self.0.values().sum()
    }

    pub fn get(&self, k: i64) -> usize {
        self.0.get(&k).copied().unwrap_or(0)
    }

    fn add(&mut self, k: i64) {
        *self.0.entry(k).or_insert(0) += 1;
    }
}

/// A [`ResidueMultiset`] with residues reduced mod `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ResidueMultisetModM {
    pub m: usize,
    pub counts: BTreeMap<usize, usize>,
}

/// Box count per parameter value `ω^{content} α_j`, each value written as its argument in `Q/Z`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootResidueKey(pub BTreeMap<Rational64, usize>);

impl Serialize for RootResidueKey {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_map(self.0.iter().map(|(k, v)| (k.to_string(), v)))
    }
}

/// Content `column − row` of every box of every component, tagged by component.
fn boxes_with_content(mp: &MultiPartition) -> impl Iterator<Item = (usize, i64)> + '_ {
    mp.components()
        .iter()
        .enumerate()
        .flat_map(|(j, p)| p.boxes().map(move |(r, c)| (j, c as i64 - r as i64)))
}

/// `c_{|π⃗, s⃗⟩}`.
pub fn residue_multiset(cmp: &ChargedMultiPartition, e: usize) -> Result<ResidueMultiset> {
    check_modulus(e)?;
    if cmp.num_components() != e {
        return Err(Error::ComponentMismatch {
            expected: e,
            found: cmp.num_components(),
        });
    }
    let charges = cmp.multicharge().as_slice();
    let e = e as i64;
    let mut out = ResidueMultiset::default();
    for (j, content) in boxes_with_content(cmp.multipartition()) {
        out.add(e * (content + charges[j]) + j as i64);
    }
    Ok(out)
}

/// `c^{Φ_m}`: multiplicities summed over classes mod `m`.
pub fn residue_mod(rm: &ResidueMultiset, m: usize) -> Result<ResidueMultisetModM> {
    check_modulus(m)?;
    let mut counts = BTreeMap::new();
    for (&k, &mult) in &rm.0 {
        *counts.entry(k.rem_euclid(m as i64) as usize).or_insert(0) += mult;
    }
    Ok(ResidueMultisetModM { m, counts })
}

/// Block key of `mp` for the algebra with parameters `params` at `x = exp(2πi/m)`.
pub fn lm_block_key(
    mp: &MultiPartition,
    params: &HeckeSpecialization,
    m: usize,
) -> Result<RootResidueKey> {
    check_modulus(m)?;
    if params.omega_at_root(m) == Rational64::from_integer(0) {
        return Err(Error::OmegaIsOne(m));
    }
    lm_block_key_unchecked(mp, params, m)
}

/// [`lm_block_key`] without the `ω ≠ 1` hypothesis; with `ω = 1` the key only
/// sees how many boxes each component carries at each `α_j`.
pub fn lm_block_key_unchecked(
    mp: &MultiPartition,
    params: &HeckeSpecialization,
    m: usize,
) -> Result<RootResidueKey> {
    check_modulus(m)?;
    if mp.len() != params.tau.len() {
        return Err(Error::ComponentMismatch {
            expected: params.tau.len(),
            found: mp.len(),
        });
    }
    let omega = params.omega_at_root(m);
    let alphas: Vec<Rational64> = params.tau.iter().map(|t| t.argument_at_root(m)).collect();
    let mut key = RootResidueKey::default();
    for (j, content) in boxes_with_content(mp) {
        let arg = omega * Rational64::from_integer(content) + alphas[j];
        *key.0.entry(arg - arg.floor()).or_insert(0) += 1;
    }
    Ok(key)
}

fn gl_key(p: &Partition, e: usize, m: usize, s: i64) -> Result<ResidueMultisetModM> {
    residue_mod(&residue_multiset(&e_quotient_charged(p, e, s)?, e)?, m)
}

/// Whether `p` and `r`, both of `e`-core `core`, lie in the same block at `x = exp(2πi/m)`.
pub fn same_block(
    p: &Partition,
    r: &Partition,
    e: usize,
    m: usize,
    core: &Partition,
) -> Result<bool> {
    check_modulus(e)?;
    check_modulus(m)?;
    for x in [p, r] {
        let actual = e_core(x, e)?;
        if &actual != core {
            return Err(Error::InvalidArgument(format!(
                "{x} has {e}-core {actual}, not {core}"
            )));
        }
    }
    let s = core.len() as i64;
    let same = gl_key(p, e, m, s)? == gl_key(r, e, m, s)?;

    let a = (p.size() - core.size()) / e;
    if a > 0 {
        let pair = CuspidalPairGL::new(p.size(), e, core.clone())?;
        let params = specialization(&pair, Variant::GL)?;
        if params.omega_at_root(m) != Rational64::from_integer(0) {
            let key = |x: &Partition| -> Result<RootResidueKey> {
                let q = e_quotient_charged(x, e, s)?;
                lm_block_key(q.multipartition(), &params, m)
            };
            let same_lm = key(p)? == key(r)?;
            if same_lm != same {
                return Err(Error::EquivalenceViolation {
                    left: format!("residues mod {m} equal: {same}"),
                    right: format!("parameter keys equal: {same_lm}"),
                });
            }
        }
    }
    Ok(same)
}

/// Groups items by key, blocks ordered by first appearance.
fn group_by_key<T: Clone, K: PartialEq>(items: &[T], keys: &[K]) -> Vec<Vec<T>> {
    let mut reps: Vec<&K> = Vec::new();
    let mut blocks: Vec<Vec<T>> = Vec::new();
    for (item, key) in items.iter().zip(keys) {
        match reps.iter().position(|r| *r == key) {
            Some(i) => blocks[i].push(item.clone()),
            None => {
                reps.push(key);
                blocks.push(vec![item.clone()]);
            }
        }
    }
    blocks
}

/// Blocks of the `e`-multipartitions of `a` under the parameters of the
/// series with `e`-core `core`, at `x = exp(2πi/m)`.
pub fn block_partition(
    e: usize,
    a: usize,
    core: &Partition,
    m: usize,
) -> Result<Vec<Vec<MultiPartition>>> {
    check_modulus(e)?;
    check_modulus(m)?;
    if a > 0 && e.is_multiple_of(m) {
        return Err(Error::OmegaIsOne(m));
    }
    block_partition_unchecked(e, a, core, m)
}

/// [`block_partition`] without the `ω ≠ 1` hypothesis.
pub fn block_partition_unchecked(
    e: usize,
    a: usize,
    core: &Partition,
    m: usize,
) -> Result<Vec<Vec<MultiPartition>>> {
    let charges = e_quotient_charged(core, e, core.len() as i64)?
        .into_parts()
        .1;
    let mps = MultiPartition::all_of_size(e, a);
    let keys = mps
        .iter()
        .map(|mp| key_for(mp, &charges, e, m))
        .collect::<Result<Vec<_>>>()?;
    Ok(group_by_key(&mps, &keys))
}

fn key_for(
    mp: &MultiPartition,
    charges: &MultiCharge,
    e: usize,
    m: usize,
) -> Result<ResidueMultisetModM> {
    let cmp = ChargedMultiPartition::new(mp.clone(), charges.clone())?;
    residue_mod(&residue_multiset(&cmp, e)?, m)
}

/// A Laurent series in `t` known exactly for exponents `≥ low`.
#[derive(Debug, Clone)]
pub struct TruncatedSeries {
    low: i64,
    coeffs: Vec<i64>,
}

impl TruncatedSeries {
    pub fn new(low: i64, coeffs: Vec<i64>) -> Self {
        let mut s = TruncatedSeries { low, coeffs };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    /// Coefficients of `t^low, t^{low+1}, …` up to the last nonzero one.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; zero below the truncation.
    pub fn coeff(&self, k: i64) -> i64 {
        if k < self.low {
            return 0;
        }
        self.coeffs
            .get((k - self.low) as usize)
            .copied()
            .unwrap_or(0)
    }

    fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64
    }

    /// Product with `1 − t^{−d}`, truncated at the same `low`.
    pub fn times_one_minus_t_inv(&self, d: usize) -> Self {
        let d = d as i64;
        let coeffs = (self.low..self.high())
            .map(|k| self.coeff(k) - self.coeff(k + d))
            .collect();
        TruncatedSeries::new(self.low, coeffs)
    }
}

impl std::ops::Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let low = self.low.max(rhs.low);
        let high = self.high().max(rhs.high());
        TruncatedSeries::new(
            low,
            (low..high).map(|k| self.coeff(k) - rhs.coeff(k)).collect(),
        )
    }
}

impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        let low = self.low.max(other.low);
        let high = self.high().max(other.high());
        (low..high).all(|k| self.coeff(k) == other.coeff(k))
    }
}

impl Eq for TruncatedSeries {}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = (self.low..self.high())
            .rev()
            .filter(|&k| self.coeff(k) != 0)
            .map(|k| format!("{}*t^{}", self.coeff(k), k))
            .collect();
        if terms.is_empty() {
            write!(f, "0 + O(t^{})", self.low)
        } else {
            write!(f, "{} + O(t^{})", terms.join(" + "), self.low)
        }
    }
}

/// Generating function `Σ f(k) t^k`, truncated below `low`.
pub trait ZSeries {
    fn z_series(&self, low: i64) -> TruncatedSeries;
}

impl ZSeries for ResidueMultiset {
    fn z_series(&self, low: i64) -> TruncatedSeries {
        let high = self
            .0
            .keys()
            .next_back()
            .map_or(low, |&k| k.max(low - 1) + 1);
        TruncatedSeries::new(low, (low..high).map(|k| self.get(k) as i64).collect())
    }
}

impl ZSeries for BetaSet {
    fn z_series(&self, low: i64) -> TruncatedSeries {
        let high = self.max_bead().max(low - 1) + 1;
        TruncatedSeries::new(low, (low..high).map(|k| self.contains(k) as i64).collect())
    }
}

/// The default truncation window for [`check_content_lemma`].
pub fn content_window(p: &Partition, s: i64, e: usize) -> i64 {
    (p.size() + e + 5) as i64 + s.abs()
}

/// Checks `(1 − t^{−1}) Z(c_{|p,s⟩}) = Z(β_{p,s}) − Z(Z_{<s})` and
/// `(1 − t^{−e}) Z(c_{Υ_e|p,s⟩}) = Z(β_{p,s}) − Z(β_{core,s})` on exponents `≥ −window`.
pub fn check_content_lemma(p: &Partition, s: i64, e: usize, window: i64) -> Result<bool> {
    check_modulus(e)?;
    if window < content_window(p, s, e) {
        return Err(Error::InvalidArgument(format!(
            "window {window} is below the sufficient bound {}",
            content_window(p, s, e)
        )));
    }
    let low = -window;
    let beta = to_beta(&ChargedPartition::new(p.clone(), s));
    let single =
        ChargedMultiPartition::new(MultiPartition::new(vec![p.clone()])?, MultiCharge(vec![s]))?;
    let lhs = residue_multiset(&single, 1)?
        .z_series(low)
        .times_one_minus_t_inv(1);
    let rhs = &beta.z_series(low) - &BetaSet::below(s).z_series(low);
    if lhs != rhs {
        return Ok(false);
    }

    let core = e_core(p, e)?;
    let split = upsilon(&ChargedPartition::new(p.clone(), s), e)?;
    let lhs = residue_multiset(&split, e)?
        .z_series(low)
        .times_one_minus_t_inv(e);
    let core_beta = to_beta(&ChargedPartition::new(core, s));
    let rhs = &beta.z_series(low) - &core_beta.z_series(low);
    Ok(lhs == rhs)
}

/// Charges at which [`check_content_prop`] compares residue keys.
fn prop_charges(e: usize, core: &Partition) -> Vec<i64> {
    let mut out: Vec<i64> = (-2..=2).collect();
    let s = (e + core.len()) as i64;
    if !out.contains(&s) {
        out.push(s);
    }
    out
}

/// For `p, r` of equal size and equal `e`-core with `gcd(e, m) = 1`, checks
/// that having the same `m`-core is equivalent to having equal residue keys
/// mod `m`, and returns the common answer.
pub fn check_content_prop(p: &Partition, r: &Partition, e: usize, m: usize) -> Result<bool> {
    require_coprime(e, m)?;
    if p.size() != r.size() {
        return Err(Error::InvalidArgument(format!("|{p}| != |{r}|")));
    }
    let core = e_core(p, e)?;
    if e_core(r, e)? != core {
        return Err(Error::InvalidArgument(format!(
            "{p} and {r} have different {e}-cores"
        )));
    }
    let same_core = e_core(p, m)? == e_core(r, m)?;
    for s in prop_charges(e, &core) {
        let key = |x: &Partition| -> Result<ResidueMultisetModM> {
            residue_mod(
                &residue_multiset(&upsilon(&ChargedPartition::new(x.clone(), s), e)?, e)?,
                m,
            )
        };
        let same_key = key(p)? == key(r)?;
        if same_key != same_core {
            return Err(Error::EquivalenceViolation {
                left: format!("same {m}-core: {same_core}"),
                right: format!("equal residue keys mod {m} at charge {s}: {same_key}"),
            });
        }
    }
    Ok(same_core)
}

/// One nonempty intersection of a `Φ_e`-series with a `Φ_m`-series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionRecord {
    #[serde(rename = "coreE")]
    pub core_e: Partition,
    #[serde(rename = "coreM")]
    pub core_m: Partition,
    pub members: Vec<Partition>,
    #[serde(rename = "blockE_sizes")]
    pub block_e_sizes: Vec<usize>,
    #[serde(rename = "blockM_sizes")]
    pub block_m_sizes: Vec<usize>,
    /// The unitary parameters give the same block partitions on both sides.
    pub gu_match: bool,
    pub pass: bool,
}

/// Outcome of [`verify_mainthm1`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionReport {
    pub n: usize,
    pub e: usize,
    pub m: usize,
    pub intersections: Vec<IntersectionRecord>,
    /// Sides (`"E"` or `"M"`) whose parameters specialize to `ω = 1`; their
    /// blocks are grouped by the formal residue key.
    pub omega_is_one: Vec<String>,
    pub pass: bool,
}

/// Block data for one series at a fixed root of unity.
struct SeriesBlocks {
    gl_keys: Vec<ResidueMultisetModM>,
    /// Block sizes indexed like `gl_keys`.
    gl_block_size: Vec<usize>,
    gu_match: bool,
}

/// Canonical form of a set partition of `0..n` given by a key per index.
fn canonical_classes<K: PartialEq>(keys: &[K]) -> Vec<usize> {
    let mut reps: Vec<&K> = Vec::new();
    keys.iter()
        .map(|k| match reps.iter().position(|r| *r == k) {
            Some(i) => i,
            None => {
                reps.push(k);
                reps.len() - 1
            }
        })
        .collect()
}

fn series_blocks(series: &HcSeries, m: usize) -> Result<SeriesBlocks> {
    let e = series.e;
    let gl_keys = series
        .quotients
        .iter()
        .map(|mp| key_for(mp, &series.charges, e, m))
        .collect::<Result<Vec<_>>>()?;
    let gl_block_size = gl_keys
        .iter()
        .map(|k| gl_keys.iter().filter(|o| *o == k).count())
        .collect();
    let gu_match = if series.a == 0 {
        true
    } else {
        let gu = specialization(&series.pair(), Variant::GU)?;
        let root = ennola_e(m)?;
        let gu_keys = series
            .quotients
            .iter()
            .map(|mp| lm_block_key_unchecked(mp, &gu, root))
            .collect::<Result<Vec<_>>>()?;
        canonical_classes(&gu_keys) == canonical_classes(&gl_keys)
    };
    Ok(SeriesBlocks {
        gl_keys,
        gl_block_size,
        gu_match,
    })
}

/// Sizes of the blocks hit by `members` and whether they form exactly one whole block.
fn side_check(
    series: &HcSeries,
    blocks: &SeriesBlocks,
    members: &[Partition],
) -> (Vec<usize>, bool) {
    let idx: Vec<usize> = members
        .iter()
        .map(|p| {
            series
                .members
                .iter()
                .position(|x| x == p)
                .expect("member of series")
        })
        .collect();
    let mut hit: Vec<usize> = Vec::new();
    let mut sizes = Vec::new();
    for &i in &idx {
        let first = blocks
            .gl_keys
            .iter()
            .position(|k| *k == blocks.gl_keys[i])
            .expect("key present");
        if !hit.contains(&first) {
            hit.push(first);
            sizes.push(blocks.gl_block_size[first]);
        }
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let pass = sizes.len() == 1 && sizes[0] == members.len();
    (sizes, pass)
}

/// Checks that every nonempty intersection of a `Φ_e`-series and a
/// `Φ_m`-series of `GL_n` maps onto a single whole block on both sides, for
/// both the linear and unitary parameters.
pub fn verify_mainthm1(n: usize, e: usize, m: usize) -> Result<IntersectionReport> {
    if e == m {
        return Err(Error::InvalidArgument(format!(
            "e and m must differ, both are {e}"
        )));
    }
    require_coprime(e, m)?;
    let e_series = hc_partition(n, e)?;
    let m_series = hc_partition(n, m)?;
    let e_blocks = e_series
        .iter()
        .map(|s| series_blocks(s, m))
        .collect::<Result<Vec<_>>>()?;
    let m_blocks = m_series
        .iter()
        .map(|s| series_blocks(s, e))
        .collect::<Result<Vec<_>>>()?;

    let mut omega_is_one = Vec::new();
    if e.is_multiple_of(m) {
        omega_is_one.push("E".to_string());
    }
    if m.is_multiple_of(e) {
        omega_is_one.push("M".to_string());
    }

    let mut intersections = Vec::new();
    for (se, be) in e_series.iter().zip(&e_blocks) {
        for (sm, bm) in m_series.iter().zip(&m_blocks) {
            let members: Vec<Partition> = se
                .members
                .iter()
                .filter(|p| sm.members.contains(p))
                .cloned()
                .collect();
            if members.is_empty() {
                continue;
            }
            let (block_e_sizes, pass_e) = side_check(se, be, &members);
            let (block_m_sizes, pass_m) = side_check(sm, bm, &members);
            let gu_match = be.gu_match && bm.gu_match;
            intersections.push(IntersectionRecord {
                core_e: se.core.clone(),
                core_m: sm.core.clone(),
                members,
                block_e_sizes,
                block_m_sizes,
                gu_match,
                pass: pass_e && pass_m && gu_match,
            });
        }
    }
    let pass = intersections.iter().all(|r| r.pass);
    Ok(IntersectionReport {
        n,
        e,
        m,
        intersections,
        omega_is_one,
        pass,
    })
}
