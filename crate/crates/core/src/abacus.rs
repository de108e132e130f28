//! β-sets (1-abaci) and the `e`-fold abacus splitting.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{check_modulus, Error, Result};
use crate::partition::{ChargedPartition, Partition};

/// Floor division and non-negative remainder: `x = m*q + r`, `0 <= r < m`.
pub(crate) fn divmod(x: i64, m: i64) -> (i64, i64) {
    debug_assert!(m > 0);
    (x.div_euclid(m), x.rem_euclid(m))
}

/// A subset `β ⊆ Z` with `Z_{<x} ⊆ β ⊆ Z_{<y}` for some `x, y`.
///
/// Stored canonically as `Z_{<floor} ∪ tail`, where `floor` is the largest
/// integer with `Z_{<floor} ⊆ β` and `tail` is strictly decreasing with every
/// element above `floor`. Structural equality is set equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BetaSet {
    floor: i64,
    tail: Vec<i64>,
}

impl BetaSet {
    /// Validates an explicit `(floor, tail)` pair.
    pub fn new(floor: i64, tail: Vec<i64>) -> Result<Self> {
        if tail.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidArgument(format!(
                "beta-set tail must be strictly decreasing: {tail:?}"
            )));
        }
        if tail.last().is_some_and(|&t| t <= floor) {
            return Err(Error::InvalidArgument(format!(
                "beta-set tail {tail:?} must lie above the floor {floor}"
            )));
        }
        Ok(BetaSet { floor, tail })
    }

    /// The set `Z_{<bound}`.
    pub fn below(bound: i64) -> Self {
        BetaSet {
            floor: bound,
            tail: Vec::new(),
        }
    }

    /// `Z_{<bound} ∪ beads`, brought into canonical form.
    pub fn from_bound_and_beads(bound: i64, beads: impl IntoIterator<Item = i64>) -> Self {
        let mut set: BTreeSet<i64> = beads.into_iter().filter(|&b| b >= bound).collect();
        let mut floor = bound;
        while set.remove(&floor) {
            floor += 1;
        }
        BetaSet {
            floor,
            tail: set.into_iter().rev().collect(),
        }
    }

    pub fn floor(&self) -> i64 {
        self.floor
    }

    pub fn tail(&self) -> &[i64] {
        &self.tail
    }

    pub fn contains(&self, x: i64) -> bool {
        x < self.floor || self.tail.binary_search_by(|t| x.cmp(t)).is_ok()
    }

    /// The largest bead.
    pub fn max_bead(&self) -> i64 {
        self.tail.first().copied().unwrap_or(self.floor - 1)
    }

    /// `|β ∩ Z_{≥0}| − |Z_{<0} \ β|`; in canonical form this is `floor + |tail|`.
    pub fn charge(&self) -> i64 {
        self.floor + self.tail.len() as i64
    }

    /// Beads in decreasing order, without end.
    pub fn beads_descending(&self) -> impl Iterator<Item = i64> + '_ {
        self.tail
            .iter()
            .copied()
            .chain((0..).map(move |k| self.floor - 1 - k))
    }

    /// Shift every bead by `d`.
    pub fn shifted(&self, d: i64) -> BetaSet {
        BetaSet {
            floor: self.floor + d,
            tail: self.tail.iter().map(|t| t + d).collect(),
        }
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for t in &self.tail {
            write!(f, "{t}, ")?;
        }
        write!(f, "<{}}}", self.floor)
    }
}

/// `β_{π,s} = {π_i − i + s : i ≥ 1}`.
pub fn to_beta(cp: &ChargedPartition) -> BetaSet {
    let parts = cp.partition.parts();
    let len = parts.len() as i64;
    let beads = parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 - (i as i64 + 1) + cp.charge);
    BetaSet::from_bound_and_beads(cp.charge - len, beads)
}

/// Inverse of [`to_beta`].
pub fn from_beta(beta: &BetaSet) -> ChargedPartition {
    let charge = beta.charge();
    let parts = beta
        .tail
        .iter()
        .enumerate()
        .map(|(k, &b)| (b + k as i64 + 1 - charge) as usize)
        .collect();
    ChargedPartition::new(Partition::from_sorted_unchecked(parts), charge)
}

/// Builds output abaci from a map sending each output bead position back to
/// the input position it came from.
///
/// For every output component `j`, the first coordinate of
/// `preimage(p, j)` must be non-decreasing and unbounded in `p`. That makes
/// the output cofinite-below exactly when the inputs are, and lets the
/// finite window be located by doubling searches.
pub(crate) fn pull_back(
    inputs: &[BetaSet],
    n_out: usize,
    preimage: impl Fn(i64, usize) -> (i64, usize),
) -> Vec<BetaSet> {
    let min_floor = inputs.iter().map(BetaSet::floor).min().expect("no inputs");
    let max_bead = inputs
        .iter()
        .map(BetaSet::max_bead)
        .max()
        .expect("no inputs");
    (0..n_out)
        .map(|j| {
            let coord = |p: i64| preimage(p, j).0;
            let mut lo = -1;
            while coord(lo) >= min_floor {
                lo *= 2;
            }
            let mut hi = 1;
            while coord(hi) <= max_bead {
                hi *= 2;
            }
            let beads = (lo + 1..hi).filter(|&p| {
                let (x, i) = preimage(p, j);
                inputs[i].contains(x)
            });
            BetaSet::from_bound_and_beads(lo + 1, beads)
        })
        .collect()
}

/// `υ_e`: component `i` collects `q_e(x)` for the beads `x` with `r_e(x) = i`.
pub fn split_beta(beta: &BetaSet, e: usize) -> Result<Vec<BetaSet>> {
    check_modulus(e)?;
    let e = e as i64;
    Ok(pull_back(std::slice::from_ref(beta), e as usize, |q, i| {
        (e * q + i as i64, 0)
    }))
}

/// Inverse of [`split_beta`]: `{e q + i : q ∈ bs[i]}`.
pub fn join_beta(components: &[BetaSet]) -> Result<BetaSet> {
    let e = components.len();
    check_modulus(e)?;
    let out = pull_back(components, 1, |x, _| {
        let (q, r) = divmod(x, e as i64);
        (q, r as usize)
    });
    Ok(out.into_iter().next().expect("one output component"))
}
