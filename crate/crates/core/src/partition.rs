//! Partitions, multipartitions and their charged versions.
//!
//! Text formats: a partition is written as comma-separated weakly decreasing
//! positive integers (`"3,1,1"`), the empty string being the empty partition.
//! Multipartitions join their components with `;` (`";1"` is `(∅, (1))`) and
//! charge vectors are comma-separated integers.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing finite sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "partition parts must be positive: {parts:?}"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from a weakly decreasing sequence, dropping zero parts.
    pub(crate) fn from_sorted_unchecked(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-indexed), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.0.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition(parts)
    }

    /// Boxes as 1-indexed `(row, column)` pairs, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
    }

    /// `Σ (i-1) p_i`, the exponent of `x` in the generic degree.
    pub fn weighted_size(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_partitions(n, n, &mut current, &mut out);
        out
    }

    /// All partitions of size at most `n`, grouped by size.
    pub fn all_up_to(n: usize) -> impl Iterator<Item = Partition> {
        (0..=n).flat_map(Partition::all_of_size)
    }
}

fn fill_partitions(
    remaining: usize,
    max: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for p in (1..=max.min(remaining)).rev() {
        current.push(p);
        fill_partitions(remaining - p, p, current, out);
        current.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("invalid part {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A partition together with an integer charge, `|π, s⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChargedPartition {
    pub partition: Partition,
    pub charge: i64,
}

impl ChargedPartition {
    pub fn new(partition: Partition, charge: i64) -> Self {
        ChargedPartition { partition, charge }
    }
}

/// An `e`-tuple of partitions, components indexed `0..e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPartition(Vec<Partition>);

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidArgument(
                "a multipartition needs at least one component".into(),
            ));
        }
        Ok(MultiPartition(components))
    }

    pub fn empty(e: usize) -> Self {
        assert!(e >= 1, "a multipartition needs at least one component");
        MultiPartition(vec![Partition::empty(); e])
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn into_components(self) -> Vec<Partition> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(Partition::is_empty)
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    /// All `e`-multipartitions of total size `a`, in a fixed canonical order.
    pub fn all_of_size(e: usize, a: usize) -> Vec<MultiPartition> {
        assert!(e >= 1, "a multipartition needs at least one component");
        let by_size: Vec<Vec<Partition>> = (0..=a).map(Partition::all_of_size).collect();
        let mut out = Vec::new();
        let mut sizes = vec![0; e];
        compositions(a, 0, &mut sizes, &mut |sizes| {
            let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
            for &s in sizes {
                acc = acc
                    .into_iter()
                    .flat_map(|prefix| {
                        by_size[s].iter().map(move |p| {
                            let mut next = prefix.clone();
                            next.push(p.clone());
                            next
                        })
                    })
                    .collect();
            }
            out.extend(acc.into_iter().map(MultiPartition));
        });
        out
    }
}

fn compositions(
    remaining: usize,
    idx: usize,
    sizes: &mut [usize],
    visit: &mut dyn FnMut(&[usize]),
) {
    if idx + 1 == sizes.len() {
        sizes[idx] = remaining;
        visit(sizes);
        return;
    }
    for s in (0..=remaining).rev() {
        sizes[idx] = s;
        compositions(remaining - s, idx + 1, sizes, visit);
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for MultiPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let comps = s
            .split(';')
            .map(str::parse)
            .collect::<Result<Vec<Partition>>>()?;
        MultiPartition::new(comps)
    }
}

impl Serialize for MultiPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A vector of integer charges, one per component.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct MultiCharge(pub Vec<i64>);

impl MultiCharge {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for MultiCharge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for MultiCharge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("invalid charge {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(MultiCharge)
    }
}

/// A charged multipartition `|π⃗, s⃗⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChargedMultiPartition {
    multipartition: MultiPartition,
    multicharge: MultiCharge,
}

impl ChargedMultiPartition {
    pub fn new(multipartition: MultiPartition, multicharge: MultiCharge) -> Result<Self> {
        if multipartition.len() != multicharge.len() {
            return Err(Error::ComponentMismatch {
                expected: multipartition.len(),
                found: multicharge.len(),
            });
        }
        Ok(ChargedMultiPartition {
            multipartition,
            multicharge,
        })
    }

    pub fn multipartition(&self) -> &MultiPartition {
        &self.multipartition
    }

    pub fn multicharge(&self) -> &MultiCharge {
        &self.multicharge
    }

    pub fn num_components(&self) -> usize {
        self.multipartition.len()
    }

    pub fn component(&self, i: usize) -> ChargedPartition {
        ChargedPartition::new(
            self.multipartition.components()[i].clone(),
            self.multicharge.0[i],
        )
    }

    pub fn into_parts(self) -> (MultiPartition, MultiCharge) {
        (self.multipartition, self.multicharge)
    }

    pub(crate) fn from_components(components: Vec<ChargedPartition>) -> Self {
        let (parts, charges) = components
            .into_iter()
            .map(|cp| (cp.partition, cp.charge))
            .unzip();
        ChargedMultiPartition {
            multipartition: MultiPartition(parts),
            multicharge: MultiCharge(charges),
        }
    }
}
