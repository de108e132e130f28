//! Fixed workloads shared by the benchmarks.

use abacus_core::{MultiPartition, Partition};
use num_integer::Integer;

/// Every partition of every size up to `n`.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    Partition::all_up_to(n).collect()
}

/// Every `e`-multipartition of `a`.
pub fn multipartitions(e: usize, a: usize) -> Vec<MultiPartition> {
    MultiPartition::all_of_size(e, a)
}

/// Coprime pairs `1 <= e < m <= max`.
pub fn coprime_pairs(max: usize) -> Vec<(usize, usize)> {
    (1..=max)
        .flat_map(|e| (e + 1..=max).map(move |m| (e, m)))
        .filter(|&(e, m)| e.gcd(&m) == 1)
        .collect()
}
