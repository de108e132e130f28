//! Brute-force reference implementations that share no code with the library.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Partitions of `n` in decreasing lexicographic order, by plain recursion.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k);
            go(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn conjugate(p: &[usize]) -> Vec<usize> {
    let width = p.first().copied().unwrap_or(0);
    (1..=width)
        .map(|c| p.iter().filter(|&&r| r >= c).count())
        .collect()
}

/// Hook lengths from arms and legs, row by row.
pub fn hooks_by_diagram(p: &[usize]) -> Vec<usize> {
    let conj = conjugate(p);
    let mut out = Vec::new();
    for (i, &row) in p.iter().enumerate() {
        for (j, &col) in conj.iter().enumerate().take(row) {
            out.push((row - j - 1) + (col - i - 1) + 1);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Hook lengths as gaps `x − y` with `x` a bead, `y < x` a hole, on a finite β-set.
pub fn hooks_by_beads(p: &[usize]) -> Vec<usize> {
    let len = p.len();
    let beads: Vec<i64> = p
        .iter()
        .enumerate()
        .map(|(i, &r)| r as i64 - i as i64 + len as i64 - 1)
        .collect();
    let mut out = Vec::new();
    for &x in &beads {
        for y in 0..x {
            if !beads.contains(&y) {
                out.push((x - y) as usize);
            }
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Removes the rim hook whose hook box is at 0-based `(i, j)`.
fn remove_rim_hook(p: &[usize], i: usize, j: usize) -> Vec<usize> {
    let conj = conjugate(p);
    let last = conj[j] - 1;
    let mut q = p.to_vec();
    for r in i..last {
        q[r] = p[r + 1] - 1;
    }
    q[last] = j;
    q.retain(|&x| x > 0);
    q
}

/// The `e`-core by removing rim `e`-hooks from the diagram until none is left.
pub fn rim_hook_core(p: &[usize], e: usize) -> Vec<usize> {
    let mut p = p.to_vec();
    'outer: loop {
        let conj = conjugate(&p);
        for (i, &row) in p.iter().enumerate() {
            for (j, &col) in conj.iter().enumerate().take(row) {
                let hook = (row - j - 1) + (col - i - 1) + 1;
                if hook == e {
                    p = remove_rim_hook(&p, i, j);
                    continue 'outer;
                }
            }
        }
        return p;
    }
}

/// Number of rim `e`-hooks removed on the way to the `e`-core.
pub fn rim_hook_weight(p: &[usize], e: usize) -> usize {
    let n: usize = p.iter().sum();
    let core: usize = rim_hook_core(p, e).iter().sum();
    (n - core) / e
}

/// `(components, charges)` of the finite `e`-runner abacus of `p` with `big_n` beads,
/// `big_n` a multiple of `e` and at least the length of `p`.
pub fn finite_abacus(p: &[usize], e: usize, big_n: usize) -> (Vec<Vec<usize>>, Vec<i64>) {
    assert!(big_n.is_multiple_of(e) && big_n >= p.len());
    let beads: Vec<usize> = (0..big_n)
        .map(|i| p.get(i).copied().unwrap_or(0) + big_n - 1 - i)
        .collect();
    let mut comps = Vec::new();
    let mut charges = Vec::new();
    for runner in 0..e {
        let mut pos: Vec<usize> = beads
            .iter()
            .filter(|&&x| x % e == runner)
            .map(|&x| x / e)
            .collect();
        pos.sort_unstable_by(|a, b| b.cmp(a));
        let c = pos.len();
        let parts: Vec<usize> = pos
            .iter()
            .enumerate()
            .map(|(k, &b)| b + k + 1 - c)
            .filter(|&x| x > 0)
            .collect();
        comps.push(parts);
        charges.push(c as i64);
    }
    (comps, charges)
}

/// Standard Young tableaux of shape `p`, by removing the largest entry from a corner.
pub fn count_syt(p: &[usize]) -> u128 {
    fn go(p: Vec<usize>, memo: &mut HashMap<Vec<usize>, u128>) -> u128 {
        if p.iter().sum::<usize>() <= 1 {
            return 1;
        }
        if let Some(&v) = memo.get(&p) {
            return v;
        }
        let mut total = 0;
        for i in 0..p.len() {
            let below = p.get(i + 1).copied().unwrap_or(0);
            if p[i] > below {
                let mut q = p.clone();
                q[i] -= 1;
                q.retain(|&x| x > 0);
                total += go(q, memo);
            }
        }
        memo.insert(p, total);
        total
    }
    go(p.to_vec(), &mut HashMap::new())
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `a! / ∏ |λ_j|! · ∏ #SYT(λ_j)`.
pub fn wreath_dim_oracle(comps: &[Vec<usize>]) -> u128 {
    let mut left: usize = comps.iter().map(|c| c.iter().sum::<usize>()).sum();
    let mut out = 1u128;
    for c in comps {
        let k: usize = c.iter().sum();
        out *= binomial(left, k) * count_syt(c);
        left -= k;
    }
    out
}

fn mobius(mut n: usize) -> i32 {
    let mut mu = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            mu = -mu;
        }
        d += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// `Φ_n(x) = ∏_{d | n} (x^d − 1)^{μ(n/d)}` at an integer point `x ≥ 2`.
pub fn cyclotomic_value(n: usize, x: i64) -> BigInt {
    let mut acc = BigRational::one();
    let x = BigInt::from(x);
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let term = BigRational::from_integer(x.pow(d as u32) - 1);
        match mobius(n / d) {
            1 => acc *= term,
            -1 => acc /= term,
            _ => {}
        }
    }
    assert!(acc.is_integer());
    acc.to_integer()
}

/// Box residues `e·(col − row + s_j) + j`, by walking every cell.
pub fn residues_by_cells(comps: &[Vec<usize>], charges: &[i64]) -> BTreeMap<i64, usize> {
    let e = comps.len() as i64;
    let mut out = BTreeMap::new();
    for (j, comp) in comps.iter().enumerate() {
        for (row, &len) in comp.iter().enumerate() {
            for col in 0..len {
                let k = e * (col as i64 - row as i64 + charges[j]) + j as i64;
                *out.entry(k).or_insert(0) += 1;
            }
        }
    }
    out
}

/// Multiset of residues mod `m`.
pub fn reduce_mod(res: &BTreeMap<i64, usize>, m: usize) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    for (&k, &v) in res {
        *out.entry(k.rem_euclid(m as i64)).or_insert(0) += v;
    }
    out.retain(|_, v: &mut usize| !v.is_zero());
    out
}
