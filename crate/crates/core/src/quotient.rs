//! Hooks, cores and the charged core-quotient bijection `Υ_e`.

use crate::abacus::{from_beta, join_beta, split_beta, to_beta};
use crate::error::{check_modulus, Error, Result};
use crate::partition::{
    ChargedMultiPartition, ChargedPartition, MultiCharge, MultiPartition, Partition,
};

/// Hook lengths of every box, sorted in decreasing order.
pub fn hook_lengths(p: &Partition) -> Vec<usize> {
    let conj = p.conjugate();
    let mut hooks: Vec<usize> = p
        .boxes()
        .map(|(r, c)| {
            let arm = p.part(r - 1) - c;
            let leg = conj.part(c - 1) - r;
            arm + leg + 1
        })
        .collect();
    hooks.sort_unstable_by(|a, b| b.cmp(a));
    hooks
}

/// `Υ_e = β^{-1} ∘ υ_e ∘ β`.
pub fn upsilon(cp: &ChargedPartition, e: usize) -> Result<ChargedMultiPartition> {
    let comps = split_beta(&to_beta(cp), e)?;
    Ok(ChargedMultiPartition::from_components(
        comps.iter().map(from_beta).collect(),
    ))
}

/// Inverse of [`upsilon`]; the number of components fixes `e`.
pub fn upsilon_inv(cmp: &ChargedMultiPartition) -> ChargedPartition {
    let comps: Vec<_> = (0..cmp.num_components())
        .map(|i| to_beta(&cmp.component(i)))
        .collect();
    from_beta(&join_beta(&comps).expect("a multipartition has at least one component"))
}

/// The partition left after removing all rim `e`-hooks.
pub fn e_core(p: &Partition, e: usize) -> Result<Partition> {
    let split = upsilon(&ChargedPartition::new(p.clone(), 0), e)?;
    let (_, charges) = split.into_parts();
    let emptied = ChargedMultiPartition::new(MultiPartition::empty(e), charges)?;
    Ok(upsilon_inv(&emptied).partition)
}

/// `Υ_e(|p, e + s⟩)`: the quotient `ϱ⃗_{e,s}(p)` together with the charges `b⃗_{e,s}(p)`.
pub fn e_quotient_charged(p: &Partition, e: usize, s: i64) -> Result<ChargedMultiPartition> {
    check_modulus(e)?;
    upsilon(&ChargedPartition::new(p.clone(), e as i64 + s), e)
}

/// True iff no hook length of `p` is divisible by `e`.
pub fn is_e_core(p: &Partition, e: usize) -> Result<bool> {
    check_modulus(e)?;
    Ok(hook_lengths(p).iter().all(|h| h % e != 0))
}

/// `a^{(i)} = e·b^{(i)}_{e,ℓ}(core) + i` with `ℓ` the length of the core.
pub fn a_vector(core: &Partition, e: usize) -> Result<MultiCharge> {
    if !is_e_core(core, e)? {
        return Err(Error::NotCore {
            partition: core.to_string(),
            e,
        });
    }
    let b = e_quotient_charged(core, e, core.len() as i64)?;
    Ok(MultiCharge(
        b.multicharge()
            .as_slice()
            .iter()
            .enumerate()
            .map(|(i, &bi)| e as i64 * bi + i as i64)
            .collect(),
    ))
}
