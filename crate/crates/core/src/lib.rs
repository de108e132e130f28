//! Combinatorics of unipotent characters of `GL_n(q)` and `GU_n(q)` under
//! the `Φ_e`-Harish-Chandra theory and level-rank duality.
//!
//! Partitions and β-sets live in [`partition`] and [`abacus`]; the core-quotient
//! bijection in [`quotient`]; the level-rank maps in [`levelrank`]; integer
//! polynomials and generic degrees in [`poly`]; series and Hecke parameters in
//! [`hc_series`]; residue keys and block decompositions in [`blocks`]; and
//! exhaustive sweeps in [`verify`].

pub mod abacus;
pub mod blocks;
pub mod error;
pub mod hc_series;
pub mod levelrank;
pub mod partition;
pub mod poly;
pub mod quotient;
pub mod verify;

pub use abacus::{from_beta, join_beta, split_beta, to_beta, BetaSet};
pub use blocks::{
    block_partition, block_partition_unchecked, check_content_lemma, check_content_prop,
    content_window, lm_block_key, lm_block_key_unchecked, residue_mod, residue_multiset,
    same_block, verify_mainthm1, IntersectionRecord, IntersectionReport, ResidueMultiset,
    ResidueMultisetModM, RootResidueKey, TruncatedSeries, ZSeries,
};
pub use error::{Error, Result};
pub use hc_series::{
    degree_congruence_sign, epsilon_sign, hc_pairs, hc_partition, hc_series_of, intersection,
    specialization, wreath_dim, CuspidalPairGL, HcSeries, HeckeParam, HeckeSpecialization, Variant,
    WreathGroupDescriptor,
};
pub use levelrank::{
    affine_perm, apply_affine, check_square, check_uglov_diagram, qr_em, qr_em_inv, uglov, w_perm,
    AffinePermData,
};
pub use partition::{
    ChargedMultiPartition, ChargedPartition, MultiCharge, MultiPartition, Partition,
};
pub use poly::{
    cyclotomic, ennola_e, ennola_substitute, generic_degree, gl_order, mod_cyclotomic,
    phi_multiplicity, singular_check, IntPolynomial,
};
pub use quotient::{
    a_vector, e_core, e_quotient_charged, hook_lengths, is_e_core, upsilon, upsilon_inv,
};
