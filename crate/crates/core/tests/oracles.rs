mod common;

use abacus_core::{
    cyclotomic, e_core, e_quotient_charged, generic_degree, hook_lengths, residue_multiset,
    upsilon, wreath_dim, ChargedMultiPartition, ChargedPartition, MultiCharge, MultiPartition,
    Partition,
};
use num_bigint::BigInt;

fn lib(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

#[test]
fn enumeration_agrees() {
    for n in 0..=12 {
        let ours: Vec<Vec<usize>> = Partition::all_of_size(n)
            .into_iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(ours, common::partitions(n));
    }
}

#[test]
fn hooks_three_ways() {
    for n in 0..=12 {
        for p in common::partitions(n) {
            let ours = hook_lengths(&lib(&p));
            assert_eq!(ours, common::hooks_by_diagram(&p), "{p:?}");
            assert_eq!(ours, common::hooks_by_beads(&p), "{p:?}");
        }
    }
}

#[test]
fn cores_match_rim_hook_removal() {
    for n in 0..=12 {
        for p in common::partitions(n) {
            for e in 1..=7 {
                let ours = e_core(&lib(&p), e).unwrap();
                assert_eq!(ours.parts(), common::rim_hook_core(&p, e), "{p:?} e={e}");
            }
        }
    }
}

#[test]
fn quotients_match_finite_abacus() {
    for n in 0..=10 {
        for p in common::partitions(n) {
            for e in 1..=5 {
                let big_n = p.len().div_ceil(e).max(1) * e;
                for extra in [0, e] {
                    let big_n = big_n + extra;
                    let (comps, charges) = common::finite_abacus(&p, e, big_n);
                    let ours = upsilon(&ChargedPartition::new(lib(&p), big_n as i64), e).unwrap();
                    let expected = ChargedMultiPartition::new(
                        MultiPartition::new(comps.iter().map(|c| lib(c)).collect()).unwrap(),
                        MultiCharge(charges),
                    )
                    .unwrap();
                    assert_eq!(ours, expected, "{p:?} e={e} N={big_n}");
                }
            }
        }
    }
}

#[test]
fn quotient_weight_matches_hook_removal() {
    for n in 0..=10 {
        for p in common::partitions(n) {
            for e in 1..=5 {
                let q = e_quotient_charged(&lib(&p), e, 0).unwrap();
                assert_eq!(q.multipartition().size(), common::rim_hook_weight(&p, e));
            }
        }
    }
}

#[test]
fn degree_at_one_counts_tableaux() {
    for n in 0..=8 {
        for p in common::partitions(n) {
            let deg = generic_degree(&lib(&p)).unwrap();
            assert_eq!(
                deg.eval(&BigInt::from(1)),
                BigInt::from(common::count_syt(&p)),
                "{p:?}"
            );
        }
    }
}

#[test]
fn wreath_dims_match_tableau_counts() {
    for e in 1..=3 {
        for a in 0..=5 {
            for mp in MultiPartition::all_of_size(e, a) {
                let comps: Vec<Vec<usize>> =
                    mp.components().iter().map(|c| c.parts().to_vec()).collect();
                assert_eq!(wreath_dim(&mp), common::wreath_dim_oracle(&comps), "{mp}");
            }
        }
    }
}

#[test]
fn cyclotomics_match_mobius_products() {
    for n in 1..=30 {
        let phi = cyclotomic(n).unwrap();
        for x in [2, 3, 5] {
            assert_eq!(
                phi.eval(&BigInt::from(x)),
                common::cyclotomic_value(n, x),
                "n={n} x={x}"
            );
        }
    }
}

#[test]
fn residues_match_cell_walk() {
    for e in 1..=3 {
        for a in 0..=4 {
            for mp in MultiPartition::all_of_size(e, a) {
                for shift in -2..=2 {
                    let charges: Vec<i64> = (0..e as i64).map(|j| j * shift - 1).collect();
                    let comps: Vec<Vec<usize>> =
                        mp.components().iter().map(|c| c.parts().to_vec()).collect();
                    let cmp = ChargedMultiPartition::new(mp.clone(), MultiCharge(charges.clone()))
                        .unwrap();
                    let ours = residue_multiset(&cmp, e).unwrap();
                    assert_eq!(ours.0, common::residues_by_cells(&comps, &charges));
                }
            }
        }
    }
}

// Values computed once with the rim-hook and tableau oracles above.

#[test]
fn frozen_core_counts() {
    // number of e-cores of size n, n = 0..=12
    let expected: [(usize, [usize; 13]); 3] = [
        (2, [1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0]),
        (3, [1, 1, 2, 0, 2, 1, 2, 0, 1, 2, 2, 0, 2]),
        (4, [1, 1, 2, 3, 1, 3, 3, 3, 4, 4, 2, 2, 7]),
    ];
    for (e, counts) in expected {
        for (n, &count) in counts.iter().enumerate() {
            let oracle = common::partitions(n)
                .into_iter()
                .filter(|p| common::rim_hook_core(p, e) == *p)
                .count();
            assert_eq!(oracle, count, "oracle e={e} n={n}");
            let ours = Partition::all_of_size(n)
                .into_iter()
                .filter(|p| abacus_core::is_e_core(p, e).unwrap())
                .count();
            assert_eq!(ours, count, "e={e} n={n}");
        }
    }
}

#[test]
fn frozen_tableau_counts() {
    let cases: [(&[usize], u128); 6] = [
        (&[3, 2], 5),
        (&[3, 2, 1], 16),
        (&[4, 2, 1], 35),
        (&[3, 3, 2], 42),
        (&[4, 3, 2, 1], 768),
        (&[5, 3, 2], 450),
    ];
    for (p, count) in cases {
        assert_eq!(common::count_syt(p), count, "oracle {p:?}");
        let deg = generic_degree(&lib(p)).unwrap();
        assert_eq!(deg.eval(&BigInt::from(1)), BigInt::from(count));
    }
}
