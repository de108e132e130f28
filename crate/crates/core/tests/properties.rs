use abacus_core::{
    check_content_lemma, check_square, check_uglov_diagram, content_window, cyclotomic, e_core,
    e_quotient_charged, ennola_e, from_beta, generic_degree, hc_pairs, hook_lengths, is_e_core,
    join_beta, phi_multiplicity, qr_em, qr_em_inv, residue_mod, residue_multiset, same_block,
    singular_check, specialization, split_beta, to_beta, uglov, upsilon, upsilon_inv,
    ChargedMultiPartition, ChargedPartition, IntPolynomial, MultiCharge, MultiPartition, Partition,
    Variant,
};
use num_integer::Integer;
use proptest::prelude::*;

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let all = Partition::all_of_size(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn charged_multipartition(e: usize, max: usize) -> impl Strategy<Value = ChargedMultiPartition> {
    (
        proptest::collection::vec(partition(max / e.max(1)), e),
        proptest::collection::vec(-5i64..=5, e),
    )
        .prop_map(|(comps, charges)| {
            ChargedMultiPartition::new(MultiPartition::new(comps).unwrap(), MultiCharge(charges))
                .unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn beta_round_trip(p in partition(12), s in -6i64..=6) {
        let cp = ChargedPartition::new(p, s);
        let beta = to_beta(&cp);
        prop_assert_eq!(beta.charge(), s);
        prop_assert_eq!(from_beta(&beta), cp);
    }

    #[test]
    fn abacus_factorization(p in partition(12), s in -6i64..=6, e in 1usize..=6) {
        let beta = to_beta(&ChargedPartition::new(p, s));
        let parts = split_beta(&beta, e).unwrap();
        prop_assert_eq!(parts.iter().map(|b| b.charge()).sum::<i64>(), beta.charge());
        prop_assert_eq!(join_beta(&parts).unwrap(), beta);
    }

    #[test]
    fn core_quotient_round_trip(p in partition(12), s in -6i64..=6, e in 1usize..=6) {
        let cp = ChargedPartition::new(p, s);
        prop_assert_eq!(upsilon_inv(&upsilon(&cp, e).unwrap()), cp);
    }

    #[test]
    fn size_law(p in partition(12), s in -6i64..=6, e in 1usize..=6) {
        let core = e_core(&p, e).unwrap();
        let q = e_quotient_charged(&p, e, s).unwrap();
        prop_assert_eq!(p.size(), core.size() + e * q.multipartition().size());
    }

    #[test]
    fn core_criterion_three_ways(p in partition(12), s in -6i64..=6, e in 1usize..=6) {
        let by_hooks = hook_lengths(&p).iter().all(|h| h % e != 0);
        let by_quotient = e_quotient_charged(&p, e, s).unwrap().multipartition().is_empty();
        prop_assert_eq!(is_e_core(&p, e).unwrap(), by_hooks);
        prop_assert_eq!(by_hooks, by_quotient);
    }

    #[test]
    fn core_idempotent(p in partition(12), e in 1usize..=6) {
        let core = e_core(&p, e).unwrap();
        prop_assert_eq!(e_core(&core, e).unwrap(), core);
    }

    #[test]
    fn quotient_sizes_independent_of_charge(p in partition(12), e in 1usize..=6) {
        let sizes = |s: i64| {
            let mut v: Vec<usize> = upsilon(&ChargedPartition::new(p.clone(), s), e)
                .unwrap()
                .multipartition()
                .components()
                .iter()
                .map(Partition::size)
                .collect();
            v.sort_unstable();
            v
        };
        let base = sizes(0);
        for s in -6..=6 {
            prop_assert_eq!(sizes(s), base.clone());
        }
    }

    #[test]
    fn index_bijection(x in -50i64..=50, e in 1usize..=8, m in 1usize..=8, y in 0usize..8) {
        let y = y % e;
        let (q, r) = qr_em(x, y, e, m).unwrap();
        prop_assert_eq!(qr_em_inv(q, r, e, m).unwrap(), (x, y));
        prop_assert_eq!(e as i64 * x + m as i64 * y as i64, m as i64 * q + e as i64 * r as i64);
    }

    #[test]
    fn level_rank_round_trip(
        (e, cmp) in (1usize..=5).prop_flat_map(|e| (Just(e), charged_multipartition(e, 10))),
        m in 1usize..=5,
    ) {
        let there = uglov(&cmp, m).unwrap();
        prop_assert_eq!(there.multicharge().total(), cmp.multicharge().total());
        prop_assert_eq!(uglov(&there, e).unwrap(), cmp);
    }

    #[test]
    fn uglov_diagram(p in partition(8), e in 1usize..=6, m in 1usize..=6, s in -4i64..=4, t in -4i64..=4) {
        prop_assume!(e.gcd(&m) == 1);
        prop_assert!(check_uglov_diagram(&p, e, m, s, t).unwrap());
    }

    #[test]
    fn content_lemma(p in partition(10), s in -4i64..=4, e in 1usize..=5) {
        prop_assert!(check_content_lemma(&p, s, e, content_window(&p, s, e)).unwrap());
    }

    #[test]
    fn same_block_is_symmetric(
        (e, core, p, r) in (1usize..=4, 0usize..=8).prop_flat_map(|(e, n)| {
            let all = Partition::all_of_size(n);
            let k = all.len();
            (Just(e), Just(all), 0..k, 0..k)
        }).prop_filter_map("same core", |(e, all, i, j)| {
            let c = e_core(&all[i], e).unwrap();
            (e_core(&all[j], e).unwrap() == c).then(|| (e, c, all[i].clone(), all[j].clone()))
        }),
        m in 1usize..=6,
    ) {
        prop_assert!(same_block(&p, &p, e, m, &core).unwrap());
        prop_assert_eq!(
            same_block(&p, &r, e, m, &core).unwrap(),
            same_block(&r, &p, e, m, &core).unwrap()
        );
    }

    #[test]
    fn uniform_shift_keeps_blocks(e in 1usize..=3, a in 0usize..=4, m in 1usize..=6, c in -3i64..=3) {
        let mps = MultiPartition::all_of_size(e, a);
        let charges: Vec<i64> = (0..e as i64).map(|j| (j * 7) % 5 - 2).collect();
        let key = |mp: &MultiPartition, shift: i64| {
            let shifted = charges.iter().map(|x| x + shift).collect();
            let cmp = ChargedMultiPartition::new(mp.clone(), MultiCharge(shifted)).unwrap();
            residue_mod(&residue_multiset(&cmp, e).unwrap(), m).unwrap()
        };
        for x in &mps {
            for y in &mps {
                prop_assert_eq!(key(x, 0) == key(y, 0), key(x, c) == key(y, c));
            }
        }
    }
}

#[test]
fn square_commutes_on_windows() {
    for e in 1..=6usize {
        for m in 1..=6usize {
            if e.gcd(&m) != 1 {
                continue;
            }
            for s in -6..=6 {
                for t in -6..=6 {
                    for x in -30..=30 {
                        assert!(
                            check_square(x, e, m, s, t).unwrap(),
                            "x={x} e={e} m={m} s={s} t={t}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn coprime_index_uniqueness() {
    for e in 1..=8usize {
        for m in 1..=8usize {
            if e.gcd(&m) != 1 {
                continue;
            }
            for a in -12i64..=12 {
                for b in 0..e {
                    for c in -12i64..=12 {
                        for d in 0..m {
                            let lhs = e as i64 * a + m as i64 * b as i64;
                            if lhs == m as i64 * c + e as i64 * d as i64 {
                                assert_eq!(qr_em(a, b, e, m).unwrap(), (c, d));
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn cyclotomic_products() {
    for n in 1..=30usize {
        let prod: IntPolynomial = (1..=n)
            .filter(|d| n % d == 0)
            .map(|d| cyclotomic(d).unwrap())
            .product();
        assert_eq!(prod, IntPolynomial::x_pow_minus_one(n), "n={n}");
    }
}

#[test]
fn ennola_duality() {
    for e in 1..=24usize {
        let dual = ennola_e(e).unwrap();
        assert_eq!(ennola_e(dual).unwrap(), e);
        let twisted = cyclotomic(e).unwrap().substitute_neg_x();
        let sign = if e <= 2 { -1 } else { 1 };
        assert_eq!(
            twisted,
            &IntPolynomial::constant(sign) * &cyclotomic(dual).unwrap(),
            "e={e}"
        );
    }
}

#[test]
fn multiplicity_counts_divisible_hooks() {
    for n in 1..=10 {
        for p in Partition::all_of_size(n) {
            let deg = generic_degree(&p).unwrap();
            for e in 1..=n {
                let divisible = hook_lengths(&p).iter().filter(|&&h| h % e == 0).count();
                assert_eq!(
                    phi_multiplicity(&deg, e).unwrap(),
                    n / e - divisible,
                    "{p} e={e}"
                );
                assert_eq!(singular_check(&p, e).unwrap(), is_e_core(&p, e).unwrap());
            }
        }
    }
}

#[test]
fn cuspidal_singletons() {
    for n in 1..=10 {
        for e in 1..=10 {
            for pair in hc_pairs(n, e).unwrap() {
                if pair.a == 0 {
                    assert!(is_e_core(&pair.core, e).unwrap());
                    assert!(singular_check(&pair.core, e).unwrap());
                }
            }
            for p in Partition::all_of_size(n) {
                let cuspidal = hc_pairs(n, e)
                    .unwrap()
                    .iter()
                    .any(|pair| pair.a == 0 && pair.core == p);
                assert_eq!(cuspidal, is_e_core(&p, e).unwrap());
            }
        }
    }
}

#[test]
fn gu_mirrors_gl() {
    for n in 1..=10 {
        for e in 1..=5 {
            for pair in hc_pairs(n, e).unwrap().into_iter().filter(|p| p.a > 0) {
                let gl = specialization(&pair, Variant::GL).unwrap();
                let gu = specialization(&pair, Variant::GU).unwrap();
                assert_eq!(gl.substitute_neg_x(), gu);
            }
        }
    }
}
