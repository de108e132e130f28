use abacus_core::{degree_congruence_sign, e_core, epsilon_sign, Error, Partition};

#[test]
fn plain_congruence_holds_for_empty_cores() {
    for n in 1..=10 {
        for p in Partition::all_of_size(n) {
            for e in 1..=n {
                if e_core(&p, e).unwrap().is_empty() {
                    assert!(epsilon_sign(&p, e).is_ok(), "{p} e={e}");
                }
            }
        }
    }
}

#[test]
fn plain_congruence_failures_all_have_cores() {
    // counted independently with a computer algebra system
    const FAILURES: usize = 547;
    const CASES: usize = 1106;
    let mut failures = 0;
    let mut cases = 0;
    for n in 1..=10 {
        for p in Partition::all_of_size(n) {
            for e in 1..=n {
                cases += 1;
                match epsilon_sign(&p, e) {
                    Ok(_) => {}
                    Err(Error::TheoremViolation { .. }) => {
                        failures += 1;
                        assert!(!e_core(&p, e).unwrap().is_empty(), "{p} e={e}");
                    }
                    Err(other) => panic!("{p} e={e}: {other}"),
                }
            }
        }
    }
    assert_eq!((failures, cases), (FAILURES, CASES));
}

#[test]
fn normalized_congruence_holds() {
    for n in 1..=10 {
        for p in Partition::all_of_size(n) {
            for e in 1..=n {
                let sign = degree_congruence_sign(&p, e);
                assert!(matches!(sign, Ok(1) | Ok(-1)), "{p} e={e}: {sign:?}");
            }
        }
    }
}
