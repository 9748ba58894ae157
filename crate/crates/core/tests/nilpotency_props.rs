use matinv::exactalg::Rational;
use matinv::nilpotency::{bounds, is_consequence, minimal_nilpotency, nh_membership, MultilinearElem};
use matinv::traceid::Perm;
use proptest::prelude::*;

fn perm_strategy(m: usize) -> impl Strategy<Value = Perm> {
    Just((1..=m as u8).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Perm::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn membership_is_monotone(big_n in 1usize..6) {
        if nh_membership(2, big_n).unwrap() {
            prop_assert!(nh_membership(2, big_n + 1).unwrap());
        }
    }

    #[test]
    fn membership_ignores_labels(p in perm_strategy(5), n in 2usize..=3) {
        let relabeled = MultilinearElem::monomial(Perm::identity(5)).relabel(&p);
        prop_assert_eq!(is_consequence(&relabeled, n).unwrap(), nh_membership(n, 5).unwrap());
    }

    #[test]
    fn linearization_consequences_survive_relabeling(p in perm_strategy(4)) {
        // x1 L(x2, x3, x4) is a consequence of x^3 = 0; dropping a term is not
        let mut e = MultilinearElem::zero(4);
        for s in Perm::all(3) {
            let mut w = vec![1];
            w.extend(s.images().iter().map(|&i| i + 1));
            e.add_term(Perm::new(w).unwrap(), Rational::one());
        }
        prop_assert!(is_consequence(&e.relabel(&p), 3).unwrap());
        e.add_term(Perm::identity(4), Rational::from(-1));
        prop_assert!(!is_consequence(&e.relabel(&p), 3).unwrap());
    }
}

#[test]
fn minimal_degrees_match_known_values() {
    for n in 1..=3 {
        let exact = bounds(n).exact.unwrap();
        assert_eq!(minimal_nilpotency(n, exact).unwrap(), Some(exact), "n = {n}");
    }
}
