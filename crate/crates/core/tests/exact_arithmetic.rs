use matinv::exactalg::{
    integer_row, one_minus, rf_expand, Monomial, QMatrix, Rational, RationalFn, SparseEchelon, SparsePoly,
    TruncSeries,
};
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

fn to_q(rows: &[Vec<i64>]) -> QMatrix {
    let rows: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| Rational::from(x)).collect()).collect();
    QMatrix::from_rows(&rows).unwrap()
}

fn series(arity: usize, bound: u32) -> impl Strategy<Value = TruncSeries> {
    prop::collection::vec((prop::collection::vec(0u16..=2, arity), -4i64..=4), 0..6).prop_map(move |terms| {
        let mut s = TruncSeries::zero(arity, bound);
        for (e, c) in terms {
            s.add_term(Monomial(e), Rational::from(c));
        }
        s
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_ignores_row_order_and_scaling(rows in small_matrix(), shift in 0usize..6, k in 1i64..5) {
        let base = to_q(&rows).rank();
        let mut moved = rows.clone();
        let len = moved.len();
        moved.rotate_left(shift % len);
        for x in moved[0].iter_mut() {
            *x *= -k;
        }
        prop_assert_eq!(to_q(&moved).rank(), base);
    }

    #[test]
    fn elimination_routes_agree(rows in small_matrix()) {
        let q = to_q(&rows);
        let (reduced, pivots) = q.rref();
        prop_assert_eq!(q.rank(), pivots.len());
        prop_assert_eq!(reduced.rank(), pivots.len());
        let mut ech = SparseEchelon::new();
        for r in &rows {
            ech.insert_rational(r.iter().enumerate().map(|(j, &x)| (j, Rational::from(x))));
        }
        prop_assert_eq!(ech.rank(), pivots.len());
        prop_assert_eq!(q.nullspace().len(), q.cols() - pivots.len());
    }

    #[test]
    fn echelon_membership_matches_rank(rows in small_matrix(), coeffs in prop::collection::vec(-2i64..=2, 5)) {
        let mut ech = SparseEchelon::new();
        for r in &rows {
            ech.insert(integer_row(r.iter().enumerate().map(|(j, &x)| (j, Rational::from(x)))));
        }
        let cols = rows[0].len();
        let combo: Vec<(usize, Rational)> = (0..cols)
            .map(|j| (j, rows.iter().zip(&coeffs).map(|(r, &c)| Rational::from(r[j] * c)).sum()))
            .collect();
        prop_assert!(ech.contains_rational(combo));
    }

    #[test]
    fn series_ring_laws(a in series(2, 5), b in series(2, 5), c in series(2, 5)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        let unit = a.add(&TruncSeries::one(2, 5).scale(&Rational::from(7)));
        prop_assert_eq!(unit.mul(&unit.inverse().unwrap()), TruncSeries::one(2, 5));
    }

    #[test]
    fn expansion_times_denominator_is_numerator(
        exps in prop::collection::vec(prop::collection::vec(0u16..=2, 2), 1..4),
        num in prop::collection::vec((prop::collection::vec(0u16..=3, 2), -3i64..=3), 0..4),
    ) {
        let exps: Vec<Vec<u16>> = exps.into_iter().filter(|e| e.iter().any(|&x| x > 0)).collect();
        let numerator = SparsePoly::from_terms(2, num.into_iter().map(|(e, c)| (e, Rational::from(c))));
        let f = RationalFn::inverse_product(2, &exps).with_numerator(numerator.clone());
        let bound = 7;
        let mut back = rf_expand(&f, bound).unwrap();
        for e in &exps {
            back = back.mul_poly(&one_minus(2, e));
        }
        prop_assert_eq!(back, TruncSeries::from_poly(&numerator, bound));
    }
}

/// Partitions of `k` into parts from `parts`, by direct recursion.
fn count_partitions(k: u32, parts: &[u32]) -> u64 {
    match parts.split_first() {
        None => u64::from(k == 0),
        Some((&p, rest)) => (0..=k / p).map(|j| count_partitions(k - j * p, rest)).sum(),
    }
}

#[test]
fn generating_functions_of_partitions() {
    let exps = vec![vec![1], vec![2], vec![3]];
    let f = RationalFn::inverse_product(1, &exps);
    let s = rf_expand(&f, 6).unwrap();
    let coeffs: Vec<Rational> = (0..=6).map(|k| s.coeff(&[k])).collect();
    let oracle: Vec<Rational> = (0..=6).map(|k| Rational::from(count_partitions(k as u32, &[1, 2, 3]))).collect();
    assert_eq!(coeffs, oracle);
    assert_eq!(oracle, [1, 1, 2, 3, 4, 5, 7].map(Rational::from));

    let g = f.with_numerator(&SparsePoly::one(1) + &SparsePoly::var(1, 0).pow(3));
    let s = rf_expand(&g, 6).unwrap();
    let convolved: Vec<Rational> = (0..=6u32)
        .map(|k| {
            let shifted = if k >= 3 { count_partitions(k - 3, &[1, 2, 3]) } else { 0 };
            Rational::from(count_partitions(k, &[1, 2, 3]) + shifted)
        })
        .collect();
    assert_eq!((0..=6).map(|k| s.coeff(&[k])).collect::<Vec<_>>(), convolved);
    assert_eq!(convolved, [1, 1, 2, 4, 5, 7, 10].map(Rational::from));
}
