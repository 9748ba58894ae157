use matinv::exactalg::{rf_expand, QMatrix, Rational, RationalFn, SparsePoly};
use matinv::fingroup::{
    act, express_in_subalgebra, extract_generators, generator_degrees, molien, reflection_check, reynolds,
    reynolds_rank, MatGroup,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_invertible(n: usize, rng: &mut ChaCha8Rng) -> QMatrix {
    loop {
        let mut p = QMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                p.set(i, j, Rational::frac(rng.gen_range(-3..=3), rng.gen_range(1..=3)));
            }
        }
        if !p.det().unwrap().is_zero() {
            return p;
        }
    }
}

#[test]
fn molien_counts_reynolds_images() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut groups = vec![MatGroup::symmetric(3), MatGroup::cyclic(3), MatGroup::trivial(2)];
    for _ in 0..3 {
        let p = random_invertible(3, &mut rng);
        groups.push(MatGroup::symmetric(3).conjugate(&p).unwrap());
        groups.push(MatGroup::cyclic(3).conjugate(&p).unwrap());
    }
    for g in &groups {
        let m = molien(g, 6);
        for k in 0..=6u32 {
            assert_eq!(m.coeff(&[k as u16]), Rational::from(reynolds_rank(g, k)), "degree {k}");
        }
    }
}

fn x(i: usize) -> SparsePoly {
    SparsePoly::var(3, i)
}

fn cubic() -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec((prop::collection::vec(0u16..=2, 3), -3i64..=3), 0..5)
        .prop_map(|t| SparsePoly::from_terms(3, t.into_iter().map(|(e, c)| (e, Rational::from(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn reynolds_projects_onto_invariants(f in cubic(), cyclic in any::<bool>()) {
        let g = if cyclic { MatGroup::cyclic(3) } else { MatGroup::symmetric(3) };
        let r = reynolds(&g, &f);
        prop_assert_eq!(reynolds(&g, &r), r.clone());
        for h in g.elements() {
            prop_assert_eq!(act(h, &r), r.clone());
        }
    }
}

#[test]
fn reflection_groups_have_free_invariant_rings() {
    let q = |rows: &[&[i64]]| QMatrix::from_i64_rows(rows);
    let swap = q(&[&[0, 1], &[1, 0]]);
    let flip = q(&[&[-1, 0], &[0, 1]]);
    let groups = [
        MatGroup::symmetric(2),
        MatGroup::symmetric(3),
        MatGroup::trivial(2),
        MatGroup::generated_by(2, &[flip.clone(), q(&[&[1, 0], &[0, -1]])]),
        MatGroup::generated_by(2, &[swap, flip]),
    ];
    for g in &groups {
        assert!(reflection_check(g).generated_by_reflections);
        let degrees = generator_degrees(&extract_generators(g, None).unwrap());
        assert_eq!(degrees.len(), g.n());
        let exps: Vec<Vec<u16>> = degrees.iter().map(|&d| vec![d as u16]).collect();
        let free = rf_expand(&RationalFn::inverse_product(1, &exps), 12).unwrap();
        assert_eq!(molien(g, 12), free, "degrees {degrees:?}");
    }
    assert_eq!(
        generator_degrees(&extract_generators(&groups[4], None).unwrap()),
        vec![2, 4]
    );
}

#[test]
fn cyclic_invariants_satisfy_quadratic_relation() {
    let g = MatGroup::cyclic(3);
    let gens = extract_generators(&g, None).unwrap();
    assert_eq!(generator_degrees(&gens), vec![1, 2, 3, 3]);
    let all: Vec<SparsePoly> = gens.iter().flat_map(|d| d.generators.clone()).collect();

    let f4 = &(&(&x(0).pow(2) * &x(1)) + &(&x(1).pow(2) * &x(2))) + &(&x(2).pow(2) * &x(0));
    let f4_other = &(&(&x(0) * &x(1).pow(2)) + &(&x(1) * &x(2).pow(2))) + &(&x(2) * &x(0).pow(2));
    assert_eq!(reynolds(&g, &(&x(0).pow(2) * &x(1))).scale(&Rational::from(3)), f4);
    assert!(express_in_subalgebra(&all, &f4).is_some());
    assert!(express_in_subalgebra(&all, &f4_other).is_some());

    let e1 = &(&x(0) + &x(1)) + &x(2);
    let e2 = &(&(&x(0) * &x(1)) + &(&x(0) * &x(2))) + &(&x(1) * &x(2));
    let e3 = &(&x(0) * &x(1)) * &x(2);
    let es = [e1, e2, e3];
    let a = &f4 + &f4_other;
    let b = &f4 * &(&a - &f4);
    assert!(express_in_subalgebra(&es, &a).is_some());
    assert!(express_in_subalgebra(&es, &b).is_some());
    assert!(express_in_subalgebra(&es, &f4).is_none());
    assert!((&(&f4.pow(2) - &(&a * &f4)) + &b).is_zero());
}
