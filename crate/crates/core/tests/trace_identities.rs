use matinv::exactalg::{QMatrix, Rational};
use matinv::tracealg::{eval_at, random_matrices, verify_zero, Evaluated};
use matinv::traceid::{fundamental, ideal_membership, semantic_identity, trace_poly, GroupAlgElem, IdealBasis, Perm};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Rank of all products `a g b` as vectors indexed by permutation rank.
fn brute_force_ideal_dim(n: usize, m: usize) -> usize {
    let g = fundamental(n).embed(m);
    let perms: Vec<Perm> = Perm::all(m).collect();
    let size = perms.len();
    let mut rows = Vec::new();
    for a in &perms {
        let ag = g.left_mul_perm(a);
        for b in &perms {
            let mut row = vec![Rational::zero(); size];
            for (p, c) in ag.right_mul_perm(b).terms() {
                row[p.rank()] = c.clone();
            }
            rows.push(row);
        }
    }
    QMatrix::from_rows(&rows).unwrap().rank()
}

#[test]
fn closure_matches_full_product_span() {
    assert_eq!(brute_force_ideal_dim(2, 3), 1);
    assert_eq!(IdealBasis::compute(2, 3).unwrap().dim(), 1);
    for (n, m) in [(1, 3), (2, 4), (1, 4)] {
        assert_eq!(IdealBasis::compute(n, m).unwrap().dim(), brute_force_ideal_dim(n, m), "J({n},{m})");
    }
}

#[test]
fn ideal_is_two_sided() {
    let j = IdealBasis::compute(2, 4).unwrap();
    for e in j.basis() {
        for i in 1..4 {
            let s = Perm::transposition(4, i, i + 1);
            assert!(j.contains(&e.left_mul_perm(&s)));
            assert!(j.contains(&e.right_mul_perm(&s)));
        }
    }
    // 24 minus the squared dimensions of the irreducibles with at most two rows
    assert_eq!(j.dim(), 24 - 1 - 9 - 4);
}

fn random_ideal_element(g: &GroupAlgElem, m: usize, rng: &mut ChaCha8Rng) -> GroupAlgElem {
    let perms: Vec<Perm> = Perm::all(m).collect();
    let g = g.embed(m);
    let mut e = GroupAlgElem::zero(m);
    for _ in 0..3 {
        let a = &perms[rng.gen_range(0..perms.len())];
        let b = &perms[rng.gen_range(0..perms.len())];
        let c = Rational::from(rng.gen_range(-5i64..=5));
        e = e.add(&g.left_mul_perm(a).right_mul_perm(b).scale(&c));
    }
    e
}

fn random_element(m: usize, rng: &mut ChaCha8Rng) -> GroupAlgElem {
    let perms: Vec<Perm> = Perm::all(m).collect();
    let mut e = GroupAlgElem::zero(m);
    for _ in 0..rng.gen_range(1..=4) {
        let p = perms[rng.gen_range(0..perms.len())].clone();
        e.add_term(p, Rational::from(rng.gen_range(-3i64..=3)));
    }
    e
}

#[test]
fn membership_agrees_with_vanishing() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=2 {
        let g = fundamental(n);
        for m in n..=5 {
            let mut cases = vec![GroupAlgElem::zero(m)];
            for _ in 0..4 {
                let inside = if m > n {
                    random_ideal_element(&g, m, &mut rng)
                } else {
                    GroupAlgElem::zero(m)
                };
                cases.push(inside.clone());
                cases.push(inside.add(&random_element(m, &mut rng)));
                cases.push(random_element(m, &mut rng));
            }
            for e in cases {
                assert_eq!(
                    ideal_membership(&e, n).unwrap(),
                    semantic_identity(&e, n).unwrap(),
                    "n={n} element:\n{}",
                    e.serialize()
                );
            }
        }
    }
}

#[test]
fn fundamental_identity_degrees() {
    assert!(semantic_identity(&fundamental(3), 3).unwrap());
    assert!(semantic_identity(&fundamental(1), 1).unwrap());
    // not an identity one size up: a rational specialization is nonzero
    let value = eval_at(&trace_poly(&fundamental(3)), &random_matrices(4, 4, false, 5, 0), false).unwrap();
    assert!(matches!(value, Evaluated::Scalar(ref v) if !v.is_zero()));
    assert!(!semantic_identity(&fundamental(3), 4).unwrap());
}

#[test]
fn diagonal_substitution_vanishes() {
    // all arguments equal: the Cayley-Hamilton polynomial, up to (n+1)!
    for n in 1..=3 {
        let diag = trace_poly(&fundamental(n)).relabel(|_| 1).unwrap();
        assert!(!diag.is_zero());
        assert!(verify_zero(&diag, n).unwrap(), "n = {n}");
    }
}
