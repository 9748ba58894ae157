use matinv::exactalg::{Matrix, Rational, SparsePoly};
use matinv::tracealg::{
    ads_elements, eval_at, generic_matrices, graded_dim, random_matrices, tr, Evaluated, Evaluator, TraceExpr,
    TraceKind,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn relabeling_preserves_dimension(k in prop::collection::vec(0u32..=2, 3), rot in 0usize..3) {
        let mut moved = k.clone();
        moved.rotate_left(rot);
        prop_assert_eq!(graded_dim(2, &k, TraceKind::Pure), graded_dim(2, &moved, TraceKind::Pure));
    }

    #[test]
    fn dimensions_grow_with_degree(k in prop::collection::vec(0u32..=2, 2), i in 0usize..2) {
        let mut up = k.clone();
        up[i] += 1;
        let pure = graded_dim(2, &k, TraceKind::Pure);
        prop_assert!(pure <= graded_dim(2, &up, TraceKind::Pure));
        prop_assert!(pure <= graded_dim(2, &k, TraceKind::Mixed));
        prop_assert!(graded_dim(2, &k, TraceKind::Mixed) <= graded_dim(2, &up, TraceKind::Mixed));
    }
}

fn identity(n: usize, arity: usize) -> Matrix<SparsePoly> {
    Matrix::identity_like(n, &SparsePoly::zero(arity))
}

/// `tr(X_{w})` rewritten through `X_i = Y_i + tr(X_i)/2 E` with traceless
/// `Y_i`: a sum over subsets of positions kept as `Y`, where the others
/// contribute `tr(X_i)/2`. Terms with a single `Y` vanish.
fn traceless_expansion(w: &[usize], xs: &[Matrix<SparsePoly>]) -> SparsePoly {
    let arity = xs[0].get(0, 0).arity();
    let half = Rational::frac(1, 2);
    let t: Vec<SparsePoly> = xs.iter().map(|x| x.trace()).collect();
    let ys: Vec<Matrix<SparsePoly>> = xs
        .iter()
        .zip(&t)
        .map(|(x, ti)| x.sub(&identity(2, arity).times_scalar(&ti.scale(&half))))
        .collect();
    let mut total = SparsePoly::zero(arity);
    for mask in 0u32..(1 << w.len()) {
        let kept: Vec<usize> = (0..w.len()).filter(|p| mask & (1 << p) != 0).map(|p| w[p]).collect();
        if kept.len() == 1 {
            continue;
        }
        let mut coeff = SparsePoly::one(arity);
        for (p, &i) in w.iter().enumerate() {
            if mask & (1 << p) == 0 {
                coeff = &coeff * &t[i].scale(&half);
            }
        }
        let inner = if kept.is_empty() {
            SparsePoly::constant(arity, Rational::from(2))
        } else {
            kept.iter()
                .fold(identity(2, arity), |acc, &i| acc.mul(&ys[i]))
                .trace()
        };
        total = &total + &(&coeff * &inner);
    }
    total
}

#[test]
fn generators_through_traceless_parts() {
    for d in 2..=3usize {
        let xs = generic_matrices(2, d, false);
        let mut words: Vec<Vec<usize>> = Vec::new();
        for i in 0..d {
            words.push(vec![i]);
            for j in i..d {
                words.push(vec![i, j]);
            }
        }
        if d == 3 {
            words.push(vec![0, 1, 2]);
        }
        for w in words {
            let direct = w.iter().fold(identity(2, 4 * d), |acc, &i| acc.mul(&xs[i])).trace();
            assert_eq!(direct, traceless_expansion(&w, &xs), "word {w:?}");
        }
    }
}

/// `δ^i f = i! [s^i] f(Y1, Y2 + s Y1)`, evaluated exactly in `s`.
fn delta_by_substitution(f: &TraceExpr, i: u32, seed: u64) -> (Rational, Rational) {
    let mats = random_matrices(3, 2, true, seed, 0);
    let lift = |m: &matinv::exactalg::QMatrix| Matrix::from_fn(3, 3, |p, q| SparsePoly::constant(1, m.get(p, q).clone()));
    let s = SparsePoly::var(1, 0);
    let y1 = lift(&mats[0]);
    let shifted = lift(&mats[1]).add(&y1.times_scalar(&s));
    let value = match Evaluator::new(vec![y1, shifted]).unwrap().eval(f).unwrap() {
        Evaluated::Scalar(v) => v,
        Evaluated::Matrix(_) => unreachable!(),
    };
    let fact: u64 = (1..=u64::from(i)).product();
    let oracle = value.coeff(&[i as u16]) * Rational::from(fact);
    let direct = match eval_at(&f.delta_pow(i), &mats, true).unwrap() {
        Evaluated::Scalar(v) => v,
        Evaluated::Matrix(_) => unreachable!(),
    };
    (oracle, direct)
}

#[test]
fn delta_matches_directional_expansion() {
    let samples = [
        tr(&[2, 2]),
        tr(&[2, 2, 2]),
        tr(&[1, 2, 2]).mul(&tr(&[2, 2])),
        ads_elements().w.clone(),
    ];
    for (idx, f) in samples.iter().enumerate() {
        for i in 0..=3 {
            let (oracle, direct) = delta_by_substitution(f, i, idx as u64 + 3);
            assert_eq!(oracle, direct, "element {idx}, power {i}");
        }
    }
}
