//! Elementary, power-sum and Schur polynomials in `d` variables.

use itertools::Itertools;

use super::partition::Partition;
use crate::exactalg::{Monomial, Rational, SparsePoly};

/// Sign of a permutation of `0..n` given in one-line form.
pub(crate) fn perm_sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `det [x_i^{exps_j}]`.
fn alternant(exps: &[u32], d: usize) -> SparsePoly {
    let mut out = SparsePoly::zero(d);
    for p in (0..d).permutations(d) {
        let mut e = vec![0u16; d];
        for (j, &i) in p.iter().enumerate() {
            e[i] = exps[j] as u16;
        }
        out.add_term(Monomial(e), Rational::from(perm_sign(&p)));
    }
    out
}

/// Schur polynomial as the bialternant quotient `a_{lambda+delta} / a_delta`.
/// Zero when `lambda` has more than `d` parts.
pub fn schur_poly(lambda: &Partition, d: usize) -> SparsePoly {
    if lambda.len() > d {
        return SparsePoly::zero(d);
    }
    if d == 0 {
        return SparsePoly::one(0);
    }
    let delta: Vec<u32> = (0..d as u32).rev().collect();
    let shifted: Vec<u32> = (0..d).map(|i| lambda.part(i) + delta[i]).collect();
    alternant(&shifted, d)
        .div_exact(&alternant(&delta, d))
        .expect("alternant quotient is exact")
}

pub fn elementary(k: usize, d: usize) -> SparsePoly {
    if k > d {
        return SparsePoly::zero(d);
    }
    SparsePoly::from_terms(
        d,
        (0..d).combinations(k).map(|c| {
            let mut e = vec![0u16; d];
            for i in c {
                e[i] = 1;
            }
            (e, Rational::one())
        }),
    )
}

pub fn power_sum(k: u16, d: usize) -> SparsePoly {
    SparsePoly::from_terms(
        d,
        (0..d).map(|i| {
            let mut e = vec![0u16; d];
            e[i] = k;
            (e, Rational::one())
        }),
    )
}

/// `e_k` as a polynomial in `p_1, ..., p_k` (variable `i` stands for
/// `p_{i+1}`), from `k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i`.
pub fn newton_e_from_p(k: usize) -> SparsePoly {
    assert!(k >= 1, "degree must be positive");
    let mut e = vec![SparsePoly::one(k)];
    for j in 1..=k {
        let mut acc = SparsePoly::zero(k);
        for i in 1..=j {
            let term = &e[j - i] * &SparsePoly::var(k, i - 1);
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        e.push(acc.scale(&Rational::frac(1, j as i64)));
    }
    e.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_poly(&part(&[1]), 3), elementary(1, 3));
        let s21 = SparsePoly::from_terms(
            2,
            vec![(vec![2, 1], Rational::one()), (vec![1, 2], Rational::one())],
        );
        assert_eq!(schur_poly(&part(&[2, 1]), 2), s21);
        assert!(schur_poly(&part(&[1, 1, 1]), 2).is_zero());
        assert_eq!(schur_poly(&Partition::empty(), 2), SparsePoly::one(2));
        assert_eq!(schur_poly(&part(&[1, 1]), 3), elementary(2, 3));
    }

    #[test]
    fn newton_small_degrees() {
        let p = |i| SparsePoly::var(3, i);
        assert_eq!(newton_e_from_p(1), SparsePoly::var(1, 0));
        let e2 = (&p(0).pow(2) - &p(1)).scale(&Rational::frac(1, 2));
        assert_eq!(newton_e_from_p(2), SparsePoly::from_terms(2, e2.terms().map(|(e, c)| (e.0[..2].to_vec(), c.clone()))));
        let e3 = &(&p(0).pow(3) - &(&p(0) * &p(1)).scale(&Rational::from(3))) + &p(2).scale(&Rational::from(2));
        assert_eq!(newton_e_from_p(3), e3.scale(&Rational::frac(1, 6)));
    }
}
