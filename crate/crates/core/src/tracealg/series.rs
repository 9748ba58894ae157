//! Closed-form Hilbert series of small trace algebras.

use crate::exactalg::{Monomial, Rational, RationalFn, SparsePoly};

/// `1/((1-t_1)...(1-t_d))`, the Hilbert series of `C_{1d}`.
pub fn polynomial_ring_hilbert(d: usize) -> RationalFn {
    let exps: Vec<Vec<u16>> = (0..d)
        .map(|i| {
            let mut e = vec![0; d];
            e[i] = 1;
            e
        })
        .collect();
    RationalFn::inverse_product(d, &exps)
}

/// `C_{22}` is free on `tr X1, tr X2, tr X1^2, tr X1X2, tr X2^2`.
pub fn c22_hilbert() -> RationalFn {
    RationalFn::inverse_product(2, &[vec![1, 0], vec![0, 1], vec![2, 0], vec![1, 1], vec![0, 2]])
}

/// Hilbert series of `C_{32}`: numerator `1 + t1^3 t2^3` over the ten
/// factors `1 - t1^a t2^b` for the generator degrees below total degree 6.
pub fn c32_hilbert() -> RationalFn {
    let exps = [
        [1, 0],
        [0, 1],
        [2, 0],
        [1, 1],
        [0, 2],
        [3, 0],
        [2, 1],
        [1, 2],
        [0, 3],
        [2, 2],
    ];
    let exps: Vec<Vec<u16>> = exps.iter().map(|e| e.to_vec()).collect();
    let numerator = &SparsePoly::one(2) + &SparsePoly::monomial(2, Monomial(vec![3, 3]), Rational::one());
    RationalFn::inverse_product(2, &exps).with_numerator(numerator)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::functional_eq_check;

    #[test]
    fn low_degree_coefficients() {
        let s = c32_hilbert().expand(2).unwrap();
        assert_eq!(s.coeff(&[1, 1]), Rational::from(2));
        assert_eq!(s.coeff(&[2, 0]), Rational::from(2));
        assert!(functional_eq_check(&c32_hilbert(), 3, 2));
        assert!(functional_eq_check(&c22_hilbert(), 2, 2));
    }
}
