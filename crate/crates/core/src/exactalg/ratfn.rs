//! Rational functions kept in the factored form `N / (F1 F2 ... Fr)`, where
//! every factor has a nonzero constant term so the quotient is a power series.

use std::fmt;

use super::poly::{Monomial, SparsePoly};
use super::rational::Rational;
use super::series::TruncSeries;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct RationalFn {
    numerator: SparsePoly,
    factors: Vec<SparsePoly>,
}

impl RationalFn {
    pub fn new(numerator: SparsePoly, factors: Vec<SparsePoly>) -> Self {
        for f in &factors {
            assert_eq!(f.arity(), numerator.arity(), "factor arity mismatch");
        }
        RationalFn { numerator, factors }
    }

    /// `1 / prod (1 - x^e)` over the given exponent vectors.
    pub fn inverse_product(arity: usize, exps: &[Vec<u16>]) -> Self {
        RationalFn::new(
            SparsePoly::one(arity),
            exps.iter().map(|e| one_minus(arity, e)).collect(),
        )
    }

    pub fn arity(&self) -> usize {
        self.numerator.arity()
    }

    pub fn numerator(&self) -> &SparsePoly {
        &self.numerator
    }

    pub fn factors(&self) -> &[SparsePoly] {
        &self.factors
    }

    pub fn scale(&self, c: &Rational) -> RationalFn {
        RationalFn::new(self.numerator.scale(c), self.factors.clone())
    }

    pub fn with_numerator(&self, numerator: SparsePoly) -> RationalFn {
        RationalFn::new(numerator, self.factors.clone())
    }

    /// Taylor expansion truncated at total degree `bound`.
    pub fn expand(&self, bound: u32) -> Result<TruncSeries> {
        let mut acc = TruncSeries::from_poly(&self.numerator, bound);
        for f in &self.factors {
            acc = acc.mul(&invert_factor(f, bound)?);
        }
        Ok(acc)
    }

    /// The product of all denominator factors.
    pub fn denominator(&self) -> SparsePoly {
        self.factors
            .iter()
            .fold(SparsePoly::one(self.arity()), |acc, f| &acc * f)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = |i: usize| format!("t{}", i + 1);
        write!(f, "({})", self.numerator.display_with(&names))?;
        if !self.factors.is_empty() {
            write!(f, " / ")?;
            for fac in &self.factors {
                write!(f, "({})", fac.display_with(&names))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `1 - x^e`.
pub fn one_minus(arity: usize, e: &[u16]) -> SparsePoly {
    &SparsePoly::one(arity) - &SparsePoly::monomial(arity, Monomial(e.to_vec()), Rational::one())
}

fn invert_factor(f: &SparsePoly, bound: u32) -> Result<TruncSeries> {
    let c0 = f.constant_term();
    if c0.is_zero() {
        return Err(Error::NonExpandable(f.to_string()));
    }
    // c0 + c*m: geometric series in -(c/c0) m
    if f.len() == 2 {
        let (m, c) = f
            .terms()
            .find(|(e, _)| e.degree() > 0)
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();
        let inv_c0 = c0.recip()?;
        let ratio = -(&c * &inv_c0);
        let step = m.degree();
        let mut out = TruncSeries::zero(f.arity(), bound);
        let mut mono = Monomial::one(f.arity());
        let mut coeff = inv_c0;
        let mut deg = 0;
        while deg <= bound {
            out.add_term(mono.clone(), coeff.clone());
            mono = mono.mul(&m);
            coeff = &coeff * &ratio;
            deg += step;
        }
        return Ok(out);
    }
    TruncSeries::from_poly(f, bound).inverse()
}

/// Taylor expansion of `f` to total degree `bound`.
pub fn rf_expand(f: &RationalFn, bound: u32) -> Result<TruncSeries> {
    f.expand(bound)
}

/// Expand a sum of rational functions.
pub fn expand_sum(terms: &[RationalFn], bound: u32) -> Result<TruncSeries> {
    let arity = terms.first().map_or(1, RationalFn::arity);
    let mut acc = TruncSeries::zero(arity, bound);
    for t in terms {
        acc = acc.add(&t.expand(bound)?);
    }
    Ok(acc)
}

/// `t^e * P(1/t)` with `e` the vector of maximal exponents of `P`, so the
/// result is again a polynomial.
fn reversal(p: &SparsePoly) -> (SparsePoly, Vec<u16>) {
    let top = p.max_exponents();
    let rev = SparsePoly::from_terms(
        p.arity(),
        p.terms().map(|(e, c)| {
            (
                e.0.iter().zip(&top).map(|(a, m)| m - a).collect(),
                c.clone(),
            )
        }),
    );
    (rev, top)
}

/// Decides whether `H(1/t1, ..., 1/td) = (-1)^k (t1...td)^(n^2) H(t1, ..., td)`
/// with `k = (d-1) n^2 + 1`, exactly, by clearing denominators.
pub fn functional_eq_check(h: &RationalFn, n: u32, d: usize) -> bool {
    if h.arity() != d {
        return false;
    }
    let k = (d as u32 - 1) * n * n + 1;
    let sign = if k.is_multiple_of(2) {
        Rational::one()
    } else {
        Rational::from(-1)
    };
    let (num_rev, num_top) = reversal(h.numerator());
    let mut lhs_shift = vec![0u16; d];
    let mut fac_rev = SparsePoly::one(d);
    for f in h.factors() {
        let (r, top) = reversal(f);
        fac_rev = &fac_rev * &r;
        for (s, t) in lhs_shift.iter_mut().zip(&top) {
            *s += t;
        }
    }
    let rhs_shift: Vec<u16> = num_top.iter().map(|a| a + (n * n) as u16).collect();
    // N^rev * t^(sum of factor tops) * prod F  ==  s * t^(n^2 + top N) * N * prod F^rev
    let lhs = (&num_rev * &h.denominator()).mul_monomial(&Monomial(lhs_shift), &Rational::one());
    let rhs = (h.numerator() * &fac_rev).mul_monomial(&Monomial(rhs_shift), &sign);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs_1d(s: &TruncSeries, bound: u16) -> Vec<Rational> {
        (0..=bound).map(|k| s.coeff(&[k])).collect()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn geometric_series() {
        let f = RationalFn::inverse_product(1, &[vec![1]]);
        assert_eq!(coeffs_1d(&rf_expand(&f, 4).unwrap(), 4), ints(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn zero_constant_factor_rejected() {
        let f = RationalFn::new(SparsePoly::one(1), vec![SparsePoly::var(1, 0)]);
        assert!(matches!(rf_expand(&f, 3), Err(Error::NonExpandable(_))));
    }

    #[test]
    fn general_factor_uses_series_inversion() {
        // 1/(1 - t - t^2): Fibonacci numbers
        let t = SparsePoly::var(1, 0);
        let fac = &(&SparsePoly::one(1) - &t) - &t.pow(2);
        let f = RationalFn::new(SparsePoly::one(1), vec![fac]);
        assert_eq!(
            coeffs_1d(&rf_expand(&f, 7).unwrap(), 7),
            ints(&[1, 1, 2, 3, 5, 8, 13, 21])
        );
    }

    #[test]
    fn functional_equation_negative_controls() {
        // 1/(1 - t1 t2) satisfies H(1/t) = -(t1 t2) H(t), not +(t1 t2) H(t)
        let f = RationalFn::inverse_product(2, &[vec![1, 1]]);
        assert!(!functional_eq_check(&f, 1, 2));
        let one = RationalFn::new(SparsePoly::one(2), vec![]);
        assert!(!functional_eq_check(&one, 2, 2));
        assert!(!functional_eq_check(&one, 1, 3));
    }

    #[test]
    fn functional_equation_positive_control() {
        // 1/((1-t1)(1-t2)): H(1/t) = (t1 t2) H(t); n = 1, d = 2 gives k = 2, sign +
        // but exponent n^2 = 1 matches: (t1 t2)^1.
        let f = RationalFn::inverse_product(2, &[vec![1, 0], vec![0, 1]]);
        assert!(functional_eq_check(&f, 1, 2));
    }
}
