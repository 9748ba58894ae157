//! Sparse multivariate polynomials over the rationals.
//!
//! A polynomial has a fixed number of variables (its arity) and stores only
//! nonzero coefficients, keyed by exponent vectors of length = arity.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::Rational;

/// An exponent vector. Ordered lexicographically; see [`Monomial::grlex_cmp`]
/// for the graded order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn var(arity: usize, i: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    arity: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl SparsePoly {
    pub fn zero(arity: usize) -> Self {
        SparsePoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        Self::monomial(arity, Monomial::one(arity), c)
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    /// The variable with index `i` (0-based).
    pub fn var(arity: usize, i: usize) -> Self {
        assert!(i < arity, "variable index {i} out of range for arity {arity}");
        Self::monomial(arity, Monomial::var(arity, i), Rational::one())
    }

    pub fn monomial(arity: usize, exps: Monomial, c: Rational) -> Self {
        assert_eq!(exps.arity(), arity, "exponent vector length must equal arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        SparsePoly { arity, terms }
    }

    /// Builds a polynomial from (exponents, coefficient) pairs, merging
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I>(arity: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u16>, Rational)>,
    {
        let mut p = SparsePoly::zero(arity);
        for (e, c) in terms {
            assert_eq!(e.len(), arity, "exponent vector length must equal arity");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Rational)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, exps: &[u16]) -> Rational {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one(self.arity))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Highest total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Largest exponent of each variable.
    pub fn max_exponents(&self) -> Vec<u16> {
        let mut m = vec![0u16; self.arity];
        for e in self.terms.keys() {
            for (mi, &ei) in m.iter_mut().zip(&e.0) {
                *mi = (*mi).max(ei);
            }
        }
        m
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, exps: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(self.arity);
        }
        SparsePoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.clone(), a * c))
                .collect(),
        }
    }

    /// Multiply by a monomial `c * x^e`.
    pub fn mul_monomial(&self, e: &Monomial, c: &Rational) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(self.arity);
        }
        SparsePoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(f, a)| (f.mul(e), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> SparsePoly {
        let mut acc = SparsePoly::one(self.arity);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Keep terms of total degree at most `bound`.
    pub fn truncate(&self, bound: u32) -> SparsePoly {
        SparsePoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() <= bound)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Homogeneous component of total degree `k`.
    pub fn homogeneous_part(&self, k: u32) -> SparsePoly {
        SparsePoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() == k)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.arity);
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(&e.0) {
                if k > 0 {
                    t *= &x.pow(k as u32);
                }
            }
            total += t;
        }
        total
    }

    /// Substitute `images[i]` for variable `i`. All images must share one
    /// arity, which becomes the arity of the result.
    pub fn substitute(&self, images: &[SparsePoly]) -> SparsePoly {
        assert_eq!(images.len(), self.arity);
        let target = images.first().map_or(0, |p| p.arity);
        let mut powers: Vec<Vec<SparsePoly>> = images
            .iter()
            .map(|p| vec![SparsePoly::one(p.arity)])
            .collect();
        let mut out = SparsePoly::zero(target);
        for (e, c) in &self.terms {
            let mut t = SparsePoly::constant(target, c.clone());
            for (i, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][k as usize];
            }
            out = &out + &t;
        }
        out
    }

    pub fn derivative(&self, var: usize) -> SparsePoly {
        let mut out = SparsePoly::zero(self.arity);
        for (e, c) in &self.terms {
            let k = e.0[var];
            if k == 0 {
                continue;
            }
            let mut f = e.clone();
            f.0[var] -= 1;
            out.add_term(f, c * &Rational::from(k as i64));
        }
        out
    }

    /// Exact division. Returns `None` unless `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &SparsePoly) -> Option<SparsePoly> {
        assert_eq!(self.arity, divisor.arity);
        let (lead_e, lead_c) = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quot = SparsePoly::zero(self.arity);
        while let Some((e, c)) = rem.leading_term() {
            let qe = e.div(lead_e)?;
            let qc = c / lead_c;
            rem = &rem - &divisor.mul_monomial(&qe, &qc);
            quot.add_term(qe, qc);
        }
        Some(quot)
    }

    /// Apply a permutation of variables: variable `i` becomes `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> SparsePoly {
        let mut out = SparsePoly::zero(self.arity);
        for (e, c) in &self.terms {
            let mut f = vec![0u16; self.arity];
            for (i, &k) in e.0.iter().enumerate() {
                f[perm[i]] = k;
            }
            out.add_term(Monomial(f), c.clone());
        }
        out
    }

    pub fn display_with(&self, names: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        names(i)
                    } else {
                        format!("{}^{}", names(i), k)
                    }
                })
                .collect();
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => out.push_str(&abs.to_string()),
                (false, true) => out.push_str(&mono.join("*")),
                (false, false) => {
                    out.push_str(&abs.to_string());
                    out.push('*');
                    out.push_str(&mono.join("*"));
                }
            }
        }
        out
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&|i| format!("x{}", i + 1)))
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &'a SparsePoly) -> SparsePoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &'a SparsePoly) -> SparsePoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &'a SparsePoly) -> SparsePoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let (small, large) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = SparsePoly::zero(self.arity);
        for (e1, c1) in &small.terms {
            for (e2, c2) in &large.terms {
                out.add_term(e1.mul(e2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Add for SparsePoly {
    type Output = SparsePoly;
    fn add(mut self, rhs: SparsePoly) -> SparsePoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for SparsePoly {
    type Output = SparsePoly;
    fn sub(mut self, rhs: SparsePoly) -> SparsePoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        for (e, c) in rhs.terms {
            self.add_term(e, -c);
        }
        self
    }
}

impl Mul for SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: SparsePoly) -> SparsePoly {
        &self * &rhs
    }
}

impl Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> SparsePoly {
        SparsePoly::var(3, i)
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let p = &x(0) - &x(0);
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn product_and_division() {
        let a = &x(0) + &x(1);
        let b = &x(0) - &x(2);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a));
        assert_eq!(x(0).div_exact(&x(1)), None);
    }

    #[test]
    fn substitution_and_eval() {
        // (x1 + x2)^2 with x1 -> x2, x2 -> x3
        let p = (&x(0) + &x(1)).pow(2);
        let q = p.substitute(&[x(1), x(2), x(0)]);
        assert_eq!(q, (&x(1) + &x(2)).pow(2));
        let pt = [Rational::from(1), Rational::from(2), Rational::from(3)];
        assert_eq!(p.eval(&pt), Rational::from(9));
    }

    #[test]
    fn derivative_rule() {
        let p = x(0).pow(3).mul_monomial(&Monomial(vec![0, 1, 0]), &Rational::from(2));
        assert_eq!(
            p.derivative(0),
            x(0).pow(2).mul_monomial(&Monomial(vec![0, 1, 0]), &Rational::from(6))
        );
    }

    #[test]
    fn display_is_readable() {
        let p = &x(0).pow(2) - &x(1).scale(&Rational::frac(1, 2));
        assert_eq!(p.to_string(), "x1^2 - 1/2*x2");
    }
}
