//! Multivariate power series truncated at a total degree.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::poly::{Monomial, SparsePoly};
use super::rational::Rational;
use crate::error::{Error, Result};

/// A power series in `arity` variables known up to total degree `bound`
/// inclusive. Terms above the bound are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    arity: usize,
    bound: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl TruncSeries {
    pub fn zero(arity: usize, bound: u32) -> Self {
        TruncSeries {
            arity,
            bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize, bound: u32) -> Self {
        Self::from_poly(&SparsePoly::one(arity), bound)
    }

    pub fn from_poly(p: &SparsePoly, bound: u32) -> Self {
        let mut s = TruncSeries::zero(p.arity(), bound);
        for (e, c) in p.terms() {
            s.add_term(e.clone(), c.clone());
        }
        s
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u16]) -> Rational {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Adds `c * x^e`; silently ignored above the truncation bound.
    pub fn add_term(&mut self, e: Monomial, c: Rational) {
        assert_eq!(e.arity(), self.arity, "exponent vector length must equal arity");
        if e.degree() > self.bound || c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
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

    pub fn to_poly(&self) -> SparsePoly {
        SparsePoly::from_terms(
            self.arity,
            self.terms.iter().map(|(e, c)| (e.0.clone(), c.clone())),
        )
    }

    /// Lower the truncation bound.
    pub fn truncate(&self, bound: u32) -> TruncSeries {
        let bound = bound.min(self.bound);
        TruncSeries {
            arity: self.arity,
            bound,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() <= bound)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Optional per-variable cap: drop terms whose exponent of some
    /// variable exceeds `caps[i]`.
    pub fn cap_variables(&self, caps: &[u16]) -> TruncSeries {
        assert_eq!(caps.len(), self.arity);
        TruncSeries {
            arity: self.arity,
            bound: self.bound,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.0.iter().zip(caps).all(|(a, b)| a <= b))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut out = self.truncate(self.bound.min(other.bound));
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        self.add(&other.scale(&Rational::from(-1)))
    }

    pub fn scale(&self, c: &Rational) -> TruncSeries {
        let mut out = TruncSeries::zero(self.arity, self.bound);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    /// Truncated product; the result is known up to the smaller bound.
    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let bound = self.bound.min(other.bound);
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        let rhs: Vec<(&Monomial, u32, &Rational)> = other
            .terms
            .iter()
            .map(|(e, c)| (e, e.degree(), c))
            .collect();
        for (e1, c1) in &self.terms {
            let d1 = e1.degree();
            if d1 > bound {
                continue;
            }
            for &(e2, d2, c2) in &rhs {
                if d1 + d2 <= bound {
                    *acc.entry(e1.mul(e2)).or_insert_with(Rational::zero) += c1 * c2;
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        TruncSeries {
            arity: self.arity,
            bound,
            terms: acc,
        }
    }

    pub fn mul_poly(&self, p: &SparsePoly) -> TruncSeries {
        self.mul(&TruncSeries::from_poly(p, self.bound))
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<TruncSeries> {
        let c0 = self.coeff(&vec![0; self.arity]);
        let inv_c0 = c0
            .recip()
            .map_err(|_| Error::NonExpandable(self.to_poly().to_string()))?;
        let bound = self.bound;
        // homogeneous components of self
        let mut comps: Vec<Vec<(&Monomial, &Rational)>> = vec![Vec::new(); bound as usize + 1];
        for (e, c) in &self.terms {
            comps[e.degree() as usize].push((e, c));
        }
        let mut inv: Vec<BTreeMap<Monomial, Rational>> = vec![BTreeMap::new(); bound as usize + 1];
        inv[0].insert(Monomial::one(self.arity), inv_c0.clone());
        let neg_inv = -&inv_c0;
        for k in 1..=bound as usize {
            let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
            for j in 1..=k {
                for &(fe, fc) in &comps[j] {
                    for (ge, gc) in &inv[k - j] {
                        *acc.entry(fe.mul(ge)).or_insert_with(Rational::zero) += fc * gc;
                    }
                }
            }
            inv[k] = acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e, c * &neg_inv))
                .collect();
        }
        Ok(TruncSeries {
            arity: self.arity,
            bound,
            terms: inv.into_iter().flatten().collect(),
        })
    }

    /// Terms sorted by total degree, then lexicographically by exponents.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.grlex_cmp(b.0));
        v
    }

    /// Golden-file form: one line `e1 e2 ... ek : num/den` per nonzero term.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (e, c) in self.sorted_terms() {
            let exps: Vec<String> = e.0.iter().map(|k| k.to_string()).collect();
            writeln!(out, "{} : {}/{}", exps.join(" "), c.numer(), c.denom()).unwrap();
        }
        out
    }

    /// Parses the golden-file form. The arity is taken from the first line;
    /// an empty input needs `arity` supplied.
    pub fn parse(text: &str, arity: usize, bound: u32) -> Result<TruncSeries> {
        let mut s = TruncSeries::zero(arity, bound);
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::Parse { line: idx + 1, msg };
            let (lhs, rhs) = line
                .split_once(':')
                .ok_or_else(|| err("expected `exponents : coefficient`".into()))?;
            let exps = lhs
                .split_whitespace()
                .map(|t| t.parse::<u16>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| err(e.to_string()))?;
            if exps.len() != arity {
                return Err(err(format!("expected {arity} exponents, found {}", exps.len())));
            }
            let c: Rational = rhs.parse().map_err(|_| err(format!("bad coefficient {rhs:?}")))?;
            s.add_term(Monomial(exps), c);
        }
        Ok(s)
    }
}
