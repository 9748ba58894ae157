//! The group algebra `QS_m` and the associated trace functions.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::perm::Perm;
use crate::error::{Error, Result};
use crate::exactalg::Rational;
use crate::tracealg::{TraceExpr, TraceMonomial, TraceWord};

/// `Σ α_σ σ` with all `σ` in `S_m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgElem {
    m: usize,
    terms: BTreeMap<Perm, Rational>,
}

impl GroupAlgElem {
    pub fn zero(m: usize) -> Self {
        GroupAlgElem {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_perm(p: Perm) -> Self {
        let mut e = Self::zero(p.degree());
        e.add_term(p, Rational::one());
        e
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn add_term(&mut self, p: Perm, c: Rational) {
        assert_eq!(p.degree(), self.m, "permutation of the wrong degree");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(p.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &Perm) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &GroupAlgElem) -> GroupAlgElem {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &GroupAlgElem) -> GroupAlgElem {
        self.add(&other.scale(&Rational::from(-1)))
    }

    pub fn scale(&self, c: &Rational) -> GroupAlgElem {
        let mut out = Self::zero(self.m);
        for (p, a) in &self.terms {
            out.add_term(p.clone(), a * c);
        }
        out
    }

    /// Product in `QS_m`, extending `(σ, τ) -> σ ∘ τ` bilinearly.
    pub fn mul(&self, other: &GroupAlgElem) -> GroupAlgElem {
        assert_eq!(self.m, other.m, "multiplying elements of different degrees");
        let mut out = Self::zero(self.m);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.compose(q), a * b);
            }
        }
        out
    }

    pub fn left_mul_perm(&self, p: &Perm) -> GroupAlgElem {
        let mut out = Self::zero(self.m);
        for (q, c) in &self.terms {
            out.add_term(p.compose(q), c.clone());
        }
        out
    }

    pub fn right_mul_perm(&self, p: &Perm) -> GroupAlgElem {
        let mut out = Self::zero(self.m);
        for (q, c) in &self.terms {
            out.add_term(q.compose(p), c.clone());
        }
        out
    }

    /// Image under `S_k ⊆ S_m`, fixing the points above `k`.
    pub fn embed(&self, m: usize) -> GroupAlgElem {
        let mut out = Self::zero(m);
        for (p, c) in &self.terms {
            out.add_term(p.embed(m), c.clone());
        }
        out
    }

    /// Coordinates indexed by [`Perm::rank`].
    pub fn coordinates(&self) -> impl Iterator<Item = (usize, Rational)> + '_ {
        self.terms.iter().map(|(p, c)| (p.rank(), c.clone()))
    }

    /// Lines `σ(1) σ(2) ... σ(m) : coefficient`.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (p, c) in &self.terms {
            writeln!(out, "{} : {c}", p.one_line()).unwrap();
        }
        out
    }

    /// Parses [`GroupAlgElem::serialize`] output. The degree comes from the
    /// first line, so a zero element needs one line with coefficient 0.
    pub fn parse(text: &str) -> Result<GroupAlgElem> {
        let mut out: Option<GroupAlgElem> = None;
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::Parse { line: idx + 1, msg };
            let (lhs, rhs) = line
                .split_once(':')
                .ok_or_else(|| err("expected `σ(1) ... σ(m) : coefficient`".into()))?;
            let p: Perm = lhs.parse().map_err(|e: Error| err(e.to_string()))?;
            let c: Rational = rhs.trim().parse().map_err(|e: Error| err(e.to_string()))?;
            let e = out.get_or_insert_with(|| GroupAlgElem::zero(p.degree()));
            if p.degree() != e.m {
                return Err(err(format!("expected degree {}, found {}", e.m, p.degree())));
            }
            e.add_term(p, c);
        }
        out.ok_or_else(|| Error::Parse {
            line: 0,
            msg: "no terms; the degree is unknown".into(),
        })
    }
}

/// `tr_σ`: the product over the cycles `(i_1 ... i_p)` of `σ` of
/// `tr(x_{i_1} ... x_{i_p})`.
pub fn trace_monomial(p: &Perm) -> TraceMonomial {
    let traces = p
        .cycles()
        .into_iter()
        .map(|c| TraceWord::new(&c).expect("cycles are nonempty"))
        .collect();
    TraceMonomial::new(traces, Vec::new())
}

/// The linear extension of `σ -> tr_σ`.
pub fn trace_poly(e: &GroupAlgElem) -> TraceExpr {
    let mut out = TraceExpr::zero();
    for (p, c) in e.terms() {
        out.add_term(trace_monomial(p), c.clone());
    }
    out
}

/// `Σ_{σ ∈ S_{n+1}} sign(σ) σ`.
pub fn fundamental(n: usize) -> GroupAlgElem {
    let mut e = GroupAlgElem::zero(n + 1);
    for p in Perm::all(n + 1) {
        let s = p.sign();
        e.add_term(p, Rational::from(s));
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tracealg::{phi2, tr};

    fn p(v: &[u8]) -> Perm {
        Perm::new(v.to_vec()).unwrap()
    }

    #[test]
    fn trace_functions() {
        assert_eq!(trace_poly(&GroupAlgElem::from_perm(p(&[2, 3, 1]))), tr(&[1, 2, 3]));
        assert_eq!(
            trace_poly(&GroupAlgElem::from_perm(p(&[2, 1, 3]))),
            tr(&[1, 2]).mul(&tr(&[3]))
        );
        assert_eq!(trace_poly(&fundamental(2)), phi2());
    }

    #[test]
    fn fundamental_sizes() {
        let f1 = fundamental(1);
        assert_eq!(f1.len(), 2);
        assert_eq!(f1.coeff(&p(&[2, 1])), Rational::from(-1));
        assert_eq!(fundamental(2).len(), 6);
        assert_eq!(fundamental(3).len(), 24);
    }

    #[test]
    fn text_format() {
        let e = fundamental(2).scale(&Rational::frac(3, 2));
        let text = e.serialize();
        assert!(text.starts_with("1 2 3 : 3/2\n1 3 2 : -3/2\n"));
        assert_eq!(GroupAlgElem::parse(&text).unwrap(), e);
        assert!(GroupAlgElem::parse("1 2 3 : 0").unwrap().is_zero());
        assert!(matches!(
            GroupAlgElem::parse("1 2 : 1\n1 2 3 : 1"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(GroupAlgElem::parse("").is_err());
    }

    #[test]
    fn fundamental_absorbs_signs() {
        // g is the sign idempotent up to scale: σ g = sign(σ) g.
        let g = fundamental(2);
        for q in Perm::all(3) {
            assert_eq!(g.left_mul_perm(&q), g.scale(&Rational::from(q.sign())));
            assert_eq!(g.right_mul_perm(&q), g.scale(&Rational::from(q.sign())));
        }
        assert_eq!(g.mul(&g), g.scale(&Rational::from(6)));
    }
}
