//! Formal trace expressions: rational combinations of
//! `tr(w_1) tr(w_2) ... tr(w_r) * u` with words `w_i` and an outer word `u`.
//! Letters are 1-based matrix indices.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::Rational;

/// A nonempty word up to rotation, stored as its lexicographically least
/// rotation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TraceWord(Vec<u8>);

impl TraceWord {
    pub fn new(letters: &[u8]) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidArgument("trace word must be nonempty".into()));
        }
        if let Some(&bad) = letters.iter().find(|&&l| l == 0) {
            return Err(Error::AlphabetMismatch {
                letter: bad as usize,
                alphabet: letters.iter().copied().max().unwrap_or(0) as usize,
            });
        }
        Ok(TraceWord(canonical_rotation(letters)))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn max_letter(&self) -> u8 {
        *self.0.iter().max().unwrap()
    }
}

/// Least rotation by direct comparison of all rotations; words here are short.
pub fn canonical_rotation(w: &[u8]) -> Vec<u8> {
    let k = w.len();
    (0..k)
        .map(|r| {
            let mut v = w[r..].to_vec();
            v.extend_from_slice(&w[..r]);
            v
        })
        .min()
        .unwrap_or_default()
}

fn word_str(w: &[u8]) -> String {
    w.iter().map(|l| format!("X{l}")).collect()
}

impl fmt::Display for TraceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tr({})", word_str(&self.0))
    }
}

impl fmt::Debug for TraceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A product of traces (sorted) times an outer word; an empty outer word
/// stands for the identity matrix, i.e. a pure trace monomial.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TraceMonomial {
    traces: Vec<TraceWord>,
    outer: Vec<u8>,
}

impl TraceMonomial {
    pub fn new(mut traces: Vec<TraceWord>, outer: Vec<u8>) -> Self {
        traces.sort();
        TraceMonomial { traces, outer }
    }

    pub fn traces(&self) -> &[TraceWord] {
        &self.traces
    }

    pub fn outer(&self) -> &[u8] {
        &self.outer
    }

    pub fn is_pure(&self) -> bool {
        self.outer.is_empty()
    }

    pub fn mul(&self, other: &TraceMonomial) -> TraceMonomial {
        let mut traces = self.traces.clone();
        traces.extend(other.traces.iter().cloned());
        let mut outer = self.outer.clone();
        outer.extend_from_slice(&other.outer);
        TraceMonomial::new(traces, outer)
    }

    fn letters(&self) -> impl Iterator<Item = u8> + '_ {
        self.traces
            .iter()
            .flat_map(|t| t.letters().iter().copied())
            .chain(self.outer.iter().copied())
    }

    /// Number of occurrences of each letter `1..=d`.
    pub fn multidegree(&self, d: usize) -> Vec<u32> {
        let mut k = vec![0; d];
        for l in self.letters() {
            if (l as usize) <= d {
                k[l as usize - 1] += 1;
            }
        }
        k
    }
}

impl fmt::Display for TraceMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.traces.iter().map(|t| t.to_string()).collect();
        if !self.outer.is_empty() {
            parts.push(word_str(&self.outer));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A rational combination of trace monomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TraceExpr {
    terms: BTreeMap<TraceMonomial, Rational>,
}

impl TraceExpr {
    pub fn zero() -> Self {
        TraceExpr::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(TraceMonomial::new(Vec::new(), Vec::new()), Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_monomial(TraceMonomial::new(Vec::new(), Vec::new()), c)
    }

    pub fn from_monomial(m: TraceMonomial, c: Rational) -> Self {
        let mut e = TraceExpr::zero();
        e.add_term(m, c);
        e
    }

    /// `tr(X_{w1} X_{w2} ...)`.
    pub fn trace(letters: &[u8]) -> Result<Self> {
        Ok(Self::from_monomial(
            TraceMonomial::new(vec![TraceWord::new(letters)?], Vec::new()),
            Rational::one(),
        ))
    }

    /// The matrix word `X_{w1} X_{w2} ...` (identity when empty).
    pub fn word(letters: &[u8]) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l == 0) {
            return Err(Error::AlphabetMismatch {
                letter: bad as usize,
                alphabet: 0,
            });
        }
        Ok(Self::from_monomial(
            TraceMonomial::new(Vec::new(), letters.to_vec()),
            Rational::one(),
        ))
    }

    pub fn add_term(&mut self, m: TraceMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TraceMonomial, &Rational)> {
        self.terms.iter()
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

    pub fn is_pure(&self) -> bool {
        self.terms.keys().all(TraceMonomial::is_pure)
    }

    /// Largest letter used, i.e. the number of matrices needed.
    pub fn alphabet_size(&self) -> usize {
        self.terms
            .keys()
            .flat_map(|m| m.letters())
            .max()
            .unwrap_or(0) as usize
    }

    pub fn add(&self, other: &TraceExpr) -> TraceExpr {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TraceExpr) -> TraceExpr {
        self.add(&other.scale(&Rational::from(-1)))
    }

    pub fn scale(&self, c: &Rational) -> TraceExpr {
        let mut out = TraceExpr::zero();
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    /// Product; outer words multiply as matrices (noncommutatively).
    pub fn mul(&self, other: &TraceExpr) -> TraceExpr {
        let mut out = TraceExpr::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> TraceExpr {
        (0..k).fold(TraceExpr::one(), |acc, _| acc.mul(self))
    }

    /// Trace of the expression as an `n x n` matrix; `tr` of the identity is `n`.
    pub fn tr(&self, n: usize) -> TraceExpr {
        let mut out = TraceExpr::zero();
        for (m, c) in &self.terms {
            if m.outer.is_empty() {
                out.add_term(m.clone(), c * &Rational::from(n));
            } else {
                let mut traces = m.traces.clone();
                traces.push(TraceWord(canonical_rotation(&m.outer)));
                out.add_term(TraceMonomial::new(traces, Vec::new()), c.clone());
            }
        }
        out
    }

    /// The derivation with `X2 -> X1`, `X1 -> 0`, commuting with the trace.
    pub fn delta(&self) -> TraceExpr {
        let mut out = TraceExpr::zero();
        for (m, c) in &self.terms {
            for (i, t) in m.traces.iter().enumerate() {
                for pos in 0..t.len() {
                    if t.0[pos] == 2 {
                        let mut w = t.0.clone();
                        w[pos] = 1;
                        let mut traces = m.traces.clone();
                        traces[i] = TraceWord(canonical_rotation(&w));
                        out.add_term(TraceMonomial::new(traces, m.outer.clone()), c.clone());
                    }
                }
            }
            for pos in 0..m.outer.len() {
                if m.outer[pos] == 2 {
                    let mut outer = m.outer.clone();
                    outer[pos] = 1;
                    out.add_term(TraceMonomial::new(m.traces.clone(), outer), c.clone());
                }
            }
        }
        out
    }

    /// Substitutes `X_{f(l)}` for every letter `X_l`.
    pub fn relabel(&self, f: impl Fn(u8) -> u8) -> Result<TraceExpr> {
        let mut out = TraceExpr::zero();
        for (m, c) in &self.terms {
            let traces = m
                .traces
                .iter()
                .map(|t| TraceWord::new(&t.0.iter().map(|&l| f(l)).collect::<Vec<_>>()))
                .collect::<Result<Vec<_>>>()?;
            let outer: Vec<u8> = m.outer.iter().map(|&l| f(l)).collect();
            if outer.contains(&0) {
                return Err(Error::AlphabetMismatch { letter: 0, alphabet: 0 });
            }
            out.add_term(TraceMonomial::new(traces, outer), c.clone());
        }
        Ok(out)
    }

    pub fn delta_pow(&self, k: u32) -> TraceExpr {
        (0..k).fold(self.clone(), |acc, _| acc.delta())
    }
}

impl fmt::Display for TraceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TraceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `tr(w)` as an expression; panics on an empty or zero-letter word.
pub fn tr(letters: &[u8]) -> TraceExpr {
    TraceExpr::trace(letters).expect("valid trace word")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn necklace_canonical_form() {
        let a = TraceWord::new(&[2, 1, 1]).unwrap();
        let b = TraceWord::new(&[1, 2, 1]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.letters(), &[1, 1, 2]);
        assert_eq!(tr(&[1, 2]).sub(&tr(&[2, 1])), TraceExpr::zero());
        assert!(TraceWord::new(&[]).is_err());
        assert!(matches!(TraceWord::new(&[1, 0]), Err(Error::AlphabetMismatch { letter: 0, .. })));
    }

    #[test]
    fn delta_examples() {
        assert!(tr(&[1]).delta().is_zero());
        assert_eq!(tr(&[2, 2]).delta(), tr(&[1, 2]).scale(&Rational::from(2)));
        assert_eq!(tr(&[2, 2, 2]).delta(), tr(&[1, 2, 2]).scale(&Rational::from(3)));
        // Leibniz on a product
        let p = tr(&[2]).mul(&tr(&[2, 2]));
        let expected = tr(&[1]).mul(&tr(&[2, 2])).add(&tr(&[2]).mul(&tr(&[1, 2])).scale(&Rational::from(2)));
        assert_eq!(p.delta(), expected);
    }

    #[test]
    fn trace_of_mixed_expression() {
        let e = TraceExpr::word(&[1, 2]).unwrap().add(&TraceExpr::one());
        assert_eq!(e.tr(3), tr(&[1, 2]).add(&TraceExpr::constant(Rational::from(3))));
        assert_eq!(e.to_string(), "1 + X1X2");
    }
}
