//! Nilpotency degree of algebras satisfying `x^n = 0`: membership of
//! `x_1 ... x_N` in the multilinear part of the T-ideal of `x^n`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactalg::{integer_row, Rational, SparseEchelon};
use crate::limits::{check_cap, DEFAULT_MAX_NH_DEGREE, MAX_NH_DEGREE_ENV};
use crate::traceid::Perm;

/// A multilinear element of degree `N` of the free algebra; the
/// permutation `σ` stands for the monomial `x_{σ(1)} ... x_{σ(N)}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultilinearElem {
    degree: usize,
    terms: BTreeMap<Perm, Rational>,
}

impl MultilinearElem {
    pub fn zero(degree: usize) -> Self {
        MultilinearElem {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(word: Perm) -> Self {
        let mut e = Self::zero(word.degree());
        e.add_term(word, Rational::one());
        e
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn add_term(&mut self, word: Perm, c: Rational) {
        assert_eq!(word.degree(), self.degree, "monomial of the wrong degree");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(word.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&word);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Renames `x_i` to `x_{p(i)}`.
    pub fn relabel(&self, p: &Perm) -> MultilinearElem {
        let mut out = Self::zero(self.degree);
        for (w, c) in &self.terms {
            out.add_term(p.compose(w), c.clone());
        }
        out
    }

    fn coordinates(&self) -> impl Iterator<Item = (usize, Rational)> + '_ {
        self.terms.iter().map(|(w, c)| (w.rank(), c.clone()))
    }
}

/// `Σ_{σ ∈ S_n} x_{σ(1)} ... x_{σ(n)}`, the full linearization of `x^n`.
pub fn full_linearization(n: usize) -> MultilinearElem {
    let mut e = MultilinearElem::zero(n);
    for p in Perm::all(n) {
        e.add_term(p, Rational::one());
    }
    e
}

/// Calls `visit` with the monomials of `a L(w_1, ..., w_n) b` for every
/// arrangement of `x_1..x_N` into `a w_1 ... w_n b` with nonempty `w_i`,
/// one representative per unordered set of blocks `{w_i}`.
fn for_each_consequence(n: usize, big_n: usize, visit: &mut dyn FnMut(&[Vec<u8>]) -> bool) {
    let lin: Vec<Perm> = Perm::all(n).collect();
    let mut lengths = vec![0usize; n + 2];
    for word in Perm::all(big_n) {
        let letters = word.images();
        if !cut(n, big_n, 0, &mut lengths, &mut |lens| {
            let mut blocks: Vec<&[u8]> = Vec::with_capacity(n + 2);
            let mut pos = 0;
            for &l in lens {
                blocks.push(&letters[pos..pos + l]);
                pos += l;
            }
            let w = &blocks[1..=n];
            if w.windows(2).any(|p| p[0][0] > p[1][0]) {
                return true;
            }
            let monomials: Vec<Vec<u8>> = lin
                .iter()
                .map(|s| {
                    let mut m = blocks[0].to_vec();
                    for &i in s.images() {
                        m.extend_from_slice(w[i as usize - 1]);
                    }
                    m.extend_from_slice(blocks[n + 1]);
                    m
                })
                .collect();
            visit(&monomials)
        }) {
            return;
        }
    }
}

/// Enumerates block lengths `(|a|, |w_1|, ..., |w_n|, |b|)` summing to
/// `total`; returns false once `visit` asks to stop.
fn cut(n: usize, total: usize, slot: usize, lens: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    let used: usize = lens[..slot].iter().sum();
    let left = total - used;
    if slot == n + 1 {
        lens[slot] = left;
        return visit(lens);
    }
    let min = usize::from(slot >= 1);
    let reserve = n + 1 - slot - 1;
    for l in min..=left.saturating_sub(reserve) {
        lens[slot] = l;
        if !cut(n, total, slot + 1, lens, visit) {
            return false;
        }
    }
    true
}

/// Echelon basis of all consequences of `x^n = 0` in degree `N`.
pub fn consequence_space(n: usize, big_n: usize) -> Result<SparseEchelon<usize>> {
    check_args(n, big_n)?;
    let mut ech = SparseEchelon::new();
    if big_n >= n {
        for_each_consequence(n, big_n, &mut |monomials| {
            ech.insert_rational(monomials.iter().map(|m| (rank_of(m), Rational::one())));
            true
        });
    }
    Ok(ech)
}

fn rank_of(m: &[u8]) -> usize {
    Perm::new(m.to_vec()).expect("multilinear monomial").rank()
}

fn check_args(n: usize, big_n: usize) -> Result<()> {
    if n == 0 || big_n == 0 {
        return Err(Error::InvalidArgument("n and N must be at least 1".into()));
    }
    check_cap("nilpotency degree N", big_n, MAX_NH_DEGREE_ENV, DEFAULT_MAX_NH_DEGREE)
}

/// Whether `e` is a consequence of `x^n = 0`, with early exit once it is.
pub fn is_consequence(e: &MultilinearElem, n: usize) -> Result<bool> {
    let big_n = e.degree();
    check_args(n, big_n)?;
    if e.is_empty() {
        return Ok(true);
    }
    if big_n < n {
        return Ok(false);
    }
    let target = integer_row(e.coordinates());
    let mut ech = SparseEchelon::new();
    let mut since_check = 0usize;
    let mut found = false;
    for_each_consequence(n, big_n, &mut |monomials| {
        if ech.insert_rational(monomials.iter().map(|m| (rank_of(m), Rational::one()))) {
            since_check += 1;
            if since_check >= 32 {
                since_check = 0;
                if ech.contains(target.clone()) {
                    found = true;
                    return false;
                }
            }
        }
        true
    });
    Ok(found || ech.contains(target))
}

/// Whether `x_1 ... x_N` is a consequence of `x^n = 0`, i.e. whether every
/// algebra satisfying `x^n = 0` has `R^N = 0` on multilinear products.
pub fn nh_membership(n: usize, big_n: usize) -> Result<bool> {
    check_args(n, big_n)?;
    is_consequence(&MultilinearElem::monomial(Perm::identity(big_n)), n)
}

/// Smallest `N <= max_n` with `nh_membership(n, N)`, if any.
pub fn minimal_nilpotency(n: usize, max_n: usize) -> Result<Option<usize>> {
    for big_n in 1..=max_n {
        if nh_membership(n, big_n)? {
            return Ok(Some(big_n));
        }
    }
    Ok(None)
}

/// Known bounds on the nilpotency degree `N(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NhBounds {
    /// `n(n+1)/2`.
    pub lower: usize,
    /// `n^2`.
    pub upper: usize,
    /// Known for `n <= 4`.
    pub exact: Option<usize>,
}

pub fn bounds(n: usize) -> NhBounds {
    const KNOWN: [usize; 4] = [1, 3, 6, 10];
    NhBounds {
        lower: (n * (n + 1)).div_ceil(2),
        upper: n * n,
        exact: n.checked_sub(1).and_then(|i| KNOWN.get(i).copied()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linearizations() {
        assert_eq!(full_linearization(1).len(), 1);
        let l2 = full_linearization(2);
        assert_eq!(l2.len(), 2);
        assert!(l2.terms().all(|(_, c)| c.is_one()));
        assert_eq!(full_linearization(3).len(), 6);
    }

    #[test]
    fn bound_table() {
        assert_eq!(bounds(2), NhBounds { lower: 3, upper: 4, exact: Some(3) });
        assert_eq!(bounds(4), NhBounds { lower: 10, upper: 16, exact: Some(10) });
        assert_eq!(bounds(5), NhBounds { lower: 15, upper: 25, exact: None });
    }

    #[test]
    fn degree_two() {
        assert!(!nh_membership(2, 2).unwrap());
        assert!(nh_membership(2, 3).unwrap());
        assert!(nh_membership(1, 1).unwrap());
        assert_eq!(minimal_nilpotency(2, 5).unwrap(), Some(3));
    }

    #[test]
    fn nullspace_witness_for_degree_two() {
        // φ(x1x2) = 1, φ(x2x1) = -1 kills x1x2 + x2x1 but not x1x2.
        let space = consequence_space(2, 2).unwrap();
        assert_eq!(space.rank(), 1);
        let phi = |row: &[(usize, num_bigint::BigInt)]| -> num_bigint::BigInt {
            row.iter().map(|(k, c)| if *k == 0 { c.clone() } else { -c.clone() }).sum()
        };
        assert!(space.rows().iter().all(|r| phi(r) == 0.into()));
        assert_ne!(phi(&[(0, 1.into())]), 0.into());
    }

    #[test]
    fn caps_and_arguments() {
        assert!(matches!(nh_membership(2, 0), Err(Error::InvalidArgument(_))));
        assert!(matches!(nh_membership(2, 9), Err(Error::ResourceCap { value: 9, .. })));
    }
}
