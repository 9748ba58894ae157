//! The two-sided ideal `J(n, m)` of `QS_m` generated by the fundamental
//! element, and the trace identities of `n x n` matrices it describes.

use super::algebra::{fundamental, trace_poly, GroupAlgElem};
use super::perm::Perm;
use crate::error::Result;
use crate::exactalg::{Rational, SparseEchelon};
use crate::limits::{check_cap, DEFAULT_MAX_PERM_DEGREE, MAX_PERM_DEGREE_ENV};
use crate::tracealg::verify_zero;

/// A basis of `J(n, m)` in echelon form over the coordinates [`Perm::rank`].
pub struct IdealBasis {
    pub n: usize,
    pub m: usize,
    echelon: SparseEchelon<usize>,
}

impl IdealBasis {
    /// Closes `fundamental(n)`, embedded in `S_m`, under left and right
    /// multiplication by the adjacent transpositions, which generate `S_m`.
    /// A vector is expanded only when it enlarges the span, so the loop
    /// stops as soon as the span is closed.
    pub fn compute(n: usize, m: usize) -> Result<IdealBasis> {
        check_cap("permutation degree m", m, MAX_PERM_DEGREE_ENV, DEFAULT_MAX_PERM_DEGREE)?;
        let mut echelon = SparseEchelon::new();
        if m > n {
            let swaps: Vec<Perm> = (1..m).map(|i| Perm::transposition(m, i, i + 1)).collect();
            let g = fundamental(n).embed(m);
            echelon.insert_rational(g.coordinates());
            let mut queue = vec![g];
            while let Some(e) = queue.pop() {
                for s in &swaps {
                    for next in [e.left_mul_perm(s), e.right_mul_perm(s)] {
                        if echelon.insert_rational(next.coordinates()) {
                            queue.push(next);
                        }
                    }
                }
            }
        }
        Ok(IdealBasis { n, m, echelon })
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn contains(&self, e: &GroupAlgElem) -> bool {
        assert_eq!(e.degree(), self.m, "element of the wrong degree");
        self.echelon.contains_rational(e.coordinates())
    }

    /// The basis vectors as group-algebra elements.
    pub fn basis(&self) -> Vec<GroupAlgElem> {
        self.echelon
            .rows()
            .iter()
            .map(|row| {
                let mut e = GroupAlgElem::zero(self.m);
                for (r, c) in row {
                    e.add_term(Perm::unrank(self.m, *r), Rational::from(c.clone()));
                }
                e
            })
            .collect()
    }
}

/// Whether `e` lies in `J(n, m)`, `m` being the degree of `e`.
pub fn ideal_membership(e: &GroupAlgElem, n: usize) -> Result<bool> {
    if e.degree() <= n {
        return Ok(e.is_zero());
    }
    Ok(IdealBasis::compute(n, e.degree())?.contains(e))
}

/// Whether `trace_poly(e)` vanishes on `m` generic `n x n` matrices.
pub fn semantic_identity(e: &GroupAlgElem, n: usize) -> Result<bool> {
    if e.is_zero() {
        return Ok(true);
    }
    check_cap("permutation degree m", e.degree(), MAX_PERM_DEGREE_ENV, DEFAULT_MAX_PERM_DEGREE)?;
    verify_zero(&trace_poly(e), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ideals() {
        assert!(ideal_membership(&fundamental(2), 2).unwrap());
        assert!(!ideal_membership(&GroupAlgElem::from_perm(Perm::identity(3)), 2).unwrap());
        assert_eq!(IdealBasis::compute(2, 3).unwrap().dim(), 1);
        assert_eq!(IdealBasis::compute(2, 2).unwrap().dim(), 0);
        // J(1, m) is the complement of the trivial representation
        assert_eq!(IdealBasis::compute(1, 4).unwrap().dim(), 23);
    }

    #[test]
    fn semantic_examples() {
        assert!(semantic_identity(&fundamental(2), 2).unwrap());
        assert!(!semantic_identity(&fundamental(2), 3).unwrap());
        assert!(semantic_identity(&GroupAlgElem::zero(4), 1).unwrap());
        assert!(!semantic_identity(&GroupAlgElem::from_perm(Perm::identity(3)), 2).unwrap());
    }
}
