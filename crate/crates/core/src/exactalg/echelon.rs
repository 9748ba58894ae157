//! Incremental row echelon form over the integers, for sparse vectors whose
//! coordinates are indexed by any ordered key (monomials, permutation ranks).
//!
//! Rows are kept primitive (content 1, positive pivot) and are combined
//! fraction-free: `v <- (p/g) v - (a/g) b` with `g = gcd(p, a)`. The pivot of
//! a row is its smallest key.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

pub type SparseRow<K> = Vec<(K, BigInt)>;

#[derive(Clone, Debug)]
pub struct SparseEchelon<K: Ord + Clone> {
    rows: Vec<SparseRow<K>>,
    pivots: BTreeMap<K, usize>,
}

impl<K: Ord + Clone> Default for SparseEchelon<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone> SparseEchelon<K> {
    pub fn new() -> Self {
        SparseEchelon {
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow<K>] {
        &self.rows
    }

    /// Reduce `v` against the basis until its leading key is not a pivot.
    /// The result is empty iff `v` lies in the span.
    fn reduce(&self, mut v: SparseRow<K>) -> SparseRow<K> {
        while let Some((k, a)) = v.first() {
            let Some(&bi) = self.pivots.get(k) else {
                break;
            };
            let b = &self.rows[bi];
            let p = &b[0].1;
            let g = p.gcd(a);
            let fv = p / &g;
            let fb = a / &g;
            v = combine(&v[1..], &fv, &b[1..], &fb);
            make_primitive(&mut v);
        }
        v
    }

    /// Adds `v` to the basis if it is independent; returns whether it was.
    pub fn insert(&mut self, v: SparseRow<K>) -> bool {
        let mut r = self.reduce(normalize(v));
        if r.is_empty() {
            return false;
        }
        make_primitive(&mut r);
        self.pivots.insert(r[0].0.clone(), self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn contains(&self, v: SparseRow<K>) -> bool {
        self.reduce(normalize(v)).is_empty()
    }

    pub fn insert_rational<I>(&mut self, v: I) -> bool
    where
        I: IntoIterator<Item = (K, Rational)>,
    {
        self.insert(integer_row(v))
    }

    pub fn contains_rational<I>(&self, v: I) -> bool
    where
        I: IntoIterator<Item = (K, Rational)>,
    {
        self.contains(integer_row(v))
    }
}

/// Sort by key, merge duplicates, drop zeros.
fn normalize<K: Ord + Clone>(mut v: SparseRow<K>) -> SparseRow<K> {
    v.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out: SparseRow<K> = Vec::with_capacity(v.len());
    for (k, c) in v {
        match out.last_mut() {
            Some((lk, lc)) if *lk == k => *lc += c,
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// Clear denominators of a rational row.
pub fn integer_row<K, I>(v: I) -> SparseRow<K>
where
    K: Ord + Clone,
    I: IntoIterator<Item = (K, Rational)>,
{
    let v: Vec<(K, Rational)> = v.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    let l = v
        .iter()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    v.into_iter()
        .map(|(k, c)| (k, c.numer() * (&l / c.denom())))
        .collect()
}

/// `fv * v - fb * b` for two sorted rows.
fn combine<K: Ord + Clone>(v: &[(K, BigInt)], fv: &BigInt, b: &[(K, BigInt)], fb: &BigInt) -> SparseRow<K> {
    let mut out = Vec::with_capacity(v.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < b.len() {
        let take = match (v.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => std::cmp::Ordering::Less,
            (None, Some(_)) => std::cmp::Ordering::Greater,
            (None, None) => unreachable!(),
        };
        match take {
            std::cmp::Ordering::Less => {
                out.push((v[i].0.clone(), fv * &v[i].1));
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((b[j].0.clone(), -(fb * &b[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = fv * &v[i].1 - fb * &b[j].1;
                if !c.is_zero() {
                    out.push((v[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn make_primitive<K>(v: &mut [(K, BigInt)]) {
    let Some(first) = v.first() else {
        return;
    };
    let mut g = first.1.abs();
    for (_, c) in v.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(c);
    }
    if first.1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, c) in v.iter_mut() {
            *c = &*c / &g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[(usize, i64)]) -> SparseRow<usize> {
        v.iter().map(|&(k, c)| (k, BigInt::from(c))).collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut e = SparseEchelon::new();
        assert!(e.insert(row(&[(0, 2), (3, 4)])));
        assert!(e.insert(row(&[(0, 1), (1, 1)])));
        assert!(!e.insert(row(&[(0, 3), (1, 2), (3, 2)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(row(&[(1, 2), (3, -4)])));
        assert!(!e.contains(row(&[(2, 1)])));
        assert!(e.contains(Vec::new()));
    }

    #[test]
    fn duplicate_keys_merge() {
        let mut e = SparseEchelon::new();
        assert!(!e.insert(row(&[(5, 1), (5, -1)])));
        assert!(e.insert(row(&[(5, 1), (5, 1)])));
    }
}
