//! Permutations of `{1..m}` in one-line notation.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

/// `σ` stored as `(σ(1), ..., σ(m))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn new(images: Vec<u8>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &x in &images {
            let i = x as usize;
            if i == 0 || i > m || seen[i - 1] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a permutation of 1..={m}"
                )));
            }
            seen[i - 1] = true;
        }
        Ok(Perm(images))
    }

    pub fn identity(m: usize) -> Self {
        Perm((1..=m as u8).collect())
    }

    /// The transposition of `i` and `j` (1-based) in `S_m`.
    pub fn transposition(m: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(m);
        p.0.swap(i - 1, j - 1);
        p
    }

    /// All of `S_m` in lexicographic order of one-line notation.
    pub fn all(m: usize) -> impl Iterator<Item = Perm> {
        (1..=m as u8).permutations(m).map(Perm)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degrees");
        Perm(other.0.iter().map(|&i| self.0[i as usize - 1]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize - 1] = i as u8 + 1;
        }
        Perm(inv)
    }

    /// Extends to `S_m` by fixing `degree()+1..=m`.
    pub fn embed(&self, m: usize) -> Perm {
        assert!(m >= self.degree());
        let mut v = self.0.clone();
        v.extend(self.degree() as u8 + 1..=m as u8);
        Perm(v)
    }

    /// Disjoint cycles including fixed points, each starting at its
    /// minimum, sorted by minimum.
    pub fn cycles(&self) -> Vec<Vec<u8>> {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for start in 1..=m {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i - 1] {
                seen[i - 1] = true;
                cycle.push(i as u8);
                i = self.apply(i);
            }
            out.push(cycle);
        }
        out
    }

    pub fn sign(&self) -> i64 {
        let even = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if even % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Position in the lexicographic order of `S_m` (Lehmer code).
    pub fn rank(&self) -> usize {
        let m = self.degree();
        let mut r = 0;
        for i in 0..m {
            let smaller = self.0[i + 1..].iter().filter(|&&x| x < self.0[i]).count();
            r = r * (m - i) + smaller;
        }
        r
    }

    /// Inverse of [`Perm::rank`].
    pub fn unrank(m: usize, mut r: usize) -> Perm {
        let mut digits = vec![0; m];
        for i in (0..m).rev() {
            let base = m - i;
            digits[i] = r % base;
            r /= base;
        }
        let mut pool: Vec<u8> = (1..=m as u8).collect();
        Perm(digits.into_iter().map(|d| pool.remove(d)).collect())
    }

    /// One-line notation, space separated.
    pub fn one_line(&self) -> String {
        self.0.iter().join(" ")
    }
}

impl fmt::Display for Perm {
    /// Cycle notation, e.g. `(1 2)(3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.cycles() {
            write!(f, "({})", c.iter().join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// One-line notation separated by spaces or commas.
    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u8>()
                    .map_err(|e| Error::InvalidArgument(format!("bad permutation entry `{t}`: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::new(images)
    }
}
