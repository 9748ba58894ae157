//! Dense matrices over a commutative scalar ring, with exact linear algebra
//! for the rational case.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::SparsePoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// The operations a matrix entry needs. `zero_like`/`one_like` exist because
/// polynomial zeros carry an arity.
pub trait Scalar: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Rational) -> Self {
        self * c
    }
}

impl Scalar for SparsePoly {
    fn zero_like(&self) -> Self {
        SparsePoly::zero(self.arity())
    }
    fn one_like(&self) -> Self {
        SparsePoly::one(self.arity())
    }
    fn is_zero(&self) -> bool {
        SparsePoly::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

/// Matrix of rationals.
pub type QMatrix = Matrix<Rational>;

impl<T: Scalar> Matrix<T> {
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Identity with entries shaped like `template`.
    pub fn identity_like(n: usize, template: &T) -> Self {
        let zero = template.zero_like();
        let one = template.one_like();
        Self::from_fn(n, n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "incompatible shapes");
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = self.get(i, 0).times(other.get(0, j));
            for k in 1..self.cols {
                acc = acc.plus(&self.get(i, k).times(other.get(k, j)));
            }
            acc
        })
    }

    pub fn add(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.plus(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.minus(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Matrix<T> {
        self.map(|x| x.scaled(c))
    }

    /// Multiply every entry by the scalar `s`.
    pub fn times_scalar(&self, s: &T) -> Matrix<T> {
        self.map(|x| x.times(s))
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        let mut acc = self.get(0, 0).clone();
        for i in 1..self.rows {
            acc = acc.plus(self.get(i, i));
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.entries[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(|x| x.to_string())
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("entries", &self.entries)
            .finish()
    }
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| Rational::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::identity_like(n, &Rational::zero())
    }

    pub fn from_rows(rows: &[Vec<Rational>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::from_entries(r, c, rows.concat())
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
            .collect();
        Self::from_rows(&rows).expect("rectangular rows")
    }

    /// Rows scaled to integers by clearing denominators (row scaling does not
    /// change rank or the row space).
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect()
    }

    /// Rank over Q by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.integer_rows();
        bareiss_eliminate(&mut a, self.cols).0
    }

    /// Determinant by fraction-free elimination.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        // det(A) = det(D A) / det(D) where D clears row denominators
        let scale: Rational = (0..n)
            .map(|i| {
                let l = self
                    .row(i)
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                Rational::from(l)
            })
            .product();
        let mut a = self.integer_rows();
        let (rank, sign) = bareiss_eliminate(&mut a, n);
        if rank < n {
            return Ok(Rational::zero());
        }
        let d = Rational::from(a[n - 1][n - 1].clone()) * Rational::from(sign as i64);
        Ok(&d / &scale)
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip().expect("nonzero pivot");
            for j in c..self.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..self.cols {
                    let v = m.get(i, j) - &(&f * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// A basis of `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(row, f);
                }
                v
            })
            .collect()
    }

    /// Some solution of `A x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows);
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<QMatrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(Self::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// Coefficients `[c0, c1, ..., cn]` of `det(I - t A) = sum ci t^i`,
    /// by the Faddeev-LeVerrier recursion.
    pub fn det_one_minus_t(&self) -> Vec<Rational> {
        assert!(self.is_square());
        let n = self.rows;
        // char poly det(xI - A) = sum_{i} p[i] x^i, p[n] = 1
        let mut p = vec![Rational::zero(); n + 1];
        p[n] = Rational::one();
        let id = QMatrix::identity(n);
        let mut m = QMatrix::zeros(n, n);
        for k in 1..=n {
            m = self.mul(&m).add(&id.scale(&p[n - k + 1]));
            let tr = self.mul(&m).trace();
            p[n - k] = -(&tr / &Rational::from(k as i64));
        }
        // det(I - tA) = t^n det(t^{-1} I - A): coefficient of t^j is p[n - j]
        (0..=n).map(|j| p[n - j].clone()).collect()
    }

    /// `A^k` by repeated squaring.
    pub fn pow(&self, mut k: u64) -> QMatrix {
        let mut base = self.clone();
        let mut acc = QMatrix::identity(self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }
}

/// In-place fraction-free elimination on the first `cols` columns. Returns
/// the rank and the sign of the row permutation used. After the call,
/// `a[r-1][c]` for the last pivot holds the determinant of the leading
/// pivot block.
fn bareiss_eliminate(a: &mut [Vec<BigInt>], cols: usize) -> (usize, i32) {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut sign = 1;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            sign = -sign;
        }
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                let v = &pivot_row[c] * &row[j] - &lead * &pivot_row[j];
                debug_assert!((&v % &prev).is_zero(), "Bareiss division must be exact");
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    (r, sign)
}
