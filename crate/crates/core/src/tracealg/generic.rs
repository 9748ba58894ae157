//! Generic (and generic traceless) matrices, and evaluation of trace
//! expressions on them or on concrete rational matrices.

use std::collections::HashMap;

use super::expr::{TraceExpr, TraceWord};
use crate::error::{Error, Result};
use crate::exactalg::{Matrix, QMatrix, Scalar, SparsePoly};

/// Number of independent entries of one generic matrix.
pub fn free_entries(n: usize, traceless: bool) -> usize {
    if traceless {
        n * n - 1
    } else {
        n * n
    }
}

/// The `index`-th (1-based) of `d` generic `n x n` matrices. Its entries are
/// variables of a polynomial ring with `d * free_entries(n, traceless)`
/// variables, matrix by matrix in row-major order. A traceless matrix has
/// `-(x_11 + ... + x_{n-1,n-1})` in the bottom-right corner.
#[derive(Clone, Debug)]
pub struct GenericMatrix {
    pub n: usize,
    pub index: usize,
    pub traceless: bool,
    pub entries: Matrix<SparsePoly>,
}

impl GenericMatrix {
    pub fn new(n: usize, index: usize, d: usize, traceless: bool) -> Self {
        assert!(index >= 1 && index <= d, "matrix index out of range");
        let per = free_entries(n, traceless);
        let arity = d * per;
        let base = (index - 1) * per;
        let var = |p: usize, q: usize| SparsePoly::var(arity, base + p * n + q);
        let entries = Matrix::from_fn(n, n, |p, q| {
            if traceless && p == n - 1 && q == n - 1 {
                (0..n - 1).fold(SparsePoly::zero(arity), |acc, i| &acc - &var(i, i))
            } else {
                var(p, q)
            }
        });
        GenericMatrix {
            n,
            index,
            traceless,
            entries,
        }
    }

    /// Index of the variable at entry `(p, q)`; `None` for the dependent
    /// corner of a traceless matrix.
    pub fn var_index(&self, p: usize, q: usize) -> Option<usize> {
        if self.traceless && p == self.n - 1 && q == self.n - 1 {
            return None;
        }
        Some((self.index - 1) * free_entries(self.n, self.traceless) + p * self.n + q)
    }
}

pub fn generic_matrices(n: usize, d: usize, traceless: bool) -> Vec<Matrix<SparsePoly>> {
    (1..=d)
        .map(|i| GenericMatrix::new(n, i, d, traceless).entries)
        .collect()
}

/// Value of an expression: a scalar for pure expressions, else a matrix.
#[derive(Clone, Debug, PartialEq)]
pub enum Evaluated<T> {
    Scalar(T),
    Matrix(Matrix<T>),
}

impl<T: Scalar> Evaluated<T> {
    pub fn is_zero(&self) -> bool {
        match self {
            Evaluated::Scalar(s) => s.is_zero(),
            Evaluated::Matrix(m) => m.entries().iter().all(Scalar::is_zero),
        }
    }
}

/// Evaluates trace expressions on fixed matrices, caching word products
/// and traces.
pub struct Evaluator<T: Scalar> {
    n: usize,
    mats: Vec<Matrix<T>>,
    words: HashMap<Vec<u8>, Matrix<T>>,
    traces: HashMap<TraceWord, T>,
    zero: T,
}

impl<T: Scalar> Evaluator<T> {
    pub fn new(mats: Vec<Matrix<T>>) -> Result<Self> {
        let Some(first) = mats.first() else {
            return Err(Error::InvalidArgument("no matrices to evaluate on".into()));
        };
        let n = first.rows();
        if mats.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::Dimension("matrices must all be square of one size".into()));
        }
        let zero = first.get(0, 0).zero_like();
        Ok(Evaluator {
            n,
            mats,
            words: HashMap::new(),
            traces: HashMap::new(),
            zero,
        })
    }

    pub fn alphabet(&self) -> usize {
        self.mats.len()
    }

    fn check(&self, l: u8) -> Result<()> {
        if l == 0 || l as usize > self.mats.len() {
            return Err(Error::AlphabetMismatch {
                letter: l as usize,
                alphabet: self.mats.len(),
            });
        }
        Ok(())
    }

    pub fn word(&mut self, w: &[u8]) -> Result<Matrix<T>> {
        if w.is_empty() {
            return Ok(Matrix::identity_like(self.n, &self.zero));
        }
        if let Some(m) = self.words.get(w) {
            return Ok(m.clone());
        }
        let last = w[w.len() - 1];
        self.check(last)?;
        let prefix = self.word(&w[..w.len() - 1])?;
        let m = prefix.mul(&self.mats[last as usize - 1]);
        self.words.insert(w.to_vec(), m.clone());
        Ok(m)
    }

    pub fn trace(&mut self, t: &TraceWord) -> Result<T> {
        if let Some(v) = self.traces.get(t) {
            return Ok(v.clone());
        }
        let v = self.word(t.letters())?.trace();
        self.traces.insert(t.clone(), v.clone());
        Ok(v)
    }

    pub fn eval(&mut self, e: &TraceExpr) -> Result<Evaluated<T>> {
        let pure = e.is_pure();
        let mut scalar = self.zero.clone();
        let mut matrix = Matrix::from_fn(self.n, self.n, |_, _| self.zero.clone());
        for (m, c) in e.terms() {
            let mut s = self.zero.one_like().scaled(c);
            for t in m.traces() {
                s = s.times(&self.trace(t)?);
            }
            if pure {
                scalar = scalar.plus(&s);
            } else {
                let w = self.word(m.outer())?;
                matrix = matrix.add(&w.times_scalar(&s));
            }
        }
        Ok(if pure {
            Evaluated::Scalar(scalar)
        } else {
            Evaluated::Matrix(matrix)
        })
    }
}

/// Evaluation on `d` generic `n x n` matrices, `d` taken from the expression.
pub fn eval_generic(e: &TraceExpr, n: usize, traceless: bool) -> Result<Evaluated<SparsePoly>> {
    let d = e.alphabet_size().max(1);
    Evaluator::new(generic_matrices(n, d, traceless))?.eval(e)
}

/// Evaluation on concrete rational matrices. With `traceless`, each matrix
/// must have trace zero.
pub fn eval_at(e: &TraceExpr, mats: &[QMatrix], traceless: bool) -> Result<Evaluated<crate::exactalg::Rational>> {
    if traceless {
        if let Some(slot) = mats.iter().position(|m| !m.trace().is_zero()) {
            return Err(Error::NotTraceless { slot: slot + 1 });
        }
    }
    if e.alphabet_size() > mats.len() {
        return Err(Error::AlphabetMismatch {
            letter: e.alphabet_size(),
            alphabet: mats.len(),
        });
    }
    Evaluator::new(mats.to_vec())?.eval(e)
}

/// True iff the expression vanishes identically on generic `n x n` matrices.
pub fn verify_zero(e: &TraceExpr, n: usize) -> Result<bool> {
    Ok(eval_generic(e, n, false)?.is_zero())
}

/// The derivation of the polynomial ring of two generic matrices sending
/// each entry of the second matrix to the matching entry of the first.
pub fn delta_poly(f: &SparsePoly, n: usize, traceless: bool) -> SparsePoly {
    let per = free_entries(n, traceless);
    assert_eq!(f.arity(), 2 * per, "expected the entry ring of two matrices");
    let mut out = SparsePoly::zero(f.arity());
    for v in 0..per {
        let dv = f.derivative(per + v);
        if !dv.is_zero() {
            out = &out + &(&dv * &SparsePoly::var(f.arity(), v));
        }
    }
    out
}
