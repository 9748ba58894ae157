//! Graded dimensions of the pure and mixed trace algebras, computed as ranks
//! of spanning sets of evaluated trace monomials.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use super::expr::TraceWord;
use super::generic::{generic_matrices, Evaluator};
use crate::error::{Error, Result};
use crate::exactalg::{integer_row, Matrix, Monomial, Rational, RationalFn, SparseEchelon, SparsePoly, TruncSeries};
use crate::symmfunc::{schur_decompose2, Partition, SchurDecomp};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceKind {
    /// Traces only: the commutative algebra of invariants.
    Pure,
    /// Traces times matrix words.
    Mixed,
}

/// Longest trace word used in spanning sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum WordCap {
    /// `n^2`: always spans.
    #[default]
    Razmyslov,
    /// `n(n+1)/2`: faster; spans only if the nilpotency class attains its
    /// conjectured lower bound. Experimental.
    Kuzmin,
}

impl WordCap {
    pub fn length(self, n: usize) -> usize {
        match self {
            WordCap::Razmyslov => n * n,
            WordCap::Kuzmin => n * (n + 1) / 2,
        }
    }
}

fn content(w: &[u8], d: usize) -> Vec<u32> {
    let mut k = vec![0; d];
    for &l in w {
        k[l as usize - 1] += 1;
    }
    k
}

/// All words over `1..=d` of length `1..=max_len` with letter counts at most
/// `bound`, in lexicographic order.
fn words_within(d: usize, max_len: usize, bound: &[u32]) -> Vec<Vec<u8>> {
    fn rec(d: usize, max_len: usize, left: &mut Vec<u32>, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max_len {
            return;
        }
        for l in 1..=d {
            if left[l - 1] > 0 {
                left[l - 1] -= 1;
                cur.push(l as u8);
                rec(d, max_len, left, cur, out);
                cur.pop();
                left[l - 1] += 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(d, max_len, &mut bound.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// Necklaces (canonical trace words) fitting inside `bound`.
pub fn necklaces_within(d: usize, max_len: usize, bound: &[u32]) -> Vec<TraceWord> {
    words_within(d, max_len, bound)
        .into_iter()
        .filter(|w| super::expr::canonical_rotation(w) == *w)
        .map(|w| TraceWord::new(&w).expect("nonempty word"))
        .collect()
}

/// Visits every product of necklaces (a multiset, chosen in nondecreasing
/// index order) whose letter content is exactly `target`, with the
/// evaluated product and the number of factors.
fn for_each_product(
    arity: usize,
    polys: &[(Vec<u32>, SparsePoly)],
    target: &[u32],
    visit: &mut dyn FnMut(&SparsePoly, usize),
) {
    fn rec(
        polys: &[(Vec<u32>, SparsePoly)],
        start: usize,
        left: &mut Vec<u32>,
        acc: &SparsePoly,
        factors: usize,
        visit: &mut dyn FnMut(&SparsePoly, usize),
    ) {
        if left.iter().all(|&x| x == 0) {
            visit(acc, factors);
            return;
        }
        for (i, (c, p)) in polys.iter().enumerate().skip(start) {
            if c.iter().zip(left.iter()).all(|(a, b)| a <= b) {
                for (l, a) in left.iter_mut().zip(c) {
                    *l -= a;
                }
                rec(polys, i, left, &(acc * p), factors + 1, visit);
                for (l, a) in left.iter_mut().zip(c) {
                    *l += a;
                }
            }
        }
    }
    rec(polys, 0, &mut target.to_vec(), &SparsePoly::one(arity), 0, visit);
}

struct Spanning {
    /// Rank of the products with at least two trace factors (pure) or of all
    /// elements (mixed).
    decomposable: usize,
    total: usize,
}

fn span_ranks(n: usize, d: usize, k: &[u32], kind: TraceKind, cap: WordCap) -> Spanning {
    let mats = generic_matrices(n, d, false);
    let arity = d * n * n;
    let mut ev = Evaluator::new(mats).expect("d >= 1");
    let necks = necklaces_within(d, cap.length(n), k);
    let polys: Vec<(Vec<u32>, SparsePoly)> = necks
        .iter()
        .map(|w| (content(w.letters(), d), ev.trace(w).expect("letters within 1..=d")))
        .collect();
    match kind {
        TraceKind::Pure => {
            let mut products = SparseEchelon::new();
            let mut singles = Vec::new();
            for_each_product(arity, &polys, k, &mut |p, factors| {
                if factors == 1 {
                    singles.push(p.clone());
                } else {
                    products.insert(integer_row(p.terms().map(|(m, c)| (m.clone(), c.clone()))));
                }
            });
            let decomposable = products.rank();
            for p in singles {
                products.insert(integer_row(p.into_terms()));
            }
            Spanning {
                decomposable,
                total: products.rank(),
            }
        }
        TraceKind::Mixed => {
            let mut ech: SparseEchelon<(usize, Monomial)> = SparseEchelon::new();
            let mut outer: Vec<Vec<u8>> = vec![Vec::new()];
            outer.extend(words_within(d, n * n - 1, k));
            for u in outer {
                let cu = content(&u, d);
                let rest: Vec<u32> = k.iter().zip(&cu).map(|(a, b)| a - b).collect();
                let w: Matrix<SparsePoly> = ev.word(&u).expect("letters within 1..=d");
                for_each_product(arity, &polys, &rest, &mut |p, _| {
                    let mut row = Vec::new();
                    for (idx, entry) in w.entries().iter().enumerate() {
                        if entry.is_zero() {
                            continue;
                        }
                        for (m, c) in (entry * p).into_terms() {
                            row.push(((idx, m), c));
                        }
                    }
                    ech.insert(integer_row(row));
                });
            }
            Spanning {
                decomposable: 0,
                total: ech.rank(),
            }
        }
    }
}

/// Dimension of the homogeneous component of multidegree `k` of the pure or
/// mixed trace algebra of `k.len()` generic `n x n` matrices.
pub fn graded_dim(n: usize, k: &[u32], kind: TraceKind) -> usize {
    graded_dim_with(n, k, kind, WordCap::default())
}

pub fn graded_dim_with(n: usize, k: &[u32], kind: TraceKind, cap: WordCap) -> usize {
    span_ranks(n, k.len().max(1), k, kind, cap).total
}

/// All multidegrees in `d` variables of total degree at most `bound`, by
/// total degree and then lexicographically.
pub fn multidegrees(d: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for total in 0..=bound {
        let mut level = Vec::new();
        compositions(d, total, &mut Vec::new(), &mut level);
        level.sort();
        out.extend(level);
    }
    out
}

fn compositions(d: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() + 1 == d {
        cur.push(rest);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    if d == 0 {
        return;
    }
    for a in 0..=rest {
        cur.push(a);
        compositions(d, rest - a, cur, out);
        cur.pop();
    }
}

/// Dimensions of all components of total degree at most `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimTable {
    pub n: usize,
    pub d: usize,
    pub bound: u32,
    pub dims: BTreeMap<Vec<u32>, usize>,
}

impl DimTable {
    pub fn compute(n: usize, d: usize, bound: u32, kind: TraceKind, cap: WordCap) -> DimTable {
        let degs = multidegrees(d, bound);
        let vals: Vec<usize> = degs
            .par_iter()
            .map(|k| graded_dim_with(n, k, kind, cap))
            .collect();
        DimTable {
            n,
            d,
            bound,
            dims: degs.into_iter().zip(vals).collect(),
        }
    }

    pub fn get(&self, k: &[u32]) -> usize {
        self.dims.get(k).copied().unwrap_or(0)
    }

    /// The table as a truncated series in `d` variables.
    pub fn to_series(&self) -> TruncSeries {
        let mut s = TruncSeries::zero(self.d, self.bound);
        for (k, &v) in &self.dims {
            s.add_term(
                Monomial(k.iter().map(|&x| x as u16).collect()),
                Rational::from(v),
            );
        }
        s
    }

    /// Lines `k1,...,kd : dim`, by total degree then lexicographically.
    pub fn serialize(&self) -> String {
        let mut keys: Vec<&Vec<u32>> = self.dims.keys().collect();
        keys.sort_by_key(|k| (k.iter().sum::<u32>(), (*k).clone()));
        let mut out = String::new();
        for k in keys {
            let ks: Vec<String> = k.iter().map(u32::to_string).collect();
            writeln!(out, "{} : {}", ks.join(","), self.dims[k]).unwrap();
        }
        out
    }

    pub fn parse(text: &str, n: usize, d: usize, bound: u32) -> Result<DimTable> {
        let mut dims = BTreeMap::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::Parse { line: idx + 1, msg };
            let (lhs, rhs) = line
                .split_once(':')
                .ok_or_else(|| err("expected `k1,...,kd : dim`".into()))?;
            let k = lhs
                .split(',')
                .map(|t| t.trim().parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| err(e.to_string()))?;
            if k.len() != d {
                return Err(err(format!("expected {d} degrees, found {}", k.len())));
            }
            let v = rhs.trim().parse::<usize>().map_err(|e| err(e.to_string()))?;
            dims.insert(k, v);
        }
        Ok(DimTable { n, d, bound, dims })
    }
}

/// Outcome of comparing computed dimensions with a closed-form series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertReport {
    pub table: DimTable,
    /// `(multidegree, predicted, computed)` for each disagreement.
    pub mismatches: Vec<(Vec<u32>, Rational, usize)>,
}

impl HilbertReport {
    pub fn is_match(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn first_mismatch(&self) -> Option<&(Vec<u32>, Rational, usize)> {
        self.mismatches.first()
    }
}

/// Compares `graded_dim(n, k, Pure)` with the coefficients of `h` for every
/// multidegree of total degree at most `bound`.
pub fn hilbert_check(n: usize, d: usize, bound: u32, h: &RationalFn) -> Result<HilbertReport> {
    if h.arity() != d {
        return Err(Error::Dimension(format!(
            "series has {} variables, expected {d}",
            h.arity()
        )));
    }
    let predicted = h.expand(bound)?;
    let table = DimTable::compute(n, d, bound, TraceKind::Pure, WordCap::default());
    let mismatches = table
        .dims
        .iter()
        .filter_map(|(k, &v)| {
            let e: Vec<u16> = k.iter().map(|&x| x as u16).collect();
            let c = predicted.coeff(&e);
            (c != Rational::from(v)).then(|| (k.clone(), c, v))
        })
        .collect();
    Ok(HilbertReport { table, mismatches })
}

/// Number of indecomposable generators needed in each multidegree of total
/// degree at most `bound` (zero entries omitted).
pub fn min_gen_profile(n: usize, d: usize, bound: u32) -> BTreeMap<Vec<u32>, usize> {
    let degs: Vec<Vec<u32>> = multidegrees(d, bound)
        .into_iter()
        .filter(|k| k.iter().sum::<u32>() > 0)
        .collect();
    let counts: Vec<usize> = degs
        .par_iter()
        .map(|k| {
            let s = span_ranks(n, d, k, TraceKind::Pure, WordCap::default());
            s.total - s.decomposable
        })
        .collect();
    degs.into_iter()
        .zip(counts)
        .filter(|(_, c)| *c > 0)
        .collect()
}

/// Schur decomposition of the Hilbert series of the mixed trace algebra of
/// two generic 2x2 matrices, compared with `m(l1, l2) = (l1 - l2 + 1)(l2 + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct T22Report {
    pub decomposition: SchurDecomp,
    /// `(partition, expected, found)` for each disagreement.
    pub mismatches: Vec<(Partition, Rational, Rational)>,
}

impl T22Report {
    pub fn is_match(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn t22_multiplicity_check(bound: u32) -> Result<T22Report> {
    let table = DimTable::compute(2, 2, bound, TraceKind::Mixed, WordCap::default());
    let decomposition = schur_decompose2(&table.to_series(), bound)?;
    let mut mismatches = Vec::new();
    for size in 0..=bound {
        for p in Partition::all_of(size, 2) {
            let (l1, l2) = (p.part(0) as i64, p.part(1) as i64);
            let expected = Rational::from((l1 - l2 + 1) * (l2 + 1));
            let found = decomposition.get(&p);
            if found != expected {
                mismatches.push((p, expected, found));
            }
        }
    }
    Ok(T22Report {
        decomposition,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn necklace_counts() {
        // binary necklaces of length 4 with content (2, 2): 1122, 1212
        let all = necklaces_within(2, 4, &[2, 2]);
        assert_eq!(all.iter().filter(|w| w.len() == 4).count(), 2);
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(graded_dim(2, &[1, 1], TraceKind::Pure), 2);
        assert_eq!(graded_dim(2, &[2, 0], TraceKind::Pure), 2);
        assert_eq!(graded_dim(2, &[0, 0], TraceKind::Pure), 1);
        assert_eq!(graded_dim(2, &[1, 0], TraceKind::Mixed), 2);
        assert_eq!(graded_dim(2, &[0, 0], TraceKind::Mixed), 1);
        // one 1x1 matrix pair: polynomial ring in two variables
        assert_eq!(graded_dim(1, &[2, 3], TraceKind::Pure), 1);
    }

    #[test]
    fn dim_table_serialization() {
        let t = DimTable::compute(2, 2, 2, TraceKind::Pure, WordCap::default());
        let text = t.serialize();
        assert!(text.starts_with("0,0 : 1\n0,1 : 1\n1,0 : 1\n0,2 : 2\n1,1 : 2\n2,0 : 2\n"));
        assert_eq!(DimTable::parse(&text, 2, 2, 2).unwrap(), t);
    }

    #[test]
    fn multidegree_enumeration() {
        assert_eq!(multidegrees(2, 1), vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        assert_eq!(multidegrees(3, 2).len(), 10);
    }
}
