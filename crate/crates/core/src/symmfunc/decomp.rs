//! Schur expansion of symmetric series in two variables and the
//! multiplicity series `M'(t, v) = sum m(l1, l2) t^(l1 - l2) v^l2`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::partition::Partition;
use crate::error::{Error, Result};
use crate::exactalg::{expand_sum, one_minus, Monomial, Rational, RationalFn, SparsePoly, TruncSeries};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchurDecomp {
    arity: usize,
    bound: u32,
    mults: BTreeMap<Partition, Rational>,
}

impl SchurDecomp {
    pub fn new(arity: usize, bound: u32) -> Self {
        SchurDecomp {
            arity,
            bound,
            mults: BTreeMap::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// Partitions longer than the arity or larger than the bound are ignored.
    pub fn add(&mut self, lambda: Partition, m: Rational) {
        if lambda.len() > self.arity || lambda.size() > self.bound || m.is_zero() {
            return;
        }
        let slot = self.mults.entry(lambda.clone()).or_insert_with(Rational::zero);
        *slot += m;
        if slot.is_zero() {
            self.mults.remove(&lambda);
        }
    }

    pub fn get(&self, lambda: &Partition) -> Rational {
        self.mults.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.mults.iter()
    }

    pub fn len(&self) -> usize {
        self.mults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// Lines `l1,l2 : m`, sorted by size then by first part.
    pub fn serialize(&self) -> String {
        let mut keys: Vec<&Partition> = self.mults.keys().collect();
        keys.sort_by_key(|p| (p.size(), p.part(0)));
        let mut out = String::new();
        for p in keys {
            writeln!(out, "{} : {}", p, self.mults[p]).unwrap();
        }
        out
    }

    pub fn parse(text: &str, arity: usize, bound: u32) -> Result<SchurDecomp> {
        let mut dec = SchurDecomp::new(arity, bound);
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::Parse { line: idx + 1, msg };
            let (lhs, rhs) = line
                .split_once(':')
                .ok_or_else(|| err("expected `partition : multiplicity`".into()))?;
            let p: Partition = lhs.parse().map_err(|e: Error| err(e.to_string()))?;
            let m: Rational = rhs.parse().map_err(|_| err(format!("bad multiplicity {rhs:?}")))?;
            dec.add(p, m);
        }
        Ok(dec)
    }
}

/// Decomposes a symmetric two-variable series as `sum m(l) S_l(t1, t2)`,
/// using `m(a, b) = c(a, b) - c(a + 1, b - 1)`.
pub fn schur_decompose2(f: &TruncSeries, bound: u32) -> Result<SchurDecomp> {
    if f.arity() != 2 {
        return Err(Error::Dimension(format!(
            "two-variable series expected, got arity {}",
            f.arity()
        )));
    }
    let bound = bound.min(f.bound());
    for (e, c) in f.terms() {
        let (a, b) = (e.0[0], e.0[1]);
        if e.degree() <= bound && f.coeff(&[b, a]) != *c {
            return Err(Error::Asymmetric {
                a: a as u32,
                b: b as u32,
            });
        }
    }
    let mut dec = SchurDecomp::new(2, bound);
    for total in 0..=bound as u16 {
        for b in 0..=total / 2 {
            let a = total - b;
            let mut m = f.coeff(&[a, b]);
            if b > 0 {
                m -= f.coeff(&[a + 1, b - 1]);
            }
            dec.add(Partition::new(vec![a as u32, b as u32])?, m);
        }
    }
    Ok(dec)
}

/// `M'(t, v)` together with the largest partition size it describes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultSeries {
    series: TruncSeries,
    size_bound: u32,
}

impl MultSeries {
    /// Keeps only terms `t^a v^b` with `a + 2b <= size_bound`.
    pub fn new(series: TruncSeries, size_bound: u32) -> Result<Self> {
        if series.arity() != 2 {
            return Err(Error::Dimension("multiplicity series has two variables".into()));
        }
        let mut s = TruncSeries::zero(2, size_bound);
        for (e, c) in series.terms() {
            if (e.0[0] + 2 * e.0[1]) as u32 <= size_bound {
                s.add_term(e.clone(), c.clone());
            }
        }
        Ok(MultSeries {
            series: s,
            size_bound,
        })
    }

    pub fn series(&self) -> &TruncSeries {
        &self.series
    }

    pub fn size_bound(&self) -> u32 {
        self.size_bound
    }

    pub fn coeff(&self, t_exp: u16, v_exp: u16) -> Rational {
        self.series.coeff(&[t_exp, v_exp])
    }
}

pub fn mult_series(dec: &SchurDecomp) -> MultSeries {
    let mut s = TruncSeries::zero(2, dec.bound());
    for (p, m) in dec.iter() {
        let (l1, l2) = (p.part(0) as u16, p.part(1) as u16);
        s.add_term(Monomial(vec![l1 - l2, l2]), m.clone());
    }
    MultSeries {
        series: s,
        size_bound: dec.bound(),
    }
}

/// `f(t1, t2) = (t1 M'(t1, t1 t2) - t2 M'(t2, t1 t2)) / (t1 - t2)`.
pub fn mult_reconstruct(m: &MultSeries, bound: u32) -> TruncSeries {
    let bound = bound.min(m.size_bound());
    let mut numer = SparsePoly::zero(2);
    for (e, c) in m.series().terms() {
        let (a, b) = (e.0[0], e.0[1]);
        if (a + 2 * b) as u32 > bound {
            continue;
        }
        numer.add_term(Monomial(vec![a + b + 1, b]), c.clone());
        numer.add_term(Monomial(vec![b, a + b + 1]), -c);
    }
    let t1_minus_t2 = SparsePoly::from_terms(
        2,
        vec![(vec![1, 0], Rational::one()), (vec![0, 1], Rational::from(-1))],
    );
    let f = numer
        .div_exact(&t1_minus_t2)
        .expect("numerator is antisymmetric, hence divisible by t1 - t2");
    TruncSeries::from_poly(&f, bound)
}

fn poly2(terms: &[(u16, u16, i64)]) -> SparsePoly {
    SparsePoly::from_terms(
        2,
        terms.iter().map(|&(a, b, c)| (vec![a, b], Rational::from(c))),
    )
}

/// Closed form of `M'` for the Hilbert series of the pure trace algebra of
/// two generic 3x3 matrices, in variables `(t, v)`, expanded so that every
/// partition of size at most `size_bound` is covered.
pub fn c32_multiplicity_series(size_bound: u32) -> Result<MultSeries> {
    let om = |a: u16, b: u16| one_minus(2, &[a, b]);
    let third = Rational::frac(1, 3);

    // (1 + v^2 + v^4)((1 + v^2)(1 - t^2 v) + 2tv(1 - v))
    let a_num = &poly2(&[(0, 0, 1), (0, 2, 1), (0, 4, 1)])
        * &(&(&poly2(&[(0, 0, 1), (0, 2, 1)]) * &poly2(&[(0, 0, 1), (2, 1, -1)]))
            + &poly2(&[(1, 1, 2), (1, 2, -2)]));
    let a = RationalFn::new(
        a_num,
        vec![
            om(0, 1),
            om(0, 2),
            om(0, 2),
            om(0, 2),
            om(1, 0),
            om(1, 0),
            om(2, 0),
        ],
    )
    .scale(&third);
    let b = RationalFn::new(
        &poly2(&[(0, 0, 1), (0, 1, -1)]) * &poly2(&[(0, 0, 1), (1, 1, 1)]),
        vec![om(0, 2), om(1, 0), om(2, 0)],
    )
    .scale(&third);
    let c = RationalFn::new(
        &poly2(&[(0, 0, 1), (0, 2, -1)]) * &poly2(&[(0, 0, 1), (1, 1, -1)]),
        vec![om(0, 3), om(3, 0)],
    )
    .scale(&third);
    // v^3 ((1 - v + v^2)(1 - t^2 v^2) + tv(1 - v^2))
    let e_num = &poly2(&[(0, 3, 1)])
        * &(&(&poly2(&[(0, 0, 1), (0, 1, -1), (0, 2, 1)]) * &poly2(&[(0, 0, 1), (2, 2, -1)]))
            + &poly2(&[(1, 1, 1), (1, 3, -1)]));
    let e = RationalFn::new(
        e_num,
        vec![om(0, 1), om(0, 2), om(0, 2), om(0, 4), om(1, 0), om(2, 0), om(1, 1)],
    )
    .scale(&Rational::from(-1));

    let inner = expand_sum(&[a, b, c, e], size_bound)?;
    let outer = RationalFn::new(SparsePoly::one(2), vec![om(0, 2), om(0, 3), om(0, 3)])
        .expand(size_bound)?;
    MultSeries::new(inner.mul(&outer), size_bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmfunc::basis::schur_poly;

    fn series(terms: &[(u16, u16, i64)], bound: u32) -> TruncSeries {
        TruncSeries::from_poly(&poly2(terms), bound)
    }

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn decompose_examples() {
        let dec = schur_decompose2(&series(&[(1, 1, 1)], 4), 4).unwrap();
        assert_eq!(dec.serialize(), "1,1 : 1\n");
        let sq = series(&[(2, 0, 1), (1, 1, 2), (0, 2, 1)], 4);
        let dec = schur_decompose2(&sq, 4).unwrap();
        assert_eq!(dec.get(&part(&[2])), Rational::one());
        assert_eq!(dec.get(&part(&[1, 1])), Rational::one());
        assert_eq!(dec.len(), 2);
    }

    #[test]
    fn asymmetric_input_is_named() {
        let f = series(&[(2, 1, 1)], 4);
        assert_eq!(
            schur_decompose2(&f, 4),
            Err(Error::Asymmetric { a: 2, b: 1 })
        );
    }

    #[test]
    fn cancellation_only_term_is_found() {
        // S_(1,1) - S_(2) has c(1,1) = 0; m(1,1) = 0 - c(2,0) = 1
        let f = series(&[(2, 0, -1), (0, 2, -1)], 3);
        let dec = schur_decompose2(&f, 3).unwrap();
        assert_eq!(dec.get(&part(&[2])), Rational::from(-1));
        assert_eq!(dec.get(&part(&[1, 1])), Rational::one());
    }

    #[test]
    fn reconstruction_examples() {
        let mut dec = SchurDecomp::new(2, 5);
        dec.add(part(&[2]), Rational::one());
        let m = mult_series(&dec);
        assert_eq!(m.coeff(2, 0), Rational::one());
        let f = mult_reconstruct(&m, 5);
        assert_eq!(f.to_poly(), schur_poly(&part(&[2]), 2));

        let mut dec = SchurDecomp::new(2, 5);
        dec.add(part(&[1, 1]), Rational::one());
        let m = mult_series(&dec);
        assert_eq!(m.coeff(0, 1), Rational::one());
        assert_eq!(mult_reconstruct(&m, 5).to_poly(), poly2(&[(1, 1, 1)]));
    }

    #[test]
    fn closed_form_starts_correctly() {
        // constants and the two degree-one traces form W(0) + W(1)
        let m = c32_multiplicity_series(4).unwrap();
        assert_eq!(m.coeff(0, 0), Rational::one());
        assert_eq!(m.coeff(1, 0), Rational::one());
    }

    #[test]
    fn serialization_round_trip() {
        let mut dec = SchurDecomp::new(2, 6);
        dec.add(Partition::empty(), Rational::one());
        dec.add(part(&[3, 1]), Rational::from(2));
        dec.add(part(&[2, 2]), Rational::frac(-1, 2));
        let text = dec.serialize();
        assert_eq!(text, "() : 1\n2,2 : -1/2\n3,1 : 2\n");
        assert_eq!(SchurDecomp::parse(&text, 2, 6).unwrap(), dec);
    }
}
