//! Invariants of finite matrix groups: the action on polynomials, Molien
//! series, the Reynolds projection and degree-by-degree generator search.

use log::warn;

use super::group::MatGroup;
use crate::error::{Error, Result};
use crate::exactalg::{Monomial, QMatrix, Rational, SparseEchelon, SparsePoly, TruncSeries};

/// `g(f)` for the linear substitution `x_j -> sum_i g_ij x_i`.
pub fn act(g: &QMatrix, f: &SparsePoly) -> SparsePoly {
    let n = g.rows();
    let images: Vec<SparsePoly> = (0..n)
        .map(|j| {
            SparsePoly::from_terms(
                n,
                (0..n).map(|i| (Monomial::var(n, i).0, g.get(i, j).clone())),
            )
        })
        .collect();
    f.substitute(&images)
}

/// `(1/|G|) sum_g 1 / det(1 - g t)` to degree `bound`.
pub fn molien(group: &MatGroup, bound: u32) -> TruncSeries {
    let mut acc = TruncSeries::zero(1, bound);
    for g in group.elements() {
        let coeffs = g.det_one_minus_t();
        let p = SparsePoly::from_terms(
            1,
            coeffs
                .into_iter()
                .enumerate()
                .map(|(k, c)| (vec![k as u16], c)),
        );
        let inv = TruncSeries::from_poly(&p, bound)
            .inverse()
            .expect("det(1 - gt) has constant term 1");
        acc = acc.add(&inv);
    }
    acc.scale(&Rational::frac(1, group.order() as i64))
}

/// Group average of `g(f)`.
pub fn reynolds(group: &MatGroup, f: &SparsePoly) -> SparsePoly {
    assert_eq!(f.arity(), group.n(), "polynomial arity must equal the matrix size");
    let mut acc = SparsePoly::zero(f.arity());
    for g in group.elements() {
        for (e, c) in act(g, f).into_terms() {
            acc.add_term(e, c);
        }
    }
    acc.scale(&Rational::frac(1, group.order() as i64))
}

/// Degree-`k` monomials in `n` variables, lexicographic with `x1 > x2 > ...`
/// (so `x1^k` comes first).
pub fn monomials_of_degree(n: usize, k: u32) -> Vec<Monomial> {
    fn rec(i: usize, rest: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if i == n - 1 {
            cur[i] = rest as u16;
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in (0..=rest).rev() {
            cur[i] = e as u16;
            rec(i + 1, rest - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(0, k, &mut vec![0; n], &mut out);
    out
}

/// Dimension of the span of the Reynolds images of all degree-`k` monomials.
pub fn reynolds_rank(group: &MatGroup, k: u32) -> usize {
    let mut ech = SparseEchelon::new();
    for m in monomials_of_degree(group.n(), k) {
        let r = reynolds(group, &SparsePoly::monomial(group.n(), m, Rational::one()));
        ech.insert_rational(r.into_terms());
    }
    ech.rank()
}

/// New generators found in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeGenerators {
    pub degree: u32,
    pub generators: Vec<SparsePoly>,
}

/// Scales so the lexicographically largest term has coefficient 1.
fn monic(p: SparsePoly) -> SparsePoly {
    match p.leading_term().map(|(_, c)| c.clone()) {
        Some(c) => p.scale(&c.recip().expect("nonzero coefficient")),
        None => p,
    }
}

/// Generators of the invariant ring up to degree `max_degree` (default the
/// group order, which always suffices). In each degree the decomposable part
/// is spanned first; then Reynolds images of monomials are tried in the order
/// of [`monomials_of_degree`] and kept when they enlarge the span. The span in
/// each degree is checked against the Molien coefficient.
pub fn extract_generators(group: &MatGroup, max_degree: Option<u32>) -> Result<Vec<DegreeGenerators>> {
    let order = group.order() as u32;
    let max_degree = match max_degree {
        Some(m) if m < order => {
            warn!("degree bound {m} is below the group order {order}; generators may be missed");
            m
        }
        Some(m) => m,
        None => order,
    };
    let n = group.n();
    let hilbert = molien(group, max_degree);
    let mut bases: Vec<Vec<SparsePoly>> = vec![vec![SparsePoly::one(n)]];
    let mut gens: Vec<(u32, SparsePoly)> = Vec::new();
    let mut out = Vec::new();
    for k in 1..=max_degree {
        let target = hilbert
            .coeff(&[k as u16])
            .to_i64()
            .filter(|v| *v >= 0)
            .ok_or_else(|| Error::InvalidArgument("Molien coefficient is not a natural number".into()))?
            as usize;
        let mut ech = SparseEchelon::new();
        let mut basis = Vec::new();
        'products: for (j, g) in &gens {
            for b in &bases[(k - j) as usize] {
                if ech.rank() == target {
                    break 'products;
                }
                let p = g * b;
                if ech.insert_rational(p.terms().map(|(e, c)| (e.clone(), c.clone()))) {
                    basis.push(p);
                }
            }
        }
        let mut fresh = Vec::new();
        if ech.rank() < target {
            for m in monomials_of_degree(n, k) {
                let r = reynolds(group, &SparsePoly::monomial(n, m, Rational::one()));
                if ech.insert_rational(r.terms().map(|(e, c)| (e.clone(), c.clone()))) {
                    let r = monic(r);
                    basis.push(r.clone());
                    fresh.push(r);
                    if ech.rank() == target {
                        break;
                    }
                }
            }
        }
        if ech.rank() != target {
            return Err(Error::Dimension(format!(
                "degree {k}: invariants span {} dimensions, Molien series predicts {target}",
                ech.rank()
            )));
        }
        for f in &fresh {
            gens.push((k, f.clone()));
        }
        if !fresh.is_empty() {
            out.push(DegreeGenerators {
                degree: k,
                generators: fresh,
            });
        }
        bases.push(basis);
    }
    Ok(out)
}

/// Flattened generator degrees, e.g. `[1, 2, 3, 3]`.
pub fn generator_degrees(gens: &[DegreeGenerators]) -> Vec<u32> {
    gens.iter()
        .flat_map(|d| std::iter::repeat_n(d.degree, d.generators.len()))
        .collect()
}

/// Pseudo-reflections of a finite group and whether they generate it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionReport {
    pub reflections: Vec<QMatrix>,
    pub generated_by_reflections: bool,
}

/// A finite-order matrix is a pseudo-reflection iff `rank(g - 1) = 1`.
pub fn reflection_check(group: &MatGroup) -> ReflectionReport {
    let id = QMatrix::identity(group.n());
    let reflections: Vec<QMatrix> = group
        .elements()
        .iter()
        .filter(|g| g.sub(&id).rank() == 1)
        .cloned()
        .collect();
    let sub = MatGroup::generated_by(group.n(), &reflections);
    ReflectionReport {
        generated_by_reflections: sub.order() == group.order(),
        reflections,
    }
}

/// Writes a homogeneous `f` as a polynomial in homogeneous `gens`. Returns
/// the coefficients of the products `prod gens[i]^{e_i}` as
/// `(e, coefficient)` pairs, or `None` if `f` is outside the subalgebra.
pub fn express_in_subalgebra(gens: &[SparsePoly], f: &SparsePoly) -> Option<Vec<(Vec<u16>, Rational)>> {
    if f.is_zero() {
        return Some(Vec::new());
    }
    let deg = f.total_degree()?;
    let weights: Vec<u32> = gens
        .iter()
        .map(|g| g.total_degree().expect("nonzero generator"))
        .collect();
    let mut exps = Vec::new();
    weighted_compositions(&weights, deg, 0, &mut vec![0; gens.len()], &mut exps);
    let products: Vec<SparsePoly> = exps
        .iter()
        .map(|e| {
            e.iter()
                .zip(gens)
                .fold(SparsePoly::one(f.arity()), |acc, (&k, g)| &acc * &g.pow(k as u32))
        })
        .collect();
    let mut keys: Vec<Monomial> = products
        .iter()
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
        .chain(f.terms().map(|(m, _)| m.clone()))
        .collect();
    keys.sort();
    keys.dedup();
    let m = QMatrix::from_fn(keys.len(), products.len(), |i, j| products[j].coeff(&keys[i].0));
    let rhs: Vec<Rational> = keys.iter().map(|k| f.coeff(&k.0)).collect();
    let sol = m.solve(&rhs)?;
    Some(
        exps.into_iter()
            .zip(sol)
            .filter(|(_, c)| !c.is_zero())
            .collect(),
    )
}

fn weighted_compositions(w: &[u32], rest: u32, i: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
    if i == w.len() {
        if rest == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let mut k = 0;
    while k * w[i] <= rest {
        cur[i] = k as u16;
        weighted_compositions(w, rest - k * w[i], i + 1, cur, out);
        k += 1;
    }
    cur[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rf_expand, RationalFn};

    fn x(i: usize) -> SparsePoly {
        SparsePoly::var(3, i)
    }

    fn partition_series(parts: &[u16], numerator: SparsePoly, bound: u32) -> TruncSeries {
        let exps: Vec<Vec<u16>> = parts.iter().map(|&p| vec![p]).collect();
        let f = RationalFn::inverse_product(1, &exps).with_numerator(numerator);
        rf_expand(&f, bound).unwrap()
    }

    #[test]
    fn molien_closed_forms() {
        assert_eq!(molien(&MatGroup::symmetric(3), 8), partition_series(&[1, 2, 3], SparsePoly::one(1), 8));
        let one_plus_t3 = SparsePoly::from_terms(1, vec![(vec![0], Rational::one()), (vec![3], Rational::one())]);
        assert_eq!(molien(&MatGroup::cyclic(3), 8), partition_series(&[1, 2, 3], one_plus_t3, 8));
        assert_eq!(molien(&MatGroup::trivial(2), 5), partition_series(&[1, 1], SparsePoly::one(1), 5));
    }

    #[test]
    fn reynolds_examples() {
        let c3 = MatGroup::cyclic(3);
        let f4 = &(&(&x(0).pow(2) * &x(1)) + &(&x(1).pow(2) * &x(2))) + &(&x(2).pow(2) * &x(0));
        assert_eq!(reynolds(&c3, &(&x(0).pow(2) * &x(1))), f4.scale(&Rational::frac(1, 3)));
        assert_eq!(reynolds(&c3, &f4), f4);
        let e1 = &(&x(0) + &x(1)) + &x(2);
        assert_eq!(reynolds(&MatGroup::symmetric(3), &x(0)), e1.scale(&Rational::frac(1, 3)));
    }

    #[test]
    fn generator_degrees_examples() {
        let c3 = extract_generators(&MatGroup::cyclic(3), None).unwrap();
        assert_eq!(generator_degrees(&c3), vec![1, 2, 3, 3]);
        let s3 = extract_generators(&MatGroup::symmetric(3), None).unwrap();
        assert_eq!(generator_degrees(&s3), vec![1, 2, 3]);
        let triv = extract_generators(&MatGroup::trivial(2), None).unwrap();
        assert_eq!(triv[0].generators, vec![SparsePoly::var(2, 0), SparsePoly::var(2, 1)]);
    }

    #[test]
    fn reflection_dichotomy() {
        let s3 = reflection_check(&MatGroup::symmetric(3));
        assert!(s3.generated_by_reflections);
        assert_eq!(s3.reflections.len(), 3);
        let c3 = reflection_check(&MatGroup::cyclic(3));
        assert!(!c3.generated_by_reflections);
        assert!(c3.reflections.is_empty());
        assert!(reflection_check(&MatGroup::trivial(3)).generated_by_reflections);
    }

    #[test]
    fn subalgebra_expression() {
        // x1^2 + x2^2 + x3^2 = e1^2 - 2 e2
        let e1 = &(&x(0) + &x(1)) + &x(2);
        let e2 = &(&(&x(0) * &x(1)) + &(&x(0) * &x(2))) + &(&x(1) * &x(2));
        let p2 = &(&x(0).pow(2) + &x(1).pow(2)) + &x(2).pow(2);
        let mut sol = express_in_subalgebra(&[e1.clone(), e2.clone()], &p2).unwrap();
        sol.sort();
        assert_eq!(sol, vec![(vec![0, 1], Rational::from(-2)), (vec![2, 0], Rational::one())]);
        assert!(express_in_subalgebra(&[e1, e2], &(&x(0) * &x(0))).is_none());
    }
}
