//! Cayley-Hamilton type identities for 2x2 matrices, the defining relations
//! of the invariants of several traceless 2x2 matrices, and the quadratic
//! relation among generators of the invariants of two 3x3 matrices.
//!
//! Relations in many variables are checked at seeded random rational
//! specializations; each sample is evaluated exactly.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::expr::{tr, TraceExpr};
use super::generic::{eval_generic, Evaluated, Evaluator};
use crate::error::Result;
use crate::exactalg::{QMatrix, Rational};
use crate::symmfunc::perm_sign;

/// Default seed for randomized checks.
pub const DEFAULT_SEED: u64 = 20_240_917;
/// Entries of random specializations are integers in `[-RANGE, RANGE]`.
pub const SAMPLE_RANGE: i64 = 9;

/// `count` random `n x n` rational matrices for sample number `sample`. The
/// stream depends only on `(seed, sample)`, so samples can be drawn in any
/// order or in parallel.
pub fn random_matrices(n: usize, count: usize, traceless: bool, seed: u64, sample: u64) -> Vec<QMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(sample);
    (0..count)
        .map(|_| {
            let mut m = QMatrix::zeros(n, n);
            for p in 0..n {
                for q in 0..n {
                    m.set(p, q, Rational::from(rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE)));
                }
            }
            if traceless {
                let rest: Rational = (0..n - 1).map(|i| m.get(i, i).clone()).sum();
                m.set(n - 1, n - 1, -rest);
            }
            m
        })
        .collect()
}

/// `X1 X2 + X2 X1 - tr(X1) X2 - tr(X2) X1 + tr(X1) tr(X2) - tr(X1 X2)`.
pub fn psi2() -> TraceExpr {
    let w = |l: &[u8]| TraceExpr::word(l).expect("valid word");
    w(&[1, 2])
        .add(&w(&[2, 1]))
        .sub(&tr(&[1]).mul(&w(&[2])))
        .sub(&tr(&[2]).mul(&w(&[1])))
        .add(&tr(&[1]).mul(&tr(&[2])))
        .sub(&tr(&[1, 2]))
}

/// `tr(psi2 * X3)`.
pub fn phi2() -> TraceExpr {
    psi2().mul(&TraceExpr::word(&[3]).unwrap()).tr(2)
}

/// `tr(s3(Ya, Yb, Yc))` with the standard polynomial `s3`.
pub fn tr_s3(a: u8, b: u8, c: u8) -> TraceExpr {
    let args = [a, b, c];
    let mut e = TraceExpr::zero();
    for p in (0..3).permutations(3) {
        let w = [args[p[0]], args[p[1]], args[p[2]]];
        e = e.add(&tr(&w).scale(&Rational::from(perm_sign(&p))));
    }
    e
}

fn det2(m: [[&TraceExpr; 2]; 2]) -> TraceExpr {
    m[0][0].mul(m[1][1]).sub(&m[0][1].mul(m[1][0]))
}

fn det3(m: [[&TraceExpr; 3]; 3]) -> TraceExpr {
    let mut out = TraceExpr::zero();
    for p in (0..3).permutations(3) {
        let sign = perm_sign(&p);
        let term = m[0][p[0]].mul(m[1][p[1]]).mul(m[2][p[2]]);
        out = out.add(&term.scale(&Rational::from(sign)));
    }
    out
}

/// First family: `tr s3(Yi,Yj,Yk) tr s3(Yp,Yq,Yr) + 18 det[tr(Ya Yb)]`,
/// rows `a in (i,j,k)`, columns `b in (p,q,r)`.
pub fn drensky_first(ijk: [u8; 3], pqr: [u8; 3]) -> TraceExpr {
    let t: Vec<Vec<TraceExpr>> = ijk
        .iter()
        .map(|&a| pqr.iter().map(|&b| tr(&[a, b])).collect())
        .collect();
    let gram = det3([
        [&t[0][0], &t[0][1], &t[0][2]],
        [&t[1][0], &t[1][1], &t[1][2]],
        [&t[2][0], &t[2][1], &t[2][2]],
    ]);
    tr_s3(ijk[0], ijk[1], ijk[2])
        .mul(&tr_s3(pqr[0], pqr[1], pqr[2]))
        .add(&gram.scale(&Rational::from(18)))
}

/// Second family: the alternating sum
/// `tr(YpYi) tr s3(Yj,Yk,Yl) - tr(YpYj) tr s3(Yi,Yk,Yl) + ...`.
pub fn drensky_second(p: u8, ijkl: [u8; 4]) -> TraceExpr {
    let mut out = TraceExpr::zero();
    for drop in 0..4 {
        let rest: Vec<u8> = (0..4).filter(|&x| x != drop).map(|x| ijkl[x]).collect();
        let term = tr(&[p, ijkl[drop]]).mul(&tr_s3(rest[0], rest[1], rest[2]));
        out = if drop % 2 == 0 { out.add(&term) } else { out.sub(&term) };
    }
    out
}

/// All relations of both families for `d` matrices, with a notice for each
/// family that needs more matrices than available.
pub fn drensky_relations(d: usize) -> (Vec<TraceExpr>, Vec<String>) {
    let mut rels = Vec::new();
    let mut notices = Vec::new();
    let letters: Vec<u8> = (1..=d as u8).collect();
    if d >= 3 {
        let triples: Vec<Vec<u8>> = letters.iter().copied().combinations(3).collect();
        for a in &triples {
            for b in &triples {
                rels.push(drensky_first([a[0], a[1], a[2]], [b[0], b[1], b[2]]));
            }
        }
    } else {
        notices.push(format!("first family needs d >= 3 (d = {d}); skipped"));
    }
    if d >= 4 {
        for q in letters.iter().copied().combinations(4) {
            for &p in &letters {
                rels.push(drensky_second(p, [q[0], q[1], q[2], q[3]]));
            }
        }
    } else {
        notices.push(format!("second family needs d >= 4 (d = {d}); skipped"));
    }
    (rels, notices)
}

/// Result of a randomized relation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub relations: usize,
    pub samples: usize,
    pub seed: u64,
    /// `(relation index, sample index)` of the first nonzero evaluation.
    pub first_failure: Option<(usize, u64)>,
    pub notices: Vec<String>,
}

impl RelationReport {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Evaluates every relation at `samples` random traceless specializations.
pub fn check_at_samples(
    rels: &[TraceExpr],
    n: usize,
    d: usize,
    samples: usize,
    seed: u64,
) -> Result<Option<(usize, u64)>> {
    let failures: Vec<Option<(usize, u64)>> = (0..samples as u64)
        .into_par_iter()
        .map(|s| -> Result<Option<(usize, u64)>> {
            let mut ev = Evaluator::new(random_matrices(n, d, true, seed, s))?;
            for (i, r) in rels.iter().enumerate() {
                if !ev.eval(r)?.is_zero() {
                    return Ok(Some((i, s)));
                }
            }
            Ok(None)
        })
        .collect::<Result<_>>()?;
    Ok(failures.into_iter().flatten().min_by_key(|&(i, s)| (s, i)))
}

pub fn drensky_relations_check(d: usize, samples: usize, seed: u64) -> Result<RelationReport> {
    let (rels, notices) = drensky_relations(d);
    let first_failure = if rels.is_empty() {
        None
    } else {
        check_at_samples(&rels, 2, d, samples, seed)?
    };
    Ok(RelationReport {
        relations: rels.len(),
        samples,
        seed,
        first_failure,
        notices,
    })
}

/// Full symbolic check of the relations on generic traceless matrices.
pub fn drensky_relations_symbolic(d: usize) -> Result<bool> {
    let (rels, _) = drensky_relations(d);
    for r in &rels {
        let Evaluated::Scalar(p) = eval_generic(r, 2, true)? else {
            unreachable!("relations are pure");
        };
        if !p.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Coefficients of `W1, W2, W3', W3'', W4, W5, W6, W7` in the relation
/// `W^2 = sum c_i W_i`.
pub fn ads_coefficients() -> [Rational; 8] {
    [
        Rational::frac(1, 27),
        Rational::frac(-2, 9),
        Rational::frac(4, 15),
        Rational::frac(1, 90),
        Rational::frac(1, 3),
        Rational::frac(-2, 3),
        Rational::frac(-1, 3),
        Rational::frac(-4, 27),
    ]
}

/// The generator `W` of degree (3, 3) and the elements `W1, ..., W7` in
/// traceless letters 1, 2.
pub struct AdsElements {
    pub w: TraceExpr,
    pub parts: [TraceExpr; 8],
}

pub fn ads_elements() -> AdsElements {
    let t = |w: &[u8]| tr(w);
    let (a2, ab, b2) = (t(&[1, 1]), t(&[1, 2]), t(&[2, 2]));
    let (a3, a2b, ab2, b3) = (t(&[1, 1, 1]), t(&[1, 1, 2]), t(&[1, 2, 2]), t(&[2, 2, 2]));
    let u = det2([[&a2, &ab], [&ab, &b2]]);
    let v = t(&[1, 1, 2, 2]).sub(&t(&[1, 2, 1, 2]));
    let w = t(&[1, 1, 2, 2, 1, 2]).sub(&t(&[2, 2, 1, 1, 2, 1]));
    let cubic = det3([[&a2, &ab, &b2], [&a3, &a2b, &ab2], [&a2b, &ab2, &b3]]);
    let w1 = u.pow(3);
    let w2 = u.pow(2).mul(&v);
    let w3p = u.mul(&cubic);
    let f = b2.pow(3);
    let g = b3.pow(2);
    let mut w3pp = TraceExpr::zero();
    for i in 0..=6u32 {
        let term = f.delta_pow(i).mul(&g.delta_pow(6 - i));
        w3pp = if i % 2 == 0 { w3pp.add(&term) } else { w3pp.sub(&term) };
    }
    let w3pp = w3pp.scale(&Rational::frac(1, 144));
    let w4 = u.mul(&v.pow(2));
    let w5 = v.mul(&cubic);
    let w6 = det2([[&a3, &ab2], [&a2b, &b3]]).pow(2).sub(
        &det2([[&b3, &ab2], [&ab2, &a2b]])
            .mul(&det2([[&a3, &a2b], [&a2b, &ab2]]))
            .scale(&Rational::from(4)),
    );
    let w7 = v.pow(3);
    AdsElements {
        w,
        parts: [w1, w2, w3p, w3pp, w4, w5, w6, w7],
    }
}

/// `W^2 - sum c_i W_i` for the given coefficients.
pub fn ads_relation(coefficients: &[Rational; 8]) -> TraceExpr {
    let el = ads_elements();
    let mut rhs = TraceExpr::zero();
    for (c, p) in coefficients.iter().zip(&el.parts) {
        rhs = rhs.add(&p.scale(c));
    }
    el.w.pow(2).sub(&rhs)
}

pub fn ads_relation_check_with(coefficients: &[Rational; 8], samples: usize, seed: u64) -> Result<RelationReport> {
    let rel = ads_relation(coefficients);
    let first_failure = check_at_samples(std::slice::from_ref(&rel), 3, 2, samples, seed)?;
    Ok(RelationReport {
        relations: 1,
        samples,
        seed,
        first_failure,
        notices: Vec::new(),
    })
}

pub fn ads_relation_check(samples: usize, seed: u64) -> Result<RelationReport> {
    ads_relation_check_with(&ads_coefficients(), samples, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tracealg::generic::verify_zero;

    #[test]
    fn cayley_hamilton_2x2() {
        assert!(verify_zero(&psi2(), 2).unwrap());
        assert!(verify_zero(&phi2(), 2).unwrap());
        assert!(!verify_zero(&psi2(), 3).unwrap());
        assert_eq!(phi2().len(), 6);
    }

    #[test]
    fn tr_s3_is_alternating() {
        assert_eq!(tr_s3(1, 2, 3), tr_s3(2, 1, 3).scale(&Rational::from(-1)));
        // tr s3 = 3 (tr(abc) - tr(acb))
        let e = tr(&[1, 2, 3]).sub(&tr(&[1, 3, 2])).scale(&Rational::from(3));
        assert_eq!(tr_s3(1, 2, 3), e);
    }

    #[test]
    fn random_stream_is_per_sample() {
        let a = random_matrices(3, 2, true, 7, 4);
        assert_eq!(a, random_matrices(3, 2, true, 7, 4));
        assert_ne!(a, random_matrices(3, 2, true, 7, 5));
        assert!(a.iter().all(|m| m.trace().is_zero()));
    }

    #[test]
    fn drensky_small_cases() {
        assert!(drensky_relations_check(3, 5, DEFAULT_SEED).unwrap().holds());
        let r = drensky_relations_check(2, 5, DEFAULT_SEED).unwrap();
        assert_eq!(r.relations, 0);
        assert_eq!(r.notices.len(), 2);
        assert!(drensky_relations_symbolic(3).unwrap());
    }

    #[test]
    fn relations_vanish_at_zero() {
        let zero = vec![QMatrix::zeros(2, 2); 4];
        let (rels, _) = drensky_relations(4);
        let mut ev = Evaluator::new(zero).unwrap();
        assert!(rels.iter().all(|r| ev.eval(r).unwrap().is_zero()));
        let mut ev = Evaluator::new(vec![QMatrix::zeros(3, 3); 2]).unwrap();
        assert!(ev.eval(&ads_relation(&ads_coefficients())).unwrap().is_zero());
    }
}
