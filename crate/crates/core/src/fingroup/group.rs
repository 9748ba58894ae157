use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exactalg::{QMatrix, Rational};

/// A finite group of invertible rational `n x n` matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatGroup {
    n: usize,
    elements: Vec<QMatrix>,
}

impl MatGroup {
    pub fn trivial(n: usize) -> Self {
        MatGroup {
            n,
            elements: vec![QMatrix::identity(n)],
        }
    }

    /// Multiplicative closure of the generators, breadth first. Fails if
    /// more than `cap` elements appear.
    pub fn close(generators: &[QMatrix], cap: usize) -> Result<Self> {
        let Some(first) = generators.first() else {
            return Err(Error::InvalidArgument(
                "at least one generator is needed to fix the matrix size".into(),
            ));
        };
        let n = first.rows();
        for g in generators {
            if !g.is_square() || g.rows() != n {
                return Err(Error::Dimension(format!(
                    "generators must all be {n}x{n}, found {}x{}",
                    g.rows(),
                    g.cols()
                )));
            }
            if g.det()?.is_zero() {
                return Err(Error::Singular);
            }
        }
        Self::close_unchecked(n, generators, cap)
    }

    fn close_unchecked(n: usize, generators: &[QMatrix], cap: usize) -> Result<Self> {
        let id = QMatrix::identity(n);
        let mut seen: HashSet<QMatrix> = HashSet::from([id.clone()]);
        let mut elements = vec![id];
        let mut frontier = 0;
        while frontier < elements.len() {
            let x = elements[frontier].clone();
            frontier += 1;
            for g in generators {
                let y = x.mul(g);
                if seen.insert(y.clone()) {
                    elements.push(y);
                    if elements.len() > cap {
                        return Err(Error::CapExceeded { cap });
                    }
                }
            }
        }
        Ok(MatGroup { n, elements })
    }

    /// All `n!` permutation matrices.
    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(permutation_matrix(&swap_first_two(n)));
            gens.push(permutation_matrix(&cycle_perm(n)));
        }
        if gens.is_empty() {
            return Self::trivial(n);
        }
        Self::close_unchecked(n, &gens, usize::MAX).expect("symmetric group is finite")
    }

    /// The cyclic group generated by `x1 -> x2 -> ... -> xn -> x1`.
    pub fn cyclic(n: usize) -> Self {
        Self::close_unchecked(n, &[permutation_matrix(&cycle_perm(n))], usize::MAX)
            .expect("cyclic group is finite")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[QMatrix] {
        &self.elements
    }

    /// The conjugate group `p^-1 G p`.
    pub fn conjugate(&self, p: &QMatrix) -> Result<MatGroup> {
        let inv = p.inverse()?;
        Ok(MatGroup {
            n: self.n,
            elements: self.elements.iter().map(|g| inv.mul(g).mul(p)).collect(),
        })
    }

    /// Subgroup generated by a subset of the elements.
    pub fn generated_by(n: usize, gens: &[QMatrix]) -> MatGroup {
        if gens.is_empty() {
            return Self::trivial(n);
        }
        Self::close_unchecked(n, gens, usize::MAX).expect("subgroup of a finite group")
    }
}

fn swap_first_two(n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=n).collect();
    p.swap(0, 1);
    p
}

fn cycle_perm(n: usize) -> Vec<usize> {
    (1..=n).map(|i| i % n + 1).collect()
}

/// Matrix of the substitution `x_j -> x_{perm[j]}` (1-based one-line form).
pub fn permutation_matrix(perm: &[usize]) -> QMatrix {
    let n = perm.len();
    let mut m = QMatrix::zeros(n, n);
    for (j, &i) in perm.iter().enumerate() {
        m.set(i - 1, j, Rational::one());
    }
    m
}

/// Reads generators: first line `n`, then `n x n` blocks of whitespace
/// separated rationals, blocks separated by blank lines. `#` starts a comment.
pub fn parse_generators(text: &str) -> Result<Vec<QMatrix>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()));
    let (first_no, n) = loop {
        match lines.next() {
            Some((_, "")) => continue,
            Some((no, l)) => {
                let n = l.parse::<usize>().map_err(|e| Error::Parse {
                    line: no,
                    msg: format!("expected matrix size: {e}"),
                })?;
                break (no, n);
            }
            None => {
                return Err(Error::Parse {
                    line: 1,
                    msg: "empty group file".into(),
                })
            }
        }
    };
    if n == 0 {
        return Err(Error::Parse {
            line: first_no,
            msg: "matrix size must be positive".into(),
        });
    }
    let mut blocks: Vec<Vec<Vec<Rational>>> = Vec::new();
    let mut current: Vec<Vec<Rational>> = Vec::new();
    let mut last_no = first_no;
    for (no, l) in lines {
        last_no = no;
        if l.is_empty() {
            if !current.is_empty() {
                check_block(&current, n, no)?;
                blocks.push(std::mem::take(&mut current));
            }
            continue;
        }
        let row = l
            .split_whitespace()
            .map(|t| t.parse::<Rational>())
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::Parse {
                line: no,
                msg: e.to_string(),
            })?;
        if row.len() != n {
            return Err(Error::Parse {
                line: no,
                msg: format!("expected {n} entries, found {}", row.len()),
            });
        }
        current.push(row);
    }
    if !current.is_empty() {
        check_block(&current, n, last_no)?;
        blocks.push(current);
    }
    if blocks.is_empty() {
        return Err(Error::Parse {
            line: last_no,
            msg: "no generator matrices".into(),
        });
    }
    blocks.iter().map(|b| QMatrix::from_rows(b)).collect()
}

fn check_block(rows: &[Vec<Rational>], n: usize, line: usize) -> Result<()> {
    if rows.len() != n {
        return Err(Error::Parse {
            line,
            msg: format!("matrix block has {} rows, expected {n}", rows.len()),
        });
    }
    Ok(())
}

pub fn format_generators(gens: &[QMatrix]) -> String {
    let mut out = String::new();
    let n = gens.first().map_or(0, |g| g.rows());
    writeln!(out, "{n}").unwrap();
    for g in gens {
        writeln!(out).unwrap();
        for i in 0..g.rows() {
            let row: Vec<String> = g.row(i).iter().map(|c| c.to_string()).collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_orders() {
        assert_eq!(MatGroup::symmetric(3).order(), 6);
        assert_eq!(MatGroup::symmetric(4).order(), 24);
        let g = QMatrix::from_i64_rows(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(MatGroup::close(std::slice::from_ref(&g), 100).unwrap().order(), 3);
        assert_eq!(MatGroup::cyclic(3).elements()[1], g);
    }

    #[test]
    fn infinite_and_singular_generators() {
        let u = QMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]);
        assert_eq!(MatGroup::close(&[u], 50), Err(Error::CapExceeded { cap: 50 }));
        let s = QMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        assert_eq!(MatGroup::close(&[s], 50), Err(Error::Singular));
    }

    #[test]
    fn group_file_round_trip() {
        let text = "2\n0 1\n1 0\n\n# rotation by pi\n-1 0\n0 -1/1\n";
        let gens = parse_generators(text).unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(parse_generators(&format_generators(&gens)).unwrap(), gens);
        assert_eq!(MatGroup::close(&gens, 10).unwrap().order(), 4);
    }

    #[test]
    fn malformed_group_files() {
        assert!(matches!(parse_generators(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_generators("2\n1 0\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_generators("2\n1 0 0\n0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_generators("2\n1 x\n0 1\n"), Err(Error::Parse { line: 2, .. })));
    }
}
