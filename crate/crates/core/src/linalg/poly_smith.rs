use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::int_matrix::IntMatrix;
use super::poly::RatPoly;
use crate::error::{Error, Result};

/// Matrix over Q[t].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RatPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<RatPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidMatrix(format!(
                "{} entries for a {}x{} polynomial matrix",
                entries.len(),
                rows,
                cols
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn diagonal(diag: Vec<RatPoly>) -> Self {
        let n = diag.len();
        let mut entries = vec![RatPoly::zero(); n * n];
        for (i, d) in diag.into_iter().enumerate() {
            entries[i * n + i] = d;
        }
        Self {
            rows: n,
            cols: n,
            entries,
        }
    }

    /// `t * a - b` for integer matrices of equal shape.
    pub fn pencil(a: &IntMatrix, b: &IntMatrix) -> Self {
        assert_eq!((a.rows(), a.cols()), (b.rows(), b.cols()));
        let entries = a
            .entries()
            .iter()
            .zip(b.entries())
            .map(|(x, y)| RatPoly::linear(x, &-y))
            .collect();
        Self {
            rows: a.rows(),
            cols: a.cols(),
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RatPoly {
        &self.entries[i * self.cols + j]
    }

    fn set(&mut self, i: usize, j: usize, v: RatPoly) {
        self.entries[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] -= q * row[src]
    fn sub_row_multiple(&mut self, dst: usize, src: usize, q: &RatPoly) {
        for j in 0..self.cols {
            let v = self.get(dst, j).sub(&q.mul(self.get(src, j)));
            self.set(dst, j, v);
        }
    }

    /// col[dst] -= q * col[src]
    fn sub_col_multiple(&mut self, dst: usize, src: usize, q: &RatPoly) {
        for i in 0..self.rows {
            let v = self.get(i, dst).sub(&q.mul(self.get(i, src)));
            self.set(i, dst, v);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize) {
        for j in 0..self.cols {
            let v = self.get(dst, j).add(self.get(src, j));
            self.set(dst, j, v);
        }
    }

    /// Determinant by Laplace expansion along columns.
    pub fn det(&self) -> RatPoly {
        assert_eq!(self.rows, self.cols);
        fn go(m: &PolyMatrix, rows: &[usize], col: usize) -> RatPoly {
            if rows.is_empty() {
                return RatPoly::one();
            }
            let mut acc = RatPoly::zero();
            for (k, &r) in rows.iter().enumerate() {
                let e = m.get(r, col);
                if e.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
                let term = e.mul(&go(m, &rest, col + 1));
                acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
        let rows: Vec<usize> = (0..self.rows).collect();
        go(self, &rows, 0)
    }
}

/// Invariant factors of a finitely generated Q[t]-module.
///
/// Each factor is monic and divides the next; units are dropped. A zero
/// polynomial stands for a free summand and sorts last.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModuleDecomposition {
    pub invariant_factors: Vec<RatPoly>,
}

impl ModuleDecomposition {
    /// Number of cyclic summands.
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Product of the torsion invariant factors (the order ideal generator).
    pub fn order(&self) -> RatPoly {
        self.invariant_factors
            .iter()
            .filter(|f| !f.is_zero())
            .fold(RatPoly::one(), |acc, f| acc.mul(f))
    }
}

impl fmt::Display for ModuleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "0");
        }
        for (i, p) in self.invariant_factors.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if p.is_zero() {
                write!(f, "Q[t]")?;
            } else {
                write!(f, "Q[t]/({p})")?;
            }
        }
        Ok(())
    }
}

/// Smith normal form over the Euclidean domain Q[t], presenting the module
/// `Q[t]^cols / (row space)`.
pub fn poly_smith_normal_form(m: &PolyMatrix) -> ModuleDecomposition {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let steps = rows.min(cols);
    let mut diag = Vec::with_capacity(cols);

    for t in 0..steps {
        let Some((pi, pj)) = min_degree_entry(&a, t..rows, t..cols) else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let (q, r) = a.get(i, t).div_rem(a.get(t, t));
                a.sub_row_multiple(i, t, &q);
                if !r.is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let (q, r) = a.get(t, j).div_rem(a.get(t, t));
                a.sub_col_multiple(j, t, &q);
                if !r.is_zero() {
                    clean = false;
                }
            }
            if clean {
                let pivot = a.get(t, t).clone();
                let offender = (t + 1..rows)
                    .find(|&i| (t + 1..cols).any(|j| !pivot.divides(a.get(i, j))));
                match offender {
                    None => break,
                    Some(i) => a.add_row(t, i),
                }
            }
            let cross = (t..rows)
                .map(|i| (i, t))
                .chain((t + 1..cols).map(|j| (t, j)))
                .filter(|&(i, j)| !a.get(i, j).is_zero())
                .min_by_key(|&(i, j)| a.get(i, j).degree());
            if let Some((i, j)) = cross {
                a.swap_rows(t, i);
                a.swap_cols(t, j);
            }
        }
        diag.push(a.get(t, t).monic());
    }
    // columns never touched by a pivot are free
    while diag.len() < cols {
        diag.push(RatPoly::zero());
    }
    let invariant_factors = diag
        .into_iter()
        .filter(|f| f.is_zero() || !f.is_constant())
        .collect();
    ModuleDecomposition { invariant_factors }
}

fn min_degree_entry(
    a: &PolyMatrix,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if a.get(i, j).is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| a.get(i, j).degree() < a.get(bi, bj).degree()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Convenience for tests and callers: nonzero rational scalar relating two
/// polynomials, if one is a scalar multiple of the other.
pub fn scalar_ratio(a: &RatPoly, b: &RatPoly) -> Option<BigRational> {
    if a.is_zero() || b.is_zero() || a.degree() != b.degree() {
        return None;
    }
    let r = a.leading() / b.leading();
    if a.sub(&b.scale(&r)).is_zero() && !r.is_zero() {
        Some(r)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn already_diagonal() {
        let m = PolyMatrix::diagonal(vec![p(&[-1, 1]), p(&[-1, 1]).mul(&p(&[-2, 1]))]);
        let d = poly_smith_normal_form(&m);
        assert_eq!(
            d.invariant_factors,
            vec![p(&[-1, 1]), p(&[2, -3, 1])]
        );
    }

    #[test]
    fn stevedore_pencil() {
        let a = IntMatrix::from_rows(&[[2, 1], [0, -1]]);
        let m = PolyMatrix::pencil(&a, &a.transpose());
        let d = poly_smith_normal_form(&m);
        assert_eq!(d.invariant_factors, vec![p(&[2, -5, 2]).monic()]);
        assert_eq!(d.to_string(), "Q[t]/(t^2 - 5/2 t + 1)");
        assert!(scalar_ratio(&d.order(), &m.det()).is_some());
    }

    #[test]
    fn units_and_free_parts() {
        let unit = PolyMatrix::diagonal(vec![p(&[7])]);
        assert!(poly_smith_normal_form(&unit).is_trivial());
        let free = PolyMatrix::new(1, 2, vec![p(&[0, 1]), RatPoly::zero()]).unwrap();
        let d = poly_smith_normal_form(&free);
        assert_eq!(d.invariant_factors, vec![p(&[0, 1]), RatPoly::zero()]);
        assert_eq!(d.to_string(), "Q[t]/(t) + Q[t]");
        let split = PolyMatrix::diagonal(vec![p(&[-2, 1]), p(&[-3, 1])]);
        assert_eq!(
            poly_smith_normal_form(&split).invariant_factors,
            vec![p(&[-2, 1]).mul(&p(&[-3, 1]))]
        );
    }

    #[test]
    fn det_laplace() {
        let a = IntMatrix::from_rows(&[[0, 1], [2, 0]]);
        let m = PolyMatrix::pencil(&a, &a.transpose());
        // (t - 2)(2t - 1) up to sign
        let expect = p(&[-2, 1]).mul(&p(&[-1, 2]));
        assert!(scalar_ratio(&m.det(), &expect).is_some());
        let unit: RatPoly = PolyMatrix::diagonal(vec![]).det();
        assert_eq!(unit, RatPoly::constant(BigRational::one()));
    }
}
