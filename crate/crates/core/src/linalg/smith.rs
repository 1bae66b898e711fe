use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::abelian::AbelianGroup;
use super::int_matrix::IntMatrix;

/// Result of a Smith normal form computation: `left * m * right` is diagonal
/// with entries `diagonal`, each dividing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }
}

/// Smith normal form with unimodular transforms.
///
/// Pivots on the nonzero entry of least absolute value in the trailing
/// submatrix to keep entries small.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);
    let steps = rows.min(cols);

    for t in 0..steps {
        let Some((pi, pj)) = min_abs_entry(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        left.swap_rows(t, pi);
        a.swap_cols(t, pj);
        right.swap_cols(t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&a[(t, t)]);
                a.add_row_multiple(i, t, &q);
                left.add_row_multiple(i, t, &q);
                if !a[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&a[(t, t)]);
                a.add_col_multiple(j, t, &q);
                right.add_col_multiple(j, t, &q);
                if !a[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                // Pivot must divide the whole trailing block.
                let offender = (t + 1..rows).find_map(|i| {
                    (t + 1..cols)
                        .find(|&j| !a[(i, j)].is_multiple_of(&a[(t, t)]))
                        .map(|_| i)
                });
                match offender {
                    None => break,
                    Some(i) => {
                        let one = BigInt::from(1);
                        a.add_row_multiple(t, i, &one);
                        left.add_row_multiple(t, i, &one);
                    }
                }
            }
            // Re-pivot on the smallest entry of row t / column t.
            if let Some((pi, pj)) = min_abs_cross(&a, t) {
                a.swap_rows(t, pi);
                left.swap_rows(t, pi);
                a.swap_cols(t, pj);
                right.swap_cols(t, pj);
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
    }

    let diagonal = (0..steps).map(|i| a[(i, i)].clone()).collect();
    SmithForm {
        diagonal,
        left,
        right,
    }
}

fn min_abs_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            if a[(i, j)].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn min_abs_cross(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let col = (t..a.rows()).map(|i| (i, t));
    let row = (t + 1..a.cols()).map(|j| (t, j));
    col.chain(row)
        .filter(|&(i, j)| !a[(i, j)].is_zero())
        .min_by(|&(i, j), &(k, l)| a[(i, j)].abs().cmp(&a[(k, l)].abs()))
}

/// The group `Z^cols / (row space of m)`.
pub fn cokernel_group(m: &IntMatrix) -> AbelianGroup {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    let mut factors: Vec<BigInt> = snf
        .diagonal
        .into_iter()
        .filter(|d| !d.is_zero() && *d != BigInt::from(1))
        .collect();
    factors.extend(std::iter::repeat_n(BigInt::zero(), m.cols() - rank));
    AbelianGroup::from_invariant_factors(factors)
        .expect("Smith normal form yields a divisibility chain")
}
