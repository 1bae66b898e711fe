use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::int_matrix::IntMatrix;
use super::smith::cokernel_group;
use crate::error::{Error, Result};

/// Finitely generated abelian group in invariant-factor form.
///
/// Factors satisfy `d_1 | d_2 | ... | d_k`, none equal to 1; a factor of 0
/// stands for a free summand `Z` (and so sorts last).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    invariant_factors: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn cyclic(order: impl Into<BigInt>) -> Self {
        Self::from_orders([order.into()])
    }

    /// Validates an invariant-factor list.
    pub fn from_invariant_factors(factors: Vec<BigInt>) -> Result<Self> {
        for f in &factors {
            if f.is_one() || *f < BigInt::zero() {
                return Err(Error::InvalidParameter(format!(
                    "invalid invariant factor {f}"
                )));
            }
        }
        for w in factors.windows(2) {
            if !w[1].is_multiple_of(&w[0]) {
                return Err(Error::InvalidParameter(format!(
                    "{} does not divide {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(Self {
            invariant_factors: factors,
        })
    }

    /// Direct sum of cyclic groups of the given orders (0 = free, 1 = trivial),
    /// brought into normal form.
    pub fn from_orders<I: IntoIterator<Item = BigInt>>(orders: I) -> Self {
        let orders: Vec<BigInt> = orders.into_iter().map(|o| o.abs()).collect();
        cokernel_group(&IntMatrix::diagonal(&orders))
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn free_rank(&self) -> usize {
        self.invariant_factors.iter().filter(|d| d.is_zero()).count()
    }

    /// Order of the group, or `None` when it has free rank.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank() > 0 {
            return None;
        }
        Some(self.invariant_factors.iter().product())
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_orders(
            self.invariant_factors
                .iter()
                .chain(&other.invariant_factors)
                .cloned(),
        )
    }

    /// `k`-fold direct sum.
    pub fn power(&self, k: usize) -> Self {
        Self::from_orders(
            std::iter::repeat_n(self.invariant_factors.iter().cloned(), k)
                .flatten(),
        )
    }

    /// `dim_{F_p} (G ⊗ F_p)`.
    pub fn dim_mod_p(&self, p: u64) -> usize {
        let p = BigInt::from(p);
        self.invariant_factors
            .iter()
            .filter(|d| d.is_multiple_of(&p))
            .count()
    }

    /// The `p`-primary part of the torsion subgroup, as prime powers.
    pub fn primary_part(&self, p: u64) -> Self {
        let p = BigInt::from(p);
        Self::from_orders(self.invariant_factors.iter().filter(|d| !d.is_zero()).map(
            |d| {
                let mut d = d.clone();
                let mut part = BigInt::one();
                while d.is_multiple_of(&p) {
                    d /= &p;
                    part *= &p;
                }
                part
            },
        ))
    }

    /// Multiset of factor → multiplicity, in normal-form order.
    pub fn factor_multiplicities(&self) -> Vec<(BigInt, usize)> {
        let mut out: Vec<(BigInt, usize)> = Vec::new();
        for f in &self.invariant_factors {
            match out.last_mut() {
                Some((g, c)) if g == f => *c += 1,
                _ => out.push((f.clone(), 1)),
            }
        }
        out
    }
}

/// `Z3 + Z3`, `Z + Z9`, `0` for the trivial group.
impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "0");
        }
        for (i, d) in self.invariant_factors.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if d.is_zero() {
                write!(f, "Z")?;
            } else {
                write!(f, "Z{d}")?;
            }
        }
        Ok(())
    }
}
