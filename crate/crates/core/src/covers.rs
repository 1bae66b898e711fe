//! Homology of cyclic branched covers, eigenspace Betti numbers of the deck
//! transformation, and Alexander-module invariants.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knots::{DecoratedKnot, SeifertMatrix};
use crate::linalg::factor::factor_rational_poly;
use crate::linalg::modp::{is_prime, mul_mod, pow_mod};
use crate::linalg::{
    cokernel_group, poly_smith_normal_form, rank_mod_p, AbelianGroup, IntMatrix,
    ModuleDecomposition, PolyMatrix, RatPoly,
};

/// Largest summand count expanded into explicit groups or modules.
pub const MAX_EXPANDED_SUMMANDS: u64 = 4096;

/// Largest prime for which roots of unity are searched exhaustively.
pub const MAX_ROOT_SEARCH_PRIME: u64 = 10_000;

/// `Γ = (V^T - V)^{-1} V^T`; rejects `V` with `V - V^T` not unimodular.
pub fn gamma_matrix(v: &IntMatrix) -> Result<IntMatrix> {
    if !v.is_square() {
        return Err(Error::NotSeifert("matrix is not square".into()));
    }
    let vt = v.transpose();
    let inv = vt
        .sub(v)
        .inverse_unimodular()
        .map_err(|_| Error::NotSeifert("V - V^T is not unimodular".into()))?;
    Ok(inv.mul(&vt))
}

/// Presentation matrix `Γ^n - (Γ - I)^n` of `H_1` of the `n`-fold cover.
pub fn cover_presentation(k: &SeifertMatrix, n: u32) -> Result<IntMatrix> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("cover order {n} < 2")));
    }
    let g = gamma_matrix(k.matrix())?;
    let shifted = g.sub(&IntMatrix::identity(g.rows()));
    Ok(g.pow(n).sub(&shifted.pow(n)))
}

/// `H_1` of the `n`-fold cyclic branched cover.
///
/// For `n = 2` the result is cross-checked against `V + V^T`.
pub fn branched_cover_homology(k: &SeifertMatrix, n: u32) -> Result<AbelianGroup> {
    let h = cokernel_group(&cover_presentation(k, n)?);
    if n == 2 {
        let v = k.matrix();
        let direct = cokernel_group(&v.add(&v.transpose()));
        if direct != h {
            return Err(Error::InvariantViolation(format!(
                "double cover: Γ route gives {h}, V + V^T gives {direct}"
            )));
        }
    }
    Ok(h)
}

/// [`branched_cover_homology`] of the whole connected sum.
pub fn knot_cover_homology(k: &DecoratedKnot, n: u32) -> Result<AbelianGroup> {
    let single = branched_cover_homology(k.seifert(), n)?;
    Ok(single.power(expandable(k.summands())?))
}

fn expandable(summands: u64) -> Result<usize> {
    if summands > MAX_EXPANDED_SUMMANDS {
        return Err(Error::TooLarge(format!(
            "{summands} summands (at most {MAX_EXPANDED_SUMMANDS} are expanded)"
        )));
    }
    Ok(summands as usize)
}

/// All `ζ` in `F_p` with `ζ^n = 1`, ascending.
pub fn roots_of_unity(n: u64, p: u64) -> Result<Vec<u64>> {
    check_prime(p)?;
    if p > MAX_ROOT_SEARCH_PRIME {
        return Err(Error::TooLarge(format!(
            "root search in F_{p} (limit {MAX_ROOT_SEARCH_PRIME})"
        )));
    }
    Ok((1..p).filter(|&z| pow_mod(z, n, p) == 1).collect())
}

/// Smallest element of multiplicative order exactly `n` in `F_p`.
pub fn primitive_root_of_unity(n: u64, p: u64) -> Result<u64> {
    roots_of_unity(n, p)?
        .into_iter()
        .find(|&z| multiplicative_order(z, p) == n)
        .ok_or(Error::NoPrimitiveRoot { n, p })
}

pub fn multiplicative_order(z: u64, p: u64) -> u64 {
    let mut acc = z % p;
    let mut k = 1;
    while acc != 1 {
        acc = mul_mod(acc, z, p);
        k += 1;
        if k > p {
            return 0;
        }
    }
    k
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn check_eigen_params(n: u64, p: u64, zeta: u64) -> Result<u64> {
    check_prime(p)?;
    if n < 2 {
        return Err(Error::InvalidParameter(format!("cover order {n} < 2")));
    }
    if n.is_multiple_of(p) {
        return Err(Error::InvalidParameter(format!(
            "cover order {n} is divisible by {p}"
        )));
    }
    let z = zeta % p;
    if z == 0 || pow_mod(z, n, p) != 1 {
        return Err(Error::NotRootOfUnity { zeta, n, p });
    }
    Ok(z)
}

/// `β^ζ` of the `n`-fold cover over `F_p`: the corank of `ζV - V^T`, and 0
/// for `ζ = 1`.
pub fn eigenspace_betti(k: &SeifertMatrix, n: u64, p: u64, zeta: u64) -> Result<usize> {
    let z = check_eigen_params(n, p, zeta)?;
    if z == 1 {
        return Ok(0);
    }
    let v = k.matrix();
    let m = v.scale(&BigInt::from(z)).sub(&v.transpose());
    Ok(k.size() - rank_mod_p(&m, p)?)
}

/// [`eigenspace_betti`] of the whole connected sum.
pub fn knot_eigenspace_betti(k: &DecoratedKnot, n: u64, p: u64, zeta: u64) -> Result<BigInt> {
    Ok(BigInt::from(eigenspace_betti(k.seifert(), n, p, zeta)?) * k.summands())
}

/// `dim H_1(M_n; F_p)` of the whole connected sum, from the cover homology.
pub fn knot_betti_mod_p(k: &DecoratedKnot, n: u32, p: u64) -> Result<BigInt> {
    check_prime(p)?;
    let h = branched_cover_homology(k.seifert(), n)?;
    Ok(BigInt::from(h.dim_mod_p(p)) * k.summands())
}

/// `β^ζ` for every `n`-th root of unity `ζ` in `F_p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenBettiTable {
    pub n: u64,
    pub p: u64,
    pub entries: BTreeMap<u64, usize>,
}

impl EigenBettiTable {
    pub fn get(&self, zeta: u64) -> Option<usize> {
        self.entries.get(&(zeta % self.p)).copied()
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    /// `β^ζ = β^{ζ^{-1}}` for all entries.
    pub fn is_symmetric(&self) -> bool {
        self.entries.iter().all(|(&z, &b)| {
            let inv = pow_mod(z, self.p - 2, self.p);
            self.entries.get(&inv) == Some(&b)
        })
    }
}

/// Sweeps [`eigenspace_betti`] over all `n`-th roots of unity. Requires
/// `n | p - 1`; the total is checked against `dim H_1(M_n) ⊗ F_p`.
pub fn eigenspace_table(k: &SeifertMatrix, n: u64, p: u64) -> Result<EigenBettiTable> {
    check_prime(p)?;
    if n < 2 {
        return Err(Error::InvalidParameter(format!("cover order {n} < 2")));
    }
    if !(p - 1).is_multiple_of(n) {
        return Err(Error::NoPrimitiveRoot { n, p });
    }
    let mut entries = BTreeMap::new();
    for z in roots_of_unity(n, p)? {
        entries.insert(z, eigenspace_betti(k, n, p, z)?);
    }
    let table = EigenBettiTable { n, p, entries };
    let order = u32::try_from(n)
        .map_err(|_| Error::TooLarge(format!("cover order {n}")))?;
    let expected = branched_cover_homology(k, order)?.dim_mod_p(p);
    if table.total() != expected {
        return Err(Error::InvariantViolation(format!(
            "eigenspaces of M_{n} over F_{p} sum to {}, but dim H_1 ⊗ F_{p} = {expected}",
            table.total()
        )));
    }
    Ok(table)
}

/// Alexander module over `Q[t]` presented by `tV - V^T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderInvariants {
    pub decomposition: ModuleDecomposition,
    /// Number of nonconstant invariant factors.
    pub rank: usize,
    /// Monic irreducible `f` → number of invariant factors divisible by `f`.
    pub primary_ranks: Vec<(RatPoly, usize)>,
}

impl AlexanderInvariants {
    pub fn primary_rank(&self, f: &RatPoly) -> usize {
        let f = f.monic();
        self.primary_ranks
            .iter()
            .find(|(g, _)| *g == f)
            .map_or(0, |(_, r)| *r)
    }

    /// Alexander polynomial up to a unit (product of the invariant factors).
    pub fn order(&self) -> RatPoly {
        self.decomposition.order()
    }
}

pub fn alexander_invariants(k: &SeifertMatrix) -> Result<AlexanderInvariants> {
    let v = k.matrix();
    let decomposition = poly_smith_normal_form(&PolyMatrix::pencil(v, &v.transpose()));
    from_decomposition(decomposition)
}

fn from_decomposition(decomposition: ModuleDecomposition) -> Result<AlexanderInvariants> {
    let rank = decomposition
        .invariant_factors
        .iter()
        .filter(|f| !f.is_constant())
        .count();
    let mut irreducibles: Vec<RatPoly> = Vec::new();
    let mut seen: Vec<&RatPoly> = Vec::new();
    for f in &decomposition.invariant_factors {
        if f.is_zero() || seen.contains(&f) {
            continue;
        }
        seen.push(f);
        for g in factor_rational_poly(f)?.irreducibles() {
            let g = g.monic();
            if !irreducibles.contains(&g) {
                irreducibles.push(g);
            }
        }
    }
    irreducibles.sort();
    let primary_ranks = irreducibles
        .into_iter()
        .map(|g| {
            let r = decomposition
                .invariant_factors
                .iter()
                .filter(|f| g.divides(f))
                .count();
            (g, r)
        })
        .collect();
    Ok(AlexanderInvariants {
        decomposition,
        rank,
        primary_ranks,
    })
}

/// [`alexander_invariants`] of the whole connected sum, assembled from one
/// summand: the invariant factors of `M^k` are those of `M`, each repeated
/// `k` times.
pub fn knot_alexander_invariants(k: &DecoratedKnot) -> Result<AlexanderInvariants> {
    let single = alexander_invariants(k.seifert())?;
    let copies = expandable(k.summands())?;
    let invariant_factors = single
        .decomposition
        .invariant_factors
        .iter()
        .flat_map(|f| std::iter::repeat_n(f.clone(), copies))
        .collect();
    Ok(AlexanderInvariants {
        decomposition: ModuleDecomposition { invariant_factors },
        rank: single.rank * copies,
        primary_ranks: single
            .primary_ranks
            .into_iter()
            .map(|(f, r)| (f, r * copies))
            .collect(),
    })
}

/// `(k+1)^n - k^n`, the order of each summand of `H_1(M_n(K(k,U)))` for odd `n`.
pub fn two_bridge_cover_order(k: u64, n: u32) -> BigInt {
    BigInt::from(k + 1).pow(n) - BigInt::from(k).pow(n)
}

/// `gcd(n, p) = 1`.
pub fn coprime(n: u64, p: u64) -> bool {
    n.gcd(&p) == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn six_one() -> SeifertMatrix {
        SeifertMatrix::two_bridge(1).unwrap()
    }

    #[test]
    fn gamma_examples() {
        let b1 = SeifertMatrix::two_bridge_alt(1).unwrap();
        assert_eq!(
            gamma_matrix(b1.matrix()).unwrap(),
            IntMatrix::from_rows(&[[2, -1], [0, -1]])
        );
        let b2 = SeifertMatrix::two_bridge_alt(2).unwrap();
        assert_eq!(
            gamma_matrix(b2.matrix()).unwrap(),
            IntMatrix::from_rows(&[[3, -2], [0, -2]])
        );
        let bad = IntMatrix::from_rows(&[[1, 2], [0, 1]]);
        assert!(matches!(gamma_matrix(&bad), Err(Error::NotSeifert(_))));
    }

    #[test]
    fn cover_examples() {
        let cases: [(SeifertMatrix, u32, &str); 5] = [
            (six_one(), 3, "Z7 + Z7"),
            (SeifertMatrix::two_bridge(2).unwrap(), 3, "Z19 + Z19"),
            (six_one(), 2, "Z9"),
            (six_one(), 7, "Z127 + Z127"),
            (SeifertMatrix::two_bridge(2).unwrap(), 7, "Z2059 + Z2059"),
        ];
        for (k, n, want) in cases {
            assert_eq!(branched_cover_homology(&k, n).unwrap().to_string(), want);
        }
        assert!(branched_cover_homology(&six_one(), 1).is_err());
        assert!(branched_cover_homology(&SeifertMatrix::unknot(), 5)
            .unwrap()
            .is_trivial());
    }

    #[test]
    fn eigen_examples() {
        let b1 = SeifertMatrix::two_bridge_alt(1).unwrap();
        assert_eq!(eigenspace_betti(&b1, 3, 7, 2).unwrap(), 1);
        assert_eq!(eigenspace_betti(&b1, 3, 7, 4).unwrap(), 1);
        assert_eq!(eigenspace_betti(&b1, 3, 7, 1).unwrap(), 0);
        let p = SeifertMatrix::pretzel_p333();
        assert_eq!(eigenspace_betti(&p, 3, 7, 2).unwrap(), 1);
        assert_eq!(eigenspace_betti(&p, 3, 7, 4).unwrap(), 1);
        assert!(matches!(
            eigenspace_betti(&b1, 3, 7, 3),
            Err(Error::NotRootOfUnity { .. })
        ));
        assert!(matches!(eigenspace_betti(&b1, 3, 8, 1), Err(Error::NotPrime(8))));
        assert!(eigenspace_betti(&b1, 7, 7, 1).is_err());
    }

    #[test]
    fn tables() {
        let t = eigenspace_table(&six_one(), 3, 7).unwrap();
        assert_eq!(t.entries, BTreeMap::from([(1, 0), (2, 1), (4, 1)]));
        assert!(t.is_symmetric());
        let u = eigenspace_table(&SeifertMatrix::unknot(), 4, 13).unwrap();
        assert_eq!(u.total(), 0);
        assert_eq!(u.entries.len(), 4);
        let ten = eigenspace_table(&SeifertMatrix::two_bridge(2).unwrap(), 3, 7).unwrap();
        assert_eq!(ten.total(), 0);
        assert!(matches!(
            eigenspace_table(&six_one(), 3, 5),
            Err(Error::NoPrimitiveRoot { n: 3, p: 5 })
        ));
    }

    #[test]
    fn roots() {
        assert_eq!(roots_of_unity(3, 7).unwrap(), vec![1, 2, 4]);
        assert_eq!(primitive_root_of_unity(3, 7).unwrap(), 2);
        assert_eq!(primitive_root_of_unity(2, 3).unwrap(), 2);
        assert!(primitive_root_of_unity(3, 5).is_err());
    }

    #[test]
    fn alexander_examples() {
        let a = alexander_invariants(&six_one()).unwrap();
        assert_eq!(a.rank, 1);
        let t_minus_2 = RatPoly::from_ints(&[-2, 1]);
        let t_minus_half = RatPoly::from_ints(&[-1, 2]).monic();
        assert_eq!(
            a.primary_ranks,
            vec![(t_minus_2.clone(), 1), (t_minus_half.clone(), 1)]
        );
        let three = DecoratedKnot::new("6_1", six_one()).with_summands(3).unwrap();
        let b = knot_alexander_invariants(&three).unwrap();
        assert_eq!(b.rank, 3);
        assert_eq!(b.primary_rank(&t_minus_2), 3);
        assert_eq!(b.primary_rank(&t_minus_half), 3);
        let direct = alexander_invariants(&three.full_seifert()).unwrap();
        assert_eq!(direct, b);
        let u = alexander_invariants(&SeifertMatrix::unknot()).unwrap();
        assert_eq!(u.rank, 0);
        assert!(u.primary_ranks.is_empty());
    }

    #[test]
    fn summand_scaling() {
        let k = DecoratedKnot::new("P1", SeifertMatrix::pretzel(1).unwrap())
            .with_summands(3)
            .unwrap();
        assert_eq!(
            knot_cover_homology(&k, 2).unwrap(),
            branched_cover_homology(&k.full_seifert(), 2).unwrap()
        );
        assert_eq!(knot_eigenspace_betti(&k, 2, 3, 2).unwrap(), BigInt::from(6));
        assert_eq!(knot_betti_mod_p(&k, 2, 3).unwrap(), BigInt::from(6));
    }
}
