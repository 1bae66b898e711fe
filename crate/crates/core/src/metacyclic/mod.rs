//! Metacyclic covers of the two-bridge family `K(1, J)` with `J = α 6_1` or
//! `J = β 10_3`: homology, eigenspace Betti numbers, lens-space covers, and
//! the resulting bound on minima.
//!
//! Closed forms are checked against independent matrix or eigenspace
//! computations wherever both exist; a disagreement is an
//! [`Error::InvariantViolation`].

mod linking;
mod reversibility;

pub use linking::{
    enumerate_isotropic_subgroups, enumerate_metabolizers, is_isotropic_subgroup,
    metabolizer_support_check, LinkingForm, Metabolizer, SupportReport, SupportWitness,
    MAX_FORM_ORDER,
};
pub use reversibility::{
    reversibility_cases, EquivariantMetabolizer, MetabolizerCase, ReversibilityReport,
};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bounds::{bigint_string, ceil_bound, BoundCertificate, BoundKind, BoundParams, Direction};
use crate::covers::{cover_presentation, eigenspace_betti, knot_cover_homology, primitive_root_of_unity};
use crate::error::{Error, Result};
use crate::knots::{DecoratedKnot, SeifertMatrix};
use crate::linalg::{cokernel_group, AbelianGroup, IntMatrix};
use crate::quadrant::QuadrantUnion;

/// Relations among `(α, β1, β2, m1, m2, γ)` from gluing the three tori:
/// `α = −2γ`, `β1 + β2 = 3γ`, `β1 = 0`, `α = m1`, `β2 = 0`, `α = m2`.
pub fn mv_relation_matrix() -> IntMatrix {
    IntMatrix::from_rows(&[
        [1, 0, 0, 0, 0, 2],
        [0, 1, 1, 0, 0, -3],
        [0, 1, 0, 0, 0, 0],
        [1, 0, 0, -1, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [1, 0, 0, 0, -1, 0],
    ])
}

/// The relation matrix with row `skip` removed.
pub fn mv_relation_matrix_without(skip: usize) -> Result<IntMatrix> {
    let full = mv_relation_matrix();
    if skip >= full.rows() {
        return Err(Error::InvalidParameter(format!("no relation {skip}")));
    }
    let rows: Vec<Vec<BigInt>> = (0..full.rows())
        .filter(|&i| i != skip)
        .map(|i| full.row(i).to_vec())
        .collect();
    IntMatrix::from_big_rows(rows)
}

/// Cokernel of [`mv_relation_matrix`]; `Z3`.
pub fn mv_quotient_group() -> AbelianGroup {
    cokernel_group(&mv_relation_matrix())
}

/// Largest presentation size used for the block-matrix cross-check.
const CROSS_CHECK_SIZE: usize = 64;

/// `H_1` of the 3-fold cover of `M_2(K(1, J))`: `Z3 ⊕ H_1(M_3(J))^2`.
///
/// For small `J` the result is recomputed as the cokernel of the
/// Mayer–Vietoris matrix block-summed with two copies of a presentation of
/// `H_1(M_3(J))`.
pub fn metacyclic_homology_k1j(j: &DecoratedKnot) -> Result<AbelianGroup> {
    let t = knot_cover_homology(j, 3)?;
    let closed = mv_quotient_group().direct_sum(&t.power(2));
    let full = j.full_seifert();
    if 2 * full.size() <= CROSS_CHECK_SIZE {
        let pres = cover_presentation(&full, 3)?;
        let block = mv_relation_matrix().block_diag(&pres).block_diag(&pres);
        let direct = cokernel_group(&block);
        if direct != closed {
            return Err(Error::InvariantViolation(format!(
                "metacyclic homology: closed form {closed}, matrix route {direct}"
            )));
        }
    }
    Ok(closed)
}

/// Which companion family sits in the band.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MetacyclicFamily {
    /// `K(1, α 6_1)`; interesting over `F_7`.
    Alpha6_1,
    /// `K(1, β 10_3)`; interesting over `F_19`.
    Beta10_3,
}

impl MetacyclicFamily {
    /// The companion knot `6_1` or `10_3`.
    pub fn companion(self) -> SeifertMatrix {
        let k = match self {
            Self::Alpha6_1 => 1,
            Self::Beta10_3 => 2,
        };
        SeifertMatrix::two_bridge(k).expect("k >= 1")
    }

    /// Field where the companion's 3-fold cover has torsion.
    pub fn home_prime(self) -> u64 {
        match self {
            Self::Alpha6_1 => 7,
            Self::Beta10_3 => 19,
        }
    }

    pub fn other_prime(self) -> u64 {
        match self {
            Self::Alpha6_1 => 19,
            Self::Beta10_3 => 7,
        }
    }

    fn label(self, scale: &BigInt) -> String {
        match self {
            Self::Alpha6_1 => format!("K(1,{scale}·6_1)"),
            Self::Beta10_3 => format!("K(1,{scale}·10_3)"),
        }
    }
}

impl fmt::Display for MetacyclicFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Alpha6_1 => "alpha-6_1",
            Self::Beta10_3 => "beta-10_3",
        })
    }
}

fn check_field(p: u64) -> Result<()> {
    if p != 7 && p != 19 {
        return Err(Error::InvalidParameter(format!(
            "metacyclic eigenspaces are tabulated over F_7 and F_19, not F_{p}"
        )));
    }
    Ok(())
}

fn nonnegative(x: &BigInt, what: &str) -> Result<()> {
    if x.is_negative() {
        return Err(Error::InvalidParameter(format!("{what} = {x} is negative")));
    }
    Ok(())
}

/// `β^ζ` over `F_p` of the 3-fold cover of `M_2(K(1, scale·J))` for a
/// primitive cube root `ζ`: `2·scale` over the family's home field, 0 over
/// the other.
///
/// Recomputed as `2·scale·β^ζ(M_3(J))` from the companion's Seifert matrix.
pub fn metacyclic_eigen_betti(family: MetacyclicFamily, scale: &BigInt, p: u64) -> Result<BigInt> {
    check_field(p)?;
    nonnegative(scale, "scale")?;
    let closed = if p == family.home_prime() {
        scale * 2
    } else {
        BigInt::zero()
    };
    let zeta = primitive_root_of_unity(3, p)?;
    let per_copy = eigenspace_betti(&family.companion(), 3, p, zeta)?;
    let direct = scale * 2 * per_copy;
    if direct != closed {
        return Err(Error::InvariantViolation(format!(
            "{family} over F_{p}: closed form {closed}, eigenspace route {direct}"
        )));
    }
    Ok(closed)
}

/// `β^ζ` for `n` summands with `ρ` nonzero on `a` of them.
///
/// Home field: `2a·scale + a − 1`; other field: `a − 1`; both 0 when `a = 0`.
pub fn multi_eigen_betti(
    family: MetacyclicFamily,
    n: &BigInt,
    a: &BigInt,
    scale: &BigInt,
    p: u64,
) -> Result<BigInt> {
    check_field(p)?;
    nonnegative(a, "a")?;
    nonnegative(scale, "scale")?;
    if a > n {
        return Err(Error::InvalidParameter(format!("a = {a} exceeds n = {n}")));
    }
    if a.is_zero() {
        return Ok(BigInt::zero());
    }
    let lens_part = a - 1;
    // each nontrivial summand carries 2·scale companion complements
    let companion_part = a * metacyclic_eigen_betti(family, scale, p)?;
    Ok(companion_part + lens_part)
}

/// Summand of a cover written as a connected sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CoverPiece {
    #[serde(rename = "L(3,2)")]
    L32,
    #[serde(rename = "L(9,2)")]
    L92,
    #[serde(rename = "S1xS2")]
    S1xS2,
}

impl fmt::Display for CoverPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::L32 => "L(3,2)",
            Self::L92 => "L(9,2)",
            Self::S1xS2 => "S1xS2",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverTerm {
    pub piece: CoverPiece,
    #[serde(with = "bigint_string")]
    pub multiplicity: BigInt,
}

/// Connected sum of pieces with multiplicities; zero terms are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverDescription {
    pub terms: Vec<CoverTerm>,
}

impl CoverDescription {
    pub fn multiplicity(&self, piece: CoverPiece) -> BigInt {
        self.terms
            .iter()
            .find(|t| t.piece == piece)
            .map_or_else(BigInt::zero, |t| t.multiplicity.clone())
    }
}

/// `L(3,2) # 3 L(9,2) # 2 S1xS2`; `S3` when empty.
impl fmt::Display for CoverDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "S3");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " # ")?;
            }
            if t.multiplicity.is_one() {
                write!(f, "{}", t.piece)?;
            } else {
                write!(f, "{} {}", t.multiplicity, t.piece)?;
            }
        }
        Ok(())
    }
}

/// 3-fold cover of `n L(9,2)` for `ρ` nonzero on `a ≥ 1` summands:
/// `a L(3,2) # 3(n − a) L(9,2) # 2(a − 1) S1xS2`.
pub fn lens_cover_decomposition(n: &BigInt, a: &BigInt) -> Result<CoverDescription> {
    if *a < BigInt::one() || a > n {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= a <= n, got a = {a}, n = {n}"
        )));
    }
    let terms = [
        (CoverPiece::L32, a.clone()),
        (CoverPiece::L92, (n - a) * 3),
        (CoverPiece::S1xS2, (a - 1) * 2),
    ]
    .into_iter()
    .filter(|(_, k)| !k.is_zero())
    .map(|(piece, multiplicity)| CoverTerm {
        piece,
        multiplicity,
    })
    .collect();
    Ok(CoverDescription { terms })
}

/// Bound on minima of a genus-`g` cobordism `n K(1, α 6_1) → m K(1, β 10_3)`:
/// `max(0, ⌈(2α + 1 − m)/4 − g⌉)`. Refuses to certify unless `n > 2g`.
pub fn metacyclic_c0_bound(
    alpha: &BigInt,
    m: &BigInt,
    g: u64,
    n: &BigInt,
) -> Result<BoundCertificate> {
    nonnegative(alpha, "alpha")?;
    nonnegative(m, "m")?;
    if *n <= BigInt::from(2 * g) {
        return Err(Error::HypothesisViolated(format!(
            "the bound needs n > 2g, got n = {n}, g = {g}"
        )));
    }
    let diff = alpha * 2 + 1 - m;
    Ok(BoundCertificate {
        kind: BoundKind::Metacyclic,
        direction: Direction::Forward,
        k1: format!("{n}·{}", MetacyclicFamily::Alpha6_1.label(alpha)),
        k0: format!("{m}·K(1,β·10_3)"),
        genus: g,
        params: BoundParams {
            alpha: Some(alpha.to_string()),
            m: Some(m.to_string()),
            summands: Some(n.to_string()),
            ..Default::default()
        },
        lower_bound_c0: ceil_bound(&diff, &BigInt::from(4), g),
    })
}

/// Realized `(c0, c2) = (n(2α+1) − g, m(2β+1) − g)`, valid when
/// `g ≤ min(n(2α+1), m(2β+1))`.
pub fn realization_upper(
    n: &BigInt,
    m: &BigInt,
    alpha: &BigInt,
    beta: &BigInt,
    g: &BigInt,
) -> Result<(BigInt, BigInt)> {
    for (x, what) in [(n, "n"), (m, "m"), (alpha, "alpha"), (beta, "beta"), (g, "g")] {
        nonnegative(x, what)?;
    }
    let a = n * (alpha * 2 + 1);
    let b = m * (beta * 2 + 1);
    if g > &a || g > &b {
        return Err(Error::InvalidParameter(format!(
            "g = {g} exceeds min({a}, {b})"
        )));
    }
    Ok((a - g, b - g))
}

/// [`realization_upper`] as a staircase corner, when it fits in `u64`.
pub fn realization_quadrant(
    n: &BigInt,
    m: &BigInt,
    alpha: &BigInt,
    beta: &BigInt,
    g: &BigInt,
) -> Result<QuadrantUnion> {
    let (a, b) = realization_upper(n, m, alpha, beta, g)?;
    let fit = |x: &BigInt| {
        u64::try_from(x).map_err(|_| Error::TooLarge(format!("corner coordinate {x}")))
    };
    Ok(QuadrantUnion::quadrant(fit(&a)?, fit(&b)?))
}
