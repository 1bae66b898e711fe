//! Lower bounds on the number of minima `c0` and maxima `c2` of a genus-`g`
//! cobordism between two knots, from abelian cover invariants.
//!
//! Every bound has the form `max(0, ⌈diff / den − g⌉)`. A `c2` bound for
//! `K1 → K0` is the `c0` bound for `K0 → K1` (the cobordism turned upside
//! down), computed by the same code with the knots swapped.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::covers::{
    alexander_invariants, coprime, knot_betti_mod_p, knot_eigenspace_betti, roots_of_unity,
    AlexanderInvariants,
};
use crate::error::{Error, Result};
use crate::knots::DecoratedKnot;
use crate::linalg::modp::primes_up_to;
use crate::linalg::{is_irreducible, RatPoly};
use crate::quadrant::{GenusFamily, QuadrantUnion, StaircaseBounds};

/// Critical point counts of a cobordism; `c1 = c0 + c2 + 2g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CobordismBudget {
    pub g: u64,
    pub c0: u64,
    pub c1: u64,
    pub c2: u64,
}

impl CobordismBudget {
    pub fn new(g: u64, c0: u64, c2: u64) -> Self {
        Self {
            g,
            c0,
            c1: c0 + c2 + 2 * g,
            c2,
        }
    }

    pub fn from_counts(g: u64, c0: u64, c1: u64, c2: u64) -> Result<Self> {
        if c1 != c0 + c2 + 2 * g {
            return Err(Error::InvalidParameter(format!(
                "c1 = {c1} but c0 + c2 + 2g = {}",
                c0 + c2 + 2 * g
            )));
        }
        Ok(Self { g, c0, c1, c2 })
    }
}

/// Relative 1-, 2- and 3-handles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HandleCounts {
    pub h1: u64,
    pub h2: u64,
    pub h3: u64,
}

/// Handles of the `n`-fold branched cover of `S^3 x I` over the cobordism:
/// `(n c0, n c1, n c2 + 2g)`.
pub fn branched_handle_counts(n: u64, b: &CobordismBudget) -> Result<HandleCounts> {
    need_cover_order(n)?;
    Ok(HandleCounts {
        h1: n * b.c0,
        h2: n * b.c1,
        h3: n * b.c2 + 2 * b.g,
    })
}

/// Handles of the unbranched `n`-fold cover of the complement:
/// `(n c0, n c1, n c2)`.
pub fn unbranched_handle_counts(n: u64, b: &CobordismBudget) -> Result<HandleCounts> {
    need_cover_order(n)?;
    Ok(HandleCounts {
        h1: n * b.c0,
        h2: n * b.c1,
        h3: n * b.c2,
    })
}

fn need_cover_order(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("cover order {n} < 2")));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    CyclicEigenspace,
    CyclicAveraged,
    AlexanderRank,
    AlexanderPrimary,
    Metacyclic,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::CyclicEigenspace => "cyclic-eigenspace",
            Self::CyclicAveraged => "cyclic-averaged",
            Self::AlexanderRank => "alexander-rank",
            Self::AlexanderPrimary => "alexander-primary",
            Self::Metacyclic => "metacyclic",
        })
    }
}

/// `Forward` bounds `c0`; `Reversed` bounds `c2` (the `c0` of the reversed
/// cobordism).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Reversed,
}

impl Direction {
    pub fn bounded(self) -> &'static str {
        match self {
            Self::Forward => "c0",
            Self::Reversed => "c2",
        }
    }
}

/// Parameters that produced a certificate. Unused fields are omitted from
/// JSON.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundParams {
    /// Cover order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeta: Option<u64>,
    /// Irreducible polynomial, rendered as text.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<String>,
    /// Metacyclic family parameters, as decimal strings.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<String>,
    /// Number of summands of the source knot in the metacyclic family.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub summands: Option<String>,
}

/// A lower bound together with everything needed to recompute it.
///
/// `lower_bound_c0` bounds the minima of the cobordism read in `direction`,
/// so a `Reversed` certificate bounds `c2` of `k1 → k0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub kind: BoundKind,
    pub direction: Direction,
    pub k1: String,
    pub k0: String,
    pub genus: u64,
    pub params: BoundParams,
    #[serde(with = "bigint_string")]
    pub lower_bound_c0: BigInt,
}

impl BoundCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidParameter(e.to_string()))
    }
}

impl fmt::Display for BoundCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ≥ {} [{}",
            self.direction.bounded(),
            self.lower_bound_c0,
            self.kind
        )?;
        let p = &self.params;
        let fields = [
            ("n", p.n.map(|x| x.to_string())),
            ("p", p.p.map(|x| x.to_string())),
            ("zeta", p.zeta.map(|x| x.to_string())),
            ("f", p.f.clone()),
            ("alpha", p.alpha.clone()),
            ("m", p.m.clone()),
            ("summands", p.summands.clone()),
        ];
        for (k, v) in fields {
            if let Some(v) = v {
                write!(f, " {k}={v}")?;
            }
        }
        write!(f, "]")
    }
}

pub(crate) mod bigint_string {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// `max(0, ⌈diff / den − g⌉)` for `den > 0`.
pub fn ceil_bound(diff: &BigInt, den: &BigInt, g: u64) -> BigInt {
    debug_assert!(den.is_positive());
    let v = diff.div_ceil(den) - BigInt::from(g);
    if v.is_negative() {
        BigInt::zero()
    } else {
        v
    }
}

/// Which abelian invariant to compare.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundSpec {
    Eigen { n: u64, p: u64, zeta: u64 },
    Averaged { n: u64, p: u64 },
    Alexander,
    AlexanderPrimary { f: RatPoly },
}

/// `(diff, den, params)`: the unrounded bound is `diff / den − g`.
fn raw_bound(
    k1: &DecoratedKnot,
    k0: &DecoratedKnot,
    spec: &BoundSpec,
) -> Result<(BoundKind, BigInt, BigInt, BoundParams)> {
    let two = BigInt::from(2);
    match spec {
        BoundSpec::Eigen { n, p, zeta } => {
            let b1 = knot_eigenspace_betti(k1, *n, *p, *zeta)?;
            let b0 = knot_eigenspace_betti(k0, *n, *p, *zeta)?;
            let params = BoundParams {
                n: Some(*n),
                p: Some(*p),
                zeta: Some(zeta % p),
                ..Default::default()
            };
            Ok((BoundKind::CyclicEigenspace, b1 - b0, two, params))
        }
        BoundSpec::Averaged { n, p } => {
            if !coprime(*n, *p) {
                return Err(Error::InvalidParameter(format!(
                    "cover order {n} is not prime to {p}"
                )));
            }
            let order = u32::try_from(*n)
                .map_err(|_| Error::TooLarge(format!("cover order {n}")))?;
            let b1 = knot_betti_mod_p(k1, order, *p)?;
            let b0 = knot_betti_mod_p(k0, order, *p)?;
            let params = BoundParams {
                n: Some(*n),
                p: Some(*p),
                ..Default::default()
            };
            let den = two * BigInt::from(n - 1);
            Ok((BoundKind::CyclicAveraged, b1 - b0, den, params))
        }
        BoundSpec::Alexander => {
            let r1 = alexander_rank(k1)?;
            let r0 = alexander_rank(k0)?;
            Ok((BoundKind::AlexanderRank, r1 - r0, two, BoundParams::default()))
        }
        BoundSpec::AlexanderPrimary { f } => {
            if f.is_constant() || !is_irreducible(f)? {
                return Err(Error::Reducible(f.to_string()));
            }
            let f = f.monic();
            let r1 = primary_rank(k1, &f)?;
            let r0 = primary_rank(k0, &f)?;
            let params = BoundParams {
                f: Some(f.to_string()),
                ..Default::default()
            };
            Ok((BoundKind::AlexanderPrimary, r1 - r0, two, params))
        }
    }
}

fn alexander_rank(k: &DecoratedKnot) -> Result<BigInt> {
    Ok(BigInt::from(alexander_invariants(k.seifert())?.rank) * k.summands())
}

fn primary_rank(k: &DecoratedKnot, f: &RatPoly) -> Result<BigInt> {
    Ok(BigInt::from(alexander_invariants(k.seifert())?.primary_rank(f)) * k.summands())
}

fn certificate(
    k1: &DecoratedKnot,
    k0: &DecoratedKnot,
    g: u64,
    spec: &BoundSpec,
    direction: Direction,
) -> Result<BoundCertificate> {
    let (src, dst) = match direction {
        Direction::Forward => (k1, k0),
        Direction::Reversed => (k0, k1),
    };
    let (kind, diff, den, params) = raw_bound(src, dst, spec)?;
    Ok(BoundCertificate {
        kind,
        direction,
        k1: k1.display_name(),
        k0: k0.display_name(),
        genus: g,
        params,
        lower_bound_c0: ceil_bound(&diff, &den, g),
    })
}

/// Lower bound on `c0` of a genus-`g` cobordism `k1 → k0`.
pub fn bound_c0(
    k1: &DecoratedKnot,
    k0: &DecoratedKnot,
    g: u64,
    spec: &BoundSpec,
) -> Result<BoundCertificate> {
    certificate(k1, k0, g, spec, Direction::Forward)
}

/// Lower bound on `c2` of a genus-`g` cobordism `k1 → k0`.
pub fn bound_c2(
    k1: &DecoratedKnot,
    k0: &DecoratedKnot,
    g: u64,
    spec: &BoundSpec,
) -> Result<BoundCertificate> {
    certificate(k1, k0, g, spec, Direction::Reversed)
}

pub fn bound_c0_eigen(
    k1: &DecoratedKnot,
    k0: &DecoratedKnot,
    g: u64,
    n: u64,
    p: u64,
    zeta: u64,
) -> Result<BoundCertificate> {
    bound_c0(k1, k0, g, &BoundSpec::Eigen { n, p, zeta })
}

pub fn bound_c0_averaged(
    k1: &DecoratedKnot,
    k0: &DecoratedKnot,
    g: u64,
    n: u64,
    p: u64,
) -> Result<BoundCertificate> {
    bound_c0(k1, k0, g, &BoundSpec::Averaged { n, p })
}

pub fn bound_c0_alexander(
    k1: &DecoratedKnot,
    k0: &DecoratedKnot,
    g: u64,
) -> Result<BoundCertificate> {
    bound_c0(k1, k0, g, &BoundSpec::Alexander)
}

pub fn bound_c0_alexander_primary(
    k1: &DecoratedKnot,
    k0: &DecoratedKnot,
    g: u64,
    f: &RatPoly,
) -> Result<BoundCertificate> {
    bound_c0(k1, k0, g, &BoundSpec::AlexanderPrimary { f: f.clone() })
}

/// Cover orders `2..=max_n` and primes up to `max_p` swept by
/// [`obstruction_staircase`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLimits {
    pub max_n: u64,
    pub max_p: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            max_n: 6,
            max_p: 97,
        }
    }
}

impl SearchLimits {
    pub fn new(max_n: u64, max_p: u64) -> Result<Self> {
        if max_n < 2 || max_p < 2 {
            return Err(Error::InvalidParameter(format!(
                "search limits N = {max_n}, P = {max_p} must be at least 2"
            )));
        }
        Ok(Self { max_n, max_p })
    }

    /// Every bound in the grid: eigenspace bounds for all
    /// `(n, p, ζ)` with `p ≡ 1 mod n`, averaged bounds for the same
    /// `(n, p)`, the rank bound, and primary bounds for each irreducible
    /// factor of either Alexander module.
    pub fn specs(&self, k1: &DecoratedKnot, k0: &DecoratedKnot) -> Result<Vec<BoundSpec>> {
        let mut specs = Vec::new();
        let primes = primes_up_to(self.max_p);
        for n in 2..=self.max_n {
            for &p in primes.iter().filter(|&&p| (p - 1) % n == 0) {
                for zeta in roots_of_unity(n, p)? {
                    if zeta != 1 {
                        specs.push(BoundSpec::Eigen { n, p, zeta });
                    }
                }
                specs.push(BoundSpec::Averaged { n, p });
            }
        }
        specs.push(BoundSpec::Alexander);
        let mut fs: Vec<RatPoly> = Vec::new();
        for k in [k1, k0] {
            let inv: AlexanderInvariants = alexander_invariants(k.seifert())?;
            for (f, _) in inv.primary_ranks {
                if !fs.contains(&f) {
                    fs.push(f);
                }
            }
        }
        fs.sort();
        specs.extend(fs.into_iter().map(|f| BoundSpec::AlexanderPrimary { f }));
        Ok(specs)
    }
}

/// Best corner found by a sweep, with the certificates behind it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub genus: u64,
    /// `G_g(k1, k0) ⊆ outer`.
    pub outer: QuadrantUnion,
    /// First certificate reaching the `c0` coordinate, if positive.
    pub c0_certificate: Option<BoundCertificate>,
    pub c2_certificate: Option<BoundCertificate>,
    pub certificates: Vec<BoundCertificate>,
}

impl Obstruction {
    pub fn corner(&self) -> (u64, u64) {
        self.outer.corners()[0]
    }
}

/// Sweeps every certificate in `limits` in both directions and returns
/// `Q(a, b)` with `a` the best `c0` bound and `b` the best `c2` bound.
pub fn obstruction_staircase(
    k1: &DecoratedKnot,
    k0: &DecoratedKnot,
    g: u64,
    limits: SearchLimits,
) -> Result<Obstruction> {
    let specs = limits.specs(k1, k0)?;
    let mut certificates = Vec::with_capacity(2 * specs.len());
    for dir in [Direction::Forward, Direction::Reversed] {
        for spec in &specs {
            certificates.push(certificate(k1, k0, g, spec, dir)?);
        }
    }
    let best = |dir: Direction| {
        certificates
            .iter()
            .filter(|c| c.direction == dir)
            .fold(None::<&BoundCertificate>, |acc, c| match acc {
                Some(b) if b.lower_bound_c0 >= c.lower_bound_c0 => Some(b),
                _ => Some(c),
            })
            .filter(|c| c.lower_bound_c0.is_positive())
            .cloned()
    };
    let c0_certificate = best(Direction::Forward);
    let c2_certificate = best(Direction::Reversed);
    let coord = |c: &Option<BoundCertificate>| -> Result<u64> {
        c.as_ref().map_or(Ok(0), |c| {
            u64::try_from(&c.lower_bound_c0)
                .map_err(|_| Error::TooLarge(format!("bound {}", c.lower_bound_c0)))
        })
    };
    let outer = QuadrantUnion::quadrant(coord(&c0_certificate)?, coord(&c2_certificate)?);
    Ok(Obstruction {
        genus: g,
        outer,
        c0_certificate,
        c2_certificate,
        certificates,
    })
}

/// Obstruction staircases for `g = 0, 1, ...` until `Q(0,0)` (or `max_genus`).
pub fn obstruction_family(
    k1: &DecoratedKnot,
    k0: &DecoratedKnot,
    limits: SearchLimits,
    max_genus: u64,
) -> Result<GenusFamily> {
    let mut per_genus = Vec::new();
    for g in 0..=max_genus {
        let s = obstruction_staircase(k1, k0, g, limits)?.outer;
        let done = s.is_everything();
        per_genus.push(s);
        if done {
            break;
        }
    }
    Ok(GenusFamily::new(per_genus))
}

/// Realized staircase for `n P_1 → m P_2` at genus `g`:
/// `Q(max(n − g, 0), max(m − g, 0))`.
pub fn realized_pretzel_family(n: u64, m: u64, g: u64) -> QuadrantUnion {
    QuadrantUnion::quadrant(n.saturating_sub(g), m.saturating_sub(g))
}

/// Inner (realized) and outer (obstruction) staircases for `n P_1 → m P_2`.
pub fn pretzel_family_bounds(
    n: u64,
    m: u64,
    g: u64,
    limits: SearchLimits,
) -> Result<StaircaseBounds> {
    let (k1, k0) = pretzel_pair(n, m)?;
    let outer = obstruction_staircase(&k1, &k0, g, limits)?.outer;
    StaircaseBounds::new(realized_pretzel_family(n, m, g), outer)
}

/// `(n P_1, m P_2)`; a zero count gives the unknot.
pub fn pretzel_pair(n: u64, m: u64) -> Result<(DecoratedKnot, DecoratedKnot)> {
    let make = |k: u64, count: u64| -> Result<DecoratedKnot> {
        if count == 0 {
            return Ok(DecoratedKnot::unknot());
        }
        let s = crate::knots::SeifertMatrix::pretzel(k)?;
        DecoratedKnot::new(format!("P{k}"), s).with_summands(count)
    };
    Ok((make(1, n)?, make(2, m)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::{registry, SeifertMatrix};

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn handle_counts() {
        let b = CobordismBudget::from_counts(0, 1, 1, 0).unwrap();
        assert_eq!(
            branched_handle_counts(2, &b).unwrap(),
            HandleCounts { h1: 2, h2: 2, h3: 0 }
        );
        let b = CobordismBudget::from_counts(1, 0, 2, 0).unwrap();
        assert_eq!(
            branched_handle_counts(3, &b).unwrap(),
            HandleCounts { h1: 0, h2: 6, h3: 2 }
        );
        assert_eq!(
            unbranched_handle_counts(3, &b).unwrap(),
            HandleCounts { h1: 0, h2: 6, h3: 0 }
        );
        let z = CobordismBudget::new(0, 0, 0);
        assert_eq!(
            branched_handle_counts(2, &z).unwrap(),
            HandleCounts { h1: 0, h2: 0, h3: 0 }
        );
        assert!(CobordismBudget::from_counts(1, 0, 1, 0).is_err());
        assert!(branched_handle_counts(1, &z).is_err());
    }

    #[test]
    fn rounding() {
        assert_eq!(ceil_bound(&big(5), &big(2), 0), big(3));
        assert_eq!(ceil_bound(&big(5), &big(2), 3), big(0));
        assert_eq!(ceil_bound(&big(-4), &big(2), 0), big(0));
        assert_eq!(ceil_bound(&big(4), &big(2), 1), big(1));
    }

    #[test]
    fn pretzel_eigen_examples() {
        for (n, m) in [(1, 1), (3, 2), (4, 2)] {
            let (k1, k0) = pretzel_pair(n, m).unwrap();
            let c0 = bound_c0_eigen(&k1, &k0, 0, 2, 3, 2).unwrap();
            assert_eq!(c0.lower_bound_c0, big(n as i64));
            let c2 = bound_c2(&k1, &k0, 0, &BoundSpec::Eigen { n: 2, p: 5, zeta: 4 }).unwrap();
            assert_eq!(c2.lower_bound_c0, big(m as i64));
            assert_eq!(c2.direction, Direction::Reversed);
        }
        let six = registry("6_1").unwrap();
        assert_eq!(
            bound_c0_eigen(&six, &six, 0, 3, 7, 2).unwrap().lower_bound_c0,
            big(0)
        );
        assert!(bound_c0_eigen(&six, &six, 0, 3, 7, 3).is_err());
    }

    #[test]
    fn averaged_and_alexander() {
        let (k1, u) = pretzel_pair(3, 0).unwrap();
        assert_eq!(bound_c0_averaged(&k1, &u, 0, 2, 3).unwrap().lower_bound_c0, big(3));
        assert_eq!(bound_c0_averaged(&k1, &k1, 0, 2, 3).unwrap().lower_bound_c0, big(0));
        assert!(bound_c0_averaged(&k1, &u, 0, 3, 3).is_err());

        let six = registry("6_1").unwrap().with_summands(5).unwrap();
        let u = DecoratedKnot::unknot();
        let t2 = RatPoly::from_ints(&[-2, 1]);
        for g in 0..4 {
            let want = big((3 - g as i64).max(0));
            assert_eq!(bound_c0_alexander(&six, &u, g).unwrap().lower_bound_c0, want);
            assert_eq!(
                bound_c0_alexander_primary(&six, &u, g, &t2).unwrap().lower_bound_c0,
                want
            );
        }
        let reducible = RatPoly::from_ints(&[2, -5, 2]);
        assert!(matches!(
            bound_c0_alexander_primary(&six, &u, 0, &reducible),
            Err(Error::Reducible(_))
        ));
    }

    #[test]
    fn certificate_json_round_trip() {
        let (k1, k0) = pretzel_pair(4, 2).unwrap();
        let c = bound_c0_eigen(&k1, &k0, 1, 2, 3, 2).unwrap();
        let back = BoundCertificate::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        assert!(c.to_json().contains("\"lower_bound_c0\": \"3\""));
        assert!(c.to_json().contains("\"kind\": \"cyclic-eigenspace\""));
        assert_eq!(c.to_string(), "c0 ≥ 3 [cyclic-eigenspace n=2 p=3 zeta=2]");
    }

    #[test]
    fn small_staircase() {
        let (k1, k0) = pretzel_pair(4, 2).unwrap();
        let limits = SearchLimits::new(2, 5).unwrap();
        let want = [(4, 2), (3, 1), (2, 0), (1, 0), (0, 0)];
        for (g, corner) in want.into_iter().enumerate() {
            let ob = obstruction_staircase(&k1, &k0, g as u64, limits).unwrap();
            assert_eq!(ob.corner(), corner, "g = {g}");
        }
        let u = DecoratedKnot::unknot();
        let ob = obstruction_staircase(&u, &u, 0, limits).unwrap();
        assert!(ob.outer.is_everything());
        assert!(ob.c0_certificate.is_none());
    }

    #[test]
    fn alternate_basis_agrees() {
        let a = DecoratedKnot::new("A2", SeifertMatrix::two_bridge(2).unwrap());
        let b = DecoratedKnot::new("B2", SeifertMatrix::two_bridge_alt(2).unwrap());
        let u = DecoratedKnot::unknot();
        let limits = SearchLimits::new(3, 20).unwrap();
        assert_eq!(
            obstruction_staircase(&a, &u, 0, limits).unwrap().outer,
            obstruction_staircase(&b, &u, 0, limits).unwrap().outer
        );
    }
}
