//! Finite unions of quadrants `Q(a,b) = {(i,j) : i >= a, j >= b}` in the
//! nonnegative lattice, stored as antichains of corners.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upward-closed subset of `N x N`, kept as its minimal corners.
///
/// Corners are sorted by `a` ascending; in an antichain `b` then strictly
/// decreases.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct QuadrantUnion {
    corners: Vec<(u64, u64)>,
}

impl QuadrantUnion {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn quadrant(a: u64, b: u64) -> Self {
        Self {
            corners: vec![(a, b)],
        }
    }

    /// Minimal antichain generating the same upward-closed set.
    pub fn normalize(points: &[(u64, u64)]) -> Self {
        let mut pts = points.to_vec();
        pts.sort_unstable();
        pts.dedup();
        let mut corners: Vec<(u64, u64)> = Vec::new();
        for (a, b) in pts {
            // sorted by a, so only the last kept corner can dominate
            if corners.last().is_none_or(|&(_, lb)| b < lb) {
                corners.push((a, b));
            }
        }
        Self { corners }
    }

    /// Like [`QuadrantUnion::normalize`] but rejects negative coordinates.
    pub fn from_points(points: &[(i64, i64)]) -> Result<Self> {
        let mut pts = Vec::with_capacity(points.len());
        for &(a, b) in points {
            if a < 0 || b < 0 {
                return Err(Error::InvalidParameter(format!(
                    "negative corner ({a},{b})"
                )));
            }
            pts.push((a as u64, b as u64));
        }
        Ok(Self::normalize(&pts))
    }

    /// Parses `"(2,3),(5,1)"`; whitespace is ignored and the empty string
    /// gives the empty set.
    pub fn parse(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Ok(Self::empty());
        }
        let bad = || Error::InvalidParameter(format!("cannot parse corners \"{s}\""));
        let inner = compact
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let mut pts = Vec::new();
        for pair in inner.split("),(") {
            let (a, b) = pair.split_once(',').ok_or_else(bad)?;
            let a: i64 = a.parse().map_err(|_| bad())?;
            let b: i64 = b.parse().map_err(|_| bad())?;
            pts.push((a, b));
        }
        Self::from_points(&pts)
    }

    pub fn corners(&self) -> &[(u64, u64)] {
        &self.corners
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    /// `true` for the whole lattice `Q(0,0)`.
    pub fn is_everything(&self) -> bool {
        self.corners == [(0, 0)]
    }

    pub fn member(&self, c0: u64, c2: u64) -> bool {
        self.corners.iter().any(|&(a, b)| c0 >= a && c2 >= b)
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &Self) -> bool {
        self.corners.iter().all(|&(a, b)| other.member(a, b))
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut pts = self.corners.clone();
        pts.extend_from_slice(&other.corners);
        Self::normalize(&pts)
    }

    /// Intersection of two upward-closed sets; corners are pairwise maxima.
    pub fn intersection(&self, other: &Self) -> Self {
        let pts: Vec<(u64, u64)> = self
            .corners
            .iter()
            .flat_map(|&(a, b)| other.corners.iter().map(move |&(c, d)| (a.max(c), b.max(d))))
            .collect();
        Self::normalize(&pts)
    }

    /// Points forced into the set one genus higher: each corner may trade a
    /// minimum or a maximum for a genus.
    pub fn genus_shift(&self) -> Self {
        let mut pts = Vec::with_capacity(2 * self.corners.len() + 1);
        for &(a, b) in &self.corners {
            if a > 0 {
                pts.push((a - 1, b));
            }
            if b > 0 {
                pts.push((a, b - 1));
            }
            if (a, b) == (0, 0) {
                pts.push((0, 0));
            }
        }
        Self::normalize(&pts)
    }

    /// `(c0, c2) -> (c0 + b, c2)`, moving from cobordism sets to band sets.
    pub fn g_to_b(&self, b_k0: u64) -> Result<Self> {
        need_band_number(b_k0)?;
        Ok(self.map(|(a, c)| (a + b_k0, c)))
    }

    /// `(c0, c2) -> (c0 - 1, c2 + b)`; every corner needs `c0 >= 1`.
    pub fn b_to_g(&self, b_k0: u64) -> Result<Self> {
        need_band_number(b_k0)?;
        self.need_minimum()?;
        Ok(self.map(|(a, c)| (a - 1, c + b_k0)))
    }

    /// `(c0, c2) -> (c0 - 1, c2)`, band sets to cobordisms with the unknot;
    /// every corner needs `c0 >= 1`.
    pub fn b_vs_g_unknot(&self) -> Result<Self> {
        self.need_minimum()?;
        Ok(self.map(|(a, c)| (a - 1, c)))
    }

    fn need_minimum(&self) -> Result<()> {
        match self.corners.iter().find(|&&(a, _)| a == 0) {
            Some(&(a, b)) => Err(Error::InvalidParameter(format!(
                "corner ({a},{b}) has no minimum to remove"
            ))),
            None => Ok(()),
        }
    }

    fn map(&self, f: impl Fn((u64, u64)) -> (u64, u64)) -> Self {
        let pts: Vec<(u64, u64)> = self.corners.iter().copied().map(f).collect();
        Self::normalize(&pts)
    }

    /// Largest coordinates among corners, `(0, 0)` when empty.
    pub fn extent(&self) -> (u64, u64) {
        self.corners
            .iter()
            .fold((0, 0), |(x, y), &(a, b)| (x.max(a), y.max(b)))
    }
}

fn need_band_number(b: u64) -> Result<()> {
    if b == 0 {
        return Err(Error::InvalidParameter("band number must be >= 1".into()));
    }
    Ok(())
}

/// `Q(4,2)`, `Q(2,3) ∪ Q(5,1)`, `∅`.
impl fmt::Display for QuadrantUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.corners.is_empty() {
            return write!(f, "∅");
        }
        for (i, (a, b)) in self.corners.iter().enumerate() {
            if i > 0 {
                write!(f, " ∪ ")?;
            }
            write!(f, "Q({a},{b})")?;
        }
        Ok(())
    }
}

/// One staircase per genus `g = 0, 1, 2, ...`; stabilized once a genus
/// reaches `Q(0,0)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusFamily {
    per_genus: Vec<QuadrantUnion>,
}

impl GenusFamily {
    pub fn new(per_genus: Vec<QuadrantUnion>) -> Self {
        Self { per_genus }
    }

    /// Iterates [`QuadrantUnion::genus_shift`] from `start` until `Q(0,0)`,
    /// giving up after `max_genus` steps.
    pub fn from_shifts(start: QuadrantUnion, max_genus: usize) -> Self {
        let mut per_genus = vec![start];
        while per_genus.len() <= max_genus {
            let last = per_genus.last().expect("nonempty");
            if last.is_everything() {
                break;
            }
            let next = last.genus_shift();
            per_genus.push(next);
        }
        Self { per_genus }
    }

    pub fn per_genus(&self) -> &[QuadrantUnion] {
        &self.per_genus
    }

    pub fn get(&self, g: usize) -> Option<&QuadrantUnion> {
        self.per_genus.get(g)
    }

    /// First genus whose set is `Q(0,0)`.
    pub fn stable_genus(&self) -> Option<usize> {
        self.per_genus.iter().position(QuadrantUnion::is_everything)
    }

    pub fn is_stabilized(&self) -> bool {
        self.stable_genus().is_some()
    }

    /// Every set contains the shift of its predecessor.
    pub fn is_shift_closed(&self) -> bool {
        self.per_genus
            .windows(2)
            .all(|w| w[0].genus_shift().is_subset(&w[1]))
    }

    /// Lexicographically sorted `(g, a, b)` corner triples up to the first
    /// stable genus.
    pub fn to_sequence(&self) -> Result<Vec<(u64, u64, u64)>> {
        let stable = self.stable_genus().ok_or_else(|| {
            Error::InvalidParameter("family never reaches Q(0,0)".into())
        })?;
        let mut seq = Vec::new();
        for (g, s) in self.per_genus[..=stable].iter().enumerate() {
            seq.extend(s.corners().iter().map(|&(a, b)| (g as u64, a, b)));
        }
        Ok(seq)
    }

    /// Inverse of [`GenusFamily::to_sequence`]; genera without triples get
    /// the empty set.
    pub fn from_sequence(seq: &[(u64, u64, u64)]) -> Self {
        let mut by_genus: BTreeMap<u64, Vec<(u64, u64)>> = BTreeMap::new();
        for &(g, a, b) in seq {
            by_genus.entry(g).or_default().push((a, b));
        }
        let top = by_genus.keys().next_back().map_or(0, |&g| g as usize + 1);
        let per_genus = (0..top as u64)
            .map(|g| {
                by_genus
                    .get(&g)
                    .map_or_else(QuadrantUnion::empty, |pts| QuadrantUnion::normalize(pts))
            })
            .collect();
        Self { per_genus }
    }
}

/// A realized (inner) and an obstructed (outer) staircase for one genus:
/// `inner ⊆ G_g ⊆ outer`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StaircaseBounds {
    pub inner: QuadrantUnion,
    pub outer: QuadrantUnion,
}

impl StaircaseBounds {
    pub fn new(inner: QuadrantUnion, outer: QuadrantUnion) -> Result<Self> {
        if !inner.is_subset(&outer) {
            return Err(Error::InvariantViolation(format!(
                "realized set {inner} is not inside the obstruction {outer}"
            )));
        }
        Ok(Self { inner, outer })
    }

    pub fn is_exact(&self) -> bool {
        self.inner == self.outer
    }

    /// Lattice points of `outer \ inner` inside `[0, max_c0] x [0, max_c2]`.
    pub fn gap(&self, max_c0: u64, max_c2: u64) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for c0 in 0..=max_c0 {
            for c2 in 0..=max_c2 {
                if self.outer.member(c0, c2) && !self.inner.member(c0, c2) {
                    out.push((c0, c2));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(pts: &[(u64, u64)]) -> QuadrantUnion {
        QuadrantUnion::normalize(pts)
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(q(&[(2, 3), (5, 1), (6, 2)]).corners(), &[(2, 3), (5, 1)]);
        assert_eq!(q(&[(5, 1), (2, 3)]).corners(), &[(2, 3), (5, 1)]);
        assert!(q(&[]).is_empty());
        assert_eq!(q(&[(1, 1), (1, 1), (1, 2), (2, 1)]).corners(), &[(1, 1)]);
        assert!(QuadrantUnion::from_points(&[(-1, 0)]).is_err());
    }

    #[test]
    fn parse_corners() {
        assert_eq!(
            QuadrantUnion::parse("(2,3), (5,1)").unwrap(),
            q(&[(2, 3), (5, 1)])
        );
        assert_eq!(QuadrantUnion::parse("").unwrap(), QuadrantUnion::empty());
        assert!(QuadrantUnion::parse("(2,3").is_err());
        assert!(QuadrantUnion::parse("(2,-3)").is_err());
    }

    #[test]
    fn membership() {
        let s = q(&[(2, 3), (5, 1)]);
        assert!(s.member(3, 3));
        assert!(!s.member(4, 2));
        assert!(s.member(5, 1));
        assert!(!q(&[]).member(100, 100));
    }

    #[test]
    fn shifts() {
        assert_eq!(q(&[(4, 2)]).genus_shift(), q(&[(3, 2), (4, 1)]));
        assert_eq!(q(&[(3, 2), (4, 1)]).genus_shift(), q(&[(2, 2), (3, 1), (4, 0)]));
        assert_eq!(q(&[(0, 0)]).genus_shift(), q(&[(0, 0)]));
        assert_eq!(q(&[(0, 3)]).genus_shift(), q(&[(0, 2)]));
        assert!(q(&[]).genus_shift().is_empty());
    }

    #[test]
    fn transfers() {
        assert_eq!(q(&[(1, 0)]).g_to_b(2).unwrap(), q(&[(3, 0)]));
        assert_eq!(q(&[(3, 0)]).b_to_g(2).unwrap(), q(&[(2, 2)]));
        assert_eq!(q(&[(2, 1)]).b_vs_g_unknot().unwrap(), q(&[(1, 1)]));
        assert!(q(&[(1, 0)]).g_to_b(0).is_err());
        assert!(q(&[(0, 4)]).b_to_g(1).is_err());
        assert!(q(&[(0, 4)]).b_vs_g_unknot().is_err());
    }

    #[test]
    fn sequences() {
        let fam = GenusFamily::from_shifts(q(&[(4, 2)]), 20);
        assert_eq!(fam.stable_genus(), Some(6));
        let seq = fam.to_sequence().unwrap();
        assert_eq!(
            &seq[..6],
            &[(0, 4, 2), (1, 3, 2), (1, 4, 1), (2, 2, 2), (2, 3, 1), (2, 4, 0)]
        );
        assert_eq!(&seq[seq.len() - 3..], &[(5, 0, 1), (5, 1, 0), (6, 0, 0)]);
        assert_eq!(GenusFamily::from_sequence(&seq), fam);
        assert!(fam.is_shift_closed());

        let trivial = GenusFamily::new(vec![q(&[(0, 0)])]);
        assert_eq!(trivial.to_sequence().unwrap(), vec![(0, 0, 0)]);
        assert!(GenusFamily::new(vec![q(&[(1, 1)])]).to_sequence().is_err());
        assert_eq!(
            GenusFamily::from_sequence(&[(1, 0, 0)]).per_genus(),
            &[QuadrantUnion::empty(), q(&[(0, 0)])]
        );
    }

    #[test]
    fn set_operations() {
        let a = q(&[(2, 3), (5, 1)]);
        let b = q(&[(3, 0)]);
        assert_eq!(a.union(&b), q(&[(2, 3), (3, 0)]));
        assert_eq!(a.intersection(&b), q(&[(3, 3), (5, 1)]));
        assert!(a.intersection(&b).is_subset(&a));
        assert_eq!(a.to_string(), "Q(2,3) ∪ Q(5,1)");
    }

    #[test]
    fn bounds_gap() {
        let sb = StaircaseBounds::new(q(&[(2, 1)]), q(&[(1, 1)])).unwrap();
        assert!(!sb.is_exact());
        assert_eq!(sb.gap(2, 1), vec![(1, 1)]);
        assert!(StaircaseBounds::new(q(&[(0, 0)]), q(&[(1, 1)])).is_err());
    }
}
