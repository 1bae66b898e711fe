//! `Z3`-equivariant metabolizers of `H_1(M_3(P)) ⊕ −H_1(M_3(P^r))` for a
//! genus-one pattern `P` with `H_1(M_3(P)) = Z7^2` and its reverse `P^r`.
//!
//! Model: `F_7^4` with basis `(z, w, z*, w*)`, where `z`, `w` are dual to
//! bands 0 and 1 of `P` and `z*`, `w*` to the same bands of `P^r`. The deck
//! transformation acts diagonally; the eigenvalue of each basis vector is
//! read off the row-vector kernel of `ζV − Vᵀ` (with `Vᵀ` for `P^r`). The
//! form pairs `z` with `w` by `1/7` and `z*` with `w*` by `−1/7`; every
//! other pair of basis vectors is orthogonal.

use std::fmt;

use serde::Serialize;

use crate::covers::{eigenspace_table, knot_cover_homology};
use crate::error::{Error, Result};
use crate::knots::DecoratedKnot;
use crate::linalg::{modp::reduce, AbelianGroup};

const P: u64 = 7;
const EIGENVALUES: [u64; 2] = [2, 4];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MetabolizerCase {
    /// The whole 2-eigenspace.
    TwoEigenspace,
    /// The whole 4-eigenspace.
    FourEigenspace,
    /// One line from each eigenspace.
    Mixed,
}

impl MetabolizerCase {
    pub fn number(self) -> u8 {
        match self {
            Self::TwoEigenspace => 1,
            Self::FourEigenspace => 2,
            Self::Mixed => 3,
        }
    }
}

impl fmt::Display for MetabolizerCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {}", self.number())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivariantMetabolizer {
    pub case: MetabolizerCase,
    /// Basis in `(z, w, z*, w*)` coordinates: the 2-eigenvector first.
    pub basis: Vec<[u64; 4]>,
    /// Companions of `P` whose dual classes meet the metabolizer.
    pub couples_pattern: Vec<String>,
    /// Companions of `P^r` whose dual classes meet the metabolizer.
    pub couples_reverse: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReversibilityReport {
    pub knot: String,
    pub cover_homology: String,
    /// Eigenvalue of the class dual to band 0 and band 1 of `P`.
    pub pattern_eigenvalues: [u64; 2],
    /// The same for `P^r`.
    pub reverse_eigenvalues: [u64; 2],
    /// Companions in bands 0 and 1 (`unknot` when undecorated).
    pub companions: [String; 2],
    /// `H_1` of the 7-fold branched cover of each companion.
    pub companion_cover_homology: [String; 2],
    pub metabolizers: Vec<EquivariantMetabolizer>,
}

fn inv7(a: u64) -> u64 {
    (1..P).find(|b| a * b % P == 1).expect("nonzero mod 7")
}

/// Band whose dual class spans the `ζ`-eigenline: the row-vector kernel of
/// `ζV − Vᵀ` must be a coordinate line.
fn band_of_eigenvalue(v: &[[u64; 2]; 2], zeta: u64) -> Result<usize> {
    let m: Vec<Vec<u64>> = (0..2)
        .map(|i| (0..2).map(|j| (zeta * v[i][j] + P - v[j][i]) % P).collect())
        .collect();
    let col = (0..2)
        .find(|&j| m[0][j] != 0 || m[1][j] != 0)
        .ok_or_else(|| Error::HypothesisViolated(format!("ζ = {zeta}: eigenspace is 2-dimensional")))?;
    // y = (m[1][col], -m[0][col]) kills that column; rank one kills the other
    let y = [m[1][col], (P - m[0][col]) % P];
    match y {
        [a, 0] if a != 0 => Ok(0),
        [0, b] if b != 0 => Ok(1),
        _ => Err(Error::HypothesisViolated(format!(
            "the {zeta}-eigenline is not dual to a single band"
        ))),
    }
}

struct Model {
    /// Eigenvalue of each basis vector `(z, w, z*, w*)`.
    eigen: [u64; 4],
}

impl Model {
    fn pair(&self, x: &[u64; 4], y: &[u64; 4]) -> u64 {
        (x[0] * y[1] + x[1] * y[0] + (P - 1) * (x[2] * y[3] + x[3] * y[2])) % P
    }

    fn act(&self, x: &[u64; 4]) -> [u64; 4] {
        std::array::from_fn(|i| x[i] * self.eigen[i] % P)
    }

    fn eigenbasis(&self, zeta: u64) -> Vec<usize> {
        (0..4).filter(|&i| self.eigen[i] == zeta).collect()
    }

    /// Projective points of the 2-dimensional `ζ`-eigenspace.
    fn eigenlines(&self, zeta: u64) -> Vec<[u64; 4]> {
        let b = self.eigenbasis(zeta);
        let mut out = Vec::new();
        for (s, t) in std::iter::once((1, 0)).chain((0..P).map(|t| (t, 1))) {
            let mut v = [0; 4];
            v[b[0]] = s;
            v[b[1]] = t;
            out.push(v);
        }
        out
    }

    fn isotropic(&self, basis: &[[u64; 4]]) -> bool {
        basis
            .iter()
            .all(|x| basis.iter().all(|y| self.pair(x, y) == 0))
    }
}

fn normalize(v: [u64; 4]) -> [u64; 4] {
    let lead = v.iter().copied().find(|&c| c != 0).unwrap_or(1);
    let inv = inv7(lead);
    v.map(|c| c * inv % P)
}

fn seifert_mod7(k: &DecoratedKnot) -> Result<[[u64; 2]; 2]> {
    let v = k.seifert().matrix();
    if v.rows() != 2 {
        return Err(Error::HypothesisViolated(format!(
            "pattern must have a 2x2 Seifert matrix, got {}x{}",
            v.rows(),
            v.cols()
        )));
    }
    Ok(std::array::from_fn(|i| std::array::from_fn(|j| reduce(&v[(i, j)], P))))
}

fn companion_of(k: &DecoratedKnot, band: usize) -> Result<(String, String)> {
    let decs: Vec<_> = k.decorations().iter().filter(|d| d.band == band).collect();
    if decs.is_empty() {
        return Ok(("unknot".into(), "0".into()));
    }
    let mut names = Vec::new();
    let mut group = AbelianGroup::trivial();
    for d in decs {
        let name = d.companion.display_name();
        names.push(if d.copies == 1 {
            name
        } else {
            format!("{}{}", d.copies, name)
        });
        let one = knot_cover_homology(&d.companion, 7)?;
        group = group.direct_sum(&one.power(d.copies as usize));
    }
    Ok((names.join(" # "), group.to_string()))
}

/// Enumerates the equivariant metabolizers eigenline by eigenline and
/// classifies them, reporting which band companions each one couples.
pub fn reversibility_cases(k: &DecoratedKnot) -> Result<ReversibilityReport> {
    if k.summands() != 1 {
        return Err(Error::HypothesisViolated("pattern must be a single knot".into()));
    }
    let v = seifert_mod7(k)?;
    let h = knot_cover_homology(k, 3)?;
    if h != AbelianGroup::from_orders([7u32, 7].map(Into::into)) {
        return Err(Error::HypothesisViolated(format!(
            "H_1(M_3) must be Z7 + Z7, got {h}"
        )));
    }
    let table = eigenspace_table(k.seifert(), 3, P)?;
    for z in EIGENVALUES {
        if table.get(z) != Some(1) {
            return Err(Error::HypothesisViolated(format!(
                "the {z}-eigenspace over F_7 must be 1-dimensional"
            )));
        }
    }
    let vt: [[u64; 2]; 2] = std::array::from_fn(|i| std::array::from_fn(|j| v[j][i]));
    let mut eigen = [0u64; 4];
    for z in EIGENVALUES {
        eigen[band_of_eigenvalue(&v, z)?] = z;
        eigen[2 + band_of_eigenvalue(&vt, z)?] = z;
    }
    if eigen.contains(&0) {
        return Err(Error::InvariantViolation(
            "both eigenvalues landed on one band".into(),
        ));
    }
    let model = Model { eigen };
    // the form may only pair ζ with ζ^{-1}
    for i in 0..4 {
        for j in 0..4 {
            let mut x = [0; 4];
            let mut y = [0; 4];
            x[i] = 1;
            y[j] = 1;
            if model.pair(&x, &y) != model.pair(&model.act(&x), &model.act(&y)) {
                return Err(Error::InvariantViolation(
                    "linking form is not deck-invariant".into(),
                ));
            }
        }
    }

    let (c0, h0) = companion_of(k, 0)?;
    let (c1, h1) = companion_of(k, 1)?;
    let names = [c0.clone(), c1.clone()];
    let couples = |basis: &[[u64; 4]], offset: usize| -> Vec<String> {
        (0..2)
            .filter(|&b| basis.iter().any(|x| x[offset + b] != 0))
            .map(|b| names[b].clone())
            .collect()
    };

    let mut found = Vec::new();
    let mut push = |case, basis: Vec<[u64; 4]>| {
        if model.isotropic(&basis) {
            found.push(EquivariantMetabolizer {
                case,
                couples_pattern: couples(&basis, 0),
                couples_reverse: couples(&basis, 2),
                basis,
            });
        }
    };
    let whole = |zeta| {
        model
            .eigenbasis(zeta)
            .into_iter()
            .map(|i| {
                let mut x = [0; 4];
                x[i] = 1;
                x
            })
            .collect::<Vec<_>>()
    };
    push(MetabolizerCase::TwoEigenspace, whole(2));
    push(MetabolizerCase::FourEigenspace, whole(4));
    for a in model.eigenlines(2) {
        for b in model.eigenlines(4) {
            push(MetabolizerCase::Mixed, vec![normalize(a), normalize(b)]);
        }
    }

    Ok(ReversibilityReport {
        knot: k.display_name(),
        cover_homology: h.to_string(),
        pattern_eigenvalues: [eigen[0], eigen[1]],
        reverse_eigenvalues: [eigen[2], eigen[3]],
        companions: names,
        companion_cover_homology: [h0, h1],
        metabolizers: found,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::{registry, SeifertMatrix};
    use std::collections::BTreeSet;

    fn pattern(j1: &str, j2: &str) -> DecoratedKnot {
        DecoratedKnot::new("P", SeifertMatrix::pretzel_p333())
            .with_decoration(0, registry(j1).unwrap(), 1)
            .unwrap()
            .with_decoration(1, registry(j2).unwrap(), 1)
            .unwrap()
    }

    /// Row-reduced basis of the span, for comparing subspaces.
    fn rref(mut rows: Vec<[u64; 4]>) -> Vec<[u64; 4]> {
        let mut r = 0;
        for c in 0..4 {
            let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, piv);
            let inv = inv7(rows[r][c]);
            rows[r] = rows[r].map(|x| x * inv % P);
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let f = rows[i][c];
                    rows[i] = std::array::from_fn(|k| (rows[i][k] + (P - f) * rows[r][k]) % P);
                }
            }
            r += 1;
        }
        rows.truncate(r);
        rows
    }

    #[test]
    fn eigen_assignment() {
        let r = reversibility_cases(&pattern("6_1", "10_3")).unwrap();
        assert_eq!(r.cover_homology, "Z7 + Z7");
        assert_eq!(r.pattern_eigenvalues, [2, 4]);
        assert_eq!(r.reverse_eigenvalues, [4, 2]);
        assert_eq!(r.companion_cover_homology, ["Z127 + Z127", "Z2059 + Z2059"]);
    }

    #[test]
    fn brute_force_matches() {
        let r = reversibility_cases(&pattern("6_1", "10_3")).unwrap();
        let model = Model { eigen: [2, 4, 4, 2] };
        let vectors: Vec<[u64; 4]> = (1..P.pow(4))
            .map(|i| std::array::from_fn(|k| i / P.pow(k as u32) % P))
            .collect();
        let mut brute = BTreeSet::new();
        for a in &vectors {
            for b in &vectors {
                let basis = rref(vec![*a, *b]);
                if basis.len() != 2 || !model.isotropic(&basis) {
                    continue;
                }
                let invariant = basis
                    .iter()
                    .all(|x| rref([basis.clone(), vec![model.act(x)]].concat()).len() == 2);
                if invariant {
                    brute.insert(basis);
                }
            }
        }
        let found: BTreeSet<_> = r.metabolizers.iter().map(|m| rref(m.basis.clone())).collect();
        assert_eq!(found.len(), r.metabolizers.len());
        assert_eq!(found, brute);
        assert_eq!(found.len(), 10);
        let count = |c| r.metabolizers.iter().filter(|m| m.case == c).count();
        assert_eq!(count(MetabolizerCase::TwoEigenspace), 1);
        assert_eq!(count(MetabolizerCase::FourEigenspace), 1);
        assert_eq!(count(MetabolizerCase::Mixed), 8);
    }

    #[test]
    fn couplings_follow_bands() {
        let r = reversibility_cases(&pattern("6_1", "10_3")).unwrap();
        let case = |r: &ReversibilityReport, c| {
            r.metabolizers.iter().find(|m| m.case == c).unwrap().clone()
        };
        let one = case(&r, MetabolizerCase::TwoEigenspace);
        assert_eq!(one.couples_pattern, ["6_1"]);
        assert_eq!(one.couples_reverse, ["10_3"]);
        let two = case(&r, MetabolizerCase::FourEigenspace);
        assert_eq!(two.couples_pattern, ["10_3"]);
        assert_eq!(two.couples_reverse, ["6_1"]);

        let swapped = reversibility_cases(&pattern("10_3", "6_1")).unwrap();
        let one = case(&swapped, MetabolizerCase::TwoEigenspace);
        assert_eq!(one.couples_pattern, ["10_3"]);
        assert_eq!(one.couples_reverse, ["6_1"]);
        let mixed = swapped
            .metabolizers
            .iter()
            .filter(|m| m.case == MetabolizerCase::Mixed)
            .find(|m| m.basis.iter().all(|x| x.iter().filter(|&&c| c != 0).count() == 2))
            .unwrap();
        assert_eq!(mixed.couples_pattern, ["10_3", "6_1"]);
        assert_eq!(mixed.couples_reverse, ["10_3", "6_1"]);
    }

    #[test]
    fn rejects_other_patterns() {
        let six = registry("6_1").unwrap();
        assert!(matches!(
            reversibility_cases(&six),
            Err(Error::HypothesisViolated(_))
        ));
        let big = DecoratedKnot::new("x", SeifertMatrix::pretzel_p333().connected_sum(&SeifertMatrix::pretzel_p333()));
        assert!(reversibility_cases(&big).is_err());
    }
}
