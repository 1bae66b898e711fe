//! Seifert matrices, decorated knots, and the JSON knot format.
//!
//! JSON grammar:
//!
//! ```text
//! knot       := { "name": string,
//!                 "seifert": [[integer]],
//!                 "decorations": [decoration],   (optional, default [])
//!                 "summands": integer }          (optional, default 1)
//! decoration := { "band": integer, "companion": knot | string, "copies": integer }
//! integer    := JSON number without fraction/exponent | decimal string
//! ```
//!
//! A companion given as a string is looked up with [`registry`].

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Square integer matrix `V` of even size with `det(V - V^T) = ±1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeifertMatrix(IntMatrix);

impl SeifertMatrix {
    pub fn new(v: IntMatrix) -> Result<Self> {
        if !v.is_square() {
            return Err(Error::NotSeifert(format!(
                "{}x{} is not square",
                v.rows(),
                v.cols()
            )));
        }
        if !v.rows().is_multiple_of(2) {
            return Err(Error::NotSeifert(format!("odd size {}", v.rows())));
        }
        let d = v.sub(&v.transpose()).det();
        if !d.abs().is_one() {
            return Err(Error::NotSeifert(format!("det(V - V^T) = {d}")));
        }
        Ok(Self(v))
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::new(IntMatrix::from_rows(rows))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.rows()
    }

    pub fn is_unknot(&self) -> bool {
        self.0.rows() == 0
    }

    /// `det(V - V^T)`, which is ±1.
    pub fn unimodular_sign(&self) -> BigInt {
        self.0.sub(&self.0.transpose()).det()
    }

    /// Genus of the surface the matrix comes from (half the size).
    pub fn genus(&self) -> usize {
        self.0.rows() / 2
    }

    /// The 0x0 matrix.
    pub fn unknot() -> Self {
        Self(IntMatrix::zeros(0, 0))
    }

    /// `P_k = [[0, k], [k+1, 0]]`.
    pub fn pretzel(k: u64) -> Result<Self> {
        let k = positive(k, "pretzel parameter")?;
        Self::new(IntMatrix::new(2, 2, vec![0.into(), k.clone(), k + 1, 0.into()])?)
    }

    /// `A_k = [[k+1, 1], [0, -k]]`, the two-bridge knot `K(k, U)`.
    pub fn two_bridge(k: u64) -> Result<Self> {
        let k = positive(k, "two-bridge parameter")?;
        Self::new(IntMatrix::new(
            2,
            2,
            vec![&k + 1, 1.into(), 0.into(), -k],
        )?)
    }

    /// `B_k = [[0, k+1], [k, -k]]`, the same knot in the other basis.
    pub fn two_bridge_alt(k: u64) -> Result<Self> {
        let k = positive(k, "two-bridge parameter")?;
        Self::new(IntMatrix::new(
            2,
            2,
            vec![0.into(), &k + 1, k.clone(), -k],
        )?)
    }

    /// `P(3,-3,3)`; same form as `P_1`.
    pub fn pretzel_p333() -> Self {
        Self::pretzel(1).expect("P_1 is a Seifert matrix")
    }

    /// Block sum.
    pub fn connected_sum(&self, other: &Self) -> Self {
        Self(self.0.block_diag(&other.0))
    }

    /// `k`-fold connected sum; `k = 0` gives the unknot.
    pub fn multiple(&self, k: u64) -> Self {
        (0..k).fold(Self::unknot(), |acc, _| acc.connected_sum(self))
    }

    pub fn mirror(&self) -> Self {
        Self(self.0.neg())
    }

    pub fn reverse(&self) -> Self {
        Self(self.0.transpose())
    }
}

impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn positive(k: u64, what: &str) -> Result<BigInt> {
    if k < 1 {
        return Err(Error::InvalidParameter(format!("{what} must be >= 1")));
    }
    Ok(BigInt::from(k))
}

/// A companion knot tied into one band of the surface, `copies` times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandDecoration {
    pub band: usize,
    pub companion: Box<DecoratedKnot>,
    pub copies: u64,
}

/// Seifert matrix plus band decorations, taken `summands` times.
///
/// Decorations never change the Seifert form, so abelian invariants only
/// look at [`DecoratedKnot::seifert`] and [`DecoratedKnot::summands`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecoratedKnot {
    name: String,
    seifert: SeifertMatrix,
    decorations: Vec<BandDecoration>,
    summands: u64,
}

impl DecoratedKnot {
    pub fn new(name: impl Into<String>, seifert: SeifertMatrix) -> Self {
        Self {
            name: name.into(),
            seifert,
            decorations: Vec::new(),
            summands: 1,
        }
    }

    pub fn unknot() -> Self {
        Self::new("unknot", SeifertMatrix::unknot())
    }

    pub fn with_decoration(
        mut self,
        band: usize,
        companion: DecoratedKnot,
        copies: u64,
    ) -> Result<Self> {
        if band >= self.seifert.size() {
            return Err(Error::InvalidParameter(format!(
                "band {band} out of range for a {}x{} Seifert matrix",
                self.seifert.size(),
                self.seifert.size()
            )));
        }
        self.decorations.push(BandDecoration {
            band,
            companion: Box::new(companion),
            copies,
        });
        Ok(self)
    }

    pub fn with_summands(mut self, summands: u64) -> Result<Self> {
        if summands == 0 {
            return Err(Error::InvalidParameter("summands must be >= 1".into()));
        }
        self.summands = summands;
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Seifert matrix of a single summand.
    pub fn seifert(&self) -> &SeifertMatrix {
        &self.seifert
    }

    pub fn decorations(&self) -> &[BandDecoration] {
        &self.decorations
    }

    pub fn summands(&self) -> u64 {
        self.summands
    }

    /// Seifert matrix of the whole connected sum.
    pub fn full_seifert(&self) -> SeifertMatrix {
        self.seifert.multiple(self.summands)
    }

    /// Decorations of the whole connected sum, bands re-indexed.
    pub fn full_decorations(&self) -> Vec<BandDecoration> {
        let size = self.seifert.size();
        (0..self.summands as usize)
            .flat_map(|s| {
                self.decorations.iter().map(move |d| BandDecoration {
                    band: d.band + s * size,
                    ..d.clone()
                })
            })
            .collect()
    }

    /// Connected sum; the result has a single summand.
    pub fn connected_sum(&self, other: &Self) -> Self {
        let offset = self.seifert.size() * self.summands as usize;
        let mut decorations = self.full_decorations();
        decorations.extend(other.full_decorations().into_iter().map(|d| BandDecoration {
            band: d.band + offset,
            ..d
        }));
        Self {
            name: format!("{} # {}", self.display_name(), other.display_name()),
            seifert: self.full_seifert().connected_sum(&other.full_seifert()),
            decorations,
            summands: 1,
        }
    }

    /// Mirror image; companions are mirrored too.
    pub fn mirror(&self) -> Self {
        Self {
            name: format!("-{}", self.display_name()),
            seifert: self.seifert.mirror(),
            decorations: self
                .decorations
                .iter()
                .map(|d| BandDecoration {
                    companion: Box::new(d.companion.mirror()),
                    ..d.clone()
                })
                .collect(),
            summands: self.summands,
        }
    }

    /// `name` prefixed with the multiplicity when it is not 1.
    pub fn display_name(&self) -> String {
        if self.summands == 1 {
            self.name.clone()
        } else {
            format!("{}{}", self.summands, self.name)
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let v: Value =
            serde_json::from_str(s).map_err(|e| Error::KnotFormat(e.to_string()))?;
        Self::from_json(&v)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::KnotFormat("knot must be a JSON object".into()))?;
        for key in obj.keys() {
            if !["name", "seifert", "decorations", "summands"].contains(&key.as_str()) {
                return Err(Error::KnotFormat(format!("unknown field \"{key}\"")));
            }
        }
        let name = match obj.get("name") {
            Some(Value::String(s)) => s.clone(),
            Some(_) => return Err(Error::KnotFormat("\"name\" must be a string".into())),
            None => return Err(Error::KnotFormat("missing \"name\"".into())),
        };
        let rows = obj
            .get("seifert")
            .ok_or_else(|| Error::KnotFormat("missing \"seifert\"".into()))?
            .as_array()
            .ok_or_else(|| Error::KnotFormat("\"seifert\" must be an array of rows".into()))?;
        let mut big_rows = Vec::with_capacity(rows.len());
        for row in rows {
            let row = row
                .as_array()
                .ok_or_else(|| Error::KnotFormat("Seifert row must be an array".into()))?;
            big_rows.push(row.iter().map(json_int).collect::<Result<Vec<_>>>()?);
        }
        let matrix = IntMatrix::from_big_rows(big_rows)
            .map_err(|e| Error::KnotFormat(e.to_string()))?;
        let mut knot = Self::new(name, SeifertMatrix::new(matrix)?);
        if let Some(s) = obj.get("summands") {
            knot = knot.with_summands(json_u64(s, "summands")?)?;
        }
        if let Some(decs) = obj.get("decorations") {
            let decs = decs
                .as_array()
                .ok_or_else(|| Error::KnotFormat("\"decorations\" must be an array".into()))?;
            for d in decs {
                let d = d
                    .as_object()
                    .ok_or_else(|| Error::KnotFormat("decoration must be an object".into()))?;
                let band = json_u64(field(d, "band")?, "band")? as usize;
                let copies = json_u64(field(d, "copies")?, "copies")?;
                let companion = match field(d, "companion")? {
                    Value::String(s) => registry(s).ok_or_else(|| {
                        Error::KnotFormat(format!("unknown companion knot \"{s}\""))
                    })?,
                    other => Self::from_json(other)?,
                };
                knot = knot.with_decoration(band, companion, copies)?;
            }
        }
        Ok(knot)
    }

    pub fn to_json(&self) -> Value {
        let seifert: Vec<Value> = self
            .seifert
            .matrix()
            .to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(int_json).collect()))
            .collect();
        let decorations: Vec<Value> = self
            .decorations
            .iter()
            .map(|d| {
                json!({
                    "band": d.band,
                    "companion": d.companion.to_json(),
                    "copies": d.copies,
                })
            })
            .collect();
        json!({
            "name": self.name,
            "seifert": seifert,
            "decorations": decorations,
            "summands": self.summands,
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("JSON values serialize")
    }
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::KnotFormat(format!("decoration missing \"{key}\"")))
}

/// Integer from a JSON number or decimal string, at any size.
pub fn json_int(v: &Value) -> Result<BigInt> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.trim().to_string(),
        _ => return Err(Error::KnotFormat(format!("expected an integer, got {v}"))),
    };
    text.parse::<BigInt>()
        .map_err(|_| Error::KnotFormat(format!("expected an integer, got {text}")))
}

fn json_u64(v: &Value, what: &str) -> Result<u64> {
    let n = json_int(v)?;
    if n.is_negative() {
        return Err(Error::KnotFormat(format!("\"{what}\" must be nonnegative")));
    }
    n.to_u64()
        .ok_or_else(|| Error::KnotFormat(format!("\"{what}\" = {n} is too large")))
}

fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

/// Built-in knots: `unknot`, `6_1`, `10_3`, `P<k>` (pretzel `P_k`),
/// `K(<k>,U)` (two-bridge `A_k`), and `P(3,-3,3)` / `P333`.
pub fn registry(name: &str) -> Option<DecoratedKnot> {
    let knot = |label: &str, s: Result<SeifertMatrix>| s.ok().map(|s| DecoratedKnot::new(label, s));
    match name {
        "unknot" | "U" => Some(DecoratedKnot::unknot()),
        "6_1" => knot("6_1", SeifertMatrix::two_bridge(1)),
        "10_3" => knot("10_3", SeifertMatrix::two_bridge(2)),
        "P(3,-3,3)" | "P333" => Some(DecoratedKnot::new("P(3,-3,3)", SeifertMatrix::pretzel_p333())),
        _ => {
            if let Some(k) = name.strip_prefix('P').and_then(|r| r.parse::<u64>().ok()) {
                return knot(name, SeifertMatrix::pretzel(k));
            }
            let k = name
                .strip_prefix("K(")
                .and_then(|r| r.strip_suffix(",U)"))
                .and_then(|r| r.parse::<u64>().ok())?;
            knot(name, SeifertMatrix::two_bridge(k))
        }
    }
}

/// Names accepted by [`registry`] without a numeric parameter.
pub const REGISTRY_NAMES: &[&str] = &["unknot", "6_1", "10_3", "P(3,-3,3)"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_constructors() {
        assert_eq!(
            SeifertMatrix::pretzel(1).unwrap().matrix(),
            &IntMatrix::from_rows(&[[0, 1], [2, 0]])
        );
        assert_eq!(
            SeifertMatrix::pretzel(2).unwrap().matrix(),
            &IntMatrix::from_rows(&[[0, 2], [3, 0]])
        );
        assert_eq!(
            SeifertMatrix::two_bridge(2).unwrap().matrix(),
            &IntMatrix::from_rows(&[[3, 1], [0, -2]])
        );
        assert_eq!(
            SeifertMatrix::two_bridge_alt(1).unwrap().matrix(),
            &IntMatrix::from_rows(&[[0, 2], [1, -1]])
        );
        assert_eq!(SeifertMatrix::pretzel_p333(), SeifertMatrix::pretzel(1).unwrap());
        assert!(SeifertMatrix::pretzel(0).is_err());
        assert!(SeifertMatrix::two_bridge(0).is_err());
    }

    #[test]
    fn validation() {
        assert!(SeifertMatrix::from_rows(&[[1, 0], [0, 1]]).is_err());
        assert!(SeifertMatrix::from_rows(&[[1]]).is_err());
        assert!(SeifertMatrix::new(IntMatrix::zeros(2, 3)).is_err());
        assert!(SeifertMatrix::unknot().is_unknot());
    }

    #[test]
    fn mirror_reverse_sum() {
        let p = SeifertMatrix::pretzel(1).unwrap();
        assert_eq!(p.mirror().matrix(), &IntMatrix::from_rows(&[[0, -1], [-2, 0]]));
        assert_eq!(p.mirror().mirror(), p);
        let a = SeifertMatrix::two_bridge(1).unwrap();
        assert_eq!(a.reverse().matrix(), &IntMatrix::from_rows(&[[2, 0], [1, -1]]));
        let s = p.connected_sum(&p);
        assert_eq!(s.size(), 4);
        assert_eq!(s.unimodular_sign().abs(), BigInt::one());
        assert_eq!(p.multiple(0), SeifertMatrix::unknot());
    }

    #[test]
    fn decorations_reindex_on_sum() {
        let six = registry("6_1").unwrap();
        let p = registry("P333")
            .unwrap()
            .with_decoration(0, six.clone(), 2)
            .unwrap()
            .with_summands(2)
            .unwrap();
        let s = p.connected_sum(&p);
        let bands: Vec<usize> = s.decorations().iter().map(|d| d.band).collect();
        assert_eq!(bands, vec![0, 2, 4, 6]);
        assert_eq!(s.seifert().size(), 8);
        assert!(p.clone().with_decoration(2, six, 1).is_err());
    }

    #[test]
    fn json_round_trip() {
        let src = r#"{"name":"big","seifert":[["123456789012345678901234567890",1],[0,-1]],
                      "decorations":[{"band":1,"companion":"6_1","copies":"3"}],"summands":2}"#;
        // the diagonal does not enter det(V - V^T)
        let k = DecoratedKnot::from_json_str(src).unwrap();
        assert_eq!(k.summands(), 2);
        assert_eq!(k.decorations()[0].copies, 3);
        let back = DecoratedKnot::from_json_str(&k.to_json_string()).unwrap();
        assert_eq!(back, k);
        assert!(k.to_json_string().contains("\"123456789012345678901234567890\""));
    }

    #[test]
    fn json_errors() {
        for bad in [
            "[]",
            r#"{"seifert":[]}"#,
            r#"{"name":"x","seifert":[[1,2,3]]}"#,
            r#"{"name":"x","seifert":[[1.5,0],[0,1]]}"#,
            r#"{"name":"x","seifert":[[0,1],[2,0]],"summands":0}"#,
            r#"{"name":"x","seifert":[[0,1],[2,0]],"extra":1}"#,
            r#"{"name":"x","seifert":[[0,1],[2,0]],"decorations":[{"band":5,"companion":"6_1","copies":1}]}"#,
            "not json",
        ] {
            assert!(
                matches!(
                    DecoratedKnot::from_json_str(bad),
                    Err(Error::KnotFormat(_) | Error::NotSeifert(_) | Error::InvalidParameter(_))
                ),
                "{bad}"
            );
        }
    }

    #[test]
    fn registry_names() {
        for name in REGISTRY_NAMES {
            assert!(registry(name).is_some(), "{name}");
        }
        assert_eq!(
            registry("P3").unwrap().seifert(),
            &SeifertMatrix::pretzel(3).unwrap()
        );
        assert_eq!(
            registry("K(4,U)").unwrap().seifert(),
            &SeifertMatrix::two_bridge(4).unwrap()
        );
        assert!(registry("P0").is_none());
        assert!(registry("8_20").is_none());
    }
}
