//! Browser bindings for three operations: cover homology of a knot, the
//! obstruction staircase of a pretzel pair, and genus propagation of a
//! staircase. Each export wraps a plain function so the logic runs natively
//! in tests.

use cobound::bounds::{obstruction_family, pretzel_pair, SearchLimits};
use cobound::covers::knot_cover_homology;
use cobound::knots::{registry, DecoratedKnot};
use cobound::quadrant::{GenusFamily, QuadrantUnion};
use cobound::render::{ascii_family, svg_family};
use wasm_bindgen::prelude::*;

/// Largest genus the demo sweeps before giving up on reaching `Q(0,0)`.
const MAX_DEMO_GENUS: u64 = 40;
/// Largest summand count the demo accepts; keeps the page responsive.
const MAX_DEMO_SUMMANDS: u64 = 64;

/// Knot from JSON text, or from a built-in name when the text is not JSON.
pub fn parse_knot(input: &str) -> Result<DecoratedKnot, String> {
    let trimmed = input.trim();
    if trimmed.starts_with('{') {
        DecoratedKnot::from_json_str(trimmed).map_err(|e| e.to_string())
    } else {
        registry(trimmed).ok_or_else(|| format!("unknown knot {trimmed:?}"))
    }
}

pub fn cover_text(knot: &str, n: u32) -> Result<String, String> {
    let k = parse_knot(knot)?;
    if k.summands() > MAX_DEMO_SUMMANDS {
        return Err(format!("at most {MAX_DEMO_SUMMANDS} summands in the demo"));
    }
    knot_cover_homology(&k, n)
        .map(|h| h.to_string())
        .map_err(|e| e.to_string())
}

/// SVG of the obstruction staircases for `n P_1 → m P_2`, one panel per genus.
pub fn pretzel_svg(n: u64, m: u64) -> Result<String, String> {
    if n > MAX_DEMO_SUMMANDS || m > MAX_DEMO_SUMMANDS {
        return Err(format!("at most {MAX_DEMO_SUMMANDS} summands in the demo"));
    }
    let (k1, k0) = pretzel_pair(n, m).map_err(|e| e.to_string())?;
    let f = obstruction_family(&k1, &k0, SearchLimits::default(), MAX_DEMO_GENUS)
        .map_err(|e| e.to_string())?;
    Ok(svg_family(&f))
}

fn shifted(corners: &str) -> Result<GenusFamily, String> {
    let s = QuadrantUnion::parse(corners).map_err(|e| e.to_string())?;
    if s.is_empty() {
        return Err("enter at least one corner".into());
    }
    let (a, b) = s.extent();
    Ok(GenusFamily::from_shifts(s, (a + b + 1) as usize))
}

pub fn staircase_svg(corners: &str) -> Result<String, String> {
    shifted(corners).map(|f| svg_family(&f))
}

pub fn staircase_ascii(corners: &str) -> Result<String, String> {
    shifted(corners).map(|f| ascii_family(&f))
}

#[wasm_bindgen(js_name = coverHomology)]
pub fn cover_homology_js(knot: &str, n: u32) -> Result<String, JsError> {
    cover_text(knot, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = pretzelObstructions)]
pub fn pretzel_obstructions_js(n: u32, m: u32) -> Result<String, JsError> {
    pretzel_svg(n.into(), m.into()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = staircaseSvg)]
pub fn staircase_svg_js(corners: &str) -> Result<String, JsError> {
    staircase_svg(corners).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = staircaseAscii)]
pub fn staircase_ascii_js(corners: &str) -> Result<String, JsError> {
    staircase_ascii(corners).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cover_by_name_and_json() {
        assert_eq!(cover_text("6_1", 3).unwrap(), "Z7 + Z7");
        let json = r#"{"name": "P1", "seifert": [[0, 1], [2, 0]], "summands": 2}"#;
        assert_eq!(cover_text(json, 2).unwrap(), "Z3 + Z3 + Z3 + Z3");
        assert!(cover_text("nope", 2).is_err());
        assert!(cover_text("6_1", 1).is_err());
    }

    #[test]
    fn pretzel_panels() {
        let svg = pretzel_svg(4, 2).unwrap();
        assert!(svg.contains(">g=0</text>") && svg.contains(">g≥4</text>"));
        assert!(pretzel_svg(100, 1).is_err());
    }

    #[test]
    fn staircase_panels() {
        let text = staircase_ascii("(4,2)").unwrap();
        assert!(text.starts_with("g=0: Q(4,2)\n"));
        assert!(text.contains("g>=6: Q(0,0)"));
        assert!(staircase_svg("").is_err());
        assert!(staircase_svg("(1,").is_err());
    }
}
