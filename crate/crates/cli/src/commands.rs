use std::fs;
use std::path::Path;

use cobound::bounds::{obstruction_staircase, Obstruction, SearchLimits};
use cobound::covers::{eigenspace_table, knot_alexander_invariants, knot_cover_homology};
use cobound::knots::{registry, DecoratedKnot};
use cobound::quadrant::{GenusFamily, QuadrantUnion};
use cobound::render::{ascii_family, ascii_grid, svg_family, svg_set};
use num_bigint::BigInt;
use serde_json::json;

use crate::args::{BoundArgs, CoverArgs, EigenArgs, Format, KnotArgs, StaircaseArgs};
use crate::{CliError, CliResult};

/// `x` as a machine integer, or a user error naming the flag.
pub fn small<T: TryFrom<BigInt>>(x: &BigInt, flag: &str) -> CliResult<T> {
    T::try_from(x.clone()).map_err(|_| CliError::User(format!("--{flag} = {x} is out of range")))
}

pub fn unsupported(format: Format, command: &str) -> CliError {
    CliError::User(format!("{command} does not support --format {format:?}").to_lowercase())
}

pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("values serialize")
}

/// A JSON file if the path exists, otherwise a built-in name.
pub fn load_knot(spec: &str, mult: &BigInt) -> CliResult<DecoratedKnot> {
    let knot = if Path::new(spec).is_file() {
        let text = fs::read_to_string(spec)
            .map_err(|e| CliError::User(format!("cannot read {spec}: {e}")))?;
        DecoratedKnot::from_json_str(&text).map_err(|e| CliError::User(format!("{spec}: {e}")))?
    } else {
        registry(spec).ok_or_else(|| {
            CliError::User(format!("{spec} is neither a knot file nor a built-in knot"))
        })?
    };
    let mult: u64 = small(mult, "mult")?;
    if mult == 0 {
        return Err(CliError::User("multiplicity must be at least 1".into()));
    }
    let summands = knot
        .summands()
        .checked_mul(mult)
        .ok_or_else(|| CliError::User("summand count overflows".into()))?;
    Ok(knot.with_summands(summands)?)
}

fn knot_arg(a: &KnotArgs) -> CliResult<DecoratedKnot> {
    load_knot(&a.knot, &a.mult)
}

pub fn cover(a: &CoverArgs, f: Format) -> CliResult<String> {
    let k = knot_arg(&a.knot)?;
    let n: u32 = small(&a.n, "n")?;
    let h = knot_cover_homology(&k, n)?;
    match f {
        Format::Text => Ok(h.to_string()),
        Format::Json => Ok(to_json(&json!({
            "knot": k.display_name(),
            "n": n,
            "homology": h.to_string(),
            "invariant_factors": h.invariant_factors().iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        }))),
        _ => Err(unsupported(f, "cover")),
    }
}

pub fn eigen(a: &EigenArgs, f: Format) -> CliResult<String> {
    let k = knot_arg(&a.knot)?;
    let n: u64 = small(&a.n, "n")?;
    let p: u64 = small(&a.p, "p")?;
    let t = eigenspace_table(k.seifert(), n, p)?;
    let scale = k.summands();
    match f {
        Format::Text => Ok(t
            .entries
            .iter()
            .map(|(z, b)| format!("zeta={z}: {}", *b as u128 * scale as u128))
            .collect::<Vec<_>>()
            .join("\n")),
        Format::Json => {
            let entries: serde_json::Map<String, serde_json::Value> = t
                .entries
                .iter()
                .map(|(z, b)| (z.to_string(), json!((*b as u128 * scale as u128).to_string())))
                .collect();
            Ok(to_json(&json!({
                "knot": k.display_name(),
                "n": n,
                "p": p,
                "betti": entries,
            })))
        }
        _ => Err(unsupported(f, "eigen")),
    }
}

pub fn alexander(a: &KnotArgs, f: Format) -> CliResult<String> {
    let k = knot_arg(a)?;
    let inv = knot_alexander_invariants(&k)?;
    match f {
        Format::Text => {
            let mut lines = vec![
                format!("module: {}", inv.decomposition),
                format!("rank: {}", inv.rank),
            ];
            lines.extend(
                inv.primary_ranks
                    .iter()
                    .map(|(p, r)| format!("primary {p}: {r}")),
            );
            Ok(lines.join("\n"))
        }
        Format::Json => Ok(to_json(&json!({
            "knot": k.display_name(),
            "invariant_factors": inv.decomposition.invariant_factors.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "rank": inv.rank,
            "primary_ranks": inv.primary_ranks.iter().map(|(p, r)| json!({"f": p.to_string(), "rank": r})).collect::<Vec<_>>(),
        }))),
        _ => Err(unsupported(f, "alexander")),
    }
}

fn obstruction_lines(o: &Obstruction) -> String {
    let mut out = format!("G_{} ⊆ {}", o.genus, o.outer);
    for (label, c) in [("c0", &o.c0_certificate), ("c2", &o.c2_certificate)] {
        match c {
            Some(c) => out.push_str(&format!("\n  {c}")),
            None => out.push_str(&format!("\n  {label} ≥ 0 [no positive bound]")),
        }
    }
    out
}

pub fn bound(a: &BoundArgs, f: Format) -> CliResult<String> {
    let k1 = load_knot(&a.k1, &a.mult1)?;
    let k0 = load_knot(&a.k0, &a.mult0)?;
    let limits = SearchLimits::new(small(&a.max_n, "max-n")?, small(&a.max_p, "max-p")?)?;
    let (genera, single): (Vec<u64>, bool) = match (&a.g, &a.g_max) {
        (Some(g), _) => (vec![small(g, "g")?], true),
        (None, Some(top)) => ((0..=small::<u64>(top, "g-max")?).collect(), false),
        (None, None) => unreachable!("clap requires --g or --g-max"),
    };
    let mut obstructions = Vec::new();
    for g in genera {
        let o = obstruction_staircase(&k1, &k0, g, limits)?;
        let done = o.outer.is_everything();
        obstructions.push(o);
        if done && !single {
            break;
        }
    }
    if single {
        let o = &obstructions[0];
        return match f {
            Format::Text => Ok(obstruction_lines(o)),
            Format::Json => Ok(to_json(o)),
            Format::Ascii => Ok(ascii_grid(&o.outer, None)),
            Format::Svg => Ok(svg_set(&o.outer, Some(&format!("g={}", o.genus)))),
        };
    }
    let family = GenusFamily::new(obstructions.iter().map(|o| o.outer.clone()).collect());
    match f {
        Format::Text => Ok(obstructions
            .iter()
            .map(obstruction_lines)
            .collect::<Vec<_>>()
            .join("\n")),
        Format::Json => Ok(to_json(&obstructions)),
        Format::Ascii => Ok(ascii_family(&family)),
        Format::Svg => Ok(svg_family(&family)),
    }
}

/// Parses `"(g,a,b),(g,a,b)"`.
fn parse_triples(s: &str) -> CliResult<Vec<(u64, u64, u64)>> {
    let bad = || CliError::User(format!("cannot parse triples from {s:?}"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Ok(Vec::new());
    }
    let inner = compact
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(bad)?;
    inner
        .split("),(")
        .map(|t| {
            let parts: Vec<u64> = t
                .split(',')
                .map(|x| x.parse::<u64>().map_err(|_| bad()))
                .collect::<CliResult<_>>()?;
            match parts[..] {
                [g, a, b] => Ok((g, a, b)),
                _ => Err(bad()),
            }
        })
        .collect()
}

fn family_text(f: &GenusFamily) -> String {
    f.per_genus()
        .iter()
        .enumerate()
        .map(|(g, s)| format!("g={g}: {s}"))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn staircase(a: &StaircaseArgs, f: Format) -> CliResult<String> {
    let family = match (&a.corners, &a.sequence) {
        (Some(c), _) => {
            let s = QuadrantUnion::parse(c)?;
            match &a.shifts {
                None => {
                    return match f {
                        Format::Text => Ok(s.to_string()),
                        Format::Json => Ok(to_json(&s)),
                        Format::Ascii => Ok(ascii_grid(&s, None)),
                        Format::Svg => Ok(svg_set(&s, None)),
                    }
                }
                Some(k) => GenusFamily::from_shifts(s, small(k, "shifts")?),
            }
        }
        (None, Some(seq)) => GenusFamily::from_sequence(&parse_triples(seq)?),
        (None, None) => unreachable!("clap requires --corners or --sequence"),
    };
    match f {
        Format::Text => Ok(family_text(&family)),
        Format::Json => Ok(to_json(&json!({
            "per_genus": family.per_genus(),
            "sequence": family.to_sequence().ok(),
        }))),
        Format::Ascii => Ok(ascii_family(&family)),
        Format::Svg => Ok(svg_family(&family)),
    }
}
