use cobound::metacyclic::{
    enumerate_metabolizers, lens_cover_decomposition, metabolizer_support_check,
    metacyclic_c0_bound, metacyclic_eigen_betti, metacyclic_homology_k1j, multi_eigen_betti,
    realization_upper, reversibility_cases, LinkingForm, MetacyclicFamily,
};
use serde_json::json;

use crate::args::{Family, Format, MetacyclicCommand};
use crate::commands::{load_knot, small, to_json, unsupported};
use crate::CliResult;

fn family(f: Family) -> MetacyclicFamily {
    match f {
        Family::Alpha => MetacyclicFamily::Alpha6_1,
        Family::Beta => MetacyclicFamily::Beta10_3,
    }
}

/// Text or JSON only.
fn emit(f: Format, cmd: &str, text: String, json: serde_json::Value) -> CliResult<String> {
    match f {
        Format::Text => Ok(text),
        Format::Json => Ok(to_json(&json)),
        _ => Err(unsupported(f, cmd)),
    }
}

pub fn run(cmd: &MetacyclicCommand, f: Format) -> CliResult<String> {
    match cmd {
        MetacyclicCommand::Bound { alpha, m, g, n } => {
            let cert = metacyclic_c0_bound(alpha, m, small(g, "g")?, n)?;
            match f {
                Format::Text => Ok(cert.to_string()),
                Format::Json => Ok(cert.to_json()),
                _ => Err(unsupported(f, "metacyclic bound")),
            }
        }
        MetacyclicCommand::Homology(a) => {
            let j = load_knot(&a.knot, &a.mult)?;
            let h = metacyclic_homology_k1j(&j)?;
            emit(
                f,
                "metacyclic homology",
                h.to_string(),
                json!({ "companion": j.display_name(), "homology": h.to_string() }),
            )
        }
        MetacyclicCommand::Eigen { family: fam, scale, p } => {
            let p: u64 = small(p, "p")?;
            let b = metacyclic_eigen_betti(family(*fam), scale, p)?;
            emit(
                f,
                "metacyclic eigen",
                b.to_string(),
                json!({ "family": family(*fam), "scale": scale.to_string(), "p": p, "betti": b.to_string() }),
            )
        }
        MetacyclicCommand::MultiEigen {
            family: fam,
            n,
            a,
            scale,
            p,
        } => {
            let p: u64 = small(p, "p")?;
            let b = multi_eigen_betti(family(*fam), n, a, scale, p)?;
            emit(
                f,
                "metacyclic multi-eigen",
                b.to_string(),
                json!({
                    "family": family(*fam),
                    "n": n.to_string(),
                    "a": a.to_string(),
                    "scale": scale.to_string(),
                    "p": p,
                    "betti": b.to_string(),
                }),
            )
        }
        MetacyclicCommand::Lens { n, a } => {
            let d = lens_cover_decomposition(n, a)?;
            emit(f, "metacyclic lens", d.to_string(), serde_json::to_value(&d).expect("serializes"))
        }
        MetacyclicCommand::Metabolizers { n, m } => {
            let form = LinkingForm::standard(small(n, "n")?, small(m, "m")?)?;
            let ms = enumerate_metabolizers(&form)?;
            let text = std::iter::once(format!("{} metabolizers", ms.len()))
                .chain(ms.iter().map(|x| format!("  order {} generated by {:?}", x.order, x.generators)))
                .collect::<Vec<_>>()
                .join("\n");
            emit(f, "metacyclic metabolizers", text, serde_json::to_value(&ms).expect("serializes"))
        }
        MetacyclicCommand::Support { n, m, g } => {
            let r = metabolizer_support_check(small(n, "n")?, small(m, "m")?, small(g, "g")?)?;
            let text = format!(
                "{}: {} self-annihilating subgroups of order {}, {} with a first-block witness",
                if r.holds { "holds" } else { "fails" },
                r.subgroups.len(),
                r.subgroup_order,
                r.subgroups.iter().filter(|s| s.witness.is_some()).count()
            );
            emit(f, "metacyclic support", text, serde_json::to_value(&r).expect("serializes"))
        }
        MetacyclicCommand::Realize { n, m, alpha, beta, g } => {
            let (c0, c2) = realization_upper(n, m, alpha, beta, g)?;
            emit(
                f,
                "metacyclic realize",
                format!("Q({c0},{c2})"),
                json!({ "c0": c0.to_string(), "c2": c2.to_string() }),
            )
        }
        MetacyclicCommand::Reversibility { knot } => {
            let k = load_knot(knot, &1.into())?;
            let r = reversibility_cases(&k)?;
            let mut lines = vec![
                format!("{}: H_1(M_3) = {}", r.knot, r.cover_homology),
                format!(
                    "companions: J1 = {} (H_1(M_7) = {}), J2 = {} (H_1(M_7) = {})",
                    r.companions[0],
                    r.companion_cover_homology[0],
                    r.companions[1],
                    r.companion_cover_homology[1]
                ),
            ];
            for m in &r.metabolizers {
                lines.push(format!(
                    "{}: basis {:?}; pattern couples [{}], reverse couples [{}]",
                    m.case,
                    m.basis,
                    m.couples_pattern.join(", "),
                    m.couples_reverse.join(", ")
                ));
            }
            emit(f, "metacyclic reversibility", lines.join("\n"), serde_json::to_value(&r).expect("serializes"))
        }
    }
}
