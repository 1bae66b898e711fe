//! ASCII and SVG pictures of staircases.
//!
//! ASCII grids put the origin at the lower left, `c0` running right and `c2`
//! running up. `*` marks a corner, `o` any other member, `.` a non-member.
//! The default window is `(max a + 3) x (max b + 3)` lattice points.
//!
//! Output depends only on the input; there are no timestamps or ids.

use std::fmt::Write;

use crate::quadrant::{GenusFamily, QuadrantUnion};

/// Lattice window `[0, width) x [0, height)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub width: u64,
    pub height: u64,
}

impl Window {
    pub fn for_set(s: &QuadrantUnion) -> Self {
        let (a, b) = s.extent();
        Self {
            width: a + 3,
            height: b + 3,
        }
    }

    /// Smallest window fitting every set of the family.
    pub fn for_family(f: &GenusFamily) -> Self {
        f.per_genus().iter().map(Self::for_set).fold(
            Self {
                width: 3,
                height: 3,
            },
            |w, x| Self {
                width: w.width.max(x.width),
                height: w.height.max(x.height),
            },
        )
    }
}

fn cell(s: &QuadrantUnion, c0: u64, c2: u64) -> char {
    if s.corners().contains(&(c0, c2)) {
        '*'
    } else if s.member(c0, c2) {
        'o'
    } else {
        '.'
    }
}

fn digits(x: u64) -> usize {
    x.to_string().len()
}

pub fn ascii_grid(s: &QuadrantUnion, window: Option<Window>) -> String {
    let w = window.unwrap_or_else(|| Window::for_set(s));
    let lw = digits(w.height.saturating_sub(1));
    let cw = digits(w.width.saturating_sub(1));
    let mut out = String::new();
    out.push_str("c2\n");
    for c2 in (0..w.height).rev() {
        let cells: Vec<String> = (0..w.width)
            .map(|c0| format!("{:>cw$}", cell(s, c0, c2)))
            .collect();
        writeln!(out, "{c2:>lw$} | {}", cells.join(" ")).unwrap();
    }
    let row_len = w.width as usize * (cw + 1);
    writeln!(out, "{:lw$} +{} c0", "", "-".repeat(row_len)).unwrap();
    let ticks: Vec<String> = (0..w.width).map(|c0| format!("{c0:>cw$}")).collect();
    writeln!(out, "{:lw$}   {}", "", ticks.join(" ")).unwrap();
    out
}

fn panel_title(f: &GenusFamily, g: usize) -> (String, String) {
    let last = g + 1 == f.per_genus().len() && f.per_genus()[g].is_everything();
    if last {
        (format!("g>={g}"), format!("g≥{g}"))
    } else {
        (format!("g={g}"), format!("g={g}"))
    }
}

/// One grid per genus, separated by blank lines, in a shared window.
pub fn ascii_family(f: &GenusFamily) -> String {
    let w = Window::for_family(f);
    let mut out = String::new();
    for (g, s) in f.per_genus().iter().enumerate() {
        if g > 0 {
            out.push('\n');
        }
        writeln!(out, "{}: {s}", panel_title(f, g).0).unwrap();
        out.push_str(&ascii_grid(s, Some(w)));
    }
    out
}

const STEP: u64 = 20;
const LEFT: u64 = 36;
const TOP: u64 = 30;
const RIGHT: u64 = 24;
const BOTTOM: u64 = 36;

fn panel_size(w: Window) -> (u64, u64) {
    (
        LEFT + (w.width - 1) * STEP + RIGHT,
        TOP + (w.height - 1) * STEP + BOTTOM,
    )
}

fn svg_panel(out: &mut String, s: &QuadrantUnion, w: Window, ox: u64, title: Option<&str>) {
    let x = |c0: u64| ox + LEFT + c0 * STEP;
    let y = |c2: u64| TOP + (w.height - 1 - c2) * STEP;
    let (x0, y0) = (x(0) - 10, y(0) + 10);
    let (x1, y1) = (x(w.width - 1) + 12, y(w.height - 1) - 12);
    if let Some(t) = title {
        writeln!(
            out,
            r#"<text x="{}" y="16" font-size="13" text-anchor="middle">{t}</text>"#,
            (x0 + x1) / 2
        )
        .unwrap();
    }
    writeln!(out, r#"<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="black"/>"#).unwrap();
    writeln!(out, r#"<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="black"/>"#).unwrap();
    writeln!(
        out,
        r#"<text x="{}" y="{}" font-size="11">c0</text>"#,
        x1 + 2,
        y0 + 4
    )
    .unwrap();
    writeln!(
        out,
        r#"<text x="{}" y="{}" font-size="11" text-anchor="middle">c2</text>"#,
        x0,
        y1 - 4
    )
    .unwrap();
    for c0 in 0..w.width {
        writeln!(
            out,
            r#"<text x="{}" y="{}" font-size="10" text-anchor="middle">{c0}</text>"#,
            x(c0),
            y0 + 14
        )
        .unwrap();
    }
    for c2 in 0..w.height {
        writeln!(
            out,
            r#"<text x="{}" y="{}" font-size="10" text-anchor="end">{c2}</text>"#,
            x0 - 4,
            y(c2) + 4
        )
        .unwrap();
    }
    for c2 in 0..w.height {
        for c0 in 0..w.width {
            let (r, fill) = match cell(s, c0, c2) {
                '*' => ("5", "#b03020"),
                'o' => ("4", "black"),
                _ => ("1.5", "#aaaaaa"),
            };
            writeln!(
                out,
                r#"<circle cx="{}" cy="{}" r="{r}" fill="{fill}"/>"#,
                x(c0),
                y(c2)
            )
            .unwrap();
        }
    }
}

fn svg_document(width: u64, height: u64, body: &str) -> String {
    format!(
        concat!(
            r#"<?xml version="1.0" encoding="UTF-8"?>"#,
            "\n",
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif">"#,
            "\n",
            r#"<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>"#,
            "\n{body}</svg>\n"
        ),
        w = width,
        h = height,
        body = body
    )
}

pub fn svg_set(s: &QuadrantUnion, title: Option<&str>) -> String {
    let w = Window::for_set(s);
    let (pw, ph) = panel_size(w);
    let mut body = String::new();
    svg_panel(&mut body, s, w, 0, title);
    svg_document(pw, ph, &body)
}

/// Panels side by side, one per genus, titled `g=k`; a final `Q(0,0)`
/// panel is titled `g≥k`.
pub fn svg_family(f: &GenusFamily) -> String {
    let w = Window::for_family(f);
    let (pw, ph) = panel_size(w);
    let n = f.per_genus().len().max(1) as u64;
    let mut body = String::new();
    for (g, s) in f.per_genus().iter().enumerate() {
        let title = panel_title(f, g).1;
        svg_panel(&mut body, s, w, g as u64 * pw, Some(&title));
    }
    svg_document(pw * n, ph, &body)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_CORNERS: &str = "\
c2
5 | . . o o o o o o
4 | . . o o o o o o
3 | . . * o o o o o
2 | . . . . . o o o
1 | . . . . . * o o
0 | . . . . . . . .
  +---------------- c0
    0 1 2 3 4 5 6 7
";

    #[test]
    fn two_corner_grid() {
        let s = QuadrantUnion::normalize(&[(2, 3), (5, 1)]);
        assert_eq!(ascii_grid(&s, None), TWO_CORNERS);
    }

    #[test]
    fn empty_grid() {
        let g = ascii_grid(&QuadrantUnion::empty(), None);
        assert!(!g.contains('o') && !g.contains('*'));
        assert_eq!(g.lines().count(), 6);
    }

    #[test]
    fn wide_grid_alignment() {
        let s = QuadrantUnion::quadrant(9, 0);
        let g = ascii_grid(&s, None);
        let rows: Vec<&str> = g.lines().collect();
        assert_eq!(rows[1], "2 |  .  .  .  .  .  .  .  .  .  o  o  o");
        assert!(rows[3].starts_with("0 |  .  .  .  .  .  .  .  .  .  *  o  o"));
        assert!(rows[5].ends_with("10 11"));
    }

    #[test]
    fn svg_is_deterministic() {
        let f = GenusFamily::from_shifts(QuadrantUnion::quadrant(4, 2), 10);
        let a = svg_family(&f);
        assert_eq!(a, svg_family(&f));
        assert!(a.starts_with("<?xml"));
        assert!(a.contains(">g=0</text>") && a.contains(">g≥6</text>"));
        assert_eq!(a.matches("fill=\"#b03020\"").count(), 1 + 2 + 3 + 3 + 3 + 2 + 1);
        let one = svg_set(&QuadrantUnion::quadrant(1, 1), None);
        assert!(!one.contains(">g="));
    }

    #[test]
    fn family_ascii_titles() {
        let f = GenusFamily::from_shifts(QuadrantUnion::quadrant(1, 0), 10);
        let text = ascii_family(&f);
        assert!(text.starts_with("g=0: Q(1,0)\n"));
        assert!(text.contains("\ng>=1: Q(0,0)\n"));
    }
}
