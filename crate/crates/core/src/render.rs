//! Text and SVG pictures of a code on the window `[-m, m]²`.
//!
//! Grids of higher dimension are drawn through the plane of the first two
//! coordinates (all others zero).

use std::fmt::Write;

use crate::model::code::PeriodicCode;

fn point(code: &PeriodicCode, x: i64, y: i64) -> Vec<i64> {
    let mut p = vec![0; code.grid().dimension()];
    p[0] = x;
    if p.len() > 1 {
        p[1] = y;
    }
    p
}

/// One row per `y` from `m` down to `-m`; `#` marks codewords.
pub fn ascii(code: &PeriodicCode, m: i64) -> String {
    let mut out = String::new();
    let ys: Vec<i64> = if code.grid().dimension() == 1 { vec![0] } else { (-m..=m).rev().collect() };
    for y in ys {
        let row: String = (-m..=m)
            .map(|x| if code.member_coords(&point(code, x, y)) { '#' } else { '.' })
            .collect();
        out.push_str(&row);
        out.push('\n');
    }
    out
}

/// Vertices as circles (filled for codewords) joined by the grid's edges;
/// on the hex grid this is the brick-wall drawing.
pub fn svg(code: &PeriodicCode, m: i64) -> String {
    const STEP: i64 = 20;
    let side = (2 * m + 2) * STEP;
    let pos = |x: i64, y: i64| ((x + m + 1) * STEP, (m - y + 1) * STEP);
    let grid = code.grid();
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" viewBox="0 0 {side} {side}">"#
    );
    let _ = writeln!(out, r##"<g stroke="#999" stroke-width="1">"##);
    for y in -m..=m {
        for x in -m..=m {
            let p = point(code, x, y);
            for d in grid.neighbor_offsets(&p) {
                let (nx, ny) = (x + d[0], y + d.get(1).copied().unwrap_or(0));
                let planar = d.iter().skip(2).all(|&c| c == 0);
                if !planar || nx.abs() > m || ny.abs() > m || (nx, ny) <= (x, y) {
                    continue;
                }
                let (x1, y1) = pos(x, y);
                let (x2, y2) = pos(nx, ny);
                let _ = writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
            }
        }
    }
    let _ = writeln!(out, "</g>");
    for y in -m..=m {
        for x in -m..=m {
            let (cx, cy) = pos(x, y);
            let fill = if code.member_coords(&point(code, x, y)) { "black" } else { "white" };
            let _ = writeln!(
                out,
                r#"<circle cx="{cx}" cy="{cy}" r="5" fill="{fill}" stroke="black"/>"#
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{GridKind, Vertex};

    #[test]
    fn ascii_rows() {
        let code = PeriodicCode::new(
            GridKind::Square,
            &[vec![2, 0], vec![0, 2]],
            &[Vertex::new(vec![0, 0])],
        )
        .unwrap();
        assert_eq!(ascii(&code, 1), "...\n.#.\n...\n");
        assert_eq!(ascii(&code, 2), "#.#.#\n.....\n#.#.#\n.....\n#.#.#\n");
    }

    #[test]
    fn svg_is_well_formed() {
        let code = crate::constructions::hex_code(2).unwrap();
        let s = svg(&code, 3);
        assert!(s.starts_with("<svg") && s.trim_end().ends_with("</svg>"));
        assert_eq!(s.matches("<circle").count(), 49);
        // brick wall on a 7x7 window: 42 horizontal edges, 21 vertical
        assert_eq!(s.matches("<line").count(), 42 + 21);
    }
}
