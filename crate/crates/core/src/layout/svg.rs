//! Plain SVG text output with fixed styling.

use std::fmt::Write;

use super::{validate_drawing, VisibilityDrawing, Witness};
use crate::plane_graph::PlaneTriangulation;

const CELL: u32 = 16;
const MARGIN: u32 = 12;
const BAR: u32 = 4;

/// Renders segments as 4px bars and edges as 1px vertical lines at their
/// witness columns. Row 0 is at the bottom.
pub fn render_svg(d: &VisibilityDrawing, witnesses: &[Witness]) -> String {
    let min_x = d.segments.iter().map(|s| s.x1).min().unwrap_or(0);
    let min_y = d.segments.iter().map(|s| s.y).min().unwrap_or(0);
    let px = |x: u32| MARGIN + (x - min_x) * CELL;
    let py = |y: u32| MARGIN + (d.height - (y - min_y)) * CELL;
    let w = 2 * MARGIN + d.width * CELL;
    let h = 2 * MARGIN + d.height * CELL;

    let mut row = vec![
        0u32;
        d.segments
            .iter()
            .map(|s| s.v as usize + 1)
            .max()
            .unwrap_or(0)
    ];
    for s in &d.segments {
        row[s.v as usize] = s.y;
    }

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(out, r#"<rect width="{w}" height="{h}" fill="white"/>"#);
    let _ = writeln!(out, r#"<g stroke="black" stroke-width="1">"#);
    for wit in witnesses {
        let x = px(wit.x);
        let (y1, y2) = (py(row[wit.upper as usize]), py(row[wit.lower as usize]));
        let _ = writeln!(out, r#"<line x1="{x}" y1="{y1}" x2="{x}" y2="{y2}"/>"#);
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g fill="steelblue">"#);
    for s in &d.segments {
        let x = px(s.x1) - BAR / 2;
        let y = py(s.y) - BAR / 2;
        let len = (s.x2 - s.x1) * CELL + BAR;
        let _ = writeln!(
            out,
            r#"<rect x="{x}" y="{y}" width="{len}" height="{BAR}"><title>{}</title></rect>"#,
            s.v
        );
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}

/// Validates `d` against `g` for witness columns, then renders it.
pub fn to_svg(g: &PlaneTriangulation, d: &VisibilityDrawing) -> String {
    let report = validate_drawing(g, d);
    render_svg(d, &report.witnesses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::layout::best_of_three;

    #[test]
    fn one_bar_per_node_and_one_line_per_edge() {
        let g = generators::octahedron();
        let d = best_of_three(&g).unwrap().drawing;
        let svg = to_svg(&g, &d);
        assert_eq!(svg.matches("<title>").count(), 6);
        assert_eq!(svg.matches("<line ").count(), 12);
        assert_eq!(svg, to_svg(&g, &d));
    }
}
