use std::fmt::Write;

use super::SchnyderWood;
use crate::embed::Embedding;

const SIDE: f64 = 1000.0;
const MARGIN: f64 = 40.0;
const COLORS: [&str; 3] = ["#d62728", "#2ca02c", "#1f77b4"];

fn position(wood: &SchnyderWood, v: usize) -> (f64, f64) {
    let h = SIDE * 3f64.sqrt() / 2.0;
    let corners = [(SIDE / 2.0, 0.0), (0.0, h), (SIDE, h)];
    let c = wood.numerators(v);
    let d = wood.denominator() as f64;
    let mut x = MARGIN;
    let mut y = MARGIN;
    for i in 0..3 {
        x += corners[i].0 * c[i] as f64 / d;
        y += corners[i].1 * c[i] as f64 / d;
    }
    (x, y)
}

/// Straight-line drawing in an equilateral triangle of side 1000 with the
/// three trees in red, green and blue. Roots are drawn filled.
pub fn draw_svg(emb: &Embedding, wood: &SchnyderWood) -> String {
    let h = SIDE * 3f64.sqrt() / 2.0;
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{hh:.0}" viewBox="0 0 {w:.0} {hh:.0}">"#,
        w = SIDE + 2.0 * MARGIN,
        hh = h + 2.0 * MARGIN
    )
    .unwrap();
    writeln!(s, r##"<g stroke="#bbbbbb" stroke-width="1">"##).unwrap();
    for e in 0..emb.m() {
        let [u, v] = emb.ends(e);
        let (a, b) = (position(wood, u), position(wood, v));
        writeln!(s, r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#, a.0, a.1, b.0, b.1).unwrap();
    }
    writeln!(s, "</g>").unwrap();
    for (i, color) in COLORS.iter().enumerate() {
        writeln!(s, r#"<g stroke="{color}" stroke-width="2" class="tree{}">"#, i + 1).unwrap();
        for v in 0..wood.n() {
            if let Some(p) = wood.parent(i, v) {
                let (a, b) = (position(wood, v), position(wood, p));
                // stop short of the parent so shared edges stay readable
                let (mx, my) = (a.0 + 0.8 * (b.0 - a.0), a.1 + 0.8 * (b.1 - a.1));
                writeln!(s, r#"<line x1="{:.2}" y1="{:.2}" x2="{mx:.2}" y2="{my:.2}"/>"#, a.0, a.1).unwrap();
            }
        }
        writeln!(s, "</g>").unwrap();
    }
    let roots = emb.root_set();
    for v in 0..wood.n() {
        let (x, y) = position(wood, v);
        let fill = if roots.contains(v) { "black" } else { "white" };
        writeln!(
            s,
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="5" fill="{fill}" stroke="black"><title>{v}</title></circle>"#
        )
        .unwrap();
    }
    writeln!(s, "</svg>").unwrap();
    s
}
