//! Braid diagrams as SVG 1.1.
//!
//! Strands run top to bottom; letter `t` occupies the band between rows `t`
//! and `t+1`. For `x_i` the strand moving right passes over, for `x_i^-1`
//! the one moving left.

use std::fmt::Write;

use braidnf_core::{BraidWord, Sign};

const GAP: f64 = 40.0;
const MARGIN: f64 = 30.0;

fn x_of(position: usize) -> f64 {
    MARGIN + GAP * (position as f64 - 1.0)
}

fn y_of(row: usize) -> f64 {
    MARGIN + GAP * row as f64
}

pub fn render(w: &BraidWord, bold: Option<usize>) -> String {
    let n = w.strands();
    let rows = w.len();
    let width = 2.0 * MARGIN + GAP * (n.max(1) as f64 - 1.0);
    let height = 2.0 * MARGIN + GAP * rows as f64;

    // positions[t][label]: where strand `label` sits at row t
    let mut at: Vec<usize> = (0..=n).collect();
    let mut positions = Vec::with_capacity(rows + 1);
    let pos_of = |at: &Vec<usize>| {
        let mut p = vec![0; n + 1];
        for (position, &label) in at.iter().enumerate().skip(1) {
            p[label] = position;
        }
        p
    };
    positions.push(pos_of(&at));
    for g in w.letters() {
        at.swap(g.index, g.index + 1);
        positions.push(pos_of(&at));
    }

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let stroke = |label: usize| if bold == Some(label) { 5 } else { 2 };

    let _ = writeln!(out, r#"<g class="strands" fill="none" stroke="black" stroke-linejoin="round">"#);
    for label in 1..=n {
        let mut d = String::new();
        for (t, p) in positions.iter().enumerate() {
            let cmd = if t == 0 { 'M' } else { 'L' };
            let _ = write!(d, "{cmd}{} {} ", x_of(p[label]), y_of(t));
        }
        if rows == 0 {
            let _ = write!(d, "L{} {}", x_of(label), y_of(0) + GAP);
        }
        let _ = writeln!(
            out,
            r#"<path class="strand" data-strand="{label}" stroke-width="{}" d="{}"/>"#,
            stroke(label),
            d.trim_end()
        );
    }
    let _ = writeln!(out, "</g>");

    // Redraw each over-strand segment above a white halo.
    for (t, g) in w.letters().iter().enumerate() {
        let (from, to) = match g.sign {
            Sign::Pos => (g.index, g.index + 1),
            Sign::Neg => (g.index + 1, g.index),
        };
        let label = (1..=n).find(|&l| positions[t][l] == from).unwrap_or(0);
        let (x1, y1, x2, y2) = (x_of(from), y_of(t), x_of(to), y_of(t + 1));
        let _ = writeln!(
            out,
            r#"<g class="crossing" data-letter="{}"><line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="white" stroke-width="{}"/><line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="{}"/></g>"#,
            g.to_int(),
            stroke(label) + 8,
            stroke(label)
        );
    }
    out.push_str("</svg>\n");
    out
}
