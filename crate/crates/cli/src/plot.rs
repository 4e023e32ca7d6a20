//! SVG grid rendering of a word.
//!
//! Letter `j` with value `v` is a dot at column `j`, row `v`, with the value
//! printed underneath. Each window start carries the permutations its window
//! covers, written to the right of the dot. For a cyclic word the first
//! `n - 1` letters are drawn again in gray after the end.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use ucycle::{covered_permutations, extended_glue_family, Letter, Permutation};

const CELL: i64 = 28;
const MARGIN: i64 = 40;

pub struct PlotOptions {
    pub n: usize,
    pub cyclic: bool,
}

fn window_label(win: &[Letter], gluing: &BTreeSet<Permutation>) -> (String, &'static str) {
    let compressed = win.first() == win.last();
    match covered_permutations(win) {
        Ok(perms) if !perms.is_empty() => {
            let text = perms.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("/");
            let color = if compressed {
                "red"
            } else if perms.iter().any(|p| gluing.contains(p)) {
                "blue"
            } else {
                "black"
            };
            (text, color)
        }
        _ => ("?".into(), "orange"),
    }
}

/// Renders `letters`. Panics if `letters` is empty or shorter than `n`
/// in linear mode; callers validate first.
pub fn render(letters: &[Letter], opts: &PlotOptions) -> String {
    let n = opts.n;
    let len = letters.len();
    let gluing: BTreeSet<Permutation> = extended_glue_family(n)
        .map(|f| f.members().iter().cloned().collect())
        .unwrap_or_default();

    let extra = if opts.cyclic { n.saturating_sub(1).min(len) } else { 0 };
    let drawn: Vec<Letter> = letters.iter().chain(letters.iter().take(extra)).copied().collect();
    let lo = *drawn.iter().min().expect("nonempty word");
    let hi = *drawn.iter().max().expect("nonempty word");
    let cols = drawn.len() as i64;
    let width = 2 * MARGIN + cols * CELL + n as i64 * 12;
    let height = 2 * MARGIN + (hi - lo + 1) * CELL;
    let x = |j: usize| MARGIN + j as i64 * CELL;
    let y = |v: Letter| MARGIN + (hi - v) * CELL;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" font-family="monospace" font-size="9">"#
    )
    .unwrap();
    writeln!(out, r#"<g stroke="lightgray" stroke-width="0.5">"#).unwrap();
    for j in 0..drawn.len() {
        writeln!(out, r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#, x(j), y(hi), y(lo)).unwrap();
    }
    for v in lo..=hi {
        writeln!(out, r#"<line x1="{0}" y1="{1}" x2="{2}" y2="{1}"/>"#, x(0), y(v), x(drawn.len() - 1)).unwrap();
    }
    out.push_str("</g>\n");

    for (j, &v) in drawn.iter().enumerate() {
        let fill = if j < len { "black" } else { "gray" };
        writeln!(out, r#"<circle class="letter" cx="{}" cy="{}" r="3" fill="{fill}"/>"#, x(j), y(v)).unwrap();
        writeln!(
            out,
            r#"<text class="value" x="{}" y="{}" text-anchor="middle" fill="{fill}">{v}</text>"#,
            x(j),
            y(v) + 12
        )
        .unwrap();
    }

    let starts = if opts.cyclic { len } else { (len + 1).saturating_sub(n) };
    for s in 0..starts {
        let win: Vec<Letter> = (0..n).map(|t| letters[(s + t) % len]).collect();
        let (text, color) = window_label(&win, &gluing);
        writeln!(
            out,
            r#"<text class="window" x="{}" y="{}" fill="{color}">{text}</text>"#,
            x(s) + 5,
            y(letters[s]) - 4
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
