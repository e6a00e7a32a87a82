//! Text diagrams of a pair.
//!
//! Each cell `(i, j)`, `1 ≤ i, j ≤ n`, is two characters: a glyph and a
//! background.
//!
//! | glyph | meaning                                   |
//! |-------|-------------------------------------------|
//! | `X`   | graph point of `x` only                   |
//! | `O`   | graph point of `w` only                   |
//! | `B`   | graph point of both                       |
//! | `C`   | point of `crit_red` (smooth pairs only)   |
//! | ` `   | none of the above                         |
//!
//! The background is `.`, `+` or `#` for `rk_π = 0`, `1`, `≥ 2`.

use std::fmt::Write as _;

use schub_core::reduction::crit_red;
use schub_core::{PermPair, Point, PointSet};

/// Glyph of the cell at `p`.
pub fn glyph(pair: &PermPair, crit: &PointSet, p: Point) -> char {
    if crit.contains(p) {
        return 'C';
    }
    match (pair.x().at(p.i) == p.j, pair.w().at(p.i) == p.j) {
        (true, true) => 'B',
        (true, false) => 'X',
        (false, true) => 'O',
        (false, false) => ' ',
    }
}

/// Background class of the cell at `p`.
pub fn background(pair: &PermPair, p: Point) -> char {
    match pair.rank(p) {
        0 => '.',
        1 => '+',
        _ => '#',
    }
}

/// Renders the `n × n` grid with column headers and right-aligned row
/// headers. Output is a pure function of the pair.
pub fn render_diagram(pair: &PermPair) -> String {
    let n = pair.degree();
    let crit = if pair.is_smooth() {
        crit_red(pair).expect("smooth")
    } else {
        PointSet::empty(n)
    };
    let label = n.to_string().len();
    let mut out = String::new();
    let _ = write!(out, "{:label$} |", "");
    for j in 1..=n {
        let _ = write!(out, " {j:>2}");
    }
    out.push('\n');
    let _ = writeln!(out, "{}-+{}", "-".repeat(label), "-".repeat(3 * n));
    for i in 1..=n {
        let _ = write!(out, "{i:>label$} |");
        for j in 1..=n {
            let p = Point::new(i, j);
            let _ = write!(out, " {}{}", glyph(pair, &crit, p), background(pair, p));
        }
        out.push('\n');
    }
    out
}
