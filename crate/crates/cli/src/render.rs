//! ASCII and SVG pictures of arch diagrams.
//!
//! SVG coordinates are in baseline units: point `x` sits at `(x, 0)`, so arch
//! endpoints are exactly `a_i` and `b_i`. Each unit is drawn 40 pixels wide.

use std::fmt::Write;

use kfact::{dual_layout, DualLayout, KFactorization, Result};

const PIXELS_PER_UNIT: usize = 40;

/// One arc to draw: label, endpoints in half-units (so dual points fit), and
/// its nesting level.
struct Arc {
    label: usize,
    from: usize,
    to: usize,
    level: usize,
}

/// Level 1 for innermost arcs, otherwise one more than the highest arc nested inside.
fn nest(spans: Vec<(usize, usize, usize)>) -> Vec<Arc> {
    let mut order: Vec<usize> = (0..spans.len()).collect();
    order.sort_by_key(|&i| spans[i].2 - spans[i].1);
    let mut level = vec![0usize; spans.len()];
    for (pos, &i) in order.iter().enumerate() {
        let (_, lo, hi) = spans[i];
        level[i] = 1 + order[..pos]
            .iter()
            .filter(|&&j| lo <= spans[j].1 && spans[j].2 <= hi)
            .map(|&j| level[j])
            .max()
            .unwrap_or(0);
    }
    spans
        .into_iter()
        .zip(level)
        .map(|((label, from, to), level)| Arc {
            label,
            from,
            to,
            level,
        })
        .collect()
}

fn primal_arcs(layout: &DualLayout) -> Vec<Arc> {
    nest(
        (0..layout.m())
            .map(|i| (i + 1, 2 * layout.left[i], 2 * layout.right[i]))
            .collect(),
    )
}

fn dual_arcs(layout: &DualLayout) -> Vec<Arc> {
    nest(
        (1..=layout.m())
            .map(|i| {
                let (x, y) = (layout.down[i - 1], layout.dual_parent(i));
                (i, 2 * x.min(y) + 1, 2 * x.max(y) + 1)
            })
            .collect(),
    )
}

struct Canvas {
    rows: Vec<Vec<char>>,
}

impl Canvas {
    fn put(&mut self, row: usize, col: usize, c: char) {
        self.rows[row][col] = c;
    }

    fn text(&mut self, row: usize, col: usize, s: &str) {
        for (i, c) in s.chars().enumerate() {
            if let Some(cell) = self.rows[row].get_mut(col + i) {
                *cell = c;
            }
        }
    }

    /// Draws arcs outermost first so inner corners stay visible. `row_of(l)`
    /// maps a level to its canvas row; legs run towards `base`.
    fn arcs(&mut self, arcs: &[Arc], base: usize, row_of: impl Fn(usize) -> usize, fill: char) {
        let mut order: Vec<&Arc> = arcs.iter().collect();
        order.sort_by_key(|a| std::cmp::Reverse(a.level));
        for a in order {
            let (l, r) = (2 * a.from, 2 * a.to);
            let top = row_of(a.level);
            for col in l + 1..r {
                self.put(top, col, fill);
            }
            let label = a.label.to_string();
            let mid = (l + r) / 2;
            self.text(
                top,
                (mid + 1).saturating_sub(label.len().div_ceil(2)).max(l + 1),
                &label,
            );
            let (lo, hi) = if top < base {
                (top, base)
            } else {
                (base + 1, top + 1)
            };
            for row in lo..hi {
                for col in [l, r] {
                    self.put(row, col, '|');
                }
            }
            self.put(top, l, '+');
            self.put(top, r, '+');
        }
    }
}

pub fn ascii(f: &KFactorization, dual: bool) -> Result<String> {
    let layout = dual_layout(f)?;
    let m = layout.m();
    let primal = primal_arcs(&layout);
    let duals = if dual { dual_arcs(&layout) } else { Vec::new() };
    let up = primal.iter().map(|a| a.level).max().unwrap_or(0);
    let down = duals.iter().map(|a| a.level).max().unwrap_or(0);
    let width = 4 * m + 4;
    let base = up;
    let numbers = base + 1;
    let mut canvas = Canvas {
        rows: vec![vec![' '; width]; up + down + 2],
    };
    canvas.arcs(&primal, base, |level| base - level, '-');
    canvas.arcs(&duals, base, |level| numbers + level, '.');
    for x in 0..=m {
        canvas.put(base, 4 * x, 'o');
        canvas.text(numbers, 4 * x, &x.to_string());
    }
    let mut out = String::new();
    for row in canvas.rows {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    Ok(out)
}

fn half(x: usize) -> String {
    if x.is_multiple_of(2) {
        (x / 2).to_string()
    } else {
        format!("{}.5", x / 2)
    }
}

pub fn svg(f: &KFactorization, dual: bool) -> Result<String> {
    let layout = dual_layout(f)?;
    let m = layout.m();
    let above = m as f64 / 2.0 + 0.5;
    let below = if dual { m as f64 / 2.0 + 1.0 } else { 0.7 };
    let height = above + below;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="-0.5 {} {} {}">"#,
        PIXELS_PER_UNIT * (m + 1),
        (PIXELS_PER_UNIT as f64 * height).ceil(),
        -above,
        m + 1,
        height
    );
    let _ = writeln!(
        out,
        r#"<line class="baseline" x1="0" y1="0" x2="{m}" y2="0" stroke="black" stroke-width="0.02"/>"#
    );
    for x in 0..=m {
        let _ = writeln!(out, r#"<circle class="point" cx="{x}" cy="0" r="0.07"/>"#);
        let _ = writeln!(
            out,
            r#"<text x="{x}" y="0.35" font-size="0.25" text-anchor="middle">{x}</text>"#
        );
    }
    for i in 0..m {
        let (a, b) = (layout.left[i], layout.right[i]);
        let r = (b - a) as f64 / 2.0;
        let _ = writeln!(
            out,
            r#"<path class="arch" data-label="{}" d="M {a} 0 A {r} {r} 0 0 1 {b} 0" fill="none" stroke="black" stroke-width="0.04"/>"#,
            i + 1
        );
    }
    if dual {
        for a in dual_arcs(&layout) {
            let r = (a.to - a.from) as f64 / 4.0;
            let _ = writeln!(
                out,
                r#"<path class="dual" data-label="{}" d="M {} 0 A {r} {r} 0 0 0 {} 0" fill="none" stroke="gray" stroke-width="0.03" stroke-dasharray="0.1 0.08"/>"#,
                a.label,
                half(a.from),
                half(a.to)
            );
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
