use std::fmt::Write;

use toeplitz_queens::{cell_value, BoardSpec, Placement};

/// Glyph for squares removed by the star and double-star variants.
const REMOVED: char = '#';

#[derive(Debug, Clone)]
pub struct RenderOptions {
    /// Print `|i - j|` in empty squares instead of `.`.
    pub show_values: bool,
    pub queen_glyph: char,
    pub cell_width: usize,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            show_values: false,
            queen_glyph: 'Q',
            cell_width: 3,
        }
    }
}

fn digits(k: usize) -> usize {
    k.to_string().len()
}

impl RenderOptions {
    /// Narrowest cell that keeps the column indices apart.
    pub fn min_width(n: usize) -> usize {
        digits(n) + 1
    }

    /// Widens the cells if `n` needs it.
    pub fn fitted(mut self, n: usize) -> Self {
        self.cell_width = self.cell_width.max(Self::min_width(n));
        self
    }
}

/// An `n x n` grid with column indices on top and row indices on the left.
pub fn render(p: &Placement, spec: &BoardSpec, opts: &RenderOptions) -> Result<String, String> {
    let n = spec.n();
    let w = opts.cell_width;
    if w < RenderOptions::min_width(n) {
        return Err(format!("cell width {w} is too narrow for n = {n}"));
    }
    if let Some((r, c)) = p.cells().find(|&(r, c)| r == 0 || c == 0 || r > n || c > n) {
        return Err(format!("cell ({r}, {c}) is off the {n}x{n} board"));
    }
    let label = digits(n);
    let mut out = String::new();
    out.push_str(&" ".repeat(label));
    for c in 1..=n {
        write!(out, "{c:>w$}").unwrap();
    }
    out.push('\n');
    for r in 1..=n {
        write!(out, "{r:>label$}").unwrap();
        for c in 1..=n {
            let text = if p.contains((r, c)) {
                opts.queen_glyph.to_string()
            } else if !spec.contains((r, c)) {
                REMOVED.to_string()
            } else if opts.show_values {
                cell_value(r, c).to_string()
            } else {
                ".".to_string()
            };
            write!(out, "{text:>w$}").unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}
