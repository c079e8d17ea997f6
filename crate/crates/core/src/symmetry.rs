//! Label-preserving symmetries of the square board.
//!
//! Of the eight symmetries of the square only four keep `|i - j|` fixed: the
//! identity, the transpose, the half-turn and the anti-transpose. They form a
//! Klein four-group.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::board::{Cell, Placement};
use crate::error::Error;
use crate::solution::SolutionPermutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryElement {
    Identity,
    Transpose,
    Rotate180,
    AntiTranspose,
}

impl SymmetryElement {
    pub const ALL: [SymmetryElement; 4] = [
        SymmetryElement::Identity,
        SymmetryElement::Transpose,
        SymmetryElement::Rotate180,
        SymmetryElement::AntiTranspose,
    ];

    /// Image of `cell` on an order-`n` board.
    #[inline]
    pub fn map_cell(self, n: usize, (i, j): Cell) -> Cell {
        match self {
            SymmetryElement::Identity => (i, j),
            SymmetryElement::Transpose => (j, i),
            SymmetryElement::Rotate180 => (n + 1 - i, n + 1 - j),
            SymmetryElement::AntiTranspose => (n + 1 - j, n + 1 - i),
        }
    }

    /// Group product: `self.compose(other)` applies `other` first.
    pub fn compose(self, other: SymmetryElement) -> SymmetryElement {
        use SymmetryElement::*;
        match (self, other) {
            (Identity, g) | (g, Identity) => g,
            (a, b) if a == b => Identity,
            (Transpose, Rotate180) | (Rotate180, Transpose) => AntiTranspose,
            (Transpose, AntiTranspose) | (AntiTranspose, Transpose) => Rotate180,
            (Rotate180, AntiTranspose) | (AntiTranspose, Rotate180) => Transpose,
            _ => unreachable!(),
        }
    }

    pub fn apply_placement(self, p: &Placement) -> Placement {
        let n = p.n();
        Placement::new(n, p.cells().map(|c| self.map_cell(n, c)))
    }

    /// Image of a permutation. `s` must be a bijection on `1..=n`.
    pub fn apply(self, s: &SolutionPermutation) -> SolutionPermutation {
        let n = s.n();
        let f = s.as_slice();
        let mut g = vec![0; n];
        match self {
            SymmetryElement::Identity => g.copy_from_slice(f),
            SymmetryElement::Transpose => {
                for (i, &c) in f.iter().enumerate() {
                    g[c - 1] = i + 1;
                }
            }
            SymmetryElement::Rotate180 => {
                for (i, &c) in f.iter().enumerate() {
                    g[n - 1 - i] = n + 1 - c;
                }
            }
            SymmetryElement::AntiTranspose => {
                // (i, c) -> (n + 1 - c, n + 1 - i)
                for (i, &c) in f.iter().enumerate() {
                    g[n - c] = n - i;
                }
            }
        }
        SolutionPermutation::new(g)
    }
}

impl fmt::Display for SymmetryElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SymmetryElement::Identity => "identity",
            SymmetryElement::Transpose => "transpose",
            SymmetryElement::Rotate180 => "rotate180",
            SymmetryElement::AntiTranspose => "anti_transpose",
        };
        f.write_str(s)
    }
}

pub fn apply_symmetry(g: SymmetryElement, s: &SolutionPermutation) -> SolutionPermutation {
    g.apply(s)
}

/// Moves a solution within its orbit so that it contains `(n, 1)` and
/// `(1, n - 1)`.
///
/// The label `n - 1` only occurs at `(n, 1)` and `(1, n)`, so a transpose
/// brings it to `(n, 1)`. The label `n - 2` then sits at `(1, n - 1)` or
/// `(2, n)` (its other two squares share row `n` or column `1`), and the
/// anti-transpose swaps those two while fixing `(n, 1)`.
pub fn normalize_solution(s: &SolutionPermutation) -> Result<SolutionPermutation, Error> {
    let n = s.n();
    if n < 4 {
        return Err(Error::InvalidOrder { n, min: 4 });
    }
    let mut out = s.clone();
    if !out.contains((n, 1)) {
        out = SymmetryElement::Transpose.apply(&out);
    }
    if !out.contains((1, n - 1)) {
        out = SymmetryElement::AntiTranspose.apply(&out);
    }
    debug_assert!(out.contains((n, 1)) && out.contains((1, n - 1)));
    Ok(out)
}
