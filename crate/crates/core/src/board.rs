//! The symmetric Toeplitz board `T_n` and its two trimmed variants.
//!
//! Every square `(i, j)` of an order-`n` board carries the label `|i - j|`.
//! Queens attack along rows, columns and along the set of squares sharing a
//! label. Rows and columns are numbered from 1 everywhere in this crate.
//!
//! The trimmed boards keep the coordinates of the parent board:
//!
//! * [`Variant::Star`] drops the first column and the last row, leaving rows
//!   `1..=n-1` and columns `2..=n`. A solution covers the labels `0..=n-2`.
//! * [`Variant::DoubleStar`] drops the first and last rows together with the
//!   first and `(n-1)`-st columns. A solution covers the labels `0..=n-3`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A square on the board, as a 1-based `(row, column)` pair.
pub type Cell = (usize, usize);

/// The label of square `(row, col)`.
#[inline]
pub fn cell_value(row: usize, col: usize) -> usize {
    row.abs_diff(col)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Full,
    Star,
    DoubleStar,
}

impl Variant {
    /// Smallest order for which the variant has at least one square.
    pub fn min_order(self) -> usize {
        match self {
            Variant::Full => 1,
            Variant::Star => 2,
            Variant::DoubleStar => 3,
        }
    }

    /// Number of boundary rows (and columns) removed from the full board.
    fn trimmed(self) -> usize {
        match self {
            Variant::Full => 0,
            Variant::Star => 1,
            Variant::DoubleStar => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Full => "full",
            Variant::Star => "star",
            Variant::DoubleStar => "double_star",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An order together with the variant; determines the playable region and the
/// labels a solution has to cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoardSpec {
    n: usize,
    variant: Variant,
}

impl BoardSpec {
    pub fn new(n: usize, variant: Variant) -> Result<Self, Error> {
        let min = variant.min_order();
        if n < min {
            return Err(Error::InvalidOrder { n, min });
        }
        Ok(BoardSpec { n, variant })
    }

    pub fn full(n: usize) -> Result<Self, Error> {
        Self::new(n, Variant::Full)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn is_valid_row(&self, row: usize) -> bool {
        let n = self.n;
        match self.variant {
            Variant::Full => (1..=n).contains(&row),
            Variant::Star => (1..n).contains(&row),
            Variant::DoubleStar => (2..n).contains(&row),
        }
    }

    pub fn is_valid_col(&self, col: usize) -> bool {
        let n = self.n;
        match self.variant {
            Variant::Full => (1..=n).contains(&col),
            Variant::Star => (2..=n).contains(&col),
            Variant::DoubleStar => (2..=n).contains(&col) && col != n - 1,
        }
    }

    pub fn contains(&self, (row, col): Cell) -> bool {
        self.is_valid_row(row) && self.is_valid_col(col)
    }

    pub fn rows(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n).filter(|&r| self.is_valid_row(r))
    }

    pub fn cols(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n).filter(|&c| self.is_valid_col(c))
    }

    /// Number of queens in a complete solution, which is also the number of
    /// valid rows, valid columns and required labels.
    pub fn solution_size(&self) -> usize {
        self.n - self.variant.trimmed()
    }

    /// The labels a solution must cover exactly once: `0..solution_size()`.
    pub fn required_values(&self) -> std::ops::Range<usize> {
        0..self.solution_size()
    }
}

impl fmt::Display for BoardSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} board of order {}", self.variant, self.n)
    }
}

/// A set of queens on an order-`n` board.
///
/// Cells are kept sorted by row, then column. Nothing about attacks or the
/// playable region is enforced here; see [`crate::verify`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Placement {
    n: usize,
    cells: BTreeSet<Cell>,
}

impl Placement {
    pub fn new(n: usize, cells: impl IntoIterator<Item = Cell>) -> Self {
        Placement {
            n,
            cells: cells.into_iter().collect(),
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn insert(&mut self, cell: Cell) -> bool {
        self.cells.insert(cell)
    }

    pub fn remove(&mut self, cell: Cell) -> bool {
        self.cells.remove(&cell)
    }

    /// Cells in ascending `(row, col)` order.
    pub fn cells(&self) -> impl ExactSizeIterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn values(&self) -> impl Iterator<Item = usize> + '_ {
        self.cells().map(|(r, c)| cell_value(r, c))
    }

    /// Copy of `self` without the given cells.
    pub fn without(&self, cells: &[Cell]) -> Placement {
        let mut out = self.clone();
        for &c in cells {
            out.remove(c);
        }
        out
    }
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (r, c)) in self.cells().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "({r},{c})")?;
        }
        f.write_str("}")
    }
}
