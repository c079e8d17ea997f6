use std::fmt;

use crate::board::{cell_value, Cell, Placement};

/// A full-board solution written as a permutation: row `i` holds its queen in
/// column `f(i)`, both 1-based.
///
/// The container does not enforce validity. Use
/// [`verify_solution`](crate::verify::verify_solution) to check it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolutionPermutation {
    f: Vec<usize>,
}

impl SolutionPermutation {
    /// Wraps `f`, where `f[i - 1]` is the column of the queen in row `i`.
    pub fn new(f: Vec<usize>) -> Self {
        SolutionPermutation { f }
    }

    pub fn n(&self) -> usize {
        self.f.len()
    }

    /// Column of the queen in row `row` (1-based).
    pub fn at(&self, row: usize) -> usize {
        self.f[row - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.f
    }

    pub fn cells(&self) -> impl ExactSizeIterator<Item = Cell> + '_ {
        self.f.iter().enumerate().map(|(i, &c)| (i + 1, c))
    }

    pub fn contains(&self, (row, col): Cell) -> bool {
        row >= 1 && row <= self.n() && self.f[row - 1] == col
    }

    pub fn to_placement(&self) -> Placement {
        Placement::new(self.n(), self.cells())
    }

    /// `sum_i i * f(i)`.
    pub fn weighted_sum(&self) -> u128 {
        self.cells().map(|(i, c)| i as u128 * c as u128).sum()
    }

    pub fn values(&self) -> impl Iterator<Item = usize> + '_ {
        self.cells().map(|(r, c)| cell_value(r, c))
    }

    /// Reads a permutation off a placement with exactly one queen in every
    /// row `1..=n`. Returns `None` if some row is empty or doubly occupied.
    pub fn from_placement(p: &Placement) -> Option<Self> {
        let n = p.n();
        if p.len() != n {
            return None;
        }
        let mut f = vec![0; n];
        for (r, c) in p.cells() {
            if r == 0 || r > n || f[r - 1] != 0 {
                return None;
            }
            f[r - 1] = c;
        }
        Some(SolutionPermutation { f })
    }
}

impl fmt::Display for SolutionPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_placement(), f)
    }
}
