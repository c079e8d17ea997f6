//! Checkers for solutions and queen placements.
//!
//! Each checker returns the first violation it finds as a [`Violation`], so
//! callers can tell *why* a placement was rejected. The `is_*` helpers project
//! that onto a plain boolean.

use thiserror::Error;

use crate::board::{cell_value, BoardSpec, Cell, Placement, Variant};
use crate::solution::SolutionPermutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("empty board")]
    EmptyBoard,
    #[error("placement is for n = {found}, board has n = {expected}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("entry f({row}) = {col} is outside 1..={n}")]
    OutOfRange { row: usize, col: usize, n: usize },
    #[error("not a bijection: column {col} is used twice")]
    NotBijection { col: usize },
    #[error("cell ({}, {}) is outside the playable region", .cell.0, .cell.1)]
    OutOfRegion { cell: Cell },
    #[error("expected {expected} queens, found {found}")]
    WrongCardinality { expected: usize, found: usize },
    #[error("duplicate row {row}")]
    DuplicateRow { row: usize },
    #[error("duplicate column {col}")]
    DuplicateColumn { col: usize },
    #[error("duplicate value {value}")]
    DuplicateValue { value: usize },
    #[error("value cover fails: {value} is outside the required values 0..={max}")]
    ValueCoverMismatch { value: usize, max: usize },
}

impl Violation {
    /// Stable machine-readable reason code.
    pub fn code(&self) -> &'static str {
        match self {
            Violation::EmptyBoard => "empty_board",
            Violation::OrderMismatch { .. } => "order_mismatch",
            Violation::OutOfRange { .. } => "out_of_range",
            Violation::NotBijection { .. } => "not_bijection",
            Violation::OutOfRegion { .. } => "out_of_region",
            Violation::WrongCardinality { .. } => "wrong_cardinality",
            Violation::DuplicateRow { .. } => "duplicate_row",
            Violation::DuplicateColumn { .. } => "duplicate_column",
            Violation::DuplicateValue { .. } => "duplicate_value",
            Violation::ValueCoverMismatch { .. } => "value_cover_mismatch",
        }
    }

    /// True if the violation is two queens attacking each other, as opposed to
    /// a malformed or misplaced input.
    pub fn is_attack(&self) -> bool {
        matches!(
            self,
            Violation::DuplicateRow { .. }
                | Violation::DuplicateColumn { .. }
                | Violation::DuplicateValue { .. }
                | Violation::NotBijection { .. }
        )
    }
}

/// Small "seen" set over `0..=n`, used by all the checkers.
struct Seen(Vec<bool>);

impl Seen {
    fn new(n: usize) -> Self {
        Seen(vec![false; n + 1])
    }

    /// Marks `k`; returns false if it was already marked.
    fn mark(&mut self, k: usize) -> bool {
        !std::mem::replace(&mut self.0[k], true)
    }
}

/// Checks that `f` is a permutation of `1..=n` whose labels `|f(i) - i|`
/// take every value in `0..n` exactly once.
pub fn verify_solution(s: &SolutionPermutation) -> Result<(), Violation> {
    let n = s.n();
    if n == 0 {
        return Err(Violation::EmptyBoard);
    }
    let mut cols = Seen::new(n);
    let mut values = Seen::new(n);
    for (row, col) in s.cells() {
        if col == 0 || col > n {
            return Err(Violation::OutOfRange { row, col, n });
        }
        if !cols.mark(col) {
            return Err(Violation::NotBijection { col });
        }
        // n distinct labels, each at most n - 1, must be exactly 0..n.
        let value = cell_value(row, col);
        if !values.mark(value) {
            return Err(Violation::DuplicateValue { value });
        }
    }
    Ok(())
}

pub fn is_solution(s: &SolutionPermutation) -> bool {
    verify_solution(s).is_ok()
}

fn check_region(p: &Placement, spec: &BoardSpec) -> Result<(), Violation> {
    if p.n() != spec.n() {
        return Err(Violation::OrderMismatch {
            expected: spec.n(),
            found: p.n(),
        });
    }
    match p.cells().find(|&c| !spec.contains(c)) {
        Some(cell) => Err(Violation::OutOfRegion { cell }),
        None => Ok(()),
    }
}

/// Checks that no two queens share a row, a column or a label. Cells outside
/// `spec`'s region are reported as [`Violation::OutOfRegion`].
pub fn verify_nonattacking(p: &Placement, spec: &BoardSpec) -> Result<(), Violation> {
    check_region(p, spec)?;
    let n = spec.n();
    let (mut rows, mut cols, mut values) = (Seen::new(n), Seen::new(n), Seen::new(n));
    for (row, col) in p.cells() {
        if !rows.mark(row) {
            return Err(Violation::DuplicateRow { row });
        }
        if !cols.mark(col) {
            return Err(Violation::DuplicateColumn { col });
        }
        let value = cell_value(row, col);
        if !values.mark(value) {
            return Err(Violation::DuplicateValue { value });
        }
    }
    Ok(())
}

pub fn is_nonattacking(p: &Placement, spec: &BoardSpec) -> bool {
    verify_nonattacking(p, spec).is_ok()
}

/// Checks that `p` selects one square from every valid row and column of
/// `spec` and that the selected labels are exactly `spec.required_values()`.
///
/// Meant for the trimmed variants but correct for [`Variant::Full`] too.
pub fn verify_variant_solution(p: &Placement, spec: &BoardSpec) -> Result<(), Violation> {
    check_region(p, spec)?;
    let expected = spec.solution_size();
    if p.len() != expected {
        return Err(Violation::WrongCardinality {
            expected,
            found: p.len(),
        });
    }
    let n = spec.n();
    let (mut rows, mut cols, mut values) = (Seen::new(n), Seen::new(n), Seen::new(n));
    for (row, col) in p.cells() {
        if !rows.mark(row) {
            return Err(Violation::DuplicateRow { row });
        }
        if !cols.mark(col) {
            return Err(Violation::DuplicateColumn { col });
        }
    }
    for value in p.values() {
        if !spec.required_values().contains(&value) {
            return Err(Violation::ValueCoverMismatch {
                value,
                max: expected - 1,
            });
        }
        if !values.mark(value) {
            return Err(Violation::DuplicateValue { value });
        }
    }
    Ok(())
}

/// Checks a placement as a complete solution of its declared variant.
///
/// Full boards go through [`verify_solution`] after the row/column structure
/// is confirmed; trimmed boards through [`verify_variant_solution`].
pub fn verify_placement(p: &Placement, spec: &BoardSpec) -> Result<(), Violation> {
    match spec.variant() {
        Variant::Full => {
            check_region(p, spec)?;
            if p.len() != spec.n() {
                return Err(Violation::WrongCardinality {
                    expected: spec.n(),
                    found: p.len(),
                });
            }
            let mut rows = Seen::new(spec.n());
            let mut cols = Seen::new(spec.n());
            for (row, col) in p.cells() {
                if !rows.mark(row) {
                    return Err(Violation::DuplicateRow { row });
                }
                if !cols.mark(col) {
                    return Err(Violation::DuplicateColumn { col });
                }
            }
            let s = SolutionPermutation::from_placement(p)
                .expect("one queen per row was checked above");
            verify_solution(&s)
        }
        Variant::Star | Variant::DoubleStar => verify_variant_solution(p, spec),
    }
}
