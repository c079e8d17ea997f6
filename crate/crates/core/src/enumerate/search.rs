//! Row-by-row backtracking over permutations with pairwise distinct labels.
//!
//! Rows are filled top to bottom and each row tries its columns in increasing
//! order, so solutions come out in lexicographic order. Columns and labels in
//! use are tracked as bitmasks. After each placement every still-unused label
//! must have at least one square left in a free row and free column; if some
//! label has none the branch is dead.

use crate::solution::SolutionPermutation;

/// Largest order the `u64` masks can represent.
pub(crate) const MAX_ORDER: usize = 63;

#[derive(Clone, Copy)]
struct State {
    n: usize,
    /// Free columns, bit `c` for 0-based column `c`.
    cols: u64,
    /// Unused labels, bit `v` for label `v`.
    values: u64,
}

impl State {
    fn new(n: usize) -> Self {
        debug_assert!((1..=MAX_ORDER).contains(&n));
        let all = (1u64 << n) - 1;
        State {
            n,
            cols: all,
            values: all,
        }
    }

    /// Columns available to (0-based) `row`.
    #[inline]
    fn candidates(&self, row: usize) -> u64 {
        let mut out = 0;
        let mut free = self.cols;
        while free != 0 {
            let c = free.trailing_zeros() as usize;
            free &= free - 1;
            if self.values >> c.abs_diff(row) & 1 == 1 {
                out |= 1 << c;
            }
        }
        out
    }

    #[inline]
    fn place(&self, row: usize, col: usize) -> State {
        State {
            n: self.n,
            cols: self.cols & !(1 << col),
            values: self.values & !(1 << col.abs_diff(row)),
        }
    }

    /// Every unused label still fits somewhere in rows `next_row..n`.
    #[inline]
    fn feasible(&self, next_row: usize) -> bool {
        if next_row >= self.n {
            return true;
        }
        let rows = ((1u64 << self.n) - 1) & !((1u64 << next_row) - 1);
        let mut vals = self.values;
        // Largest labels first: they have the fewest squares.
        while vals != 0 {
            let v = 63 - vals.leading_zeros() as usize;
            vals &= !(1 << v);
            if ((rows << v) | (rows >> v)) & self.cols == 0 {
                return false;
            }
        }
        true
    }
}

fn walk<F: FnMut(&[usize])>(state: State, row: usize, f: &mut Vec<usize>, visit: &mut F) {
    if row == state.n {
        visit(f);
        return;
    }
    let mut cand = state.candidates(row);
    while cand != 0 {
        let c = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        let next = state.place(row, c);
        if next.feasible(row + 1) {
            f.push(c + 1);
            walk(next, row + 1, f, visit);
            f.pop();
        }
    }
}

/// The columns row 1 may take; each starts an independent subtree.
pub(crate) fn first_row_choices(n: usize) -> Vec<usize> {
    let s = State::new(n);
    let mut cand = s.candidates(0);
    let mut out = Vec::new();
    while cand != 0 {
        let c = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if s.place(0, c).feasible(1) {
            out.push(c + 1);
        }
    }
    out
}

/// Visits every solution with `f(1) = first_col`, in lexicographic order.
pub(crate) fn for_each_in_subtree<F: FnMut(&[usize])>(n: usize, first_col: usize, mut visit: F) {
    let next = State::new(n).place(0, first_col - 1);
    let mut f = Vec::with_capacity(n);
    f.push(first_col);
    walk(next, 1, &mut f, &mut visit);
}

pub(crate) fn collect_subtree(n: usize, first_col: usize) -> Vec<SolutionPermutation> {
    let mut out = Vec::new();
    for_each_in_subtree(n, first_col, |f| {
        out.push(SolutionPermutation::new(f.to_vec()))
    });
    out
}

pub(crate) fn count_subtree(n: usize, first_col: usize) -> u64 {
    let mut count = 0;
    for_each_in_subtree(n, first_col, |_| count += 1);
    count
}
