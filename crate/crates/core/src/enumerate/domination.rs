//! Exact domination numbers by iterative deepening.
//!
//! For `k = 1, 2, ...` a depth-first search looks for `k` queens covering the
//! board. At each node it picks the first uncovered square and branches only
//! on the squares that would cover it (a queen on it or attacking it), which
//! keeps the search complete. A branch is cut when the remaining queens cannot
//! cover the remaining squares even at maximum per-queen coverage. The first
//! `k` that succeeds is the domination number, since every smaller `k` was
//! searched exhaustively.

use crate::board::{cell_value, Placement};

/// Largest order whose squares fit in a `u128`.
pub(crate) const MAX_ORDER: usize = 11;

pub(crate) struct Board {
    n: usize,
    /// `cover[q]` holds square `q` and every square a queen on `q` attacks.
    cover: Vec<u128>,
    max_cover: u32,
}

impl Board {
    pub(crate) fn new(n: usize) -> Self {
        debug_assert!((1..=MAX_ORDER).contains(&n));
        let idx = |r: usize, c: usize| (r - 1) * n + (c - 1);
        let mut cover = vec![0u128; n * n];
        for r in 1..=n {
            for c in 1..=n {
                let mut m = 0u128;
                for r2 in 1..=n {
                    for c2 in 1..=n {
                        if r2 == r || c2 == c || cell_value(r2, c2) == cell_value(r, c) {
                            m |= 1 << idx(r2, c2);
                        }
                    }
                }
                cover[idx(r, c)] = m;
            }
        }
        let max_cover = cover.iter().map(|m| m.count_ones()).max().unwrap_or(0);
        Board {
            n,
            cover,
            max_cover,
        }
    }

    fn all(&self) -> u128 {
        let sq = self.n * self.n;
        if sq == 128 {
            u128::MAX
        } else {
            (1u128 << sq) - 1
        }
    }

    fn search(&self, uncovered: u128, left: u32, picked: &mut Vec<usize>) -> bool {
        if uncovered == 0 {
            return true;
        }
        if left == 0 || uncovered.count_ones() > left * self.max_cover {
            return false;
        }
        let target = uncovered.trailing_zeros() as usize;
        // Attacks are symmetric, so the squares covering `target` are exactly
        // the squares `target` covers.
        let mut choices = self.cover[target];
        while choices != 0 {
            let q = choices.trailing_zeros() as usize;
            choices &= choices - 1;
            picked.push(q);
            if self.search(uncovered & !self.cover[q], left - 1, picked) {
                return true;
            }
            picked.pop();
        }
        false
    }

    /// Some placement of exactly `k` queens dominating the board, if one exists.
    pub(crate) fn dominate_with(&self, k: u32) -> Option<Vec<usize>> {
        let mut picked = Vec::new();
        self.search(self.all(), k, &mut picked).then_some(picked)
    }

    pub(crate) fn to_placement(&self, squares: &[usize]) -> Placement {
        let n = self.n;
        Placement::new(n, squares.iter().map(|&q| (q / n + 1, q % n + 1)))
    }
}

/// Returns `(gamma, witness squares)`.
pub(crate) fn minimum(n: usize) -> (usize, Placement) {
    let board = Board::new(n);
    for k in 1..=n as u32 {
        if let Some(sq) = board.dominate_with(k) {
            return (k as usize, board.to_placement(&sq));
        }
    }
    // n queens down the main diagonal cover every row.
    unreachable!("the diagonal always dominates")
}
