//! Explicit solutions.
//!
//! [`construct_solution`] builds a full solution of `T_n` for every
//! `n = 0, 1 (mod 4)` by peeling off the large labels along the border and
//! recursing into a smaller board, with `n = 1, 4, 5` as base cases. Writing
//! `n = 3r + s`:
//!
//! | `s` | border cells                                              | remaining board            |
//! |-----|-----------------------------------------------------------|----------------------------|
//! | 0   | `(n-k+1, k)` for `k <= r`, `(k, n-k)` for `k < r`, `(2r, n)`  | star of order `r + 1`, shifted by `r - 1` |
//! | 1   | `(n-k+1, k)`, `(k, n-k)` for `k <= r`, `(2r+1, n)`          | full of order `r`, shifted by `r` |
//! | 2   | `(n-k+1, k)`, `(k, n-k)` for `k <= r`, `(2r+1, n)`          | transposed double star of order `r + 3`, shifted by `r - 1` |
//!
//! The star and double-star solutions come from a normalized full solution of
//! the same order with `(m, 1)` (and `(1, m - 1)`) removed.
//!
//! [`construct_n_minus_1`] places `n - 1` nonattacking queens on any board.

use std::collections::BTreeSet;

use crate::board::{cell_value, Cell, Placement};
use crate::certificate::{infeasibility_certificate, is_solvable};
use crate::error::Error;
use crate::solution::SolutionPermutation;
use crate::symmetry::{normalize_solution, SymmetryElement};
use crate::verify::verify_solution;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    Base,
    /// `n = 3r`
    Case3r,
    /// `n = 3r + 1`
    Case3rPlus1,
    /// `n = 3r + 2`
    Case3rPlus2,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Base => "base",
            CaseTag::Case3r => "3r",
            CaseTag::Case3rPlus1 => "3r+1",
            CaseTag::Case3rPlus2 => "3r+2",
        }
    }
}

/// How the child solution is embedded into the parent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChildVariant {
    Full,
    Star,
    DoubleStarTransposed,
}

impl ChildVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            ChildVariant::Full => "full",
            ChildVariant::Star => "star",
            ChildVariant::DoubleStarTransposed => "double_star_transposed",
        }
    }
}

/// One level of the recursion: the border cells chosen at order `n` and the
/// trace of the full solution the rest was cut from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub n: usize,
    pub case_tag: CaseTag,
    pub r: usize,
    /// `(row, col, value)`. For base cases this is the whole solution.
    pub boundary_cells: Vec<(usize, usize, usize)>,
    pub child: Option<Box<ConstructionTrace>>,
    pub offset: usize,
    pub child_variant: Option<ChildVariant>,
}

impl ConstructionTrace {
    /// Number of nested levels, counting this one.
    pub fn depth(&self) -> usize {
        1 + self.child.as_ref().map_or(0, |c| c.depth())
    }

    /// Orders visited from this level down to the base case.
    pub fn chain(&self) -> Vec<usize> {
        let mut out = vec![self.n];
        let mut cur = self;
        while let Some(child) = &cur.child {
            out.push(child.n);
            cur = child;
        }
        out
    }

    /// Rebuilds the solution from the trace alone: border cells plus the
    /// shifted, trimmed child solution.
    pub fn reassemble(&self) -> Vec<Cell> {
        let mut cells: Vec<Cell> = self
            .boundary_cells
            .iter()
            .map(|&(r, c, _)| (r, c))
            .collect();
        if let (Some(child), Some(variant)) = (&self.child, self.child_variant) {
            let sub =
                SolutionPermutation::from_placement(&Placement::new(child.n, child.reassemble()))
                    .expect("child trace reassembles to one queen per row");
            cells.extend(embed(&sub, variant, self.offset));
        }
        cells.sort_unstable();
        cells
    }
}

fn base_case(n: usize) -> Option<&'static [usize]> {
    match n {
        1 => Some(&[1]),
        4 => Some(&[3, 2, 4, 1]),
        5 => Some(&[4, 2, 5, 3, 1]),
        _ => None,
    }
}

/// Trims a full solution of order `m` to the requested variant, applies the
/// transpose if asked, and shifts every coordinate by `offset`.
fn embed(
    sub: &SolutionPermutation,
    variant: ChildVariant,
    offset: usize,
) -> impl Iterator<Item = Cell> {
    let m = sub.n();
    let cells: Vec<Cell> = match variant {
        ChildVariant::Full => sub.cells().collect(),
        ChildVariant::Star => star_cells(sub).collect(),
        ChildVariant::DoubleStarTransposed => double_star_cells(sub)
            .map(|c| SymmetryElement::Transpose.map_cell(m, c))
            .collect(),
    };
    cells
        .into_iter()
        .map(move |(r, c)| (r + offset, c + offset))
}

fn star_cells(s: &SolutionPermutation) -> impl Iterator<Item = Cell> {
    let m = s.n();
    let s = normalize_solution(s).expect("star child has order at least 4");
    s.cells()
        .filter(move |&c| c != (m, 1))
        .collect::<Vec<_>>()
        .into_iter()
}

fn double_star_cells(s: &SolutionPermutation) -> impl Iterator<Item = Cell> {
    let m = s.n();
    let s = normalize_solution(s).expect("double star child has order at least 4");
    s.cells()
        .filter(move |&c| c != (m, 1) && c != (1, m - 1))
        .collect::<Vec<_>>()
        .into_iter()
}

fn assert_set(
    what: &str,
    n: usize,
    got: impl IntoIterator<Item = usize>,
    want: impl IntoIterator<Item = usize>,
) {
    let got: BTreeSet<usize> = got.into_iter().collect();
    let want: BTreeSet<usize> = want.into_iter().collect();
    assert_eq!(got, want, "n = {n}: {what} differs from the case analysis");
}

fn build(n: usize) -> (SolutionPermutation, ConstructionTrace) {
    if let Some(f) = base_case(n) {
        let s = SolutionPermutation::new(f.to_vec());
        let trace = ConstructionTrace {
            n,
            case_tag: CaseTag::Base,
            r: n / 3,
            boundary_cells: s.cells().map(|(r, c)| (r, c, cell_value(r, c))).collect(),
            child: None,
            offset: 0,
            child_variant: None,
        };
        return (s, trace);
    }

    let (r, s) = (n / 3, n % 3);
    let (case_tag, child_order, child_variant, offset, corner, top) = match s {
        0 => (
            CaseTag::Case3r,
            r + 1,
            ChildVariant::Star,
            r - 1,
            (2 * r, n),
            r - 1,
        ),
        1 => (
            CaseTag::Case3rPlus1,
            r,
            ChildVariant::Full,
            r,
            (2 * r + 1, n),
            r,
        ),
        _ => (
            CaseTag::Case3rPlus2,
            r + 3,
            ChildVariant::DoubleStarTransposed,
            r - 1,
            (2 * r + 1, n),
            r,
        ),
    };
    assert!(
        matches!(child_order % 4, 0 | 1),
        "n = {n}: sub-order {child_order} is not 0 or 1 mod 4"
    );
    assert!(child_order < n, "n = {n}: recursion does not shrink");

    let mut boundary: Vec<Cell> = (1..=r).map(|k| (n - k + 1, k)).collect();
    boundary.extend((1..=top).map(|k| (k, n - k)));
    boundary.push(corner);

    let low = if case_tag == CaseTag::Case3rPlus2 {
        r + 1
    } else {
        r
    };
    assert_set(
        "border labels",
        n,
        boundary.iter().map(|&(a, b)| cell_value(a, b)),
        low..n,
    );

    let (sub, child_trace) = build(child_order);
    let inner: Vec<Cell> = embed(&sub, child_variant, offset).collect();
    let (rows, cols): (Vec<usize>, Vec<usize>) = inner.iter().copied().unzip();
    match case_tag {
        CaseTag::Case3r => {
            assert_set("inner rows", n, rows, r..=2 * r - 1);
            assert_set("inner columns", n, cols, r + 1..=2 * r);
        }
        CaseTag::Case3rPlus1 => {
            assert_set("inner rows", n, rows, r + 1..=2 * r);
            assert_set("inner columns", n, cols, r + 1..=2 * r);
        }
        CaseTag::Case3rPlus2 => {
            assert_set("inner rows", n, rows, (r + 1..=2 * r).chain([2 * r + 2]));
            assert_set("inner columns", n, cols, r + 1..=2 * r + 1);
        }
        CaseTag::Base => unreachable!(),
    }

    let mut f = vec![0; n];
    for &(row, col) in boundary.iter().chain(&inner) {
        assert_eq!(f[row - 1], 0, "n = {n}: row {row} selected twice");
        f[row - 1] = col;
    }
    let trace = ConstructionTrace {
        n,
        case_tag,
        r,
        boundary_cells: boundary
            .iter()
            .map(|&(a, b)| (a, b, cell_value(a, b)))
            .collect(),
        child: Some(Box::new(child_trace)),
        offset,
        child_variant: Some(child_variant),
    };
    (SolutionPermutation::new(f), trace)
}

fn require_solvable(n: usize) -> Result<(), Error> {
    if is_solvable(n)? {
        Ok(())
    } else {
        Err(Error::Unsolvable(Box::new(infeasibility_certificate(n)?)))
    }
}

/// A solution of `T_n` together with the recursion that produced it.
///
/// Fails with [`Error::Unsolvable`] (carrying the certificate) when
/// `n = 2, 3 (mod 4)`.
pub fn construct_solution(n: usize) -> Result<(SolutionPermutation, ConstructionTrace), Error> {
    require_solvable(n)?;
    let (s, trace) = build(n);
    if let Err(v) = verify_solution(&s) {
        panic!("constructed solution for n = {n} is invalid: {v}");
    }
    Ok((s, trace))
}

fn trimmed_order(n: usize) -> Result<SolutionPermutation, Error> {
    require_solvable(n)?;
    if n < 4 {
        return Err(Error::InvalidOrder { n, min: 4 });
    }
    Ok(construct_solution(n)?.0)
}

/// Solution of the star board (`T_n` without its first column and last row).
pub fn construct_star(n: usize) -> Result<Placement, Error> {
    let s = trimmed_order(n)?;
    Ok(Placement::new(n, star_cells(&s)))
}

/// Solution of the double-star board (`T_n` without its first and last rows
/// and its first and `(n-1)`-st columns).
pub fn construct_double_star(n: usize) -> Result<Placement, Error> {
    let s = trimmed_order(n)?;
    Ok(Placement::new(n, double_star_cells(&s)))
}

/// `n - 1` nonattacking queens on the order-`n` board, for any `n >= 2`.
///
/// Row 2, column `ceil(n/2) + 1` and label `n - 1` stay empty.
pub fn construct_n_minus_1(n: usize) -> Result<Placement, Error> {
    if n < 2 {
        return Err(Error::InvalidOrder { n, min: 2 });
    }
    let mut p = Placement::new(n, [(1, 1)]);
    for i in 1..n.div_ceil(2) {
        p.insert((n + 1 - i, i + 1));
    }
    for j in 3..=n / 2 + 1 {
        p.insert((j, n + 3 - j));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::{BoardSpec, Variant};
    use crate::verify::{verify_nonattacking, verify_variant_solution};

    fn cells(p: &Placement) -> Vec<Cell> {
        p.cells().collect()
    }

    #[test]
    fn base_cases() {
        assert_eq!(construct_solution(1).unwrap().0.as_slice(), [1]);
        assert_eq!(construct_solution(4).unwrap().0.as_slice(), [3, 2, 4, 1]);
        assert_eq!(construct_solution(5).unwrap().0.as_slice(), [4, 2, 5, 3, 1]);
    }

    // Worked by hand: r = 2, border (8,1),(7,2),(1,7),(2,6),(5,8); the double
    // star of S_5 is {(2,2),(3,5),(4,3)}, transposed {(2,2),(5,3),(3,4)},
    // shifted by 1 gives {(3,3),(6,4),(4,5)}.
    #[test]
    fn order_eight() {
        let (s, trace) = construct_solution(8).unwrap();
        let want = Placement::new(
            8,
            [
                (8, 1),
                (7, 2),
                (1, 7),
                (2, 6),
                (5, 8),
                (3, 3),
                (6, 4),
                (4, 5),
            ],
        );
        assert_eq!(s.to_placement(), want);
        assert_eq!(trace.case_tag, CaseTag::Case3rPlus2);
        assert_eq!(trace.chain(), [8, 5]);
        assert_eq!(
            trace.child_variant,
            Some(ChildVariant::DoubleStarTransposed)
        );
    }

    #[test]
    fn unsolvable_orders_carry_certificates() {
        for n in [2, 3, 6, 7, 10] {
            match construct_solution(n) {
                Err(Error::Unsolvable(c)) => assert!(c.n == n && c.check()),
                other => panic!("n = {n}: {other:?}"),
            }
        }
        assert!(construct_solution(0).is_err());
    }

    #[test]
    fn chains_end_in_base_cases() {
        let expect = [
            (8, vec![8, 5]),
            (9, vec![9, 4]),
            (12, vec![12, 5]),
            (13, vec![13, 4]),
            (16, vec![16, 5]),
            (17, vec![17, 8, 5]),
            (20, vec![20, 9, 4]),
            (21, vec![21, 8, 5]),
            (24, vec![24, 9, 4]),
            (25, vec![25, 8, 5]),
            (28, vec![28, 9, 4]),
            (29, vec![29, 12, 5]),
        ];
        for (n, chain) in expect {
            assert_eq!(construct_solution(n).unwrap().1.chain(), chain, "n = {n}");
        }
    }

    #[test]
    fn trace_reassembles() {
        for n in (1..=300).filter(|n| n % 4 < 2) {
            let (s, trace) = construct_solution(n).unwrap();
            assert_eq!(trace.reassemble(), s.cells().collect::<Vec<_>>(), "n = {n}");
            let bound = 1 + (n as f64).log(3.0).ceil() as usize;
            assert!(trace.depth() <= bound, "n = {n}: depth {}", trace.depth());
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(
            construct_solution(97).unwrap(),
            construct_solution(97).unwrap()
        );
    }

    #[test]
    fn stars() {
        assert_eq!(cells(&construct_star(4).unwrap()), [(1, 3), (2, 2), (3, 4)]);
        assert_eq!(
            cells(&construct_star(5).unwrap()),
            [(1, 4), (2, 2), (3, 5), (4, 3)]
        );
        assert!(matches!(construct_star(6), Err(Error::Unsolvable(_))));
        assert_eq!(construct_star(1), Err(Error::InvalidOrder { n: 1, min: 4 }));

        assert_eq!(
            cells(&construct_double_star(5).unwrap()),
            [(2, 2), (3, 5), (4, 3)]
        );
        assert_eq!(cells(&construct_double_star(4).unwrap()), [(2, 2), (3, 4)]);
        assert!(matches!(
            construct_double_star(7),
            Err(Error::Unsolvable(_))
        ));
    }

    #[test]
    fn trimmed_solutions_extend_back() {
        for n in (4..=200).filter(|n| n % 4 < 2) {
            let star = construct_star(n).unwrap();
            let spec = BoardSpec::new(n, Variant::Star).unwrap();
            assert_eq!(verify_variant_solution(&star, &spec), Ok(()));
            let mut full = star.clone();
            full.insert((n, 1));
            assert!(verify_solution(&SolutionPermutation::from_placement(&full).unwrap()).is_ok());

            let ds = construct_double_star(n).unwrap();
            let spec = BoardSpec::new(n, Variant::DoubleStar).unwrap();
            assert_eq!(verify_variant_solution(&ds, &spec), Ok(()));
            let mut full = ds.clone();
            full.insert((n, 1));
            full.insert((1, n - 1));
            assert!(verify_solution(&SolutionPermutation::from_placement(&full).unwrap()).is_ok());
        }
    }

    #[test]
    fn n_minus_1_examples() {
        assert_eq!(
            cells(&construct_n_minus_1(4).unwrap()),
            [(1, 1), (3, 4), (4, 2)]
        );
        assert_eq!(
            cells(&construct_n_minus_1(6).unwrap()),
            [(1, 1), (3, 6), (4, 5), (5, 3), (6, 2)]
        );
        assert_eq!(cells(&construct_n_minus_1(2).unwrap()), [(1, 1)]);
        assert_eq!(
            construct_n_minus_1(1),
            Err(Error::InvalidOrder { n: 1, min: 2 })
        );
    }

    #[test]
    fn n_minus_1_misses_one_row_column_and_label() {
        for n in 2..=300 {
            let p = construct_n_minus_1(n).unwrap();
            assert_eq!(p.len(), n - 1);
            let spec = BoardSpec::full(n).unwrap();
            assert_eq!(verify_nonattacking(&p, &spec), Ok(()), "n = {n}");
            let rows: BTreeSet<_> = p.cells().map(|c| c.0).collect();
            let cols: BTreeSet<_> = p.cells().map(|c| c.1).collect();
            let vals: BTreeSet<_> = p.values().collect();
            assert!(!rows.contains(&2));
            assert!(!cols.contains(&(n.div_ceil(2) + 1)));
            assert!(!vals.contains(&(n - 1)));
        }
    }
}
