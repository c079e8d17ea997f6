//! Nonattacking queens on the symmetric Toeplitz board.
//!
//! The order-`n` board labels square `(i, j)` with `|i - j|`. Two queens
//! attack each other when they share a row, a column or a label. `n` queens
//! fit exactly when `n = 0, 1 (mod 4)`:
//!
//! * [`construct::construct_solution`] builds a solution for those orders,
//! * [`certificate::infeasibility_certificate`] proves there is none for the
//!   others,
//! * [`construct::construct_n_minus_1`] places `n - 1` queens on any board,
//! * [`enumerate`] checks all of the above by exhaustive search and counts
//!   solutions, their symmetry classes and domination numbers.
//!
//! ```
//! use toeplitz_queens::{construct_solution, verify_solution};
//!
//! let (s, _trace) = construct_solution(8).unwrap();
//! assert!(verify_solution(&s).is_ok());
//! assert_eq!(s.as_slice(), [7, 6, 3, 5, 8, 4, 2, 1]);
//! ```

pub mod board;
pub mod certificate;
pub mod construct;
pub mod doc;
pub mod enumerate;
pub mod error;
pub mod solution;
pub mod symmetry;
pub mod verify;

pub use board::{cell_value, BoardSpec, Cell, Placement, Variant};
pub use certificate::{
    infeasibility_certificate, is_solvable, weighted_sum_identity, Certificate, ContradictionKind,
};
pub use construct::{
    construct_double_star, construct_n_minus_1, construct_solution, construct_star, CaseTag,
    ChildVariant, ConstructionTrace,
};
pub use enumerate::{
    count_fundamental, count_solutions, domination_number, enumerate_solutions, max_independent,
    Caps, DominationReport, EnumerationReport, MaxIndependent, Search,
};
pub use error::Error;
pub use solution::SolutionPermutation;
pub use symmetry::{apply_symmetry, normalize_solution, SymmetryElement};
pub use verify::{
    is_nonattacking, is_solution, verify_nonattacking, verify_placement, verify_solution,
    verify_variant_solution, Violation,
};
