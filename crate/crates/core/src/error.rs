use thiserror::Error;

use crate::certificate::Certificate;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order {n} is too small, at least {min} is required")]
    InvalidOrder { n: usize, min: usize },

    #[error("no solution exists for n = {}: {0}", .0.n)]
    Unsolvable(Box<Certificate>),

    #[error("board is solvable, no certificate exists for n = {n}")]
    Solvable { n: usize },

    #[error("n = {n} exceeds the {what} cap of {cap}; {hint}")]
    CapExceeded {
        n: usize,
        cap: usize,
        what: &'static str,
        hint: &'static str,
    },

    #[error("arithmetic overflow evaluating the certificate for n = {n}")]
    Overflow { n: usize },
}
