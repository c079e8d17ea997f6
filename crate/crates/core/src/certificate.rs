//! The counting argument behind non-existence.
//!
//! If `f` solves `T_n` then `sum_i i * f(i)` equals
//! `(2n(n+1)(2n+1) - (n-1)n(2n-1)) / 12`, which simplifies to
//! `n(2n^2 + 9n + 1) / 12`. That quantity is an integer only when
//! `n = 0, 1 (mod 4)`; for the other residues a [`Certificate`] records the
//! exact value and the residue facts that rule it out.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// True iff an order-`n` board admits `n` nonattacking queens.
pub fn is_solvable(n: usize) -> Result<bool, Error> {
    if n == 0 {
        return Err(Error::InvalidOrder { n, min: 1 });
    }
    Ok(matches!(n % 4, 0 | 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ContradictionKind {
    /// `n = 2 (mod 4)`: `n` is even but `2n^2 + 9n + 1` is odd, so the
    /// product carries a single factor of two.
    EvenCase,
    /// `n = 3 (mod 4)`: `2n^2 + 9n + 1 = 2 (mod 4)`, so the product is
    /// `2 (mod 4)`.
    OddCase,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Certificate {
    pub n: usize,
    pub residue_mod_4: u8,
    /// `2n^2 + 9n + 1`.
    pub factor: u128,
    /// `n * factor`.
    pub quantity: u128,
    pub quantity_mod_12: u8,
    pub quantity_mod_4: u8,
    pub contradiction_kind: ContradictionKind,
}

/// Exact `(2n^2 + 9n + 1, n(2n^2 + 9n + 1))`.
fn factor_and_quantity(n: usize) -> Result<(u128, u128), Error> {
    let m = n as u128;
    let overflow = || Error::Overflow { n };
    let factor = m
        .checked_mul(m)
        .and_then(|sq| sq.checked_mul(2))
        .and_then(|t| t.checked_add(9 * m + 1))
        .ok_or_else(overflow)?;
    let quantity = factor.checked_mul(m).ok_or_else(overflow)?;
    Ok((factor, quantity))
}

/// `n(2n^2 + 9n + 1)`, the numerator of the weighted-sum identity.
pub fn certificate_quantity(n: usize) -> Result<u128, Error> {
    factor_and_quantity(n).map(|(_, q)| q)
}

pub fn infeasibility_certificate(n: usize) -> Result<Certificate, Error> {
    if is_solvable(n)? {
        return Err(Error::Solvable { n });
    }
    let (factor, quantity) = factor_and_quantity(n)?;
    let contradiction_kind = if n.is_multiple_of(2) {
        ContradictionKind::EvenCase
    } else {
        ContradictionKind::OddCase
    };
    let cert = Certificate {
        n,
        residue_mod_4: (n % 4) as u8,
        factor,
        quantity,
        quantity_mod_12: (quantity % 12) as u8,
        quantity_mod_4: (quantity % 4) as u8,
        contradiction_kind,
    };
    assert!(
        cert.check(),
        "counting argument failed for n = {n}: {cert:?}"
    );
    Ok(cert)
}

impl Certificate {
    /// Re-derives every field from `n` and confirms the contradiction.
    pub fn check(&self) -> bool {
        let Ok((factor, quantity)) = factor_and_quantity(self.n) else {
            return false;
        };
        let fields_match = self.factor == factor
            && self.quantity == quantity
            && u128::from(self.residue_mod_4) == self.n as u128 % 4
            && u128::from(self.quantity_mod_12) == quantity % 12
            && u128::from(self.quantity_mod_4) == quantity % 4;
        let branch_holds = match self.contradiction_kind {
            ContradictionKind::EvenCase => self.n % 4 == 2 && factor % 2 == 1,
            ContradictionKind::OddCase => self.n % 4 == 3 && quantity % 4 == 2,
        };
        fields_match && branch_holds && quantity % 12 != 0
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n = {} = {} (mod 4); n(2n^2+9n+1) = {} = {} (mod 12), ",
            self.n, self.residue_mod_4, self.quantity, self.quantity_mod_12
        )?;
        match self.contradiction_kind {
            ContradictionKind::EvenCase => write!(
                f,
                "n even but 2n^2+9n+1 = {} is odd, so the product is not divisible by 4",
                self.factor
            ),
            ContradictionKind::OddCase => write!(
                f,
                "n odd and the product is {} (mod 4), so it is not divisible by 4",
                self.quantity_mod_4
            ),
        }
    }
}

/// The value every solution of `T_n` must give for `sum_i i * f(i)`.
///
/// Evaluated from the unsimplified form
/// `(2n(n+1)(2n+1) - (n-1)n(2n-1)) / 12`; the division is exact only for
/// solvable orders.
pub fn weighted_sum_identity(n: usize) -> Result<u128, Error> {
    if !is_solvable(n)? {
        return Err(Error::Unsolvable(Box::new(infeasibility_certificate(n)?)));
    }
    let m = n as u128;
    let overflow = || Error::Overflow { n };
    let twice_squares = [2, m, m + 1, 2 * m + 1]
        .into_iter()
        .try_fold(1u128, u128::checked_mul)
        .ok_or_else(overflow)?;
    let shifted_squares = [m - 1, m, 2 * m - 1]
        .into_iter()
        .try_fold(1u128, u128::checked_mul)
        .ok_or_else(overflow)?;
    let numerator = twice_squares - shifted_squares;
    debug_assert_eq!(numerator % 12, 0);
    Ok(numerator / 12)
}
