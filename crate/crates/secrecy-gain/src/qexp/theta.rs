//! Theta constants and the named modular forms built from them.
//!
//! With the nome convention `q = e^(pi*i*tau)`, the three theta constants
//! have the product expansions
//!
//! ```text
//!     theta_2 = q^(1/4) * prod_{n>=1} (1 - q^(2n)) (1 + q^(2n)) (1 + q^(2n-2))
//!     theta_3 =           prod_{n>=1} (1 - q^(2n)) (1 + q^(2n-1))^2
//!     theta_4 =           prod_{n>=1} (1 - q^(2n)) (1 - q^(2n-1))^2
//! ```
//!
//! Note the `n = 1` factor of theta_2 is `(1 + q^0) = 2`, so the expansion
//! starts `2*q^(1/4) + 2*q^(9/4) + ...`; the exponents are `(2n-1)^2/4`,
//! which is why series live on the quarter grid.  The derived forms are
//!
//! ```text
//!     E4      = (theta_2^8 + theta_3^8 + theta_4^8) / 2
//!     Delta   = theta_2^8 * theta_3^8 * theta_4^8 / 256
//!     Delta_8 = theta_2^4 * theta_4^4 / 16
//! ```
//!
//! All products are evaluated in exact arithmetic; factors whose lowest
//! exponent exceeds the truncation order are skipped.

use crate::error::{Error, Result};
use crate::qexp::series::Series;
use crate::scalar::{ratio, Coeff};

/// Which theta constant to expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaIndex {
    Two,
    Three,
    Four,
}

impl ThetaIndex {
    /// The conventional subscript.
    pub fn subscript(self) -> u8 {
        match self {
            ThetaIndex::Two => 2,
            ThetaIndex::Three => 3,
            ThetaIndex::Four => 4,
        }
    }
}

/// Named form derived from the theta constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedForm {
    /// Eisenstein series of weight 4 (normalized to constant term 1).
    E4,
    /// Discriminant form, leading term q^2.
    Delta,
    /// The weight-4 form theta_2^4 theta_4^4 / 16, leading term q.
    Delta8,
}

/// Exact q-expansion of a theta constant through `q^order`.
pub fn theta_series<T: Coeff>(index: ThetaIndex, order: i64) -> Result<Series<T>> {
    if order < 1 {
        return Err(Error::InvalidOrder {
            requested: order,
            minimum: 1,
        });
    }
    let bound = 4 * order;
    let mut acc;
    match index {
        ThetaIndex::Two => {
            // q^(1/4) * prod (1 - q^(2n)) (1 + q^(2n)) (1 + q^(2n-2)),
            // in quarter-exponents: 8n, 8n, 8n-8.
            acc = Series::monomial(1, T::one(), order);
            let mut n = 1i64;
            while 8 * n - 8 <= bound {
                let f1 = &Series::one(order) - &Series::monomial(8 * n, T::one(), order);
                let f2 = &Series::one(order) + &Series::monomial(8 * n, T::one(), order);
                let f3 = &Series::one(order) + &Series::monomial(8 * n - 8, T::one(), order);
                acc = &(&(&acc * &f1) * &f2) * &f3;
                n += 1;
            }
        }
        ThetaIndex::Three | ThetaIndex::Four => {
            // prod (1 - q^(2n)) (1 +/- q^(2n-1))^2,
            // in quarter-exponents: 8n, 8n-4.
            let odd_sign = if index == ThetaIndex::Three {
                T::one()
            } else {
                -T::one()
            };
            acc = Series::one(order);
            let mut n = 1i64;
            while 8 * n - 4 <= bound {
                let f1 = &Series::one(order) - &Series::monomial(8 * n, T::one(), order);
                let f2 =
                    &Series::one(order) + &Series::monomial(8 * n - 4, odd_sign.clone(), order);
                acc = &(&acc * &f1) * &f2.pow(2);
                n += 1;
            }
        }
    }
    Ok(acc)
}

/// Exact q-expansion of a named form through `q^order`.
///
/// `Delta` requires `order >= 2` (its leading term is q^2); the others
/// require `order >= 1` like the theta constants themselves.
pub fn named_form_series<T: Coeff>(form: NamedForm, order: i64) -> Result<Series<T>> {
    match form {
        NamedForm::E4 => {
            let t2 = theta_series::<T>(ThetaIndex::Two, order)?;
            let t3 = theta_series::<T>(ThetaIndex::Three, order)?;
            let t4 = theta_series::<T>(ThetaIndex::Four, order)?;
            let sum = &(&t2.pow(8) + &t3.pow(8)) + &t4.pow(8);
            Ok(sum.scaled(&ratio(1, 2)))
        }
        NamedForm::Delta => {
            if order < 2 {
                return Err(Error::InvalidOrder {
                    requested: order,
                    minimum: 2,
                });
            }
            let t2 = theta_series::<T>(ThetaIndex::Two, order)?;
            let t3 = theta_series::<T>(ThetaIndex::Three, order)?;
            let t4 = theta_series::<T>(ThetaIndex::Four, order)?;
            let prod = &(&t2 * &t3) * &t4;
            Ok(prod.pow(8).scaled(&ratio(1, 256)))
        }
        NamedForm::Delta8 => {
            let t2 = theta_series::<T>(ThetaIndex::Two, order)?;
            let t4 = theta_series::<T>(ThetaIndex::Four, order)?;
            Ok((&t2 * &t4).pow(4).scaled(&ratio(1, 16)))
        }
    }
}
