//! Scalar abstraction for series and polynomial coefficients.
//!
//! The arithmetic layer is generic so the same series/polynomial code runs
//! over exact rationals (the default throughout the crate) and over plain
//! floats for the numerical evaluation module.  Two capability levels:
//!
//! * [`Coeff`] — a commutative ring with division where needed (ring ops,
//!   negation, conversion from small integers).  Satisfied by `f32`, `f64`,
//!   and `BigRational`.
//! * [`ExactField`] — adds total ordering and exact sign queries, which the
//!   Sturm-sequence machinery requires to be sound.  Satisfied by
//!   `BigRational`; *not* satisfiable by floats (no `Ord`), so certification
//!   code cannot be instantiated at `f64` by construction.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num, Signed};

/// Coefficient ring for truncated series and polynomials.
pub trait Coeff: Num + Neg<Output = Self> + Clone + FromPrimitive + Debug {}

impl<T> Coeff for T where T: Num + Neg<Output = Self> + Clone + FromPrimitive + Debug {}

/// Exactly ordered field: everything sign decisions may be based on.
pub trait ExactField: Coeff + Signed + Ord {}

impl<T> ExactField for T where T: Coeff + Signed + Ord {}

/// Embed a small integer into the scalar type.
pub fn int<T: Coeff>(n: i64) -> T {
    T::from_i64(n).expect("small integer must embed into the scalar type")
}

/// Embed a small fraction into the scalar type.
pub fn ratio<T: Coeff>(num: i64, den: i64) -> T {
    debug_assert!(den != 0);
    int::<T>(num) / int::<T>(den)
}

/// Sign of an exactly ordered scalar: -1, 0, or +1.
pub fn sign<T: ExactField>(x: &T) -> i8 {
    match x.cmp(&T::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}
