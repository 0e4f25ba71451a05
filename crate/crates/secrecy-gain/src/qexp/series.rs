//! Truncated q-expansions on the quarter-exponent grid.
//!
//! A [`Series`] holds finitely many exact coefficients of an expansion
//!
//! ```text
//!     f  =  sum_e  c_e * q^(e/4),        e = 0, 1, 2, ...
//! ```
//!
//! keyed by the integer quarter-exponent `e`, together with a truncation
//! order `N` (in whole powers of q): every coefficient with `e <= 4*N` is
//! exact, and nothing beyond `4*N` is stored.  The quarter grid exists
//! because theta_2 carries exponents `(2n-1)^2 / 4`; series built from
//! theta_3, theta_4 or from even lattices stay on the integral sub-grid
//! `e = 0 (mod 4)`.
//!
//! Arithmetic follows truncation bookkeeping: the order of a sum or product
//! is the minimum of the operand orders, and products drop every term past
//! the result order.  Zero coefficients are never stored, so `is_zero` and
//! term iteration are structural.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use crate::scalar::Coeff;

/// Exact truncated series on the grid `q^(e/4)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series<T> {
    /// Nonzero coefficients keyed by quarter-exponent.
    coeffs: BTreeMap<i64, T>,
    /// Truncation order in whole powers of q.
    order: i64,
}

impl<T: Coeff> Series<T> {
    /// The zero series, exact through `q^order`.
    pub fn zero(order: i64) -> Self {
        assert!(order >= 0, "series order must be non-negative");
        Series {
            coeffs: BTreeMap::new(),
            order,
        }
    }

    /// The constant series 1.
    pub fn one(order: i64) -> Self {
        Self::constant(T::one(), order)
    }

    /// A constant series.
    pub fn constant(c: T, order: i64) -> Self {
        let mut s = Self::zero(order);
        s.insert(0, c);
        s
    }

    /// The single term `c * q^(quarter_exp / 4)`.  Terms past the truncation
    /// order are dropped (the result is the zero series).
    pub fn monomial(quarter_exp: i64, c: T, order: i64) -> Self {
        assert!(quarter_exp >= 0, "exponents must be non-negative");
        let mut s = Self::zero(order);
        if quarter_exp <= 4 * order {
            s.insert(quarter_exp, c);
        }
        s
    }

    /// Truncation order in whole powers of q.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// Coefficient of `q^(quarter_exp / 4)`.  Exponents within the truncation
    /// order that are absent are exactly zero; asking past the order is a bug.
    pub fn coeff(&self, quarter_exp: i64) -> T {
        assert!(
            quarter_exp <= 4 * self.order,
            "coefficient of q^({}/4) requested beyond truncation order {}",
            quarter_exp,
            self.order
        );
        self.coeffs
            .get(&quarter_exp)
            .cloned()
            .unwrap_or_else(T::zero)
    }

    /// Coefficient of the whole power `q^k`.
    pub fn coeff_q(&self, k: i64) -> T {
        self.coeff(4 * k)
    }

    /// True when no nonzero coefficient is stored.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms in increasing quarter-exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &T)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// True when every stored exponent is a whole power of q.
    pub fn integral_exponents_only(&self) -> bool {
        self.coeffs.keys().all(|e| e % 4 == 0)
    }

    /// The same series truncated to a smaller order.
    ///
    /// # Panics
    ///
    /// Raising the order would claim exactness the series does not have, so
    /// `new_order > self.order()` panics.
    pub fn truncated(&self, new_order: i64) -> Self {
        assert!(
            new_order <= self.order,
            "cannot raise truncation order from {} to {}",
            self.order,
            new_order
        );
        assert!(new_order >= 0, "series order must be non-negative");
        let bound = 4 * new_order;
        Series {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(e, _)| **e <= bound)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
            order: new_order,
        }
    }

    /// The series scaled by a constant.
    pub fn scaled(&self, c: &T) -> Self {
        let mut out = Self::zero(self.order);
        for (e, v) in self.terms() {
            out.insert(e, v.clone() * c.clone());
        }
        out
    }

    /// The series raised to a non-negative integer power, by binary
    /// exponentiation.  `f^0` is the constant 1 at the same order.
    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.order);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// True when the two series have identical coefficients for every
    /// exponent up to `through` whole powers of q.  Both series must be
    /// exact at least that far.
    pub fn agrees_with(&self, other: &Self, through: i64) -> bool {
        assert!(
            self.order >= through && other.order >= through,
            "agreement check through order {} exceeds an operand order",
            through
        );
        let bound = 4 * through;
        let mut keys: Vec<i64> = self.coeffs.keys().copied().collect();
        keys.extend(other.coeffs.keys().copied());
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter(|e| *e <= bound)
            .all(|e| self.coeff(e) == other.coeff(e))
    }

    /// Insert a term, keeping the no-stored-zero invariant.
    fn insert(&mut self, quarter_exp: i64, c: T) {
        if !c.is_zero() {
            self.coeffs.insert(quarter_exp, c);
        }
    }

    /// Add into an accumulator map entry, dropping the entry if it cancels.
    fn accumulate(map: &mut BTreeMap<i64, T>, quarter_exp: i64, c: T) {
        if c.is_zero() {
            return;
        }
        match map.remove(&quarter_exp) {
            None => {
                map.insert(quarter_exp, c);
            }
            Some(prev) => {
                let sum = prev + c;
                if !sum.is_zero() {
                    map.insert(quarter_exp, sum);
                }
            }
        }
    }
}

impl<T: Coeff> Add for &Series<T> {
    type Output = Series<T>;

    fn add(self, rhs: &Series<T>) -> Series<T> {
        let order = self.order.min(rhs.order);
        let bound = 4 * order;
        let mut coeffs = BTreeMap::new();
        for (e, c) in self.terms().chain(rhs.terms()) {
            if e <= bound {
                Series::accumulate(&mut coeffs, e, c.clone());
            }
        }
        Series { coeffs, order }
    }
}

impl<T: Coeff> Sub for &Series<T> {
    type Output = Series<T>;

    fn sub(self, rhs: &Series<T>) -> Series<T> {
        self + &(-rhs)
    }
}

impl<T: Coeff> Neg for &Series<T> {
    type Output = Series<T>;

    fn neg(self) -> Series<T> {
        let mut out = Series::zero(self.order);
        for (e, c) in self.terms() {
            out.insert(e, -c.clone());
        }
        out
    }
}

impl<T: Coeff> Mul for &Series<T> {
    type Output = Series<T>;

    fn mul(self, rhs: &Series<T>) -> Series<T> {
        let order = self.order.min(rhs.order);
        let bound = 4 * order;
        let mut coeffs = BTreeMap::new();
        for (e1, c1) in self.terms() {
            if e1 > bound {
                continue;
            }
            for (e2, c2) in rhs.terms() {
                let e = e1 + e2;
                if e > bound {
                    break; // terms() is increasing in the exponent
                }
                Series::accumulate(&mut coeffs, e, c1.clone() * c2.clone());
            }
        }
        Series { coeffs, order }
    }
}

impl<T: Coeff + Signed + fmt::Display> fmt::Display for Series<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 + O(q^{})", self.order + 1);
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            match (e, e % 4) {
                (0, _) => write!(f, "{}", mag)?,
                (4, _) => write!(f, "{}*q", mag)?,
                (_, 0) => write!(f, "{}*q^{}", mag, e / 4)?,
                _ => write!(f, "{}*q^({}/4)", mag, e)?,
            }
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}
