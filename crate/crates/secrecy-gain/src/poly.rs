//! Dense univariate polynomials over an exact scalar.
//!
//! Coefficients are stored in ascending degree order with no trailing zeros,
//! so the representation of a polynomial is unique and `degree` is
//! structural.  Ring operations need only [`Coeff`]; Euclidean division,
//! gcd, and the squarefree part additionally need an ordered field
//! ([`ExactField`]) because they make exact zero tests.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use crate::scalar::{int, Coeff, ExactField};

/// Polynomial with exact coefficients, ascending degree, normalized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Poly<T> {
    /// Build from ascending coefficients, dropping trailing zeros.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// The zero polynomial (empty coefficient vector).
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Poly {
            coeffs: vec![T::one()],
        }
    }

    /// A constant polynomial.
    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `c * z^d`.
    pub fn monomial(d: usize, c: T) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); d + 1];
        coeffs[d] = c;
        Poly { coeffs }
    }

    /// Ascending coefficients, no trailing zeros.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `z^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the zero polynomial and degree-0 polynomials.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| int::<T>((i + 1) as i64) * c.clone())
                .collect(),
        )
    }

    /// The polynomial scaled by a constant.
    pub fn scaled(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|v| v.clone() * c.clone()).collect())
    }

    /// Non-negative integer power by repeated multiplication.
    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl<T: ExactField> Poly<T> {
    /// Euclidean division: `self = q * divisor + r` with
    /// `deg r < deg divisor`.
    ///
    /// # Panics
    ///
    /// Panics when the divisor is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dlead = divisor
            .leading()
            .expect("polynomial division by zero")
            .clone();
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![T::zero(); rem.len() - ddeg];
        for i in (ddeg..rem.len()).rev() {
            let c = rem[i].clone() / dlead.clone();
            if c.is_zero() {
                continue;
            }
            quot[i - ddeg] = c.clone();
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let idx = i - ddeg + j;
                rem[idx] = rem[idx].clone() - c.clone() * d.clone();
            }
        }
        rem.truncate(ddeg);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor (1 for coprime inputs, 0 only when both
    /// inputs are 0).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            Some(lead) if !lead.is_one() => {
                let inv = T::one() / lead.clone();
                a.scaled(&inv)
            }
            _ => a,
        }
    }

    /// The squarefree part `self / gcd(self, self')`, normalized monic.
    /// Shares exactly the roots of `self`, each with multiplicity one.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero(), "gcd must divide the polynomial");
        let lead = q.leading().expect("nonconstant input").clone();
        q.scaled(&(T::one() / lead))
    }

    /// The polynomial divided by the positive scalar `|leading|`, so the
    /// leading coefficient becomes +-1 without disturbing any sign.
    pub(crate) fn reduced_by_positive_leading(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(lead) => {
                let scale = T::one() / lead.abs();
                self.scaled(&scale)
            }
        }
    }
}

impl<T: Coeff> Add for &Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Coeff> Sub for &Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Coeff> Mul for &Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Coeff + Signed + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            match i {
                0 => write!(f, "{}", mag)?,
                1 => write!(f, "{}*z", mag)?,
                _ => write!(f, "{}*z^{}", mag, i)?,
            }
        }
        Ok(())
    }
}
