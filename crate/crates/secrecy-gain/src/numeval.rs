//! Floating-point evaluation of theta functions on the imaginary axis and
//! of secrecy functions, for cross-checks and plot-ready samples.
//!
//! With tau = y*i the nome is q = e^(-pi*y), a positive real below 1, and
//! the sum forms of the theta constants converge like q^(n^2).  Everything
//! here is double precision and approximate by design — the exact side of
//! the crate never depends on it; these routines exist to confirm the
//! bridge identity Xi^-1(y) = P(z(y)) numerically and to emit samples.

use crate::error::{Error, Result};
use crate::io::rat_to_f64;
use crate::qexp::ThetaIndex;
use crate::thetasolve::{even_mk, general_mu_nu, Parity, ThetaWeights};
use crate::ZPoly;

/// Hard ceiling on summation length; reached only for y pushed far below
/// the plotting range, where convergence slows.
const MAX_TERMS: u32 = 10_000;

/// A point y > 0 on the imaginary axis (tau = y*i) plus a truncation
/// tolerance for the theta sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPoint {
    y: f64,
    tol: f64,
}

impl EvalPoint {
    pub const DEFAULT_TOL: f64 = 1e-15;

    /// Evaluation point with the default tolerance.
    pub fn new(y: f64) -> Result<Self> {
        EvalPoint::with_tol(y, EvalPoint::DEFAULT_TOL)
    }

    /// Evaluation point with an explicit truncation tolerance.
    pub fn with_tol(y: f64, tol: f64) -> Result<Self> {
        if !y.is_finite() || y <= 0.0 {
            return Err(Error::InvalidEvalPoint(format!("y = {} (need y > 0)", y)));
        }
        if !tol.is_finite() || tol <= 0.0 || tol >= 1.0 {
            return Err(Error::InvalidEvalPoint(format!(
                "tol = {} (need 0 < tol < 1)",
                tol
            )));
        }
        Ok(EvalPoint { y, tol })
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }
}

/// theta_2, theta_3, or theta_4 at tau = y*i, by the sum forms
///
/// ```text
///   theta_2 = 2 q^(1/4) sum_{n>=0} q^(n(n+1))
///   theta_3 = 1 + 2 sum_{n>=1} q^(n^2)
///   theta_4 = 1 + 2 sum_{n>=1} (-1)^n q^(n^2)
/// ```
///
/// truncated when the next term drops below tol times the partial sum.
/// The dropped tail is geometrically dominated: for y >= 1/4 (q <= 0.46)
/// it is below 1.3 x the first dropped term, so the absolute error is
/// under 2*tol times the returned value.
pub fn theta_value(index: ThetaIndex, p: &EvalPoint) -> f64 {
    let q = (-std::f64::consts::PI * p.y).exp();
    match index {
        ThetaIndex::Three | ThetaIndex::Four => {
            let mut sum = 1.0f64;
            let mut power = q; // q^(n^2) at the current n
            let mut n = 1u32;
            loop {
                let term = 2.0 * power;
                if term < p.tol * sum.abs() || n > MAX_TERMS {
                    break;
                }
                if index == ThetaIndex::Four && n % 2 == 1 {
                    sum -= term;
                } else {
                    sum += term;
                }
                // q^((n+1)^2) = q^(n^2) * q^(2n+1)
                power *= q.powi(2 * n as i32 + 1);
                n += 1;
            }
            sum
        }
        ThetaIndex::Two => {
            let mut sum = 0.0;
            let mut power = 1.0; // q^(n(n+1)) at the current n
            let mut n = 0u32;
            loop {
                if (n > 0 && power < p.tol * sum) || n > MAX_TERMS {
                    break;
                }
                sum += power;
                // q^((n+1)(n+2)) = q^(n(n+1)) * q^(2(n+1))
                power *= q.powi(2 * (n as i32 + 1));
                n += 1;
            }
            2.0 * (-std::f64::consts::PI * p.y / 4.0).exp() * sum
        }
    }
}

/// z(y) = theta_2^4 theta_4^4 / theta_3^8 at tau = y*i; lies in (0, 1/4]
/// for every y > 0 and equals 1/4 at y = 1.
pub fn z_of_y(p: &EvalPoint) -> f64 {
    let t2 = theta_value(ThetaIndex::Two, p);
    let t3 = theta_value(ThetaIndex::Three, p);
    let t4 = theta_value(ThetaIndex::Four, p);
    t2.powi(4) * t4.powi(4) / t3.powi(8)
}

/// Xi^-1(y) = Theta_Lambda(y*i) / theta_3(y*i)^n, assembled from the
/// weights' defining combination of named forms.
pub fn xi_inverse_value(weights: &ThetaWeights, p: &EvalPoint) -> f64 {
    let n = weights.dimension();
    let t2 = theta_value(ThetaIndex::Two, p);
    let t3 = theta_value(ThetaIndex::Three, p);
    let t4 = theta_value(ThetaIndex::Four, p);
    let numerator = match weights.parity() {
        Parity::Even => {
            let (m, k) = even_mk(n).expect("weights carry a valid even dimension");
            let e4 = 0.5 * (t2.powi(8) + t3.powi(8) + t4.powi(8));
            let delta = (t2 * t3 * t4).powi(8) / 256.0;
            weights
                .weights()
                .iter()
                .enumerate()
                .map(|(j, b)| {
                    let j = j as u32;
                    rat_to_f64(b) * e4.powi((3 * (m - j) + k) as i32) * delta.powi(j as i32)
                })
                .sum::<f64>()
        }
        Parity::General => {
            let (mu, _) = general_mu_nu(n);
            debug_assert_eq!(weights.weights().len(), mu as usize + 1);
            let delta8 = (t2 * t4).powi(4) / 16.0;
            weights
                .weights()
                .iter()
                .enumerate()
                .map(|(r, a)| {
                    rat_to_f64(a) * t3.powi((n - 8 * r as u32) as i32) * delta8.powi(r as i32)
                })
                .sum::<f64>()
        }
    };
    numerator / t3.powi(n as i32)
}

/// Evaluate an exact-coefficient polynomial at a floating-point argument
/// (Horner).  Used for the bridge identity Xi^-1(y) = P(z(y)).
pub fn zpoly_value(p: &ZPoly, z: f64) -> f64 {
    p.coeffs()
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * z + rat_to_f64(c))
}

/// Secrecy-function samples Xi(y) = 1 / Xi^-1(y), one row per grid point,
/// in grid order.
pub fn sample_secrecy_function(
    weights: &ThetaWeights,
    y_grid: &[f64],
    tol: f64,
) -> Result<Vec<(f64, f64)>> {
    if y_grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    y_grid
        .iter()
        .map(|&y| {
            let p = EvalPoint::with_tol(y, tol)?;
            Ok((y, 1.0 / xi_inverse_value(weights, &p)))
        })
        .collect()
}

/// Default plotting grid: 101 log-spaced points in [1/4, 4], symmetric
/// about y = 1 (index 50 is exactly 1).
pub fn default_y_grid() -> Vec<f64> {
    (0..=100)
        .map(|i| 4.0f64.powf((i as f64 - 50.0) / 50.0))
        .collect()
}
