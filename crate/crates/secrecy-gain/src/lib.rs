//! Exact theta-series arithmetic and secrecy gains of unimodular lattices.
//!
//! A unimodular lattice's theta series is determined, up to a few leading
//! coefficients, by a small space of modular forms.  This crate implements
//! that pipeline with exact rational arithmetic end to end:
//!
//! * [`qexp`] — truncated q-expansions on the quarter-exponent grid, the
//!   theta constants as literal q-products, and the named forms E4, Delta,
//!   Delta_8 built from them.
//! * [`thetasolve`] — the unitriangular coefficient systems that turn
//!   prescribed leading theta coefficients into basis weights, for both
//!   even-dimension bases (powers of E4 and Delta) and the general basis
//!   (powers of theta_3 and Delta_8).
//! * [`secrecy`] — the substitution z = theta_2^4 theta_4^4 / theta_3^8
//!   that turns the inverse secrecy function into a polynomial P(z) on
//!   (0, 1/4]; exact gains 1/P(1/4); Sturm-sequence certificates that the
//!   minimum of P sits at the right endpoint; and computed per-unit
//!   inverse-gain differences that arbitrate the two published closed
//!   forms for each monotonicity theorem.
//! * [`lattice`] — an independent oracle: exact short-vector enumeration
//!   of explicit Gram matrices, giving theta coefficients by brute count.
//! * [`numeval`] — floating-point evaluation of theta functions and
//!   secrecy functions on the imaginary axis, for cross-checks and
//!   plot-ready samples.
//!
//! The exact side never depends on floating point: rationals are
//! arbitrary-precision ([`Rat`]), root counting is by Sturm sequences
//! ([`sturm`]), and enumeration bounds are settled by exact comparisons.
//!
//! # Example
//!
//! The even unimodular lattice of dimension 40 with no vectors of squared
//! norm 2 (the extremal case):
//!
//! ```
//! use secrecy_gain::scalar::int;
//! use secrecy_gain::{
//!     certify_minimum, even_zpoly, gain_at_unity, solve_even, LatticePrefix, Parity, Verdict,
//! };
//!
//! let prefix = LatticePrefix::new(40, Parity::Even, vec![int(0)])?;
//! let weights = solve_even(&prefix)?;
//! assert_eq!(weights.weights()[1], int(-1200));
//!
//! let p = even_zpoly(40, &weights)?;
//! assert_eq!(gain_at_unity(&p)?.to_string(), "4096/297");
//! assert_eq!(certify_minimum(&p)?.verdict, Verdict::Certified);
//! # Ok::<(), secrecy_gain::Error>(())
//! ```

pub mod error;
pub mod io;
pub mod lattice;
pub mod numeval;
pub mod poly;
pub mod qexp;
pub mod scalar;
pub mod secrecy;
pub mod sturm;
pub mod thetasolve;

/// Exact arbitrary-precision rational scalar used throughout.
pub type Rat = num::BigRational;

/// Truncated q-expansion with exact rational coefficients.
pub type QSeries = qexp::Series<Rat>;

/// Polynomial in z = theta_2^4 theta_4^4 / theta_3^8 with exact rational
/// coefficients.
pub type ZPoly = poly::Poly<Rat>;

pub use error::{Error, Result};
pub use lattice::{
    check_unimodular, enumerate_norms, enumerate_norms_with_limits, kissing_number,
    kissing_number_with_limits, EnumerationLimits, GramMatrix, NormCensus, UnimodularFlags,
};
pub use numeval::{
    default_y_grid, sample_secrecy_function, theta_value, xi_inverse_value, z_of_y, zpoly_value,
    EvalPoint,
};
pub use poly::Poly;
pub use qexp::{named_form_series, theta_series, NamedForm, Series, ThetaIndex};
pub use secrecy::{
    certify_minimum, even_zpoly, gain_at_unity, general_zpoly, lin_oggier_gain, theorem1_report,
    theorem1_unit_difference, theorem2_report, theorem2_unit_difference, zpoly, CandidateForm,
    MinimumCertificate, Refutation, TheoremReport, Verdict,
};
pub use sturm::{count_roots_open, isolate_roots_open, RootLoc};
pub use thetasolve::{
    default_order, even_basis, even_mk, general_basis, general_mu_nu, reconstruct_theta,
    solve_even, solve_even_with_basis, solve_general, solve_general_with_basis, BasisExpansion,
    LatticePrefix, Parity, ThetaWeights,
};
