//! Exact q-expansions: the series ring and the theta constants.
//!
//! [`series`] provides the truncated-series arithmetic on the quarter
//! exponent grid; [`theta`] builds theta_2/theta_3/theta_4 and the named
//! forms E4, Delta, Delta_8 from their product formulas.

pub mod series;
pub mod theta;

pub use series::Series;
pub use theta::{named_form_series, theta_series, NamedForm, ThetaIndex};
