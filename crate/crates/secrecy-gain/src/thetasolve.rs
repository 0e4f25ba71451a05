//! Basis expansions and the triangular systems for theta weights.
//!
//! An even unimodular lattice in dimension `n = 24m + 8k` (k in {0,1,2})
//! has theta series
//!
//! ```text
//!     Theta = E4^(3m+k) + sum_{j=1..m} b_j E4^(3(m-j)+k) Delta^j,
//! ```
//!
//! and a general unimodular lattice in dimension n, with mu = floor(n/8),
//!
//! ```text
//!     Theta = sum_{r=0..mu} a_r theta_3^(n-8r) Delta_8^r.
//! ```
//!
//! Basis element j (resp. r) has leading term `q^(2j)` (resp. `q^r`) with
//! coefficient 1, so prescribing the first coefficients of Theta gives a
//! *unitriangular* linear system: the weights are determined one at a time
//! by forward substitution, exactly, with no division.
//!
//! A [`LatticePrefix`] holds the prescription — the coefficients of
//! q^2, q^4, ..., q^(2m) for even parity (odd powers vanish on even
//! lattices) or of q^1, ..., q^mu for general parity.  For a lattice, these
//! are vector counts: prescribing zeros up to the last slot and a kissing
//! count there encodes "shortest vector of squared norm 2m (resp. mu)".

use crate::error::{Error, Result};
use crate::qexp::{named_form_series, theta_series, NamedForm, Series, ThetaIndex};
use crate::scalar::int;
use crate::Rat;

/// The two families of unimodular lattices, handled by separate bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// Even unimodular: dimension divisible by 8, all norms even.
    Even,
    /// General (odd included): any dimension, basis theta_3^(n-8r) Delta_8^r.
    General,
}

impl Parity {
    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::General => "general",
        }
    }
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Decompose an even-parity dimension as `n = 24m + 8k`, k in {0, 1, 2}.
pub fn even_mk(dimension: u32) -> Result<(u32, u32)> {
    if dimension == 0 || dimension % 8 != 0 {
        return Err(Error::DimensionNotMultipleOf8(dimension));
    }
    let s = dimension / 8;
    Ok((s / 3, s % 3))
}

/// Decompose any dimension as `n = 8*mu + nu`, nu in 0..8.
pub fn general_mu_nu(dimension: u32) -> (u32, u32) {
    (dimension / 8, dimension % 8)
}

/// Number of prescribed coefficients a prefix of this parity carries.
fn prefix_len(dimension: u32, parity: Parity) -> Result<usize> {
    match parity {
        Parity::Even => Ok(even_mk(dimension)?.0 as usize),
        Parity::General => {
            if dimension == 0 {
                return Err(Error::DimensionOutOfRange {
                    dimension,
                    low: 1,
                    high: u32::MAX,
                });
            }
            Ok(general_mu_nu(dimension).0 as usize)
        }
    }
}

/// Default truncation order for a solve in dimension n: the largest
/// prescribed exponent plus `2*(n/8) + 8` further integer terms, so every
/// solve has room for verification beyond the prescription.
pub fn default_order(dimension: u32, parity: Parity) -> Result<i64> {
    let largest = match parity {
        Parity::Even => 2 * even_mk(dimension)?.0 as i64,
        Parity::General => prefix_len(dimension, parity)? as i64,
    };
    Ok(largest + 2 * (dimension as i64 / 8) + 8)
}

/// Prescribed leading theta coefficients for one lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePrefix {
    dimension: u32,
    parity: Parity,
    prescribed: Vec<Rat>,
}

impl LatticePrefix {
    /// Validate and build.  Even parity needs `dimension = 0 (mod 8)` and
    /// exactly m prescribed values (the coefficients of q^2, ..., q^(2m));
    /// general parity needs exactly `floor(dimension/8)` values (the
    /// coefficients of q^1, ..., q^mu).  Short prefixes are rejected, not
    /// padded: a missing entry would silently weaken the shortest-vector
    /// hypothesis the theorems rest on.
    pub fn new(dimension: u32, parity: Parity, prescribed: Vec<Rat>) -> Result<Self> {
        let expected = prefix_len(dimension, parity)?;
        if prescribed.len() != expected {
            return Err(Error::PrefixLength {
                expected,
                got: prescribed.len(),
            });
        }
        Ok(LatticePrefix {
            dimension,
            parity,
            prescribed,
        })
    }

    /// The prefix that is zero everywhere except the last slot — the
    /// "shortest vector at the top, with this kissing count" prescription
    /// used by the theorem-difference computations and scans.
    pub fn with_last(dimension: u32, parity: Parity, last: Rat) -> Result<Self> {
        let expected = prefix_len(dimension, parity)?;
        if expected == 0 {
            return Err(Error::TheoremDimension {
                dimension,
                reason: "no free coefficient in this dimension and parity",
            });
        }
        let mut prescribed = vec![Rat::from_integer(0.into()); expected];
        prescribed[expected - 1] = last;
        LatticePrefix::new(dimension, parity, prescribed)
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn prescribed(&self) -> &[Rat] {
        &self.prescribed
    }
}

/// The basis series a parity-n pair expands lattice theta functions in.
#[derive(Debug, Clone)]
pub struct BasisExpansion {
    dimension: u32,
    parity: Parity,
    order: i64,
    entries: Vec<Series<Rat>>,
}

impl BasisExpansion {
    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Basis series in leading-exponent order (element j leads with q^(2j)
    /// for even parity, element r with q^r for general parity).
    pub fn entries(&self) -> &[Series<Rat>] {
        &self.entries
    }

    /// Exponent (in whole powers of q) of the leading term of entry i.
    fn leading_exponent(&self, i: usize) -> i64 {
        match self.parity {
            Parity::Even => 2 * i as i64,
            Parity::General => i as i64,
        }
    }
}

/// The m+1 series E4^(3(m-j)+k) Delta^j for j = 0..m, exact through `order`.
pub fn even_basis(dimension: u32, order: i64) -> Result<BasisExpansion> {
    let (m, k) = even_mk(dimension)?;
    let e4 = named_form_series::<Rat>(NamedForm::E4, order)?;
    let mut entries = Vec::with_capacity(m as usize + 1);
    if m == 0 {
        entries.push(e4.pow(k));
    } else {
        let delta = named_form_series::<Rat>(NamedForm::Delta, order)?;
        let mut delta_pow = Series::one(order);
        for j in 0..=m {
            entries.push(&e4.pow(3 * (m - j) + k) * &delta_pow);
            if j < m {
                delta_pow = &delta_pow * &delta;
            }
        }
    }
    Ok(BasisExpansion {
        dimension,
        parity: Parity::Even,
        order,
        entries,
    })
}

/// The mu+1 series theta_3^(n-8r) Delta_8^r for r = 0..mu, exact through
/// `order`.
pub fn general_basis(dimension: u32, order: i64) -> Result<BasisExpansion> {
    if dimension == 0 {
        return Err(Error::DimensionOutOfRange {
            dimension,
            low: 1,
            high: u32::MAX,
        });
    }
    let (mu, _) = general_mu_nu(dimension);
    let t3 = theta_series::<Rat>(ThetaIndex::Three, order)?;
    let d8 = named_form_series::<Rat>(NamedForm::Delta8, order)?;
    let mut entries = Vec::with_capacity(mu as usize + 1);
    let mut d8_pow = Series::one(order);
    for r in 0..=mu {
        entries.push(&t3.pow(dimension - 8 * r) * &d8_pow);
        if r < mu {
            d8_pow = &d8_pow * &d8;
        }
    }
    Ok(BasisExpansion {
        dimension,
        parity: Parity::General,
        order,
        entries,
    })
}

/// Solved weights: b_0..b_m (even) or a_0..a_mu (general), leading 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaWeights {
    dimension: u32,
    parity: Parity,
    weights: Vec<Rat>,
}

impl ThetaWeights {
    /// Validate and build: the length must fit the dimension and parity
    /// (one more than the prefix length) and the leading weight must be 1.
    pub fn new(dimension: u32, parity: Parity, weights: Vec<Rat>) -> Result<Self> {
        let expected = prefix_len(dimension, parity)? + 1;
        if weights.len() != expected {
            return Err(Error::WeightsLength {
                expected,
                got: weights.len(),
            });
        }
        if weights[0] != int(1) {
            return Err(Error::LeadingWeightNotOne(weights[0].to_string()));
        }
        Ok(ThetaWeights {
            dimension,
            parity,
            weights,
        })
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }
}

/// Forward substitution through the unitriangular system: weight i is the
/// prescribed coefficient at entry i's leading exponent minus what the
/// earlier weights already contribute there.
fn solve_with_basis(prefix: &LatticePrefix, basis: &BasisExpansion) -> Result<ThetaWeights> {
    debug_assert_eq!(prefix.parity, basis.parity);
    debug_assert_eq!(prefix.dimension, basis.dimension);
    let count = prefix.prescribed.len();
    let needed = basis.leading_exponent(count);
    if basis.order < needed {
        return Err(Error::OrderTooSmall {
            needed,
            got: basis.order,
        });
    }
    let mut weights: Vec<Rat> = Vec::with_capacity(count + 1);
    weights.push(int(1));
    for i in 1..=count {
        let exponent = basis.leading_exponent(i);
        debug_assert!(
            basis.entries[i].coeff_q(exponent) == int(1),
            "basis must be unitriangular"
        );
        let mut value = prefix.prescribed[i - 1].clone();
        for (j, w) in weights.iter().enumerate() {
            value = value - w.clone() * basis.entries[j].coeff_q(exponent);
        }
        weights.push(value);
    }
    ThetaWeights::new(prefix.dimension, prefix.parity, weights)
}

/// Solve the even system for b_1..b_m from the prescribed coefficients of
/// q^2, ..., q^(2m), at the default order.
pub fn solve_even(prefix: &LatticePrefix) -> Result<ThetaWeights> {
    if prefix.parity != Parity::Even {
        return Err(Error::ParityMismatch);
    }
    let order = default_order(prefix.dimension, Parity::Even)?;
    solve_with_basis(prefix, &even_basis(prefix.dimension, order)?)
}

/// Solve the general system for a_1..a_mu from the prescribed coefficients
/// of q^1, ..., q^mu, at the default order.
pub fn solve_general(prefix: &LatticePrefix) -> Result<ThetaWeights> {
    if prefix.parity != Parity::General {
        return Err(Error::ParityMismatch);
    }
    let order = default_order(prefix.dimension, Parity::General)?;
    solve_with_basis(prefix, &general_basis(prefix.dimension, order)?)
}

/// Solve against an explicitly built basis (callers that reuse one basis
/// across many prefixes, or that need a non-default order).
pub fn solve_even_with_basis(
    prefix: &LatticePrefix,
    basis: &BasisExpansion,
) -> Result<ThetaWeights> {
    if prefix.parity != Parity::Even || basis.parity() != Parity::Even {
        return Err(Error::ParityMismatch);
    }
    if prefix.dimension != basis.dimension {
        return Err(Error::PrefixLength {
            expected: prefix_len(basis.dimension, basis.parity)?,
            got: prefix.prescribed.len(),
        });
    }
    solve_with_basis(prefix, basis)
}

/// General-parity variant of [`solve_even_with_basis`].
pub fn solve_general_with_basis(
    prefix: &LatticePrefix,
    basis: &BasisExpansion,
) -> Result<ThetaWeights> {
    if prefix.parity != Parity::General || basis.parity() != Parity::General {
        return Err(Error::ParityMismatch);
    }
    if prefix.dimension != basis.dimension {
        return Err(Error::PrefixLength {
            expected: prefix_len(basis.dimension, basis.parity)?,
            got: prefix.prescribed.len(),
        });
    }
    solve_with_basis(prefix, basis)
}

/// The weighted sum of the basis series: the predicted theta expansion,
/// exact through the basis order.
pub fn reconstruct_theta(weights: &ThetaWeights, basis: &BasisExpansion) -> Result<Series<Rat>> {
    if weights.parity != basis.parity() || weights.dimension != basis.dimension() {
        return Err(Error::ParityMismatch);
    }
    if weights.weights.len() != basis.entries().len() {
        return Err(Error::WeightsLength {
            expected: basis.entries().len(),
            got: weights.weights.len(),
        });
    }
    let mut sum = Series::zero(basis.order());
    for (w, entry) in weights.weights.iter().zip(basis.entries()) {
        sum = &sum + &entry.scaled(w);
    }
    assert!(
        sum.integral_exponents_only(),
        "lattice theta series must live on the integer exponent grid"
    );
    if weights.parity == Parity::Even {
        // Even lattices have even norms only; an odd coefficient here would
        // mean the basis itself is broken.
        assert!(
            sum.terms().all(|(e, _)| e % 8 == 0),
            "even-lattice theta series must have even exponents only"
        );
    }
    Ok(sum)
}
