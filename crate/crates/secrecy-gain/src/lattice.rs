//! Exact lattice-side oracle: Gram matrices, unimodularity checks, and
//! short-vector enumeration.
//!
//! Everything here is independent of the modular-form pipeline, which is
//! the point: counting vectors of each squared norm below a bound gives
//! the leading theta coefficients of a concrete lattice by brute force,
//! so the two sides can be compared coefficient by coefficient.
//!
//! All arithmetic is exact — a fraction-free (Bareiss) determinant over
//! big integers, a rational LDL^T decomposition for positive-definiteness,
//! and Fincke–Pohst style enumeration whose coordinate bounds are derived
//! with exact rational comparisons (floating point only seeds the integer
//! square-root search, never decides it).

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::int;
use crate::Rat;

/// Bundled Gram matrix of the E8 root lattice (even, unimodular).
const E8_GRAM_JSON: &str = include_str!("../data/e8_gram.json");

/// An integer Gram matrix: `entries[i][j]` is the inner product of basis
/// vectors i and j.  Construction enforces squareness only; symmetry and
/// positive-definiteness are checked by the operations that need them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    entries: Vec<Vec<i64>>,
}

impl GramMatrix {
    /// Wrap a square, non-empty integer matrix.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::ParseMatrix(format!(
                    "row {} has {} entries, expected {}",
                    i,
                    row.len(),
                    n
                )));
            }
        }
        Ok(GramMatrix { entries })
    }

    /// The identity Gram matrix of Z^n.
    pub fn identity(n: usize) -> Self {
        assert!(n > 0, "identity Gram matrix needs a positive dimension");
        let entries = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        GramMatrix { entries }
    }

    /// The bundled Gram matrix of the E8 root lattice.
    pub fn e8() -> Self {
        let entries: Vec<Vec<i64>> =
            serde_json::from_str(E8_GRAM_JSON).expect("bundled E8 Gram matrix parses");
        GramMatrix::new(entries).expect("bundled E8 Gram matrix is square")
    }

    pub fn dimension(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dimension();
        (0..n).all(|i| (i + 1..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// True when every diagonal entry is even; together with integrality
    /// of the form, this makes every vector norm even.
    pub fn is_even(&self) -> bool {
        (0..self.dimension()).all(|i| self.entries[i][i] % 2 == 0)
    }

    /// Exact determinant by Bareiss fraction-free elimination over big
    /// integers: every intermediate division is exact, and nothing
    /// overflows regardless of entry size.
    pub fn determinant(&self) -> BigInt {
        let n = self.dimension();
        let mut m: Vec<Vec<BigInt>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|&e| BigInt::from(e)).collect())
            .collect();
        let mut sign = 1i8;
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let numerator = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = numerator / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        if sign < 0 {
            -m[n - 1][n - 1].clone()
        } else {
            m[n - 1][n - 1].clone()
        }
    }

    /// Exact LDL^T decomposition (L unit lower-triangular, D diagonal):
    /// returns (L, D) with all entries rational.  Fails unless the matrix
    /// is symmetric positive definite — this is the definiteness check.
    fn ldlt(&self) -> Result<(Vec<Vec<Rat>>, Vec<Rat>)> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let n = self.dimension();
        let mut l = vec![vec![Rat::zero(); n]; n];
        let mut d = vec![Rat::zero(); n];
        for j in 0..n {
            let mut dj: Rat = int(self.entries[j][j]);
            for k in 0..j {
                dj = dj - l[j][k].clone() * l[j][k].clone() * d[k].clone();
            }
            if !dj.is_positive() {
                return Err(Error::NotPositiveDefinite);
            }
            l[j][j] = Rat::one();
            for i in j + 1..n {
                let mut off: Rat = int(self.entries[i][j]);
                for k in 0..j {
                    off = off - l[i][k].clone() * l[j][k].clone() * d[k].clone();
                }
                l[i][j] = off / dj.clone();
            }
            d[j] = dj;
        }
        Ok((l, d))
    }
}

/// Flags reported by [`check_unimodular`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnimodularFlags {
    /// The form is integral.  Always true here — the entry type enforces
    /// it — but reported so the flag set names every condition checked.
    pub integral: bool,
    /// The exact determinant.
    pub determinant: BigInt,
    /// |det| = 1.
    pub determinant_one: bool,
    /// All diagonal entries even (with integrality, all norms are even).
    pub even: bool,
}

impl UnimodularFlags {
    pub fn is_unimodular(&self) -> bool {
        self.integral && self.determinant_one
    }
}

/// Check the unimodularity conditions of a symmetric integer Gram matrix.
pub fn check_unimodular(g: &GramMatrix) -> Result<UnimodularFlags> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let determinant = g.determinant();
    let determinant_one = determinant.abs().is_one();
    Ok(UnimodularFlags {
        integral: true,
        determinant,
        determinant_one,
        even: g.is_even(),
    })
}

/// Safety caps for enumeration; override to go past them deliberately.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_dimension: usize,
    pub max_norm: u64,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_dimension: 24,
            max_norm: 12,
        }
    }
}

impl EnumerationLimits {
    /// Limits that refuse nothing.
    pub fn unbounded() -> Self {
        EnumerationLimits {
            max_dimension: usize::MAX,
            max_norm: u64::MAX,
        }
    }
}

/// Exact counts of lattice vectors by squared norm, up to a bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormCensus {
    max_norm: u64,
    counts: BTreeMap<u64, u64>,
}

impl NormCensus {
    pub fn max_norm(&self) -> u64 {
        self.max_norm
    }

    /// Norm-to-count map; norms with no vectors are absent.
    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    /// Vectors of squared norm exactly `norm` (0 when none).
    pub fn count(&self, norm: u64) -> u64 {
        self.counts.get(&norm).copied().unwrap_or(0)
    }

    /// Smallest positive norm present and its count.
    pub fn kissing(&self) -> Option<(u64, u64)> {
        self.counts
            .iter()
            .find(|(&norm, _)| norm > 0)
            .map(|(&norm, &count)| (norm, count))
    }
}

/// Largest integer k with k <= c + sqrt(s), for s >= 0.  A floating-point
/// estimate seeds the search; exact rational comparisons settle it.
fn floor_add_sqrt(c: &Rat, s: &Rat) -> i64 {
    debug_assert!(!s.is_negative());
    // k <= c + sqrt(s)  <=>  k - c <= sqrt(s)  <=>  t <= 0 or t^2 <= s.
    let le_sqrt = |k: i64| -> bool {
        let t = int::<Rat>(k) - c;
        !t.is_positive() || &t * &t <= *s
    };
    let estimate = c.to_f64().unwrap_or(0.0) + s.to_f64().unwrap_or(0.0).max(0.0).sqrt();
    let mut k = estimate.floor() as i64;
    while !le_sqrt(k) {
        k -= 1;
    }
    while le_sqrt(k + 1) {
        k += 1;
    }
    k
}

/// Count all lattice vectors with squared norm at most `max_norm`, under
/// the default safety caps.
pub fn enumerate_norms(g: &GramMatrix, max_norm: u64) -> Result<NormCensus> {
    enumerate_norms_with_limits(g, max_norm, &EnumerationLimits::default())
}

/// Count all lattice vectors with squared norm at most `max_norm`.
///
/// Fincke–Pohst: with G = L D L^T and y = L^T x, the norm splits as
/// sum_i d_i y_i^2, so coordinates are chosen from the last to the first
/// inside exactly computed integer intervals.  The census includes the
/// zero vector and both members of every +-v pair.
pub fn enumerate_norms_with_limits(
    g: &GramMatrix,
    max_norm: u64,
    limits: &EnumerationLimits,
) -> Result<NormCensus> {
    let n = g.dimension();
    if n > limits.max_dimension {
        return Err(Error::LimitExceeded {
            what: "dimension",
            value: n as u64,
            cap: limits.max_dimension as u64,
        });
    }
    if max_norm > limits.max_norm {
        return Err(Error::LimitExceeded {
            what: "max norm",
            value: max_norm,
            cap: limits.max_norm,
        });
    }
    let (l, d) = g.ldlt()?;
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    let mut x = vec![0i64; n];
    let bound: Rat = int(i64::try_from(max_norm).expect("norm bound fits in i64"));
    descend(&l, &d, n, &bound, &bound, &mut x, &mut counts);
    Ok(NormCensus { max_norm, counts })
}

/// Choose coordinates x[level-1], ..., x[0] given x[level..]; `budget` is
/// what remains of `total` (the root bound) after the outer coordinates'
/// quadratic contributions.  When the innermost coordinate is fixed, the
/// finished vector's exact norm is `total - budget_left`.
fn descend(
    l: &[Vec<Rat>],
    d: &[Rat],
    level: usize,
    budget: &Rat,
    total: &Rat,
    x: &mut Vec<i64>,
    counts: &mut BTreeMap<u64, u64>,
) {
    debug_assert!(level >= 1);
    let i = level - 1;
    // Offset c = sum_{j>i} L[j][i] x[j] from the already-fixed coordinates.
    let mut c = Rat::zero();
    for j in level..x.len() {
        if !l[j][i].is_zero() {
            c = c + l[j][i].clone() * int::<Rat>(x[j]);
        }
    }
    // d_i (x_i + c)^2 <= budget  <=>  |x_i + c| <= sqrt(budget / d_i).
    let s = budget / &d[i];
    let upper = floor_add_sqrt(&(-c.clone()), &s);
    let lower = -floor_add_sqrt(&c, &s);
    for xi in lower..=upper {
        let y = int::<Rat>(xi) + c.clone();
        let spent = d[i].clone() * &y * &y;
        let remaining = budget - &spent;
        debug_assert!(!remaining.is_negative());
        x[i] = xi;
        if i == 0 {
            tally_leaf(counts, &(total - &remaining));
        } else {
            descend(l, d, level - 1, &remaining, total, x, counts);
        }
    }
    x[i] = 0;
}

/// Record one completed vector of exact squared norm `norm` (which is a
/// non-negative integer for any integral form and integer coordinates).
fn tally_leaf(counts: &mut BTreeMap<u64, u64>, norm: &Rat) {
    debug_assert!(norm.is_integer());
    let norm = norm.to_integer().to_u64().expect("norm fits in u64");
    *counts.entry(norm).or_insert(0) += 1;
}

/// Kissing number: the smallest positive squared norm and its vector
/// count, found by enumerating up to the smallest diagonal entry (the
/// norm of a basis vector, so the minimum cannot exceed it).
pub fn kissing_number(g: &GramMatrix) -> Result<(u64, u64)> {
    kissing_number_with_limits(g, &EnumerationLimits::default())
}

/// [`kissing_number`] with explicit safety caps.
pub fn kissing_number_with_limits(
    g: &GramMatrix,
    limits: &EnumerationLimits,
) -> Result<(u64, u64)> {
    let min_diag = (0..g.dimension())
        .map(|i| g.entry(i, i))
        .min()
        .expect("non-empty matrix");
    if min_diag <= 0 {
        return Err(Error::NotPositiveDefinite);
    }
    let census = enumerate_norms_with_limits(g, min_diag as u64, limits)?;
    Ok(census
        .kissing()
        .expect("a basis vector realizes the diagonal bound"))
}
