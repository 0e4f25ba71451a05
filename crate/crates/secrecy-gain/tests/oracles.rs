//! High-order cross-validation of the q-expansion pipeline against
//! independent number-theoretic oracles: classical theta identities, the
//! Euler-product discriminant (Ramanujan tau), the divisor-sum form of the
//! weight-4 Eisenstein series, and brute-force lattice enumeration.

use secrecy_gain::scalar::int;
use secrecy_gain::{
    enumerate_norms, named_form_series, theta_series, GramMatrix, NamedForm, QSeries, Rat,
    ThetaIndex,
};

/// Truncation order (in q-units) for the identity suite.
const ORDER: i64 = 50;

fn theta(index: ThetaIndex) -> QSeries {
    theta_series(index, ORDER).expect("order is valid")
}

fn form(f: NamedForm) -> QSeries {
    named_form_series(f, ORDER).expect("order is valid")
}

#[test]
fn jacobi_identity_to_order_50() {
    // theta_2^4 + theta_4^4 = theta_3^4.
    let lhs = &theta(ThetaIndex::Two).pow(4) + &theta(ThetaIndex::Four).pow(4);
    let rhs = theta(ThetaIndex::Three).pow(4);
    assert_eq!(lhs, rhs);
}

#[test]
fn eisenstein_identity_to_order_50() {
    // E4 = theta_3^8 - theta_2^4 theta_4^4.
    let lhs = form(NamedForm::E4);
    let t24 = theta(ThetaIndex::Two).pow(4);
    let t44 = theta(ThetaIndex::Four).pow(4);
    let rhs = &theta(ThetaIndex::Three).pow(8) - &(&t24 * &t44);
    assert_eq!(lhs, rhs);
}

#[test]
fn discriminant_factorization_to_order_50() {
    // Delta = Delta_8^2 theta_3^8.
    let lhs = form(NamedForm::Delta);
    let d8 = form(NamedForm::Delta8);
    let rhs = &d8.pow(2) * &theta(ThetaIndex::Three).pow(8);
    assert_eq!(lhs, rhs);
}

/// Ramanujan tau via the Euler product x * prod_{k>=1} (1 - x^k)^24,
/// computed independently with plain integer polynomial arithmetic.
fn tau_oracle(through: usize) -> Vec<i128> {
    // coeffs of prod (1 - x^k)^24 truncated past x^(through-1)
    let len = through;
    let mut coeffs = vec![0i128; len];
    coeffs[0] = 1;
    for k in 1..len {
        for _ in 0..24 {
            // multiply by (1 - x^k): c[i] -= c[i-k] from the top down
            for i in (k..len).rev() {
                coeffs[i] -= coeffs[i - k];
            }
        }
    }
    // tau(n) = coefficient of x^(n-1)
    coeffs
}

#[test]
fn discriminant_matches_tau_oracle() {
    // In this nome (q = e^(pi i tau)) the discriminant expands in q^2:
    // Delta = sum_n tau(n) q^(2n).
    let delta = form(NamedForm::Delta);
    let tau = tau_oracle(26);
    assert_eq!(tau[0], 1);
    assert_eq!(tau[1], -24);
    assert_eq!(tau[22], 18643272); // spot self-check of the oracle: tau(23)
    for n in 1..=25i64 {
        let expected: Rat = int(i64::try_from(tau[(n - 1) as usize]).unwrap());
        assert_eq!(delta.coeff_q(2 * n), expected, "tau({})", n);
    }
    // Odd powers of q never appear.
    for e in (1..=99).step_by(2) {
        assert_eq!(delta.coeff(e), int::<Rat>(0));
    }
}

/// sigma_3(n): sum of cubes of divisors.
fn sigma3(n: i64) -> i64 {
    (1..=n).filter(|d| n % d == 0).map(|d| d * d * d).sum()
}

#[test]
fn eisenstein_matches_divisor_sums() {
    // E4 = 1 + 240 sum_n sigma_3(n) q^(2n).
    let e4 = form(NamedForm::E4);
    assert_eq!(e4.coeff_q(0), int::<Rat>(1));
    for n in 1..=25i64 {
        assert_eq!(e4.coeff_q(2 * n), int::<Rat>(240 * sigma3(n)), "n = {}", n);
    }
}

#[test]
fn tau_multiplicativity_spot_checks() {
    let tau = tau_oracle(26);
    let t = |n: usize| tau[n - 1];
    assert_eq!(t(6), t(2) * t(3));
    assert_eq!(t(10), t(2) * t(5));
    assert_eq!(t(15), t(3) * t(5));
    // Hecke recursion at p = 2: tau(4) = tau(2)^2 - 2^11.
    assert_eq!(t(4), t(2) * t(2) - (1 << 11));
}

#[test]
fn named_forms_have_integer_coefficients() {
    for series in [
        theta(ThetaIndex::Two),
        theta(ThetaIndex::Three),
        theta(ThetaIndex::Four),
        form(NamedForm::E4),
        form(NamedForm::Delta),
        form(NamedForm::Delta8),
    ] {
        for (e, c) in series.terms() {
            assert!(c.is_integer(), "exponent {}/4 has coefficient {}", e, c);
        }
    }
}

#[test]
fn theta3_powers_match_small_enumerations() {
    // theta_3^n generates the norm census of Z^n; check n <= 4, norm <= 12
    // (higher n and norms are covered by the acceptance suite).
    for n in 1..=4u32 {
        let power = theta(ThetaIndex::Three).pow(n);
        let census = enumerate_norms(&GramMatrix::identity(n as usize), 12).unwrap();
        for k in 0..=12i64 {
            assert_eq!(
                power.coeff_q(k),
                int::<Rat>(census.count(k as u64) as i64),
                "n = {}, norm = {}",
                n,
                k
            );
        }
    }
}
