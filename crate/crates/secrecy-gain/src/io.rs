//! Parsing and rendering: exact rationals, JSON transfer shapes, decimal
//! formatting.
//!
//! Exact values always travel as reduced fraction strings ("p/q" or "p"),
//! never as floats; decimal renderings are separate fields and clearly
//! approximate.  All output is locale-independent ASCII and deterministic.

use std::collections::BTreeMap;
use std::str::FromStr;

use num::bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{GramMatrix, NormCensus, UnimodularFlags};
use crate::secrecy::{MinimumCertificate, TheoremReport};
use crate::thetasolve::ThetaWeights;
use crate::{QSeries, Rat, ZPoly};

/// Parse a rational from "p/q" or "p" (reduced or not; sign anywhere the
/// integer parser accepts it).  Rejects zero denominators cleanly.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let trimmed = s.trim();
    let reject = || Error::ParseRational(s.to_string());
    if trimmed.is_empty() {
        return Err(reject());
    }
    match trimmed.split_once('/') {
        None => {
            let n = BigInt::from_str(trimmed).map_err(|_| reject())?;
            Ok(Rat::from_integer(n))
        }
        Some((num, den)) => {
            let n = BigInt::from_str(num.trim()).map_err(|_| reject())?;
            let d = BigInt::from_str(den.trim()).map_err(|_| reject())?;
            if d.is_zero() {
                return Err(reject());
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Parse a comma-separated list of rationals; empty input is an empty list.
pub fn parse_rat_list(s: &str) -> Result<Vec<Rat>> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed.split(',').map(parse_rat).collect()
}

/// Reduced fraction string: "p/q", or "p" when the denominator is 1.
pub fn format_rat(x: &Rat) -> String {
    x.to_string()
}

/// Nearest double; approximate by definition.
pub fn rat_to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Fixed decimal rendering with 12 significant digits, ASCII and
/// locale-independent; used wherever a decimal accompanies an exact value.
pub fn decimal_12(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0.000000000000".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{:.*}", decimals, x)
}

/// Parse a Gram matrix from a JSON 2D integer array.
pub fn parse_gram_json(text: &str) -> Result<GramMatrix> {
    let rows: Vec<Vec<i64>> =
        serde_json::from_str(text).map_err(|e| Error::ParseMatrix(e.to_string()))?;
    GramMatrix::new(rows)
}

/// A truncated q-expansion: terms are `[exponent_in_quarter_units,
/// coefficient]` pairs in ascending exponent order (the integer e stands
/// for q^(e/4)), valid through q^order with the O(q^(order+1)) tail
/// dropped.
#[derive(Debug, Clone, Serialize)]
pub struct SeriesJson {
    pub order: i64,
    pub terms: Vec<(i64, String)>,
}

impl SeriesJson {
    pub fn from_series(s: &QSeries) -> Self {
        let terms = s.terms().map(|(e, c)| (e, format_rat(c))).collect();
        SeriesJson {
            order: s.order(),
            terms,
        }
    }
}

/// Solve result: the prescribed prefix, the full weight vector, and the
/// reconstructed theta series.
#[derive(Debug, Clone, Serialize)]
pub struct SolveJson {
    pub dimension: u32,
    pub parity: String,
    pub prescribed: Vec<String>,
    pub weights: Vec<String>,
    pub theta: SeriesJson,
}

/// Weight vector transfer shape.
#[derive(Debug, Clone, Serialize)]
pub struct WeightsJson {
    pub dimension: u32,
    pub parity: String,
    pub weights: Vec<String>,
}

impl WeightsJson {
    pub fn from_weights(w: &ThetaWeights) -> Self {
        WeightsJson {
            dimension: w.dimension(),
            parity: w.parity().to_string(),
            weights: w.weights().iter().map(format_rat).collect(),
        }
    }
}

/// Certificate summary embedded in gain output.
#[derive(Debug, Clone, Serialize)]
pub struct CertificateJson {
    pub verdict: String,
    pub interior_critical_points: usize,
}

/// Refutation evidence: a point strictly inside (0, 1/4) where P dips
/// below its endpoint value, plus the isolating bracket of the nearby
/// critical point when one exists.
#[derive(Debug, Clone, Serialize)]
pub struct RefutationJson {
    pub point: String,
    pub value: String,
    pub critical_bracket: Option<(String, String)>,
}

/// Full certification result.
#[derive(Debug, Clone, Serialize)]
pub struct CertifyJson {
    pub verdict: String,
    pub interior_critical_points: usize,
    pub endpoint_value: String,
    pub witness: String,
    pub refutation: Option<RefutationJson>,
}

impl CertifyJson {
    pub fn from_certificate(c: &MinimumCertificate) -> Self {
        CertifyJson {
            verdict: c.verdict.as_str().to_string(),
            interior_critical_points: c.interior_critical_points,
            endpoint_value: format_rat(&c.endpoint_value),
            witness: c.witness.clone(),
            refutation: c.refutation.as_ref().map(|r| RefutationJson {
                point: format_rat(&r.point),
                value: format_rat(&r.value),
                critical_bracket: r
                    .critical_bracket
                    .as_ref()
                    .map(|(lo, hi)| (format_rat(lo), format_rat(hi))),
            }),
        }
    }
}

/// Gain output: polynomial coefficients (ascending), exact gain, decimal
/// and dB renderings (approximate), and the certificate.
#[derive(Debug, Clone, Serialize)]
pub struct GainJson {
    pub polynomial: Vec<String>,
    pub gain: String,
    pub gain_decimal: String,
    pub gain_db: String,
    pub certificate: CertificateJson,
}

impl GainJson {
    pub fn new(p: &ZPoly, gain: &Rat, certificate: &MinimumCertificate) -> Self {
        let g = rat_to_f64(gain);
        GainJson {
            polynomial: p.coeffs().iter().map(format_rat).collect(),
            gain: format_rat(gain),
            gain_decimal: decimal_12(g),
            gain_db: decimal_12(10.0 * g.log10()),
            certificate: CertificateJson {
                verdict: certificate.verdict.as_str().to_string(),
                interior_critical_points: certificate.interior_critical_points,
            },
        }
    }
}

/// One candidate closed form in a theorem report.
#[derive(Debug, Clone, Serialize)]
pub struct CandidateFormJson {
    pub label: String,
    pub value: String,
    pub matches: bool,
}

/// Theorem difference report: the computed value is the arbiter; both
/// published candidate forms are quoted with match flags.
#[derive(Debug, Clone, Serialize)]
pub struct DiffJson {
    pub theorem: u8,
    pub dimension: u32,
    pub computed: String,
    pub statement: CandidateFormJson,
    pub proof: CandidateFormJson,
}

impl DiffJson {
    pub fn from_report(r: &TheoremReport) -> Self {
        DiffJson {
            theorem: r.theorem,
            dimension: r.dimension,
            computed: format_rat(&r.computed),
            statement: CandidateFormJson {
                label: r.statement.label.clone(),
                value: format_rat(&r.statement.value),
                matches: r.statement.matches,
            },
            proof: CandidateFormJson {
                label: r.proof.label.clone(),
                value: format_rat(&r.proof.value),
                matches: r.proof.matches,
            },
        }
    }
}

/// One row of a kissing-number scan.
#[derive(Debug, Clone, Serialize)]
pub struct ScanRowJson {
    pub kissing: i64,
    pub last_weight: String,
    pub gain: String,
    pub gain_decimal: String,
    pub verdict: String,
}

/// Enumeration output: unimodularity flags plus the norm census.
#[derive(Debug, Clone, Serialize)]
pub struct CensusJson {
    pub dimension: usize,
    pub integral: bool,
    pub determinant: String,
    pub even: bool,
    pub unimodular: bool,
    pub max_norm: u64,
    pub counts: BTreeMap<u64, u64>,
    pub kissing: Option<(u64, u64)>,
}

impl CensusJson {
    pub fn new(g: &GramMatrix, flags: &UnimodularFlags, census: &NormCensus) -> Self {
        CensusJson {
            dimension: g.dimension(),
            integral: flags.integral,
            determinant: flags.determinant.to_string(),
            even: flags.even,
            unimodular: flags.is_unimodular(),
            max_norm: census.max_norm(),
            counts: census.counts().clone(),
            kissing: census.kissing(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rat("5").unwrap(), int(5));
        assert_eq!(parse_rat("-720").unwrap(), int(-720));
        assert_eq!(parse_rat(" 85/16 ").unwrap(), ratio(85, 16));
        assert_eq!(parse_rat("-45/16").unwrap(), ratio(-45, 16));
        assert_eq!(parse_rat("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rat("3/-4").unwrap(), ratio(-3, 4));
    }

    #[test]
    fn rejects_malformed_rationals() {
        for bad in ["", "  ", "x", "1/0", "1/", "/2", "1.5", "1/2/3"] {
            assert!(
                matches!(parse_rat(bad), Err(Error::ParseRational(_))),
                "input {:?}",
                bad
            );
        }
    }

    #[test]
    fn parses_lists() {
        assert_eq!(parse_rat_list("").unwrap(), Vec::<Rat>::new());
        assert_eq!(
            parse_rat_list("1, -80, 1360").unwrap(),
            vec![int::<Rat>(1), int(-80), int(1360)]
        );
        assert!(parse_rat_list("1,,2").is_err());
    }

    #[test]
    fn formats_reduced_fractions() {
        assert_eq!(format_rat(&ratio(4096, 297)), "4096/297");
        assert_eq!(format_rat(&ratio(6, 4)), "3/2");
        assert_eq!(format_rat(&int(-720)), "-720");
        assert_eq!(format_rat(&int(0)), "0");
    }

    #[test]
    fn round_trips() {
        for s in ["0", "1", "-5", "4096/297", "-45/16"] {
            assert_eq!(format_rat(&parse_rat(s).unwrap()), s);
        }
    }

    #[test]
    fn converts_to_f64() {
        assert_eq!(rat_to_f64(&ratio(-3, 2)), -1.5);
        assert_eq!(rat_to_f64(&int(39600)), 39600.0);
    }

    #[test]
    fn renders_twelve_significant_digits() {
        assert_eq!(decimal_12(13.791245791245791), "13.7912457912");
        assert_eq!(decimal_12(1.0), "1.00000000000");
        assert_eq!(decimal_12(0.25), "0.250000000000");
        assert_eq!(decimal_12(0.07250976563), "0.0725097656300");
        assert_eq!(decimal_12(-1.5), "-1.50000000000");
        assert_eq!(decimal_12(0.0), "0.000000000000");
        assert_eq!(decimal_12(4096.0), "4096.00000000");
    }

    #[test]
    fn parses_gram_matrices() {
        let g = parse_gram_json("[[2,1],[1,2]]").unwrap();
        assert_eq!(g.dimension(), 2);
        assert_eq!(g.entry(0, 1), 1);
        assert!(matches!(
            parse_gram_json("not json"),
            Err(Error::ParseMatrix(_))
        ));
        assert!(matches!(
            parse_gram_json("[[1,2],[3]]"),
            Err(Error::ParseMatrix(_))
        ));
        assert!(matches!(parse_gram_json("[]"), Err(Error::EmptyMatrix)));
    }

    #[test]
    fn series_json_uses_quarter_unit_pairs() {
        let theta2: QSeries = crate::qexp::theta_series(crate::qexp::ThetaIndex::Two, 3).unwrap();
        let json = SeriesJson::from_series(&theta2);
        assert_eq!(json.order, 3);
        assert_eq!(json.terms[0], (1, "2".to_string()));
        assert_eq!(json.terms[1], (9, "2".to_string()));
        // Pairs serialize as two-element arrays.
        let text = serde_json::to_string(&json).unwrap();
        assert!(text.contains("[1,\"2\"]"), "{}", text);
    }

    #[test]
    fn census_json_serializes_with_string_keys() {
        let g = GramMatrix::identity(1);
        let flags = crate::lattice::check_unimodular(&g).unwrap();
        let census = crate::lattice::enumerate_norms(&g, 4).unwrap();
        let json = CensusJson::new(&g, &flags, &census);
        let text = serde_json::to_string(&json).unwrap();
        assert!(
            text.contains("\"counts\":{\"0\":1,\"1\":2,\"4\":2}"),
            "{}",
            text
        );
        assert!(text.contains("\"kissing\":[1,2]"));
    }
}
