//! Command-line front end for the secrecy-gain library: series printing,
//! prefix solving, exact gains with certification, theorem-difference
//! reports, kissing-number scans, lattice enumeration, and secrecy-function
//! sampling.
//!
//! Exit codes: 0 on success, 2 on usage errors, 1 on domain errors (which
//! carry a one-line diagnostic on stderr).  All exact values print as
//! reduced fractions; decimals appear only alongside them, marked with
//! `~`.  Output is ASCII and deterministic.

use clap::{Args, Parser, Subcommand, ValueEnum};

use secrecy_gain::io::{
    decimal_12, format_rat, parse_gram_json, parse_rat_list, rat_to_f64, CensusJson, CertifyJson,
    DiffJson, GainJson, ScanRowJson, SeriesJson, SolveJson,
};
use secrecy_gain::scalar::int;
use secrecy_gain::{
    certify_minimum, check_unimodular, default_order, default_y_grid, enumerate_norms_with_limits,
    even_basis, even_mk, gain_at_unity, general_basis, general_mu_nu, kissing_number_with_limits,
    named_form_series, reconstruct_theta, sample_secrecy_function, solve_even_with_basis,
    solve_general_with_basis, theorem1_report, theorem2_report, theta_series, zpoly,
    BasisExpansion, EnumerationLimits, LatticePrefix, MinimumCertificate, NamedForm, Parity,
    QSeries, Rat, TheoremReport, ThetaIndex, ThetaWeights, ZPoly,
};

#[derive(Parser)]
#[command(
    name = "secrecy",
    version,
    about = "Exact secrecy gains of unimodular lattices from theta-series arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the q-expansion of a theta constant or named form
    Series(SeriesArgs),
    /// Solve prescribed leading theta coefficients for basis weights
    Solve(SolveArgs),
    /// Exact secrecy gain 1/P(1/4) with a minimum-at-endpoint certificate
    Gain(GainArgs),
    /// Certify whether P attains its minimum on (0, 1/4] at z = 1/4
    Certify(CertifyArgs),
    /// Per-unit inverse-gain difference, computed, vs both published forms
    Diff(DiffArgs),
    /// Table of gains as the kissing count varies
    Scan(ScanArgs),
    /// Enumerate short vectors of a Gram matrix (JSON file)
    Enumerate(EnumerateArgs),
    /// Sample the secrecy function on a y-grid as CSV
    Sample(SampleArgs),
}

/// Which parity of basis a lattice-facing command uses.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct ParityArg {
    /// Even-parity basis (dimension divisible by 8; prefix entries are the
    /// coefficients of q^2, q^4, ...)
    #[arg(long)]
    even: bool,
    /// General basis (any dimension; prefix entries are the coefficients
    /// of q^1, q^2, ...)
    #[arg(long)]
    general: bool,
}

impl ParityArg {
    fn parity(&self) -> Parity {
        if self.even {
            Parity::Even
        } else {
            Parity::General
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Theta2,
    Theta3,
    Theta4,
    E4,
    Delta,
    Delta8,
}

#[derive(Args)]
struct SeriesArgs {
    /// Form to expand
    #[arg(long, value_enum)]
    form: FormArg,
    /// Truncation order in q-units (default: SECRECY_DEFAULT_ORDER or 10)
    #[arg(long)]
    order: Option<i64>,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SolveArgs {
    /// Lattice dimension
    #[arg(long)]
    dim: u32,
    #[command(flatten)]
    parity: ParityArg,
    /// Comma-separated prescribed leading coefficients (may be empty)
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    prefix: String,
    /// Series truncation order override
    #[arg(long)]
    order: Option<i64>,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GainArgs {
    /// Lattice dimension
    #[arg(long)]
    dim: u32,
    #[command(flatten)]
    parity: ParityArg,
    /// Prescribed leading theta coefficients (solved here)
    #[arg(long, allow_hyphen_values = true, conflicts_with = "weights")]
    prefix: Option<String>,
    /// Basis weights directly (trailing zeros may be omitted)
    #[arg(long, allow_hyphen_values = true)]
    weights: Option<String>,
    /// Series truncation order override (prefix route only)
    #[arg(long)]
    order: Option<i64>,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CertifyArgs {
    /// Polynomial coefficients in z, ascending, comma-separated
    #[arg(
        long,
        allow_hyphen_values = true,
        conflicts_with_all = ["dim", "even", "general", "prefix", "weights", "order"]
    )]
    poly: Option<String>,
    /// Lattice dimension
    #[arg(long)]
    dim: Option<u32>,
    #[command(flatten)]
    parity: OptionalParityArg,
    /// Prescribed leading theta coefficients (solved here)
    #[arg(long, allow_hyphen_values = true, conflicts_with = "weights")]
    prefix: Option<String>,
    /// Basis weights directly (trailing zeros may be omitted)
    #[arg(long, allow_hyphen_values = true)]
    weights: Option<String>,
    /// Series truncation order override (prefix route only)
    #[arg(long)]
    order: Option<i64>,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

/// Parity flags for commands where the pair is only conditionally required.
#[derive(Args)]
#[group(multiple = false)]
struct OptionalParityArg {
    /// Even-parity basis (dimension divisible by 8)
    #[arg(long)]
    even: bool,
    /// General basis (any dimension)
    #[arg(long)]
    general: bool,
}

impl OptionalParityArg {
    fn parity(&self) -> Option<Parity> {
        match (self.even, self.general) {
            (true, false) => Some(Parity::Even),
            (false, true) => Some(Parity::General),
            _ => None,
        }
    }
}

#[derive(Args)]
struct DiffArgs {
    /// Which monotonicity theorem: 1 (even) or 2 (general)
    #[arg(long)]
    theorem: u8,
    /// Lattice dimension
    #[arg(long)]
    dim: u32,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ScanArgs {
    /// Lattice dimension
    #[arg(long)]
    dim: u32,
    #[command(flatten)]
    parity: ParityArg,
    /// Inclusive kissing-count range A:B for the last prescribed slot
    #[arg(long, value_name = "A:B")]
    kissing: String,
    /// Series truncation order override
    #[arg(long)]
    order: Option<i64>,
    /// Emit JSON instead of text
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV instead of text
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Path to a JSON file holding the Gram matrix as a 2D integer array
    #[arg(long, value_name = "FILE")]
    gram: String,
    /// Largest squared norm to count
    #[arg(long)]
    max_norm: u64,
    /// Lift the dimension/norm safety caps
    #[arg(long)]
    force: bool,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SampleArgs {
    /// Lattice dimension
    #[arg(long)]
    dim: u32,
    #[command(flatten)]
    parity: ParityArg,
    /// Prescribed leading theta coefficients (solved here)
    #[arg(long, allow_hyphen_values = true, conflicts_with = "weights")]
    prefix: Option<String>,
    /// Basis weights directly (trailing zeros may be omitted)
    #[arg(long, allow_hyphen_values = true)]
    weights: Option<String>,
    /// Log-spaced grid LO:HI:COUNT (default: 0.25:4:101)
    #[arg(long, value_name = "LO:HI:COUNT", conflicts_with = "y")]
    grid: Option<String>,
    /// Explicit comma-separated y values
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    /// Truncation tolerance for the theta sums
    #[arg(long, default_value_t = 1e-15)]
    tol: f64,
    /// Series truncation order override (prefix route only)
    #[arg(long)]
    order: Option<i64>,
}

enum CliError {
    Usage(String),
    Domain(String),
}

impl From<secrecy_gain::Error> for CliError {
    fn from(e: secrecy_gain::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {}", msg);
            std::process::exit(2);
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {}", msg);
            std::process::exit(1);
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Series(args) => cmd_series(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Gain(args) => cmd_gain(args),
        Command::Certify(args) => cmd_certify(args),
        Command::Diff(args) => cmd_diff(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Sample(args) => cmd_sample(args),
    }
}

/// Order resolution: explicit flag, then SECRECY_DEFAULT_ORDER, then the
/// provided fallback.
fn resolve_order(flag: Option<i64>, fallback: impl FnOnce() -> CliResult<i64>) -> CliResult<i64> {
    if let Some(order) = flag {
        return Ok(order);
    }
    match std::env::var("SECRECY_DEFAULT_ORDER") {
        Ok(text) => text.trim().parse::<i64>().map_err(|_| {
            CliError::Domain(format!(
                "SECRECY_DEFAULT_ORDER is not an integer: {:?}",
                text
            ))
        }),
        Err(_) => fallback(),
    }
}

fn parse_rats(flag: &str, what: &str) -> CliResult<Vec<Rat>> {
    parse_rat_list(flag)
        .map_err(|e| CliError::Usage(format!("--{} value is malformed: {}", what, e)))
}

/// Basis at the resolved order for this dimension and parity.
fn basis_for(dim: u32, parity: Parity, order: Option<i64>) -> CliResult<BasisExpansion> {
    let order = resolve_order(order, || Ok(default_order(dim, parity)?))?;
    Ok(match parity {
        Parity::Even => even_basis(dim, order)?,
        Parity::General => general_basis(dim, order)?,
    })
}

fn solve_with(prefix: &LatticePrefix, basis: &BasisExpansion) -> CliResult<ThetaWeights> {
    Ok(match prefix.parity() {
        Parity::Even => solve_even_with_basis(prefix, basis)?,
        Parity::General => solve_general_with_basis(prefix, basis)?,
    })
}

/// Full weight-vector length for this dimension and parity.
fn expected_weights_len(dim: u32, parity: Parity) -> CliResult<usize> {
    Ok(match parity {
        Parity::Even => even_mk(dim)?.0 as usize + 1,
        Parity::General => general_mu_nu(dim).0 as usize + 1,
    })
}

/// Obtain weights from either a --prefix (solved) or a --weights flag
/// (parsed; omitted trailing zeros are restored).
fn weights_from_flags(
    dim: u32,
    parity: Parity,
    prefix: &Option<String>,
    weights: &Option<String>,
    order: Option<i64>,
) -> CliResult<ThetaWeights> {
    match (prefix, weights) {
        (Some(p), None) => {
            let prescribed = parse_rats(p, "prefix")?;
            let prefix = LatticePrefix::new(dim, parity, prescribed)?;
            let basis = basis_for(dim, parity, order)?;
            solve_with(&prefix, &basis)
        }
        (None, Some(w)) => {
            let mut values = parse_rats(w, "weights")?;
            let expected = expected_weights_len(dim, parity)?;
            while values.len() < expected {
                values.push(int(0));
            }
            Ok(ThetaWeights::new(dim, parity, values)?)
        }
        (None, None) => Err(CliError::Usage(
            "one of --prefix or --weights is required".to_string(),
        )),
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    }
}

/// Weights with trailing zeros dropped (but never the leading 1), for the
/// compact text rendering.
fn trimmed_weights(weights: &ThetaWeights) -> &[Rat] {
    let all = weights.weights();
    let zero: Rat = int(0);
    let keep = all.iter().rposition(|w| *w != zero).map_or(1, |i| i + 1);
    &all[..keep]
}

fn weights_text(weights: &ThetaWeights) -> String {
    trimmed_weights(weights)
        .iter()
        .map(format_rat)
        .collect::<Vec<_>>()
        .join(", ")
}

fn gain_line(gain: &Rat, certificate: &MinimumCertificate) -> String {
    let g = rat_to_f64(gain);
    format!(
        "gain = {} (~{}, ~{} dB), certificate: {}",
        format_rat(gain),
        decimal_12(g),
        decimal_12(10.0 * g.log10()),
        certificate.verdict.as_str()
    )
}

/// Extra line printed when a certificate is refuted: the interior minimum
/// location (bracketed exactly) and the larger gain it implies.
fn refutation_line(certificate: &MinimumCertificate) -> Option<String> {
    let r = certificate.refutation.as_ref()?;
    let mut line = format!(
        "interior minimum: P({}) = {} < {} = P(1/4)",
        format_rat(&r.point),
        format_rat(&r.value),
        format_rat(&certificate.endpoint_value),
    );
    if let Some((lo, hi)) = &r.critical_bracket {
        line.push_str(&format!(
            "; critical point in [{}, {}]",
            format_rat(lo),
            format_rat(hi)
        ));
    }
    if r.value > int(0) {
        let witness_gain = int::<Rat>(1) / r.value.clone();
        line.push_str(&format!(
            "; gain at witness = {} (~{})",
            format_rat(&witness_gain),
            decimal_12(rat_to_f64(&witness_gain))
        ));
    }
    Some(line)
}

fn cmd_series(args: SeriesArgs) -> CliResult<()> {
    let order = resolve_order(args.order, || Ok(10))?;
    let series: QSeries = match args.form {
        FormArg::Theta2 => theta_series(ThetaIndex::Two, order)?,
        FormArg::Theta3 => theta_series(ThetaIndex::Three, order)?,
        FormArg::Theta4 => theta_series(ThetaIndex::Four, order)?,
        FormArg::E4 => named_form_series(NamedForm::E4, order)?,
        FormArg::Delta => named_form_series(NamedForm::Delta, order)?,
        FormArg::Delta8 => named_form_series(NamedForm::Delta8, order)?,
    };
    if args.json {
        print_json(&SeriesJson::from_series(&series));
    } else {
        println!("{}", series);
    }
    Ok(())
}

fn cmd_solve(args: SolveArgs) -> CliResult<()> {
    let parity = args.parity.parity();
    let prescribed = parse_rats(&args.prefix, "prefix")?;
    let prefix = LatticePrefix::new(args.dim, parity, prescribed)?;
    let basis = basis_for(args.dim, parity, args.order)?;
    let weights = solve_with(&prefix, &basis)?;
    let theta = reconstruct_theta(&weights, &basis)?;
    if args.json {
        print_json(&SolveJson {
            dimension: args.dim,
            parity: parity.to_string(),
            prescribed: prefix.prescribed().iter().map(format_rat).collect(),
            weights: weights.weights().iter().map(format_rat).collect(),
            theta: SeriesJson::from_series(&theta),
        });
    } else {
        println!("weights: {}", weights_text(&weights));
        println!("theta: {}", theta);
    }
    Ok(())
}

fn cmd_gain(args: GainArgs) -> CliResult<()> {
    let parity = args.parity.parity();
    let weights = weights_from_flags(args.dim, parity, &args.prefix, &args.weights, args.order)?;
    let p = zpoly(&weights)?;
    let gain = gain_at_unity(&p)?;
    let certificate = certify_minimum(&p)?;
    if args.json {
        print_json(&GainJson::new(&p, &gain, &certificate));
    } else {
        println!("{}", gain_line(&gain, &certificate));
        if let Some(line) = refutation_line(&certificate) {
            println!("{}", line);
        }
    }
    Ok(())
}

fn cmd_certify(args: CertifyArgs) -> CliResult<()> {
    let p: ZPoly = if let Some(poly) = &args.poly {
        ZPoly::new(parse_rats(poly, "poly")?)
    } else {
        let dim = args
            .dim
            .ok_or_else(|| CliError::Usage("--dim is required without --poly".to_string()))?;
        let parity = args.parity.parity().ok_or_else(|| {
            CliError::Usage("one of --even or --general is required without --poly".to_string())
        })?;
        let weights = weights_from_flags(dim, parity, &args.prefix, &args.weights, args.order)?;
        zpoly(&weights)?
    };
    let certificate = certify_minimum(&p)?;
    if args.json {
        print_json(&CertifyJson::from_certificate(&certificate));
    } else {
        println!("verdict: {}", certificate.verdict.as_str());
        println!(
            "interior critical points: {}",
            certificate.interior_critical_points
        );
        println!("P(1/4) = {}", format_rat(&certificate.endpoint_value));
        println!("witness: {}", certificate.witness);
        if let Some(line) = refutation_line(&certificate) {
            println!("{}", line);
        }
    }
    Ok(())
}

fn diff_text(report: &TheoremReport) -> String {
    let computed = format_rat(&report.computed);
    let matching = if report.statement.matches {
        Some(report.statement.label.clone())
    } else if report.proof.matches {
        Some(report.proof.label.clone())
    } else {
        None
    };
    let lead = match matching {
        Some(label) => format!("computed per-unit difference = {} = {}", computed, label),
        None => format!("computed per-unit difference = {}", computed),
    };
    format!(
        "{}; paper statement {}; proof substitution {}",
        lead, report.statement.label, report.proof.label
    )
}

fn cmd_diff(args: DiffArgs) -> CliResult<()> {
    let report = match args.theorem {
        1 => theorem1_report(args.dim)?,
        2 => theorem2_report(args.dim)?,
        other => {
            return Err(CliError::Usage(format!(
                "--theorem must be 1 or 2, got {}",
                other
            )))
        }
    };
    if args.json {
        print_json(&DiffJson::from_report(&report));
    } else {
        println!("{}", diff_text(&report));
    }
    Ok(())
}

fn parse_kissing_range(text: &str) -> CliResult<(i64, i64)> {
    let parts: Vec<&str> = text.split(':').collect();
    let bad = || CliError::Usage(format!("--kissing must be A:B, got {:?}", text));
    if parts.len() != 2 {
        return Err(bad());
    }
    let a: i64 = parts[0].trim().parse().map_err(|_| bad())?;
    let b: i64 = parts[1].trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn cmd_scan(args: ScanArgs) -> CliResult<()> {
    let parity = args.parity.parity();
    let (low, high) = parse_kissing_range(&args.kissing)?;
    let basis = basis_for(args.dim, parity, args.order)?;
    let mut rows: Vec<ScanRowJson> = Vec::new();
    for kissing in low..=high {
        let prefix = LatticePrefix::with_last(args.dim, parity, int(kissing))?;
        let weights = solve_with(&prefix, &basis)?;
        let p = zpoly(&weights)?;
        let gain = gain_at_unity(&p)?;
        let certificate = certify_minimum(&p)?;
        rows.push(ScanRowJson {
            kissing,
            last_weight: format_rat(weights.weights().last().expect("non-empty")),
            gain: format_rat(&gain),
            gain_decimal: decimal_12(rat_to_f64(&gain)),
            verdict: certificate.verdict.as_str().to_string(),
        });
    }
    if args.json {
        print_json(&rows);
    } else if args.csv {
        println!("kissing,last_weight,gain,gain_decimal,verdict");
        for r in rows {
            println!(
                "{},{},{},{},{}",
                r.kissing, r.last_weight, r.gain, r.gain_decimal, r.verdict
            );
        }
    } else {
        println!(
            "{:<10} {:<16} {:<20} {:<16} {}",
            "kissing", "last-weight", "gain", "gain-decimal", "verdict"
        );
        for r in rows {
            println!(
                "{:<10} {:<16} {:<20} {:<16} {}",
                r.kissing, r.last_weight, r.gain, r.gain_decimal, r.verdict
            );
        }
    }
    Ok(())
}

fn cmd_enumerate(args: EnumerateArgs) -> CliResult<()> {
    let text = std::fs::read_to_string(&args.gram)
        .map_err(|e| CliError::Domain(format!("cannot read {}: {}", args.gram, e)))?;
    let gram = parse_gram_json(&text)?;
    let limits = if args.force {
        EnumerationLimits::unbounded()
    } else {
        EnumerationLimits::default()
    };
    let flags = check_unimodular(&gram)?;
    let census = enumerate_norms_with_limits(&gram, args.max_norm, &limits)?;
    let kissing = kissing_number_with_limits(&gram, &limits)?;
    if args.json {
        print_json(&CensusJson::new(&gram, &flags, &census));
    } else {
        println!("dimension: {}", gram.dimension());
        println!("integral: {}", flags.integral);
        println!("determinant: {}", flags.determinant);
        println!("even: {}", flags.even);
        println!("unimodular: {}", flags.is_unimodular());
        println!("norm count");
        for (norm, count) in census.counts() {
            println!("{} {}", norm, count);
        }
        println!("kissing: norm {}, count {}", kissing.0, kissing.1);
    }
    Ok(())
}

fn parse_grid(text: &str) -> CliResult<Vec<f64>> {
    let bad = || CliError::Usage(format!("--grid must be LO:HI:COUNT, got {:?}", text));
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let lo: f64 = parts[0].trim().parse().map_err(|_| bad())?;
    let hi: f64 = parts[1].trim().parse().map_err(|_| bad())?;
    let count: usize = parts[2].trim().parse().map_err(|_| bad())?;
    if !(lo.is_finite() && hi.is_finite()) || lo <= 0.0 || hi < lo || count == 0 {
        return Err(bad());
    }
    if count == 1 {
        return Ok(vec![lo]);
    }
    let ratio = hi / lo;
    Ok((0..count)
        .map(|i| lo * ratio.powf(i as f64 / (count - 1) as f64))
        .collect())
}

fn cmd_sample(args: SampleArgs) -> CliResult<()> {
    let parity = args.parity.parity();
    let weights = weights_from_flags(args.dim, parity, &args.prefix, &args.weights, args.order)?;
    let grid: Vec<f64> = match (&args.grid, &args.y) {
        (Some(g), None) => parse_grid(g)?,
        (None, Some(list)) => {
            let mut ys = Vec::new();
            for part in list.split(',') {
                let y: f64 = part.trim().parse().map_err(|_| {
                    CliError::Usage(format!("--y entry {:?} is not a number", part))
                })?;
                ys.push(y);
            }
            ys
        }
        (None, None) => default_y_grid(),
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    };
    let rows = sample_secrecy_function(&weights, &grid, args.tol)?;
    println!("y,xi");
    for (y, xi) in rows {
        println!("{},{}", decimal_12(y), decimal_12(xi));
    }
    Ok(())
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serialization cannot fail")
    );
}
