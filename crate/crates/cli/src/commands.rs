use std::path::Path;

use egcert::arith::{primes_below, CoeffRing, IntegerCoeffs, PrimeField};
use egcert::cert::{
    build_matrix, cc_bound, certify, conjectured_regularity, degree_formula, eg_bound, fixture_diff, hilbert_dim,
    hilbert_poly_fit, q_off_y, toric_degree, verify_column_certificates, y_points, BuildMode, CertMatrixSpec,
    CertifyOptions, ColumnCheck, ConjecturedRegularityReport, FixtureDiff, HilbertDim, HilbertFit, LatticePointSet,
    QOffY, ToricDegree, Which,
};
use egcert::groebner::{
    kernel_of_map, minimal_generator_degrees, partial_elimination, Budget, GbConfig, GbStats, GroebnerBasis,
    KernelMethod, MinimalGenerators,
};
use egcert::linalg::{write_csv, CsvMatrix};
use egcert::poly::{
    ideal_from_text, parse_document, section_map_from_text, MonomialOrder, PolyRing, SectionMap, SparsePoly,
};
use serde::Serialize;

use crate::error::CliError;
use crate::schema;
use crate::{Command, Format, Global, Method, Mode};

/// A rendered report, and the reason when it records a negative answer.
pub struct Output {
    pub text: String,
    pub negative: Option<String>,
}

fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn ok<T: Serialize>(value: &T) -> Result<Output, CliError> {
    Ok(Output {
        text: json(value)?,
        negative: None,
    })
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn gb_config(global: &Global) -> GbConfig {
    GbConfig {
        budget: Budget::new(global.budget.pairs, global.budget.time),
        ..GbConfig::default()
    }
}

fn field(p: u64) -> Result<PrimeField, CliError> {
    PrimeField::new(p).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn run(command: &Command, global: &Global) -> Result<Output, CliError> {
    if global.format == Format::Csv && !matches!(command, Command::Matrices { .. }) {
        return Err(CliError::Usage("--format csv applies to `matrices` only".into()));
    }
    match command {
        Command::Certify { m, primes, exact_limit } => run_certify(*m, *primes, *exact_limit, global),
        Command::Matrices {
            k,
            which,
            modulus,
            mode,
        } => run_matrices(*k, *which, *modulus, *mode, global),
        Command::Fixtures { which } => run_fixtures(*which),
        Command::Kernel {
            map,
            method,
            characteristic,
            mingens,
        } => run_kernel(map, *method, *characteristic, *mingens, global),
        Command::Pei {
            map,
            var,
            characteristic,
        } => run_pei(map, var, *characteristic, global),
        Command::Hilbert {
            map,
            degree,
            fit_start,
            count,
            primes,
        } => run_hilbert(map, degree, *fit_start, *count, *primes),
        Command::Degree { m, points } => run_degree(*m, points.as_deref()),
        Command::Bound { m, n, r } => run_bound(*m, *n, *r),
        Command::Schema {
            version,
            validate,
            kind,
        } => run_schema(*version, validate.as_deref(), kind),
    }
}

fn run_certify(m: u64, primes: usize, exact_limit: usize, global: &Global) -> Result<Output, CliError> {
    if primes == 0 {
        return Err(CliError::Usage("--primes must be positive".into()));
    }
    let options = CertifyOptions {
        primes: primes_below(1 << 62, primes),
        exact_limit,
    };
    let mut report = certify(m, &options)?;
    if !global.timings {
        report.timings = None;
    }
    let negative = (report.k.is_some() && !report.eg_violated).then(|| format!("L({0}) or W({0}) is singular", m / 6));
    Ok(Output {
        text: json(&report)?,
        negative,
    })
}

#[derive(Serialize)]
struct MatrixReport {
    k: u64,
    which: Which,
    mode: BuildMode,
    modulus: u64,
    rows: usize,
    cols: usize,
    /// Exact integers, or symmetric residues when `modulus > 0`.
    entries: Vec<Vec<String>>,
}

fn run_matrices(k: u64, which: Which, modulus: u64, mode: Mode, global: &Global) -> Result<Output, CliError> {
    let mode = match mode {
        Mode::ClosedForm => BuildMode::ClosedForm,
        Mode::Expansion => BuildMode::Expansion,
    };
    let exact = build_matrix(&CertMatrixSpec::new(k, which, mode)?)?;
    let csv = if modulus == 0 {
        CsvMatrix::exact(exact)
    } else {
        CsvMatrix::from_residues(&exact.reduce(&field(modulus)?))
    };
    let text = match global.format {
        Format::Csv => {
            let mut buf = Vec::new();
            write_csv(&mut buf, &csv).map_err(|e| CliError::Internal(e.to_string()))?;
            String::from_utf8(buf).map_err(|e| CliError::Internal(e.to_string()))?
        }
        Format::Json => json(&MatrixReport {
            k,
            which,
            mode,
            modulus,
            rows: csv.matrix.rows(),
            cols: csv.matrix.cols(),
            entries: (0..csv.matrix.rows())
                .map(|i| csv.matrix.row(i).iter().map(|x| x.to_string()).collect())
                .collect(),
        })?,
    };
    Ok(Output { text, negative: None })
}

#[derive(Serialize)]
struct FixturesReport {
    diffs: Vec<FixtureDiff>,
    columns: Vec<ColumnCheck>,
    ok: bool,
}

fn run_fixtures(which: Option<Which>) -> Result<Output, CliError> {
    let targets = match which {
        Some(w @ (Which::L | Which::W)) => vec![w],
        Some(w) => return Err(CliError::Usage(format!("no fixture for {w}; use L or W"))),
        None => vec![Which::L, Which::W],
    };
    let mut diffs = Vec::new();
    let mut columns = Vec::new();
    for w in targets {
        diffs.push(fixture_diff(w)?);
        columns.push(verify_column_certificates(w)?);
    }
    let ok = diffs.iter().all(|d| d.is_empty())
        && columns
            .iter()
            .all(|c| c.certificates_failed.is_empty() && c.staircase_ok() && c.invertible);
    let report = FixturesReport { diffs, columns, ok };
    Ok(Output {
        text: json(&report)?,
        negative: (!ok).then(|| "fixture mismatch or failed certificate".to_string()),
    })
}

#[derive(Serialize)]
struct KernelReport {
    characteristic: u64,
    method: KernelMethod,
    count: usize,
    max_degree: Option<u32>,
    generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    minimal_generators: Option<MinimalGenerators>,
    stats: GbStats,
}

fn load_map(path: &Path) -> Result<SectionMap<IntegerCoeffs>, CliError> {
    Ok(section_map_from_text(&read(path)?, IntegerCoeffs)?)
}

fn kernel_report<R: CoeffRing>(
    map: &SectionMap<R>,
    method: KernelMethod,
    mingens: bool,
    global: &Global,
) -> Result<KernelReport, CliError> {
    let ker = kernel_of_map(map, method, &gb_config(global))?;
    let minimal_generators = if mingens {
        Some(minimal_generator_degrees(&ker, &primes_below(1 << 31, 2))?)
    } else {
        None
    };
    Ok(KernelReport {
        characteristic: map.source().coeffs().characteristic(),
        method,
        count: ker.len(),
        max_degree: ker.max_degree(),
        generators: ker.display(),
        minimal_generators,
        stats: ker.stats().clone(),
    })
}

fn run_kernel(path: &Path, method: Method, p: u64, mingens: bool, global: &Global) -> Result<Output, CliError> {
    let map = load_map(path)?;
    let method = match method {
        Method::Block => KernelMethod::Block,
        Method::Lex => KernelMethod::Lex,
    };
    let report = if p == 0 {
        kernel_report(&map, method, mingens, global)?
    } else {
        let f = field(p)?;
        kernel_report(&map.map_coeffs(f, |c| f.from_bigint(c)), method, mingens, global)?
    };
    ok(&report)
}

#[derive(Serialize)]
struct PeiLevel {
    i: usize,
    unit: bool,
    generators: Vec<String>,
}

#[derive(Serialize)]
struct PeiReport {
    characteristic: u64,
    var: String,
    /// `"ideal"`, or `"kernel"` when the input was a map.
    input: &'static str,
    stabilization: usize,
    max_eliminated_degree: u32,
    levels: Vec<PeiLevel>,
}

fn pei_report<R: CoeffRing>(
    ring: &PolyRing<R>,
    gens: &[SparsePoly<R::Elem>],
    var: &str,
    input: &'static str,
    global: &Global,
) -> Result<PeiReport, CliError> {
    let idx = ring
        .var_index(var)
        .ok_or_else(|| CliError::Usage(format!("no variable {var:?} in the ring")))?;
    let pei = partial_elimination(ring, gens, idx, &gb_config(global))?;
    Ok(PeiReport {
        characteristic: ring.coeffs().characteristic(),
        var: var.to_string(),
        input,
        stabilization: pei.stabilization,
        max_eliminated_degree: pei.max_eliminated_degree,
        levels: pei
            .levels
            .iter()
            .enumerate()
            .map(|(i, k)| PeiLevel {
                i,
                unit: k.is_unit(),
                generators: k.display(),
            })
            .collect(),
    })
}

fn pei_in<R: CoeffRing>(coeffs: R, text: &str, var: &str, global: &Global) -> Result<PeiReport, CliError> {
    let doc = parse_document(text)?;
    if doc.map.is_empty() {
        let (ring, gens) = ideal_from_text(text, coeffs, MonomialOrder::DegRevLex)?;
        return pei_report(&ring, &gens, var, "ideal", global);
    }
    let map = section_map_from_text(text, coeffs)?;
    let ker: GroebnerBasis<R> = kernel_of_map(&map, KernelMethod::Block, &gb_config(global))?;
    pei_report(ker.ring(), ker.polys(), var, "kernel", global)
}

fn run_pei(path: &Path, var: &str, p: u64, global: &Global) -> Result<Output, CliError> {
    let text = read(path)?;
    let report = if p == 0 {
        pei_in(IntegerCoeffs, &text, var, global)?
    } else {
        pei_in(field(p)?, &text, var, global)?
    };
    ok(&report)
}

#[derive(Serialize)]
struct HilbertReport {
    dims: Vec<HilbertDim>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fit: Option<HilbertFit>,
}

fn run_hilbert(
    path: &Path,
    degrees: &[u32],
    fit_start: Option<u32>,
    count: usize,
    primes: usize,
) -> Result<Output, CliError> {
    if primes == 0 {
        return Err(CliError::Usage("--primes must be positive".into()));
    }
    if degrees.is_empty() && fit_start.is_none() {
        return Err(CliError::Usage("give --degree or --fit-start".into()));
    }
    let map = load_map(path)?;
    let primes = primes_below(1 << 31, primes);
    let report = match fit_start {
        // with a fit, the requested degrees become the h^1 report
        Some(start) => HilbertReport {
            dims: Vec::new(),
            fit: Some(hilbert_poly_fit(&map, start, count, degrees, &primes)?),
        },
        None => HilbertReport {
            dims: degrees
                .iter()
                .map(|&d| hilbert_dim(&map, d, &primes))
                .collect::<Result<_, _>>()?,
            fit: None,
        },
    };
    ok(&report)
}

#[derive(Serialize)]
struct DegreeReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
    points: Vec<[i64; 2]>,
    toric: ToricDegree,
    #[serde(skip_serializing_if = "Option::is_none")]
    projection: Option<QOffY>,
}

fn parse_points(s: &str) -> Result<Vec<[i64; 2]>, CliError> {
    s.split_whitespace()
        .map(|pair| {
            let (a, b) = pair
                .split_once(',')
                .ok_or_else(|| CliError::Usage(format!("point {pair:?} is not a,b")))?;
            let parse = |x: &str| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|_| CliError::Usage(format!("bad coordinate {x:?}")))
            };
            Ok([parse(a)?, parse(b)?])
        })
        .collect()
}

fn run_degree(m: Option<u32>, points: Option<&str>) -> Result<Output, CliError> {
    let (set, projection) = match (m, points) {
        (Some(m), _) => (y_points(m)?, Some(q_off_y(m)?)),
        (None, Some(p)) => (LatticePointSet::new(parse_points(p)?)?, None),
        (None, None) => return Err(CliError::Usage("give --m or --points".into())),
    };
    ok(&DegreeReport {
        m,
        points: set.points().to_vec(),
        toric: toric_degree(&set)?,
        projection,
    })
}

#[derive(Serialize)]
struct CcBound {
    n: u32,
    r: u32,
    value: String,
}

#[derive(Serialize)]
struct BoundReport {
    m: u64,
    degree: u64,
    codim: u64,
    eg_bound: u64,
    conjectured_regularity: ConjecturedRegularityReport,
    cc_bound: CcBound,
}

fn run_bound(m: u64, n: u32, r: u32) -> Result<Output, CliError> {
    if m < 6 {
        return Err(CliError::Usage(format!("m = {m}, need m >= 6")));
    }
    let degree = degree_formula(m);
    ok(&BoundReport {
        m,
        degree,
        codim: 2,
        eg_bound: eg_bound(m),
        conjectured_regularity: conjectured_regularity(m).into(),
        cc_bound: CcBound {
            n,
            r,
            value: cc_bound(n, r, m)?.to_string(),
        },
    })
}

fn run_schema(version: u32, validate: Option<&Path>, kind: &str) -> Result<Output, CliError> {
    let doc = schema::report_schema(version)?;
    let Some(path) = validate else {
        return ok(&doc);
    };
    let instance: serde_json::Value =
        serde_json::from_str(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let result = schema::validate(&doc, kind, &instance)?;
    let negative = (!result.valid).then(|| format!("report does not match {kind}"));
    Ok(Output {
        text: json(&result)?,
        negative,
    })
}
