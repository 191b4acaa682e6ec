use web_time::Instant;

use serde::{Deserialize, Serialize};

use super::bounds::{conjectured_regularity, degree_formula, eg_bound, maxdeg_lower_bound, ConjecturedRegularity};
use super::matrices::{build_matrix, build_matrix_residues, n_cols, BuildMode, CertMatrixSpec, Which};
use super::CertError;
use crate::arith::{primes_below, PrimeField};
use crate::linalg::{det_mod_p, rank_dense_exact, InvertibilityCertificate, InvertibilityMethod};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Primes for the modular determinant, tried in order.
    pub primes: Vec<u64>,
    /// Largest dimension for which exact elimination is attempted when
    /// every modular determinant vanishes.
    pub exact_limit: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            primes: primes_below(1 << 62, 3),
            exact_limit: 600,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub l_seconds: f64,
    pub w_seconds: f64,
    pub total_seconds: f64,
}

/// Outcome of certifying `X_m` as a counterexample.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertReport {
    pub schema_version: u32,
    pub m: u64,
    /// `m / 6` when `6 | m`.
    pub k: Option<u64>,
    pub degree: u64,
    pub codim: u64,
    /// `degree - codim + 1`, the conjectured upper bound.
    pub eg_bound: u64,
    /// Present when `6 | m`; valid when both matrices are invertible.
    pub maxdeg_lower_bound: Option<u64>,
    #[serde(rename = "L_invertible")]
    pub l_invertible: Option<InvertibilityCertificate>,
    #[serde(rename = "W_invertible")]
    pub w_invertible: Option<InvertibilityCertificate>,
    /// Both matrices are invertible, so `maxdeg X_m` exceeds `eg_bound`.
    pub eg_violated: bool,
    pub conjectured_regularity: ConjecturedRegularityReport,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<Timings>,
    pub tool_version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjecturedRegularityReport {
    pub value: u64,
    pub status: String,
}

impl From<ConjecturedRegularity> for ConjecturedRegularityReport {
    fn from(c: ConjecturedRegularity) -> Self {
        ConjecturedRegularityReport {
            value: c.value,
            status: c.status.to_string(),
        }
    }
}

/// Decides invertibility of `L(k)` or `W(k)` over the rationals.
///
/// A nonzero determinant modulo one of the primes certifies invertibility;
/// if all vanish, exact elimination decides, up to `exact_limit`.
pub fn certify_invertible(
    k: u64,
    which: Which,
    options: &CertifyOptions,
) -> Result<InvertibilityCertificate, CertError> {
    if !matches!(which, Which::L | Which::W) {
        return Err(CertError::InvalidArgument(format!("{which} is not square")));
    }
    let mut tried = Vec::new();
    for &p in &options.primes {
        tried.push(p);
        let m = build_matrix_residues(k, which, PrimeField::new(p)?)?;
        if det_mod_p(&m)? != 0 {
            return Ok(InvertibilityCertificate {
                verdict: true,
                method: InvertibilityMethod::ModularDeterminant,
                prime: Some(p),
                primes_tried: tried,
            });
        }
    }
    let n = n_cols(k);
    if n > options.exact_limit {
        return Err(CertError::Budget(format!(
            "{which}({k}) is singular modulo {} primes and exceeds the exact limit {}",
            tried.len(),
            options.exact_limit
        )));
    }
    let m = build_matrix(&CertMatrixSpec::new(k, which, BuildMode::ClosedForm)?)?;
    Ok(InvertibilityCertificate {
        verdict: rank_dense_exact(&m) == m.rows(),
        method: InvertibilityMethod::ExactElimination,
        prime: None,
        primes_tried: tried,
    })
}

/// Certifies `X_m`. For `m` not divisible by 6 only the formula values are
/// filled in and no verdict is given.
pub fn certify(m: u64, options: &CertifyOptions) -> Result<CertReport, CertError> {
    if m < 6 {
        return Err(CertError::InvalidArgument(format!("m = {m}, need m >= 6")));
    }
    let start = Instant::now();
    let degree = degree_formula(m);
    let codim = 2;
    let mut report = CertReport {
        schema_version: 1,
        m,
        k: None,
        degree,
        codim,
        eg_bound: eg_bound(m),
        maxdeg_lower_bound: None,
        l_invertible: None,
        w_invertible: None,
        eg_violated: false,
        conjectured_regularity: conjectured_regularity(m).into(),
        timings: None,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
    };
    if !m.is_multiple_of(6) {
        return Ok(report);
    }
    let k = m / 6;
    let timed = |which| {
        let t = Instant::now();
        certify_invertible(k, which, options).map(|c| (c, t.elapsed().as_secs_f64()))
    };
    let (l, w) = rayon::join(|| timed(Which::L), || timed(Which::W));
    let (l, l_secs) = l?;
    let (w, w_secs) = w?;
    report.k = Some(k);
    report.maxdeg_lower_bound = Some(maxdeg_lower_bound(m));
    report.eg_violated = l.verdict && w.verdict;
    report.l_invertible = Some(l);
    report.w_invertible = Some(w);
    report.timings = Some(Timings {
        l_seconds: l_secs,
        w_seconds: w_secs,
        total_seconds: start.elapsed().as_secs_f64(),
    });
    Ok(report)
}
