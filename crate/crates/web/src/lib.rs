//! Browser front end: certify X_m, draw certificate matrices mod 3, and
//! compute toric degrees of lattice polygons.

use egcert::cert::{
    build_matrix_mod3, certify as certify_report, toric_degree, verify_column_certificates, y_points, CertError,
    CertifyOptions, LatticePointSet, Which,
};
use wasm_bindgen::prelude::*;

/// Largest m accepted by [`certify`]; W(m/6) has side 54k^2 - 27k.
pub const MAX_M: u64 = 24;
/// Largest k accepted by [`mod3_pattern`].
pub const MAX_K: u64 = 3;

pub fn certify_json(m: u64) -> Result<String, CertError> {
    if m > MAX_M {
        return Err(CertError::InvalidArgument(format!(
            "m = {m} is too large for the browser; limit is {MAX_M}"
        )));
    }
    let report = certify_report(m, &CertifyOptions::default())?;
    serde_json::to_string_pretty(&report).map_err(|e| CertError::InvalidArgument(e.to_string()))
}

/// Residues of a certificate matrix mod 3, row-major, with the pivot
/// staircase of the column certificates when k = 1.
#[wasm_bindgen]
#[derive(Clone, Debug)]
pub struct Pattern {
    rows: usize,
    cols: usize,
    cells: Vec<u8>,
    pivots: Vec<u32>,
    certified: bool,
}

#[wasm_bindgen]
impl Pattern {
    #[wasm_bindgen(getter)]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[wasm_bindgen(getter)]
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entries in {0, 1, 2}.
    pub fn cells(&self) -> Vec<u8> {
        self.cells.clone()
    }

    /// Flattened (row, column) pairs, 0-based, one per staircase pivot.
    pub fn pivots(&self) -> Vec<u32> {
        self.pivots.clone()
    }

    /// The column certificates prove invertibility over F_3.
    #[wasm_bindgen(getter)]
    pub fn certified(&self) -> bool {
        self.certified
    }
}

pub fn build_pattern(k: u64, which: &str) -> Result<Pattern, CertError> {
    if k == 0 || k > MAX_K {
        return Err(CertError::InvalidArgument(format!("k must be in 1..={MAX_K}")));
    }
    let which: Which = which.parse()?;
    let m = build_matrix_mod3(k, which)?;
    let mut cells = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        cells.extend(m.row(i).iter().map(|&v| v as u8));
    }
    let (pivots, certified) = if k == 1 && matches!(which, Which::L | Which::W) {
        let check = verify_column_certificates(which)?;
        let pivots = check
            .staircase
            .iter()
            .filter_map(|s| s.pivot_column.map(|c| [s.row as u32 - 1, c as u32 - 1]))
            .flatten()
            .collect();
        (pivots, check.invertible)
    } else {
        (Vec::new(), false)
    };
    Ok(Pattern {
        rows: m.rows(),
        cols: m.cols(),
        cells,
        pivots,
        certified,
    })
}

/// Parses "a,b a,b ..." into lattice points.
pub fn parse_points(text: &str) -> Result<LatticePointSet, CertError> {
    let bad = |t: &str| CertError::InvalidArgument(format!("expected a,b but found {t:?}"));
    let points = text
        .split_whitespace()
        .map(|t| {
            let (a, b) = t.split_once(',').ok_or_else(|| bad(t))?;
            Ok([
                a.trim().parse().map_err(|_| bad(t))?,
                b.trim().parse().map_err(|_| bad(t))?,
            ])
        })
        .collect::<Result<Vec<[i64; 2]>, CertError>>()?;
    LatticePointSet::new(points)
}

pub fn degree_json(points: &str) -> Result<String, CertError> {
    let d = toric_degree(&parse_points(points)?)?;
    serde_json::to_string_pretty(&d).map_err(|e| CertError::InvalidArgument(e.to_string()))
}

pub fn y_points_text(m: u32) -> Result<String, CertError> {
    let set = y_points(m)?;
    Ok(set
        .points()
        .iter()
        .map(|[a, b]| format!("{a},{b}"))
        .collect::<Vec<_>>()
        .join(" "))
}

fn js(e: CertError) -> JsError {
    JsError::new(&e.to_string())
}

/// Certificate report for X_m as JSON.
#[wasm_bindgen]
pub fn certify(m: u32) -> Result<String, JsError> {
    certify_json(m as u64).map_err(js)
}

#[wasm_bindgen(js_name = mod3Pattern)]
pub fn mod3_pattern(k: u32, which: &str) -> Result<Pattern, JsError> {
    build_pattern(k as u64, which).map_err(js)
}

/// Degree of the toric surface of a lattice point set, as JSON.
#[wasm_bindgen(js_name = toricDegree)]
pub fn toric_degree_of(points: &str) -> Result<String, JsError> {
    degree_json(points).map_err(js)
}

/// The lattice points defining Y_m, formatted for [`toric_degree_of`].
#[wasm_bindgen(js_name = yPoints)]
pub fn y_points_of(m: u32) -> Result<String, JsError> {
    y_points_text(m).map_err(js)
}
