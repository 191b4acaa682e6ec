use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{data, CertError};
use crate::arith::{BinomialTable, PrimeField};
use crate::linalg::{read_csv, IntMatrix, ResidueMatrix};
use crate::poly::{build_f, coeff_row, Context, Window};

/// One of the certificate matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Which {
    N1,
    N2,
    N3,
    N4,
    N,
    L,
    W,
}

impl Which {
    pub const ALL: [Which; 7] = [Which::N1, Which::N2, Which::N3, Which::N4, Which::N, Which::L, Which::W];

    fn block(self) -> Option<usize> {
        match self {
            Which::N1 => Some(1),
            Which::N2 => Some(2),
            Which::N3 => Some(3),
            Which::N4 => Some(4),
            _ => None,
        }
    }
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Which {
    type Err = CertError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Which::ALL
            .into_iter()
            .find(|w| w.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| CertError::InvalidArgument(format!("unknown matrix '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BuildMode {
    /// Binomial coefficients placed at their closed-form positions.
    #[default]
    ClosedForm,
    /// Coefficient rows of the expanded power products.
    Expansion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CertMatrixSpec {
    pub k: u64,
    pub which: Which,
    pub mode: BuildMode,
}

impl CertMatrixSpec {
    pub fn new(k: u64, which: Which, mode: BuildMode) -> Result<Self, CertError> {
        if k == 0 {
            return Err(CertError::InvalidArgument("k must be positive".into()));
        }
        Ok(CertMatrixSpec { k, which, mode })
    }

    pub fn dims(&self) -> (usize, usize) {
        let k = self.k;
        let nc = n_cols(k);
        match self.which {
            Which::N => (n_rows(k), nc),
            Which::L => (nc, nc),
            Which::W => (nc - 3, nc - 3),
            w => (b(k, w.block().unwrap()) as usize + 1, nc),
        }
    }
}

fn quad(k: u64, a: i64, b: i64, c: i64) -> i64 {
    let k = k as i64;
    a * k * k + b * k + c
}

/// `b_i(k)`: the last row index of block `i` (1-based), so block `i` has
/// `b_i(k) + 1` rows.
pub fn b(k: u64, i: usize) -> u64 {
    let v = match i {
        1 => quad(k, 6, -1, -1),
        2 => quad(k, 18, -9, 0),
        3 => quad(k, 18, -10, 1),
        4 => quad(k, 12, -7, 0),
        _ => panic!("block index {i} not in 1..=4"),
    };
    v as u64
}

/// Rows of `N(k)`.
pub fn n_rows(k: u64) -> usize {
    (1..=4).map(|i| b(k, i) as usize + 1).sum()
}

/// Columns of `N(k)` and `L(k)`.
pub fn n_cols(k: u64) -> usize {
    quad(k, 54, -27, 3) as usize
}

/// 1-based column of the leading `1` in row 0 of block `i`.
fn header(k: u64, i: usize) -> i64 {
    match i {
        1 => quad(k, 6, -1, 0),
        2 => quad(k, 18, -9, 1),
        3 => quad(k, 18, -7, 1),
        4 => quad(k, 30, -13, 2),
        _ => unreachable!(),
    }
}

/// A row of the closed form: `C(e, j)` sits at 0-based column `start + j`.
#[derive(Clone, Copy)]
struct PascalRow {
    e: u64,
    start: i64,
}

/// Closed-form layout of `which`: its Pascal rows and its column count.
fn layout(k: u64, which: Which) -> (Vec<PascalRow>, usize) {
    let nc = n_cols(k);
    let block = |i: usize| -> Vec<PascalRow> {
        (0..=b(k, i))
            .map(|u| PascalRow {
                e: if i == 2 { 3 * u + 2 } else { 3 * u },
                start: header(k, i) - 1 - u as i64,
            })
            .collect()
    };
    match which {
        Which::N1 | Which::N2 | Which::N3 | Which::N4 => (block(which.block().unwrap()), nc),
        Which::N => ((1..=4).flat_map(block).collect(), nc),
        Which::L => ((1..=4).flat_map(block).skip(1).collect(), nc),
        Which::W => {
            let rows = (1..=4)
                .flat_map(|i| {
                    let mut r = block(i);
                    r.pop();
                    r
                })
                .map(|r| PascalRow {
                    e: r.e,
                    start: r.start - 1,
                })
                .collect();
            (rows, nc - 3)
        }
    }
}

fn pascal_row(e: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(e as usize + 1);
    let mut c = BigInt::one();
    for j in 0..=e {
        row.push(c.clone());
        c = c * (e - j) / (j + 1);
    }
    row
}

fn place<T: Clone>(rows: &[PascalRow], cols: usize, zero: T, entry: impl Fn(u64, u64) -> T) -> Vec<Vec<T>> {
    rows.iter()
        .map(|r| {
            let mut out = vec![zero.clone(); cols];
            for j in 0..=r.e {
                let c = r.start + j as i64;
                if c >= 0 && (c as usize) < cols {
                    out[c as usize] = entry(r.e, j);
                }
            }
            out
        })
        .collect()
}

/// Builds `N_i(k)`, `N(k)`, `L(k)` or `W(k)` over the integers.
///
/// In expansion mode the `N` blocks are coefficient rows of `f_i(u)` over the
/// `L` window and `W(k)` is expanded directly from the shifted family over
/// the `W` window, not sliced from `N`.
pub fn build_matrix(spec: &CertMatrixSpec) -> Result<IntMatrix, CertError> {
    let k = spec.k;
    match spec.mode {
        BuildMode::ClosedForm => {
            let (rows, cols) = layout(k, spec.which);
            let mut cache: std::collections::HashMap<u64, Vec<BigInt>> = Default::default();
            for r in &rows {
                cache.entry(r.e).or_insert_with(|| pascal_row(r.e));
            }
            let data = place(&rows, cols, BigInt::zero(), |e, j| cache[&e][j as usize].clone());
            Ok(IntMatrix::from_rows(data, cols)?)
        }
        BuildMode::Expansion => {
            let (ctx, window, drop_last) = match spec.which {
                Which::W => (Context::W, Window::w(k), true),
                _ => (Context::L, Window::l(k), false),
            };
            let blocks: Vec<usize> = match spec.which.block() {
                Some(i) => vec![i],
                None => (1..=4).collect(),
            };
            let mut data = Vec::new();
            for i in blocks {
                let last = if drop_last {
                    b(k, i).checked_sub(1)
                } else {
                    Some(b(k, i))
                };
                let Some(last) = last else { continue };
                for u in 0..=last {
                    data.push(coeff_row(&build_f(k, ctx, i, u)?, &window)?);
                }
            }
            if spec.which == Which::L {
                data.remove(0);
            }
            Ok(IntMatrix::from_rows(data, window.len)?)
        }
    }
}

/// The closed form reduced modulo a prime, without forming the integers.
pub fn build_matrix_residues(k: u64, which: Which, field: PrimeField) -> Result<ResidueMatrix, CertError> {
    if k == 0 {
        return Err(CertError::InvalidArgument("k must be positive".into()));
    }
    let (rows, cols) = layout(k, which);
    let max_e = rows.iter().map(|r| r.e).max().unwrap_or(0);
    let table = BinomialTable::new(field, max_e);
    let data = place(&rows, cols, 0i64, |e, j| field.symmetric(table.get(e, j)) as i64);
    Ok(ResidueMatrix::from_rows(field, &data)?)
}

/// `which` over `Z/3Z`.
pub fn build_matrix_mod3(k: u64, which: Which) -> Result<ResidueMatrix, CertError> {
    build_matrix_residues(k, which, PrimeField::new(3)?)
}

/// `W_i(k)` from `N_i(k)`: drop the last row, the first column and the last
/// two columns.
pub fn w_block_from_n_block(n_block: &IntMatrix) -> IntMatrix {
    let cols = n_block.cols();
    let drop_cols = [0, cols - 2, cols - 1];
    n_block.without(&[n_block.rows() - 1], &drop_cols)
}

/// The embedded `k = 1` matrices over `Z/3Z` (`L` or `W` only).
pub fn fixture_mod3(which: Which) -> Result<ResidueMatrix, CertError> {
    let text = match which {
        Which::L => data::L1_MOD3,
        Which::W => data::W1_MOD3,
        w => return Err(CertError::Fixture(format!("no fixture for {w}"))),
    };
    let csv = read_csv(text.as_bytes())?;
    if csv.modulus != 3 {
        return Err(CertError::Fixture(format!("fixture modulus {}", csv.modulus)));
    }
    Ok(csv.to_residues()?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureMismatch {
    /// 1-based.
    pub row: usize,
    /// 1-based.
    pub col: usize,
    pub built: i64,
    pub fixture: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureDiff {
    pub which: Which,
    pub entries_compared: usize,
    pub mismatches: Vec<FixtureMismatch>,
}

impl FixtureDiff {
    pub fn is_empty(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Entry-wise comparison of `build_matrix_mod3(1, which)` with the fixture.
pub fn fixture_diff(which: Which) -> Result<FixtureDiff, CertError> {
    let built = build_matrix_mod3(1, which)?;
    let fixture = fixture_mod3(which)?;
    if (built.rows(), built.cols()) != (fixture.rows(), fixture.cols()) {
        return Err(CertError::Fixture(format!(
            "built {}x{}, fixture {}x{}",
            built.rows(),
            built.cols(),
            fixture.rows(),
            fixture.cols()
        )));
    }
    let f3 = built.field();
    let mismatches = built
        .diff(&fixture)
        .into_iter()
        .map(|(i, j)| FixtureMismatch {
            row: i + 1,
            col: j + 1,
            built: f3.symmetric(built.get(i, j)) as i64,
            fixture: f3.symmetric(fixture.get(i, j)) as i64,
        })
        .collect();
    Ok(FixtureDiff {
        which,
        entries_compared: built.rows() * built.cols(),
        mismatches,
    })
}
