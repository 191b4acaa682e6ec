//! Invertibility of `L(1)` and `W(1)` over `Z/3Z` by a triangular set of
//! column-space vectors: for every row index `i` a vector that vanishes
//! above `i` and is `1` at `i`.
//!
//! The leading indices come from column elimination, preferring the
//! boldface column of the displayed matrices; the trailing indices come
//! from the explicit column combinations.

use serde::Serialize;

use super::matrices::{build_matrix_mod3, Which};
use super::CertError;
use crate::linalg::ResidueMatrix;

/// `sum coeff * C_col` should have zeros before `target` and the entries
/// `tail` from `target - tail_offset` on (all indices 1-based).
#[derive(Clone, Copy, Debug)]
pub struct ColumnCertificate {
    pub target: usize,
    pub combination: &'static [(i8, usize)],
    /// Displayed trailing entries, starting at row `target - tail_offset`.
    pub tail: &'static [i8],
    pub tail_offset: usize,
}

const L_CERTS: [ColumnCertificate; 6] = [
    ColumnCertificate {
        target: 25,
        combination: &[(1, 3), (1, 5), (1, 6), (1, 19), (1, 22), (-1, 24), (-1, 26), (-1, 30)],
        tail: &[0, 1, 0, 0, 0, -1, 1],
        tail_offset: 1,
    },
    ColumnCertificate {
        target: 26,
        combination: &[(1, 5), (1, 21), (-1, 23), (1, 25), (-1, 27), (1, 28), (1, 29)],
        tail: &[0, 0, 1, -1, 1, -1, 0],
        tail_offset: 2,
    },
    ColumnCertificate {
        target: 27,
        combination: &[
            (1, 3),
            (1, 6),
            (-1, 8),
            (-1, 15),
            (1, 17),
            (1, 24),
            (1, 25),
            (-1, 26),
            (-1, 27),
            (1, 28),
            (1, 29),
            (-1, 30),
        ],
        tail: &[0, 0, 0, 1, 1, -1, 1],
        tail_offset: 3,
    },
    ColumnCertificate {
        target: 28,
        combination: &[
            (-1, 1),
            (-1, 3),
            (1, 4),
            (-1, 6),
            (-1, 7),
            (-1, 17),
            (1, 20),
            (1, 22),
            (-1, 23),
            (1, 24),
            (1, 25),
            (1, 27),
            (1, 28),
            (1, 30),
        ],
        tail: &[0, 0, 0, 0, 1, -1, 1],
        tail_offset: 4,
    },
    ColumnCertificate {
        target: 29,
        combination: &[
            (1, 2),
            (-1, 3),
            (-1, 4),
            (-1, 5),
            (1, 7),
            (-1, 8),
            (1, 9),
            (-1, 10),
            (-1, 11),
            (-1, 13),
            (1, 14),
            (-1, 17),
            (-1, 18),
            (1, 21),
            (-1, 22),
            (1, 23),
            (1, 26),
            (-1, 27),
            (-1, 29),
            (1, 30),
        ],
        tail: &[0, 0, 0, 0, 0, 1, 1],
        tail_offset: 5,
    },
    ColumnCertificate {
        target: 30,
        combination: &[
            (1, 1),
            (-1, 5),
            (-1, 6),
            (-1, 8),
            (-1, 9),
            (-1, 13),
            (-1, 16),
            (1, 18),
            (1, 20),
            (-1, 21),
            (-1, 22),
            (1, 23),
            (1, 24),
            (1, 25),
            (1, 26),
            (1, 27),
            (-1, 28),
        ],
        tail: &[0, 0, 0, 0, 0, 0, 1],
        tail_offset: 6,
    },
];

const W_CERTS: [ColumnCertificate; 5] = [
    ColumnCertificate {
        target: 23,
        combination: &[
            (1, 3),
            (-1, 6),
            (-1, 16),
            (1, 18),
            (1, 19),
            (-1, 20),
            (-1, 21),
            (-1, 25),
            (-1, 26),
        ],
        tail: &[0, 1, -1, 1, 0, -1],
        tail_offset: 1,
    },
    ColumnCertificate {
        target: 24,
        combination: &[
            (-1, 5),
            (-1, 7),
            (-1, 8),
            (-1, 12),
            (-1, 15),
            (1, 17),
            (1, 19),
            (-1, 21),
            (1, 23),
            (-1, 24),
            (1, 25),
        ],
        tail: &[0, 0, 1, -1, 1, -1],
        tail_offset: 2,
    },
    ColumnCertificate {
        target: 25,
        combination: &[
            (1, 2),
            (1, 5),
            (-1, 7),
            (-1, 14),
            (1, 16),
            (1, 23),
            (1, 24),
            (-1, 25),
            (-1, 26),
            (1, 27),
        ],
        tail: &[0, 0, 0, 1, 1, -1],
        tail_offset: 3,
    },
    ColumnCertificate {
        target: 26,
        combination: &[
            (-1, 2),
            (1, 3),
            (-1, 5),
            (-1, 6),
            (-1, 16),
            (1, 19),
            (1, 21),
            (-1, 22),
            (1, 23),
            (1, 24),
            (1, 26),
            (1, 27),
        ],
        tail: &[0, 0, 0, 0, 1, -1],
        tail_offset: 4,
    },
    ColumnCertificate {
        target: 27,
        combination: &[
            (1, 1),
            (-1, 2),
            (-1, 3),
            (1, 5),
            (1, 6),
            (-1, 8),
            (-1, 9),
            (-1, 10),
            (1, 13),
            (1, 15),
            (-1, 16),
            (1, 17),
            (-1, 19),
            (-1, 20),
            (-1, 23),
            (-1, 24),
            (1, 26),
            (1, 27),
        ],
        tail: &[0, 0, 0, 0, 0, 1],
        tail_offset: 5,
    },
];

/// Boldface column (1-based) of each leading row of the displayed matrices.
const L_BOLD: [usize; 24] = [
    4, 3, 2, 1, 12, 14, 16, 18, 20, 22, 24, 26, 28, 30, 12, 14, 16, 18, 20, 22, 24, 26, 28, 30,
];
const W_BOLD: [usize; 22] = [
    4, 3, 2, 1, 11, 13, 15, 17, 19, 21, 23, 25, 27, 11, 13, 15, 17, 19, 21, 23, 25, 27,
];

/// The listed combinations for `L` or `W`.
pub fn column_certificates(which: Which) -> Result<&'static [ColumnCertificate], CertError> {
    match which {
        Which::L => Ok(&L_CERTS),
        Which::W => Ok(&W_CERTS),
        w => Err(CertError::InvalidArgument(format!("no column certificates for {w}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StaircaseStep {
    /// 1-based row index.
    pub row: usize,
    /// 1-based column whose reduction supplied the pivot, if any.
    pub pivot_column: Option<usize>,
    /// The pivot came from the boldface column.
    pub bold: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColumnCheck {
    pub which: Which,
    pub staircase: Vec<StaircaseStep>,
    /// Targets whose listed combination has the claimed shape.
    pub certificates_ok: Vec<usize>,
    /// Targets whose combination failed, with the first offending row.
    pub certificates_failed: Vec<(usize, usize)>,
    /// Staircase and certificates together give a unit-triangular set of
    /// vectors in the column space.
    pub invertible: bool,
}

impl ColumnCheck {
    pub fn staircase_ok(&self) -> bool {
        self.staircase.iter().all(|s| s.pivot_column.is_some())
    }
}

fn combine(m: &ResidueMatrix, cert: &ColumnCertificate) -> Vec<u64> {
    let f = m.field();
    let mut v = vec![0u64; m.rows()];
    for &(c, col) in cert.combination {
        let c = f.reduce_i64(c as i64);
        for (r, slot) in v.iter_mut().enumerate() {
            *slot = f.add(*slot, f.mul(c, m.get(r, col - 1)));
        }
    }
    v
}

/// First 1-based row where `v` departs from the certificate's claim.
fn first_violation(m: &ResidueMatrix, cert: &ColumnCertificate, v: &[u64]) -> Option<usize> {
    let f = m.field();
    let tail_start = cert.target - cert.tail_offset;
    for (r, &x) in v.iter().enumerate() {
        let row = r + 1;
        let want = if row < tail_start {
            0
        } else {
            f.reduce_i64(cert.tail[row - tail_start] as i64)
        };
        if x != want {
            return Some(row);
        }
    }
    None
}

/// Column elimination over the first `n` rows: for each row, find a column
/// of the current reduced matrix that is nonzero there, preferring the bold
/// column, and clear that row from all other columns.
fn staircase(m: &ResidueMatrix, bold: &[usize]) -> Vec<StaircaseStep> {
    let f = m.field();
    let mut cols: Vec<Vec<u64>> = (0..m.cols())
        .map(|j| (0..m.rows()).map(|i| m.get(i, j)).collect())
        .collect();
    let mut used = vec![false; cols.len()];
    let mut steps = Vec::with_capacity(bold.len());
    for (i, &b) in bold.iter().enumerate() {
        let preferred = b - 1;
        let pivot = if !used[preferred] && cols[preferred][i] != 0 {
            Some(preferred)
        } else {
            (0..cols.len()).find(|&j| !used[j] && cols[j][i] != 0)
        };
        let Some(p) = pivot else {
            steps.push(StaircaseStep {
                row: i + 1,
                pivot_column: None,
                bold: false,
            });
            continue;
        };
        used[p] = true;
        let inv = f.inv(cols[p][i]);
        let pv: Vec<u64> = cols[p].iter().map(|&x| f.mul(x, inv)).collect();
        for (j, c) in cols.iter_mut().enumerate() {
            if used[j] || c[i] == 0 {
                continue;
            }
            let t = c[i];
            for (x, &y) in c.iter_mut().zip(&pv) {
                *x = f.sub(*x, f.mul(t, y));
            }
        }
        cols[p] = pv;
        steps.push(StaircaseStep {
            row: i + 1,
            pivot_column: Some(p + 1),
            bold: p == preferred,
        });
    }
    steps
}

/// Checks the mod-3 invertibility argument for `L(1)` or `W(1)`.
pub fn verify_column_certificates(which: Which) -> Result<ColumnCheck, CertError> {
    let certs = column_certificates(which)?;
    let bold: &[usize] = if which == Which::L { &L_BOLD } else { &W_BOLD };
    let m = build_matrix_mod3(1, which)?;
    let staircase = staircase(&m, bold);
    let mut ok = Vec::new();
    let mut failed = Vec::new();
    for cert in certs {
        let v = combine(&m, cert);
        match first_violation(&m, cert, &v) {
            None => ok.push(cert.target),
            Some(row) => failed.push((cert.target, row)),
        }
    }
    let covered = bold.len() + ok.len() == m.rows() && certs.iter().map(|c| c.target).eq(bold.len() + 1..=m.rows());
    let invertible = covered && failed.is_empty() && staircase.iter().all(|s| s.pivot_column.is_some());
    Ok(ColumnCheck {
        which,
        staircase,
        certificates_ok: ok,
        certificates_failed: failed,
        invertible,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_matrices_pass() {
        for which in [Which::L, Which::W] {
            let c = verify_column_certificates(which).unwrap();
            assert!(c.certificates_failed.is_empty(), "{:?}", c.certificates_failed);
            assert!(c.staircase_ok());
            assert!(c.invertible);
        }
    }

    #[test]
    fn a_corrupted_combination_is_caught() {
        let m = build_matrix_mod3(1, Which::L).unwrap();
        let bad = ColumnCertificate {
            combination: &[(1, 3), (1, 5)],
            ..L_CERTS[0]
        };
        let v = combine(&m, &bad);
        assert!(first_violation(&m, &bad, &v).is_some());
    }

    #[test]
    fn only_l_and_w_have_certificates() {
        assert!(verify_column_certificates(Which::N).is_err());
    }
}
