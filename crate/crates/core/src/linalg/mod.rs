//! Exact linear algebra: dense integer matrices with fraction-free
//! elimination, dense and sparse elimination over prime fields, and the CSV
//! exchange format.

mod csvio;
mod dense;
mod sparse;

pub use csvio::{read_csv, write_csv, CsvMatrix};
pub use dense::{
    bareiss_rank, det_mod_p, is_invertible_exact, rank_dense_exact, rank_dense_mod_p, InvertibilityCertificate,
    InvertibilityMethod,
};
pub use sparse::SparseModMatrix;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::PrimeField;

#[derive(Debug, Error)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("row {row} has {len} entries, expected {cols}")]
    RaggedRow { row: usize, len: usize, cols: usize },
    #[error("malformed CSV: {0}")]
    Csv(String),
    #[error(transparent)]
    Arith(#[from] crate::arith::ArithError),
}

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Result<IntMatrix, LinalgError> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(LinalgError::RaggedRow {
                    row: i,
                    len: r.len(),
                    cols,
                });
            }
            data.extend(r);
        }
        Ok(IntMatrix {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<IntMatrix, LinalgError> {
        let cols = rows.first().map_or(0, |r| r.len());
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            cols,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Rows `row_idx` and columns `col_idx`, in the given order.
    pub fn select(&self, row_idx: &[usize], col_idx: &[usize]) -> IntMatrix {
        let mut data = Vec::with_capacity(row_idx.len() * col_idx.len());
        for &i in row_idx {
            for &j in col_idx {
                data.push(self.get(i, j).clone());
            }
        }
        IntMatrix {
            rows: row_idx.len(),
            cols: col_idx.len(),
            data,
        }
    }

    /// Copy without the listed rows and columns.
    pub fn without(&self, drop_rows: &[usize], drop_cols: &[usize]) -> IntMatrix {
        let r: Vec<usize> = (0..self.rows).filter(|i| !drop_rows.contains(i)).collect();
        let c: Vec<usize> = (0..self.cols).filter(|j| !drop_cols.contains(j)).collect();
        self.select(&r, &c)
    }

    /// Stacks blocks with equal column counts.
    pub fn vstack(blocks: &[IntMatrix]) -> Result<IntMatrix, LinalgError> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(LinalgError::RaggedRow {
                    row: rows,
                    len: b.cols,
                    cols,
                });
            }
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn nonzeros(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    /// Entry-wise reduction into `[0, p)`.
    pub fn reduce(&self, field: &PrimeField) -> ResidueMatrix {
        let p = BigInt::from(field.modulus());
        let data = self
            .data
            .iter()
            .map(|x| {
                let r = ((x % &p) + &p) % &p;
                r.to_u64().expect("residue below p")
            })
            .collect();
        ResidueMatrix {
            field: *field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }
}

/// Dense matrix over a prime field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl ResidueMatrix {
    /// Entries are reduced on entry, so signed representatives are accepted.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<ResidueMatrix, LinalgError> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(LinalgError::RaggedRow {
                    row: i,
                    len: r.len(),
                    cols,
                });
            }
            data.extend(r.iter().map(|&x| field.reduce_i64(x)));
        }
        Ok(ResidueMatrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Symmetric representatives, e.g. `-1, 0, 1` for `p = 3`.
    pub fn signed_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|&x| self.field.symmetric(x) as i64).collect())
            .collect()
    }

    /// Positions `(row, col)` where the two matrices differ; a shape mismatch
    /// is reported as a single `(rows, cols)` entry of the larger shape.
    pub fn diff(&self, other: &ResidueMatrix) -> Vec<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols || self.field != other.field {
            return vec![(self.rows.max(other.rows), self.cols.max(other.cols))];
        }
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) != other.get(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn to_sparse(&self) -> SparseModMatrix {
        let mut s = SparseModMatrix::new(self.field, self.cols);
        for i in 0..self.rows {
            s.push_row(
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(j, &x)| (j, x))
                    .collect(),
            );
        }
        s
    }

    pub(crate) fn data(&self) -> &[u64] {
        &self.data
    }
}
