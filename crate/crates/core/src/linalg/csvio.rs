//! Row-major CSV with a `rows,cols,modulus` header line; modulus `0` marks
//! exact integer entries, otherwise entries are printed as symmetric residues.

use std::io::{Read, Write};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{IntMatrix, LinalgError, ResidueMatrix};
use crate::arith::PrimeField;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsvMatrix {
    pub modulus: u64,
    pub matrix: IntMatrix,
}

impl CsvMatrix {
    pub fn exact(matrix: IntMatrix) -> CsvMatrix {
        CsvMatrix { modulus: 0, matrix }
    }

    pub fn from_residues(m: &ResidueMatrix) -> CsvMatrix {
        let rows = m
            .signed_rows()
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        CsvMatrix {
            modulus: m.field().modulus(),
            matrix: IntMatrix::from_rows(rows, m.cols()).expect("rectangular"),
        }
    }

    pub fn to_residues(&self) -> Result<ResidueMatrix, LinalgError> {
        let field = PrimeField::new(self.modulus)?;
        Ok(self.matrix.reduce(&field))
    }
}

fn csv_err(e: impl std::fmt::Display) -> LinalgError {
    LinalgError::Csv(e.to_string())
}

pub fn write_csv<W: Write>(out: W, m: &CsvMatrix) -> Result<(), LinalgError> {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
    let header = [m.matrix.rows(), m.matrix.cols(), m.modulus as usize];
    w.write_record(header.iter().map(|x| x.to_string())).map_err(csv_err)?;
    let shown = if m.modulus > 0 {
        CsvMatrix::from_residues(&m.to_residues()?).matrix
    } else {
        m.matrix.clone()
    };
    for i in 0..shown.rows() {
        w.write_record(shown.row(i).iter().map(|x| x.to_string()))
            .map_err(csv_err)?;
    }
    w.flush().map_err(csv_err)
}

pub fn read_csv<R: Read>(input: R) -> Result<CsvMatrix, LinalgError> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(input);
    let mut records = r.records();
    let header = records.next().ok_or_else(|| csv_err("empty input"))?.map_err(csv_err)?;
    let dims: Vec<u64> = header
        .iter()
        .map(|f| f.parse::<u64>().map_err(csv_err))
        .collect::<Result<_, _>>()?;
    let [rows, cols, modulus] = dims[..] else {
        return Err(csv_err("header must be rows,cols,modulus"));
    };
    let (rows, cols) = (rows as usize, cols as usize);
    let mut data = Vec::with_capacity(rows);
    for (i, rec) in records.enumerate() {
        let rec = rec.map_err(csv_err)?;
        let row: Vec<BigInt> = rec
            .iter()
            .map(|f| f.parse::<BigInt>().map_err(csv_err))
            .collect::<Result<_, _>>()?;
        if row.len() != cols {
            return Err(LinalgError::RaggedRow {
                row: i,
                len: row.len(),
                cols,
            });
        }
        data.push(row);
    }
    if data.len() != rows {
        return Err(csv_err(format!("header declares {rows} rows, found {}", data.len())));
    }
    if modulus > 0 {
        PrimeField::new(modulus)?;
        let half = BigInt::from(modulus);
        if data
            .iter()
            .flatten()
            .any(|x| x.to_i64().is_none() || x.magnitude() >= half.magnitude())
        {
            return Err(csv_err("residue out of range"));
        }
    }
    Ok(CsvMatrix {
        modulus,
        matrix: IntMatrix::from_rows(data, cols)?,
    })
}
