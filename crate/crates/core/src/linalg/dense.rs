use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{IntMatrix, LinalgError, ResidueMatrix};
use crate::arith::{primes_below, PrimeField};

/// Rank over the rationals by fraction-free (Bareiss) elimination.
///
/// Every intermediate entry is a minor of the input, so each division by the
/// previous pivot is exact.
pub fn bareiss_rank(m: &IntMatrix) -> usize {
    bareiss(m).0
}

/// Returns the rank and, for square input, the determinant.
fn bareiss(m: &IntMatrix) -> (usize, Option<BigInt>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> = m.row_vecs();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut sign_flip = false;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            sign_flip = !sign_flip;
        }
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = &pivot * &row[j] - &lead * &pivot_row[j];
                let (q, r) = v.div_rem(&prev);
                debug_assert!(r.is_zero(), "inexact Bareiss division");
                row[j] = q;
            }
        }
        prev = pivot;
        rank += 1;
    }
    let det = (rows == cols).then(|| {
        if rank < rows {
            BigInt::zero()
        } else if sign_flip {
            -prev
        } else {
            prev
        }
    });
    (rank, det)
}

/// Exact rank over the rationals.
///
/// A full rank modulo a prime already proves full rank over the rationals
/// (reduction can only lose rank), so one modular pass is tried first and
/// Bareiss elimination runs only when that pass is inconclusive.
pub fn rank_dense_exact(m: &IntMatrix) -> usize {
    let full = m.rows().min(m.cols());
    let field = PrimeField::new(primes_below(1 << 62, 1)[0]).expect("prime");
    if rank_dense_mod_p(&m.reduce(&field)) == full {
        return full;
    }
    bareiss_rank(m)
}

/// Montgomery arithmetic for odd moduli below `2^62`, used in the dense
/// modular kernels where `u128 %` would dominate.
#[derive(Clone, Copy)]
struct Montgomery {
    p: u64,
    /// `-p^{-1} mod 2^64`
    neg_inv: u64,
    /// `2^128 mod p`
    r2: u64,
}

impl Montgomery {
    fn new(p: u64) -> Montgomery {
        debug_assert!(p % 2 == 1 && p < (1 << 62));
        let mut inv: u64 = 1;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        let r = ((1u128 << 64) % p as u128) as u64;
        let r2 = ((r as u128 * r as u128) % p as u128) as u64;
        Montgomery {
            p,
            neg_inv: inv.wrapping_neg(),
            r2,
        }
    }

    #[inline(always)]
    fn redc(&self, t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(self.neg_inv);
        let u = ((t + m as u128 * self.p as u128) >> 64) as u64;
        if u >= self.p {
            u - self.p
        } else {
            u
        }
    }

    #[inline(always)]
    fn mul(&self, a: u64, b: u64) -> u64 {
        self.redc(a as u128 * b as u128)
    }

    fn to_mont(&self, a: u64) -> u64 {
        self.mul(a, self.r2)
    }

    fn from_mont(&self, a: u64) -> u64 {
        self.redc(a as u128)
    }

    #[inline(always)]
    fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
}

/// Gaussian elimination over `F_p` on a row-major copy. Returns the rank and
/// the product of pivots with the permutation sign (the determinant when
/// square and of full rank).
fn eliminate_mod_p(field: &PrimeField, rows: usize, cols: usize, data: &[u64]) -> (usize, u64) {
    let p = field.modulus();
    if p == 2 || p >= (1 << 62) {
        return eliminate_plain(field, rows, cols, data.to_vec());
    }
    let mont = Montgomery::new(p);
    let mut a: Vec<u64> = data.iter().map(|&x| mont.to_mont(x)).collect();
    let mut rank = 0;
    let mut det = 1u64;
    let mut negate = false;
    let mut nz: Vec<usize> = Vec::with_capacity(cols);
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&i| a[i * cols + c] != 0) else {
            continue;
        };
        if piv != rank {
            for j in 0..cols {
                a.swap(piv * cols + j, rank * cols + j);
            }
            negate = !negate;
        }
        let pv = mont.from_mont(a[rank * cols + c]);
        det = field.mul(det, pv);
        let inv_m = mont.to_mont(field.inv(pv));
        nz.clear();
        nz.extend((c + 1..cols).filter(|&j| a[rank * cols + j] != 0));
        let (top, rest) = a.split_at_mut((rank + 1) * cols);
        let prow = &top[rank * cols..];
        for row in rest.chunks_exact_mut(cols) {
            let lead = row[c];
            if lead == 0 {
                continue;
            }
            let f = mont.mul(lead, inv_m);
            row[c] = 0;
            for &j in &nz {
                row[j] = mont.sub(row[j], mont.mul(f, prow[j]));
            }
        }
        rank += 1;
    }
    if negate {
        det = field.neg(det);
    }
    (rank, det)
}

fn eliminate_plain(field: &PrimeField, rows: usize, cols: usize, mut a: Vec<u64>) -> (usize, u64) {
    let mut rank = 0;
    let mut det = 1u64;
    let mut negate = false;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&i| a[i * cols + c] != 0) else {
            continue;
        };
        if piv != rank {
            for j in 0..cols {
                a.swap(piv * cols + j, rank * cols + j);
            }
            negate = !negate;
        }
        let pv = a[rank * cols + c];
        det = field.mul(det, pv);
        let inv = field.inv(pv);
        for i in rank + 1..rows {
            let lead = a[i * cols + c];
            if lead == 0 {
                continue;
            }
            let f = field.mul(lead, inv);
            for j in c..cols {
                let t = field.mul(f, a[rank * cols + j]);
                a[i * cols + j] = field.sub(a[i * cols + j], t);
            }
        }
        rank += 1;
    }
    if negate {
        det = field.neg(det);
    }
    (rank, det)
}

pub fn rank_dense_mod_p(m: &ResidueMatrix) -> usize {
    eliminate_mod_p(m.field(), m.rows(), m.cols(), m.data()).0
}

/// Determinant of a square matrix modulo `p`.
pub fn det_mod_p(m: &ResidueMatrix) -> Result<u64, LinalgError> {
    if m.rows() != m.cols() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let (rank, det) = eliminate_mod_p(m.field(), m.rows(), m.cols(), m.data());
    Ok(if rank < m.rows() { 0 } else { det })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvertibilityMethod {
    /// Nonzero determinant modulo `prime`.
    ModularDeterminant,
    /// Fraction-free elimination over the integers.
    ExactElimination,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvertibilityCertificate {
    pub verdict: bool,
    pub method: InvertibilityMethod,
    /// The prime whose nonzero determinant certifies the verdict.
    pub prime: Option<u64>,
    pub primes_tried: Vec<u64>,
}

/// Number of primes tried before falling back to exact elimination.
const MODULAR_ATTEMPTS: usize = 3;

/// Decides `det m != 0` over the rationals.
///
/// The primes are the largest ones below `2^62`, fixed so that reports are
/// reproducible. A nonzero determinant modulo any of them settles the
/// question; if all three vanish, Bareiss elimination decides.
pub fn is_invertible_exact(m: &IntMatrix) -> Result<InvertibilityCertificate, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let mut tried = Vec::new();
    for p in primes_below(1 << 62, MODULAR_ATTEMPTS) {
        tried.push(p);
        let field = PrimeField::new(p)?;
        if det_mod_p(&m.reduce(&field))? != 0 {
            return Ok(InvertibilityCertificate {
                verdict: true,
                method: InvertibilityMethod::ModularDeterminant,
                prime: Some(p),
                primes_tried: tried,
            });
        }
    }
    let (_, det) = bareiss(m);
    Ok(InvertibilityCertificate {
        verdict: !det.expect("square").is_zero(),
        method: InvertibilityMethod::ExactElimination,
        prime: None,
        primes_tried: tried,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, rank: usize) -> IntMatrix {
        // product of a rows x rank and a rank x cols factor
        let a: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..rank).map(|_| rng.gen_range(-5..=5)).collect())
            .collect();
        let b: Vec<Vec<i64>> = (0..rank)
            .map(|_| (0..cols).map(|_| rng.gen_range(-5..=5)).collect())
            .collect();
        let rows_v = (0..rows)
            .map(|i| {
                (0..cols)
                    .map(|j| BigInt::from((0..rank).map(|t| a[i][t] * b[t][j]).sum::<i64>()))
                    .collect()
            })
            .collect();
        IntMatrix::from_rows(rows_v, cols).unwrap()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(bareiss_rank(&IntMatrix::identity(5)), 5);
        let m = IntMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(bareiss_rank(&m), 1);
        assert_eq!(rank_dense_exact(&m), 1);
        assert_eq!(bareiss_rank(&IntMatrix::zeros(3, 4)), 0);
        let m = IntMatrix::from_i64_rows(&[&[0, 0, 1], &[0, 2, 3], &[0, 4, 7]]).unwrap();
        assert_eq!(bareiss_rank(&m), 2);
    }

    #[test]
    fn determinants() {
        let m = IntMatrix::from_i64_rows(&[&[0, 2, 1], &[3, 0, 0], &[1, 1, 1]]).unwrap();
        // det = -3 * (2*1 - 1*1) = -3
        assert_eq!(bareiss(&m).1, Some(BigInt::from(-3)));
        let f = PrimeField::new(7).unwrap();
        assert_eq!(det_mod_p(&m.reduce(&f)).unwrap(), 4);
        let f = PrimeField::new(primes_below(1 << 62, 1)[0]).unwrap();
        assert_eq!(det_mod_p(&m.reduce(&f)).unwrap(), f.modulus() - 3);
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(det_mod_p(&m.reduce(&f2)).unwrap(), 1);
    }

    #[test]
    fn invertibility() {
        let z = IntMatrix::zeros(4, 4);
        let c = is_invertible_exact(&z).unwrap();
        assert!(!c.verdict);
        assert_eq!(c.method, InvertibilityMethod::ExactElimination);
        let c = is_invertible_exact(&IntMatrix::identity(4)).unwrap();
        assert!(c.verdict);
        assert_eq!(c.primes_tried.len(), 1);
        assert!(is_invertible_exact(&IntMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn random_rank_agreement() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let small = PrimeField::new(5).unwrap();
        for trial in 0..40 {
            let rows = rng.gen_range(1..9);
            let cols = rng.gen_range(1..9);
            let r = rng.gen_range(0..=rows.min(cols));
            let m = random_matrix(&mut rng, rows, cols, r);
            let exact = bareiss_rank(&m);
            assert!(exact <= r, "trial {trial}");
            assert_eq!(rank_dense_exact(&m), exact);
            assert!(rank_dense_mod_p(&m.reduce(&small)) <= exact);
            let sq = random_matrix(&mut rng, rows, rows, r);
            let det = bareiss(&sq).1.unwrap();
            let p = primes_below(1 << 62, 1)[0];
            let f = PrimeField::new(p).unwrap();
            let expect = ((det % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
            assert_eq!(BigInt::from(det_mod_p(&sq.reduce(&f)).unwrap()), expect);
            let mut perm: Vec<usize> = (0..rows).collect();
            perm.reverse();
            let cols_all: Vec<usize> = (0..cols).rev().collect();
            assert_eq!(bareiss_rank(&m.select(&perm, &cols_all)), exact);
        }
    }
}
