use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::CertError;
use crate::arith::{IntegerCoeffs, PrimeField};
use crate::linalg::SparseModMatrix;
use crate::poly::{monomials_of_degree, Monomial, SectionMap, SparsePoly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertDim {
    pub degree: u32,
    /// `dim (S/I)_d`: the largest of the per-prime ranks.
    pub dim: usize,
    pub ranks: Vec<(u64, usize)>,
    /// Distinct ranks mean some prime divides a minor; the larger is kept.
    pub primes_agree: bool,
}

/// The images of all degree-`d` monomials, as coefficient rows over the
/// monomials of degree `d m` that occur.
fn product_expansion(map: &SectionMap<IntegerCoeffs>, d: u32) -> (Vec<Vec<(usize, BigInt)>>, usize) {
    let ring = map.source();
    let n = map.target_count();
    let powers: Vec<Vec<SparsePoly<BigInt>>> = map
        .sections()
        .iter()
        .map(|s| {
            let mut p = vec![ring.one()];
            for e in 1..=d {
                let next = ring.mul(&p[e as usize - 1], s);
                p.push(next);
            }
            p
        })
        .collect();
    let mut col: HashMap<Monomial, usize> = HashMap::new();
    let mut rows = Vec::new();
    for a in monomials_of_degree(n, d) {
        let mut img = ring.one();
        for (i, pw) in powers.iter().enumerate() {
            let e = a.exp(i) as usize;
            if e > 0 {
                img = ring.mul(&img, &pw[e]);
            }
        }
        let row = img
            .into_terms()
            .into_iter()
            .map(|(m, c)| {
                let next = col.len();
                (*col.entry(m).or_insert(next), c)
            })
            .collect();
        rows.push(row);
    }
    (rows, col.len())
}

/// `dim_k (S/I_X)_d` for the image `X` of `map`: the rank of the images
/// of the degree-`d` monomials, computed modulo each prime.
///
/// A rank mod `p` never exceeds the rank over `Q`; they differ only when
/// `p` divides every maximal nonzero minor, so agreement of two large
/// primes is strong but not conclusive evidence.
pub fn hilbert_dim(map: &SectionMap<IntegerCoeffs>, d: u32, primes: &[u64]) -> Result<HilbertDim, CertError> {
    if primes.is_empty() {
        return Err(CertError::InvalidArgument("no primes given".into()));
    }
    let (rows, cols) = product_expansion(map, d);
    let mut ranks = Vec::with_capacity(primes.len());
    for &p in primes {
        let field = PrimeField::new(p)?;
        let pb = BigInt::from(p);
        let mut mat = SparseModMatrix::new(field, cols);
        for row in &rows {
            mat.push_row(
                row.iter()
                    .map(|(c, v)| {
                        let r = ((v % &pb) + &pb) % &pb;
                        (*c, r.to_u64().expect("reduced below p"))
                    })
                    .collect(),
            );
        }
        mat.dedup_rows();
        ranks.push((p, mat.rank_by_components()));
    }
    let dim = ranks.iter().map(|r| r.1).max().unwrap();
    Ok(HilbertDim {
        degree: d,
        dim,
        primes_agree: ranks.windows(2).all(|w| w[0].1 == w[1].1),
        ranks,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H1Entry {
    pub degree: u32,
    pub hilbert_polynomial: String,
    pub hilbert_dim: usize,
    /// `P(d) - dim (S/I)_d`.
    pub h1: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertFit {
    pub samples: Vec<HilbertDim>,
    /// Coefficients of `P(d)`, constant term first, as exact fractions.
    pub coefficients: Vec<String>,
    /// `dim! * leading coefficient`.
    pub degree: String,
    /// Every sample beyond the first `dim + 1` lies on the interpolant.
    pub consistent: bool,
    pub h1: Vec<H1Entry>,
}

/// Coefficients of the polynomial of degree `< xs.len()` through the
/// points, by Newton's divided differences.
fn interpolate(xs: &[i64], ys: &[BigRational]) -> Vec<BigRational> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / BigRational::from_integer((xs[i] - xs[i - j]).into());
        }
    }
    // expand the Newton form into the monomial basis
    let mut coeffs = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // coeffs = coeffs * (x - xs[i]) + dd[i]
        let shift = BigRational::from_integer(xs[i].into());
        let mut next = vec![BigRational::zero(); n];
        for k in 0..n {
            if k + 1 < n {
                next[k + 1] += &coeffs[k];
            }
            next[k] -= &coeffs[k] * &shift;
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    coeffs
}

fn evaluate(coeffs: &[BigRational], x: i64) -> BigRational {
    let x = BigRational::from_integer(x.into());
    coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * &x + c)
}

/// Fits the Hilbert polynomial of the image of `map` through the values at
/// `d_start .. d_start + count` and reports `h^1(I_X(d)) = P(d) - dim (S/I)_d`
/// at `h1_degrees`.
///
/// The image is assumed to have the dimension of the source (`P^n` maps
/// generically finitely), so `P` has degree `n` and `count` must exceed `n`.
pub fn hilbert_poly_fit(
    map: &SectionMap<IntegerCoeffs>,
    d_start: u32,
    count: usize,
    h1_degrees: &[u32],
    primes: &[u64],
) -> Result<HilbertFit, CertError> {
    let dim = map.source().nvars() - 1;
    if count <= dim {
        return Err(CertError::InvalidArgument(format!(
            "{count} samples cannot fix a polynomial of degree {dim}"
        )));
    }
    let samples = (0..count as u32)
        .map(|i| hilbert_dim(map, d_start + i, primes))
        .collect::<Result<Vec<_>, _>>()?;
    let xs: Vec<i64> = samples.iter().map(|s| s.degree as i64).collect();
    let ys: Vec<BigRational> = samples
        .iter()
        .map(|s| BigRational::from_integer(s.dim.into()))
        .collect();
    let mut coeffs = interpolate(&xs[..=dim], &ys[..=dim]);
    coeffs.truncate(dim + 1);
    let consistent = xs.iter().zip(&ys).all(|(&x, y)| &evaluate(&coeffs, x) == y);
    let factorial: BigInt = (1..=dim as u64).map(BigInt::from).product();
    let degree = &coeffs[dim] * BigRational::from_integer(factorial);
    let h1 = h1_degrees
        .iter()
        .map(|&d| {
            let hd = hilbert_dim(map, d, primes)?;
            let p = evaluate(&coeffs, d as i64);
            Ok(H1Entry {
                degree: d,
                h1: (&p - BigRational::from_integer(hd.dim.into())).to_string(),
                hilbert_polynomial: p.to_string(),
                hilbert_dim: hd.dim,
            })
        })
        .collect::<Result<Vec<_>, CertError>>()?;
    Ok(HilbertFit {
        samples,
        coefficients: coeffs.iter().map(|c| c.to_string()).collect(),
        degree: degree.to_string(),
        consistent,
        h1,
    })
}
