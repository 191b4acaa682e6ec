use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::{GroebnerBasis, GroebnerError};
use crate::arith::{CoeffRing, PrimeField};
use crate::linalg::SparseModMatrix;
use crate::poly::{monomials_of_degree, PolyError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalGenerators {
    /// degree -> number of minimal generators
    pub degrees: BTreeMap<u32, usize>,
    pub maxdeg: Option<u32>,
    /// Primes the ranks of `S_1 I_{d-1}` were computed over.
    pub primes: Vec<u64>,
    /// False when two primes gave different ranks in some degree; the
    /// larger rank is used, since reduction mod p can only lose rank.
    pub primes_agree: bool,
}

/// Number of minimal generators of the homogeneous ideal with Groebner
/// basis `gb`, degree by degree: `dim I_d - dim S_1 I_{d-1}`.
///
/// `dim I_d` is counted exactly from the leading monomials. `S_1 I_{d-1}`
/// is spanned by the products `t g` with `g` in the basis and `deg t >= 1`;
/// its dimension is a rank, computed modulo each of `primes` (or modulo the
/// characteristic when the basis already lives over a prime field).
pub fn minimal_generator_degrees<R: CoeffRing>(
    gb: &GroebnerBasis<R>,
    primes: &[u64],
) -> Result<MinimalGenerators, GroebnerError> {
    let ring = gb.ring();
    let n = ring.nvars();
    let unit = vec![1u32; n];
    if let Some(i) = gb.polys().iter().position(|g| !g.is_homogeneous(&unit)) {
        return Err(PolyError::NotHomogeneous(format!("basis element {i}")).into());
    }
    let char_p = ring.coeffs().characteristic();
    let primes: Vec<u64> = if char_p != 0 { vec![char_p] } else { primes.to_vec() };
    let fields = primes
        .iter()
        .map(|&p| PrimeField::new(p).map_err(|e| PolyError::OutOfRange(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;

    let lms = gb.leading_monomials();
    let degs: Vec<u32> = gb.polys().iter().map(|g| g.total_degree().unwrap()).collect();
    let signed: Vec<Vec<BigInt>> = gb
        .polys()
        .iter()
        .map(|g| g.terms().iter().map(|(_, c)| ring.coeffs().to_signed(c)).collect())
        .collect();

    let mut degrees = BTreeMap::new();
    let mut agree = true;
    let (Some(&lo), Some(&hi)) = (degs.iter().min(), degs.iter().max()) else {
        return Ok(MinimalGenerators {
            degrees,
            maxdeg: None,
            primes,
            primes_agree: true,
        });
    };
    for d in lo..=hi {
        let monos = monomials_of_degree(n, d);
        let col: HashMap<_, usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let dim_i = monos.iter().filter(|m| lms.iter().any(|l| l.divides(m))).count();
        let mut ranks = Vec::with_capacity(fields.len());
        for field in &fields {
            let p = BigInt::from(field.modulus());
            let mut mat = SparseModMatrix::new(*field, monos.len());
            for (gi, g) in gb.polys().iter().enumerate() {
                if degs[gi] >= d {
                    continue;
                }
                let coeffs: Vec<u64> = signed[gi]
                    .iter()
                    .map(|c| (((c % &p) + &p) % &p).to_u64().unwrap())
                    .collect();
                for t in monomials_of_degree(n, d - degs[gi]) {
                    mat.push_row(
                        g.terms()
                            .iter()
                            .zip(&coeffs)
                            .map(|((m, _), &c)| (col[&m.mul(&t)], c))
                            .collect(),
                    );
                }
            }
            ranks.push(mat.rank());
        }
        if ranks.windows(2).any(|w| w[0] != w[1]) {
            agree = false;
        }
        let rank = ranks.iter().copied().max().unwrap_or(0);
        let count = dim_i - rank;
        if count > 0 {
            degrees.insert(d, count);
        }
    }
    let maxdeg = degrees.keys().next_back().copied();
    Ok(MinimalGenerators {
        degrees,
        maxdeg,
        primes,
        primes_agree: agree,
    })
}
