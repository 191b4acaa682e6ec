use serde::Serialize;

use super::CertError;
use crate::linalg::{rank_dense_exact, IntMatrix};
use crate::poly::{build_f, coeff_row, family_range, Context, Window};

/// The two families behind `x_0^t` and `x_0^t x_1` not occurring in a
/// relation: `s_0^{t-3u} s_2^{3u}` (A), and `s_0^{t-3u} s_1 s_2^{3u}` together
/// with `s_0^{t-6k+2-3u} s_2^{3u} s_4^{6k-1}` (B).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PowerFamily {
    A,
    B,
}

/// Coefficient matrix of the variant's restricted family for parameter `t`,
/// over the smallest step-3 window holding every exponent.
pub fn power_family_matrix(k: u64, t: u64, variant: PowerFamily) -> Result<IntMatrix, CertError> {
    let ctx = match variant {
        PowerFamily::A => Context::A { t },
        PowerFamily::B => Context::B { t },
    };
    let mut polys = Vec::new();
    for i in 1..=ctx.family_count() {
        for u in family_range(k, ctx, i)? {
            polys.push(build_f(k, ctx, i, u)?);
        }
    }
    let exps: Vec<u64> = polys
        .iter()
        .flat_map(|f| f.terms().iter().map(|(m, _)| m.exp(0) as u64))
        .collect();
    let (Some(&lo), Some(&hi)) = (exps.iter().min(), exps.iter().max()) else {
        return Ok(IntMatrix::zeros(0, 0));
    };
    let window = Window {
        start: lo,
        step: 3,
        len: ((hi - lo) / 3 + 1) as usize,
    };
    let rows = polys
        .iter()
        .map(|f| coeff_row(f, &window))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntMatrix::from_rows(rows, window.len)?)
}

/// The variant's family is linearly independent, i.e. its coefficient
/// matrix has full row rank over the rationals.
pub fn power_family_independent(k: u64, t: u64, variant: PowerFamily) -> Result<bool, CertError> {
    let m = power_family_matrix(k, t, variant)?;
    Ok(rank_dense_exact(&m) == m.rows())
}
