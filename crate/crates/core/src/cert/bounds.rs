use num_bigint::BigInt;
use num_traits::{One, Pow};
use serde::Serialize;

use super::{sections, CertError, Variant};
use crate::poly::{parse_poly, MonomialOrder};

/// `deg X_m = m^2 - m + 3`.
pub fn degree_formula(m: u64) -> u64 {
    m * m - m + 3
}

/// `deg X_m - codim X_m + 1`, the Eisenbud-Goto bound for the surface
/// `X_m` in `P^4`.
pub fn eg_bound(m: u64) -> u64 {
    degree_formula(m) - 2 + 1
}

/// `(3m^2 - 7m)/2 + 1`, the lower bound for `maxdeg X_m` when `m = 6k`
/// and `L(k)`, `W(k)` are invertible. `m(3m - 7)` is always even.
pub fn maxdeg_lower_bound(m: u64) -> u64 {
    (3 * m * m - 7 * m) / 2 + 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjecturedRegularity {
    pub value: u64,
    /// Always `"conjectural"`: the formula is checked for small `m` only.
    pub status: &'static str,
}

/// The expected `reg X_m`: `(3m^2 - 7m)/2 + 1` when `3 | m`, one more
/// otherwise.
pub fn conjectured_regularity(m: u64) -> ConjecturedRegularity {
    let base = maxdeg_lower_bound(m);
    ConjecturedRegularity {
        value: if m.is_multiple_of(3) { base } else { base + 1 },
        status: "conjectural",
    }
}

/// `m^{(r+1) 2^n - 1}`, the regularity bound for an `n`-dimensional image
/// of a rational map to `P^r` by forms of degree `m`.
pub fn cc_bound(n: u32, r: u32, m: u64) -> Result<BigInt, CertError> {
    if n == 0 || r == 0 || m == 0 {
        return Err(CertError::InvalidArgument("n, r and m must be positive".into()));
    }
    let e = (r as u64 + 1)
        .checked_mul(1u64.checked_shl(n).filter(|_| n < 64).ok_or_else(|| too_big(n))?)
        .ok_or_else(|| too_big(n))?
        - 1;
    let e = u32::try_from(e).map_err(|_| too_big(n))?;
    Ok(if m == 1 { BigInt::one() } else { BigInt::from(m).pow(e) })
}

fn too_big(n: u32) -> CertError {
    CertError::InvalidArgument(format!("exponent overflows at n = {n}"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QOffY {
    pub m: u32,
    pub relation: String,
    /// The relation maps to zero under the `Y_m` sections.
    pub in_ideal: bool,
    /// Its value at `q = [0, 0, 1, -1, 0, 0]`.
    pub value_at_q: i64,
    pub q_off_y: bool,
}

/// `x_2^2 x_3 - x_0^3` lies in `I_{Y_m}` and is `-1` at `q = [0,0,1,-1,0,0]`,
/// so the projection centre of `Y_m -> X_m` is not on `Y_m`.
pub fn q_off_y(m: u32) -> Result<QOffY, CertError> {
    let map = sections(m, Variant::Y)?;
    let ring = map.target_ring(MonomialOrder::DegRevLex);
    let relation = parse_poly(&ring, "x2^2*x3 - x0^3")?;
    let in_ideal = map.substitute(&ring, &relation)?.is_zero();
    let q: Vec<BigInt> = [0, 0, 1, -1, 0, 0].into_iter().map(BigInt::from).collect();
    let value: i64 = (&ring.evaluate(&relation, &q)).try_into().expect("small value");
    Ok(QOffY {
        m,
        relation: ring.display(&relation),
        in_ideal,
        value_at_q: value,
        q_off_y: in_ideal && value != 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formulas_at_six() {
        assert_eq!(degree_formula(6), 33);
        assert_eq!(maxdeg_lower_bound(6), 34);
        assert_eq!(conjectured_regularity(6).value, 34);
        assert_eq!(conjectured_regularity(7).value, 51);
    }

    #[test]
    fn bound_values() {
        assert_eq!(cc_bound(2, 4, 6).unwrap(), BigInt::from(6u64).pow(19u32));
        assert_eq!(cc_bound(3, 5, 1).unwrap(), BigInt::one());
        assert!(cc_bound(0, 4, 6).is_err());
    }

    #[test]
    fn q_is_off_y6() {
        let r = q_off_y(6).unwrap();
        assert!(r.in_ideal);
        assert_eq!(r.value_at_q, -1);
        assert!(r.q_off_y);
    }
}
