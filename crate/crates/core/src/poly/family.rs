//! The power products `s_0^{a_0} s_1^{a_1} s_2^{a_2} s_3^{a_3} s_4^{a_4}` of the
//! `X_{6k}` sections that appear in the linear-independence arguments, restricted
//! to `y_0 = y_1 = 1`.
//!
//! Under that restriction the sections become
//! `s_0 = y_2`, `s_1 = s_3 = 1`, `s_2 = 1 + y_2^3`, `s_4 = y_2^{6k-1}`,
//! so every member is `y_2^{a_0 + (6k-1) a_4} (1 + y_2^3)^{a_2}`.

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::Zero;

use super::monomial::Monomial;
use super::ring::{PolyRing, SparsePoly};
use super::{MonomialOrder, PolyError};
use crate::arith::{binom, IntegerCoeffs};

/// Which argument a family belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Context {
    /// Rows of `N(k)`, `L(k)`: monomials of degree `54k^2 - 21k + 1`.
    L,
    /// Rows of `W(k)` before peeling: degree `54k^2 - 21k`.
    W,
    /// `s_0^{t-3u} s_2^{3u}`, one family.
    A { t: u64 },
    /// `s_0^{t-3u} s_1 s_2^{3u}` and `s_0^{t-6k+2-3u} s_2^{3u} s_4^{6k-1}`.
    B { t: u64 },
}

impl Context {
    pub fn family_count(&self) -> usize {
        match self {
            Context::L | Context::W => 4,
            Context::A { .. } => 1,
            Context::B { .. } => 2,
        }
    }
}

fn quad(k: u64, a: i64, b: i64, c: i64) -> i64 {
    let k = k as i64;
    a * k * k + b * k + c
}

/// Admissible `u` for family `i` (1-based) in `ctx`. Empty ranges are
/// returned as `1..=0`.
pub fn family_range(k: u64, ctx: Context, i: usize) -> Result<RangeInclusive<u64>, PolyError> {
    check_family(k, ctx, i)?;
    let hi: i64 = match (ctx, i) {
        (Context::L, 1) => quad(k, 6, -1, -1),
        (Context::L, 2) => quad(k, 18, -9, 0),
        (Context::L, 3) => quad(k, 18, -10, 1),
        (Context::L, 4) => quad(k, 12, -7, 0),
        (Context::W, 1) => quad(k, 18, -7, -1),
        (Context::W, 2) => quad(k, 18, -9, -1),
        (Context::W, 3) => quad(k, 18, -9, 0),
        (Context::W, 4) => quad(k, 18, -11, 0),
        (Context::A { t } | Context::B { t }, 1) => (t / 3) as i64,
        (Context::B { t }, 2) => (t as i64 - 6 * k as i64 + 2).div_euclid(3),
        _ => unreachable!("checked above"),
    };
    #[allow(clippy::reversed_empty_ranges)]
    Ok(if hi < 0 { 1..=0 } else { 0..=hi as u64 })
}

fn check_family(k: u64, ctx: Context, i: usize) -> Result<(), PolyError> {
    if k == 0 {
        return Err(PolyError::OutOfRange("k must be positive".into()));
    }
    if i == 0 || i > ctx.family_count() {
        return Err(PolyError::OutOfRange(format!("family {i} in context {ctx:?}")));
    }
    Ok(())
}

/// Exponents `(a_0, .., a_4)` of the `x`-monomial whose image is `f_i(u)`.
pub fn family_monomial(k: u64, ctx: Context, i: usize, u: u64) -> Result<[u64; 5], PolyError> {
    let range = family_range(k, ctx, i)?;
    if !range.contains(&u) {
        return Err(PolyError::OutOfRange(format!(
            "u = {u} outside {range:?} for family {i} in context {ctx:?}"
        )));
    }
    let shift: i64 = if ctx == Context::W { 1 } else { 0 };
    let u3 = 3 * u as i64;
    let k6 = 6 * k as i64;
    let x0 = |v: i64| -> u64 {
        let e = v - u3 - shift;
        debug_assert!(e >= 0);
        e as u64
    };
    let u3 = u3 as u64;
    let k6 = k6 as u64;
    Ok(match (ctx, i) {
        (Context::L | Context::W, 1) => [x0(quad(k, 54, -21, -1)), 2, u3, 0, 0],
        (Context::L | Context::W, 2) => [x0(quad(k, 54, -27, 0)), 0, u3 + 2, 1, k6 - 2],
        (Context::L | Context::W, 3) => [x0(quad(k, 54, -27, 1)), 1, u3, 0, k6 - 1],
        (Context::L | Context::W, 4) => [x0(quad(k, 54, -33, 3)), 0, u3, 0, 2 * k6 - 2],
        (Context::A { t }, 1) => [t - u3, 0, u3, 0, 0],
        (Context::B { t }, 1) => [t - u3, 1, u3, 0, 0],
        (Context::B { t }, 2) => [t + 2 - k6 - u3, 0, u3, 0, k6 - 1],
        _ => unreachable!("checked by family_range"),
    })
}

/// The one-variable ring `k[y_2]` the restricted families live in.
pub fn restricted_ring() -> PolyRing<IntegerCoeffs> {
    PolyRing::new(IntegerCoeffs, vec!["y2".into()], MonomialOrder::Lex).expect("one variable")
}

/// `f_i(u)` in context `ctx`, expanded in `k[y_2]`.
pub fn build_f(k: u64, ctx: Context, i: usize, u: u64) -> Result<SparsePoly<BigInt>, PolyError> {
    let a = family_monomial(k, ctx, i, u)?;
    let shift = a[0] + (6 * k - 1) * a[4];
    let e = a[2];
    let top = shift + 3 * e;
    if top > u16::MAX as u64 {
        return Err(PolyError::OutOfRange(format!("y2 exponent {top} too large")));
    }
    let ring = restricted_ring();
    let terms = (0..=e)
        .map(|j| (Monomial::var_pow(0, (shift + 3 * j) as u32), binom(e, j)))
        .collect();
    Ok(ring.from_terms(terms))
}

/// Arithmetic progression of `y_2` exponents indexing matrix columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub start: u64,
    pub step: u64,
    pub len: usize,
}

impl Window {
    /// Columns of `N(k)` and `L(k)`.
    pub fn l(k: u64) -> Window {
        Window {
            start: quad(k, 36, -18, 2) as u64,
            step: 3,
            len: quad(k, 54, -27, 3) as usize,
        }
    }

    /// Columns of `W(k)`.
    pub fn w(k: u64) -> Window {
        Window {
            start: quad(k, 36, -18, 4) as u64,
            step: 3,
            len: quad(k, 54, -27, 0) as usize,
        }
    }

    /// 0-based column of `exponent`, if it is on the progression and inside.
    pub fn column(&self, exponent: u64) -> Option<usize> {
        if exponent < self.start || !(exponent - self.start).is_multiple_of(self.step) {
            return None;
        }
        let c = ((exponent - self.start) / self.step) as usize;
        (c < self.len).then_some(c)
    }

    pub fn exponent(&self, column: usize) -> u64 {
        self.start + self.step * column as u64
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}..={} step {}",
            self.start,
            self.exponent(self.len.saturating_sub(1)),
            self.step
        )
    }
}

/// Dense coefficient vector of a `k[y_2]` polynomial over `window`.
pub fn coeff_row(f: &SparsePoly<BigInt>, window: &Window) -> Result<Vec<BigInt>, PolyError> {
    let mut row = vec![BigInt::zero(); window.len];
    for (m, c) in f.terms() {
        let e = m.exp(0) as u64;
        if m.degree() as u64 != e {
            return Err(PolyError::RingMismatch("expected a polynomial in y2 only".into()));
        }
        let col = window.column(e).ok_or_else(|| PolyError::OutsideWindow {
            exponent: e,
            window: window.to_string(),
        })?;
        row[col] = c.clone();
    }
    Ok(row)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(f: &SparsePoly<BigInt>) -> String {
        restricted_ring().display(f)
    }

    #[test]
    fn small_members() {
        assert_eq!(show(&build_f(1, Context::L, 1, 0).unwrap()), "y2^32");
        assert_eq!(
            show(&build_f(1, Context::L, 1, 1).unwrap()),
            "y2^38 + 3*y2^35 + 3*y2^32 + y2^29"
        );
        assert_eq!(show(&build_f(1, Context::L, 2, 0).unwrap()), "y2^53 + 2*y2^50 + y2^47");
        assert!(build_f(1, Context::L, 1, 5).is_err());
        assert!(build_f(1, Context::L, 5, 0).is_err());
        assert!(build_f(1, Context::A { t: 5 }, 2, 0).is_err());
    }

    #[test]
    fn monomials_have_context_degree() {
        for k in 1..=4 {
            for (ctx, deg) in [(Context::L, quad(k, 54, -21, 1)), (Context::W, quad(k, 54, -21, 0))] {
                for i in 1..=4 {
                    for u in family_range(k, ctx, i).unwrap() {
                        let a = family_monomial(k, ctx, i, u).unwrap();
                        assert_eq!(a.iter().sum::<u64>() as i64, deg);
                        // y_0-degree (6k-1)a_1 + 6k a_3 + a_4 is 12k-2 throughout
                        assert_eq!((6 * k - 1) * a[1] + 6 * k * a[3] + a[4], 12 * k - 2);
                    }
                }
            }
        }
    }

    #[test]
    fn windows_and_rows() {
        let w = Window::l(1);
        assert_eq!((w.start, w.len), (20, 30));
        let row = coeff_row(&build_f(1, Context::L, 1, 0).unwrap(), &w).unwrap();
        assert_eq!(row.iter().position(|c| !c.is_zero()), Some(4));
        let row = coeff_row(&build_f(1, Context::L, 2, 0).unwrap(), &w).unwrap();
        let nz: Vec<_> = row.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        assert_eq!(nz.len(), 3);
        assert_eq!(nz[0].0, 9);
        assert_eq!(
            coeff_row(&restricted_ring().zero(), &w).unwrap(),
            vec![BigInt::zero(); 30]
        );
        let off = restricted_ring().var(0);
        assert!(matches!(coeff_row(&off, &w), Err(PolyError::OutsideWindow { .. })));
    }

    #[test]
    fn l_window_bounds() {
        for k in 1..=4u64 {
            let (mut lo, mut hi) = (u64::MAX, 0);
            for i in 1..=4 {
                for u in family_range(k, Context::L, i).unwrap() {
                    let f = build_f(k, Context::L, i, u).unwrap();
                    for (m, _) in f.terms() {
                        lo = lo.min(m.degree() as u64);
                        hi = hi.max(m.degree() as u64);
                    }
                }
            }
            assert_eq!(lo as i64, quad(k, 36, -18, 2));
            assert_eq!(hi as i64, quad(k, 198, -99, 8));
        }
    }

    #[test]
    fn context_a_support() {
        for t in 0..=60 {
            for u in family_range(1, Context::A { t }, 1).unwrap() {
                let f = build_f(1, Context::A { t }, 1, u).unwrap();
                for (m, _) in f.terms() {
                    let e = m.degree() as u64;
                    assert!(e + 3 * u >= t && e <= t + 6 * u && (e + 3 * u - t).is_multiple_of(3));
                }
            }
        }
    }
}
