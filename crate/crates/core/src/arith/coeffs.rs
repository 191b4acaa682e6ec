use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::PrimeField;

/// Coefficient domain for sparse polynomials and the Gröbner engine.
///
/// Two domains are in use: [`IntegerCoeffs`], which carries rational
/// polynomials as primitive integer polynomials (fraction-free), and
/// [`PrimeField`]. The reduction hooks let the engine stay generic:
/// `cancel_factors` gives multipliers `(a, b)` with `a * lc_f == b * lc_g`,
/// and `normalize` picks the canonical scalar multiple of a polynomial.
pub trait CoeffRing: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    /// Sign and magnitude for printing; field residues print symmetrically.
    fn to_signed(&self, a: &Self::Elem) -> BigInt;

    fn cancel_factors(&self, lc_f: &Self::Elem, lc_g: &Self::Elem) -> (Self::Elem, Self::Elem);

    fn normalize(&self, coeffs: &mut [Self::Elem]);

    /// Characteristic; 0 for the integers.
    fn characteristic(&self) -> u64;
}

/// Integer coefficients standing in for the rationals: every polynomial of a
/// Gröbner computation is kept primitive with a positive leading coefficient.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IntegerCoeffs;

impl CoeffRing for IntegerCoeffs {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigInt) -> bool {
        a.is_one()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn from_bigint(&self, n: &BigInt) -> BigInt {
        n.clone()
    }

    fn to_signed(&self, a: &BigInt) -> BigInt {
        a.clone()
    }

    fn cancel_factors(&self, lc_f: &BigInt, lc_g: &BigInt) -> (BigInt, BigInt) {
        let g = lc_f.gcd(lc_g);
        let (mut a, mut b) = (lc_g / &g, lc_f / &g);
        if a.is_negative() {
            a = -a;
            b = -b;
        }
        (a, b)
    }

    fn normalize(&self, coeffs: &mut [BigInt]) {
        let Some(first) = coeffs.first() else { return };
        let mut content = first.abs();
        for c in coeffs.iter().skip(1) {
            if content.is_one() {
                break;
            }
            content = content.gcd(c);
        }
        let flip = first.is_negative();
        if content.is_one() && !flip {
            return;
        }
        for c in coeffs.iter_mut() {
            if !content.is_one() {
                *c = &*c / &content;
            }
            if flip {
                *c = -&*c;
            }
        }
    }

    fn characteristic(&self) -> u64 {
        0
    }
}

impl CoeffRing for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn is_one(&self, a: &u64) -> bool {
        *a == 1
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        PrimeField::add(self, *a, *b)
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        PrimeField::sub(self, *a, *b)
    }

    fn neg(&self, a: &u64) -> u64 {
        PrimeField::neg(self, *a)
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        PrimeField::mul(self, *a, *b)
    }

    fn from_bigint(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.modulus());
        n.mod_floor(&p).to_u64().expect("residue fits in u64")
    }

    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }

    fn to_signed(&self, a: &u64) -> BigInt {
        BigInt::from(self.symmetric(*a))
    }

    fn cancel_factors(&self, lc_f: &u64, lc_g: &u64) -> (u64, u64) {
        (1, PrimeField::mul(self, *lc_f, self.inv(*lc_g)))
    }

    fn normalize(&self, coeffs: &mut [u64]) {
        let Some(&lead) = coeffs.first() else { return };
        if lead == 1 {
            return;
        }
        let inv = self.inv(lead);
        for c in coeffs.iter_mut() {
            *c = PrimeField::mul(self, *c, inv);
        }
    }

    fn characteristic(&self) -> u64 {
        self.modulus()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_normalize_is_primitive_positive() {
        let mut v: Vec<BigInt> = [-6, 4, -10].iter().map(|&x| BigInt::from(x)).collect();
        IntegerCoeffs.normalize(&mut v);
        assert_eq!(v, vec![BigInt::from(3), BigInt::from(-2), BigInt::from(5)]);
    }

    #[test]
    fn cancel_factors_kill_leading_terms() {
        let z = IntegerCoeffs;
        let (a, b) = z.cancel_factors(&BigInt::from(6), &BigInt::from(-4));
        assert_eq!(&a * BigInt::from(6), &b * BigInt::from(-4));
        assert!(a.is_positive());
        let f = PrimeField::new(7).unwrap();
        let (a, b) = f.cancel_factors(&3, &5);
        assert_eq!(f.mul(a, 3), f.mul(b, 5));
    }
}
