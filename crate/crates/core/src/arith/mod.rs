//! Exact scalar arithmetic: big integers and rationals (via `num`), prime
//! fields, binomial coefficients and the base-3 vanishing tests for the
//! binomials that fill the certificate matrices.

mod coeffs;
mod fp;

pub use coeffs::{CoeffRing, IntegerCoeffs};
pub use fp::{is_prime, prev_prime, primes_below, Fp, PrimeField};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("{0} is not a prime below 2^63")]
    NotPrime(u64),
}

/// `C(n, k)`, zero when `k > n`.
///
/// Uses the multiplicative recurrence `C(n-k+i, i) = C(n-k+i-1, i-1) (n-k+i) / i`,
/// every intermediate value being itself a binomial coefficient, so the
/// division is exact and no factorial is ever formed.
pub fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// `C(n, k) mod p` by Lucas' theorem: the product of the digit-wise binomials
/// in base `p`.
pub fn binom_mod_p(n: u64, k: u64, p: u64) -> Result<Fp, ArithError> {
    let field = PrimeField::new(p)?;
    Ok(field.elem(lucas(&field, n, k)))
}

fn lucas(field: &PrimeField, mut n: u64, mut k: u64) -> u64 {
    let p = field.modulus();
    let mut acc = 1 % p;
    while k > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        acc = field.mul(acc, small_binom_mod(field, nd, kd));
        n /= p;
        k /= p;
    }
    acc
}

/// `C(n, k) mod p` for `k <= n < p`, where no denominator factor vanishes.
fn small_binom_mod(field: &PrimeField, n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut num = 1;
    let mut den = 1;
    for i in 0..k {
        num = field.mul(num, field.reduce_u64(n - i));
        den = field.mul(den, field.reduce_u64(i + 1));
    }
    field.mul(num, field.inv(den))
}

/// Factorial tables for bulk `C(n, k) mod p` lookups.
///
/// Falls back to Lucas digits when `max_n >= p`, so it is valid for every
/// prime, including `p = 3`.
#[derive(Clone, Debug)]
pub struct BinomialTable {
    field: PrimeField,
    fact: Vec<u64>,
    inv_fact: Vec<u64>,
}

impl BinomialTable {
    pub fn new(field: PrimeField, max_n: u64) -> Self {
        let top = max_n.min(field.modulus() - 1) as usize;
        let mut fact = vec![1u64; top + 1];
        for i in 1..=top {
            fact[i] = field.mul(fact[i - 1], i as u64);
        }
        let mut inv_fact = vec![1u64; top + 1];
        inv_fact[top] = field.inv(fact[top]);
        for i in (1..=top).rev() {
            inv_fact[i - 1] = field.mul(inv_fact[i], i as u64);
        }
        BinomialTable { field, fact, inv_fact }
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn get(&self, n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        if (n as usize) < self.fact.len() {
            let (n, k) = (n as usize, k as usize);
            return self
                .field
                .mul(self.fact[n], self.field.mul(self.inv_fact[k], self.inv_fact[n - k]));
        }
        let p = self.field.modulus();
        let (mut n, mut k) = (n, k);
        let mut acc = 1 % p;
        while k > 0 {
            let (nd, kd) = (n % p, k % p);
            if kd > nd {
                return 0;
            }
            acc = self.field.mul(acc, self.get(nd, kd));
            n /= p;
            k /= p;
        }
        acc
    }
}

/// The two binomial shapes that populate the certificate matrices:
/// `C(3a, b)` (rows of the first, third and fourth blocks) and `C(3a+2, b)`
/// (rows of the second block).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BinomialForm {
    ThreeA,
    ThreeAPlusTwo,
}

impl BinomialForm {
    pub fn top(&self, a: u64) -> u64 {
        match self {
            BinomialForm::ThreeA => 3 * a,
            BinomialForm::ThreeAPlusTwo => 3 * a + 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mod3Prediction {
    PredictsZero,
    NoPrediction,
}

/// Sufficient digit conditions for `C(3a, b)` resp. `C(3a+2, b)` to vanish
/// mod 3. A `NoPrediction` answer says nothing about the residue.
pub fn mod3_vanishing_criterion(form: BinomialForm, a: u64, b: u64) -> Mod3Prediction {
    let hit = match form {
        BinomialForm::ThreeA => {
            !b.is_multiple_of(3)
                || (a.is_multiple_of(3) && !b.is_multiple_of(9))
                || (a.is_multiple_of(9) && !b.is_multiple_of(27))
        }
        BinomialForm::ThreeAPlusTwo => {
            let n = 3 * a + 2;
            // n - b taken as signed: b > n makes the binomial zero and every
            // "n - b < bound" clause true.
            let rest = n as i128 - b as i128;
            (n >= 9 && b < 9 && rest < 9) || (n >= 18 && b < 9 && rest < 18) || (n >= 27 && b < 27 && rest < 27)
        }
    };
    if hit {
        Mod3Prediction::PredictsZero
    } else {
        Mod3Prediction::NoPrediction
    }
}

/// Exponent of `p` in `n!` (Legendre).
pub fn legendre_valuation(n: u64, p: u64) -> u64 {
    let mut acc = 0;
    let mut q = p;
    while q <= n {
        acc += n / q;
        match q.checked_mul(p) {
            Some(next) => q = next,
            None => break,
        }
    }
    acc
}

/// Exact carry test: `p | C(n, k)` iff `v_p(n!) > v_p(k!) + v_p((n-k)!)`.
pub fn carry_condition(n: u64, k: u64, p: u64) -> bool {
    if k > n {
        return true;
    }
    legendre_valuation(n, p) > legendre_valuation(k, p) + legendre_valuation(n - k, p)
}
