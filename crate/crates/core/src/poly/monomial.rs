use std::cmp::Ordering;
use std::fmt;

/// Upper bound on the number of ring variables.
pub const MAX_VARS: usize = 16;

/// Exponent vector with cached total degree.
///
/// Unused trailing slots are always zero, so equality and hashing do not
/// depend on the ring the monomial lives in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        exps: [0; MAX_VARS],
        deg: 0,
    };

    pub fn new(exps: &[u32]) -> Monomial {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut m = Monomial::ONE;
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).expect("exponent exceeds u16::MAX");
            m.deg += e;
        }
        m
    }

    pub fn var(i: usize) -> Monomial {
        Monomial::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, e: u32) -> Monomial {
        assert!(i < MAX_VARS);
        let mut m = Monomial::ONE;
        m.exps[i] = u16::try_from(e).expect("exponent exceeds u16::MAX");
        m.deg = e;
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exps(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        weights.iter().zip(&self.exps).map(|(&w, &e)| w as u64 * e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].checked_add(other.exps[i]).expect("exponent overflow");
        }
        out.deg = self.deg + other.deg;
        out
    }

    pub fn pow(&self, e: u32) -> Monomial {
        let mut out = Monomial::ONE;
        for i in 0..MAX_VARS {
            let v = self.exps[i] as u64 * e as u64;
            out.exps[i] = u16::try_from(v).expect("exponent overflow");
        }
        out.deg = self.deg * e;
        out
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut out = *other;
        for i in 0..MAX_VARS {
            out.exps[i] -= self.exps[i];
        }
        out.deg -= self.deg;
        out
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Monomial::ONE;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            out.deg += out.exps[i] as u32;
        }
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bit `i` set when variable `i` occurs; a cheap divisibility pre-filter.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Exponent vector with variables permuted: slot `perm[i]` of the result
    /// receives exponent `i` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut out = Monomial::ONE;
        for (i, &j) in perm.iter().enumerate() {
            out.exps[j] = self.exps[i];
        }
        out.deg = self.deg;
        out
    }

    /// Copy of `self` with variables `range` dropped and later slots shifted down.
    pub fn drop_vars(&self, start: usize, end: usize) -> Monomial {
        let mut out = Monomial::ONE;
        let mut k = 0;
        for i in 0..MAX_VARS {
            if i >= start && i < end {
                continue;
            }
            out.exps[k] = self.exps[i];
            out.deg += self.exps[i] as u32;
            k += 1;
        }
        out
    }

    pub fn write_with(&self, f: &mut impl fmt::Write, names: &[String]) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, name) in names.iter().enumerate() {
            let e = self.exps[i];
            if e == 0 {
                continue;
            }
            if !first {
                f.write_char('*')?;
            }
            first = false;
            f.write_str(name)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

/// All monomials of total degree `d` in the first `n` variables, in
/// decreasing lex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, i: usize, left: u32, cur: &mut [u32], out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial::new(cur));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(n, i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::ONE);
        }
        return out;
    }
    rec(n, 0, d, &mut vec![0; n], &mut out);
    out
}

/// Degree-reverse-lexicographic comparison on the variable range `lo..hi`.
#[inline]
pub(crate) fn cmp_degrevlex(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let (da, db) = if lo == 0 && hi == MAX_VARS {
        (a.deg, b.deg)
    } else {
        (
            a.exps[lo..hi].iter().map(|&e| e as u32).sum::<u32>(),
            b.exps[lo..hi].iter().map(|&e| e as u32).sum::<u32>(),
        )
    };
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    for i in (lo..hi).rev() {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

#[inline]
pub(crate) fn cmp_lex(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    a.exps[lo..hi].cmp(&b.exps[lo..hi])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Monomial::new(&[2, 0, 1]);
        let b = Monomial::new(&[1, 3]);
        let ab = a.mul(&b);
        assert_eq!(ab, Monomial::new(&[3, 3, 1]));
        assert_eq!(ab.degree(), 7);
        assert!(a.divides(&ab));
        assert_eq!(a.quotient_of(&ab), b);
        assert_eq!(a.lcm(&b), Monomial::new(&[2, 3, 1]));
        assert!(!a.is_coprime(&b));
        assert!(Monomial::new(&[1]).is_coprime(&Monomial::new(&[0, 4])));
        assert_eq!(a.pow(3), Monomial::new(&[6, 0, 3]));
    }

    #[test]
    fn enumeration() {
        let ms = monomials_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0], Monomial::new(&[2]));
        assert_eq!(ms[5], Monomial::new(&[0, 0, 2]));
        assert_eq!(monomials_of_degree(5, 34).len(), 73815);
        assert_eq!(monomials_of_degree(0, 0), vec![Monomial::ONE]);
    }

    #[test]
    fn drop_and_permute() {
        let a = Monomial::new(&[1, 2, 3, 4]);
        assert_eq!(a.drop_vars(1, 3), Monomial::new(&[1, 4]));
        assert_eq!(a.permuted(&[3, 0, 1, 2]), Monomial::new(&[2, 3, 4, 1]));
    }
}
