use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::Write as _;

use num_traits::{One, Signed};

use super::monomial::{Monomial, MAX_VARS};
use super::order::MonomialOrder;
use super::PolyError;
use crate::arith::{binom, CoeffRing};

/// Sparse polynomial: nonzero terms sorted strictly decreasing under the
/// order of the [`PolyRing`] that built it.
#[derive(Clone, Debug, PartialEq)]
pub struct SparsePoly<E> {
    terms: Vec<(Monomial, E)>,
}

impl<E> SparsePoly<E> {
    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, E)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, E)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    /// Largest total degree of a term.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u64> {
        self.terms.iter().map(|t| t.0.weighted_degree(weights)).max()
    }

    pub fn is_homogeneous(&self, weights: &[u32]) -> bool {
        let mut degs = self.terms.iter().map(|t| t.0.weighted_degree(weights));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }
}

/// A polynomial ring over a coefficient domain with named, ordered variables.
#[derive(Clone, Debug)]
pub struct PolyRing<R: CoeffRing> {
    coeffs: R,
    names: Vec<String>,
    order: MonomialOrder,
}

impl<R: CoeffRing> PolyRing<R> {
    pub fn new(coeffs: R, names: Vec<String>, order: MonomialOrder) -> Result<Self, PolyError> {
        if names.len() > MAX_VARS {
            return Err(PolyError::TooManyVariables(names.len()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        Ok(PolyRing { coeffs, names, order })
    }

    /// Variables `prefix0, prefix1, ...`.
    pub fn with_prefix(coeffs: R, prefix: &str, count: usize, order: MonomialOrder) -> Self {
        let names = (0..count).map(|i| format!("{prefix}{i}")).collect();
        PolyRing::new(coeffs, names, order).expect("valid generated ring")
    }

    pub fn coeffs(&self) -> &R {
        &self.coeffs
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> PolyRing<R> {
        PolyRing {
            coeffs: self.coeffs.clone(),
            names: self.names.clone(),
            order,
        }
    }

    pub fn with_coeffs<S: CoeffRing>(&self, coeffs: S) -> PolyRing<S> {
        PolyRing {
            coeffs,
            names: self.names.clone(),
            order: self.order,
        }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn zero(&self) -> SparsePoly<R::Elem> {
        SparsePoly { terms: Vec::new() }
    }

    pub fn one(&self) -> SparsePoly<R::Elem> {
        self.term(self.coeffs.one(), Monomial::ONE)
    }

    pub fn constant(&self, c: R::Elem) -> SparsePoly<R::Elem> {
        self.term(c, Monomial::ONE)
    }

    pub fn var(&self, i: usize) -> SparsePoly<R::Elem> {
        assert!(i < self.nvars());
        self.term(self.coeffs.one(), Monomial::var(i))
    }

    pub fn term(&self, c: R::Elem, m: Monomial) -> SparsePoly<R::Elem> {
        if self.coeffs.is_zero(&c) {
            self.zero()
        } else {
            SparsePoly { terms: vec![(m, c)] }
        }
    }

    /// Collects arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, R::Elem)>) -> SparsePoly<R::Elem> {
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, R::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = self.coeffs.add(&last.1, &c),
                _ => {
                    if let Some(last) = out.last() {
                        if self.coeffs.is_zero(&last.1) {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some(last) = out.last() {
            if self.coeffs.is_zero(&last.1) {
                out.pop();
            }
        }
        SparsePoly { terms: out }
    }

    pub fn from_int_terms(&self, terms: &[(i64, &[u32])]) -> SparsePoly<R::Elem> {
        self.from_terms(
            terms
                .iter()
                .map(|(c, e)| (Monomial::new(e), self.coeffs.from_i64(*c)))
                .collect(),
        )
    }

    /// Re-sorts a polynomial built under another order on the same variables.
    pub fn adopt(&self, f: SparsePoly<R::Elem>) -> SparsePoly<R::Elem> {
        let mut terms = f.terms;
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        SparsePoly { terms }
    }

    pub fn neg(&self, f: &SparsePoly<R::Elem>) -> SparsePoly<R::Elem> {
        SparsePoly {
            terms: f.terms.iter().map(|(m, c)| (*m, self.coeffs.neg(c))).collect(),
        }
    }

    pub fn scale(&self, f: &SparsePoly<R::Elem>, c: &R::Elem) -> SparsePoly<R::Elem> {
        if self.coeffs.is_zero(c) {
            return self.zero();
        }
        let terms = f
            .terms
            .iter()
            .map(|(m, a)| (*m, self.coeffs.mul(a, c)))
            .filter(|(_, a)| !self.coeffs.is_zero(a))
            .collect();
        SparsePoly { terms }
    }

    pub fn mul_term(&self, f: &SparsePoly<R::Elem>, c: &R::Elem, m: &Monomial) -> SparsePoly<R::Elem> {
        let terms = f
            .terms
            .iter()
            .map(|(n, a)| (n.mul(m), self.coeffs.mul(a, c)))
            .filter(|(_, a)| !self.coeffs.is_zero(a))
            .collect();
        SparsePoly { terms }
    }

    pub fn add(&self, f: &SparsePoly<R::Elem>, g: &SparsePoly<R::Elem>) -> SparsePoly<R::Elem> {
        self.combine(f, None, &self.coeffs.one(), &Monomial::ONE, g)
    }

    pub fn sub(&self, f: &SparsePoly<R::Elem>, g: &SparsePoly<R::Elem>) -> SparsePoly<R::Elem> {
        self.combine(f, None, &self.coeffs.neg(&self.coeffs.one()), &Monomial::ONE, g)
    }

    /// `a*f - b*t*g` as a single merge; `a = None` means `a = 1`.
    pub fn sub_scaled(
        &self,
        f: &SparsePoly<R::Elem>,
        a: Option<&R::Elem>,
        b: &R::Elem,
        t: &Monomial,
        g: &SparsePoly<R::Elem>,
    ) -> SparsePoly<R::Elem> {
        self.combine(f, a, &self.coeffs.neg(b), t, g)
    }

    /// `a*f - b*t*g` where `f` is a sorted run of terms, e.g. the unreduced
    /// tail of a polynomial during division.
    pub(crate) fn sub_scaled_terms(
        &self,
        f: &[(Monomial, R::Elem)],
        a: Option<&R::Elem>,
        b: &R::Elem,
        t: &Monomial,
        g: &SparsePoly<R::Elem>,
    ) -> SparsePoly<R::Elem> {
        self.combine_terms(f, a, &self.coeffs.neg(b), t, g)
    }

    fn combine(
        &self,
        f: &SparsePoly<R::Elem>,
        a: Option<&R::Elem>,
        b: &R::Elem,
        t: &Monomial,
        g: &SparsePoly<R::Elem>,
    ) -> SparsePoly<R::Elem> {
        self.combine_terms(&f.terms, a, b, t, g)
    }

    /// `a*f + b*t*g` by merging the two sorted term lists.
    fn combine_terms(
        &self,
        f: &[(Monomial, R::Elem)],
        a: Option<&R::Elem>,
        b: &R::Elem,
        t: &Monomial,
        g: &SparsePoly<R::Elem>,
    ) -> SparsePoly<R::Elem> {
        let k = &self.coeffs;
        let scale_f = |c: &R::Elem| match a {
            Some(a) => k.mul(a, c),
            None => c.clone(),
        };
        let mut out = Vec::with_capacity(f.len() + g.terms.len());
        let mut fi = f.iter().peekable();
        let mut gi = g.terms.iter().map(|(m, c)| (m.mul(t), c)).peekable();
        loop {
            match (fi.peek(), gi.peek()) {
                (None, None) => break,
                (Some(_), None) => {
                    let (m, c) = fi.next().unwrap();
                    let v = scale_f(c);
                    if !k.is_zero(&v) {
                        out.push((*m, v));
                    }
                }
                (None, Some(_)) => {
                    let (m, c) = gi.next().unwrap();
                    let v = k.mul(b, c);
                    if !k.is_zero(&v) {
                        out.push((m, v));
                    }
                }
                (Some((fm, _)), Some((gm, _))) => match self.cmp(fm, gm) {
                    Ordering::Greater => {
                        let (m, c) = fi.next().unwrap();
                        let v = scale_f(c);
                        if !k.is_zero(&v) {
                            out.push((*m, v));
                        }
                    }
                    Ordering::Less => {
                        let (m, c) = gi.next().unwrap();
                        let v = k.mul(b, c);
                        if !k.is_zero(&v) {
                            out.push((m, v));
                        }
                    }
                    Ordering::Equal => {
                        let (m, cf) = fi.next().unwrap();
                        let (_, cg) = gi.next().unwrap();
                        let v = k.add(&scale_f(cf), &k.mul(b, cg));
                        if !k.is_zero(&v) {
                            out.push((*m, v));
                        }
                    }
                },
            }
        }
        SparsePoly { terms: out }
    }

    pub fn mul(&self, f: &SparsePoly<R::Elem>, g: &SparsePoly<R::Elem>) -> SparsePoly<R::Elem> {
        if f.is_zero() || g.is_zero() {
            return self.zero();
        }
        if f.len() == 1 {
            let (m, c) = &f.terms[0];
            return self.mul_term(g, c, m);
        }
        if g.len() == 1 {
            let (m, c) = &g.terms[0];
            return self.mul_term(f, c, m);
        }
        let mut acc: HashMap<Monomial, R::Elem> = HashMap::with_capacity(f.len() * g.len());
        for (fm, fc) in &f.terms {
            for (gm, gc) in &g.terms {
                let prod = self.coeffs.mul(fc, gc);
                acc.entry(fm.mul(gm))
                    .and_modify(|v| *v = self.coeffs.add(v, &prod))
                    .or_insert(prod);
            }
        }
        self.from_terms(acc.into_iter().collect())
    }

    /// `f^e`; two-term polynomials expand by the binomial theorem.
    pub fn pow(&self, f: &SparsePoly<R::Elem>, e: u32) -> SparsePoly<R::Elem> {
        if e == 0 {
            return self.one();
        }
        match f.len() {
            0 => self.zero(),
            1 => {
                let (m, c) = &f.terms[0];
                self.term(self.pow_coeff(c, e), m.pow(e))
            }
            2 => {
                let (m1, c1) = &f.terms[0];
                let (m2, c2) = &f.terms[1];
                let terms = (0..=e)
                    .map(|j| {
                        let c = self.coeffs.mul(
                            &self.coeffs.from_bigint(&binom(e as u64, j as u64)),
                            &self.coeffs.mul(&self.pow_coeff(c1, e - j), &self.pow_coeff(c2, j)),
                        );
                        (m1.pow(e - j).mul(&m2.pow(j)), c)
                    })
                    .collect();
                self.from_terms(terms)
            }
            _ => {
                let mut acc = self.one();
                let mut base = f.clone();
                let mut e = e;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = self.mul(&acc, &base);
                    }
                    e >>= 1;
                    if e > 0 {
                        base = self.mul(&base, &base);
                    }
                }
                acc
            }
        }
    }

    fn pow_coeff(&self, c: &R::Elem, e: u32) -> R::Elem {
        let mut acc = self.coeffs.one();
        for _ in 0..e {
            acc = self.coeffs.mul(&acc, c);
        }
        acc
    }

    /// `mon(f)`: the exact monomial support of a nonzero polynomial.
    pub fn support(&self, f: &SparsePoly<R::Elem>) -> Result<Vec<Monomial>, PolyError> {
        if f.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        Ok(f.terms.iter().map(|t| t.0).collect())
    }

    pub fn coefficient(&self, f: &SparsePoly<R::Elem>, m: &Monomial) -> R::Elem {
        f.terms
            .binary_search_by(|t| self.cmp(m, &t.0))
            .map(|i| f.terms[i].1.clone())
            .unwrap_or_else(|_| self.coeffs.zero())
    }

    /// Scalar multiple chosen canonically by the coefficient domain.
    pub fn normalize(&self, f: &mut SparsePoly<R::Elem>) {
        let mut coeffs: Vec<R::Elem> = f.terms.iter().map(|t| t.1.clone()).collect();
        self.coeffs.normalize(&mut coeffs);
        for (t, c) in f.terms.iter_mut().zip(coeffs) {
            t.1 = c;
        }
    }

    /// Carries `f` into `target` by an explicit coefficient map; the variable
    /// count must agree.
    pub fn map_coeffs<S: CoeffRing>(
        &self,
        f: &SparsePoly<R::Elem>,
        target: &PolyRing<S>,
        map: impl Fn(&R::Elem) -> S::Elem,
    ) -> SparsePoly<S::Elem> {
        target.from_terms(f.terms.iter().map(|(m, c)| (*m, map(c))).collect())
    }

    /// Replaces variables by constants; `values[i] = Some(c)` substitutes
    /// `c` for variable `i` while keeping the exponent slot (now zero).
    pub fn specialize(&self, f: &SparsePoly<R::Elem>, values: &[Option<R::Elem>]) -> SparsePoly<R::Elem> {
        let terms = f
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.exps(self.nvars());
                let mut coeff = c.clone();
                for (i, v) in values.iter().enumerate() {
                    if let Some(v) = v {
                        coeff = self.coeffs.mul(&coeff, &self.pow_coeff(v, exps[i]));
                        exps[i] = 0;
                    }
                }
                (Monomial::new(&exps), coeff)
            })
            .collect();
        self.from_terms(terms)
    }

    pub fn evaluate(&self, f: &SparsePoly<R::Elem>, point: &[R::Elem]) -> R::Elem {
        let mut acc = self.coeffs.zero();
        for (m, c) in &f.terms {
            let mut v = c.clone();
            for (i, p) in point.iter().enumerate() {
                v = self.coeffs.mul(&v, &self.pow_coeff(p, m.exp(i)));
            }
            acc = self.coeffs.add(&acc, &v);
        }
        acc
    }

    pub fn display(&self, f: &SparsePoly<R::Elem>) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (m, c)) in f.terms.iter().enumerate() {
            let signed = self.coeffs.to_signed(c);
            let neg = signed.is_negative();
            let mag = signed.abs();
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                write!(s, "{mag}").unwrap();
            } else {
                if !mag.is_one() {
                    write!(s, "{mag}*").unwrap();
                }
                m.write_with(&mut s, &self.names).unwrap();
            }
        }
        s
    }
}
