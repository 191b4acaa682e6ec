use crate::arith::CoeffRing;
use crate::poly::{Monomial, PolyRing, SparsePoly};

/// Leading-monomial index for divisor lookup.
pub(crate) struct DivisorIndex {
    entries: Vec<(Monomial, u32, usize)>,
}

impl DivisorIndex {
    pub(crate) fn new<E>(polys: &[&SparsePoly<E>]) -> DivisorIndex {
        DivisorIndex {
            entries: polys
                .iter()
                .enumerate()
                .filter_map(|(i, g)| g.leading_monomial().map(|m| (m, m.support_mask(), i)))
                .collect(),
        }
    }

    /// Among the elements whose leading monomial divides `m`, the one with
    /// fewest terms (lowest index on ties).
    pub(crate) fn find<E>(&self, m: &Monomial, polys: &[&SparsePoly<E>]) -> Option<usize> {
        let mask = m.support_mask();
        let mut best: Option<(usize, usize)> = None;
        for &(lm, lmask, i) in &self.entries {
            if lmask & !mask != 0 || !lm.divides(m) {
                continue;
            }
            let len = polys[i].len();
            if best.is_none_or(|(l, _)| len < l) {
                best = Some((len, i));
            }
        }
        best.map(|(_, i)| i)
    }
}

/// Reduction steps between content removals over the integers.
const CONTENT_PERIOD: usize = 12;

/// Full normal form of `f` modulo `divisors`.
///
/// Over the integers the result is a nonzero integer multiple of the true
/// remainder, made primitive.
pub(crate) fn normal_form<R: CoeffRing>(
    ring: &PolyRing<R>,
    f: &SparsePoly<R::Elem>,
    divisors: &[&SparsePoly<R::Elem>],
) -> SparsePoly<R::Elem> {
    let index = DivisorIndex::new(divisors);
    reduce_with(ring, f.clone(), divisors, &index, true)
}

pub(crate) fn reduce_with<R: CoeffRing>(
    ring: &PolyRing<R>,
    f: SparsePoly<R::Elem>,
    divisors: &[&SparsePoly<R::Elem>],
    index: &DivisorIndex,
    full: bool,
) -> SparsePoly<R::Elem> {
    let k = ring.coeffs();
    let exact_ints = k.characteristic() == 0;
    let mut rem: Vec<(Monomial, R::Elem)> = Vec::new();
    let mut p = f;
    let mut pos = 0;
    let mut steps = 0usize;
    while pos < p.len() {
        let (m, c) = &p.terms()[pos];
        let Some(gi) = index.find(m, divisors) else {
            if !full {
                break;
            }
            rem.push((*m, c.clone()));
            pos += 1;
            continue;
        };
        let g = divisors[gi];
        let (lm_g, lc_g) = g.leading().unwrap();
        let (a, b) = k.cancel_factors(c, lc_g);
        let t = lm_g.quotient_of(m);
        let a_ref = (!k.is_one(&a)).then_some(&a);
        p = ring.sub_scaled_terms(&p.terms()[pos..], a_ref, &b, &t, g);
        pos = 0;
        if let Some(a) = a_ref {
            for r in rem.iter_mut() {
                r.1 = k.mul(&r.1, a);
            }
        }
        steps += 1;
        if exact_ints && steps.is_multiple_of(CONTENT_PERIOD) {
            remove_content(ring, &mut rem, &mut p);
        }
    }
    if !full && rem.is_empty() {
        let mut out = p;
        if exact_ints {
            ring.normalize(&mut out);
        }
        return out;
    }
    rem.extend(p.into_terms().into_iter().skip(pos));
    let mut out = ring.from_terms(rem);
    if exact_ints {
        ring.normalize(&mut out);
    }
    out
}

fn remove_content<R: CoeffRing>(ring: &PolyRing<R>, rem: &mut [(Monomial, R::Elem)], p: &mut SparsePoly<R::Elem>) {
    let k = ring.coeffs();
    let mut all: Vec<R::Elem> = rem.iter().map(|t| t.1.clone()).collect();
    all.extend(p.terms().iter().map(|t| t.1.clone()));
    k.normalize(&mut all);
    let (head, tail) = all.split_at(rem.len());
    for (r, c) in rem.iter_mut().zip(head) {
        r.1 = c.clone();
    }
    let terms: Vec<(Monomial, R::Elem)> = p.terms().iter().map(|t| t.0).zip(tail.iter().cloned()).collect();
    *p = ring.from_terms(terms);
}
