use std::cmp::Ordering;

use super::reduce::{reduce_with, DivisorIndex};
use super::{GbConfig, GbStats, GroebnerBasis, GroebnerError};
use crate::arith::CoeffRing;
use crate::poly::{Monomial, PolyRing, SparsePoly};

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
}

struct State<'a, R: CoeffRing> {
    ring: &'a PolyRing<R>,
    weights: Vec<u32>,
    polys: Vec<SparsePoly<R::Elem>>,
    lms: Vec<Monomial>,
    sugar: Vec<u64>,
    /// Indices of the current basis, i.e. elements whose leading monomial
    /// is not divisible by a later one.
    active: Vec<usize>,
    pairs: Vec<Pair>,
    stats: GbStats,
}

impl<R: CoeffRing> State<'_, R> {
    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u64 {
        let w = &self.weights;
        let si = self.sugar[i] + self.lms[i].quotient_of(lcm).weighted_degree(w);
        let sj = self.sugar[j] + self.lms[j].quotient_of(lcm).weighted_degree(w);
        si.max(sj)
    }

    /// Adds `h` to the basis and updates the pair set (Gebauer-Moeller
    /// criteria in the Becker-Weispfenning formulation).
    fn insert(&mut self, h: SparsePoly<R::Elem>, sugar: u64) {
        let hi = self.polys.len();
        let lm_h = h.leading_monomial().expect("nonzero");
        self.polys.push(h);
        self.lms.push(lm_h);
        self.sugar.push(sugar);

        // new pairs (h, g), pruned among themselves
        let mut candidates: Vec<(usize, Monomial)> = self.active.iter().map(|&g| (g, lm_h.lcm(&self.lms[g]))).collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while !candidates.is_empty() {
            let (g, l) = candidates.remove(0);
            let coprime = lm_h.is_coprime(&self.lms[g]);
            let dominated = candidates.iter().chain(kept.iter()).any(|(_, l2)| l2.divides(&l));
            if coprime || !dominated {
                kept.push((g, l));
            } else {
                self.stats.pairs_pruned += 1;
            }
        }
        // Buchberger's product criterion
        let before = kept.len();
        kept.retain(|(g, _)| !lm_h.is_coprime(&self.lms[*g]));
        self.stats.pairs_pruned += (before - kept.len()) as u64;

        // old pairs made redundant by h
        let lms = &self.lms;
        let before = self.pairs.len();
        self.pairs
            .retain(|p| !(lm_h.divides(&p.lcm) && lms[p.i].lcm(&lm_h) != p.lcm && lms[p.j].lcm(&lm_h) != p.lcm));
        self.stats.pairs_pruned += (before - self.pairs.len()) as u64;

        for (g, l) in kept {
            let sugar = self.pair_sugar(g, hi, &l);
            self.pairs.push(Pair {
                i: g,
                j: hi,
                lcm: l,
                sugar,
            });
        }
        self.active.retain(|&g| !lm_h.divides(&lms[g]));
        self.active.push(hi);
    }

    fn pop_pair(&mut self, max_degree: Option<u64>) -> Option<Pair> {
        let ring = self.ring;
        let mut best: Option<usize> = None;
        for (idx, p) in self.pairs.iter().enumerate() {
            if max_degree.is_some_and(|d| p.sugar > d) {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => {
                    let q = &self.pairs[b];
                    p.sugar
                        .cmp(&q.sugar)
                        .then_with(|| ring.cmp(&p.lcm, &q.lcm))
                        .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
                        == Ordering::Less
                }
            };
            if better {
                best = Some(idx);
            }
        }
        best.map(|b| self.pairs.swap_remove(b))
    }

    fn spoly(&self, p: &Pair) -> SparsePoly<R::Elem> {
        let k = self.ring.coeffs();
        let (f, g) = (&self.polys[p.i], &self.polys[p.j]);
        let (_, lc_f) = f.leading().unwrap();
        let (_, lc_g) = g.leading().unwrap();
        let (a, b) = k.cancel_factors(lc_f, lc_g);
        let tf = self.ring.mul_term(f, &a, &self.lms[p.i].quotient_of(&p.lcm));
        self.ring
            .sub_scaled(&tf, None, &b, &self.lms[p.j].quotient_of(&p.lcm), g)
    }

    fn reduce_full(&self, f: SparsePoly<R::Elem>) -> SparsePoly<R::Elem> {
        let refs: Vec<&SparsePoly<R::Elem>> = self.active.iter().map(|&i| &self.polys[i]).collect();
        let index = DivisorIndex::new(&refs);
        reduce_with(self.ring, f, &refs, &index, true)
    }
}

/// Reduced Groebner basis of the ideal generated by `gens` under the order
/// of `ring`.
///
/// Pairs are taken by the normal strategy on sugar degree, ties broken by
/// the order on their lcm and then by index, so the output is a
/// deterministic function of the input and the order.
pub fn buchberger<R: CoeffRing>(
    ring: &PolyRing<R>,
    gens: &[SparsePoly<R::Elem>],
    config: &GbConfig,
) -> Result<GroebnerBasis<R>, GroebnerError> {
    let weights = config.weights.clone().unwrap_or_else(|| vec![1; ring.nvars()]);
    let mut st = State {
        ring,
        weights,
        polys: Vec::new(),
        lms: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        stats: GbStats::default(),
    };
    let mut meter = config.budget.start();
    let mut truncated = None;

    let mut inputs: Vec<SparsePoly<R::Elem>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| ring.adopt(g.clone()))
        .collect();
    inputs.sort_by(|a, b| {
        let da = a.weighted_degree(&st.weights).unwrap();
        let db = b.weighted_degree(&st.weights).unwrap();
        da.cmp(&db)
            .then_with(|| ring.cmp(&a.leading_monomial().unwrap(), &b.leading_monomial().unwrap()))
    });
    for g in inputs {
        let s = g.weighted_degree(&st.weights).unwrap();
        let h = st.reduce_full(g);
        if h.is_zero() {
            continue;
        }
        if h.leading_monomial() == Some(Monomial::ONE) {
            return Ok(unit_basis(ring, st.stats));
        }
        st.insert(h, s);
    }

    loop {
        let Some(pair) = st.pop_pair(config.max_degree) else {
            break;
        };
        meter.pairs += 1;
        meter.check(st.active.len())?;
        st.stats.pairs_reduced += 1;
        st.stats.max_sugar = st.stats.max_sugar.max(pair.sugar);
        let s = st.spoly(&pair);
        let h = st.reduce_full(s);
        if h.is_zero() {
            st.stats.zero_reductions += 1;
            continue;
        }
        if h.leading_monomial() == Some(Monomial::ONE) {
            return Ok(unit_basis(ring, st.stats));
        }
        st.insert(h, pair.sugar);
    }
    if let Some(d) = config.max_degree {
        if !st.pairs.is_empty() {
            truncated = Some(d);
        }
    }
    let basis: Vec<SparsePoly<R::Elem>> = st.active.iter().map(|&i| st.polys[i].clone()).collect();
    let mut gb = interreduce(ring, basis);
    gb.stats = st.stats;
    gb.truncated_at = truncated;
    Ok(gb)
}

fn unit_basis<R: CoeffRing>(ring: &PolyRing<R>, stats: GbStats) -> GroebnerBasis<R> {
    GroebnerBasis {
        ring: ring.clone(),
        polys: vec![ring.one()],
        stats,
        truncated_at: None,
    }
}

/// Reduced form of a set that is already a Groebner basis: drops elements
/// with a non-minimal leading monomial, tail-reduces the rest and sorts by
/// leading monomial.
pub fn interreduce<R: CoeffRing>(ring: &PolyRing<R>, basis: Vec<SparsePoly<R::Elem>>) -> GroebnerBasis<R> {
    let mut polys: Vec<SparsePoly<R::Elem>> = basis
        .into_iter()
        .filter(|g| !g.is_zero())
        .map(|g| ring.adopt(g))
        .collect();
    polys.sort_by(|a, b| {
        ring.cmp(&a.leading_monomial().unwrap(), &b.leading_monomial().unwrap())
            .then_with(|| a.len().cmp(&b.len()))
    });
    let mut minimal: Vec<SparsePoly<R::Elem>> = Vec::new();
    for g in polys {
        let lm = g.leading_monomial().unwrap();
        if !minimal.iter().any(|h| h.leading_monomial().unwrap().divides(&lm)) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<&SparsePoly<R::Elem>> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, h)| h)
            .collect();
        let index = DivisorIndex::new(&others);
        let mut g = reduce_with(ring, minimal[i].clone(), &others, &index, true);
        ring.normalize(&mut g);
        reduced.push(g);
    }
    GroebnerBasis {
        ring: ring.clone(),
        polys: reduced,
        stats: GbStats::default(),
        truncated_at: None,
    }
}
