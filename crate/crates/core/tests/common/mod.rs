//! Oracles shared by the property suites and the acceptance run.
#![allow(dead_code)]

use std::ops::Range;

use egcert::arith::{CoeffRing, PrimeField};
use egcert::groebner::{partial_elimination, GbConfig};
use egcert::poly::{monomials_of_degree, Monomial, MonomialOrder, PolyRing, SparsePoly};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const P: u64 = 32003;

pub fn factorials(n: usize) -> Vec<BigInt> {
    let mut f = vec![BigInt::from(1)];
    for i in 1..=n {
        let next = &f[i - 1] * i;
        f.push(next);
    }
    f
}

pub fn residue(n: &BigInt, p: u64) -> u64 {
    (n % p).to_u64().unwrap()
}

pub fn random_form<R: CoeffRing>(
    ring: &PolyRing<R>,
    d: u32,
    terms: usize,
    rng: &mut ChaCha8Rng,
) -> SparsePoly<R::Elem> {
    let monos = monomials_of_degree(ring.nvars(), d);
    let t = (0..terms)
        .map(|_| {
            let c = rng.gen_range(-5i64..=5);
            (monos[rng.gen_range(0..monos.len())], ring.coeffs().from_i64(c))
        })
        .collect();
    ring.from_terms(t)
}

pub fn fp_ring(n: usize) -> PolyRing<PrimeField> {
    PolyRing::with_prefix(PrimeField::new(P).unwrap(), "x", n, MonomialOrder::DegRevLex)
}

/// A few random homogeneous generators of degree 2 or 3 in four variables.
pub fn random_ideal(ring: &PolyRing<PrimeField>, rng: &mut ChaCha8Rng) -> Vec<SparsePoly<u64>> {
    let count = rng.gen_range(2..=3);
    (0..count)
        .map(|_| loop {
            let f = random_form(ring, rng.gen_range(2..=3), rng.gen_range(2..=3), rng);
            if !f.is_zero() {
                break f;
            }
        })
        .collect()
}

/// Row echelon form mod `P`; returns the nonzero rows.
pub fn echelon(mut rows: Vec<Vec<u64>>, f: &PrimeField) -> Vec<Vec<u64>> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = f.inv(rows[rank][c]);
        let pivot: Vec<u64> = rows[rank].iter().map(|&x| f.mul(x, inv)).collect();
        for i in 0..rows.len() {
            if i != rank && rows[i][c] != 0 {
                let t = rows[i][c];
                for j in 0..cols {
                    rows[i][j] = f.sub(rows[i][j], f.mul(t, pivot[j]));
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

/// The degree-`e` part of `K_i`, straight from the definition: leading
/// `x_0^i` coefficients of the elements of `I_{e+i}` with `x_0`-degree at
/// most `i`. Rows are indexed by monomials of degree `e` in `x_1..x_3`.
pub fn pei_by_definition(ring: &PolyRing<PrimeField>, gens: &[SparsePoly<u64>], i: u32, e: u32) -> Vec<Vec<u64>> {
    let f = ring.coeffs();
    let n = e + i;
    // columns with x_0-degree above i first, so echelon rows past them avoid them
    let mut cols = monomials_of_degree(4, n);
    cols.sort_by_key(|m| std::cmp::Reverse(m.exp(0) > i));
    let high = cols.iter().filter(|m| m.exp(0) > i).count();
    let mut rows = Vec::new();
    for g in gens {
        let dg = g.total_degree().unwrap();
        if dg > n {
            continue;
        }
        for t in monomials_of_degree(4, n - dg) {
            let h = ring.mul_term(g, &1, &t);
            rows.push(cols.iter().map(|m| ring.coefficient(&h, m)).collect());
        }
    }
    let low: Vec<Vec<u64>> = echelon(rows, f)
        .into_iter()
        .filter(|r| r[..high].iter().all(|&x| x == 0))
        .collect();
    let sub = monomials_of_degree(3, e);
    let projected = low
        .iter()
        .map(|r| {
            sub.iter()
                .map(|m| {
                    let full = Monomial::new(&[i, m.exp(0), m.exp(1), m.exp(2)]);
                    r[cols.iter().position(|c| *c == full).unwrap()]
                })
                .collect()
        })
        .collect();
    echelon(projected, f)
}

/// Compares `partial_elimination` with [`pei_by_definition`] on one random
/// ideal per seed, for `i <= 3` and degrees `e <= 4`.
pub fn check_pei_against_definition(seeds: Range<u64>) -> Result<(), String> {
    let ring = fp_ring(4);
    let f = *ring.coeffs();
    for seed in seeds {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens = random_ideal(&ring, &mut rng);
        let pei = partial_elimination(&ring, &gens, 0, &GbConfig::default()).map_err(|e| e.to_string())?;
        for i in 0..=3u32 {
            let k = pei.level(i as usize);
            let lms = k.leading_monomials();
            for e in 0..=4u32 {
                let oracle = pei_by_definition(&ring, &gens, i, e);
                let sub = monomials_of_degree(3, e);
                let dim = sub.iter().filter(|m| lms.iter().any(|l| l.divides(m))).count();
                if dim != oracle.len() {
                    return Err(format!("seed {seed}, i = {i}, e = {e}: dim {dim} vs {}", oracle.len()));
                }
                for g in k.polys().iter().filter(|g| g.total_degree() == Some(e)) {
                    let mut rows = oracle.clone();
                    rows.push(sub.iter().map(|m| k.ring().coefficient(g, m)).collect());
                    if echelon(rows, &f).len() != oracle.len() {
                        return Err(format!("seed {seed}, i = {i}, e = {e}: generator outside K_i"));
                    }
                }
            }
        }
    }
    Ok(())
}
