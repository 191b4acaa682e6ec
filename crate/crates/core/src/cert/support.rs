use std::collections::{BTreeMap, HashMap};
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use serde::Serialize;

use super::{sections, CertError, Variant};
use crate::poly::{build_f, family_range, Context, Monomial, SparsePoly};

/// Degree-`D` monomials `x_0^{a_0} x_1^{x1} x_2^{x2_offset + 3u} x_3^{x3} x_4^{x4}`,
/// `0 <= u <= u_max`, with `a_0` filling up the degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportFamily {
    pub x1: u32,
    pub x3: u32,
    pub x4: u32,
    pub x2_offset: u32,
    pub u_max: u32,
    /// Every `u` in `0..=u_max` occurred.
    pub contiguous: bool,
}

/// All monomials of degree `d` in `x_0..x_4` whose image under the `X_{6k}`
/// sections has `y_0`-degree `y0_target` and `y_2`-degree congruent to
/// `y2_residue` mod 3, grouped by their `x_1, x_3, x_4` exponents.
///
/// The scan is exhaustive over all degree-`d` monomials; the `y_0`-degree
/// and `y_2` residue of each section are read off its terms, which share
/// both.
pub fn enumerate_support_monomials(
    k: u64,
    d: u32,
    y0_target: u32,
    y2_residue: u32,
) -> Result<Vec<SupportFamily>, CertError> {
    if k == 0 {
        return Err(CertError::InvalidArgument("k must be positive".into()));
    }
    let map = sections(6 * k as u32, Variant::X)?;
    let mut weight = Vec::with_capacity(5);
    for (i, s) in map.sections().iter().enumerate() {
        let profile: Vec<(u32, u32)> = s.terms().iter().map(|(m, _)| (m.exp(0), m.exp(2) % 3)).collect();
        if profile.windows(2).any(|w| w[0] != w[1]) {
            return Err(CertError::InvalidArgument(format!(
                "section {i} mixes y0-degrees or residues"
            )));
        }
        weight.push(profile[0]);
    }
    let mut groups: BTreeMap<(u32, u32, u32), Vec<u32>> = BTreeMap::new();
    for a1 in 0..=d {
        for a2 in 0..=d - a1 {
            for a3 in 0..=d - a1 - a2 {
                for a4 in 0..=d - a1 - a2 - a3 {
                    let a = [d - a1 - a2 - a3 - a4, a1, a2, a3, a4];
                    let y0: u32 = a.iter().zip(&weight).map(|(e, w)| e * w.0).sum();
                    let r: u32 = a.iter().zip(&weight).map(|(e, w)| e * w.1).sum::<u32>() % 3;
                    if y0 == y0_target && r == y2_residue % 3 {
                        groups.entry((a1, a3, a4)).or_default().push(a2);
                    }
                }
            }
        }
    }
    Ok(groups
        .into_iter()
        .map(|((x1, x3, x4), mut a2s)| {
            a2s.sort_unstable();
            let offset = a2s[0];
            let u_max = (a2s[a2s.len() - 1] - offset) / 3;
            let contiguous = a2s.iter().enumerate().all(|(u, &e)| e == offset + 3 * u as u32);
            SupportFamily {
                x1,
                x3,
                x4,
                x2_offset: offset,
                u_max,
                contiguous,
            }
        })
        .collect())
}

/// Indices of the polynomials that survive repeated removal of any member
/// owning a monomial no other remaining member has.
///
/// Removal only lowers multiplicities, so the survivors do not depend on
/// the removal order; each monomial tracks its multiplicity and the sum of
/// its owners' indices, which names the owner once the multiplicity is 1.
pub fn peel_forced(polys: &[SparsePoly<BigInt>]) -> Vec<usize> {
    let mut owners: HashMap<Monomial, (u32, u64)> = HashMap::new();
    for (i, f) in polys.iter().enumerate() {
        for (m, _) in f.terms() {
            let e = owners.entry(*m).or_insert((0, 0));
            e.0 += 1;
            e.1 += i as u64;
        }
    }
    let mut alive = vec![true; polys.len()];
    let mut queue: Vec<usize> = owners
        .values()
        .filter(|(c, _)| *c == 1)
        .map(|(_, s)| *s as usize)
        .collect();
    while let Some(i) = queue.pop() {
        if !alive[i] {
            continue;
        }
        alive[i] = false;
        for (m, _) in polys[i].terms() {
            let e = owners.get_mut(m).expect("counted above");
            e.0 -= 1;
            e.1 -= i as u64;
            if e.0 == 1 {
                queue.push(e.1 as usize);
            }
        }
    }
    (0..polys.len()).filter(|&i| alive[i]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeeledFamily {
    /// 1-based family index.
    pub family: usize,
    pub survivors: Vec<u64>,
    /// `survivors` as a range, when they form one.
    pub range: Option<RangeInclusive<u64>>,
}

/// Peels the full `W`-context family `f_i(u)` of `X_{6k}`.
pub fn peel_w_family(k: u64) -> Result<Vec<PeeledFamily>, CertError> {
    let mut members = Vec::new();
    let mut polys = Vec::new();
    for i in 1..=4 {
        for u in family_range(k, Context::W, i)? {
            members.push((i, u));
            polys.push(build_f(k, Context::W, i, u)?);
        }
    }
    let mut by_family: BTreeMap<usize, Vec<u64>> = (1..=4).map(|i| (i, Vec::new())).collect();
    for idx in peel_forced(&polys) {
        let (i, u) = members[idx];
        by_family.get_mut(&i).unwrap().push(u);
    }
    Ok(by_family
        .into_iter()
        .map(|(family, survivors)| {
            let range = match (survivors.first(), survivors.last()) {
                (Some(&lo), Some(&hi)) if hi - lo + 1 == survivors.len() as u64 => Some(lo..=hi),
                _ => None,
            };
            PeeledFamily {
                family,
                survivors,
                range,
            }
        })
        .collect())
}
