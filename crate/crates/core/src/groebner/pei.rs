use super::{buchberger, interreduce, GbConfig, GroebnerBasis, GroebnerError};
use crate::arith::CoeffRing;
use crate::poly::{MonomialOrder, PolyError, PolyRing, SparsePoly};

/// The partial elimination ideals `K_0 ⊆ K_1 ⊆ ... ⊆ K_s` of a homogeneous
/// ideal with respect to one variable, each as a reduced Groebner basis in
/// the ring of the remaining variables (degrevlex).
#[derive(Clone, Debug)]
pub struct PeiFiltration<R: CoeffRing> {
    pub levels: Vec<GroebnerBasis<R>>,
    /// Least `s` with `K_s = K_{s+1} = ...`.
    pub stabilization: usize,
    /// Largest degree of the eliminated variable among leading monomials of
    /// the elimination basis; `K_i` is constant from there on.
    pub max_eliminated_degree: u32,
}

impl<R: CoeffRing> PeiFiltration<R> {
    pub fn ring(&self) -> &PolyRing<R> {
        self.levels[0].ring()
    }

    /// `K_i` for any `i`, including beyond the stored levels.
    pub fn level(&self, i: usize) -> &GroebnerBasis<R> {
        &self.levels[i.min(self.levels.len() - 1)]
    }
}

/// `K_i(I)`, `i >= 0`, for `I = (gens)` with respect to variable `var`.
///
/// A Groebner basis `G` is computed for the order comparing the degree in
/// `var` first and breaking ties by degrevlex in the other variables. For
/// `g = g' var^d + (lower var-degree)` in `G`, the leading forms `g'` with
/// `d <= i` form a Groebner basis of `K_i`.
pub fn partial_elimination<R: CoeffRing>(
    ring: &PolyRing<R>,
    gens: &[SparsePoly<R::Elem>],
    var: usize,
    config: &GbConfig,
) -> Result<PeiFiltration<R>, GroebnerError> {
    let n = ring.nvars();
    if var >= n {
        return Err(PolyError::OutOfRange(format!("variable {var} of {n}")).into());
    }
    let unit = vec![1u32; n];
    if let Some(i) = gens.iter().position(|g| !g.is_homogeneous(&unit)) {
        return Err(PolyError::NotHomogeneous(format!("generator {i}")).into());
    }
    // perm[i] = slot of variable i after moving `var` to the front
    let perm: Vec<usize> = (0..n)
        .map(|i| match i.cmp(&var) {
            std::cmp::Ordering::Less => i + 1,
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => i,
        })
        .collect();
    let mut names = vec![String::new(); n];
    for (i, name) in ring.names().iter().enumerate() {
        names[perm[i]] = name.clone();
    }
    let elim = PolyRing::new(ring.coeffs().clone(), names.clone(), MonomialOrder::Block { split: 1 })?;
    let moved: Vec<_> = gens
        .iter()
        .map(|g| elim.from_terms(g.terms().iter().map(|(m, c)| (m.permuted(&perm), c.clone())).collect()))
        .collect();
    let gb = buchberger(&elim, &moved, config)?;

    let sub = PolyRing::new(ring.coeffs().clone(), names[1..].to_vec(), MonomialOrder::DegRevLex)?;
    let mut leading: Vec<(u32, SparsePoly<R::Elem>)> = Vec::with_capacity(gb.len());
    for g in gb.polys() {
        let d = g.leading_monomial().unwrap().exp(0);
        let terms = g
            .terms()
            .iter()
            .take_while(|(m, _)| m.exp(0) == d)
            .map(|(m, c)| (m.drop_vars(0, 1), c.clone()))
            .collect();
        leading.push((d, sub.from_terms(terms)));
    }
    let top = leading.iter().map(|(d, _)| *d).max().unwrap_or(0);
    let mut levels = Vec::with_capacity(top as usize + 1);
    for i in 0..=top {
        let basis = leading
            .iter()
            .filter(|(d, _)| *d <= i)
            .map(|(_, f)| f.clone())
            .collect();
        levels.push(interreduce(&sub, basis));
    }
    let last = levels.last().unwrap();
    let stabilization = levels
        .iter()
        .position(|k| k.polys() == last.polys())
        .expect("last level matches itself");
    Ok(PeiFiltration {
        levels,
        stabilization,
        max_eliminated_degree: top,
    })
}
