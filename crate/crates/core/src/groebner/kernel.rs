use serde::{Deserialize, Serialize};

use super::{buchberger, interreduce, GbConfig, GroebnerBasis, GroebnerError};
use crate::arith::CoeffRing;
use crate::poly::{MonomialOrder, PolyRing, SectionMap};

/// Order used on the graph ring `k[y_0..y_n, x_0..x_r]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelMethod {
    /// Degree-reverse-lexicographic blocks `y > x`, with weights
    /// `deg y_i = 1`, `deg x_j = m` making the graph ideal homogeneous.
    #[default]
    Block,
    /// Pure lex `y_0 > .. > y_n > x_0 > .. > x_r`.
    Lex,
}

/// Generators of `ker(x_i -> s_i)`, returned as a reduced Groebner basis in
/// `k[x_0..x_r]` under degrevlex.
///
/// Computed as the `y`-free part of a Groebner basis of the graph ideal
/// `(x_i - s_i)` in an order eliminating the `y`s. Every returned generator
/// is substituted back through the map, and a nonzero image is reported as
/// [`GroebnerError::Unsound`].
pub fn kernel_of_map<R: CoeffRing>(
    map: &SectionMap<R>,
    method: KernelMethod,
    config: &GbConfig,
) -> Result<GroebnerBasis<R>, GroebnerError> {
    let src = map.source();
    let ny = src.nvars();
    let nx = map.target_count();
    let mut names: Vec<String> = src.names().to_vec();
    names.extend(map.target_names().iter().cloned());
    let order = match method {
        KernelMethod::Block => MonomialOrder::Block { split: ny },
        KernelMethod::Lex => MonomialOrder::Lex,
    };
    let graph = PolyRing::new(src.coeffs().clone(), names, order)?;
    let mut gens = Vec::with_capacity(nx);
    for (j, s) in map.sections().iter().enumerate() {
        let lifted = graph.from_terms(s.terms().to_vec());
        let x = graph.var(ny + j);
        gens.push(graph.sub(&x, &lifted));
    }
    let mut weights = vec![1u32; ny];
    weights.extend(std::iter::repeat_n(map.degree(), nx));
    let cfg = GbConfig {
        weights: Some(weights),
        ..config.clone()
    };
    let gb = buchberger(&graph, &gens, &cfg)?;

    let target = map.target_ring(MonomialOrder::DegRevLex);
    let mut kernel = Vec::new();
    for g in gb.polys() {
        if g.terms().iter().any(|(m, _)| (0..ny).any(|i| m.exp(i) > 0)) {
            continue;
        }
        let terms = g.terms().iter().map(|(m, c)| (m.drop_vars(0, ny), c.clone())).collect();
        kernel.push(target.from_terms(terms));
    }
    for (i, g) in kernel.iter().enumerate() {
        let img = map.substitute(&target, g)?;
        if !img.is_zero() {
            return Err(GroebnerError::Unsound(format!(
                "kernel element {i} maps to {}",
                src.display(&img)
            )));
        }
    }
    // the block order induces degrevlex on the y-free part; lex does not
    let mut out = match method {
        KernelMethod::Block => interreduce(&target, kernel),
        KernelMethod::Lex => buchberger(&target, &kernel, config)?,
    };
    out.stats = gb.stats().clone();
    out.truncated_at = gb.truncated_at();
    Ok(out)
}
