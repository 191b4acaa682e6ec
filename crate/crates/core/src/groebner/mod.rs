//! Buchberger's algorithm with sugar selection and Gebauer-Moeller pair
//! pruning, and the constructions built on it: kernels of ring maps,
//! partial elimination ideals and minimal generator degrees.

mod buchberger;
mod kernel;
mod mingens;
mod pei;
mod reduce;

pub use buchberger::{buchberger, interreduce};
pub use kernel::{kernel_of_map, KernelMethod};
pub use mingens::{minimal_generator_degrees, MinimalGenerators};
pub use pei::{partial_elimination, PeiFiltration};

use std::time::Duration;

use serde::Serialize;
use thiserror::Error;
use web_time::Instant;

use crate::arith::CoeffRing;
use crate::poly::{Monomial, PolyError, PolyRing, SparsePoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("incomplete: {reason} after {pairs} pairs with {basis} basis elements")]
    Incomplete { reason: String, pairs: u64, basis: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("soundness check failed: {0}")]
    Unsound(String),
}

/// Resource caps. Exceeding any of them aborts with
/// [`GroebnerError::Incomplete`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_pairs: Option<u64>,
    pub max_basis: Option<usize>,
    pub time_limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget::default()
    }

    pub fn new(max_pairs: u64, time_limit: Duration) -> Budget {
        Budget {
            max_pairs: Some(max_pairs),
            max_basis: None,
            time_limit: Some(time_limit),
        }
    }

    pub(crate) fn start(&self) -> Meter {
        Meter {
            budget: self.clone(),
            deadline: self.time_limit.map(|d| Instant::now() + d),
            pairs: 0,
        }
    }
}

/// Running consumption against a [`Budget`].
#[derive(Clone, Debug)]
pub(crate) struct Meter {
    budget: Budget,
    deadline: Option<Instant>,
    pub(crate) pairs: u64,
}

impl Meter {
    pub(crate) fn check(&self, basis: usize) -> Result<(), GroebnerError> {
        let fail = |reason: &str| {
            Err(GroebnerError::Incomplete {
                reason: reason.to_string(),
                pairs: self.pairs,
                basis,
            })
        };
        if self.budget.max_pairs.is_some_and(|m| self.pairs > m) {
            return fail("pair budget exhausted");
        }
        if self.budget.max_basis.is_some_and(|m| basis > m) {
            return fail("basis size budget exhausted");
        }
        if self.deadline.is_some_and(|d| Instant::now() > d) {
            return fail("time budget exhausted");
        }
        Ok(())
    }
}

/// Options for [`buchberger`].
#[derive(Clone, Debug, Default)]
pub struct GbConfig {
    /// Variable weights for the sugar degree; all ones when `None`.
    pub weights: Option<Vec<u32>>,
    pub budget: Budget,
    /// Skip pairs of sugar above this bound. For homogeneous input the
    /// result is then a basis up to that degree and is flagged truncated.
    pub max_degree: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GbStats {
    pub pairs_reduced: u64,
    pub zero_reductions: u64,
    pub pairs_pruned: u64,
    pub max_sugar: u64,
}

/// A reduced Groebner basis: leading coefficients normalized by the
/// coefficient domain (monic over a field, primitive with positive leading
/// coefficient over the integers), elements sorted by increasing leading
/// monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<R: CoeffRing> {
    ring: PolyRing<R>,
    polys: Vec<SparsePoly<R::Elem>>,
    stats: GbStats,
    truncated_at: Option<u64>,
}

impl<R: CoeffRing> GroebnerBasis<R> {
    pub fn ring(&self) -> &PolyRing<R> {
        &self.ring
    }

    pub fn polys(&self) -> &[SparsePoly<R::Elem>] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn stats(&self) -> &GbStats {
        &self.stats
    }

    /// `Some(d)` when pairs above sugar `d` were skipped.
    pub fn truncated_at(&self) -> Option<u64> {
        self.truncated_at
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|g| g.leading_monomial().unwrap()).collect()
    }

    /// The unit ideal.
    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].leading_monomial() == Some(Monomial::ONE)
    }

    /// Remainder of `f` on division by the basis, every term reduced.
    pub fn normal_form(&self, f: &SparsePoly<R::Elem>) -> SparsePoly<R::Elem> {
        let refs: Vec<&SparsePoly<R::Elem>> = self.polys.iter().collect();
        reduce::normal_form(&self.ring, f, &refs)
    }

    pub fn contains(&self, f: &SparsePoly<R::Elem>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Mutual membership of the two bases' elements.
    pub fn same_ideal(&self, other: &GroebnerBasis<R>) -> bool {
        self.polys.iter().all(|g| other.contains(g)) && other.polys.iter().all(|g| self.contains(g))
    }

    /// Largest total degree of an element.
    pub fn max_degree(&self) -> Option<u32> {
        self.polys.iter().filter_map(|g| g.total_degree()).max()
    }

    pub fn display(&self) -> Vec<String> {
        self.polys.iter().map(|g| self.ring.display(g)).collect()
    }
}
