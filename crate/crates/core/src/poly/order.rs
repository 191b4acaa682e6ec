use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::monomial::{cmp_degrevlex, cmp_lex, Monomial, MAX_VARS};

/// Term order on exponent vectors. Variable 0 is the largest variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Product order: degrevlex on variables `0..split`, ties broken by
    /// degrevlex on the rest. Eliminates the first block.
    Block {
        split: usize,
    },
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => cmp_degrevlex(a, b, 0, MAX_VARS),
            MonomialOrder::Lex => cmp_lex(a, b, 0, MAX_VARS),
            MonomialOrder::Block { split } => {
                cmp_degrevlex(a, b, 0, split).then_with(|| cmp_degrevlex(a, b, split, MAX_VARS))
            }
        }
    }

    /// True when every term of the first `count` variables outranks every
    /// term free of them, i.e. the order eliminates that variable group.
    pub fn eliminates(&self, count: usize) -> bool {
        match *self {
            MonomialOrder::Lex => true,
            MonomialOrder::DegRevLex => count == 0,
            MonomialOrder::Block { split } => split == count,
        }
    }
}
