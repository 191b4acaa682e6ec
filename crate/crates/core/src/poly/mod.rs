//! Sparse multivariate polynomials, monomial orders, section maps and the
//! restricted power-product families that fill the certificate matrices.

mod family;
mod monomial;
mod order;
mod parse;
mod ring;
mod sections;

pub use family::{build_f, coeff_row, family_monomial, family_range, restricted_ring, Context, Window};
pub use monomial::{monomials_of_degree, Monomial, MAX_VARS};
pub use order::MonomialOrder;
pub use parse::{ideal_from_text, parse_document, parse_poly, polys_from_text, section_map_from_text, Document};
pub use ring::{PolyRing, SparsePoly};
pub use sections::SectionMap;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("{0} variables exceed the limit of {MAX_VARS}")]
    TooManyVariables(usize),
    #[error("variable '{0}' declared twice")]
    DuplicateVariable(String),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("exponent {exponent} does not fit the window {window}")]
    OutsideWindow { exponent: u64, window: String },
}
