//! The surfaces `X_m` and `Y_m`, the certificate matrices `N(k)`, `L(k)`,
//! `W(k)`, and the checks built on them.

mod bounds;
mod certify;
mod columns;
mod hilbert;
mod matrices;
mod powers;
mod support;
mod toric;

pub use bounds::{
    cc_bound, conjectured_regularity, degree_formula, eg_bound, maxdeg_lower_bound, q_off_y, ConjecturedRegularity,
    QOffY,
};
pub use certify::{certify, certify_invertible, CertReport, CertifyOptions, ConjecturedRegularityReport, Timings};
pub use columns::{column_certificates, verify_column_certificates, ColumnCertificate, ColumnCheck, StaircaseStep};
pub use hilbert::{hilbert_dim, hilbert_poly_fit, H1Entry, HilbertDim, HilbertFit};
pub use matrices::{
    b, build_matrix, build_matrix_mod3, build_matrix_residues, fixture_diff, fixture_mod3, n_cols, n_rows,
    w_block_from_n_block, BuildMode, CertMatrixSpec, FixtureDiff, FixtureMismatch, Which,
};
pub use powers::{power_family_independent, power_family_matrix, PowerFamily};
pub use support::{enumerate_support_monomials, peel_forced, peel_w_family, PeeledFamily, SupportFamily};
pub use toric::{toric_degree, y_points, LatticePointSet, ToricDegree};

use thiserror::Error;

use crate::arith::{ArithError, IntegerCoeffs};
use crate::groebner::GroebnerError;
use crate::linalg::LinalgError;
use crate::poly::{parse_poly, MonomialOrder, PolyError, PolyRing, SectionMap};

#[derive(Debug, Error)]
pub enum CertError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("fixture: {0}")]
    Fixture(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// Which linear system on `P^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Four monomials and the binomial `y_1^m + y_1^{m-3} y_2^3`.
    X,
    /// The six monomials; `X_m` is its projection from a point.
    Y,
    /// `Y` after the change of coordinates `[x_0, x_1, x_2 + x_3, x_4, x_5, x_2]`,
    /// so that dropping `x_5` is the projection onto `X_m`.
    YLambda,
}

/// Sections of `O_{P^2}(m)` defining `X_m`, `Y_m` or the coordinate-changed
/// `Y_m`, in `Z[y_0, y_1, y_2]` with targets `x_0, x_1, ..`.
pub fn sections(m: u32, variant: Variant) -> Result<SectionMap<IntegerCoeffs>, CertError> {
    if m < 6 {
        return Err(CertError::InvalidArgument(format!("m = {m}, need m >= 6")));
    }
    let ring = PolyRing::new(
        IntegerCoeffs,
        vec!["y0".into(), "y1".into(), "y2".into()],
        MonomialOrder::DegRevLex,
    )?;
    let texts: Vec<String> = match variant {
        Variant::X => vec![
            format!("y1^{}*y2", m - 1),
            format!("y0^{}*y1", m - 1),
            format!("y1^{m} + y1^{}*y2^3", m - 3),
            format!("y0^{m}"),
            format!("y2^{}*y0", m - 1),
        ],
        Variant::Y => vec![
            format!("y1^{}*y2", m - 1),
            format!("y0^{}*y1", m - 1),
            format!("y1^{m}"),
            format!("y1^{}*y2^3", m - 3),
            format!("y0^{m}"),
            format!("y2^{}*y0", m - 1),
        ],
        Variant::YLambda => vec![
            format!("y1^{}*y2", m - 1),
            format!("y0^{}*y1", m - 1),
            format!("y1^{m} + y1^{}*y2^3", m - 3),
            format!("y0^{m}"),
            format!("y2^{}*y0", m - 1),
            format!("y1^{m}"),
        ],
    };
    let polys = texts
        .iter()
        .map(|t| parse_poly(&ring, t))
        .collect::<Result<Vec<_>, _>>()?;
    let names = (0..polys.len()).map(|i| format!("x{i}")).collect();
    Ok(SectionMap::new(ring, names, polys)?)
}

/// Bundled input data.
pub mod data {
    pub const L1_MOD3: &str = include_str!("../../data/l1_mod3.csv");
    pub const W1_MOD3: &str = include_str!("../../data/w1_mod3.csv");
    /// A minimal generator of `I_{X_6}` of degree 34.
    pub const X6_GENERATOR_34: &str = include_str!("../../data/x6_generator_34.txt");
    pub const REG11_SURFACE: &str = include_str!("../../data/reg11_surface.txt");
    pub const REG11_THREEFOLD: &str = include_str!("../../data/reg11_threefold.txt");
    pub const R1_THREEFOLD: &str = include_str!("../../data/r1_threefold.txt");
    pub const Y6_LAMBDA: &str = include_str!("../../data/y6_lambda.txt");
}
