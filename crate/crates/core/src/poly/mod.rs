//! Exact polynomial arithmetic: univariate root counting and isolation,
//! cubic discriminants, and a small sparse multivariate type.

pub mod discriminant;
pub mod multivariate;
pub mod sturm;
pub mod univariate;

use thiserror::Error;

pub use discriminant::{cubic_discriminant, deflated_discriminant, symbolic_cubic_discriminant};
pub use multivariate::MultiPoly;
pub use sturm::{
    refine_interval, refine_root, square_free_factors, square_free_part, sturm_chain,
    sturm_positive_roots, IsolatedRoot, RootCount,
};
pub use univariate::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("the zero polynomial has no isolated roots")]
    ZeroPolynomial,
    #[error("interval does not isolate a sign change")]
    NotIsolating,
    #[error("all coefficients are zero")]
    AllZeroCoefficients,
}
