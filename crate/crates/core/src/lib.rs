//! Steady-state analysis for mass-action reaction networks on the four
//! complexes `c1^3, c1c2^2, c2^3, c1^2c2`.
//!
//! Exact decisions (root counts, discriminant signs, toric conditions) run on
//! [`Rational`]; trajectories are integrated in floating point.

pub mod cli;
pub mod dynamics;
pub mod linalg;
pub mod network;
pub mod parser;
pub mod poly;
pub mod rational;
pub mod scalar;
pub mod square;
pub mod toric;

pub use network::{Network, NetworkError, RateAssignment};
pub use parser::{parse_network, LabeledNetwork, ParseError};
pub use scalar::{ExactScalar, Scalar};

/// Arbitrary-precision rational, the exact scalar used throughout.
pub type Rational = num_rational::BigRational;

pub type RationalPolynomial = poly::Polynomial<Rational>;
pub type MultivariatePolynomial = poly::MultiPoly<Rational>;
pub type RootCount = poly::RootCount<Rational>;

/// Nonnegative species concentrations.
pub type Concentration = Vec<f64>;
pub type Trajectory = dynamics::Trajectory<f64>;
