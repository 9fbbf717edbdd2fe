//! Scalar traits shared by the polynomial, linear-algebra and dynamics code.
//!
//! Everything that makes a sign decision (root counting, discriminant signs,
//! toric conditions) is written against [`ExactScalar`]; the floating types
//! only implement [`Scalar`] and are used for evaluation and integration.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// An ordered field.
pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Num + Signed + FromPrimitive + ToPrimitive + Send + Sync
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every i64 is representable")
    }

    /// `num / den` as a field element.
    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

/// Marker for fields with exact arithmetic: `==` and sign tests are reliable.
pub trait ExactScalar: Scalar + Eq + Ord + std::hash::Hash {}

impl Scalar for f32 {}
impl Scalar for f64 {}
impl Scalar for Rational64 {}
impl Scalar for BigRational {}

impl ExactScalar for Rational64 {}
impl ExactScalar for BigRational {}

/// Convert a small integer to a big rational.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}
