//! Cubic discriminants, numeric and symbolic.

use super::multivariate::MultiPoly;
use super::PolyError;
use crate::scalar::Scalar;

/// Discriminant of `a x^3 + b x^2 + c x + d`:
/// `18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27a^2 d^2`.
pub fn cubic_discriminant<T: Scalar>(a: &T, b: &T, c: &T, d: &T) -> T {
    let k = |v: i64| T::from_int(v);
    let (a, b, c, d) = (a.clone(), b.clone(), c.clone(), d.clone());
    k(18) * a.clone() * b.clone() * c.clone() * d.clone()
        - k(4) * b.clone() * b.clone() * b.clone() * d.clone()
        + b.clone() * b * c.clone() * c.clone()
        - k(4) * a.clone() * c.clone() * c.clone() * c
        - k(27) * a.clone() * a * d.clone() * d
}

/// Discriminant of a cubic after dropping vanishing leading coefficients.
///
/// `coeffs` are `[a3, a2, a1, a0]`, highest degree first. Returns the
/// discriminant of the polynomial at its true degree together with that
/// degree; linear and constant polynomials get the value 1.
pub fn deflated_discriminant<T: Scalar>(coeffs: &[T; 4]) -> Result<(T, usize), PolyError> {
    let [a3, a2, a1, a0] = coeffs;
    if !a3.is_zero() {
        Ok((cubic_discriminant(a3, a2, a1, a0), 3))
    } else if !a2.is_zero() {
        Ok((a1.clone() * a1.clone() - T::from_int(4) * a2.clone() * a0.clone(), 2))
    } else if !a1.is_zero() {
        Ok((T::one(), 1))
    } else if !a0.is_zero() {
        Ok((T::one(), 0))
    } else {
        Err(PolyError::AllZeroCoefficients)
    }
}

/// The cubic discriminant with symbolic coefficients, fully expanded.
pub fn symbolic_cubic_discriminant<T: Scalar>(
    a: &MultiPoly<T>,
    b: &MultiPoly<T>,
    c: &MultiPoly<T>,
    d: &MultiPoly<T>,
) -> MultiPoly<T> {
    let k = |v: i64| T::from_int(v);
    let abcd = &(&(a * b) * c) * d;
    let b3d = &b.pow(3) * d;
    let b2c2 = &b.pow(2) * &c.pow(2);
    let ac3 = a * &c.pow(3);
    let a2d2 = &a.pow(2) * &d.pow(2);
    let mut out = abcd.scale(&k(18));
    out = &out - &b3d.scale(&k(4));
    out = &out + &b2c2;
    out = &out - &ac3.scale(&k(4));
    &out - &a2d2.scale(&k(27))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;
    use num_rational::BigRational;

    fn r(v: i64) -> BigRational {
        rat_int(v)
    }

    #[test]
    fn numeric_cubic_discriminant() {
        assert_eq!(cubic_discriminant(&r(-1), &r(1), &r(-1), &r(1)), r(-16));
        // roots 1,2,3: a^4 * prod (ri - rj)^2 = 4
        assert_eq!(cubic_discriminant(&r(-1), &r(6), &r(-11), &r(6)), r(4));
        assert_eq!(cubic_discriminant(&r(1), &r(0), &r(0), &r(0)), r(0));
        assert_eq!(cubic_discriminant(&-1.0f64, &1.0, &-1.0, &1.0), -16.0);
    }

    #[test]
    fn deflation() {
        assert_eq!(deflated_discriminant(&[r(-1), r(6), r(-11), r(6)]).unwrap(), (r(4), 3));
        assert_eq!(deflated_discriminant(&[r(0), r(0), r(-2), r(6)]).unwrap(), (r(1), 1));
        assert_eq!(deflated_discriminant(&[r(0), r(1), r(-2), r(1)]).unwrap(), (r(0), 2));
        assert_eq!(deflated_discriminant(&[r(0), r(0), r(0), r(3)]).unwrap(), (r(1), 0));
        assert_eq!(
            deflated_discriminant(&[r(0), r(0), r(0), r(0)]),
            Err(PolyError::AllZeroCoefficients)
        );
    }

    #[test]
    fn symbolic_matches_numeric() {
        let vars = ["a", "b", "c", "d"];
        let v = |i| MultiPoly::<BigRational>::variable(&vars, i);
        let disc = symbolic_cubic_discriminant(&v(0), &v(1), &v(2), &v(3));
        assert_eq!(disc.num_terms(), 5);
        assert_eq!(
            disc.to_string(),
            "-27*a^2*d^2 + 18*a*b*c*d - 4*a*c^3 - 4*b^3*d + b^2*c^2"
        );
        let pt = [r(2), r(-3), r(5), r(7)];
        assert_eq!(disc.eval(&pt), cubic_discriminant(&pt[0], &pt[1], &pt[2], &pt[3]));
    }
}
