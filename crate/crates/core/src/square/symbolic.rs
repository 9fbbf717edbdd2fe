//! The discriminant of `p` as a polynomial in the rate constants.

use super::{edge_name, EDGES, SQUARE_EDGES, VERTICAL_EDGES};
use crate::poly::{symbolic_cubic_discriminant, MultiPoly};
use crate::scalar::Scalar;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// All twelve admissible edges.
    General12,
    /// The Square's eight edges.
    Square8,
    /// The vertical subnetwork's four edges.
    Vertical4,
}

impl Family {
    pub fn edges(self) -> &'static [(usize, usize)] {
        match self {
            Family::General12 => &EDGES,
            Family::Square8 => &SQUARE_EDGES,
            Family::Vertical4 => &VERTICAL_EDGES,
        }
    }

    pub fn variables(self) -> Vec<String> {
        self.edges().iter().map(|&e| edge_name(e)).collect()
    }
}

/// `(-S0, S1, -S2, S3)` with symbolic rates.
fn coefficients<T: Scalar>(family: Family) -> [MultiPoly<T>; 4] {
    let vars = family.variables();
    let edges = family.edges();
    let lin = |terms: &[((usize, usize), i64)]| {
        let present: Vec<_> = terms
            .iter()
            .filter_map(|&(e, c)| edges.iter().position(|&x| x == e).map(|i| (i, c)))
            .collect();
        MultiPoly::linear(&vars, &present)
    };
    [
        lin(&[((1, 2), -2), ((1, 3), -3), ((1, 4), -1)]),
        lin(&[((4, 1), 1), ((4, 2), -1), ((4, 3), -2)]),
        lin(&[((2, 1), 2), ((2, 3), -1), ((2, 4), 1)]),
        lin(&[((3, 1), 3), ((3, 2), 1), ((3, 4), 2)]),
    ]
}

/// Fully expanded discriminant of `p` over the rate constants of `family`.
pub fn symbolic_discriminant(family: Family) -> MultiPoly<Rational> {
    let [a, b, c, d] = coefficients(family);
    symbolic_cubic_discriminant(&a, &b, &c, &d)
}
