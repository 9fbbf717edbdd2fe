//! Networks on the four complexes `c1^3, c1c2^2, c2^3, c1^2c2`.
//!
//! Complexes are labelled 1..4 in that order and edges are written with these
//! 1-based labels, so `(2, 3)` is the reaction `c1c2^2 -> c2^3` with rate κ23.
//! On the invariant line `c1 + c2 = T` every steady state is a positive root
//! of the cubic `p(x) = -S0 x^3 + S1 x^2 - S2 x + S3` in `x = c1/c2`, with
//! `dc1/dt = c2^3 p(c1/c2)`.

mod family;
mod params_file;
mod sweep;
mod symbolic;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::network::{Network, RateAssignment};
use crate::poly::{self, Polynomial, PolyError};
use crate::scalar::{ExactScalar, Scalar};
use crate::Rational;

pub use family::{
    capable_of_multistationarity, directed, enumerate_reversible_multistationary, witness_parameters,
    Enumeration, UNDIRECTED_EDGES,
};
pub use params_file::{format_params, parse_params, ParamsError};
pub use sweep::{figure1_sweep, write_sweep_csv, GridRange, SweepRecord, SWEEP_HEADER};
pub use symbolic::{symbolic_discriminant, Family};

/// The twelve admissible edges, in the order κ12, κ13, κ14, κ21, κ23, κ24,
/// κ31, κ32, κ34, κ41, κ42, κ43.
pub const EDGES: [(usize, usize); 12] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 1),
    (2, 3),
    (2, 4),
    (3, 1),
    (3, 2),
    (3, 4),
    (4, 1),
    (4, 2),
    (4, 3),
];

/// The eight edges of the Square itself.
pub const SQUARE_EDGES: [(usize, usize); 8] =
    [(1, 2), (1, 4), (2, 1), (2, 3), (3, 2), (3, 4), (4, 1), (4, 3)];

/// The vertical two-edge subnetwork.
pub const VERTICAL_EDGES: [(usize, usize); 4] = [(1, 4), (2, 3), (3, 2), (4, 1)];

/// Square with the bottom edge (3 ⇄ 4) removed.
pub const SUBNETWORK1_EDGES: [(usize, usize); 6] = [(1, 2), (1, 4), (2, 1), (2, 3), (3, 2), (4, 1)];

/// Exponent vectors of the four complexes over (c1, c2).
pub const COMPLEXES: [[u32; 2]; 4] = [[3, 0], [1, 2], [0, 3], [2, 1]];

pub fn edge_name(e: (usize, usize)) -> String {
    format!("k{}{}", e.0, e.1)
}

fn edge_index(e: (usize, usize)) -> Option<usize> {
    EDGES.iter().position(|&x| x == e)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SquareError {
    #[error("trivial network: every rate constant is zero")]
    Trivial,
    #[error("rate constant {0} is negative")]
    NegativeRate(String),
    #[error("({0}, {1}) is not one of the twelve admissible edges")]
    NotAnEdge(usize, usize),
    #[error("triple-root condition needs S0 > 0")]
    ZeroLeading,
    #[error("p is identically zero; no row of the classification table applies")]
    NoTableRow,
    #[error("roots and total must be positive")]
    NonPositive,
    #[error("{0}")]
    Precondition(String),
}

/// Nonnegative rates on the twelve admissible edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareParams<T = Rational> {
    k: [T; 12],
}

impl<T: Scalar> SquareParams<T> {
    pub fn zero() -> Self {
        Self {
            k: std::array::from_fn(|_| T::zero()),
        }
    }

    /// Rates in [`EDGES`] order.
    pub fn new(k: [T; 12]) -> Result<Self, SquareError> {
        for (v, &e) in k.iter().zip(&EDGES) {
            if v.is_negative() {
                return Err(SquareError::NegativeRate(edge_name(e)));
            }
        }
        Ok(Self { k })
    }

    /// Rates for the given edges, all others zero.
    pub fn from_edges(rates: &[((usize, usize), T)]) -> Result<Self, SquareError> {
        let mut p = Self::zero();
        for (e, v) in rates {
            p.set(*e, v.clone())?;
        }
        Ok(p)
    }

    /// Convenience for the Square's eight rates in the order
    /// (κ12, κ14, κ21, κ23, κ32, κ34, κ41, κ43).
    pub fn square(rates: [T; 8]) -> Result<Self, SquareError> {
        let pairs: Vec<_> = SQUARE_EDGES.iter().copied().zip(rates).collect();
        Self::from_edges(&pairs)
    }

    pub fn set(&mut self, e: (usize, usize), v: T) -> Result<(), SquareError> {
        let i = edge_index(e).ok_or(SquareError::NotAnEdge(e.0, e.1))?;
        if v.is_negative() {
            return Err(SquareError::NegativeRate(edge_name(e)));
        }
        self.k[i] = v;
        Ok(())
    }

    /// κ_ij; zero for `i == j` or labels outside 1..=4.
    pub fn k(&self, i: usize, j: usize) -> T {
        edge_index((i, j)).map_or_else(T::zero, |idx| self.k[idx].clone())
    }

    pub fn rates(&self) -> &[T; 12] {
        &self.k
    }

    /// Edges with a strictly positive rate.
    pub fn support(&self) -> Vec<(usize, usize)> {
        EDGES
            .iter()
            .zip(&self.k)
            .filter(|(_, v)| v.is_positive())
            .map(|(&e, _)| e)
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.k.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, lambda: &T) -> Self {
        Self {
            k: std::array::from_fn(|i| self.k[i].clone() * lambda.clone()),
        }
    }

    /// Exchange the species: complexes 1 ↔ 3 and 2 ↔ 4.
    pub fn swap_species(&self) -> Self {
        let relabel = |v: usize| [3, 4, 1, 2][v - 1];
        let mut out = Self::zero();
        for &(i, j) in &EDGES {
            out.k[edge_index((relabel(i), relabel(j))).unwrap()] = self.k(i, j);
        }
        out
    }
}

impl SquareParams<Rational> {
    /// The complete 12-edge network; zero rates keep their edge.
    pub fn network() -> Network {
        Network::new(
            vec!["c1".into(), "c2".into()],
            COMPLEXES.iter().map(|y| y.to_vec()).collect(),
            EDGES.iter().map(|&(i, j)| (i - 1, j - 1)).collect(),
        )
        .expect("the complete network is valid")
    }

    /// The network restricted to the given edges.
    pub fn network_on(edges: &[(usize, usize)]) -> Network {
        Self::network()
            .with_edges(edges.iter().map(|&(i, j)| (i - 1, j - 1)).collect())
            .expect("admissible edges")
    }

    /// Rates keyed by 0-based complex indices, for [`SquareParams::network`].
    pub fn rate_assignment(&self) -> RateAssignment {
        let mut r = RateAssignment::new();
        for (&(i, j), v) in EDGES.iter().zip(&self.k) {
            r.set(i - 1, j - 1, v.clone());
        }
        r
    }
}

/// The signed coefficients (S0, S1, S2, S3) of `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CubicForm<T = Rational> {
    pub s0: T,
    pub s1: T,
    pub s2: T,
    pub s3: T,
}

impl<T: Scalar> CubicForm<T> {
    pub fn new(s0: T, s1: T, s2: T, s3: T) -> Self {
        Self { s0, s1, s2, s3 }
    }

    pub fn from_ints(s: [i64; 4]) -> Self {
        Self::new(T::from_int(s[0]), T::from_int(s[1]), T::from_int(s[2]), T::from_int(s[3]))
    }

    /// Coefficients of `p`, highest degree first: `(-S0, S1, -S2, S3)`.
    pub fn descending(&self) -> [T; 4] {
        [
            -self.s0.clone(),
            self.s1.clone(),
            -self.s2.clone(),
            self.s3.clone(),
        ]
    }

    /// `p(x) = -S0 x^3 + S1 x^2 - S2 x + S3`.
    pub fn polynomial(&self) -> Polynomial<T> {
        Polynomial::from_descending(self.descending().to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.s0.is_zero() && self.s1.is_zero() && self.s2.is_zero() && self.s3.is_zero()
    }

    /// Discriminant of `p` at its true degree, and that degree.
    pub fn discriminant(&self) -> Result<(T, usize), PolyError> {
        poly::deflated_discriminant(&self.descending())
    }
}

pub fn signed_coefficients<T: Scalar>(k: &SquareParams<T>) -> CubicForm<T> {
    let c = |v: i64| T::from_int(v);
    CubicForm {
        s0: c(2) * k.k(1, 2) + c(3) * k.k(1, 3) + k.k(1, 4),
        s1: k.k(4, 1) - k.k(4, 2) - c(2) * k.k(4, 3),
        s2: -c(2) * k.k(2, 1) + k.k(2, 3) - k.k(2, 4),
        s3: c(3) * k.k(3, 1) + k.k(3, 2) + c(2) * k.k(3, 4),
    }
}

pub fn p_polynomial<T: Scalar>(f: &CubicForm<T>) -> Polynomial<T> {
    f.polynomial()
}

/// `3 S0 S2 = S1^2` and `27 S0^2 S3 = S1^3`: `p = -S0 (x - α)^3`.
pub fn triple_root_condition<T: ExactScalar>(f: &CubicForm<T>) -> Result<bool, SquareError> {
    if !f.s0.is_positive() {
        return Err(SquareError::ZeroLeading);
    }
    let c = |v: i64| T::from_int(v);
    let s1sq = f.s1.clone() * f.s1.clone();
    Ok(c(3) * f.s0.clone() * f.s2.clone() == s1sq
        && c(27) * f.s0.clone() * f.s0.clone() * f.s3.clone() == s1sq * f.s1.clone())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stability {
    Stable,
    Unstable,
    Semistable,
}

impl std::fmt::Display for Stability {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Stability::Stable => "stable",
            Stability::Unstable => "unstable",
            Stability::Semistable => "semistable",
        })
    }
}

/// One positive steady state on the invariant line, as a root of `p`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SteadyState {
    #[serde(with = "crate::rational::serde_str")]
    pub lo: BigRational,
    #[serde(with = "crate::rational::serde_str")]
    pub hi: BigRational,
    /// Refined value of `x = c1/c2`.
    pub x: f64,
    pub multiplicity: usize,
    pub stability: Stability,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub form: CubicFormText,
    pub steady_state_count: usize,
    pub stable_count: usize,
    pub roots: Vec<SteadyState>,
    /// `p ≡ 0`: every point of the invariant line is a steady state.
    pub degenerate_continuum: bool,
    #[serde(with = "crate::rational::serde_str")]
    pub discriminant: BigRational,
    /// Degree of `p` after deflation; `None` when `p ≡ 0`.
    pub effective_degree: Option<usize>,
}

/// [`CubicForm`] with rationals serialized as `p/q` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicFormText {
    #[serde(with = "crate::rational::serde_str")]
    pub s0: BigRational,
    #[serde(with = "crate::rational::serde_str")]
    pub s1: BigRational,
    #[serde(with = "crate::rational::serde_str")]
    pub s2: BigRational,
    #[serde(with = "crate::rational::serde_str")]
    pub s3: BigRational,
}

impl From<&CubicForm<Rational>> for CubicFormText {
    fn from(f: &CubicForm<Rational>) -> Self {
        Self {
            s0: f.s0.clone(),
            s1: f.s1.clone(),
            s2: f.s2.clone(),
            s3: f.s3.clone(),
        }
    }
}

/// Width below which root intervals are refined before reporting `x`.
fn refine_tolerance() -> Rational {
    Rational::new(1.into(), num_bigint::BigInt::from(1u64) << 40)
}

fn sign<T: ExactScalar>(v: &T) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Exact number and stability of the positive steady states.
///
/// A root is stable when `p` goes from positive to negative across it,
/// unstable for the reverse, semistable when `p` keeps its sign.
pub fn classify(k: &SquareParams<Rational>) -> Result<Classification, SquareError> {
    if k.is_trivial() {
        return Err(SquareError::Trivial);
    }
    Ok(classify_form(&signed_coefficients(k)))
}

/// [`classify`] starting from the signed coefficients.
pub fn classify_form(form: &CubicForm<Rational>) -> Classification {
    isolate(form, true)
}

/// Counts, discriminant and isolating intervals without the float refinement;
/// `x` is the interval midpoint.
pub fn classify_form_unrefined(form: &CubicForm<Rational>) -> Classification {
    isolate(form, false)
}

fn isolate(form: &CubicForm<Rational>, refine: bool) -> Classification {
    let p = form.polynomial();
    if p.is_zero() {
        return Classification {
            form: form.into(),
            steady_state_count: 0,
            stable_count: 0,
            roots: Vec::new(),
            degenerate_continuum: true,
            discriminant: Rational::zero(),
            effective_degree: None,
        };
    }
    let (disc, degree) = form.discriminant().expect("p is nonzero");
    let count = poly::sturm_positive_roots(&p).expect("p is nonzero");
    // sign of p on (0, ∞) equals the sign of p with its x-factors removed
    let (_, core) = p.split_zero_root();
    let tol = refine_tolerance();
    let roots: Vec<SteadyState> = count
        .roots
        .into_iter()
        .map(|r| {
            let left = sign(&core.eval(&r.lo));
            let right = sign(&core.eval(&r.hi));
            let stability = match (left, right) {
                (1, -1) => Stability::Stable,
                (-1, 1) => Stability::Unstable,
                _ => Stability::Semistable,
            };
            let x = if refine {
                poly::refine_root(&core, &r.lo, &r.hi, &tol).expect("isolating interval")
            } else {
                ((&r.lo + &r.hi) / Rational::from_integer(2.into())).to_f64_lossy()
            };
            SteadyState {
                lo: r.lo,
                hi: r.hi,
                x,
                multiplicity: r.multiplicity,
                stability,
            }
        })
        .collect();
    Classification {
        form: form.into(),
        steady_state_count: roots.len(),
        stable_count: roots.iter().filter(|r| r.stability == Stability::Stable).count(),
        roots,
        degenerate_continuum: false,
        discriminant: disc,
        effective_degree: Some(degree),
    }
}

/// The row of the classification table that fired (1-based, top to bottom)
/// and the counts it lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Table1Entry {
    pub row: usize,
    pub steady_states: usize,
    pub stable: usize,
}

/// The twelve-row classification table, transcribed row by row and evaluated
/// top-down with the deflated discriminant.
///
/// This is a reference for comparison, not ground truth: see [`classify`].
pub fn table1_predicate<T: ExactScalar>(f: &CubicForm<T>) -> Result<Table1Entry, SquareError> {
    let (d, _) = f.discriminant().map_err(|_| SquareError::NoTableRow)?;
    let z = T::zero();
    let (s0, s1, s2, s3) = (&f.s0, &f.s1, &f.s2, &f.s3);
    let all_pos = *s0 > z && *s1 > z && *s2 > z && *s3 > z;
    let entry = |row, steady_states, stable| Table1Entry {
        row,
        steady_states,
        stable,
    };
    Ok(if d < z {
        if (s0.clone() * s3.clone()).is_zero() {
            entry(1, 0, 0)
        } else {
            entry(2, 1, 1)
        }
    } else if d > z {
        if all_pos {
            entry(3, 3, 2)
        } else if *s0 > z && *s1 > z && *s2 > z && s3.is_zero() {
            entry(4, 2, 1)
        } else if *s1 > z && *s2 > z && *s3 > z && s0.is_zero() {
            entry(5, 2, 1)
        } else if s0.is_zero() && s3.is_zero() && s1.clone() * s2.clone() < z {
            entry(6, 0, 0)
        } else {
            entry(7, 1, 1)
        }
    } else if all_pos {
        if triple_root_condition(f)? {
            entry(8, 1, 1)
        } else {
            entry(9, 2, 1)
        }
    } else if *s1 <= z && s0.is_zero() && z <= *s2 && *s3 > z {
        entry(10, 0, 0)
    } else if *s1 <= z && s3.is_zero() && z <= *s2 && *s0 > z {
        entry(11, 0, 0)
    } else {
        entry(12, 2, 1)
    })
}

/// `x = c1/c2` on the line `c1 + c2 = total`, mapped to `(c1, c2)`.
pub fn roots_to_concentrations(roots: &[f64], total: f64) -> Result<Vec<[f64; 2]>, SquareError> {
    if !(total > 0.0) || roots.iter().any(|&x| !(x > 0.0)) {
        return Err(SquareError::NonPositive);
    }
    Ok(roots
        .iter()
        .map(|&x| [total * x / (1.0 + x), total / (1.0 + x)])
        .collect())
}

/// The rates that realize the cubic `-(x-1)(x-2)(x-3)` on the Square:
/// (κ12, κ14, κ21, κ23, κ32, κ34, κ41, κ43) = (1/4, 1/2, 1, 13, 2, 2, 8, 1).
pub fn bistable_params() -> SquareParams<Rational> {
    use crate::scalar::{rat, rat_int};
    SquareParams::square([
        rat(1, 4),
        rat(1, 2),
        rat_int(1),
        rat_int(13),
        rat_int(2),
        rat_int(2),
        rat_int(8),
        rat_int(1),
    ])
    .expect("nonnegative")
}

/// The same vector with κ32 = 1; it realizes `-x^3 + 6x^2 - 11x + 5`.
pub fn bistable_params_k32_1() -> SquareParams<Rational> {
    let mut k = bistable_params();
    k.set((3, 2), crate::scalar::rat_int(1)).unwrap();
    k
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HornJacksonVariant {
    /// (κ12, κ14, κ21, κ23, κ32, κ34, κ41, κ43) = (ε, 0, 1, 0, ε, 0, 1, 0).
    Printed,
    /// The directed 4-cycle κ12 = κ34 = ε, κ23 = κ41 = 1.
    Cycle,
}

pub fn horn_jackson_params(variant: HornJacksonVariant, eps: &Rational) -> Result<SquareParams<Rational>, SquareError> {
    if !eps.is_positive() {
        return Err(SquareError::NonPositive);
    }
    let one = crate::scalar::rat_int(1);
    let pairs = match variant {
        HornJacksonVariant::Printed => vec![
            ((1, 2), eps.clone()),
            ((2, 1), one.clone()),
            ((3, 2), eps.clone()),
            ((4, 1), one),
        ],
        HornJacksonVariant::Cycle => vec![
            ((1, 2), eps.clone()),
            ((3, 4), eps.clone()),
            ((2, 3), one.clone()),
            ((4, 1), one),
        ],
    };
    SquareParams::from_edges(&pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn form(s: [i64; 4]) -> CubicForm<Rational> {
        CubicForm::from_ints(s)
    }

    #[test]
    fn signed_coefficients_examples() {
        assert_eq!(signed_coefficients(&bistable_params()), form([1, 6, 11, 6]));
        assert_eq!(signed_coefficients(&bistable_params_k32_1()), form([1, 6, 11, 5]));
        assert_eq!(signed_coefficients(&SquareParams::<Rational>::zero()), form([0, 0, 0, 0]));
        let vertical = SquareParams::from_edges(&[
            ((1, 4), rat_int(1)),
            ((2, 3), rat_int(1)),
            ((3, 2), rat_int(1)),
            ((4, 1), rat_int(1)),
        ])
        .unwrap();
        assert_eq!(signed_coefficients(&vertical), form([1, 1, 1, 1]));
    }

    #[test]
    fn signed_coefficients_match_the_vector_field() {
        // dc1/dt = c2^3 p(c1/c2) for every admissible edge taken alone
        let net = SquareParams::network();
        for (idx, &e) in EDGES.iter().enumerate() {
            let mut k = SquareParams::<Rational>::zero();
            k.set(e, rat_int(idx as i64 + 2)).unwrap();
            let p = signed_coefficients(&k).polynomial();
            let (c1, c2) = (rat(3, 7), rat(5, 4));
            let psi = net.psi(&[c1.clone(), c2.clone()]).unwrap();
            let a = net.laplacian_matrix(&k.rate_assignment());
            let mut dc1 = rat_int(0);
            for i in 0..4 {
                for j in 0..4 {
                    dc1 += &psi[i] * &a[i][j] * rat_int(COMPLEXES[j][0] as i64);
                }
            }
            let x = &c1 / &c2;
            assert_eq!(dc1, &c2 * &c2 * &c2 * p.eval(&x), "edge {e:?}");
        }
    }

    #[test]
    fn p_polynomial_examples() {
        assert_eq!(p_polynomial(&form([1, 6, 11, 6])).to_string(), "-x^3 + 6x^2 - 11x + 6");
        assert_eq!(p_polynomial(&form([0, 0, 0, 1])).to_string(), "1");
        assert_eq!(p_polynomial(&form([1, 1, 1, 1])).to_string(), "-x^3 + x^2 - x + 1");
    }

    #[test]
    fn bistable_rates_give_three_states() {
        let c = classify(&bistable_params()).unwrap();
        assert_eq!((c.steady_state_count, c.stable_count), (3, 2));
        let labels: Vec<_> = c.roots.iter().map(|r| r.stability).collect();
        assert_eq!(labels, [Stability::Stable, Stability::Unstable, Stability::Stable]);
        for (r, exact) in c.roots.iter().zip([1.0, 2.0, 3.0]) {
            assert!((r.x - exact).abs() < 1e-12);
        }
        assert_eq!(c.discriminant, rat_int(4));
        assert_eq!(c.effective_degree, Some(3));
    }

    #[test]
    fn classify_small_cases() {
        let only23 = SquareParams::from_edges(&[((2, 3), rat_int(1))]).unwrap();
        let c = classify(&only23).unwrap();
        assert_eq!(c.steady_state_count, 0);

        let k = SquareParams::from_edges(&[
            ((4, 2), rat_int(1)),
            ((1, 4), rat_int(1)),
            ((2, 4), rat_int(1)),
            ((3, 2), rat_int(1)),
        ])
        .unwrap();
        assert_eq!(signed_coefficients(&k), form([1, -1, -1, 1]));
        let c = classify(&k).unwrap();
        assert_eq!((c.steady_state_count, c.stable_count), (1, 1));

        assert_eq!(classify(&SquareParams::zero()), Err(SquareError::Trivial));
    }

    #[test]
    fn degenerate_continuum() {
        let k = SquareParams::from_edges(&[
            ((4, 1), rat_int(2)),
            ((4, 3), rat_int(1)),
            ((2, 3), rat_int(2)),
            ((2, 1), rat_int(1)),
        ])
        .unwrap();
        let c = classify(&k).unwrap();
        assert!(c.degenerate_continuum);
        assert!(c.roots.is_empty());
        assert_eq!(c.effective_degree, None);
        assert_eq!(table1_predicate(&signed_coefficients(&k)), Err(SquareError::NoTableRow));
    }

    #[test]
    fn double_and_triple_roots() {
        // -(x-1)^3
        let c = classify_form(&form([1, 3, 3, 1]));
        assert_eq!((c.steady_state_count, c.stable_count), (1, 1));
        assert_eq!(c.roots[0].multiplicity, 3);
        assert_eq!(c.roots[0].stability, Stability::Stable);
        // -(x-1)^2 (x-2) = -x^3 + 4x^2 - 5x + 2
        let c = classify_form(&form([1, 4, 5, 2]));
        assert_eq!((c.steady_state_count, c.stable_count), (2, 1));
        assert_eq!(c.roots[0].stability, Stability::Semistable);
        assert_eq!(c.roots[0].multiplicity, 2);
        assert_eq!(c.roots[1].stability, Stability::Stable);
        // boundary: p = x (-(x-1)(x-2)), S3 = 0
        let c = classify_form(&form([1, 3, 2, 0]));
        let labels: Vec<_> = c.roots.iter().map(|r| r.stability).collect();
        assert_eq!(labels, [Stability::Unstable, Stability::Stable]);
    }

    #[test]
    fn triple_root_condition_examples() {
        assert_eq!(triple_root_condition(&form([1, 3, 3, 1])), Ok(true));
        assert_eq!(triple_root_condition(&form([1, 6, 11, 6])), Ok(false));
        assert_eq!(triple_root_condition(&form([1, 6, 12, 8])), Ok(true));
        assert_eq!(triple_root_condition(&form([0, 1, 1, 1])), Err(SquareError::ZeroLeading));
    }

    #[test]
    fn table_rows() {
        let row = |s| table1_predicate(&form(s)).unwrap();
        assert_eq!(row([1, 6, 11, 6]), Table1Entry { row: 3, steady_states: 3, stable: 2 });
        assert_eq!(row([1, 1, 1, 1]), Table1Entry { row: 2, steady_states: 1, stable: 1 });
        assert_eq!(row([1, 3, 3, 1]), Table1Entry { row: 8, steady_states: 1, stable: 1 });
        assert_eq!(row([1, 4, 5, 2]).row, 9);
        assert_eq!(row([0, 1, 3, 2]).row, 5);
        assert_eq!(row([1, 3, 2, 0]).row, 4);
        assert_eq!(row([0, 1, -1, 0]).row, 6);
        assert_eq!(row([0, 1, 1, 1]).row, 1);
    }

    #[test]
    fn known_divergences_from_the_table() {
        // D = 0 catch-all row: -(x-1)(x+1)^2 has one positive root
        let f = form([1, -1, -1, 1]);
        assert_eq!(table1_predicate(&f).unwrap().row, 12);
        assert_eq!(table1_predicate(&f).unwrap().steady_states, 2);
        assert_eq!(classify_form(&f).steady_state_count, 1);
        // D > 0 catch-all row on the boundary: x^2 + 3x + 1 has only negative roots
        let f = form([0, 1, -3, 1]);
        assert_eq!(table1_predicate(&f).unwrap().row, 7);
        assert_eq!(classify_form(&f).steady_state_count, 0);
    }

    #[test]
    fn concentrations_on_the_invariant_line() {
        let c = roots_to_concentrations(&[3.0, 1.0, 2.0], 4.0).unwrap();
        assert_eq!(c[0], [3.0, 1.0]);
        assert_eq!(c[1], [2.0, 2.0]);
        assert!((c[2][0] - 8.0 / 3.0).abs() < 1e-15 && (c[2][1] - 4.0 / 3.0).abs() < 1e-15);
        assert_eq!(roots_to_concentrations(&[1.0], 0.0), Err(SquareError::NonPositive));
        assert_eq!(roots_to_concentrations(&[-1.0], 1.0), Err(SquareError::NonPositive));
    }

    #[test]
    fn species_swap_relabels_edges() {
        let k = bistable_params();
        let s = k.swap_species();
        assert_eq!(s.k(3, 4), k.k(1, 2));
        assert_eq!(s.k(2, 3), k.k(4, 1));
        assert_eq!(s.swap_species(), k);
    }

    #[test]
    fn horn_jackson_variants() {
        let eps = rat(1, 100);
        let printed = horn_jackson_params(HornJacksonVariant::Printed, &eps).unwrap();
        let f = signed_coefficients(&printed);
        assert_eq!(f.s2, rat_int(-2));
        assert_eq!(classify(&printed).unwrap().steady_state_count, 1);
        let cycle = horn_jackson_params(HornJacksonVariant::Cycle, &eps).unwrap();
        assert_eq!(classify(&cycle).unwrap().steady_state_count, 3);
    }
}
