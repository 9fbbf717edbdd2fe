//! Reaction networks as digraphs on complexes, with their structural invariants.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::linalg;
use crate::rational::format_rational;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NetworkError {
    #[error("complex {0} has {1} exponents, expected {2}")]
    ComplexArity(usize, usize, usize),
    #[error("complexes {0} and {1} are identical")]
    DuplicateComplex(usize, usize),
    #[error("species {0} does not occur in any complex")]
    UnusedSpecies(String),
    #[error("edge ({0}, {1}) refers to a missing complex")]
    EdgeOutOfRange(usize, usize),
    #[error("self-loop at complex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("rate for ({0}, {1}) is not an edge of the network")]
    RateNotAnEdge(usize, usize),
    #[error("rate for ({0}, {1}) is negative")]
    NegativeRate(usize, usize),
    #[error("concentration has length {got}, network has {expected} species")]
    DimensionMismatch { got: usize, expected: usize },
}

/// A finite digraph whose vertices are complexes (exponent vectors over the species).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Network {
    species: Vec<String>,
    complexes: Vec<Vec<u32>>,
    edges: Vec<(usize, usize)>,
}

/// Nonnegative exact rate constant per directed edge; absent keys read as zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RateAssignment {
    rates: BTreeMap<(usize, usize), BigRational>,
}

impl RateAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Checked construction against a network.
    pub fn for_network(
        net: &Network,
        rates: impl IntoIterator<Item = ((usize, usize), BigRational)>,
    ) -> Result<Self, NetworkError> {
        let mut out = Self::new();
        for ((i, j), k) in rates {
            if !net.has_edge(i, j) {
                return Err(NetworkError::RateNotAnEdge(i, j));
            }
            if k.is_negative() {
                return Err(NetworkError::NegativeRate(i, j));
            }
            out.rates.insert((i, j), k);
        }
        Ok(out)
    }

    pub fn set(&mut self, i: usize, j: usize, k: BigRational) {
        self.rates.insert((i, j), k);
    }

    pub fn get(&self, i: usize, j: usize) -> BigRational {
        self.rates.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Edges carrying a strictly positive rate.
    pub fn support(&self) -> Vec<(usize, usize)> {
        self.rates
            .iter()
            .filter(|(_, k)| k.is_positive())
            .map(|(&e, _)| e)
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &BigRational)> {
        self.rates.iter()
    }

    pub fn is_all_zero(&self) -> bool {
        self.rates.values().all(Zero::is_zero)
    }

    /// Every rate multiplied by `factor`.
    pub fn scaled(&self, factor: &BigRational) -> Self {
        Self {
            rates: self.rates.iter().map(|(&e, k)| (e, k * factor)).collect(),
        }
    }
}

impl Network {
    pub fn new(
        species: Vec<String>,
        complexes: Vec<Vec<u32>>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self, NetworkError> {
        let s = species.len();
        let n = complexes.len();
        for (i, y) in complexes.iter().enumerate() {
            if y.len() != s {
                return Err(NetworkError::ComplexArity(i, y.len(), s));
            }
            if let Some(j) = complexes[..i].iter().position(|z| z == y) {
                return Err(NetworkError::DuplicateComplex(j, i));
            }
        }
        if n >= 1 {
            for (k, name) in species.iter().enumerate() {
                if complexes.iter().all(|y| y[k] == 0) {
                    return Err(NetworkError::UnusedSpecies(name.clone()));
                }
            }
        }
        let mut seen = BTreeSet::new();
        for &(i, j) in &edges {
            if i >= n || j >= n {
                return Err(NetworkError::EdgeOutOfRange(i, j));
            }
            if i == j {
                return Err(NetworkError::SelfLoop(i));
            }
            if !seen.insert((i, j)) {
                return Err(NetworkError::DuplicateEdge(i, j));
            }
        }
        Ok(Self {
            species,
            complexes,
            edges,
        })
    }

    pub fn empty() -> Self {
        Self {
            species: Vec::new(),
            complexes: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn species(&self) -> &[String] {
        &self.species
    }

    pub fn complexes(&self) -> &[Vec<u32>] {
        &self.complexes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_complexes(&self) -> usize {
        self.complexes.len()
    }

    pub fn num_species(&self) -> usize {
        self.species.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i, j))
    }

    /// The same complexes with a different edge set.
    pub fn with_edges(&self, edges: Vec<(usize, usize)>) -> Result<Self, NetworkError> {
        Self::new(self.species.clone(), self.complexes.clone(), edges)
    }

    /// Y: row `i` is the exponent vector of complex `i`.
    pub fn stoichiometric_matrix(&self) -> Vec<Vec<u32>> {
        self.complexes.clone()
    }

    /// Ψ(c): the monomial `c^{y_i}` for every complex, with `0^0 = 1`.
    pub fn psi<T: Scalar>(&self, c: &[T]) -> Result<Vec<T>, NetworkError> {
        self.check_dim(c.len())?;
        Ok(self
            .complexes
            .iter()
            .map(|y| {
                y.iter()
                    .zip(c)
                    .fold(T::one(), |acc, (&e, ck)| acc * num_traits::pow(ck.clone(), e as usize))
            })
            .collect())
    }

    pub(crate) fn check_dim(&self, got: usize) -> Result<(), NetworkError> {
        if got != self.species.len() {
            return Err(NetworkError::DimensionMismatch {
                got,
                expected: self.species.len(),
            });
        }
        Ok(())
    }

    /// A_κ, the negated graph Laplacian: off-diagonal `κ_ij`, zero row sums.
    pub fn laplacian_matrix(&self, k: &RateAssignment) -> Vec<Vec<BigRational>> {
        let n = self.complexes.len();
        let mut a = vec![vec![BigRational::zero(); n]; n];
        for &(i, j) in &self.edges {
            let kij = k.get(i, j);
            a[i][i] -= &kij;
            a[i][j] += kij;
        }
        a
    }

    /// Connected components of the underlying undirected graph, each sorted,
    /// ordered by their smallest complex.
    pub fn linkage_classes(&self) -> Vec<Vec<usize>> {
        components(self.complexes.len(), &self.edges)
    }

    /// Reaction vectors `y_j - y_i`, one per edge.
    pub fn reaction_vectors(&self) -> Vec<Vec<i64>> {
        self.edges
            .iter()
            .map(|&(i, j)| {
                self.complexes[j]
                    .iter()
                    .zip(&self.complexes[i])
                    .map(|(&b, &a)| b as i64 - a as i64)
                    .collect()
            })
            .collect()
    }

    /// Dimension of the stoichiometric subspace.
    pub fn stoichiometric_dimension(&self) -> usize {
        linalg::integer_rank(&self.reaction_vectors())
    }

    /// `n - l - dim S`.
    pub fn deficiency(&self) -> usize {
        let n = self.complexes.len();
        let l = self.linkage_classes().len();
        n - l - self.stoichiometric_dimension()
    }

    /// Integer basis of the conservation laws (orthogonal complement of S).
    pub fn conservation_laws(&self) -> Vec<Vec<i64>> {
        linalg::integer_kernel(&self.reaction_vectors(), self.species.len())
    }

    pub fn is_mass_preserving(&self) -> bool {
        let mut degrees = self.complexes.iter().map(|y| y.iter().sum::<u32>());
        match degrees.next() {
            Some(d0) => degrees.all(|d| d == d0),
            None => true,
        }
    }

    pub fn is_reversible(&self) -> bool {
        self.edges.iter().all(|&(i, j)| self.has_edge(j, i))
    }

    /// Human-readable complex, e.g. `A + 2B`.
    pub fn complex_label(&self, i: usize) -> String {
        let terms: Vec<String> = self.complexes[i]
            .iter()
            .zip(&self.species)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, name)| {
                if e == 1 {
                    name.clone()
                } else {
                    format!("{e}{name}")
                }
            })
            .collect();
        terms.join(" + ")
    }

    /// Serialize to the `.crn` text form, one irreversible statement per edge.
    ///
    /// Edges without a rate are written without an `@` clause (rate 1 on re-parse).
    pub fn to_dsl(&self, k: &RateAssignment) -> String {
        let mut out = String::new();
        for &(i, j) in &self.edges {
            let _ = write!(out, "{} -> {}", self.complex_label(i), self.complex_label(j));
            if let Some(r) = k.rates.get(&(i, j)) {
                let _ = write!(out, " @ {}", format_rational(r));
            }
            out.push('\n');
        }
        out
    }
}

pub(crate) fn components(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for &(i, j) in edges {
        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        classes.entry(r).or_default().push(v);
    }
    classes.into_values().collect()
}
