//! Sparse multivariate polynomials over a fixed, named variable list.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::scalar::Scalar;

/// Terms map exponent vectors (one entry per variable) to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly<T> {
    vars: Arc<[String]>,
    terms: BTreeMap<Vec<u32>, T>,
}

impl<T: Scalar> MultiPoly<T> {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        Self {
            vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    fn zero_like(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: T) -> Self {
        let mut p = Self::zero(vars);
        p.insert(vec![0; vars.len()], c);
        p
    }

    /// The variable with index `idx`.
    pub fn variable<S: AsRef<str>>(vars: &[S], idx: usize) -> Self {
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        let mut p = Self::zero(vars);
        p.insert(exps, T::one());
        p
    }

    /// `sum coeff_i * var_i` for the given (variable index, coefficient) pairs.
    pub fn linear<S: AsRef<str>>(vars: &[S], coeffs: &[(usize, i64)]) -> Self {
        coeffs.iter().fold(Self::zero(vars), |acc, &(i, c)| {
            &acc + &Self::variable(vars, i).scale(&T::from_int(c))
        })
    }

    fn insert(&mut self, exps: Vec<u32>, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &T)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Highest total degree, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            Some(d) => degs.all(|x| x == d),
            None => true,
        }
    }

    /// Coefficient of the monomial given as (variable name, power) pairs.
    /// Unknown variable names yield zero.
    pub fn coefficient(&self, monomial: &[(&str, u32)]) -> T {
        let mut exps = vec![0; self.vars.len()];
        for &(name, e) in monomial {
            match self.vars.iter().position(|v| v == name) {
                Some(i) => exps[i] += e,
                None => return T::zero(),
            }
        }
        self.terms.get(&exps).cloned().unwrap_or_else(T::zero)
    }

    pub fn scale(&self, k: &T) -> Self {
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            out.insert(e.clone(), c.clone() * k.clone());
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::constant(&self.vars, T::one());
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Evaluate at a point given in variable order.
    ///
    /// # Panics
    /// If `point` has the wrong length.
    pub fn eval(&self, point: &[T]) -> T {
        assert_eq!(point.len(), self.vars.len(), "point dimension");
        self.terms.iter().fold(T::zero(), |acc, (e, c)| {
            let m = e
                .iter()
                .zip(point)
                .fold(c.clone(), |m, (&k, x)| m * num_traits::pow(x.clone(), k as usize));
            acc + m
        })
    }

    /// Drop every term that involves one of `names` (substitute zero).
    pub fn set_to_zero(&self, names: &[&str]) -> Self {
        let idx: Vec<usize> = names
            .iter()
            .filter_map(|n| self.vars.iter().position(|v| v == n))
            .collect();
        Self {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| idx.iter().all(|&i| e[i] == 0))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Re-express over another variable list. Fails if a used variable is missing.
    pub fn with_vars<S: AsRef<str>>(&self, vars: &[S]) -> Option<Self> {
        let mut out = Self::zero(vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; vars.len()];
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let j = vars.iter().position(|v| v.as_ref() == self.vars[i])?;
                ne[j] = k;
            }
            out.insert(ne, c.clone());
        }
        Some(out)
    }

    fn same_vars(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "polynomials over different variable lists"
        );
    }

    /// Terms in canonical order: total degree descending, then exponent
    /// vectors lexicographically descending.
    pub fn sorted_terms(&self) -> Vec<(&[u32], &T)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|(a, _), (b, _)| graded_lex_desc(a, b));
        v
    }
}

fn graded_lex_desc(a: &[u32], b: &[u32]) -> Ordering {
    let (da, db) = (a.iter().sum::<u32>(), b.iter().sum::<u32>());
    db.cmp(&da).then_with(|| b.cmp(a))
}

impl<T: Scalar> Add for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn add(self, rhs: Self) -> MultiPoly<T> {
        self.same_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn sub(self, rhs: Self) -> MultiPoly<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Neg for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn neg(self) -> MultiPoly<T> {
        self.scale(&-T::one())
    }
}

impl<T: Scalar> Mul for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn mul(self, rhs: Self) -> MultiPoly<T> {
        self.same_vars(rhs);
        let mut out = self.zero_like();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

/// Canonical text form, e.g. `-27*k14^2*k32^2 + 18*k14*k23*k32*k41`.
impl<T: Scalar> fmt::Display for MultiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (exps, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let factors: Vec<String> = exps
                .iter()
                .zip(self.vars.iter())
                .filter(|(&e, _)| e > 0)
                .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};
    use num_rational::BigRational;

    type M = MultiPoly<BigRational>;
    const V: [&str; 3] = ["x", "y", "z"];

    #[test]
    fn expansion_and_cancellation() {
        let x = M::variable(&V, 0);
        let y = M::variable(&V, 1);
        let sq = (&x + &y).pow(2);
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(sq.coefficient(&[("x", 1), ("y", 1)]), rat_int(2));
        assert_eq!(sq.to_string(), "x^2 + 2*x*y + y^2");
        let diff = &(&x + &y) * &(&x - &y);
        assert_eq!(diff.to_string(), "x^2 - y^2");
        assert!((&diff - &diff).is_zero());
        assert!(sq.is_homogeneous());
        assert_eq!(sq.total_degree(), Some(2));
    }

    #[test]
    fn constants_and_substitution() {
        let p = &M::linear(&V, &[(0, 3), (2, -1)]) + &M::constant(&V, rat(1, 2));
        assert_eq!(p.to_string(), "3*x - z + 1/2");
        assert!(!p.is_homogeneous());
        assert_eq!(p.eval(&[rat_int(1), rat_int(5), rat_int(2)]), rat(3, 2));
        assert_eq!(p.set_to_zero(&["z"]).to_string(), "3*x + 1/2");
        let q = p.set_to_zero(&["y"]).with_vars(&["z", "x"]).unwrap();
        assert_eq!(q.to_string(), "-z + 3*x + 1/2");
        assert!(p.with_vars(&["x"]).is_none());
        assert_eq!(M::zero(&V).to_string(), "0");
    }
}
