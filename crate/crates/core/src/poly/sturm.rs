//! Exact positive-root counting and isolation with Sturm chains.

use serde::{Deserialize, Serialize};

use super::univariate::Polynomial;
use super::PolyError;
use crate::scalar::ExactScalar;

/// A distinct positive root: the open interval `(lo, hi)` contains exactly
/// this root and no other, and the square-free part changes sign across it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolatedRoot<T> {
    pub lo: T,
    pub hi: T,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCount<T> {
    pub distinct_positive: usize,
    /// Sorted by position.
    pub roots: Vec<IsolatedRoot<T>>,
}

/// `p / gcd(p, p')`, made monic.
pub fn square_free_part<T: ExactScalar>(p: &Polynomial<T>) -> Polynomial<T> {
    if p.degree().unwrap_or(0) == 0 {
        return p.monic();
    }
    let g = p.gcd(&p.derivative());
    p.quot(&g).monic()
}

/// Yun's square-free factorization: `factors[i]` collects the roots of
/// multiplicity `i + 1`. Constant factors are omitted from the product.
pub fn square_free_factors<T: ExactScalar>(p: &Polynomial<T>) -> Vec<Polynomial<T>> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.quot(&a0);
    let c = dp.quot(&a0);
    let mut d = &c - &b.derivative();
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        let nb = b.quot(&a);
        let nc = d.quot(&a);
        d = &nc - &nb.derivative();
        b = nb;
        out.push(a);
    }
    out
}

pub fn sturm_chain<T: ExactScalar>(p: &Polynomial<T>) -> Vec<Polynomial<T>> {
    let mut chain = vec![p.clone()];
    if p.degree().unwrap_or(0) == 0 {
        return chain;
    }
    chain.push(p.derivative());
    loop {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

fn variations<T: ExactScalar>(signs: impl Iterator<Item = T>) -> usize {
    let mut last: Option<bool> = None;
    let mut count = 0;
    for s in signs.filter(|s| !s.is_zero()) {
        let pos = s.is_positive();
        if last.is_some_and(|l| l != pos) {
            count += 1;
        }
        last = Some(pos);
    }
    count
}

fn variations_at<T: ExactScalar>(chain: &[Polynomial<T>], x: &T) -> usize {
    variations(chain.iter().map(|q| q.eval(x)))
}

fn variations_at_infinity<T: ExactScalar>(chain: &[Polynomial<T>]) -> usize {
    variations(chain.iter().filter_map(|q| q.leading().cloned()))
}

/// `1 + max |a_i / a_n|`: every root has modulus strictly below this.
pub fn cauchy_bound<T: ExactScalar>(p: &Polynomial<T>) -> T {
    let lc = p.leading().cloned().unwrap_or_else(T::one).abs();
    let n = p.coeffs().len().saturating_sub(1);
    let max = p.coeffs()[..n]
        .iter()
        .map(|c| c.abs() / lc.clone())
        .fold(T::zero(), |m, v| if v > m { v } else { m });
    T::one() + max
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

/// Count and isolate the distinct roots of `p` in `(0, ∞)`.
///
/// A root at exactly zero is not counted. Multiplicities come from the
/// square-free factorization of `p`.
pub fn sturm_positive_roots<T: ExactScalar>(
    p: &Polynomial<T>,
) -> Result<RootCount<T>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let (_, core) = p.split_zero_root();
    let q = square_free_part(&core);
    if q.degree() == Some(0) {
        return Ok(RootCount {
            distinct_positive: 0,
            roots: Vec::new(),
        });
    }
    let chain = sturm_chain(&q);
    let total = variations_at(&chain, &T::zero()) - variations_at_infinity(&chain);
    let mut intervals = Vec::new();
    if total > 0 {
        let two = T::from_int(2);
        let mut stack = vec![(T::zero(), cauchy_bound(&q), total)];
        while let Some((a, b, count)) = stack.pop() {
            match count {
                0 => {}
                1 => intervals.push((a, b)),
                _ => {
                    let mut m = (a.clone() + b.clone()) / two.clone();
                    while q.eval(&m).is_zero() {
                        m = (a.clone() + m) / two.clone();
                    }
                    let vm = variations_at(&chain, &m);
                    let left = variations_at(&chain, &a) - vm;
                    let right = vm - variations_at(&chain, &b);
                    stack.push((m.clone(), b, right));
                    stack.push((a, m, left));
                }
            }
        }
    }
    intervals.sort_by(|x, y| x.0.partial_cmp(&y.0).expect("ordered field"));

    let factors = square_free_factors(&core);
    let roots = intervals
        .into_iter()
        .map(|(lo, hi)| {
            let multiplicity = factors
                .iter()
                .position(|f| sign(&f.eval(&lo)) * sign(&f.eval(&hi)) < 0)
                .map_or(1, |i| i + 1);
            IsolatedRoot { lo, hi, multiplicity }
        })
        .collect::<Vec<_>>();
    Ok(RootCount {
        distinct_positive: roots.len(),
        roots,
    })
}

/// Shrink an isolating interval by exact bisection until its width is at most `tol`.
pub fn refine_interval<T: ExactScalar>(
    p: &Polynomial<T>,
    lo: &T,
    hi: &T,
    tol: &T,
) -> Result<(T, T), PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if lo > hi {
        return Err(PolyError::NotIsolating);
    }
    let q = square_free_part(p);
    let (mut a, mut b) = (lo.clone(), hi.clone());
    let (fa, fb) = (q.eval(&a), q.eval(&b));
    if fa.is_zero() {
        return Ok((a.clone(), a));
    }
    if fb.is_zero() {
        return Ok((b.clone(), b));
    }
    let sa = sign(&fa);
    if sa == sign(&fb) {
        return Err(PolyError::NotIsolating);
    }
    let two = T::from_int(2);
    while b.clone() - a.clone() > *tol {
        let m = (a.clone() + b.clone()) / two.clone();
        let sm = sign(&q.eval(&m));
        if sm == 0 {
            return Ok((m.clone(), m));
        }
        if sm == sa {
            a = m;
        } else {
            b = m;
        }
    }
    Ok((a, b))
}

/// Approximate the root isolated by `[lo, hi]` to within `tol`.
pub fn refine_root<T: ExactScalar>(
    p: &Polynomial<T>,
    lo: &T,
    hi: &T,
    tol: &T,
) -> Result<f64, PolyError> {
    let (a, b) = refine_interval(p, lo, hi, tol)?;
    let mid = (a + b) / T::from_int(2);
    Ok(mid.to_f64_lossy())
}
