//! Matrix-Tree constants and the toric (complex-balancing) conditions for
//! the Square and its subnetworks.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::determinant;
use crate::network::{components, Network, RateAssignment};
use crate::poly::MultiPoly;
use crate::scalar::Scalar;
use crate::square::{SquareParams, SUBNETWORK1_EDGES, VERTICAL_EDGES};
use crate::{MultivariatePolynomial, Rational};

/// Largest number of complexes accepted by the arborescence enumeration.
pub const MAX_COMPLEXES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToricError {
    #[error("{0} complexes; arborescence enumeration supports at most 8")]
    TooLarge(usize),
    #[error("support is not strongly connected")]
    NotStronglyConnected,
    #[error("{0}")]
    Precondition(String),
}

/// One entry per complex.
pub type TreeConstants<T> = Vec<T>;

/// Spanning in-arborescences of `edges` on `n` vertices, as edge index sets,
/// grouped by root.
///
/// Every `(n-1)`-subset in which the root has no out-edge, every other vertex
/// has exactly one, and following out-edges never cycles is such a tree.
fn arborescences(n: usize, edges: &[(usize, usize)]) -> Result<Vec<Vec<Vec<usize>>>, ToricError> {
    if n > MAX_COMPLEXES {
        return Err(ToricError::TooLarge(n));
    }
    let mut out = vec![Vec::new(); n];
    if n == 0 {
        return Ok(out);
    }
    let mut chosen = Vec::with_capacity(n);
    let mut succ = vec![None; n];
    subsets(n, edges, 0, &mut chosen, &mut succ, &mut out);
    Ok(out)
}

fn subsets(
    n: usize,
    edges: &[(usize, usize)],
    start: usize,
    chosen: &mut Vec<usize>,
    succ: &mut Vec<Option<usize>>,
    out: &mut [Vec<Vec<usize>>],
) {
    if chosen.len() == n - 1 {
        let roots: Vec<_> = (0..n).filter(|&v| succ[v].is_none()).collect();
        let root = roots[0];
        let reaches_root = (0..n).all(|v| {
            let mut cur = v;
            for _ in 0..n {
                match succ[cur] {
                    Some(next) => cur = next,
                    None => break,
                }
            }
            cur == root
        });
        if reaches_root {
            out[root].push(chosen.clone());
        }
        return;
    }
    let needed = n - 1 - chosen.len();
    for idx in start..edges.len() {
        if edges.len() - idx < needed {
            break;
        }
        let (i, j) = edges[idx];
        if succ[i].is_some() {
            continue;
        }
        succ[i] = Some(j);
        chosen.push(idx);
        subsets(n, edges, idx + 1, chosen, succ, out);
        chosen.pop();
        succ[i] = None;
    }
}

fn evaluate<T: Clone>(
    n: usize,
    edges: &[(usize, usize)],
    weight: impl Fn(usize) -> T,
    zero: T,
    add: impl Fn(&T, &T) -> T,
    mul: impl Fn(&T, &T) -> T,
) -> Result<TreeConstants<T>, ToricError> {
    let trees = arborescences(n, edges)?;
    Ok(trees
        .iter()
        .map(|root_trees| {
            root_trees.iter().fold(zero.clone(), |acc, t| {
                let term = t[1..].iter().fold(weight(t[0]), |m, &e| mul(&m, &weight(e)));
                add(&acc, &term)
            })
        })
        .collect())
}

fn rational_sum(a: &Rational, b: &Rational) -> Rational {
    a + b
}

fn rational_product(a: &Rational, b: &Rational) -> Rational {
    a * b
}

fn positive_edges(net: &Network, k: &RateAssignment) -> Vec<(usize, usize)> {
    net.edges()
        .iter()
        .copied()
        .filter(|&(i, j)| !k.get(i, j).is_zero())
        .collect()
}

/// `K_i`: sum over spanning arborescences of the κ-support directed toward
/// complex `i` of the product of their rates.
pub fn matrix_tree(net: &Network, k: &RateAssignment) -> Result<TreeConstants<Rational>, ToricError> {
    let n = net.num_complexes();
    if n == 1 {
        return Ok(vec![Rational::one()]);
    }
    let edges = positive_edges(net, k);
    evaluate(
        n,
        &edges,
        |e| k.get(edges[e].0, edges[e].1),
        Rational::zero(),
        rational_sum,
        rational_product,
    )
}

/// Variable name of an edge: `k` followed by the 1-based endpoints.
pub fn rate_variable(e: (usize, usize)) -> String {
    format!("k{}{}", e.0 + 1, e.1 + 1)
}

/// [`matrix_tree`] with one variable per edge of `net`, named by [`rate_variable`].
pub fn matrix_tree_symbolic(net: &Network) -> Result<TreeConstants<MultivariatePolynomial>, ToricError> {
    let vars: Vec<String> = net.edges().iter().map(|&e| rate_variable(e)).collect();
    let n = net.num_complexes();
    if n == 1 {
        return Ok(vec![MultiPoly::constant(&vars, Rational::one())]);
    }
    evaluate(
        n,
        net.edges(),
        |e| MultiPoly::variable(&vars, e),
        MultiPoly::zero(&vars),
        |a, b| a + b,
        |a, b| a * b,
    )
}

/// `K_i` as the `(i, i)` principal minor of the Laplacian `L = -A_κ`.
pub fn cofactor_constants(net: &Network, k: &RateAssignment) -> TreeConstants<Rational> {
    let n = net.num_complexes();
    let l: Vec<Vec<Rational>> = net
        .laplacian_matrix(k)
        .into_iter()
        .map(|row| row.into_iter().map(|v| -v).collect())
        .collect();
    (0..n)
        .map(|i| {
            let minor: Vec<Vec<Rational>> = (0..n)
                .filter(|&r| r != i)
                .map(|r| (0..n).filter(|&c| c != i).map(|c| l[r][c].clone()).collect())
                .collect();
            if minor.is_empty() {
                Rational::one()
            } else {
                determinant(minor)
            }
        })
        .collect()
}

/// Tree constants computed separately inside each linkage class of the
/// κ-support. Disconnected networks get nonzero constants.
pub fn matrix_tree_by_linkage_class(
    net: &Network,
    k: &RateAssignment,
) -> Result<TreeConstants<Rational>, ToricError> {
    let n = net.num_complexes();
    if n > MAX_COMPLEXES {
        return Err(ToricError::TooLarge(n));
    }
    let edges = positive_edges(net, k);
    let mut out = vec![Rational::zero(); n];
    for class in components(n, &edges) {
        let local = |v: usize| class.iter().position(|&c| c == v);
        let sub: Vec<(usize, usize)> = edges
            .iter()
            .filter_map(|&(i, j)| Some((local(i)?, local(j)?)))
            .collect();
        let consts = if class.len() == 1 {
            vec![Rational::one()]
        } else {
            evaluate(
                class.len(),
                &sub,
                |e| k.get(class[sub[e].0], class[sub[e].1]),
                Rational::zero(),
                rational_sum,
                rational_product,
            )?
        };
        for (v, c) in class.iter().zip(consts) {
            out[*v] = c;
        }
    }
    Ok(out)
}

/// 2x2 minors of `[[K1, K2, K4], [K4, K3, K2]]`:
/// `(K1 K3 - K2 K4, K1 K2 - K4^2, K2^2 - K3 K4)`.
pub fn twisted_cubic_minors<T: Scalar>(k: &[T; 4]) -> [T; 3] {
    let [k1, k2, k3, k4] = k.clone();
    [
        k1.clone() * k3.clone() - k2.clone() * k4.clone(),
        k1 * k2.clone() - k4.clone() * k4.clone(),
        k2.clone() * k2 - k3 * k4,
    ]
}

pub fn is_strongly_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let reach = |forward: bool| {
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(i, j) in edges {
                let (a, b) = if forward { (i, j) } else { (j, i) };
                if a == v && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        seen.into_iter().all(|s| s)
    };
    n == 0 || (reach(true) && reach(false))
}

/// Tree constants of the four Square complexes at these rates.
pub fn square_tree_constants(k: &SquareParams<Rational>) -> Result<[Rational; 4], ToricError> {
    let net = SquareParams::network();
    let consts = matrix_tree(&net, &k.rate_assignment())?;
    Ok(consts.try_into().expect("four complexes"))
}

/// Whether the rates define a toric dynamical system, by the vanishing of the
/// twisted-cubic minors of the tree constants.
pub fn is_toric_square(k: &SquareParams<Rational>) -> Result<bool, ToricError> {
    let support: Vec<_> = k.support().iter().map(|&(i, j)| (i - 1, j - 1)).collect();
    if !is_strongly_connected(4, &support) {
        return Err(ToricError::NotStronglyConnected);
    }
    let kc = square_tree_constants(k)?;
    Ok(twisted_cubic_minors(&kc).iter().all(Zero::is_zero))
}

fn require_support(k: &SquareParams<Rational>, edges: &[(usize, usize)], what: &str) -> Result<(), ToricError> {
    let mut want = edges.to_vec();
    want.sort_unstable();
    if k.support() != want {
        return Err(ToricError::Precondition(format!(
            "{what} needs exactly its own rates positive and all others zero"
        )));
    }
    Ok(())
}

/// The four binomial generators for the Square without the 3 ⇄ 4 edge:
/// `κ14κ32 - κ23κ41`, `κ12κ32κ41 - κ14κ21κ23`, `κ14²κ21 - κ12κ41²`,
/// `κ12κ32² - κ21κ23²`.
pub fn subnetwork1_binomials(k: &SquareParams<Rational>) -> [Rational; 4] {
    let g = |i, j| k.k(i, j);
    [
        g(1, 4) * g(3, 2) - g(2, 3) * g(4, 1),
        g(1, 2) * g(3, 2) * g(4, 1) - g(1, 4) * g(2, 1) * g(2, 3),
        g(1, 4) * g(1, 4) * g(2, 1) - g(1, 2) * g(4, 1) * g(4, 1),
        g(1, 2) * g(3, 2) * g(3, 2) - g(2, 1) * g(2, 3) * g(2, 3),
    ]
}

/// Whether positive rates on the 3 ⇄ 4-free subnetwork are toric:
/// `κ14κ32 = κ23κ41` and `κ12κ32κ41 = κ14κ21κ23`.
pub fn subnetwork1_toric(k: &SquareParams<Rational>) -> Result<bool, ToricError> {
    require_support(k, &SUBNETWORK1_EDGES, "subnetwork 1")?;
    let b = subnetwork1_binomials(k);
    let reduced = b[0].is_zero() && b[1].is_zero();
    assert_eq!(
        reduced,
        b.iter().all(Zero::is_zero),
        "the two reduced binomials generate the other two at positive rates"
    );
    Ok(reduced)
}

/// Whether positive rates on the vertical subnetwork are toric:
/// `κ23κ41 = κ14κ32`.
pub fn segre_toric(k: &SquareParams<Rational>) -> Result<bool, ToricError> {
    require_support(k, &VERTICAL_EDGES, "vertical subnetwork")?;
    Ok(k.k(2, 3) * k.k(4, 1) == k.k(1, 4) * k.k(3, 2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ToricCondition {
    SquareMinors,
    Subnetwork1Binomials,
    Segre,
}

impl std::fmt::Display for ToricCondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ToricCondition::SquareMinors => "twisted-cubic minors",
            ToricCondition::Subnetwork1Binomials => "subnetwork binomials",
            ToricCondition::Segre => "Segre binomial",
        })
    }
}

/// Pick the condition that applies to the support of `k` and evaluate it.
pub fn toric_check(k: &SquareParams<Rational>) -> Result<(ToricCondition, bool), ToricError> {
    if segre_toric(k).is_ok() {
        return Ok((ToricCondition::Segre, segre_toric(k)?));
    }
    if let Ok(v) = subnetwork1_toric(k) {
        return Ok((ToricCondition::Subnetwork1Binomials, v));
    }
    Ok((ToricCondition::SquareMinors, is_toric_square(k)?))
}
