//! Which supports admit several positive steady states, and witnesses.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{classify, SquareParams, EDGES};
use crate::scalar::{rat, rat_int};
use crate::Rational;

/// The six unordered pairs of complexes.
pub const UNDIRECTED_EDGES: [(usize, usize); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

/// Edges grouped by the coefficient they enter, with their weight:
/// S0, S1, S2, S3 in that order. Each admissible edge appears once.
const GROUPS: [[((usize, usize), i64); 3]; 4] = [
    [((1, 2), 2), ((1, 3), 3), ((1, 4), 1)],
    [((4, 1), 1), ((4, 2), -1), ((4, 3), -2)],
    [((2, 1), -2), ((2, 3), 1), ((2, 4), -1)],
    [((3, 1), 3), ((3, 2), 1), ((3, 4), 2)],
];

/// Whether some positive rates on `support` give more than one positive
/// steady state.
///
/// Three sign changes in `(-S0, S1, -S2, S3)` are needed for three roots and
/// two for two, which forces `κ41 > 0` and `κ23 > 0`, plus an edge out of
/// complex 1 or complex 3. Every such support does have a witness.
pub fn capable_of_multistationarity(support: &[(usize, usize)]) -> bool {
    let has = |e| support.contains(&e);
    let out_of = |i| support.iter().any(|&(a, _)| a == i);
    has((4, 1)) && has((2, 3)) && (out_of(1) || out_of(3))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    /// Capable networks as sets of unordered pairs.
    pub networks: Vec<Vec<(usize, usize)>>,
    /// Number of capable networks by number of reversible pairs.
    pub histogram: BTreeMap<usize, usize>,
}

/// All reversible networks on the four complexes that are capable of
/// multistationarity.
pub fn enumerate_reversible_multistationary() -> Enumeration {
    let mut networks = Vec::new();
    let mut histogram = BTreeMap::new();
    for mask in 0u32..(1 << UNDIRECTED_EDGES.len()) {
        let pairs: Vec<_> = UNDIRECTED_EDGES
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if capable_of_multistationarity(&directed(&pairs)) {
            *histogram.entry(pairs.len()).or_insert(0) += 1;
            networks.push(pairs);
        }
    }
    networks.sort_by_key(|p| (p.len(), p.clone()));
    Enumeration { networks, histogram }
}

/// Both directions of every unordered pair.
pub fn directed(pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut out: Vec<_> = pairs.iter().flat_map(|&(i, j)| [(i, j), (j, i)]).collect();
    out.sort_unstable();
    out
}

/// Positive rates on `support` realizing three positive steady states, or two
/// when a boundary coefficient is forced to zero. `None` when the support is
/// not capable.
///
/// Rates are first matched to the cubic `-(x-1)(x-2)(x-3)` (or a quadratic
/// with roots 1 and 2); if that fails, a seeded random search is used.
pub fn witness_parameters(support: &[(usize, usize)], seed: u64) -> Option<SquareParams<Rational>> {
    if !capable_of_multistationarity(support) || support.iter().any(|e| !EDGES.contains(e)) {
        return None;
    }
    let out_of = |i| support.iter().any(|&(a, _)| a == i);
    let (target, wanted): ([i64; 4], usize) = match (out_of(1), out_of(3)) {
        (true, true) => ([1, 6, 11, 6], 3),
        (true, false) => ([1, 3, 2, 0], 2),
        _ => ([0, 1, 3, 2], 2),
    };
    coefficient_match(support, target, wanted).or_else(|| random_search(support, wanted, seed))
}

fn coefficient_match(support: &[(usize, usize)], target: [i64; 4], wanted: usize) -> Option<SquareParams<Rational>> {
    let mut lambda = Rational::one();
    for _ in 0..40 {
        let mut k = SquareParams::zero();
        let mut ok = true;
        for (group, &t) in GROUPS.iter().zip(&target) {
            let present: Vec<_> = group.iter().filter(|(e, _)| support.contains(e)).collect();
            let Some(&&(adj, w)) = present.iter().find(|(_, w)| *w > 0) else {
                // the group cannot be positive, so it must be matched at zero
                ok &= t == 0 && present.is_empty();
                continue;
            };
            let mut rest = Rational::zero();
            for &&(e, we) in &present {
                if e != adj {
                    k.set(e, Rational::one()).ok()?;
                    rest += rat_int(we);
                }
            }
            let value = (rat_int(t) * &lambda - rest) / rat_int(w);
            if !value.is_positive() {
                ok = false;
                break;
            }
            k.set(adj, value).ok()?;
        }
        if ok && classify(&k).ok()?.steady_state_count == wanted {
            return Some(k);
        }
        lambda *= rat_int(2);
    }
    None
}

fn random_search(support: &[(usize, usize)], wanted: usize, seed: u64) -> Option<SquareParams<Rational>> {
    let choices = [rat(1, 8), rat(1, 4), rat(1, 2), rat_int(1), rat_int(2), rat_int(4), rat_int(8), rat_int(16)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..20_000 {
        let pairs: Vec<_> = support
            .iter()
            .map(|&e| (e, choices.choose(&mut rng).expect("nonempty").clone()))
            .collect();
        let k = SquareParams::from_edges(&pairs).ok()?;
        if classify(&k).ok()?.steady_state_count >= wanted {
            return Some(k);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::square::{signed_coefficients, CubicForm, SQUARE_EDGES, VERTICAL_EDGES};

    #[test]
    fn capability_examples() {
        assert!(capable_of_multistationarity(&VERTICAL_EDGES));
        assert!(capable_of_multistationarity(&SQUARE_EDGES));
        assert!(!capable_of_multistationarity(&[(1, 2), (2, 1), (3, 4), (4, 3)]));
        assert!(!capable_of_multistationarity(&[(2, 3), (4, 1)]));
        assert!(capable_of_multistationarity(&[(2, 3), (4, 1), (1, 2)]));
    }

    #[test]
    fn enumeration_histogram() {
        let e = enumerate_reversible_multistationary();
        assert_eq!(e.networks.len(), 16);
        let h: Vec<_> = e.histogram.into_iter().collect();
        assert_eq!(h, [(2, 1), (3, 4), (4, 6), (5, 4), (6, 1)]);
        assert_eq!(e.networks[0], [(1, 4), (2, 3)]);
    }

    #[test]
    fn vertical_witness_is_exact_match() {
        let k = witness_parameters(&VERTICAL_EDGES, 0).unwrap();
        assert_eq!(signed_coefficients(&k), CubicForm::from_ints([1, 6, 11, 6]));
        assert_eq!(k.support(), VERTICAL_EDGES.to_vec());
    }

    #[test]
    fn every_capable_support_has_a_witness() {
        for pairs in enumerate_reversible_multistationary().networks {
            let support = directed(&pairs);
            let k = witness_parameters(&support, 7).expect("witness");
            assert_eq!(k.support(), support);
            assert_eq!(classify(&k).unwrap().steady_state_count, 3, "{pairs:?}");
        }
    }

    #[test]
    fn boundary_witnesses() {
        // no edge out of complex 3: S3 = 0, at most two positive roots
        let support = [(1, 2), (2, 3), (4, 1)];
        let k = witness_parameters(&support, 1).unwrap();
        let c = classify(&k).unwrap();
        assert_eq!((c.steady_state_count, c.stable_count), (2, 1));
        assert!(witness_parameters(&[(1, 2), (2, 1)], 1).is_none());
    }
}
