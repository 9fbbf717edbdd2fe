//! Parser for the `.crn` reaction-network text format.
//!
//! One statement per line:
//!
//! ```text
//! # comment
//! A + B -> 3A + C @ 2
//! 3 c1 <-> 3 c2 @ 1/4, 2
//! ```
//!
//! `->` takes at most one rate, `<->` takes none or two (forward, reverse).
//! Missing rates are 1. Rates are exact: `2.5` is read as `5/2`.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::network::{Network, RateAssignment};
use crate::rational::parse_rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("reaction has identical reactant and product complexes")]
    SelfLoop,
    #[error("rate must be positive, got {0}")]
    NonPositiveRate(String),
    #[error("reversible reaction needs two rates (forward, reverse), got one")]
    MissingReverseRate,
    #[error("duplicate reaction {0}")]
    DuplicateReaction(String),
}

/// A network together with the rates given in its source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledNetwork {
    pub network: Network,
    pub rates: RateAssignment,
}

type Complex = BTreeMap<usize, u32>;

#[derive(Default)]
struct Builder {
    species: Vec<String>,
    species_index: HashMap<String, usize>,
    complexes: Vec<Complex>,
    edges: Vec<(usize, usize)>,
    rates: Vec<BigRational>,
}

impl Builder {
    fn species_id(&mut self, name: &str) -> usize {
        if let Some(&i) = self.species_index.get(name) {
            return i;
        }
        self.species.push(name.to_string());
        self.species_index.insert(name.to_string(), self.species.len() - 1);
        self.species.len() - 1
    }

    fn complex_id(&mut self, c: Complex) -> usize {
        match self.complexes.iter().position(|x| *x == c) {
            Some(i) => i,
            None => {
                self.complexes.push(c);
                self.complexes.len() - 1
            }
        }
    }

    fn add_edge(&mut self, i: usize, j: usize, k: BigRational) -> Result<(), ParseErrorKind> {
        if self.edges.contains(&(i, j)) {
            return Err(ParseErrorKind::DuplicateReaction(format!(
                "{} -> {}",
                self.label(i),
                self.label(j)
            )));
        }
        self.edges.push((i, j));
        self.rates.push(k);
        Ok(())
    }

    fn label(&self, i: usize) -> String {
        self.complexes[i]
            .iter()
            .map(|(&s, &e)| {
                if e == 1 {
                    self.species[s].clone()
                } else {
                    format!("{e}{}", self.species[s])
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    fn finish(self) -> LabeledNetwork {
        let s = self.species.len();
        let complexes = self
            .complexes
            .iter()
            .map(|c| {
                let mut y = vec![0u32; s];
                for (&k, &e) in c {
                    y[k] = e;
                }
                y
            })
            .collect();
        let network = Network::new(self.species, complexes, self.edges.clone())
            .expect("parser only builds valid networks");
        let mut rates = RateAssignment::new();
        for (&(i, j), k) in self.edges.iter().zip(self.rates) {
            rates.set(i, j, k);
        }
        LabeledNetwork { network, rates }
    }
}

pub fn parse_network(src: &str) -> Result<LabeledNetwork, ParseError> {
    let mut b = Builder::default();
    for (idx, raw) in src.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        parse_statement(&mut b, line).map_err(|kind| ParseError {
            line: idx + 1,
            kind,
        })?;
    }
    Ok(b.finish())
}

fn parse_statement(b: &mut Builder, line: &str) -> Result<(), ParseErrorKind> {
    let (reaction, rate_text) = match line.split_once('@') {
        Some((r, k)) => (r, Some(k)),
        None => (line, None),
    };
    let (lhs, rhs, reversible) = if let Some((l, r)) = reaction.split_once("<->") {
        (l, r, true)
    } else if let Some((l, r)) = reaction.split_once("->") {
        (l, r, false)
    } else {
        return Err(syntax("expected `->` or `<->`"));
    };
    if rhs.contains("->") {
        return Err(syntax("more than one arrow"));
    }

    let rates = match rate_text {
        None => Vec::new(),
        Some(t) => t
            .split(',')
            .map(parse_rate)
            .collect::<Result<Vec<_>, _>>()?,
    };
    let (forward, reverse) = match (reversible, rates.len()) {
        (false, 0) => (BigRational::one(), None),
        (false, 1) => (rates[0].clone(), None),
        (false, _) => return Err(syntax("irreversible reaction takes at most one rate")),
        (true, 0) => (BigRational::one(), Some(BigRational::one())),
        (true, 1) => return Err(ParseErrorKind::MissingReverseRate),
        (true, 2) => (rates[0].clone(), Some(rates[1].clone())),
        (true, _) => return Err(syntax("reversible reaction takes exactly two rates")),
    };

    let left = parse_side(b, lhs)?;
    let right = parse_side(b, rhs)?;
    if left == right {
        return Err(ParseErrorKind::SelfLoop);
    }
    let i = b.complex_id(left);
    let j = b.complex_id(right);
    b.add_edge(i, j, forward)?;
    if let Some(k) = reverse {
        b.add_edge(j, i, k)?;
    }
    Ok(())
}

fn parse_rate(text: &str) -> Result<BigRational, ParseErrorKind> {
    let t = text.trim();
    let k = parse_rational(t).ok_or_else(|| syntax(&format!("bad rate `{t}`")))?;
    if !k.is_positive() {
        return Err(ParseErrorKind::NonPositiveRate(t.to_string()));
    }
    Ok(k)
}

fn parse_side(b: &mut Builder, text: &str) -> Result<Complex, ParseErrorKind> {
    let mut complex = Complex::new();
    for term in text.split('+') {
        let (coef, name) = parse_term(term.trim())?;
        let id = b.species_id(name);
        *complex.entry(id).or_insert(0) += coef;
    }
    Ok(complex)
}

fn parse_term(term: &str) -> Result<(u32, &str), ParseErrorKind> {
    let digits_end = term
        .find(|ch: char| !ch.is_ascii_digit())
        .unwrap_or(term.len());
    let (digits, rest) = term.split_at(digits_end);
    let coef = if digits.is_empty() {
        1
    } else {
        match digits.parse::<u32>() {
            Ok(c) if c > 0 => c,
            _ => return Err(syntax(&format!("bad coefficient in `{term}`"))),
        }
    };
    let name = rest.trim_start();
    let mut chars = name.chars();
    let valid = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
    if !valid {
        return Err(syntax(&format!("bad term `{term}`")));
    }
    Ok((coef, name))
}

fn syntax(msg: &str) -> ParseErrorKind {
    ParseErrorKind::Syntax(msg.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    #[test]
    fn single_irreversible_reaction() {
        let p = parse_network("A + B -> 3A + C @ 2").unwrap();
        let net = &p.network;
        assert_eq!(net.species(), ["A", "B", "C"]);
        assert_eq!(net.complexes(), [vec![1, 1, 0], vec![3, 0, 1]]);
        assert_eq!(net.edges(), [(0, 1)]);
        assert_eq!(p.rates.get(0, 1), rat_int(2));
    }

    #[test]
    fn empty_text() {
        let p = parse_network("").unwrap();
        assert_eq!(p.network.num_complexes(), 0);
        assert!(p.network.edges().is_empty());
        let p = parse_network("\n  # only a comment\n\n").unwrap();
        assert_eq!(p.network.num_complexes(), 0);
    }

    #[test]
    fn reversible_with_two_rates() {
        let p = parse_network("3 c1 <-> 3 c2 @ 1/4, 2").unwrap();
        assert_eq!(p.network.complexes(), [vec![3, 0], vec![0, 3]]);
        assert_eq!(p.network.edges(), [(0, 1), (1, 0)]);
        assert_eq!(p.rates.get(0, 1), rat(1, 4));
        assert_eq!(p.rates.get(1, 0), rat_int(2));
    }

    #[test]
    fn whitespace_is_irrelevant() {
        let a = parse_network("A+B->3A+C@2.5").unwrap();
        let b = parse_network("  A  +  B   ->   3 A + C   @   5/2 ").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.rates.get(0, 1), rat(5, 2));
    }

    #[test]
    fn defaults_and_merging() {
        let p = parse_network("A + A -> B\nB <-> C").unwrap();
        assert_eq!(p.network.complexes()[0], vec![2, 0, 0]);
        assert_eq!(p.rates.get(0, 1), rat_int(1));
        assert_eq!(p.rates.get(2, 1), rat_int(1));
    }

    #[test]
    fn memory_network() {
        let p = parse_network("x + y <-> 2y\nx <-> y").unwrap();
        assert_eq!(
            p.network.stoichiometric_matrix(),
            vec![vec![1, 1], vec![0, 2], vec![1, 0], vec![0, 1]]
        );
    }

    fn err(src: &str) -> ParseError {
        parse_network(src).unwrap_err()
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = err("A -> B\n\nA -> A");
        assert_eq!(e.line, 3);
        assert_eq!(e.kind, ParseErrorKind::SelfLoop);
        assert!(e.to_string().starts_with("line 3:"));

        assert_eq!(err("A -> B @ 0").kind, ParseErrorKind::NonPositiveRate("0".into()));
        assert_eq!(err("A -> B @ -2").kind, ParseErrorKind::NonPositiveRate("-2".into()));
        assert_eq!(err("A <-> B @ 1").kind, ParseErrorKind::MissingReverseRate);
        assert!(matches!(err("A -> B\nA -> B").kind, ParseErrorKind::DuplicateReaction(_)));
        assert!(matches!(err("A <-> B\nB -> A").kind, ParseErrorKind::DuplicateReaction(_)));
        for bad in ["A + -> B", "A => B", "0A -> B", "A -> B @ 1, 2", "1x -> 2_y", "A -> B -> C", "A B -> C", "A -> B # note"] {
            assert!(matches!(err(bad).kind, ParseErrorKind::Syntax(_)), "{bad}");
        }
    }

    #[test]
    fn round_trip_through_text() {
        let src = "B + A -> 2C @ 0.5\n2C <-> D @ 3, 1/7\nD -> B + A";
        let p = parse_network(src).unwrap();
        let again = parse_network(&p.network.to_dsl(&p.rates)).unwrap();
        assert_eq!(p, again);
    }
}
