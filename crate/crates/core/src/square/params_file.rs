//! Rate files: one `kIJ = value` per line, `#` comments, missing keys zero.

use thiserror::Error;

use super::{edge_name, SquareParams, EDGES};
use crate::rational::{format_rational, parse_rational};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParamsError {
    pub line: usize,
    pub message: String,
}

pub fn parse_params(text: &str) -> Result<SquareParams<Rational>, ParamsError> {
    let mut k = SquareParams::zero();
    let mut seen = [false; 12];
    for (n, raw) in text.lines().enumerate() {
        let err = |message: String| ParamsError { line: n + 1, message };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| err(format!("expected 'kIJ = value', got '{line}'")))?;
        let key = key.trim();
        let idx = EDGES
            .iter()
            .position(|&e| edge_name(e) == key)
            .ok_or_else(|| err(format!("unknown rate '{key}'")))?;
        if seen[idx] {
            return Err(err(format!("duplicate rate '{key}'")));
        }
        seen[idx] = true;
        let v = parse_rational(value.trim())
            .ok_or_else(|| err(format!("bad number '{}'", value.trim())))?;
        k.set(EDGES[idx], v).map_err(|e| err(e.to_string()))?;
    }
    Ok(k)
}

/// Nonzero rates in the file format, one per line.
pub fn format_params(k: &SquareParams<Rational>) -> String {
    k.support()
        .into_iter()
        .map(|e| format!("{} = {}\n", edge_name(e), format_rational(&k.k(e.0, e.1))))
        .collect()
}
