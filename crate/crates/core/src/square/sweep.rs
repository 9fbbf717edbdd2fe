//! Grid sweep over (κ14, κ23, κ32) on the vertical subnetwork, κ41 = 1.

use std::io::{self, Write};

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::{classify_form_unrefined, signed_coefficients, triple_root_condition, SquareError, SquareParams};
use crate::rational::{format_rational, parse_rational};
use crate::Rational;

pub const SWEEP_HEADER: &str = "k14,k23,k32,D_sign,count,stable,toric,disc_zero,triple";

/// Inclusive arithmetic range `start, start + step, ..., <= stop`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridRange {
    pub start: Rational,
    pub stop: Rational,
    pub step: Rational,
}

impl GridRange {
    pub fn new(start: Rational, stop: Rational, step: Rational) -> Result<Self, SquareError> {
        if !step.is_positive() || !start.is_positive() || stop < start {
            return Err(SquareError::Precondition(
                "grid needs 0 < start <= stop and a positive step".into(),
            ));
        }
        Ok(Self { start, stop, step })
    }

    /// Parse `a:b:step`.
    pub fn parse(text: &str) -> Result<Self, SquareError> {
        let parts: Vec<_> = text.split(':').map(parse_rational).collect();
        match parts.as_slice() {
            [Some(a), Some(b), Some(s)] => Self::new(a.clone(), b.clone(), s.clone()),
            _ => Err(SquareError::Precondition(format!("bad range '{text}', expected a:b:step"))),
        }
    }

    pub fn values(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        let mut v = self.start.clone();
        while v <= self.stop {
            out.push(v.clone());
            v += &self.step;
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub k14: Rational,
    pub k23: Rational,
    pub k32: Rational,
    /// Sign of the discriminant of `p`.
    pub d_sign: i8,
    pub count: usize,
    pub stable: usize,
    /// κ23 κ41 = κ14 κ32.
    pub toric: bool,
    pub disc_zero: bool,
    /// `D = 0` and `p` has a triple root.
    pub triple: bool,
}

fn record(k14: Rational, k23: Rational, k32: Rational) -> SweepRecord {
    let k = SquareParams::from_edges(&[
        ((1, 4), k14.clone()),
        ((2, 3), k23.clone()),
        ((3, 2), k32.clone()),
        ((4, 1), Rational::one()),
    ])
    .expect("positive rates");
    let form = signed_coefficients(&k);
    let c = classify_form_unrefined(&form);
    let d_sign = if c.discriminant.is_zero() {
        0
    } else if c.discriminant.is_positive() {
        1
    } else {
        -1
    };
    let triple = d_sign == 0 && triple_root_condition(&form).expect("S0 = κ14 > 0");
    SweepRecord {
        toric: k23 == &k14 * &k32,
        k14,
        k23,
        k32,
        d_sign,
        count: c.steady_state_count,
        stable: c.stable_count,
        disc_zero: d_sign == 0,
        triple,
    }
}

/// Classify every grid point, κ14 outermost and κ32 innermost. Points are
/// evaluated in parallel; the result keeps grid order.
pub fn figure1_sweep(k14: &GridRange, k23: &GridRange, k32: &GridRange) -> Vec<SweepRecord> {
    let (a, b, c) = (k14.values(), k23.values(), k32.values());
    let mut points = Vec::with_capacity(a.len() * b.len() * c.len());
    for x in &a {
        for y in &b {
            for z in &c {
                points.push((x, y, z));
            }
        }
    }
    points
        .into_par_iter()
        .map(|(x, y, z)| record(x.clone(), y.clone(), z.clone()))
        .collect()
}

pub fn write_sweep_csv<W: Write>(records: &[SweepRecord], mut out: W) -> io::Result<()> {
    writeln!(out, "{SWEEP_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            format_rational(&r.k14),
            format_rational(&r.k23),
            format_rational(&r.k32),
            r.d_sign,
            r.count,
            r.stable,
            r.toric as u8,
            r.disc_zero as u8,
            r.triple as u8
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn single(v: Rational) -> GridRange {
        GridRange::new(v.clone(), v, rat_int(1)).unwrap()
    }

    #[test]
    fn range_values() {
        let r = GridRange::parse("0.1:3.0:0.1").unwrap();
        let v = r.values();
        assert_eq!(v.len(), 30);
        assert_eq!(v[0], rat(1, 10));
        assert_eq!(v[29], rat_int(3));
        assert!(GridRange::parse("1:0:1").is_err());
        assert!(GridRange::parse("1:2").is_err());
    }

    #[test]
    fn known_cells() {
        let r = figure1_sweep(&single(rat(1, 10)), &single(rat(23, 10)), &single(rat(14, 10)));
        assert_eq!((r[0].count, r[0].stable, r[0].d_sign), (3, 2, 1));
        let r = figure1_sweep(&single(rat_int(1)), &single(rat_int(1)), &single(rat_int(1)));
        assert!(r[0].toric);
        assert_eq!((r[0].count, r[0].d_sign), (1, -1));
        // D = 0 with a double root
        let r = figure1_sweep(&single(rat(2, 5)), &single(rat(4, 5)), &single(rat(1, 5)));
        assert!(r[0].disc_zero && !r[0].triple);
        assert_eq!(r[0].count, 2);
        // κ23 = 9 κ14 κ32 and 27 κ14^2 κ32 = 1: p = -(1/3)(x - 1)^3
        let r = figure1_sweep(&single(rat(1, 3)), &single(rat_int(1)), &single(rat(1, 3)));
        assert!(r[0].triple && r[0].disc_zero);
        assert_eq!(r[0].count, 1);
    }

    #[test]
    fn csv_layout() {
        let r = figure1_sweep(&single(rat(1, 2)), &GridRange::parse("1:2:1").unwrap(), &single(rat_int(2)));
        let mut buf = Vec::new();
        write_sweep_csv(&r, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], SWEEP_HEADER);
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with("1/2,1,2,"));
        assert!(lines[1].ends_with(",1,0,0"), "{}", lines[1]);
    }
}
