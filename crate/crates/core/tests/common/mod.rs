#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use squarenet::poly::MultiPoly;
use squarenet::{MultivariatePolynomial, Rational};

pub fn fixture(name: &str) -> String {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

pub fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Read `- 108*k12^2*k32^2 + k23*k41 ...` over the given variables.
pub fn read_poly(text: &str, vars: &[String]) -> MultivariatePolynomial {
    let mut out = MultiPoly::zero(vars);
    let mut sign = 1i64;
    for tok in text.split_whitespace() {
        match tok {
            "+" => sign = 1,
            "-" => sign = -1,
            term => {
                let mut m = MultiPoly::constant(vars, Rational::from_integer(sign.into()));
                for factor in term.split('*') {
                    let (base, exp) = factor.split_once('^').unwrap_or((factor, "1"));
                    let exp: u32 = exp.parse().unwrap();
                    let f = match vars.iter().position(|v| v == base) {
                        Some(i) => MultiPoly::variable(vars, i).pow(exp),
                        None => MultiPoly::constant(vars, base.parse::<BigInt>().unwrap().into()),
                    };
                    m = &m * &f;
                }
                out = &out + &m;
                sign = 1;
            }
        }
    }
    out
}

/// Positive steady-state oracle independent of the library's root code.
///
/// Roots are isolated by Descartes' rule of signs with bisection on the
/// square-free part. Stability of an exact rational root comes from the first
/// nonvanishing derivative, of any other root from the signs of `p` at the
/// ends of its isolating interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Oracle {
    pub continuum: bool,
    pub count: usize,
    pub stable: usize,
}

type P = Vec<Rational>;

fn trim(mut p: P) -> P {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn deriv(p: &[Rational]) -> P {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

fn rem_quot(a: &[Rational], b: &[Rational]) -> (P, P) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut qv = vec![Rational::zero(); a.len().saturating_sub(db).max(1)];
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let f = r.last().unwrap() / b.last().unwrap();
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &f * c;
        }
        qv[shift] = f;
        r = trim(r);
        if r.len() <= db {
            break;
        }
    }
    (trim(r), trim(qv))
}

fn gcd(a: &[Rational], b: &[Rational]) -> P {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let (r, _) = rem_quot(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn sign(v: &Rational) -> i32 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

fn variations(p: &[Rational]) -> usize {
    let s: Vec<i32> = p.iter().map(sign).filter(|&s| s != 0).collect();
    s.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Descartes bound for roots of `p` in `(a, b)`.
fn descartes(p: &[Rational], a: &Rational, b: &Rational) -> usize {
    // t in (0, 1) -> x = a + (b - a) t, then t = 1 / (1 + y)
    let n = p.len() - 1;
    let mut g = vec![Rational::zero(); n + 1];
    let w = b - a;
    for (i, c) in p.iter().enumerate() {
        // c (a + w t)^i
        let mut term = vec![Rational::one()];
        for _ in 0..i {
            let mut next = vec![Rational::zero(); term.len() + 1];
            for (j, v) in term.iter().enumerate() {
                next[j] += v * a;
                next[j + 1] += v * &w;
            }
            term = next;
        }
        for (j, v) in term.into_iter().enumerate() {
            g[j] += c * v;
        }
    }
    g.reverse();
    for i in 0..n {
        for j in (i..n).rev() {
            let v = g[j + 1].clone();
            g[j] += v;
        }
    }
    variations(&g)
}

pub fn oracle(p_desc: &[Rational; 4]) -> Oracle {
    let p = trim(p_desc.iter().rev().cloned().collect());
    if p.is_empty() {
        return Oracle { continuum: true, count: 0, stable: 0 };
    }
    let lead = p.len() - 1;
    let start = p.iter().position(|c| !c.is_zero()).unwrap();
    let core: P = p[start..].to_vec();
    if core.len() == 1 {
        return Oracle { continuum: false, count: 0, stable: 0 };
    }
    let g = gcd(&core, &deriv(&core));
    let sq = if g.len() > 1 { rem_quot(&core, &g).1 } else { core.clone() };
    let bound = core[..lead - start]
        .iter()
        .map(|c| (c / &core[lead - start]).abs())
        .fold(Rational::zero(), |m, v| if v > m { v } else { m })
        + Rational::one();

    let mut exact = Vec::new();
    let mut isolated = Vec::new();
    let mut stack = vec![(Rational::zero(), bound)];
    while let Some((a, b)) = stack.pop() {
        match descartes(&sq, &a, &b) {
            0 => {}
            1 => isolated.push((a, b)),
            _ => {
                let m = (&a + &b) / Rational::from_integer(2.into());
                if eval(&sq, &m).is_zero() {
                    exact.push(m.clone());
                }
                stack.push((a, m.clone()));
                stack.push((m, b));
            }
        }
    }
    let mut stable = 0;
    let mut interval_roots = 0;
    for (a, b) in isolated {
        // keep the one root inside while moving both ends off other roots
        let (mut a, mut b) = (a, b);
        loop {
            if !eval(&core, &a).is_zero() && !eval(&core, &b).is_zero() {
                if sign(&eval(&core, &a)) > 0 && sign(&eval(&core, &b)) < 0 {
                    stable += 1;
                }
                interval_roots += 1;
                break;
            }
            let m = (&a + &b) / Rational::from_integer(2.into());
            if eval(&sq, &m).is_zero() {
                exact.push(m);
                break;
            }
            if descartes(&sq, &a, &m) % 2 == 1 {
                b = m;
            } else {
                a = m;
            }
        }
    }
    for r in &exact {
        let mut d = core.clone();
        let mut k = 0;
        while eval(&d, r).is_zero() {
            d = deriv(&d);
            k += 1;
        }
        let right = sign(&eval(&d, r));
        let left = if k % 2 == 0 { right } else { -right };
        if left > 0 && right < 0 {
            stable += 1;
        }
    }
    Oracle {
        continuum: false,
        count: exact.len() + interval_roots,
        stable,
    }
}
