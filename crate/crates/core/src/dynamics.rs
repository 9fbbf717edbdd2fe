//! Mass-action ODE `dc/dt = Ψ(c) · A_κ · Y`, fixed-step RK4 integration and
//! conservation checks.

use std::io::{self, Write};

use num_traits::{Float, FromPrimitive};
use thiserror::Error;

use crate::network::{Network, NetworkError, RateAssignment};
use crate::rational::format_float;
use crate::scalar::Scalar;

/// Undershoot below zero that is silently clipped after a step.
pub const CLIP_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DynamicsError {
    #[error(transparent)]
    Network(#[from] NetworkError),
    #[error("t_end and dt must be positive")]
    BadStep,
    #[error("initial concentration has a negative or non-finite entry")]
    BadInitialState,
    #[error("species {species} went negative ({value:e}) at t = {t}; reduce dt")]
    Negative { t: f64, species: usize, value: f64 },
    #[error("non-finite state at t = {t}")]
    NonFinite { t: f64 },
}

/// Floating-point float type accepted by the integrator.
pub trait Real: Float + FromPrimitive + Scalar {}
impl<F: Float + FromPrimitive + Scalar> Real for F {}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory<F> {
    pub times: Vec<F>,
    pub states: Vec<Vec<F>>,
    pub rates: RateAssignment,
}

impl<F: Real> Trajectory<F> {
    pub fn final_state(&self) -> &[F] {
        self.states.last().expect("trajectory holds the initial state")
    }

    /// CSV with header `t,c_<species>...`, one row per step.
    pub fn write_csv<W: Write>(&self, species: &[String], mut out: W) -> io::Result<()> {
        let mut header = String::from("t");
        for s in species {
            header.push_str(",c_");
            header.push_str(s);
        }
        writeln!(out, "{header}")?;
        for (t, c) in self.times.iter().zip(&self.states) {
            let mut row = format_float(t.to_f64_lossy());
            for x in c {
                row.push(',');
                row.push_str(&format_float(x.to_f64_lossy()));
            }
            writeln!(out, "{row}")?;
        }
        Ok(())
    }
}

/// Precomputed per-edge form of the vector field.
#[derive(Debug, Clone)]
pub struct MassAction<F> {
    complexes: Vec<Vec<u32>>,
    /// (reactant complex, rate, y_j - y_i)
    reactions: Vec<(usize, F, Vec<F>)>,
}

fn to_real<F: Real>(x: &crate::Rational) -> F {
    F::from_f64(x.to_f64_lossy()).expect("finite rate")
}

impl<F: Real> MassAction<F> {
    pub fn new(net: &Network, k: &RateAssignment) -> Self {
        let reactions = net
            .edges()
            .iter()
            .zip(net.reaction_vectors())
            .filter_map(|(&(i, j), delta)| {
                let kij = k.get(i, j);
                if num_traits::Zero::is_zero(&kij) {
                    return None;
                }
                let delta = delta.iter().map(|&d| F::from_i64(d).unwrap()).collect();
                Some((i, to_real(&kij), delta))
            })
            .collect();
        Self {
            complexes: net.complexes().to_vec(),
            reactions,
        }
    }

    pub fn dim(&self) -> usize {
        self.complexes.first().map_or(0, Vec::len)
    }

    fn monomial(&self, i: usize, c: &[F]) -> F {
        self.complexes[i]
            .iter()
            .zip(c)
            .fold(F::one(), |m, (&e, &x)| m * x.powi(e as i32))
    }

    /// `Σ κ_ij c^{y_i} (y_j - y_i)`.
    pub fn eval_into(&self, c: &[F], out: &mut [F]) {
        out.iter_mut().for_each(|v| *v = F::zero());
        for (i, k, delta) in &self.reactions {
            let flux = *k * self.monomial(*i, c);
            for (o, &d) in out.iter_mut().zip(delta) {
                *o = *o + flux * d;
            }
        }
    }

    pub fn eval(&self, c: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); c.len()];
        self.eval_into(c, &mut out);
        out
    }

    fn rk4_step(&self, c: &[F], h: F, scratch: &mut [Vec<F>; 5]) -> Vec<F> {
        let two = F::from_f64(2.0).unwrap();
        let half = h / two;
        let [k1, k2, k3, k4, tmp] = scratch;
        self.eval_into(c, k1);
        axpy(c, half, k1, tmp);
        self.eval_into(tmp, k2);
        axpy(c, half, k2, tmp);
        self.eval_into(tmp, k3);
        axpy(c, h, k3, tmp);
        self.eval_into(tmp, k4);
        let six = F::from_f64(6.0).unwrap();
        (0..c.len())
            .map(|n| c[n] + h / six * (k1[n] + two * k2[n] + two * k3[n] + k4[n]))
            .collect()
    }
}

fn axpy<F: Real>(x: &[F], a: F, y: &[F], out: &mut [F]) {
    for ((o, &xi), &yi) in out.iter_mut().zip(x).zip(y) {
        *o = xi + a * yi;
    }
}

/// The vector field as the matrix product `Ψ(c) · A_κ · Y`.
pub fn rhs<F: Real>(net: &Network, k: &RateAssignment, c: &[F]) -> Result<Vec<F>, DynamicsError> {
    let psi = net.psi(c)?;
    let a = net.laplacian_matrix(k);
    let n = net.num_complexes();
    let flux: Vec<F> = (0..n)
        .map(|j| (0..n).fold(F::zero(), |acc, i| acc + psi[i] * to_real::<F>(&a[i][j])))
        .collect();
    Ok((0..net.num_species())
        .map(|s| {
            net.complexes()
                .iter()
                .zip(&flux)
                .fold(F::zero(), |acc, (y, &f)| acc + f * F::from_u32(y[s]).unwrap())
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepControl<F> {
    pub t_end: F,
    pub dt: F,
    /// Stop once `‖rhs‖∞` stays below this for `settle_steps` consecutive steps.
    pub settle: Option<(F, usize)>,
}

/// Fixed-step classic RK4 from `c0` to `t_end`.
pub fn integrate<F: Real>(
    net: &Network,
    k: &RateAssignment,
    c0: &[F],
    t_end: F,
    dt: F,
) -> Result<Trajectory<F>, DynamicsError> {
    run(net, k, c0, StepControl { t_end, dt, settle: None }).map(|(t, _)| t)
}

/// Like [`integrate`], but stops early once the state has settled
/// (`‖rhs‖∞ < 1e-10` for 100 consecutive steps). Returns whether it did.
pub fn integrate_until_settled<F: Real>(
    net: &Network,
    k: &RateAssignment,
    c0: &[F],
    t_end: F,
    dt: F,
) -> Result<(Trajectory<F>, bool), DynamicsError> {
    let settle = (F::from_f64(1e-10).unwrap(), 100);
    run(net, k, c0, StepControl { t_end, dt, settle: Some(settle) })
}

pub fn run<F: Real>(
    net: &Network,
    k: &RateAssignment,
    c0: &[F],
    ctl: StepControl<F>,
) -> Result<(Trajectory<F>, bool), DynamicsError> {
    net.check_dim(c0.len())?;
    let (t_end, dt) = (ctl.t_end, ctl.dt);
    if !(t_end > F::zero() && dt > F::zero()) || !t_end.is_finite() || !dt.is_finite() {
        return Err(DynamicsError::BadStep);
    }
    if c0.iter().any(|x| !x.is_finite() || *x < F::zero()) {
        return Err(DynamicsError::BadInitialState);
    }
    let field = MassAction::new(net, k);
    let steps = (t_end / dt - F::from_f64(1e-9).unwrap())
        .ceil()
        .to_usize()
        .unwrap_or(0)
        .max(1);
    let clip = F::from_f64(CLIP_TOLERANCE).unwrap();
    let s = c0.len();
    let mut scratch: [Vec<F>; 5] = std::array::from_fn(|_| vec![F::zero(); s]);
    let mut traj = Trajectory {
        times: vec![F::zero()],
        states: vec![c0.to_vec()],
        rates: k.clone(),
    };
    let mut quiet = 0usize;
    let mut c = c0.to_vec();
    let mut rate = vec![F::zero(); s];
    for n in 0..steps {
        let t0 = F::from_usize(n).unwrap() * dt;
        let t1 = (F::from_usize(n + 1).unwrap() * dt).min(t_end);
        let mut next = field.rk4_step(&c, t1 - t0, &mut scratch);
        let t_report = t1.to_f64_lossy();
        for (idx, x) in next.iter_mut().enumerate() {
            if !x.is_finite() {
                return Err(DynamicsError::NonFinite { t: t_report });
            }
            if *x < F::zero() {
                if *x < -clip {
                    return Err(DynamicsError::Negative {
                        t: t_report,
                        species: idx,
                        value: x.to_f64_lossy(),
                    });
                }
                *x = F::zero();
            }
        }
        c = next;
        traj.times.push(t1);
        traj.states.push(c.clone());
        if let Some((tol, needed)) = ctl.settle {
            field.eval_into(&c, &mut rate);
            let norm = rate.iter().fold(F::zero(), |m, v| m.max(v.abs()));
            quiet = if norm < tol { quiet + 1 } else { 0 };
            if quiet >= needed {
                return Ok((traj, true));
            }
        }
    }
    Ok((traj, false))
}

/// Largest drift `max_t |v · c(t) - v · c(0)|` over an integer basis `v` of
/// the conservation laws.
pub fn conservation_residual<F: Real>(traj: &Trajectory<F>, net: &Network) -> F {
    let laws = net.conservation_laws();
    let Some(c0) = traj.states.first() else {
        return F::zero();
    };
    let dot = |v: &[i64], c: &[F]| {
        v.iter()
            .zip(c)
            .fold(F::zero(), |acc, (&w, &x)| acc + F::from_i64(w).unwrap() * x)
    };
    let mut worst = F::zero();
    for v in &laws {
        let base = dot(v, c0);
        for c in &traj.states {
            worst = worst.max((dot(v, c) - base).abs());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_network;
    use crate::scalar::rat_int;

    fn two_way() -> crate::LabeledNetwork {
        parse_network("A + B <-> 3A + C @ 2, 1").unwrap()
    }

    #[test]
    fn rhs_matches_hand_expansion() {
        let p = two_way();
        let v = rhs(&p.network, &p.rates, &[1.0, 1.0, 1.0]).unwrap();
        assert_eq!(v, vec![2.0, -1.0, 1.0]);
        let c = [0.7, 1.3, 0.4];
        let hand = [
            2.0 * 2.0 * c[0] * c[1] - 2.0 * c[0].powi(3) * c[2],
            -2.0 * c[0] * c[1] + c[0].powi(3) * c[2],
            2.0 * c[0] * c[1] - c[0].powi(3) * c[2],
        ];
        let fast = MassAction::new(&p.network, &p.rates).eval(&c);
        for ((a, b), h) in rhs(&p.network, &p.rates, &c).unwrap().iter().zip(&fast).zip(&hand) {
            assert!((a - h).abs() < 1e-14 && (b - h).abs() < 1e-14);
        }
        assert!(rhs(&p.network, &p.rates, &[1.0]).is_err());
    }

    #[test]
    fn zero_rates_give_zero_field_and_constant_trajectory() {
        let p = two_way();
        let zero = RateAssignment::new();
        assert_eq!(rhs(&p.network, &zero, &[0.3, 2.0, 1.0]).unwrap(), vec![0.0; 3]);
        let tr = integrate(&p.network, &zero, &[0.3, 2.0, 1.0], 1.0, 0.1).unwrap();
        assert_eq!(tr.times.len(), 11);
        assert!(tr.states.iter().all(|s| s == &vec![0.3, 2.0, 1.0]));
        assert_eq!(conservation_residual(&tr, &p.network), 0.0);
    }

    #[test]
    fn conservation_laws_of_single_reaction() {
        let p = two_way();
        assert_eq!(p.network.conservation_laws(), vec![vec![1, 2, 0], vec![1, 0, -2]]);
        let tr = integrate(&p.network, &p.rates, &[0.5, 1.0, 0.2], 5.0, 1e-3).unwrap();
        assert!(conservation_residual(&tr, &p.network) <= 1e-8);
        for c in &tr.states {
            assert!((c[0] + 2.0 * c[1] - 2.5).abs() <= 1e-8);
            assert!((c[1] + c[2] - 1.2).abs() <= 1e-8);
        }
    }

    #[test]
    fn step_errors() {
        let p = two_way();
        let c0 = [1.0, 1.0, 1.0];
        assert_eq!(integrate(&p.network, &p.rates, &c0, 0.0, 0.1), Err(DynamicsError::BadStep));
        assert_eq!(integrate(&p.network, &p.rates, &c0, 1.0, -0.1), Err(DynamicsError::BadStep));
        assert_eq!(
            integrate(&p.network, &p.rates, &[-1.0, 1.0, 1.0], 1.0, 0.1),
            Err(DynamicsError::BadInitialState)
        );
        let mut fast = p.rates.clone();
        fast.set(0, 1, rat_int(1000));
        assert!(matches!(
            integrate(&p.network, &fast, &[1.0, 1.0, 1.0], 10.0, 0.5),
            Err(DynamicsError::Negative { .. }) | Err(DynamicsError::NonFinite { .. })
        ));
    }

    #[test]
    fn generic_over_f32() {
        let p = two_way();
        let tr = integrate::<f32>(&p.network, &p.rates, &[0.5, 1.0, 0.2], 1.0, 1e-2).unwrap();
        assert_eq!(tr.states.len(), 101);
        assert!(conservation_residual(&tr, &p.network) < 1e-4);
    }

    #[test]
    fn csv_layout() {
        let p = parse_network("A -> B @ 1").unwrap();
        let tr = integrate(&p.network, &p.rates, &[1.0, 0.0], 0.2, 0.1).unwrap();
        let mut buf = Vec::new();
        tr.write_csv(p.network.species(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "t,c_A,c_B");
        assert_eq!(lines[1], "0,1,0");
        assert_eq!(lines.len(), 4);
        assert!(lines[2].starts_with("0.1,0.904837"));
    }
}
