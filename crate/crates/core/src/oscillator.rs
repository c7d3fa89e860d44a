//! Closed forms for the driven harmonic oscillator: the minimum-energy drive
//! and its cost, the residual-excitation spectrum under frequency detuning,
//! and the Fourier-derivative constraint values that make a design robust
//! against an imprecisely known trap frequency.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lti::LtiSystem;
use crate::signal::PolyExpSignal;

/// Phase-space target `(x_f, v_f) = (r cos(phi), r omega0 sin(phi))`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Target {
    r: f64,
    phi: f64,
    omega0: f64,
}

impl Target {
    pub fn new(r: f64, phi: f64, omega0: f64) -> Result<Self> {
        if !(r >= 0.0) || !r.is_finite() {
            return Err(Error::Domain("target amplitude must be nonnegative".into()));
        }
        if !(omega0 > 0.0) || !omega0.is_finite() {
            return Err(Error::Domain("design frequency must be positive".into()));
        }
        if !phi.is_finite() {
            return Err(Error::Domain("target angle must be finite".into()));
        }
        Ok(Self { r, phi, omega0 })
    }

    /// Pure transport over distance `d`: target `(d, 0)`.
    pub fn transport(d: f64, omega0: f64) -> Result<Self> {
        Self::new(d, 0.0, omega0)
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn omega0(&self) -> f64 {
        self.omega0
    }

    /// Target `(position, velocity)`. The velocity is referenced to the design
    /// frequency: it is the kick the experimenter asks for and stays fixed
    /// when the true trap frequency is swept.
    pub fn state(&self) -> (f64, f64) {
        (self.r * self.phi.cos(), self.r * self.omega0 * self.phi.sin())
    }
}

/// Oscillator state in the complex variable `z = v / omega0 + i x`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexState {
    pub z: Complex64,
}

impl ComplexState {
    pub fn from_state(x: f64, v: f64, omega0: f64) -> Self {
        Self { z: Complex64::new(v / omega0, x) }
    }

    pub fn position(&self) -> f64 {
        self.z.im
    }

    pub fn velocity(&self, omega0: f64) -> f64 {
        self.z.re * omega0
    }
}

/// Specification of a robustness-constrained design: how many Fourier
/// derivatives of the excitation amplitude must vanish at the design frequency.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RobustnessSpec {
    pub order: usize,
    pub omega0: f64,
    pub target: Target,
    pub t_f: f64,
    pub include_boundary_conditions: bool,
}

impl RobustnessSpec {
    pub fn new(order: usize, target: Target, t_f: f64) -> Result<Self> {
        if !(t_f > 0.0) || !t_f.is_finite() {
            return Err(Error::Domain("protocol duration must be positive".into()));
        }
        Ok(Self {
            order,
            omega0: target.omega0(),
            target,
            t_f,
            include_boundary_conditions: false,
        })
    }

    pub fn with_boundary_conditions(mut self, on: bool) -> Self {
        self.include_boundary_conditions = on;
        self
    }
}

/// Normalization of the constraint values for orders `m >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstraintScaling {
    /// Values obtained directly from the vanishing-derivative conditions;
    /// dimensionally consistent for any design frequency. The default.
    DerivativeConsistent,
    /// Alternate convention carrying explicit `1/omega0^m` factors; agrees
    /// with the default at `omega0 = 1`.
    InverseFrequencyPowers,
}

/// Undamped oscillator `x'' + omega^2 x = u` as a first-order system with the
/// force as the control channel.
pub fn harmonic_system(omega: f64) -> LtiSystem {
    LtiSystem::new(
        nalgebra::dmatrix![0.0, 1.0; -omega * omega, 0.0],
        nalgebra::dmatrix![0.0; 1.0],
    )
    .expect("harmonic system matrices are well formed")
}

/// Same oscillator with the trap position as the control channel:
/// `x'' + omega^2 x = omega^2 x0(t)`, i.e. `B = [0; omega^2]`.
pub fn trap_system(omega: f64) -> LtiSystem {
    LtiSystem::new(
        nalgebra::dmatrix![0.0, 1.0; -omega * omega, 0.0],
        nalgebra::dmatrix![0.0; omega * omega],
    )
    .expect("trap system matrices are well formed")
}

/// Minimum-energy force drive reaching `target` from rest at the origin:
///
/// `u1(t) = 2 r w^2 [ pf sin(phi + pf - w t) - sin(w t + phi) sin(pf) ] / (pf^2 - sin^2 pf)`
///
/// with `pf = omega0 t_f`, expressed as a conjugate pair of exponentials.
pub fn u1_closed_form(target: &Target, t_f: f64) -> Result<PolyExpSignal> {
    if !(t_f > 0.0) || !t_f.is_finite() {
        return Err(Error::Domain("protocol duration must be positive".into()));
    }
    let w = target.omega0();
    let (r, phi) = (target.r(), target.phi());
    let pf = w * t_f;
    let denom = pf * pf - pf.sin().powi(2);
    let amp = 2.0 * r * w * w / denom;
    // sin(a - w t) and sin(w t + phi) split into e^{-i w t} and e^{i w t}.
    let i = Complex64::new(0.0, 1.0);
    let two_i = Complex64::new(0.0, 2.0);
    let c_neg = (pf * (i * (phi + pf)).exp() + pf.sin() * (-i * phi).exp()) / two_i;
    let c_pos = -(pf * (-i * (phi + pf)).exp() + pf.sin() * (i * phi).exp()) / two_i;
    Ok(PolyExpSignal::zero(t_f)
        .with_term(vec![c_neg * amp], Complex64::new(0.0, -w))
        .with_term(vec![c_pos * amp], Complex64::new(0.0, w)))
}

/// Minimum energy cost to reach `target` in time `t_f`:
///
/// `E1 = 2 r^2 w^3 [ pf + cos(2 phi + pf) sin(pf) ] / (pf^2 - sin^2 pf)`.
pub fn e1_min(target: &Target, t_f: f64) -> f64 {
    assert!(t_f > 0.0, "protocol duration must be positive");
    let w = target.omega0();
    let (r, phi) = (target.r(), target.phi());
    let pf = w * t_f;
    2.0 * r * r * w.powi(3) * (pf + (2.0 * phi + pf).cos() * pf.sin())
        / (pf * pf - pf.sin().powi(2))
}

/// Complex residual-excitation amplitude at trap frequency `omega` for a trap
/// trajectory `x0(t)` aimed at `target`:
///
/// `G(omega) = omega^2 x0~(omega) e^{i omega t_f} - (r w0 sin(phi) + i omega r cos(phi))`.
///
/// Derivation: `w = v + i omega x` obeys `w' - i omega w = omega^2 x0`, so
/// from rest `w(t_f) = omega^2 x0~(omega) e^{i omega t_f}`, and `G` is the
/// mismatch from the target value of `w`. No boundary conditions on `x0` are
/// assumed.
pub fn excitation_amplitude(x0: &PolyExpSignal, target: &Target, omega: f64) -> Complex64 {
    let t_f = x0.window();
    let i = Complex64::new(0.0, 1.0);
    let reached = omega * omega * x0.fourier_derivative(omega, 0) * (i * omega * t_f).exp();
    let (xt, vt) = target.state();
    reached - Complex64::new(vt, omega * xt)
}

/// Residual excitation energy `dE(omega) = |G(omega)|^2 / 2` per unit mass,
/// for each requested trap frequency.
pub fn excitation_spectrum(x0: &PolyExpSignal, target: &Target, omegas: &[f64]) -> Vec<f64> {
    omegas
        .iter()
        .map(|&omega| 0.5 * excitation_amplitude(x0, target, omega).norm_sqr())
        .collect()
}

/// Fourier-derivative values `a_0..a_p` that a transport drive must satisfy,
/// `u~^{(m)}(omega0) = a_m`, so that the excitation amplitude and its first
/// `p` frequency derivatives vanish at the design frequency.
///
/// The target must be pure transport (`phi = 0`).
pub fn transport_constraint_values(spec: &RobustnessSpec) -> Vec<Complex64> {
    assert!(
        spec.target.phi() == 0.0,
        "transport constraint values require a phi = 0 target"
    );
    general_constraint_values(spec)
}

/// Fourier-derivative values for an arbitrary phase-space target, from the
/// vanishing-derivative conditions `d^q G / d omega^q (omega0) = 0`, `q <= p`.
///
/// With `F(omega) = u~(omega) e^{i omega t_f}` and `H = omega^2 F`, the
/// conditions read `H^{(q)}(omega0) = omega0^2 T_q` where `T_0` is the target
/// value of `w`, `T_1 = i r cos(phi)` and `T_q = 0` beyond; they solve
/// triangularly for the `a_m`.
pub fn general_constraint_values(spec: &RobustnessSpec) -> Vec<Complex64> {
    let w0 = spec.omega0;
    let t_f = spec.t_f;
    let (r, phi) = (spec.target.r(), spec.target.phi());
    let pf = w0 * t_f;
    let i = Complex64::new(0.0, 1.0);
    let e_back = (-i * pf).exp();
    let it_f = i * t_f;

    // Target-side derivatives of (r w0 sin(phi) + i omega r cos(phi)).
    let target_term = |q: usize| -> Complex64 {
        match q {
            0 => Complex64::new(r * w0 * phi.sin(), w0 * r * phi.cos()),
            1 => i * (r * phi.cos()),
            _ => Complex64::new(0.0, 0.0),
        }
    };

    let p = spec.order;
    let mut f_derivs: Vec<Complex64> = Vec::with_capacity(p + 1); // F^{(q)}(omega0)
    let mut values: Vec<Complex64> = Vec::with_capacity(p + 1); // a_q
    for q in 0..=p {
        // H^{(q)} = w0^2 F^{(q)} + 2 q w0 F^{(q-1)} + q (q-1) F^{(q-2)} = w0^2 T_q
        let mut rhs = w0 * w0 * target_term(q);
        if q >= 1 {
            rhs -= 2.0 * q as f64 * w0 * f_derivs[q - 1];
        }
        if q >= 2 {
            rhs -= (q * (q - 1)) as f64 * f_derivs[q - 2];
        }
        let fq = rhs / (w0 * w0);
        // F^{(q)} = e^{i pf} sum_l C(q, l) (i t_f)^{q-l} a_l  =>  solve for a_q.
        let mut a_q = fq * e_back;
        for (l, a_l) in values.iter().enumerate() {
            a_q -= binomial(q, l) * it_f.powu((q - l) as u32) * a_l;
        }
        f_derivs.push(fq);
        values.push(a_q);
    }
    values
}

/// Constraint values in either normalization; see [`ConstraintScaling`].
pub fn constraint_values_scaled(spec: &RobustnessSpec, scaling: ConstraintScaling) -> Vec<Complex64> {
    match scaling {
        ConstraintScaling::DerivativeConsistent => general_constraint_values(spec),
        ConstraintScaling::InverseFrequencyPowers => {
            // Same closed forms in pf = omega0 t_f, evaluated at unit design
            // frequency, with explicit 1/omega0^m factors for m >= 1. Both
            // conventions share a_0.
            let unit_target = Target::new(spec.target.r(), spec.target.phi(), 1.0)
                .expect("rescaled target stays valid");
            let unit = RobustnessSpec {
                order: spec.order,
                omega0: 1.0,
                target: unit_target,
                t_f: spec.omega0 * spec.t_f,
                include_boundary_conditions: spec.include_boundary_conditions,
            };
            let a0 = general_constraint_values(&RobustnessSpec { order: 0, ..*spec })[0];
            general_constraint_values(&unit)
                .into_iter()
                .enumerate()
                .map(|(m, a)| if m == 0 { a0 } else { a / spec.omega0.powi(m as i32) })
                .collect()
        }
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    let mut out = 1.0;
    for j in 0..k.min(n - k) {
        out = out * (n - j) as f64 / (j + 1) as f64;
    }
    out
}
