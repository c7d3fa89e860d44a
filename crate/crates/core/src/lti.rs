//! Linear time-invariant system model: controllability, Gramian-based
//! minimum-energy open-loop control, and a trusted fixed-step simulator used
//! as the verification oracle for every designer in the crate.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::oscillator::Target;
use crate::signal::{PolyExpSignal, Term};

/// Relative singular-value cutoff for the Kalman rank test.
const RANK_TOL: f64 = 1e-10;

/// Relative Frobenius change at which the Gramian quadrature is converged.
const GRAMIAN_TOL: f64 = 1e-10;

/// Scaled final-state change at which the simulator accepts a step size.
const SIM_TOL: f64 = 1e-10;

/// `x' = A x + B u` with constant real matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct LtiSystem {
    a: DMatrix<f64>,
    b: DMatrix<f64>,
}

/// States sampled on a strictly increasing time grid.
#[derive(Clone, Debug)]
pub struct Trajectory {
    times: Vec<f64>,
    states: Vec<DVector<f64>>,
}

impl Trajectory {
    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn states(&self) -> &[DVector<f64>] {
        &self.states
    }

    pub fn final_state(&self) -> &DVector<f64> {
        self.states.last().expect("trajectory is never empty")
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}

impl LtiSystem {
    /// Builds a system from `A` (n x n) and `B` (n x q); entries must be finite.
    pub fn new(a: DMatrix<f64>, b: DMatrix<f64>) -> Result<Self> {
        if a.nrows() != a.ncols() {
            return Err(Error::Domain(format!(
                "A must be square, got {}x{}",
                a.nrows(),
                a.ncols()
            )));
        }
        if b.nrows() != a.nrows() || b.ncols() == 0 {
            return Err(Error::Domain(format!(
                "B must be {}xq with q >= 1, got {}x{}",
                a.nrows(),
                b.nrows(),
                b.ncols()
            )));
        }
        if a.iter().chain(b.iter()).any(|x| !x.is_finite()) {
            return Err(Error::Domain("system matrices must be finite".into()));
        }
        Ok(Self { a, b })
    }

    pub fn state_dim(&self) -> usize {
        self.a.nrows()
    }

    pub fn control_dim(&self) -> usize {
        self.b.ncols()
    }

    pub fn a(&self) -> &DMatrix<f64> {
        &self.a
    }

    pub fn b(&self) -> &DMatrix<f64> {
        &self.b
    }

    /// Kalman controllability matrix `[B AB A^2B ... A^{n-1}B]`.
    pub fn controllability_matrix(&self) -> DMatrix<f64> {
        let n = self.state_dim();
        let q = self.control_dim();
        let mut out = DMatrix::zeros(n, n * q);
        let mut block = self.b.clone();
        for k in 0..n {
            out.view_mut((0, k * q), (n, q)).copy_from(&block);
            block = &self.a * block;
        }
        out
    }

    /// True iff the controllability matrix has full numerical rank.
    pub fn is_controllable(&self) -> bool {
        let kc = self.controllability_matrix();
        let svd = kc.svd(false, false);
        let max = svd.singular_values.max();
        if max == 0.0 {
            return false;
        }
        let rank = svd.singular_values.iter().filter(|s| **s > RANK_TOL * max).count();
        rank == self.state_dim()
    }

    /// Controllability Gramian `W(t_f) = integral of e^{A s} B B^T e^{A^T s} ds`.
    ///
    /// Composite Gauss-Legendre quadrature, panels doubled until the relative
    /// Frobenius change drops below 1e-10.
    pub fn gramian(&self, t_f: f64) -> Result<DMatrix<f64>> {
        if !(t_f > 0.0) {
            return Err(Error::Domain("gramian horizon must be positive".into()));
        }
        let mut panels = 8usize;
        let mut prev: Option<DMatrix<f64>> = None;
        for _ in 0..16 {
            let w = self.gramian_panels(t_f, panels);
            if let Some(p) = &prev {
                let norm = w.norm().max(1e-300);
                if (&w - p).norm() <= GRAMIAN_TOL * norm {
                    return Ok(w);
                }
            }
            prev = Some(w);
            panels *= 2;
        }
        Err(Error::Numerical(
            "gramian quadrature did not converge after maximum refinement".into(),
        ))
    }

    fn gramian_panels(&self, t_f: f64, panels: usize) -> DMatrix<f64> {
        // 6-point Gauss-Legendre nodes/weights on [-1, 1].
        const NODES: [f64; 6] = [
            -0.932469514203152,
            -0.661209386466265,
            -0.238619186083197,
            0.238619186083197,
            0.661209386466265,
            0.932469514203152,
        ];
        const WEIGHTS: [f64; 6] = [
            0.171324492379170,
            0.360761573048139,
            0.467913934572691,
            0.467913934572691,
            0.360761573048139,
            0.171324492379170,
        ];
        let n = self.state_dim();
        let h = t_f / panels as f64;
        let mut w = DMatrix::zeros(n, n);
        for p in 0..panels {
            let mid = (p as f64 + 0.5) * h;
            for (x, wt) in NODES.iter().zip(WEIGHTS.iter()) {
                let s = mid + 0.5 * h * x;
                let eb = (self.a.clone() * s).exp() * &self.b;
                w += (&eb * eb.transpose()) * (0.5 * h * wt);
            }
        }
        w
    }

    /// Minimum-energy open-loop drive steering `x0` to `xf` over `[0, t_f]`,
    /// returned per control channel as closed-form signals.
    ///
    /// The optimality condition gives `u(t) = B^T e^{A^T (t_f - t)} mu` with
    /// `mu = W(t_f)^{-1} (x_f - e^{A t_f} x0)`; the propagator is expanded in
    /// the polynomial-exponential class so the drive is exact.
    pub fn min_energy_drive(
        &self,
        x0: &DVector<f64>,
        xf: &DVector<f64>,
        t_f: f64,
    ) -> Result<Vec<PolyExpSignal>> {
        let n = self.state_dim();
        if x0.len() != n || xf.len() != n {
            return Err(Error::Domain("state vectors must match the system dimension".into()));
        }
        if !(t_f > 0.0) {
            return Err(Error::Domain("drive horizon must be positive".into()));
        }
        if !self.is_controllable() {
            return Err(Error::Design(
                "system is not controllable; the Gramian is singular".into(),
            ));
        }
        let w = self.gramian(t_f)?;
        let phi = (self.a.clone() * t_f).exp();
        let rhs = xf - &phi * x0;
        let mu = w
            .clone()
            .lu()
            .solve(&rhs)
            .ok_or_else(|| Error::Numerical("gramian solve failed".into()))?;

        // e^{A^T (t_f - t)} = e^{A^T t_f} e^{-A^T t}; expand the t-dependent factor.
        let s = matrix_exp_signals(&(-self.a.transpose()), t_f);
        let c = (self.a.transpose() * t_f).exp();
        let d = self.b.transpose() * c; // q x n
        let mut drives = Vec::with_capacity(self.control_dim());
        for ch in 0..self.control_dim() {
            let mut u = PolyExpSignal::zero(t_f);
            for k in 0..n {
                for l in 0..n {
                    let factor = Complex64::new(d[(ch, k)] * mu[l], 0.0);
                    if factor.norm_sqr() != 0.0 {
                        u = &u + &s[k][l].scaled(factor);
                    }
                }
            }
            drives.push(u.real_part());
        }
        Ok(drives)
    }

    /// Integrates `x' = A x + B u(t)` with classic fixed-step RK4 on a grid of
    /// `steps` intervals. The step is halved internally until the final state
    /// moves by less than 1e-10 (scaled); the reported grid stays as requested
    /// so trajectories are reproducible.
    pub fn simulate(
        &self,
        drives: &[PolyExpSignal],
        x0: &DVector<f64>,
        steps: usize,
    ) -> Result<Trajectory> {
        if steps < 2 {
            return Err(Error::Domain("simulation needs at least 2 steps".into()));
        }
        if drives.len() != self.control_dim() {
            return Err(Error::Domain(format!(
                "expected {} drive channels, got {}",
                self.control_dim(),
                drives.len()
            )));
        }
        if x0.len() != self.state_dim() {
            return Err(Error::Domain("initial state dimension mismatch".into()));
        }
        let t_f = drives
            .first()
            .map(|d| d.window())
            .ok_or_else(|| Error::Domain("at least one drive channel required".into()))?;
        if drives.iter().any(|d| d.window() != t_f) {
            return Err(Error::Domain("drive channels must share one window".into()));
        }

        let mut refine = 1usize;
        let mut prev_final: Option<DVector<f64>> = None;
        for _ in 0..16 {
            let states = self.rk4_grid(drives, x0, steps, refine, t_f)?;
            let xf = states.last().expect("grid states nonempty").clone();
            if let Some(p) = &prev_final {
                if (&xf - p).norm() <= SIM_TOL * (1.0 + xf.norm()) {
                    let times = (0..=steps).map(|i| t_f * i as f64 / steps as f64).collect();
                    return Ok(Trajectory { times, states });
                }
            }
            prev_final = Some(xf);
            refine *= 2;
        }
        Err(Error::Numerical(
            "simulation did not reach the step-halving convergence gate".into(),
        ))
    }

    fn rk4_grid(
        &self,
        drives: &[PolyExpSignal],
        x0: &DVector<f64>,
        steps: usize,
        refine: usize,
        t_f: f64,
    ) -> Result<Vec<DVector<f64>>> {
        let q = self.control_dim();
        let mut u = DVector::zeros(q);
        let eval = |t: f64, x: &DVector<f64>, out: &mut DVector<f64>, u: &mut DVector<f64>| {
            let t = t.clamp(0.0, t_f);
            for (c, d) in u.iter_mut().zip(drives.iter()) {
                *c = d.eval_unchecked(t).re;
            }
            out.copy_from(&(&self.a * x));
            *out += &self.b * &*u;
        };

        let total = steps * refine;
        let h = t_f / total as f64;
        let mut x = x0.clone();
        let mut states = Vec::with_capacity(steps + 1);
        states.push(x.clone());
        let n = self.state_dim();
        let (mut k1, mut k2, mut k3, mut k4) = (
            DVector::zeros(n),
            DVector::zeros(n),
            DVector::zeros(n),
            DVector::zeros(n),
        );
        for i in 0..total {
            let t = t_f * i as f64 / total as f64;
            eval(t, &x, &mut k1, &mut u);
            eval(t + 0.5 * h, &(&x + &k1 * (0.5 * h)), &mut k2, &mut u);
            eval(t + 0.5 * h, &(&x + &k2 * (0.5 * h)), &mut k3, &mut u);
            eval(t + h, &(&x + &k3 * h), &mut k4, &mut u);
            x += (k1.clone() + k2.clone() * 2.0 + k3.clone() * 2.0 + k4.clone()) * (h / 6.0);
            if x.iter().any(|v| !v.is_finite()) {
                return Err(Error::Numerical(format!(
                    "state became non-finite at t = {:.6}",
                    t + h
                )));
            }
            if (i + 1) % refine == 0 {
                states.push(x.clone());
            }
        }
        Ok(states)
    }
}

/// Residual excitation energy per unit mass of a final state relative to a
/// phase-space target, at trap frequency `omega`:
/// `dE = (v - v_t)^2 / 2 + omega^2 (x - x_t)^2 / 2`.
pub fn final_excitation(omega: f64, final_state: (f64, f64), target: &Target) -> f64 {
    let (x, v) = final_state;
    let (xt, vt) = target.state();
    0.5 * (v - vt).powi(2) + 0.5 * omega * omega * (x - xt).powi(2)
}

/// Entries of `e^{M t}` on `[0, t_f]` as closed-form signals, for any real
/// square `M` (defective matrices included).
///
/// Putzer's method: `e^{Mt} = sum_j r_j(t) P_{j-1}` with `P_0 = I`,
/// `P_j = P_{j-1} (M - lambda_j I)`, `r_1 = e^{lambda_1 t}` and
/// `r_{j+1}(t) = integral of e^{lambda_{j+1}(t-s)} r_j(s) ds`, which stays in
/// the polynomial-exponential class. Only eigenvalues are needed, so there is
/// no eigenvector conditioning to worry about.
pub(crate) fn matrix_exp_signals(m: &DMatrix<f64>, t_f: f64) -> Vec<Vec<PolyExpSignal>> {
    let n = m.nrows();
    assert_eq!(n, m.ncols());
    let mut eig: Vec<Complex64> = m.complex_eigenvalues().iter().copied().collect();
    // Deterministic order; grouping nearby eigenvalues keeps the convolution
    // in its well-conditioned branch for (near-)defective spectra.
    eig.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).expect("finite eigenvalues"));

    let mc: DMatrix<Complex64> = m.map(|x| Complex64::new(x, 0.0));
    let id: DMatrix<Complex64> = DMatrix::identity(n, n);
    let mut p = id.clone();
    let mut r = PolyExpSignal::exponential(Complex64::new(1.0, 0.0), eig[0], t_f);

    let mut out = vec![vec![PolyExpSignal::zero(t_f); n]; n];
    for j in 0..n {
        for row in 0..n {
            for col in 0..n {
                let w = p[(row, col)];
                if w.norm_sqr() != 0.0 {
                    out[row][col] = &out[row][col] + &r.scaled(w);
                }
            }
        }
        if j + 1 < n {
            p *= &mc - &id * eig[j];
            r = convolve_exp(&r, eig[j + 1]);
        }
    }
    out
}

/// `g(t) = integral of e^{lambda (t - s)} f(s) ds` over `[0, t]`, closed form.
fn convolve_exp(f: &PolyExpSignal, lambda: Complex64) -> PolyExpSignal {
    let t_f = f.window();
    let mut out = PolyExpSignal::zero(t_f);
    for term in f.terms() {
        let nu = term.freq - lambda;
        if (nu * t_f).norm() <= 2.0 {
            // e^{nu s} as a truncated series; exact at nu = 0 and free of the
            // cancellation the closed form suffers for small |nu t|.
            let deg = term.coeffs.len() - 1;
            let mut poly = vec![Complex64::new(0.0, 0.0); deg + 32];
            let mut nu_pow = Complex64::new(1.0, 0.0);
            for i in 0..30 {
                for (j, c) in term.coeffs.iter().enumerate() {
                    let k = i + j + 1;
                    poly[k] += c * nu_pow / k as f64;
                }
                nu_pow = nu_pow * nu / (i as f64 + 1.0);
            }
            // Trailing series coefficients below 1e-18 of the window scale
            // contribute nothing; dropping them keeps degrees bounded.
            let scale = poly
                .iter()
                .enumerate()
                .map(|(k, c)| c.norm() * t_f.powi(k as i32))
                .fold(0.0f64, f64::max)
                .max(1e-300);
            while poly.len() > 1 {
                let k = poly.len() - 1;
                if poly[k].norm() * t_f.powi(k as i32) <= 1e-18 * scale {
                    poly.pop();
                } else {
                    break;
                }
            }
            out.push_term(Term { coeffs: poly, freq: lambda });
        } else {
            // Antiderivative q with q' + nu q = p gives
            // integral = q(t) e^{mu t} - q(0) e^{lambda t}.
            let mut q = vec![Complex64::new(0.0, 0.0); term.coeffs.len()];
            let mut deriv = term.coeffs.clone();
            let mut sign = Complex64::new(1.0, 0.0);
            let mut nu_pow = nu;
            loop {
                for (qc, dc) in q.iter_mut().zip(deriv.iter()) {
                    *qc += sign * dc / nu_pow;
                }
                if deriv.len() <= 1 {
                    break;
                }
                deriv = deriv
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(k, c)| c * k as f64)
                    .collect();
                sign = -sign;
                nu_pow *= nu;
            }
            let q0 = q[0];
            out.push_term(Term { coeffs: q, freq: term.freq });
            out.push_term(Term { coeffs: vec![-q0], freq: lambda });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::{dmatrix, dvector};

    fn oscillator(omega: f64) -> LtiSystem {
        LtiSystem::new(
            dmatrix![0.0, 1.0; -omega * omega, 0.0],
            dmatrix![0.0; 1.0],
        )
        .unwrap()
    }

    #[test]
    fn controllability_matrix_oscillator() {
        let sys = oscillator(1.0);
        let kc = sys.controllability_matrix();
        assert_eq!(kc, dmatrix![0.0, 1.0; 1.0, 0.0]);
    }

    #[test]
    fn controllability_matrix_zero_and_double_integrator() {
        let zero = LtiSystem::new(DMatrix::zeros(2, 2), dmatrix![0.0; 0.0]).unwrap();
        assert_eq!(zero.controllability_matrix(), DMatrix::zeros(2, 2));
        assert!(!zero.is_controllable());

        let di = LtiSystem::new(dmatrix![0.0, 1.0; 0.0, 0.0], dmatrix![0.0; 1.0]).unwrap();
        assert_eq!(di.controllability_matrix(), dmatrix![0.0, 1.0; 1.0, 0.0]);
        assert!(di.is_controllable());
    }

    #[test]
    fn oscillator_is_controllable() {
        assert!(oscillator(1.0).is_controllable());
    }

    #[test]
    fn gramian_of_double_integrator_is_analytic() {
        let di = LtiSystem::new(dmatrix![0.0, 1.0; 0.0, 0.0], dmatrix![0.0; 1.0]).unwrap();
        let w = di.gramian(1.0).unwrap();
        let want = dmatrix![1.0 / 3.0, 0.5; 0.5, 1.0];
        assert!((w - want).norm() < 1e-12);
    }

    #[test]
    fn gramian_of_uncontrollable_system_is_zero() {
        let sys = LtiSystem::new(dmatrix![0.0, 1.0; -1.0, 0.0], dmatrix![0.0; 0.0]).unwrap();
        let w = sys.gramian(2.0).unwrap();
        assert!(w.norm() < 1e-14);
    }

    #[test]
    fn gramian_is_symmetric() {
        let sys = oscillator(1.3);
        let w = sys.gramian(7.0).unwrap();
        assert!((w.clone() - w.transpose()).norm() < 1e-12 * w.norm());
    }

    #[test]
    fn matrix_exp_signals_rotation() {
        let m = dmatrix![0.0, 1.0; -1.0, 0.0];
        let s = matrix_exp_signals(&m, 10.0);
        for &t in &[0.0, 0.7, 3.1, 9.9] {
            let want = (m.clone() * t).exp();
            for i in 0..2 {
                for j in 0..2 {
                    let got = s[i][j].eval_unchecked(t);
                    assert!((got.re - want[(i, j)]).abs() < 1e-11, "entry ({i},{j}) at t={t}");
                    assert!(got.im.abs() < 1e-11);
                }
            }
        }
    }

    #[test]
    fn matrix_exp_signals_defective_matrix() {
        // Nilpotent block: e^{Mt} = I + Mt, a pure polynomial.
        let m = dmatrix![0.0, 1.0; 0.0, 0.0];
        let s = matrix_exp_signals(&m, 5.0);
        let got = s[0][1].eval_unchecked(2.5);
        assert!((got.re - 2.5).abs() < 1e-13);
        assert!((s[0][0].eval_unchecked(2.5).re - 1.0).abs() < 1e-13);
        assert!(s[1][0].eval_unchecked(2.5).norm() < 1e-13);
    }

    #[test]
    fn matrix_exp_signals_near_defective_spectrum() {
        // Two eigenvalues 1e-9 apart exercise the series branch of the
        // convolution.
        let m = dmatrix![-1.0, 1.0; 0.0, -1.000000001];
        let s = matrix_exp_signals(&m, 4.0);
        for &t in &[0.5, 2.0, 4.0] {
            let want = (m.clone() * t).exp();
            for i in 0..2 {
                for j in 0..2 {
                    let got = s[i][j].eval_unchecked(t);
                    assert!((got.re - want[(i, j)]).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn simulate_zero_drive_from_origin_stays_zero() {
        let sys = oscillator(1.0);
        let traj = sys
            .simulate(&[PolyExpSignal::zero(5.0)], &dvector![0.0, 0.0], 50)
            .unwrap();
        assert_eq!(traj.len(), 51);
        assert_eq!(traj.times()[0], 0.0);
        assert!(traj.states().iter().all(|s| s.norm() == 0.0));
    }

    #[test]
    fn simulate_free_periodic_orbit_returns() {
        let sys = oscillator(1.0);
        let t_f = 2.0 * std::f64::consts::PI;
        let traj = sys
            .simulate(&[PolyExpSignal::zero(t_f)], &dvector![1.0, 0.0], 100)
            .unwrap();
        let xf = traj.final_state();
        assert!((xf - dvector![1.0, 0.0]).norm() < 1e-8);
    }

    #[test]
    fn simulate_rejects_too_few_steps() {
        let sys = oscillator(1.0);
        let r = sys.simulate(&[PolyExpSignal::zero(1.0)], &dvector![0.0, 0.0], 1);
        assert!(matches!(r, Err(Error::Domain(_))));
    }

    #[test]
    fn min_energy_drive_trivial_target_is_zero() {
        let sys = oscillator(1.0);
        let u = sys
            .min_energy_drive(&dvector![0.0, 0.0], &dvector![0.0, 0.0], 10.0)
            .unwrap();
        assert_eq!(u.len(), 1);
        assert!(u[0].energy() == 0.0);
    }

    #[test]
    fn min_energy_drive_uncontrollable_is_design_error() {
        let sys = LtiSystem::new(dmatrix![0.0, 1.0; -1.0, 0.0], dmatrix![0.0; 0.0]).unwrap();
        let r = sys.min_energy_drive(&dvector![0.0, 0.0], &dvector![1.0, 0.0], 10.0);
        assert!(matches!(r, Err(Error::Design(_))));
    }

    #[test]
    fn min_energy_drive_reaches_target() {
        let sys = oscillator(1.0);
        let xf = dvector![1.0, 0.0];
        let u = sys.min_energy_drive(&dvector![0.0, 0.0], &xf, 10.0).unwrap();
        let traj = sys.simulate(&u, &dvector![0.0, 0.0], 400).unwrap();
        let err = (traj.final_state() - &xf).norm() / (1.0 + xf.norm());
        assert!(err < 1e-8, "reach error {err}");
    }

    #[test]
    fn min_energy_drive_double_integrator_reaches_target() {
        // Defective A goes through the polynomial branch of Putzer.
        let di = LtiSystem::new(dmatrix![0.0, 1.0; 0.0, 0.0], dmatrix![0.0; 1.0]).unwrap();
        let xf = dvector![1.0, -0.5];
        let u = di.min_energy_drive(&dvector![0.0, 0.0], &xf, 2.0).unwrap();
        let traj = di.simulate(&u, &dvector![0.0, 0.0], 400).unwrap();
        assert!((traj.final_state() - &xf).norm() < 1e-9);
    }

    #[test]
    fn simulate_superposition_holds() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..4 {
            let a = DMatrix::from_fn(2, 2, |_, _| rng.gen_range(-1.0..1.0));
            let sys = LtiSystem::new(a, dmatrix![0.0; 1.0]).unwrap();
            let t_f = 4.0;
            let u1 = PolyExpSignal::cosine(rng.gen_range(0.5..2.0), t_f);
            let u2 = PolyExpSignal::sine(rng.gen_range(0.5..2.0), t_f);
            let (ca, cb) = (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let combo = &u1.scaled(Complex64::new(ca, 0.0)) + &u2.scaled(Complex64::new(cb, 0.0));
            let x0 = dvector![0.0, 0.0];
            let t1 = sys.simulate(&[u1], &x0, 200).unwrap();
            let t2 = sys.simulate(&[u2], &x0, 200).unwrap();
            let tc = sys.simulate(&[combo], &x0, 200).unwrap();
            let want = t1.final_state() * ca + t2.final_state() * cb;
            assert!((tc.final_state() - &want).norm() < 1e-9 * (1.0 + want.norm()));
        }
    }

    #[test]
    fn final_excitation_basics() {
        let target = Target::new(0.0, 0.0, 2.0).unwrap();
        assert_eq!(final_excitation(2.0, (0.0, 0.0), &target), 0.0);
        // final (1, 0) against a (0, 0) target at omega = 2: dE = 2.
        assert!((final_excitation(2.0, (1.0, 0.0), &target) - 2.0).abs() < 1e-15);
    }
}
