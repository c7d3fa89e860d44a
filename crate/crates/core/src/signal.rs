//! Closed-form algebra for polynomial-exponential signals on a finite window.
//!
//! A [`PolyExpSignal`] is a finite sum of terms `(c_0 + c_1 t + ... + c_d t^d) e^{s t}`
//! with complex coefficients and complex rates, defined on `[0, t_f]`. The class is
//! closed under addition, scaling, multiplication, differentiation and conjugation,
//! and all window integrals reduce to the exponential moments
//! `M_n(delta) = integral of t^n e^{delta t} over [0, t_f]`, so Fourier-transform
//! derivatives and energies come out in closed form rather than by quadrature.

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest polynomial degree accepted for externally built signals. Robustness
/// orders go up to 4 and every pipeline stays far below this; higher moments
/// are increasingly ill-conditioned.
pub const MAX_POLY_DEGREE: usize = 12;

/// Internal headroom: products of two capped polynomials plus Fourier
/// derivative orders stay below this.
const MAX_MOMENT_ORDER: usize = 40;

/// `|delta * t_f|` at or below which moments use the power series. Above it the
/// upward recursion is stable for every order the crate produces.
const MOMENT_SERIES_SWITCH: f64 = 8.0;

/// Relative slack allowed when checking that a time lies inside the window.
const WINDOW_SLACK: f64 = 1e-9;

/// One polynomial-exponential term `poly(t) * e^{freq * t}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    /// Coefficients `c_0..c_d` of the polynomial, lowest order first.
    pub coeffs: Vec<Complex64>,
    /// Complex rate of the exponential.
    pub freq: Complex64,
}

impl Term {
    fn eval_poly(&self, t: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.norm_sqr() == 0.0)
    }
}

/// Finite sum of polynomial-exponential terms on the window `[0, t_f]`.
///
/// Serializes as `{"terms":[{"coeffs":[[re,im],...],"freq":[re,im]}],"t_f":n}`,
/// the drive-interchange format shared by the CLI and every design module.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyExpSignal {
    terms: Vec<Term>,
    t_f: f64,
}

/// Value of one exponential moment `integral of t^n e^{delta t} dt` on `[0, t_f]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MomentValue {
    pub order: usize,
    pub delta: Complex64,
    pub value: Complex64,
}

impl PolyExpSignal {
    /// The identically zero signal on `[0, t_f]`.
    pub fn zero(t_f: f64) -> Self {
        assert!(t_f > 0.0 && t_f.is_finite(), "window length must be positive");
        Self { terms: Vec::new(), t_f }
    }

    /// Constant signal `c` on `[0, t_f]`.
    pub fn constant(c: Complex64, t_f: f64) -> Self {
        Self::zero(t_f).with_term(vec![c], Complex64::new(0.0, 0.0))
    }

    /// Polynomial signal with the given coefficients, lowest order first.
    pub fn polynomial(coeffs: Vec<Complex64>, t_f: f64) -> Self {
        Self::zero(t_f).with_term(coeffs, Complex64::new(0.0, 0.0))
    }

    /// `amplitude * e^{rate t}` on `[0, t_f]`.
    pub fn exponential(amplitude: Complex64, rate: Complex64, t_f: f64) -> Self {
        Self::zero(t_f).with_term(vec![amplitude], rate)
    }

    /// `cos(omega t)` as a conjugate pair of exponentials.
    pub fn cosine(omega: f64, t_f: f64) -> Self {
        let half = Complex64::new(0.5, 0.0);
        Self::zero(t_f)
            .with_term(vec![half], Complex64::new(0.0, omega))
            .with_term(vec![half], Complex64::new(0.0, -omega))
    }

    /// `sin(omega t)` as a conjugate pair of exponentials.
    pub fn sine(omega: f64, t_f: f64) -> Self {
        let half_i = Complex64::new(0.0, -0.5);
        Self::zero(t_f)
            .with_term(vec![half_i], Complex64::new(0.0, omega))
            .with_term(vec![-half_i], Complex64::new(0.0, -omega))
    }

    /// Adds a term; degrees above [`MAX_POLY_DEGREE`] are rejected.
    pub fn with_term(mut self, coeffs: Vec<Complex64>, freq: Complex64) -> Self {
        assert!(
            coeffs.len() <= MAX_POLY_DEGREE + 1,
            "polynomial degree exceeds the supported cap of {MAX_POLY_DEGREE}"
        );
        self.push_term(Term { coeffs, freq });
        self
    }

    pub(crate) fn push_term(&mut self, term: Term) {
        if term.is_zero() {
            return;
        }
        // Merge with an existing term at the bit-identical rate to keep the
        // representation small and deterministic.
        if let Some(existing) = self.terms.iter_mut().find(|t| {
            t.freq.re.to_bits() == term.freq.re.to_bits() && t.freq.im.to_bits() == term.freq.im.to_bits()
        }) {
            if existing.coeffs.len() < term.coeffs.len() {
                existing.coeffs.resize(term.coeffs.len(), Complex64::new(0.0, 0.0));
            }
            for (c, add) in existing.coeffs.iter_mut().zip(term.coeffs.iter()) {
                *c += add;
            }
            existing.trim();
        } else {
            let mut term = term;
            term.trim();
            if !term.coeffs.is_empty() {
                self.terms.push(term);
            }
        }
        self.terms.retain(|t| !t.coeffs.is_empty());
    }

    pub fn window(&self) -> f64 {
        self.t_f
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(Term::is_zero)
    }

    /// Evaluates the signal at `t`; `t` must lie in `[0, t_f]` up to a tiny slack.
    pub fn evaluate(&self, t: f64) -> Result<Complex64> {
        let slack = WINDOW_SLACK * self.t_f.max(1.0);
        if !t.is_finite() || t < -slack || t > self.t_f + slack {
            return Err(Error::Domain(format!(
                "evaluation time {t} outside the signal window [0, {}]",
                self.t_f
            )));
        }
        Ok(self.eval_unchecked(t.clamp(0.0, self.t_f)))
    }

    pub(crate) fn eval_unchecked(&self, t: f64) -> Complex64 {
        self.terms
            .iter()
            .map(|term| term.eval_poly(t) * (term.freq * t).exp())
            .sum()
    }

    /// Term-wise derivative: `d/dt [p e^{st}] = (p' + s p) e^{st}`.
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero(self.t_f);
        for term in &self.terms {
            let mut coeffs = vec![Complex64::new(0.0, 0.0); term.coeffs.len()];
            for (m, c) in term.coeffs.iter().enumerate() {
                coeffs[m] += term.freq * c;
                if m > 0 {
                    coeffs[m - 1] += Complex64::new(m as f64, 0.0) * c;
                }
            }
            out.push_term(Term { coeffs, freq: term.freq });
        }
        out
    }

    /// Second term-wise derivative; stays inside the class.
    pub fn second_derivative(&self) -> Self {
        self.derivative().derivative()
    }

    /// Complex conjugate signal.
    pub fn conjugated(&self) -> Self {
        let mut out = Self::zero(self.t_f);
        for term in &self.terms {
            out.push_term(Term {
                coeffs: term.coeffs.iter().map(Complex64::conj).collect(),
                freq: term.freq.conj(),
            });
        }
        out
    }

    /// Signal scaled by a complex factor.
    pub fn scaled(&self, k: Complex64) -> Self {
        let mut out = Self::zero(self.t_f);
        for term in &self.terms {
            out.push_term(Term {
                coeffs: term.coeffs.iter().map(|c| c * k).collect(),
                freq: term.freq,
            });
        }
        out
    }

    /// Real part `(f + f*)/2`, still inside the class.
    pub fn real_part(&self) -> Self {
        let half = Complex64::new(0.5, 0.0);
        &self.scaled(half) + &self.conjugated().scaled(half)
    }

    /// `m`-th derivative of the window Fourier transform,
    /// `integral of (-i t)^m f(t) e^{-i omega t} dt` over `[0, t_f]`.
    pub fn fourier_derivative(&self, omega: f64, m: usize) -> Complex64 {
        let phase = Complex64::new(0.0, -1.0).powu(m as u32);
        let mut acc = Complex64::new(0.0, 0.0);
        for term in &self.terms {
            let delta = term.freq - Complex64::new(0.0, omega);
            for (j, c) in term.coeffs.iter().enumerate() {
                acc += c * raw_moment(m + j, delta, self.t_f);
            }
        }
        phase * acc
    }

    /// Window energy `integral of |f|^2 dt`, exact via moments of `f * conj(f)`.
    pub fn energy(&self) -> f64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for a in &self.terms {
            for b in &self.terms {
                let delta = a.freq + b.freq.conj();
                let prod = poly_mul(&a.coeffs, &conj_poly(&b.coeffs));
                for (j, c) in prod.iter().enumerate() {
                    acc += c * raw_moment(j, delta, self.t_f);
                }
            }
        }
        acc.re.max(0.0)
    }

    /// Largest magnitude over `samples` evenly spaced points (endpoints included).
    pub fn sup_norm(&self, samples: usize) -> f64 {
        self.sample_max(samples, |z| z.norm())
    }

    /// Largest imaginary part magnitude over `samples` evenly spaced points.
    pub fn max_imag(&self, samples: usize) -> f64 {
        self.sample_max(samples, |z| z.im.abs())
    }

    /// True when the pointwise imaginary part is below `tol` times the sup-norm.
    pub fn is_effectively_real(&self, samples: usize, tol: f64) -> bool {
        let sup = self.sup_norm(samples);
        if sup == 0.0 {
            return true;
        }
        self.max_imag(samples) <= tol * sup
    }

    fn sample_max(&self, samples: usize, f: impl Fn(Complex64) -> f64) -> f64 {
        assert!(samples >= 2);
        let mut max = 0.0f64;
        for i in 0..samples {
            let t = self.t_f * i as f64 / (samples - 1) as f64;
            max = max.max(f(self.eval_unchecked(t)));
        }
        max
    }
}

impl std::ops::Add<&PolyExpSignal> for &PolyExpSignal {
    type Output = PolyExpSignal;

    fn add(self, rhs: &PolyExpSignal) -> PolyExpSignal {
        assert!(self.t_f == rhs.t_f, "signals live on different windows");
        let mut out = self.clone();
        for term in &rhs.terms {
            out.push_term(term.clone());
        }
        out
    }
}

impl std::ops::Sub<&PolyExpSignal> for &PolyExpSignal {
    type Output = PolyExpSignal;

    fn sub(self, rhs: &PolyExpSignal) -> PolyExpSignal {
        self + &rhs.scaled(Complex64::new(-1.0, 0.0))
    }
}

impl std::ops::Mul<&PolyExpSignal> for &PolyExpSignal {
    type Output = PolyExpSignal;

    fn mul(self, rhs: &PolyExpSignal) -> PolyExpSignal {
        assert!(self.t_f == rhs.t_f, "signals live on different windows");
        let mut out = PolyExpSignal::zero(self.t_f);
        for a in &self.terms {
            for b in &rhs.terms {
                out.push_term(Term {
                    coeffs: poly_mul(&a.coeffs, &b.coeffs),
                    freq: a.freq + b.freq,
                });
            }
        }
        out
    }
}

impl Term {
    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.norm_sqr() == 0.0) {
            self.coeffs.pop();
        }
    }
}

fn conj_poly(coeffs: &[Complex64]) -> Vec<Complex64> {
    coeffs.iter().map(Complex64::conj).collect()
}

fn poly_mul(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exponential moment `M_n = integral of t^n e^{delta t} dt` over `[0, t_f]`.
///
/// Two regimes: a truncated power series for `|delta t_f| <= 8` (no
/// cancellation beyond a bounded factor, `delta = 0` handled by the leading
/// term `t_f^{n+1}/(n+1)`), and the upward recursion
/// `M_n = (t_f^n e^{delta t_f} - n M_{n-1}) / delta` above the switch, where
/// the division damps the error growth for every order used here.
pub fn moment(n: usize, delta: Complex64, t_f: f64) -> MomentValue {
    MomentValue { order: n, delta, value: raw_moment(n, delta, t_f) }
}

pub(crate) fn raw_moment(n: usize, delta: Complex64, t_f: f64) -> Complex64 {
    assert!(t_f > 0.0, "moment window must be positive");
    assert!(n <= MAX_MOMENT_ORDER, "moment order {n} beyond supported range");
    if (delta * t_f).norm() <= MOMENT_SERIES_SWITCH {
        moment_series(n, delta, t_f)
    } else {
        moment_recursion(n, delta, t_f)
    }
}

fn moment_series(n: usize, delta: Complex64, t_f: f64) -> Complex64 {
    // M_n = sum_j delta^j t_f^{n+j+1} / (j! (n+j+1))
    let z = delta * t_f;
    let t_pow = t_f.powi(n as i32 + 1);
    let mut factor = Complex64::new(1.0, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..120 {
        let term = factor / (n as f64 + j as f64 + 1.0);
        acc += term;
        if j > 3 && term.norm() < 1e-20 * acc.norm().max(1e-300) {
            break;
        }
        factor = factor * z / (j as f64 + 1.0);
    }
    acc * t_pow
}

fn moment_recursion(n: usize, delta: Complex64, t_f: f64) -> Complex64 {
    let e = (delta * t_f).exp();
    let mut m = (e - 1.0) / delta;
    let mut t_pow = 1.0;
    for k in 1..=n {
        t_pow *= t_f;
        m = (e * t_pow - k as f64 * m) / delta;
    }
    m
}

// Wire format: {"terms":[{"coeffs":[[re,im],...],"freq":[re,im]}],"t_f":n}

#[derive(Serialize, Deserialize)]
struct TermDto {
    coeffs: Vec<[f64; 2]>,
    freq: [f64; 2],
}

#[derive(Serialize, Deserialize)]
struct SignalDto {
    terms: Vec<TermDto>,
    t_f: f64,
}

impl Serialize for PolyExpSignal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let dto = SignalDto {
            terms: self
                .terms
                .iter()
                .map(|t| TermDto {
                    coeffs: t.coeffs.iter().map(|c| [c.re, c.im]).collect(),
                    freq: [t.freq.re, t.freq.im],
                })
                .collect(),
            t_f: self.t_f,
        };
        dto.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PolyExpSignal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let dto = SignalDto::deserialize(deserializer)?;
        if !(dto.t_f > 0.0) || !dto.t_f.is_finite() {
            return Err(serde::de::Error::custom("t_f must be a positive finite number"));
        }
        let mut sig = PolyExpSignal::zero(dto.t_f);
        for term in dto.terms {
            if term.coeffs.len() > MAX_POLY_DEGREE + 1 {
                return Err(serde::de::Error::custom(format!(
                    "polynomial degree exceeds the supported cap of {MAX_POLY_DEGREE}"
                )));
            }
            sig.push_term(Term {
                coeffs: term.coeffs.iter().map(|c| Complex64::new(c[0], c[1])).collect(),
                freq: Complex64::new(term.freq[0], term.freq[1]),
            });
        }
        Ok(sig)
    }
}
