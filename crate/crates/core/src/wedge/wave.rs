use std::f64::consts::PI;

use num_complex::Complex64;

use super::{RapidityGrid, WedgeError};

/// Which Rindler wedge a test function lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Wedge {
    /// `x > |t|`
    Right,
    /// `x < -|t|`
    Left,
}

impl Wedge {
    fn contains(self, x: f64, t: f64) -> bool {
        match self {
            Wedge::Right => x > t.abs(),
            Wedge::Left => -x > t.abs(),
        }
    }
}

/// Real Gaussian bump `a·exp(-((x-x0)² + (t-t0)²) / 2w²)`, truncated to a wedge.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GaussianBump {
    pub x0: f64,
    pub t0: f64,
    pub width: f64,
    pub amplitude: f64,
}

impl GaussianBump {
    pub fn new(x0: f64, t0: f64, width: f64) -> Self {
        Self { x0, t0, width, amplitude: 1.0 }
    }

    pub fn zero() -> Self {
        Self { x0: 2.0, t0: 0.0, width: 0.3, amplitude: 0.0 }
    }

    /// The bump under `(x, t) -> (-x, -t)`.
    pub fn reflected(&self) -> Self {
        Self { x0: -self.x0, t0: -self.t0, ..*self }
    }

    pub fn value(&self, x: f64, t: f64) -> f64 {
        let r2 = (x - self.x0).powi(2) + (t - self.t0).powi(2);
        self.amplitude * (-r2 / (2.0 * self.width * self.width)).exp()
    }

    /// Untruncated transform `∫ f e^{-ip(θ)·x}` in closed form, valid for real θ.
    pub fn transform_untruncated(&self, theta: f64, mass: f64) -> Complex64 {
        let w2 = self.width * self.width;
        let phase = -mass * (self.t0 * theta.cosh() - self.x0 * theta.sinh());
        let envelope = 2.0 * PI * w2 * self.amplitude * (-w2 * mass * mass * (2.0 * theta).cosh() / 2.0).exp();
        Complex64::from_polar(envelope, phase)
    }
}

/// Spacetime quadrature used to build analytic waves.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpacetimeQuadrature {
    pub step: f64,
    /// Half-width of the sampling box in units of the bump width.
    pub extent: f64,
    /// Largest tolerated L¹ fraction of the bump lying outside its wedge.
    pub support_tol: f64,
}

impl Default for SpacetimeQuadrature {
    fn default() -> Self {
        Self { step: 0.02, extent: 7.0, support_tol: 1e-5 }
    }
}

/// One-particle wave given by its values on a rapidity grid.
#[derive(Clone, Debug, PartialEq)]
pub struct OneParticleWave {
    pub values: Vec<Complex64>,
}

impl OneParticleWave {
    pub fn new(values: Vec<Complex64>) -> Self {
        Self { values }
    }

    /// `(φ, ψ) = Σ w_k conj(φ_k) ψ_k`
    pub fn inner(&self, other: &Self, grid: &RapidityGrid) -> Complex64 {
        self.values
            .iter()
            .zip(&other.values)
            .enumerate()
            .map(|(k, (a, b))| a.conj() * b * grid.weight(k))
            .sum()
    }

    pub fn norm(&self, grid: &RapidityGrid) -> f64 {
        self.inner(self, grid).re.max(0.0).sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.values.iter().zip(&other.values).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

/// Pre-modular operators of the wedge.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PremodularOp {
    J,
    /// `δ^{it}`; complex `t` gives analytic continuation, e.g. `t = -i/2` is `δ^{1/2}`.
    Delta(Complex64),
    S,
}

/// Analytic wave stored through its spacetime samples:
/// `φ(θ) = Σ c_ij exp(-iσ m (t_j cosh(θ+o) - x_i sinh(θ+o)))`.
///
/// j, δ(t) and s act exactly on `(c, σ, o)`, so continuation into the strip
/// is evaluated directly from the integral representation.
#[derive(Clone, Debug, PartialEq)]
pub struct AnalyticWave {
    xs: Vec<f64>,
    ts: Vec<f64>,
    coeff: Vec<Complex64>,
    sigma: f64,
    offset: Complex64,
    mass: f64,
}

impl AnalyticWave {
    /// Transform of a bump truncated to `wedge`, sampled by `quad`.
    pub fn from_bump(
        f: &GaussianBump,
        wedge: Wedge,
        mass: f64,
        quad: &SpacetimeQuadrature,
    ) -> Result<Self, WedgeError> {
        let half = quad.extent * f.width;
        let n = (2.0 * half / quad.step).ceil() as usize + 1;
        let node = |c: f64, i: usize| c - half + i as f64 * quad.step;
        let xs: Vec<f64> = (0..n).map(|i| node(f.x0, i)).collect();
        let ts: Vec<f64> = (0..n).map(|j| node(f.t0, j)).collect();
        let cell = quad.step * quad.step;
        let mut coeff = vec![Complex64::new(0.0, 0.0); n * n];
        let (mut inside, mut outside) = (0.0, 0.0);
        for (i, &x) in xs.iter().enumerate() {
            for (j, &t) in ts.iter().enumerate() {
                let v = f.value(x, t);
                if wedge.contains(x, t) {
                    inside += v.abs();
                    coeff[i * n + j] = Complex64::new(v * cell, 0.0);
                } else {
                    outside += v.abs();
                }
            }
        }
        if outside > quad.support_tol * (inside + outside) {
            return Err(WedgeError::SupportViolation { fraction: outside / (inside + outside) });
        }
        Ok(Self { xs, ts, coeff, sigma: 1.0, offset: Complex64::new(0.0, 0.0), mass })
    }

    pub fn eval(&self, theta: Complex64) -> Complex64 {
        let z = theta + self.offset;
        let ph = Complex64::new(0.0, -self.sigma * self.mass);
        let (ch, sh) = (z.cosh(), z.sinh());
        let a: Vec<Complex64> = self.ts.iter().map(|t| (ph * ch * *t).exp()).collect();
        let n = self.ts.len();
        self.xs
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let row = &self.coeff[i * n..(i + 1) * n];
                let s: Complex64 = row.iter().zip(&a).filter(|(c, _)| c.re != 0.0 || c.im != 0.0).map(|(c, e)| c * e).sum();
                s * (-ph * sh * *x).exp()
            })
            .sum()
    }

    pub fn on_grid(&self, grid: &RapidityGrid) -> OneParticleWave {
        self.on_grid_shifted(grid, Complex64::new(0.0, 0.0))
    }

    /// Values at `θ_k + shift`.
    pub fn on_grid_shifted(&self, grid: &RapidityGrid, shift: Complex64) -> OneParticleWave {
        OneParticleWave::new(grid.thetas().into_iter().map(|t| self.eval(Complex64::new(t, 0.0) + shift)).collect())
    }

    pub fn apply(&self, op: PremodularOp) -> Self {
        match op {
            PremodularOp::J => Self {
                coeff: self.coeff.iter().map(|c| c.conj()).collect(),
                sigma: -self.sigma,
                offset: self.offset.conj(),
                ..self.clone()
            },
            PremodularOp::Delta(t) => Self { offset: self.offset - t * (2.0 * PI), ..self.clone() },
            PremodularOp::S => self.apply(PremodularOp::Delta(Complex64::new(0.0, -0.5))).apply(PremodularOp::J),
        }
    }
}

/// Transform of a right-wedge bump on the grid.
pub fn wedge_wave(
    f: &GaussianBump,
    grid: &RapidityGrid,
    quad: &SpacetimeQuadrature,
) -> Result<(AnalyticWave, OneParticleWave), WedgeError> {
    let w = AnalyticWave::from_bump(f, Wedge::Right, grid.mass, quad)?;
    let v = w.on_grid(grid);
    Ok((w, v))
}

/// `max_k |conj φ(θ_k + iπ) - φ(θ_k)| / max |φ|`, by direct evaluation in the complex plane.
pub fn s_invariance_residual(w: &AnalyticWave, grid: &RapidityGrid) -> f64 {
    let on = w.on_grid(grid);
    let up = w.on_grid_shifted(grid, Complex64::new(0.0, PI));
    let scale = on.max_abs();
    if scale == 0.0 {
        return 0.0;
    }
    on.values.iter().zip(&up.values).map(|(a, b)| (b.conj() - a).norm()).fold(0.0, f64::max) / scale
}

/// Premodular operators on plain grid values: j by conjugation, real δ(t) by interpolation.
pub fn premodular_apply(
    op: PremodularOp,
    wave: &OneParticleWave,
    grid: &RapidityGrid,
) -> Result<OneParticleWave, WedgeError> {
    match op {
        PremodularOp::J => Ok(OneParticleWave::new(wave.values.iter().map(|v| v.conj()).collect())),
        PremodularOp::Delta(t) if t.im == 0.0 => shift_by_interpolation(wave, grid, -2.0 * PI * t.re),
        _ => Err(WedgeError::NeedsAnalyticWave),
    }
}

const EDGE_TOL: f64 = 1e-12;

fn shift_by_interpolation(wave: &OneParticleWave, grid: &RapidityGrid, shift: f64) -> Result<OneParticleWave, WedgeError> {
    let h = grid.step();
    let n = grid.points;
    let edge = wave.values[0].norm().max(wave.values[n - 1].norm());
    let negligible = edge <= EDGE_TOL * wave.max_abs().max(f64::MIN_POSITIVE);
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let s = k as f64 + shift / h;
        if s < -1e-9 || s > (n - 1) as f64 + 1e-9 {
            if !negligible {
                return Err(WedgeError::InterpolationOutOfRange);
            }
            out.push(Complex64::new(0.0, 0.0));
            continue;
        }
        let s = s.clamp(0.0, (n - 1) as f64);
        let i = (s.floor() as usize).min(n - 2);
        let u = s - i as f64;
        out.push(wave.values[i] * (1.0 - u) + wave.values[i + 1] * u);
    }
    Ok(OneParticleWave::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> RapidityGrid {
        RapidityGrid::default()
    }

    #[test]
    fn matches_closed_form_away_from_edges() {
        let g = grid();
        let f = GaussianBump::new(2.0, 0.0, 0.3);
        let (_, v) = wedge_wave(&f, &g, &SpacetimeQuadrature::default()).unwrap();
        let scale = v.max_abs();
        for (k, th) in g.thetas().into_iter().enumerate() {
            let d = (v.values[k] - f.transform_untruncated(th, g.mass)).norm();
            assert!(d < 1e-4 * scale, "θ={th} d={d}");
        }
    }

    #[test]
    fn s_fixes_real_wedge_waves() {
        let g = grid();
        let (w, v) = wedge_wave(&GaussianBump::new(2.4, 0.3, 0.3), &g, &SpacetimeQuadrature::default()).unwrap();
        assert!(s_invariance_residual(&w, &g) < 1e-10);
        let sv = w.apply(PremodularOp::S).on_grid(&g);
        assert!(sv.max_abs_diff(&v) < 1e-10 * v.max_abs());
        let ssv = w.apply(PremodularOp::S).apply(PremodularOp::S).on_grid(&g);
        assert!(ssv.max_abs_diff(&v) < 1e-10 * v.max_abs());
    }

    #[test]
    fn j_inverts_delta_powers() {
        let g = RapidityGrid::new(6.0, 121, 1.0);
        let (w, _) = wedge_wave(&GaussianBump::new(2.5, -0.2, 0.3), &g, &SpacetimeQuadrature::default()).unwrap();
        let t = Complex64::new(0.0, -0.2);
        let lhs = w.apply(PremodularOp::J).apply(PremodularOp::Delta(t)).apply(PremodularOp::J).on_grid(&g);
        let rhs = w.apply(PremodularOp::Delta(-t)).on_grid(&g);
        assert!(lhs.max_abs_diff(&rhs) < 1e-12 * rhs.max_abs());
    }

    #[test]
    fn support_violation() {
        let r = AnalyticWave::from_bump(&GaussianBump::new(0.2, 0.0, 0.3), Wedge::Right, 1.0, &SpacetimeQuadrature::default());
        assert!(matches!(r, Err(WedgeError::SupportViolation { .. })));
    }

    #[test]
    fn grid_delta() {
        let g = grid();
        let v = OneParticleWave::new(g.thetas().iter().map(|t| Complex64::new((-t * t).exp(), t.sin())).collect());
        assert_eq!(premodular_apply(PremodularOp::Delta(Complex64::new(0.0, 0.0)), &v, &g).unwrap(), v);
        assert!(matches!(
            premodular_apply(PremodularOp::Delta(Complex64::new(0.1, 0.0)), &v, &g),
            Err(WedgeError::InterpolationOutOfRange)
        ));
        let b = OneParticleWave::new(g.thetas().iter().map(|t| Complex64::new((-t * t).exp(), 0.0)).collect());
        // a shift by exactly 8 grid steps is exact
        let t = 8.0 * g.step() / (2.0 * PI);
        let s = premodular_apply(PremodularOp::Delta(Complex64::new(t, 0.0)), &b, &g).unwrap();
        assert!((s.values[300] - b.values[292]).norm() < 1e-14);
    }
}
