use std::f64::consts::PI;

use num_complex::Complex64;

use super::{AnalyticWave, GaussianBump, RapidityGrid, SMatrixModel, SpacetimeQuadrature, Wedge, WedgeError};

/// Boundary values `f⁺(θ) = f̂(θ)` and `f⁻(θ) = f̂(θ + iπ)`, the latter evaluated in the complex plane.
struct Sides {
    plus: Vec<Complex64>,
    minus: Vec<Complex64>,
}

impl Sides {
    fn new(w: &AnalyticWave, grid: &RapidityGrid) -> Self {
        Self {
            plus: w.on_grid(grid).values,
            minus: w.on_grid_shifted(grid, Complex64::new(0.0, PI)).values,
        }
    }
}

/// Two-point pairing `⟨F(g)F(h)⟩ = ∫ g⁻ h⁺ dθ`.
fn pair(g: &Sides, h: &Sides, w: &[f64]) -> Complex64 {
    g.minus.iter().zip(&h.plus).zip(w).map(|((a, b), w)| a * b * *w).sum()
}

#[derive(Clone, Debug, PartialEq)]
pub struct KmsReport {
    /// `⟨F(f₁′)F(f₂′)F(f₂)F(f₁)⟩` from the ZF algebra on the real line.
    pub lhs: Complex64,
    /// The same expectation after the KMS cycle, with `F(f₁′)` boosted by `-2πi`.
    pub rhs: Complex64,
    pub residual: f64,
}

/// Four bumps `[f₁, f₂, f₁′, f₂′]` in the right wedge.
///
/// The right side is `⟨Δ^{1/2}A*Ω, Δ^{1/2}F(f₁′)Ω⟩` with `A = F(f₂′)F(f₂)F(f₁)`;
/// the one-particle part of `A*Ω` is continued to `θ + iπ` directly, which puts
/// `S` at `θ - θ' + iπ`. The two sides agree exactly when `S(θ) = S(iπ - θ)`.
pub fn kms_fourpoint_check(
    model: &SMatrixModel,
    bumps: &[GaussianBump; 4],
    lhs_grid: &RapidityGrid,
    rhs_grid: &RapidityGrid,
    quad: &SpacetimeQuadrature,
) -> Result<KmsReport, WedgeError> {
    model.ensure_pole_free()?;
    let lhs = kms_lhs(model, bumps, lhs_grid, quad)?;
    let rhs = kms_rhs(model, bumps, rhs_grid, quad)?;
    let residual = (lhs - rhs).norm() / lhs.norm().max(f64::MIN_POSITIVE);
    Ok(KmsReport { lhs, rhs, residual })
}

fn sides(bumps: &[GaussianBump; 4], grid: &RapidityGrid, quad: &SpacetimeQuadrature) -> Result<Vec<Sides>, WedgeError> {
    bumps
        .iter()
        .map(|b| AnalyticWave::from_bump(b, Wedge::Right, grid.mass, quad).map(|w| Sides::new(&w, grid)))
        .collect()
}

fn kms_lhs(
    model: &SMatrixModel,
    bumps: &[GaussianBump; 4],
    grid: &RapidityGrid,
    quad: &SpacetimeQuadrature,
) -> Result<Complex64, WedgeError> {
    let s = sides(bumps, grid, quad)?;
    let (f1, f2, f1p, f2p) = (&s[0], &s[1], &s[2], &s[3]);
    let w = grid.weights();
    let th = grid.thetas();
    let u: Vec<Complex64> = (0..grid.points).map(|k| f1p.minus[k] * f2.plus[k] * w[k]).collect();
    let v: Vec<Complex64> = (0..grid.points).map(|k| f2p.minus[k] * f1.plus[k] * w[k]).collect();
    let mut inter = Complex64::new(0.0, 0.0);
    for (i, ui) in u.iter().enumerate() {
        let row: Complex64 = v.iter().enumerate().map(|(j, vj)| vj * model.at(th[i] - th[j])).sum();
        inter += ui * row;
    }
    Ok(pair(f1p, f2p, &w) * pair(f2, f1, &w) + pair(f1p, f1, &w) * pair(f2p, f2, &w) + inter)
}

fn kms_rhs(
    model: &SMatrixModel,
    bumps: &[GaussianBump; 4],
    grid: &RapidityGrid,
    quad: &SpacetimeQuadrature,
) -> Result<Complex64, WedgeError> {
    let s = sides(bumps, grid, quad)?;
    let (f1, f2, f1p, f2p) = (&s[0], &s[1], &s[2], &s[3]);
    let w = grid.weights();
    let th = grid.thetas();
    let (c22, c12) = (pair(f2, f2p, &w), pair(f1, f2, &w));
    let g: Vec<Complex64> = (0..grid.points).map(|a| f1.minus[a] * f2p.plus[a] * w[a]).collect();
    let mut total = Complex64::new(0.0, 0.0);
    for k in 0..grid.points {
        let conv: Complex64 =
            g.iter().enumerate().map(|(a, ga)| ga * model.eval(Complex64::new(th[k] - th[a], PI))).sum();
        let cont = f1.minus[k] * c22 + f2p.minus[k] * c12 + f2.minus[k] * conv;
        total += cont.conj() * f1p.minus[k] * w[k];
    }
    Ok(total)
}

/// Bumps used by the default checks.
pub fn default_bumps() -> [GaussianBump; 4] {
    [
        GaussianBump::new(2.0, 0.0, 0.3),
        GaussianBump::new(2.4, 0.5, 0.3),
        GaussianBump::new(2.2, -0.3, 0.3),
        GaussianBump::new(2.6, 0.2, 0.3),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(m: &SMatrixModel) -> KmsReport {
        let g = RapidityGrid::new(6.0, 241, 1.0);
        kms_fourpoint_check(m, &default_bumps(), &g, &g, &SpacetimeQuadrature::default()).unwrap()
    }

    #[test]
    fn crossing_symmetric_models_pass() {
        for m in [SMatrixModel::Free, SMatrixModel::Ising, SMatrixModel::SinhGordon { b: 0.4 }] {
            let r = run(&m);
            assert!(r.residual < 1e-8, "{m:?}: {r:?}");
        }
    }

    #[test]
    fn broken_crossing_fails() {
        let m = SMatrixModel::Deformed { base: Box::new(SMatrixModel::SinhGordon { b: 0.4 }), epsilon: 0.1 };
        let r = run(&m);
        assert!(r.residual > 1e-2, "{r:?}");
    }

    #[test]
    fn pole_rejected() {
        let g = RapidityGrid::new(6.0, 21, 1.0);
        let r = kms_fourpoint_check(&SMatrixModel::SinhGordon { b: 2.5 }, &default_bumps(), &g, &g, &SpacetimeQuadrature::default());
        assert!(matches!(r, Err(WedgeError::PoleInStrip)));
    }
}
