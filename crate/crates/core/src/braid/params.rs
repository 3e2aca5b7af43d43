use std::f64::consts::PI;

use num_complex::Complex64;

/// Parameters of the two-channel Hecke/Temperley-Lieb family.
///
/// `t = e^{2iα}`, so that `λ₁/λ₂ = -t = -e^{2πi/q}` at `α = π/q`, and
/// `δ = 2 cos α`, `τ = t/(1+t)² = 1/δ²`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HeckeParams {
    pub alpha: f64,
    /// Gauge for the eigenvalue on the `E` channel; the overall abelian phase.
    pub lambda2: Complex64,
}

impl HeckeParams {
    /// `α = sign·π/q`; `q = None` means `q = ∞`, `α = 0`.
    pub fn from_q(q: Option<u32>, sign: f64) -> Self {
        let alpha = q.map_or(0.0, |q| sign.signum() * PI / q as f64);
        Self { alpha, lambda2: Complex64::new(1.0, 0.0) }
    }

    pub fn from_alpha(alpha: f64) -> Self {
        Self { alpha, lambda2: Complex64::new(1.0, 0.0) }
    }

    /// Loop value `δ` given directly; `α = arccos(δ/2)`, needs `0 ≤ δ ≤ 2`.
    pub fn from_delta(delta: f64) -> Self {
        Self::from_alpha((delta / 2.0).clamp(-1.0, 1.0).acos())
    }

    pub fn with_gauge(mut self, lambda2: Complex64) -> Self {
        self.lambda2 = lambda2;
        self
    }

    pub fn t(&self) -> Complex64 {
        Complex64::from_polar(1.0, 2.0 * self.alpha)
    }
    pub fn delta(&self) -> f64 {
        2.0 * self.alpha.cos()
    }
    pub fn tau(&self) -> f64 {
        1.0 / (self.delta() * self.delta())
    }
    pub fn lambda1(&self) -> Complex64 {
        -self.t() * self.lambda2
    }

    /// `q = inf{n : n|α| ≥ π}`, `None` for `α = 0`.
    pub fn q(&self) -> Option<u64> {
        cutoff_level(self.alpha)
    }

    /// `λ_ρ = λ₁(1-τ) + λ₂τ`, the statistics parameter of the TL channel.
    pub fn statistics_parameter(&self) -> Complex64 {
        self.lambda1() * (1.0 - self.tau()) + self.lambda2 * self.tau()
    }
}

/// `q = inf{n : n|α| ≥ π}` with a small tolerance so that `α = π/q` gives `q`.
pub fn cutoff_level(alpha: f64) -> Option<u64> {
    let a = alpha.abs();
    if a == 0.0 {
        return None;
    }
    let q = (PI / a - 1e-9).ceil();
    Some(q.max(1.0) as u64)
}

/// Quantum integers `[0..=k_max]` from `[k] = δ[k-1] - [k-2]`, `[0]=0`, `[1]=1`.
pub fn quantum_integers(delta: f64, k_max: usize) -> Vec<f64> {
    let mut v = vec![0.0, 1.0];
    while v.len() <= k_max {
        let k = v.len();
        v.push(delta * v[k - 1] - v[k - 2]);
    }
    v.truncate(k_max + 1);
    v
}

/// Wenzl coefficient `2cosα sin nα / sin(n+1)α = δ[n]/[n+1]`.
pub fn wenzl_coefficient(alpha: f64, n: usize) -> f64 {
    let delta = 2.0 * alpha.cos();
    let qi = quantum_integers(delta, n + 1);
    delta * qi[n] / qi[n + 1]
}

/// `η(k) = sin((k+1)α) / (2 cosα sin kα)`, with its `α → 0` limit.
pub fn eta_closed_form(alpha: f64, k: u64) -> f64 {
    if alpha == 0.0 {
        return (k as f64 + 1.0) / (2.0 * k as f64);
    }
    ((k as f64 + 1.0) * alpha).sin() / (2.0 * alpha.cos() * (k as f64 * alpha).sin())
}

/// One admissible two-channel solution.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StatisticsSolution {
    /// `None` is the `q = ∞` sentinel.
    pub q: Option<u32>,
    pub d: u32,
    pub eta1: f64,
    pub eta2: f64,
    pub lambda_modulus: f64,
    /// `e^{πi(d+1)/q}`, the phase relative to `-λ₂`.
    pub lambda_phase_rel: Complex64,
    pub statistical_dimension: f64,
}

impl StatisticsSolution {
    pub fn finite(q: u32, d: u32) -> Self {
        let alpha = PI / q as f64;
        let eta1 = eta_closed_form(alpha, d as u64);
        let eta2 = eta_closed_form(alpha, (q - d) as u64);
        let lambda_modulus = alpha.sin() / (d as f64 * alpha).sin();
        Self {
            q: Some(q),
            d,
            eta1,
            eta2,
            lambda_modulus,
            lambda_phase_rel: Complex64::from_polar(1.0, PI * (d as f64 + 1.0) / q as f64),
            statistical_dimension: 1.0 / lambda_modulus,
        }
    }

    /// `q = ∞`: permutation-group statistics with `η = ½(1 ± 1/d)`, `|λ| = 1/d`.
    pub fn infinite(d: u32) -> Self {
        let d_f = d as f64;
        Self {
            q: None,
            d,
            eta1: 0.5 * (1.0 + 1.0 / d_f),
            eta2: 0.5 * (1.0 - 1.0 / d_f),
            lambda_modulus: 1.0 / d_f,
            lambda_phase_rel: Complex64::new(1.0, 0.0),
            statistical_dimension: d_f,
        }
    }
}

/// All `(q, d)` with `4 ≤ q ≤ q_max`, `2 ≤ d ≤ q-2`, followed by `q = ∞`
/// entries for `2 ≤ d ≤ q_max - 2`.
pub fn enumerate_statistics(q_max: u32) -> Vec<StatisticsSolution> {
    let mut out = Vec::new();
    for q in 4..=q_max {
        for d in 2..=q - 2 {
            out.push(StatisticsSolution::finite(q, d));
        }
    }
    for d in 2..=q_max.saturating_sub(2).max(2) {
        out.push(StatisticsSolution::infinite(d));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_is_one_over_delta_squared() {
        for q in 4..12 {
            let p = HeckeParams::from_q(Some(q), 1.0);
            let t = p.t();
            let tau = t / ((1.0 + t) * (1.0 + t));
            assert!((tau - p.tau()).norm() < 1e-12);
            assert_eq!(p.q(), Some(q as u64));
        }
        assert_eq!(HeckeParams::from_q(None, 1.0).q(), None);
    }

    #[test]
    fn statistics_parameter_is_d_equals_two() {
        for q in 4..12u32 {
            let p = HeckeParams::from_q(Some(q), 1.0);
            let s = StatisticsSolution::finite(q, 2);
            let expected = -p.lambda2 * s.lambda_phase_rel * s.lambda_modulus;
            assert!((p.statistics_parameter() - expected).norm() < 1e-12, "q={q}");
        }
    }

    #[test]
    fn table_entries() {
        let s = StatisticsSolution::finite(4, 2);
        assert!((s.lambda_modulus - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        let s = StatisticsSolution::finite(5, 2);
        assert!((s.eta1 - 0.61803).abs() < 1e-5 && (s.eta2 - 0.38197).abs() < 1e-5);
        assert!((s.eta1 + s.eta2 - 1.0).abs() < 1e-12);
        assert!((StatisticsSolution::infinite(3).lambda_modulus - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn wenzl_coefficient_limits() {
        assert!((wenzl_coefficient(0.0, 3) - 1.5).abs() < 1e-15);
        let a: f64 = 0.3;
        let direct = 2.0 * a.cos() * (2.0 * a).sin() / (3.0 * a).sin();
        assert!((wenzl_coefficient(a, 2) - direct).abs() < 1e-12);
    }
}
