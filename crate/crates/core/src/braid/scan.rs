use super::params::{cutoff_level, eta_closed_form};
use std::f64::consts::PI;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScanConfig {
    /// Levels checked when `α = 0`. For `α ≠ 0` the check always runs up
    /// to the cutoff level `q(α) - 1`.
    pub n_max: usize,
    /// A factor this close to zero cuts the channel off.
    pub cut_tol: f64,
    /// A live factor below `-neg_tol` violates positivity.
    pub neg_tol: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self { n_max: 100, cut_tol: 1e-8, neg_tol: 1e-12 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChannelFate {
    /// Still nonzero after the last checked level.
    Alive,
    /// `E^{(level)}` vanishes.
    Cut { level: usize },
    /// Positivity or the cutoff condition fails at `E^{(level)}`.
    Failed { level: usize },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PointOutcome {
    pub alpha: f64,
    pub eta1: f64,
    pub survived: bool,
    /// Highest level examined.
    pub survived_n: usize,
    pub channels: [ChannelFate; 2],
}

fn coefficient(alpha: f64, n: usize) -> f64 {
    let nf = n as f64;
    if alpha == 0.0 {
        2.0 * nf / (nf + 1.0)
    } else {
        2.0 * alpha.cos() * (nf * alpha).sin() / ((nf + 1.0) * alpha).sin()
    }
}

fn channel(alpha: f64, eta_other: f64, cfg: &ScanConfig) -> (ChannelFate, usize) {
    let q = cutoff_level(alpha);
    // E^{(q-1)} must vanish, so factors up to n = q - 2 are examined.
    let last = q.map_or(cfg.n_max, |q| q.saturating_sub(2) as usize);
    for n in 1..=last {
        let f = 1.0 - coefficient(alpha, n) * eta_other;
        if f.abs() <= cfg.cut_tol {
            return (ChannelFate::Cut { level: n + 1 }, n);
        }
        if f < -cfg.neg_tol {
            return (ChannelFate::Failed { level: n + 1 }, n);
        }
    }
    match q {
        Some(q) => (ChannelFate::Failed { level: (q as usize).saturating_sub(1) }, last),
        None => (ChannelFate::Alive, last),
    }
}

/// Positivity of `φ(E_i^{(n+1)}) = φ(E_i^{(n)}) (1 - c_n η_j)` for both
/// channels, `η₂ = 1 - η₁`.
///
/// Factors are tested one by one rather than their running products, which
/// shrink geometrically and would hide sign information behind any absolute
/// threshold.
pub fn scan_point(alpha: f64, eta1: f64, cfg: &ScanConfig) -> PointOutcome {
    let (c1, n1) = channel(alpha, 1.0 - eta1, cfg);
    let (c2, n2) = channel(alpha, eta1, cfg);
    let ok = |c: ChannelFate| !matches!(c, ChannelFate::Failed { .. });
    PointOutcome { alpha, eta1, survived: ok(c1) && ok(c2), survived_n: n1.max(n2), channels: [c1, c2] }
}

/// Nearest closed-form solution to a surviving grid point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NearestSolution {
    /// `None` for `q = ∞`.
    pub q: Option<u32>,
    pub k: u64,
    pub alpha: f64,
    pub eta: f64,
    pub alpha_distance: f64,
    pub eta_distance: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Survivor {
    pub alpha: f64,
    pub eta1: f64,
    pub survived_n: usize,
    pub nearest: NearestSolution,
}

/// Closest `(α, η)` among `α ∈ {0} ∪ {π/q : 4 ≤ q ≤ q_max}` and the
/// admissible `η` at that `α`.
pub fn nearest_solution(alpha: f64, eta1: f64, q_max: u32) -> NearestSolution {
    let mut targets = vec![(None, 0.0)];
    targets.extend((4..=q_max).map(|q| (Some(q), PI / q as f64)));
    let (q, a) = targets
        .into_iter()
        .min_by(|x, y| (x.1 - alpha.abs()).abs().total_cmp(&(y.1 - alpha.abs()).abs()))
        .unwrap();
    let (k, eta) = match q {
        Some(q) => (2..=(q - 2) as u64)
            .map(|k| (k, eta_closed_form(a, k)))
            .min_by(|x, y| (x.1 - eta1).abs().total_cmp(&(y.1 - eta1).abs()))
            .unwrap(),
        None => {
            // ½(1 ± 1/k); k = ∞ is represented by a large k
            let dev = (2.0 * eta1 - 1.0).abs();
            let k = if dev < 1e-15 { u64::MAX } else { (1.0 / dev).round().max(1.0) as u64 };
            let e = 0.5 * (1.0 + (2.0 * eta1 - 1.0).signum() / k as f64);
            (k, e)
        }
    };
    NearestSolution { q, k, alpha: a, eta, alpha_distance: (alpha.abs() - a).abs(), eta_distance: (eta1 - eta).abs() }
}

/// Evenly spaced values `start + i·step` up to `stop` (inclusive, within a
/// tenth of a step).
pub fn grid(start: f64, stop: f64, step: f64) -> Vec<f64> {
    let count = ((stop - start) / step + 0.1).floor() as usize + 1;
    (0..count).map(|i| start + i as f64 * step).collect()
}

/// Keep `(α, η₁)` pairs passing [`scan_point`], annotated with the nearest
/// closed-form solution.
pub fn positivity_scan(alphas: &[f64], etas: &[f64], cfg: &ScanConfig, q_max: u32) -> Vec<Survivor> {
    let mut out = Vec::new();
    for &alpha in alphas {
        for &eta1 in etas {
            let p = scan_point(alpha, eta1, cfg);
            if p.survived {
                out.push(Survivor { alpha, eta1, survived_n: p.survived_n, nearest: nearest_solution(alpha, eta1, q_max) });
            }
        }
    }
    out
}
