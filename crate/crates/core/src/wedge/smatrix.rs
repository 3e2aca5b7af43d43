use std::f64::consts::PI;

use num_complex::Complex64;

use super::{RapidityGrid, WedgeError};

/// Two-particle scattering functions of factorizing models.
#[derive(Clone, Debug, PartialEq)]
pub enum SMatrixModel {
    Free,
    Ising,
    /// `S(θ) = (sinh θ - i sin(πb/2)) / (sinh θ + i sin(πb/2))`.
    SinhGordon { b: f64 },
    /// `S_base(θ)·e^{εθ}`: analytic and pole-free but not crossing symmetric.
    Deformed { base: Box<SMatrixModel>, epsilon: f64 },
}

impl SMatrixModel {
    pub fn eval(&self, z: Complex64) -> Complex64 {
        match self {
            Self::Free => Complex64::new(1.0, 0.0),
            Self::Ising => Complex64::new(-1.0, 0.0),
            Self::SinhGordon { b } => {
                let a = Complex64::new(0.0, (PI * b / 2.0).sin());
                let s = z.sinh();
                (s - a) / (s + a)
            }
            Self::Deformed { base, epsilon } => base.eval(z) * (z * *epsilon).exp(),
        }
    }

    pub fn at(&self, theta: f64) -> Complex64 {
        self.eval(Complex64::new(theta, 0.0))
    }

    /// `S(0)`, which is always `±1` for the shipped models.
    pub fn at_zero_sign(&self) -> f64 {
        if self.at(0.0).re < 0.0 {
            -1.0
        } else {
            1.0
        }
    }

    /// Rejects models with a pole in `0 < Im θ < π`.
    pub fn ensure_pole_free(&self) -> Result<(), WedgeError> {
        match self {
            Self::SinhGordon { b } if !(0.0..=2.0).contains(b) => Err(WedgeError::PoleInStrip),
            Self::Deformed { base, .. } => base.ensure_pole_free(),
            _ => Ok(()),
        }
    }
}

/// `max_θ |S(θ) - S(iπ - θ)|` over the grid.
pub fn crossing_check(model: &SMatrixModel, grid: &RapidityGrid) -> Result<f64, WedgeError> {
    model.ensure_pole_free()?;
    Ok(grid
        .thetas()
        .into_iter()
        .map(|t| (model.at(t) - model.eval(Complex64::new(-t, PI))).norm())
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unitarity_and_zero_value() {
        let m = SMatrixModel::SinhGordon { b: 0.4 };
        for t in [-3.0, -0.2, 0.0, 0.7, 4.0] {
            assert!((m.at(t).norm() - 1.0).abs() < 1e-14);
            assert!((m.at(t).conj() - m.at(-t)).norm() < 1e-14);
        }
        assert_eq!(m.at_zero_sign(), -1.0);
        assert_eq!(SMatrixModel::Free.at_zero_sign(), 1.0);
    }

    #[test]
    fn crossing() {
        let g = RapidityGrid::default();
        assert_eq!(crossing_check(&SMatrixModel::Free, &g).unwrap(), 0.0);
        assert_eq!(crossing_check(&SMatrixModel::Ising, &g).unwrap(), 0.0);
        assert!(crossing_check(&SMatrixModel::SinhGordon { b: 0.4 }, &g).unwrap() < 1e-12);
        let bad = SMatrixModel::Deformed { base: Box::new(SMatrixModel::SinhGordon { b: 0.4 }), epsilon: 0.1 };
        assert!(crossing_check(&bad, &g).unwrap() > 1e-2);
        assert!(matches!(
            crossing_check(&SMatrixModel::SinhGordon { b: -0.5 }, &g),
            Err(WedgeError::PoleInStrip)
        ));
    }
}
