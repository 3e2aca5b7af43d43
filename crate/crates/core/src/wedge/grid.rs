/// Symmetric rapidity grid `[-θ_max, θ_max]` with trapezoid weights.
#[derive(Clone, Debug, PartialEq)]
pub struct RapidityGrid {
    pub theta_max: f64,
    pub points: usize,
    pub mass: f64,
}

impl Default for RapidityGrid {
    fn default() -> Self {
        Self { theta_max: 6.0, points: 481, mass: 1.0 }
    }
}

impl RapidityGrid {
    pub fn new(theta_max: f64, points: usize, mass: f64) -> Self {
        assert!(points >= 2 && theta_max > 0.0 && mass > 0.0, "degenerate rapidity grid");
        Self { theta_max, points, mass }
    }

    pub fn step(&self) -> f64 {
        2.0 * self.theta_max / (self.points - 1) as f64
    }

    pub fn theta(&self, k: usize) -> f64 {
        -self.theta_max + k as f64 * self.step()
    }

    pub fn thetas(&self) -> Vec<f64> {
        (0..self.points).map(|k| self.theta(k)).collect()
    }

    pub fn weight(&self, k: usize) -> f64 {
        if k == 0 || k + 1 == self.points {
            0.5 * self.step()
        } else {
            self.step()
        }
    }

    pub fn weights(&self) -> Vec<f64> {
        (0..self.points).map(|k| self.weight(k)).collect()
    }
}
