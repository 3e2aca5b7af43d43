//! Modular data `(S, T)` of a rational sector theory and the checks it must pass.
//!
//! `T = κ⁻¹ diag(κ_ρ)` where `κ³ = p₊/|p₊|` and `p₊ = Σ_ρ κ_ρ d_ρ²`. With this
//! normalization `(ST)³ = C`.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use thiserror::Error;

use crate::linalg::{c, max_abs_diff, near_int, unitarity_residual, CMatrix};

const PHASE_TOL: f64 = 1e-9;
const INTEGER_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModularError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("kappa[{index}] has modulus {modulus}, expected 1")]
    NotUnitModulus { index: usize, modulus: f64 },
    #[error("vacuum row entry S[0][{index}] = {value} is not strictly positive")]
    NonPositiveVacuumRow { index: usize, value: Complex64 },
    #[error("no conjugate sector found for sector {0}")]
    NoConjugate(usize),
    #[error("Verlinde coefficient ({a},{b},{c}) = {value} is not a nonnegative integer")]
    NonIntegralFusion { a: usize, b: usize, c: usize, value: Complex64 },
    #[error("S[0][{0}] vanishes")]
    SingularVacuumRow(usize),
    #[error("Gauss sum vanishes; the data is degenerate")]
    DegenerateData,
}

#[derive(Clone, Debug)]
pub struct ModularData {
    pub labels: Vec<String>,
    pub s: CMatrix,
    /// Unnormalized twists `κ_ρ`, all of unit modulus.
    pub kappa: Vec<Complex64>,
}

impl ModularData {
    pub fn new(labels: Vec<String>, s: CMatrix, kappa: Vec<Complex64>) -> Result<Self, ModularError> {
        let n = labels.len();
        if s.shape() != (n, n) || kappa.len() != n || n == 0 {
            return Err(ModularError::ShapeMismatch(format!(
                "{n} labels, S is {:?}, {} twists",
                s.shape(),
                kappa.len()
            )));
        }
        for (index, k) in kappa.iter().enumerate() {
            if (k.norm() - 1.0).abs() > PHASE_TOL {
                return Err(ModularError::NotUnitModulus { index, modulus: k.norm() });
            }
        }
        for index in 0..n {
            let value = s[(0, index)];
            if value.re <= 0.0 || value.im.abs() > PHASE_TOL {
                if value.norm() < 1e-14 {
                    return Err(ModularError::SingularVacuumRow(index));
                }
                return Err(ModularError::NonPositiveVacuumRow { index, value });
            }
        }
        Ok(Self { labels, s, kappa })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    /// `d_ρ = S_{0ρ} / S_{00}`.
    pub fn qdims(&self) -> Vec<f64> {
        (0..self.rank()).map(|r| (self.s[(0, r)] / self.s[(0, 0)]).re).collect()
    }

    /// `p₊ = Σ_ρ κ_ρ d_ρ²`.
    pub fn gauss_sum(&self) -> Complex64 {
        self.qdims().iter().zip(&self.kappa).map(|(d, k)| k * d * d).sum()
    }

    /// Global phase `κ`: the cube root of `p₊/|p₊|` nearest to `arg(p₊)/3`.
    pub fn kappa_global(&self) -> Result<Complex64, ModularError> {
        let p = self.gauss_sum();
        if p.norm() < 1e-12 {
            return Err(ModularError::DegenerateData);
        }
        Ok(Complex64::from_polar(1.0, p.arg() / 3.0))
    }

    pub fn t_matrix(&self) -> Result<CMatrix, ModularError> {
        let k = self.kappa_global()?;
        let n = self.rank();
        Ok(CMatrix::from_fn(n, n, |a, b| if a == b { self.kappa[a] / k } else { c(0.0, 0.0) }))
    }

    /// Charge conjugation as a permutation, read off from `S_{ρ̄ j} = S_{ρ j}^*`.
    pub fn conjugation(&self) -> Result<Vec<usize>, ModularError> {
        let n = self.rank();
        (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| (0..n).all(|j| (self.s[(b, j)] - self.s[(a, j)].conj()).norm() < 1e-8))
                    .ok_or(ModularError::NoConjugate(a))
            })
            .collect()
    }

    pub fn conjugation_matrix(&self) -> Result<CMatrix, ModularError> {
        let perm = self.conjugation()?;
        let n = self.rank();
        Ok(CMatrix::from_fn(n, n, |a, b| c(if perm[a] == b { 1.0 } else { 0.0 }, 0.0)))
    }
}

/// `N_{ab}^c` stored as a flat `n³` array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionOutput {
    n: usize,
    data: Vec<u64>,
}

impl FusionOutput {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize, usize) -> u64) -> Self {
        let mut data = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    data.push(f(a, b, c));
                }
            }
        }
        Self { n, data }
    }
    pub fn rank(&self) -> usize {
        self.n
    }
    pub fn get(&self, a: usize, b: usize, c: usize) -> u64 {
        self.data[(a * self.n + b) * self.n + c]
    }
    /// `(N_a)_{b c} = N_{ab}^c`.
    pub fn matrix(&self, a: usize) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |b, c| self.get(a, b, c) as f64)
    }
}

/// `N_{ρσ}^μ = Σ_j S_{ρj} S_{σj} S_{μj}^* / S_{0j}`.
pub fn verlinde_fusion(md: &ModularData) -> Result<FusionOutput, ModularError> {
    let n = md.rank();
    let s = &md.s;
    let mut data = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                let value: Complex64 = (0..n).map(|j| s[(a, j)] * s[(b, j)] * s[(cc, j)].conj() / s[(0, j)]).sum();
                match near_int(value.re, INTEGER_TOL) {
                    Some(x) if x >= 0 && value.im.abs() <= INTEGER_TOL => data.push(x as u64),
                    _ => return Err(ModularError::NonIntegralFusion { a, b, c: cc, value }),
                }
            }
        }
    }
    Ok(FusionOutput { n, data })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModularReport {
    pub s_unitarity: f64,
    pub t_unitarity: f64,
    pub tstst: f64,
    pub s_squared_c: f64,
    pub tc_ct: f64,
}

impl ModularReport {
    pub fn max(&self) -> f64 {
        [self.s_unitarity, self.t_unitarity, self.tstst, self.s_squared_c, self.tc_ct]
            .into_iter()
            .fold(0.0, f64::max)
    }
}

pub fn check_modular_relations(md: &ModularData) -> Result<ModularReport, ModularError> {
    let s = &md.s;
    let t = md.t_matrix()?;
    let cm = md.conjugation_matrix()?;
    Ok(ModularReport {
        s_unitarity: unitarity_residual(s),
        t_unitarity: unitarity_residual(&t),
        tstst: max_abs_diff(&(&t * s * &t * s * &t), s),
        s_squared_c: max_abs_diff(&(s * s), &cm),
        tc_ct: max_abs_diff(&(&t * &cm), &(&cm * &t)),
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Nondegeneracy {
    /// `|Σ κ_ρ d_ρ²|²`
    pub lhs: f64,
    /// `Σ d_ρ²`
    pub rhs: f64,
    pub holds: bool,
}

pub fn nondegeneracy_check(md: &ModularData) -> Nondegeneracy {
    let lhs = md.gauss_sum().norm_sqr();
    let rhs: f64 = md.qdims().iter().map(|d| d * d).sum();
    Nondegeneracy { lhs, rhs, holds: (lhs - rhs).abs() <= PHASE_TOL * rhs.max(1.0) }
}

/// `c mod 8` from `e^{2πi c/8} = p₊/|p₊|`, in `[0, 8)`.
pub fn central_charge_mod8(md: &ModularData) -> Result<f64, ModularError> {
    if !nondegeneracy_check(md).holds {
        return Err(ModularError::DegenerateData);
    }
    let c8 = md.gauss_sum().arg() * 8.0 / (2.0 * PI);
    let mut v = c8.rem_euclid(8.0);
    if (v - 8.0).abs() < 1e-9 || v.abs() < 1e-9 {
        v = 0.0;
    }
    Ok(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub unit: bool,
    pub commutative: bool,
    pub associative: bool,
    pub conjugation: bool,
}

impl AxiomReport {
    pub fn all(&self) -> bool {
        self.unit && self.commutative && self.associative && self.conjugation
    }
}

pub fn fusion_algebra_axioms(f: &FusionOutput, conj: &[usize]) -> AxiomReport {
    let n = f.rank();
    let idx = || (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));
    let unit = idx().all(|(a, b)| f.get(0, a, b) == u64::from(a == b));
    let commutative = idx().all(|(a, b)| (0..n).all(|c| f.get(a, b, c) == f.get(b, a, c)));
    let conjugation = conj.len() == n && idx().all(|(a, b)| f.get(a, b, 0) == u64::from(b == conj[a]));
    let associative = idx().all(|(a, b)| {
        (0..n).all(|c| {
            (0..n).all(|m| {
                let left: u64 = (0..n).map(|e| f.get(a, b, e) * f.get(e, c, m)).sum();
                let right: u64 = (0..n).map(|e| f.get(b, c, e) * f.get(a, e, m)).sum();
                left == right
            })
        })
    });
    AxiomReport { unit, commutative, associative, conjugation }
}

/// Largest eigenvalue modulus of each fusion matrix `N_a`.
pub fn perron_frobenius_dims(f: &FusionOutput) -> Vec<f64> {
    (0..f.rank())
        .map(|a| f.matrix(a).complex_eigenvalues().iter().map(|z| z.norm()).fold(0.0, f64::max))
        .collect()
}

/// Shipped datasets.
pub mod datasets {
    use super::*;

    pub fn trivial() -> ModularData {
        ModularData::new(vec!["1".into()], CMatrix::from_element(1, 1, c(1.0, 0.0)), vec![c(1.0, 0.0)]).unwrap()
    }

    /// Quantum double of `Z2`.
    pub fn toric_code() -> ModularData {
        let h = 0.5;
        let s = CMatrix::from_row_slice(
            4,
            4,
            &[h, h, h, h, h, h, -h, -h, h, -h, h, -h, h, -h, -h, h].map(|x| c(x, 0.0)),
        );
        let kappa = [1.0, 1.0, 1.0, -1.0].map(|x| c(x, 0.0)).to_vec();
        ModularData::new(vec!["1".into(), "e".into(), "m".into(), "f".into()], s, kappa).unwrap()
    }

    pub fn fibonacci() -> ModularData {
        let phi = 2.0 * (PI / 5.0).cos();
        let norm = (2.0 + phi).sqrt();
        let s = CMatrix::from_row_slice(2, 2, &[1.0, phi, phi, -1.0].map(|x| c(x / norm, 0.0)));
        let kappa = vec![c(1.0, 0.0), Complex64::from_polar(1.0, 4.0 * PI / 5.0)];
        ModularData::new(vec!["1".into(), "tau".into()], s, kappa).unwrap()
    }

    pub fn semion() -> ModularData {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let s = CMatrix::from_row_slice(2, 2, &[r, r, r, -r].map(|x| c(x, 0.0)));
        ModularData::new(vec!["1".into(), "s".into()], s, vec![c(1.0, 0.0), c(0.0, 1.0)]).unwrap()
    }

    pub fn by_name(name: &str) -> Option<ModularData> {
        Some(match name {
            "trivial" => trivial(),
            "toric_code" => toric_code(),
            "fibonacci" => fibonacci(),
            "semion" => semion(),
            _ => return None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::datasets::*;
    use super::*;

    #[test]
    fn trivial_theory() {
        let md = trivial();
        assert_eq!(check_modular_relations(&md).unwrap().max(), 0.0);
        assert_eq!(verlinde_fusion(&md).unwrap().get(0, 0, 0), 1);
        assert_eq!(central_charge_mod8(&md).unwrap(), 0.0);
    }

    #[test]
    fn toric_code_fusion_is_z2_squared() {
        let md = toric_code();
        let f = verlinde_fusion(&md).unwrap();
        // labels as bit pairs: 1=00, e=01, m=10, f=11
        for a in 0..4 {
            for b in 0..4 {
                for cc in 0..4 {
                    assert_eq!(f.get(a, b, cc), u64::from(a ^ b == cc));
                }
            }
        }
        let rep = check_modular_relations(&md).unwrap();
        assert!(rep.max() < 1e-12, "{rep:?}");
        assert_eq!(md.conjugation().unwrap(), vec![0, 1, 2, 3]);
        let nd = nondegeneracy_check(&md);
        assert!(nd.holds && (nd.lhs - 4.0).abs() < 1e-12);
        assert_eq!(central_charge_mod8(&md).unwrap(), 0.0);
    }

    #[test]
    fn fibonacci_rules() {
        let md = fibonacci();
        let f = verlinde_fusion(&md).unwrap();
        assert_eq!((f.get(1, 1, 0), f.get(1, 1, 1)), (1, 1));
        assert!(check_modular_relations(&md).unwrap().max() < 1e-9);
        let phi = 2.0 * (PI / 5.0).cos();
        let nd = nondegeneracy_check(&md);
        assert!((nd.rhs - (1.0 + phi * phi)).abs() < 1e-12 && nd.holds);
        let pf = perron_frobenius_dims(&f);
        assert!((pf[1] - phi).abs() < 1e-8);
        assert!(fusion_algebra_axioms(&f, &md.conjugation().unwrap()).all());
    }

    #[test]
    fn semion_central_charge() {
        let md = semion();
        assert!((central_charge_mod8(&md).unwrap() - 1.0).abs() < 1e-12);
        assert!(check_modular_relations(&md).unwrap().max() < 1e-12);
    }

    #[test]
    fn validation_rejects_bad_twist() {
        let err = ModularData::new(vec!["1".into()], CMatrix::from_element(1, 1, c(1.0, 0.0)), vec![c(2.0, 0.0)]);
        assert!(matches!(err, Err(ModularError::NotUnitModulus { .. })));
    }
}
