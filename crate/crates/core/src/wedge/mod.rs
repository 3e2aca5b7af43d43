//! Modular objects of the right wedge for a massive scalar particle in 1+1 dimensions,
//! and the Zamolodchikov–Faddeev algebra on a truncated Fock space.

mod fock;
mod grid;
mod kms;
mod smatrix;
mod wave;

use thiserror::Error;

pub use fock::{
    basis_keys, interacting_j, j0, norm_bound_ratio, scattering_conjugation_check, scattering_phase, zf_annihilate,
    zf_create, zf_relations_check, ConjugationReport, TruncatedFockState, ZfReport,
};
pub use grid::RapidityGrid;
pub use kms::{default_bumps, kms_fourpoint_check, KmsReport};
pub use smatrix::{crossing_check, SMatrixModel};
pub use wave::{
    premodular_apply, s_invariance_residual, wedge_wave, AnalyticWave, GaussianBump, OneParticleWave, PremodularOp,
    SpacetimeQuadrature, Wedge,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum WedgeError {
    #[error("shifted rapidities leave the grid while the wave is not negligible there")]
    InterpolationOutOfRange,
    #[error("complex boosts need the analytic representation of the wave")]
    NeedsAnalyticWave,
    #[error("test function has {fraction:.2e} of its mass outside the wedge")]
    SupportViolation { fraction: f64 },
    #[error("particle number would exceed the cap {n_max}")]
    FockCapExceeded { n_max: usize },
    #[error("scattering function has a pole in the physical strip")]
    PoleInStrip,
}
