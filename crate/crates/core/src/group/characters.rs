use std::f64::consts::TAU;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ClassFusionTensor, ConjugacyData, FiniteGroupData, GroupError};
use crate::linalg::{near_int, null_vector, unitarity_residual, CMatrix};

const MAX_ATTEMPTS: u64 = 8;
const MIN_GAP: f64 = 1e-7;
const UNITARY_TOL: f64 = 1e-9;
const INTEGER_TOL: f64 = 1e-8;

/// Irreducible characters in the class basis.
///
/// Rows are irreducibles (trivial first, then by dimension, then by the
/// character values compared phase-first), columns are
/// conjugacy classes in [`ConjugacyData`] order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub order: usize,
    pub class_sizes: Vec<usize>,
    /// `chi[(l, j)] = χ_l(g_j)`.
    pub chi: CMatrix,
    pub dims: Vec<usize>,
    /// `central_values[(l, i)] = π_l(Q_i) = |K_i| χ_l(g_i) / d_l`.
    pub central_values: CMatrix,
    /// `s_matrix[(l, j)] = sqrt(|K_j|/|G|) χ_l(g_j)`, unitary.
    pub s_matrix: CMatrix,
}

impl CharacterTable {
    pub fn rank(&self) -> usize {
        self.dims.len()
    }

    /// `max_{k,l} |(1/|G|) Σ_j |K_j| χ_k(g_j) χ_l(g_j)^* - δ_kl|`.
    pub fn orthogonality_residual(&self) -> f64 {
        let r = self.rank();
        let mut worst: f64 = 0.0;
        for k in 0..r {
            for l in 0..r {
                let s: Complex64 = (0..r)
                    .map(|j| self.chi[(k, j)] * self.chi[(l, j)].conj() * self.class_sizes[j] as f64)
                    .sum::<Complex64>()
                    / self.order as f64;
                let target = if k == l { 1.0 } else { 0.0 };
                worst = worst.max((s - target).norm());
            }
        }
        worst
    }
}

/// Burnside's method: a generic combination `Σ c_j N_j` has a simple spectrum,
/// and its eigenvectors are the common eigenvectors `ω_l` of all class sums,
/// with `ω_l[i] = π_l(Q_i)`.
pub fn character_table(
    group: &FiniteGroupData,
    classes: &ConjugacyData,
    fusion: &ClassFusionTensor,
) -> Result<CharacterTable, GroupError> {
    let r = classes.class_count();
    let order = group.order();
    let mats: Vec<DMatrix<f64>> = (0..r).map(|j| fusion.matrix_f64(j)).collect();

    let mut omegas = None;
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(attempt);
        let mut m = DMatrix::<f64>::zeros(r, r);
        for nj in &mats {
            m += nj * rng.gen_range(-1.0..1.0);
        }
        let eig: Vec<Complex64> = m.complex_eigenvalues().iter().copied().collect();
        let gap = (0..r)
            .flat_map(|a| (a + 1..r).map(move |b| (a, b)))
            .map(|(a, b)| (eig[a] - eig[b]).norm())
            .fold(f64::INFINITY, f64::min);
        if gap < MIN_GAP {
            continue;
        }
        // Left action: ω is a right eigenvector of every (N_j)_{i,l}, i.e.
        // Σ_l N_ij^l ω_l = ω_i ω_j. The combination matrix acts the same way.
        let mc = m.map(|x| Complex64::new(x, 0.0));
        let vecs: Vec<Vec<Complex64>> = eig
            .iter()
            .map(|&lam| {
                let v = null_vector(&(&mc - CMatrix::identity(r, r) * lam));
                let v0 = v[0];
                v.iter().map(|x| x / v0).collect()
            })
            .collect();
        omegas = Some(vecs);
        break;
    }
    let omegas = omegas.ok_or(GroupError::DegenerateSpectrum { attempts: MAX_ATTEMPTS as usize })?;

    struct Row {
        dim: usize,
        chi: Vec<Complex64>,
        trivial: bool,
    }
    let mut rows = Vec::with_capacity(r);
    for w in omegas {
        let norm: f64 = (0..r).map(|i| w[i].norm_sqr() / classes.sizes[i] as f64).sum();
        let d = (order as f64 / norm).sqrt();
        let dim = near_int(d, 1e-6).ok_or(GroupError::NonIntegralDimension { value: d })? as usize;
        let chi: Vec<Complex64> = (0..r).map(|i| w[i] * dim as f64 / classes.sizes[i] as f64).collect();
        let trivial = dim == 1 && chi.iter().all(|x| (x - 1.0).norm() < 1e-6);
        rows.push(Row { dim, chi, trivial });
    }
    let key = |row: &Row| {
        let rounded: Vec<(i64, i64)> = row
            .chi
            .iter()
            .map(|z| {
                // phase first, so that for cyclic groups the row order matches
                // the powers of the generator and S comes out symmetric
                let m = (z.norm() * 1e6).round() as i64;
                let ph = if m == 0 { 0 } else { (z.arg().rem_euclid(TAU) * 1e6).round() as i64 % (TAU * 1e6).round() as i64 };
                (ph, m)
            })
            .collect();
        (!row.trivial, row.dim, rounded)
    };
    rows.sort_by_cached_key(key);

    let chi = CMatrix::from_fn(r, r, |l, j| rows[l].chi[j]);
    let central_values =
        CMatrix::from_fn(r, r, |l, i| rows[l].chi[i] * classes.sizes[i] as f64 / rows[l].dim as f64);
    let s_matrix = CMatrix::from_fn(r, r, |l, j| rows[l].chi[j] * (classes.sizes[j] as f64 / order as f64).sqrt());
    let residual = unitarity_residual(&s_matrix);
    if residual > UNITARY_TOL {
        return Err(GroupError::NonUnitaryS { residual });
    }
    Ok(CharacterTable {
        order,
        class_sizes: classes.sizes.clone(),
        chi,
        dims: rows.iter().map(|row| row.dim).collect(),
        central_values,
        s_matrix,
    })
}

/// Tensor product multiplicities `π_k ⊗ π_l ≃ Σ_m Ñ_kl^m π_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepFusionTensor {
    r: usize,
    n: Vec<u64>,
}

impl RepFusionTensor {
    pub fn rank(&self) -> usize {
        self.r
    }
    pub fn get(&self, k: usize, l: usize, m: usize) -> u64 {
        self.n[(k * self.r + l) * self.r + m]
    }
}

pub fn rep_fusion(table: &CharacterTable) -> Result<RepFusionTensor, GroupError> {
    let r = table.rank();
    let mut n = vec![0u64; r * r * r];
    for k in 0..r {
        for l in 0..r {
            for m in 0..r {
                let v: Complex64 = (0..r)
                    .map(|j| {
                        table.chi[(k, j)] * table.chi[(l, j)] * table.chi[(m, j)].conj() * table.class_sizes[j] as f64
                    })
                    .sum::<Complex64>()
                    / table.order as f64;
                match near_int(v.re, INTEGER_TOL) {
                    Some(x) if x >= 0 && v.im.abs() <= INTEGER_TOL => n[(k * r + l) * r + m] = x as u64,
                    _ => return Err(GroupError::NonIntegralFusion { k, l, m, value: v.re }),
                }
            }
        }
    }
    Ok(RepFusionTensor { r, n })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SRelationReport {
    /// `max |Q_i^k Q_j^k - Σ_c N_ij^c Q_c^k|`.
    pub class_residual: f64,
    /// `max |(S_kj/S_0j)(S_lj/S_0j) - Σ_m Ñ_kl^m S_mj/S_0j|`.
    pub rep_residual: f64,
}

impl SRelationReport {
    pub fn max(&self) -> f64 {
        self.class_residual.max(self.rep_residual)
    }
}

pub fn verify_s_relations(
    table: &CharacterTable,
    class_fusion: &ClassFusionTensor,
    rep_fusion: &RepFusionTensor,
) -> SRelationReport {
    let r = table.rank();
    assert_eq!(class_fusion.rank(), r);
    assert_eq!(rep_fusion.rank(), r);
    let q = &table.central_values;
    let s = &table.s_matrix;
    let mut class_residual: f64 = 0.0;
    let mut rep_residual: f64 = 0.0;
    for k in 0..r {
        for i in 0..r {
            for j in 0..r {
                let rhs: Complex64 = (0..r).map(|c| q[(k, c)] * class_fusion.get(i, j, c) as f64).sum();
                class_residual = class_residual.max((q[(k, i)] * q[(k, j)] - rhs).norm());

                let (kk, l) = (i, k);
                let ratio = |m: usize| s[(m, j)] / s[(0, j)];
                let rhs: Complex64 = (0..r).map(|m| ratio(m) * rep_fusion.get(kk, l, m) as f64).sum();
                rep_residual = rep_residual.max((ratio(kk) * ratio(l) - rhs).norm());
            }
        }
    }
    SRelationReport { class_residual, rep_residual }
}

/// Multiplicity of each irreducible in the regular representation, obtained by
/// projecting the regular character (`|G|` at `e`, zero elsewhere).
pub fn regular_rep_multiplicities(table: &CharacterTable) -> Result<Vec<usize>, GroupError> {
    let mult: Vec<usize> = (0..table.rank())
        .map(|l| {
            let v = table.chi[(l, 0)].conj().re * table.order as f64 / table.order as f64;
            v.round().max(0.0) as usize
        })
        .collect();
    let sum: u64 = mult.iter().map(|&d| (d * d) as u64).sum();
    if sum != table.order as u64 || mult != table.dims {
        return Err(GroupError::DimensionSumMismatch { sum, order: table.order });
    }
    Ok(mult)
}
