//! Sectors and modular data of the quantum double `D(G)`.
//!
//! Sectors are pairs `(class a, irrep α of the centralizer of g_a)`. The
//! `S` and `T` entries follow the usual double formulas:
//!
//! ```text
//! S_{(a,α),(b,β)} = 1/|G| Σ_{g∈K_a, h∈K_b, gh=hg} χ_α(x_g⁻¹ h x_g)^* χ_β(x_h⁻¹ g x_h)^*
//! T_{(a,α)}       = χ_α(g_a) / χ_α(e)
//! ```
//!
//! where `x_g g_a x_g⁻¹ = g` picks a conjugator for each class member.

use num_complex::Complex64;
use thiserror::Error;

use crate::group::{
    character_table, class_fusion, conjugacy_classes, CharacterTable, ConjugacyData, FiniteGroupData, GroupError,
};
use crate::linalg::CMatrix;
use crate::modular::{ModularData, ModularError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DoubleError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Modular(#[from] ModularError),
    #[error("sum of squared quantum dimensions is {sum}, expected |G|^2 = {expected}")]
    DimensionIdentityFailure { sum: u64, expected: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleSector {
    pub class_index: usize,
    pub centralizer_irrep: usize,
    pub qdim: usize,
}

/// Per-class data: the centralizer of the representative and a conjugator for
/// each class member.
struct ClassFrame {
    centralizer: FiniteGroupData,
    cent_classes: ConjugacyData,
    table: CharacterTable,
    /// `(member, x)` with `x g_a x⁻¹ = member`.
    conjugators: Vec<(usize, usize)>,
}

impl ClassFrame {
    /// `χ_α(y)` for a parent-group element `y` in the centralizer.
    fn chi(&self, group: &FiniteGroupData, alpha: usize, y: usize) -> Complex64 {
        let k = self.centralizer.index_of(group.element(y)).expect("element lies in the centralizer");
        self.table.chi[(alpha, self.cent_classes.class_of[k])]
    }
}

fn frames(group: &FiniteGroupData, classes: &ConjugacyData) -> Result<Vec<ClassFrame>, GroupError> {
    let gens: Vec<usize> = group.generators().iter().map(|g| group.index_of(g).unwrap()).collect();
    classes
        .reps
        .iter()
        .map(|&rep| {
            let (centralizer, _) = group.centralizer(rep);
            let cent_classes = conjugacy_classes(&centralizer);
            let fusion = class_fusion(&centralizer, &cent_classes)?;
            let table = character_table(&centralizer, &cent_classes, &fusion)?;

            let mut conjugators = vec![(rep, 0usize)];
            let mut k = 0;
            while k < conjugators.len() {
                let (y, x) = conjugators[k];
                for &g in &gens {
                    let z = group.mul(group.mul(g, y), group.inv(g));
                    if !conjugators.iter().any(|&(m, _)| m == z) {
                        conjugators.push((z, group.mul(g, x)));
                    }
                }
                k += 1;
            }
            conjugators.sort_unstable();
            Ok(ClassFrame { centralizer, cent_classes, table, conjugators })
        })
        .collect()
}

fn sectors_from(classes: &ConjugacyData, frames: &[ClassFrame]) -> Vec<DoubleSector> {
    frames
        .iter()
        .enumerate()
        .flat_map(|(a, f)| {
            f.table.dims.iter().enumerate().map(move |(alpha, &d)| DoubleSector {
                class_index: a,
                centralizer_irrep: alpha,
                qdim: classes.sizes[a] * d,
            })
        })
        .collect()
}

pub fn enumerate_double_sectors(group: &FiniteGroupData) -> Result<Vec<DoubleSector>, DoubleError> {
    let classes = conjugacy_classes(group);
    let frames = frames(group, &classes)?;
    let sectors = sectors_from(&classes, &frames);
    check_dimension_identity(group, &sectors)?;
    Ok(sectors)
}

fn check_dimension_identity(group: &FiniteGroupData, sectors: &[DoubleSector]) -> Result<(), DoubleError> {
    let sum: u64 = sectors.iter().map(|s| (s.qdim * s.qdim) as u64).sum();
    let expected = (group.order() * group.order()) as u64;
    if sum != expected {
        return Err(DoubleError::DimensionIdentityFailure { sum, expected });
    }
    Ok(())
}

pub fn double_modular_data(group: &FiniteGroupData) -> Result<(Vec<DoubleSector>, ModularData), DoubleError> {
    let classes = conjugacy_classes(group);
    let frames = frames(group, &classes)?;
    let sectors = sectors_from(&classes, &frames);
    check_dimension_identity(group, &sectors)?;

    let n = sectors.len();
    let order = group.order() as f64;
    let mut s = CMatrix::zeros(n, n);
    for (p, sa) in sectors.iter().enumerate() {
        let fa = &frames[sa.class_index];
        for (q, sb) in sectors.iter().enumerate().skip(p) {
            let fb = &frames[sb.class_index];
            let mut acc = Complex64::new(0.0, 0.0);
            for &(g, xg) in &fa.conjugators {
                for &(h, xh) in &fb.conjugators {
                    if group.mul(g, h) != group.mul(h, g) {
                        continue;
                    }
                    let h_in_a = group.mul(group.mul(group.inv(xg), h), xg);
                    let g_in_b = group.mul(group.mul(group.inv(xh), g), xh);
                    acc += (fa.chi(group, sa.centralizer_irrep, h_in_a) * fb.chi(group, sb.centralizer_irrep, g_in_b))
                        .conj();
                }
            }
            s[(p, q)] = acc / order;
            s[(q, p)] = acc / order;
        }
    }

    let kappa: Vec<Complex64> = sectors
        .iter()
        .map(|sec| {
            let f = &frames[sec.class_index];
            let rep = classes.reps[sec.class_index];
            let t = f.chi(group, sec.centralizer_irrep, rep) / f.table.dims[sec.centralizer_irrep] as f64;
            t / t.norm()
        })
        .collect();
    let labels = sectors.iter().map(|s| format!("K{}:{}", s.class_index, s.centralizer_irrep)).collect();
    let md = ModularData::new(labels, s, kappa)?;
    Ok((sectors, md))
}
