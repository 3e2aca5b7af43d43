//! Finite permutation groups and the superselection data of their group algebra.
//!
//! The pipeline is `enumerate_group` → `conjugacy_classes` → `class_fusion` →
//! `character_table` → `rep_fusion`. Class sums `Q_i` fuse with integer
//! coefficients `N_ij^l`; their joint eigenvalues give the irreducible characters.

mod characters;
mod classes;
mod perm;

pub use characters::{
    character_table, regular_rep_multiplicities, rep_fusion, verify_s_relations, CharacterTable,
    RepFusionTensor, SRelationReport,
};
pub use classes::{class_fusion, conjugacy_classes, ClassFusionTensor, ConjugacyData};
pub use perm::{enumerate_group, enumerate_group_with_cap, FiniteGroupData, Permutation, DEFAULT_ORDER_CAP};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GroupError {
    #[error("invalid permutation {images:?}: {reason}")]
    InvalidPermutation { images: Vec<usize>, reason: &'static str },
    #[error("group order exceeds the cap of {cap} elements")]
    OrderCapExceeded { cap: usize },
    #[error("class fusion N[{i}][{j}][{l}] depends on the class representative")]
    RepresentativeInconsistency { i: usize, j: usize, l: usize },
    #[error("no nondegenerate spectrum after {attempts} random combinations")]
    DegenerateSpectrum { attempts: usize },
    #[error("character matrix is not unitary (residual {residual:e})")]
    NonUnitaryS { residual: f64 },
    #[error("fusion coefficient ({k},{l},{m}) = {value} is not a nonnegative integer")]
    NonIntegralFusion { k: usize, l: usize, m: usize, value: f64 },
    #[error("sum of squared dimensions is {sum}, group order is {order}")]
    DimensionSumMismatch { sum: u64, order: usize },
    #[error("irreducible dimension {value} is not an integer")]
    NonIntegralDimension { value: f64 },
}

/// Small named groups used by tests, the CLI and the demo page.
pub mod library {
    use super::{enumerate_group, FiniteGroupData};

    fn build(degree: usize, gens: &[&[usize]]) -> FiniteGroupData {
        let gens = gens.iter().map(|g| g.to_vec()).collect::<Vec<_>>();
        enumerate_group(degree, &gens).expect("library generators are valid")
    }

    pub fn trivial() -> FiniteGroupData {
        build(1, &[])
    }
    pub fn cyclic(n: usize) -> FiniteGroupData {
        let g: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        build(n, &[&g])
    }
    pub fn symmetric(n: usize) -> FiniteGroupData {
        if n < 2 {
            return build(n.max(1), &[]);
        }
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        build(n, &[&swap, &cycle])
    }
    pub fn dihedral4() -> FiniteGroupData {
        build(4, &[&[1, 2, 3, 0], &[0, 3, 2, 1]])
    }
    /// Quaternion group in its left regular representation on {±1, ±i, ±j, ±k}.
    pub fn quaternion() -> FiniteGroupData {
        build(8, &[&[2, 3, 1, 0, 6, 7, 5, 4], &[4, 5, 7, 6, 1, 0, 2, 3]])
    }
    pub fn alternating4() -> FiniteGroupData {
        build(4, &[&[1, 2, 0, 3], &[1, 0, 3, 2]])
    }

    pub fn by_name(name: &str) -> Option<FiniteGroupData> {
        Some(match name {
            "trivial" => trivial(),
            "z2" => cyclic(2),
            "z3" => cyclic(3),
            "z4" => cyclic(4),
            "s3" => symmetric(3),
            "s4" => symmetric(4),
            "d4" => dihedral4(),
            "q8" => quaternion(),
            "a4" => alternating4(),
            _ => return None,
        })
    }
}
