use nalgebra::DMatrix;

use super::{FiniteGroupData, GroupError};

/// Partition of a group into conjugacy classes.
///
/// Classes are sorted by their smallest element index, so class 0 is `{e}` and
/// the order follows the breadth-first element listing.
/// The representative `g_j` of each class is its smallest element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyData {
    pub class_of: Vec<usize>,
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    pub members: Vec<Vec<usize>>,
}

impl ConjugacyData {
    pub fn class_count(&self) -> usize {
        self.reps.len()
    }
}

pub fn conjugacy_classes(group: &FiniteGroupData) -> ConjugacyData {
    let n = group.order();
    let gens: Vec<usize> = group
        .generators()
        .iter()
        .map(|g| group.index_of(g).expect("generator is an element"))
        .collect();

    let mut seen = vec![false; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        // Orbit under conjugation by generators; finite orbits of a generating
        // set coincide with orbits of the whole group.
        seen[start] = true;
        let mut orbit = vec![start];
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            for &g in &gens {
                let y = group.mul(group.mul(g, x), group.inv(g));
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        classes.push(orbit);
    }
    classes.sort_by_key(|c| c[0]);

    let mut class_of = vec![0; n];
    for (ci, c) in classes.iter().enumerate() {
        for &x in c {
            class_of[x] = ci;
        }
    }
    ConjugacyData {
        class_of,
        reps: classes.iter().map(|c| c[0]).collect(),
        sizes: classes.iter().map(Vec::len).collect(),
        members: classes,
    }
}

/// Structure constants of the class sums: `Q_i Q_j = Σ_l N_ij^l Q_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFusionTensor {
    r: usize,
    n: Vec<u64>,
}

impl ClassFusionTensor {
    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn get(&self, i: usize, j: usize, l: usize) -> u64 {
        self.n[(i * self.r + j) * self.r + l]
    }

    /// `(N_j)_{i,l} = N_ij^l` as an integer matrix.
    pub fn matrix(&self, j: usize) -> Vec<Vec<i64>> {
        (0..self.r)
            .map(|i| (0..self.r).map(|l| self.get(i, j, l) as i64).collect())
            .collect()
    }

    pub fn matrix_f64(&self, j: usize) -> DMatrix<f64> {
        DMatrix::from_fn(self.r, self.r, |i, l| self.get(i, j, l) as f64)
    }

    /// Exact integer check that all `N_j` commute pairwise.
    pub fn matrices_commute(&self) -> bool {
        let mats: Vec<_> = (0..self.r).map(|j| self.matrix(j)).collect();
        let mul = |a: &Vec<Vec<i64>>, b: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
            (0..self.r)
                .map(|i| (0..self.r).map(|k| (0..self.r).map(|m| a[i][m] * b[m][k]).sum()).collect())
                .collect()
        };
        (0..self.r).all(|a| (a + 1..self.r).all(|b| mul(&mats[a], &mats[b]) == mul(&mats[b], &mats[a])))
    }
}

/// Counts `#{(a, b) ∈ K_i × K_j : ab = g}` for two different `g ∈ K_l` and
/// insists they agree.
pub fn class_fusion(group: &FiniteGroupData, classes: &ConjugacyData) -> Result<ClassFusionTensor, GroupError> {
    let r = classes.class_count();
    let count = |pick: &dyn Fn(&Vec<usize>) -> usize| {
        let mut n = vec![0u64; r * r * r];
        for (l, members) in classes.members.iter().enumerate() {
            let g = pick(members);
            for a in 0..group.order() {
                let b = group.mul(group.inv(a), g);
                n[(classes.class_of[a] * r + classes.class_of[b]) * r + l] += 1;
            }
        }
        n
    };
    let first = count(&|m| m[0]);
    let last = count(&|m| *m.last().unwrap());
    if let Some(pos) = first.iter().zip(&last).position(|(x, y)| x != y) {
        return Err(GroupError::RepresentativeInconsistency { i: pos / (r * r), j: (pos / r) % r, l: pos % r });
    }
    Ok(ClassFusionTensor { r, n: first })
}
