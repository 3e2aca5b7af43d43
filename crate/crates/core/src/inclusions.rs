//! Jones index of inclusions `B ⊂ A` of finite-dimensional C*-algebras.
//!
//! Two routes are provided. The projector route works in the GNS space of
//! `A = Mat_N` with its trace, builds the projection `e_B` onto `B·Ω`
//! exactly over the rationals and inverts its normalized trace. The incidence
//! route sums the squared entries of the inclusion matrix `Λ`.

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{op_norm, CMatrix};

pub const GNS_SIZE_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InclusionError {
    #[error("matrix size {0} exceeds the cap of {GNS_SIZE_CAP}")]
    SizeCap(usize),
    #[error("big block {block} has size {size} but the incidence row gives {embedded}")]
    Unitality { block: usize, size: usize, embedded: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("constructed e_B is not an orthogonal projection")]
    NonProjector,
    #[error("the projector route needs a full matrix algebra as the big algebra")]
    NotAFactor,
    #[error("block sizes and multiplicities must be positive")]
    EmptyBlock,
}

/// `⊕_i Mat_{n_i} ⊗ 1_{m_i}`, stored as `(n_i, m_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiMatrixAlgebra {
    pub blocks: Vec<(usize, usize)>,
}

impl MultiMatrixAlgebra {
    pub fn new(blocks: Vec<(usize, usize)>) -> Result<Self, InclusionError> {
        if blocks.iter().any(|&(n, m)| n == 0 || m == 0) {
            return Err(InclusionError::EmptyBlock);
        }
        Ok(Self { blocks })
    }

    pub fn factor(n: usize) -> Self {
        Self { blocks: vec![(n, 1)] }
    }

    /// Complex dimension `Σ n_i²`.
    pub fn dimension(&self) -> usize {
        self.blocks.iter().map(|&(n, _)| n * n).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionSpec {
    pub small: MultiMatrixAlgebra,
    pub big: MultiMatrixAlgebra,
    /// `Λ[a][b]`: how often small block `b` sits in big block `a`.
    pub incidence: Vec<Vec<u64>>,
}

impl InclusionSpec {
    pub fn new(
        small: MultiMatrixAlgebra,
        big: MultiMatrixAlgebra,
        incidence: Vec<Vec<u64>>,
    ) -> Result<Self, InclusionError> {
        if incidence.len() != big.blocks.len() || incidence.iter().any(|r| r.len() != small.blocks.len()) {
            return Err(InclusionError::ShapeMismatch(format!(
                "incidence must be {}x{}",
                big.blocks.len(),
                small.blocks.len()
            )));
        }
        for (a, row) in incidence.iter().enumerate() {
            let embedded: usize = row.iter().zip(&small.blocks).map(|(&l, &(n, _))| l as usize * n).sum();
            if embedded != big.blocks[a].0 {
                return Err(InclusionError::Unitality { block: a, size: big.blocks[a].0, embedded });
            }
        }
        Ok(Self { small, big, incidence })
    }

    /// Small algebra with block sizes `sizes` sitting in `Mat_N` with
    /// multiplicities `mult`, `N = Σ sizes·mult`.
    pub fn into_factor(sizes: &[usize], mult: &[u64]) -> Result<Self, InclusionError> {
        let n: usize = sizes.iter().zip(mult).map(|(&s, &m)| s * m as usize).sum();
        let small = MultiMatrixAlgebra::new(sizes.iter().map(|&s| (s, 1)).collect())?;
        Self::new(small, MultiMatrixAlgebra::factor(n), vec![mult.to_vec()])
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IncidenceIndex {
    /// `Σ Λ_ab²`
    pub index: u64,
    /// `‖Λ‖²` in the operator norm, reported alongside.
    pub opnorm_sq: f64,
}

pub fn incidence_index(lambda: &[Vec<u64>]) -> IncidenceIndex {
    let rows = lambda.len();
    let cols = lambda.first().map_or(0, Vec::len);
    let index = lambda.iter().flatten().map(|&x| x * x).sum();
    let m = CMatrix::from_fn(rows, cols, |a, b| Complex64::new(lambda[a][b] as f64, 0.0));
    let norm = op_norm(&m);
    IncidenceIndex { index, opnorm_sq: norm * norm }
}

pub fn jones_index_incidence(spec: &InclusionSpec) -> IncidenceIndex {
    incidence_index(&spec.incidence)
}

/// Path counting through an intermediate level: `Λ = Λ1 · Λ2`.
pub fn bratteli_compose(l1: &[Vec<u64>], l2: &[Vec<u64>]) -> Result<Vec<Vec<u64>>, InclusionError> {
    let inner = l1.first().map_or(0, Vec::len);
    if l1.iter().any(|r| r.len() != inner) || l2.len() != inner {
        return Err(InclusionError::ShapeMismatch(format!(
            "cannot compose {}x{} with {}-row matrix",
            l1.len(),
            inner,
            l2.len()
        )));
    }
    let cols = l2.first().map_or(0, Vec::len);
    Ok(l1
        .iter()
        .map(|row| (0..cols).map(|c| row.iter().zip(l2).map(|(&x, r)| x * r[c]).sum()).collect())
        .collect())
}

/// `Mat_n` acting on itself, with `(x, y) = (1/n) Tr x* y`.
///
/// Vectors are column-stacked: `ξ_ij` sits at `i + j·n`, so for `n = 2` the
/// order is `(ξ11, ξ21, ξ12, ξ22)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GnsRealization {
    n: usize,
}

pub fn gns_realize(n: usize) -> Result<GnsRealization, InclusionError> {
    if n == 0 || n > GNS_SIZE_CAP {
        return Err(InclusionError::SizeCap(n));
    }
    Ok(GnsRealization { n })
}

impl GnsRealization {
    pub fn dimension(&self) -> usize {
        self.n * self.n
    }

    pub fn vectorize(&self, x: &CMatrix) -> Vec<Complex64> {
        (0..self.n).flat_map(|j| (0..self.n).map(move |i| x[(i, j)])).collect()
    }

    pub fn inner(&self, x: &[Complex64], y: &[Complex64]) -> Complex64 {
        x.iter().zip(y).map(|(a, b)| a.conj() * b).sum::<Complex64>() / self.n as f64
    }

    /// `ξ ↦ aξ`: block diagonal with `n` copies of `a`.
    pub fn left_action(&self, a: &CMatrix) -> CMatrix {
        let n = self.n;
        CMatrix::from_fn(n * n, n * n, |r, c| {
            let (i, j, k, l) = (r % n, r / n, c % n, c / n);
            if j == l {
                a[(i, k)]
            } else {
                Complex64::zero()
            }
        })
    }

    /// `ξ ↦ ξb`.
    pub fn right_action(&self, b: &CMatrix) -> CMatrix {
        let n = self.n;
        CMatrix::from_fn(n * n, n * n, |r, c| {
            let (i, j, k, l) = (r % n, r / n, c % n, c / n);
            if i == k {
                b[(l, j)]
            } else {
                Complex64::zero()
            }
        })
    }

    /// Real part of `J = P ∘ K`: the permutation `ξ_ij ↔ ξ_ji`.
    pub fn j_permutation(&self) -> Vec<usize> {
        let n = self.n;
        (0..n * n).map(|r| (r / n) + (r % n) * n).collect()
    }

    /// `J ξ = P conj(ξ)`, i.e. `ξ ↦ ξ*`.
    pub fn apply_j(&self, xi: &[Complex64]) -> Vec<Complex64> {
        let p = self.j_permutation();
        p.iter().map(|&src| xi[src].conj()).collect()
    }

    /// `J X J` for a linear operator `X`, which is again linear.
    pub fn conjugate_by_j(&self, x: &CMatrix) -> CMatrix {
        let p = self.j_permutation();
        CMatrix::from_fn(x.nrows(), x.ncols(), |r, c| x[(p[r], p[c])].conj())
    }
}

/// Exact result of the projector route.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectorIndex {
    /// `e_B` on the `N²`-dimensional GNS space.
    pub e_b: Vec<Vec<Rational64>>,
    pub tau: Rational64,
    pub index: Rational64,
}

/// `[A:B] = τ(e_B)⁻¹` with `A = Mat_N` and `τ = Tr/N²` on the GNS space.
pub fn jones_index_projector(spec: &InclusionSpec) -> Result<ProjectorIndex, InclusionError> {
    if spec.big.blocks.len() != 1 || spec.big.blocks[0].1 != 1 {
        return Err(InclusionError::NotAFactor);
    }
    let n = spec.big.blocks[0].0;
    if n > GNS_SIZE_CAP {
        return Err(InclusionError::SizeCap(n));
    }
    let dim = n * n;
    let at = |i: usize, j: usize| i + j * n;

    // Orthogonal basis of B·Ω: for each small block and matrix unit, the sum
    // of its copies. Each has squared norm equal to the multiplicity.
    let mut e_b = vec![vec![Rational64::zero(); dim]; dim];
    let mut generators = Vec::new();
    let mut offset = 0;
    for (b, &(size, _)) in spec.small.blocks.iter().enumerate() {
        let mult = spec.incidence[0][b] as usize;
        for p in 0..size {
            for q in 0..size {
                let support: Vec<usize> =
                    (0..mult).map(|c| at(offset + c * size + p, offset + c * size + q)).collect();
                let w = Rational64::new(1, mult as i64);
                for &r in &support {
                    for &s in &support {
                        e_b[r][s] += w;
                    }
                }
                generators.push(support);
            }
        }
        offset += size * mult;
    }

    if !is_projection(&e_b) {
        return Err(InclusionError::NonProjector);
    }
    // e_B ∈ B′: it commutes with the left action of every matrix unit of B.
    for support in &generators {
        let left = left_action_exact(n, support);
        if mat_mul(&left, &e_b) != mat_mul(&e_b, &left) {
            return Err(InclusionError::NonProjector);
        }
    }

    let trace: Rational64 = (0..dim).map(|i| e_b[i][i]).sum();
    let tau = trace / Rational64::from_integer(dim as i64);
    Ok(ProjectorIndex { e_b, tau, index: tau.recip() })
}

/// Left multiplication by the 0/1 matrix with ones at the column-stacked
/// positions in `support`.
fn left_action_exact(n: usize, support: &[usize]) -> Vec<Vec<Rational64>> {
    let dim = n * n;
    let mut m = vec![vec![Rational64::zero(); dim]; dim];
    for &pos in support {
        let (i, k) = (pos % n, pos / n);
        for j in 0..n {
            m[i + j * n][k + j * n] = Rational64::one();
        }
    }
    m
}

fn mat_mul(a: &[Vec<Rational64>], b: &[Vec<Rational64>]) -> Vec<Vec<Rational64>> {
    let n = a.len();
    let mut out = vec![vec![Rational64::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    out
}

fn is_projection(e: &[Vec<Rational64>]) -> bool {
    let n = e.len();
    let symmetric = (0..n).all(|i| (0..n).all(|j| e[i][j] == e[j][i]));
    symmetric && mat_mul(e, e) == e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{c, max_abs_diff};

    #[test]
    fn baby_inclusion() {
        let spec = InclusionSpec::into_factor(&[1], &[2]).unwrap();
        let p = jones_index_projector(&spec).unwrap();
        let h = Rational64::new(1, 2);
        let z = Rational64::zero();
        let expected = vec![vec![h, z, z, h], vec![z; 4], vec![z; 4], vec![h, z, z, h]];
        assert_eq!(p.e_b, expected);
        assert_eq!(p.tau, Rational64::new(1, 4));
        assert_eq!(p.index, Rational64::from_integer(4));
    }

    #[test]
    fn identity_and_tensor_inclusions() {
        for n in 1..=4 {
            let spec = InclusionSpec::into_factor(&[n], &[1]).unwrap();
            assert_eq!(jones_index_projector(&spec).unwrap().index, Rational64::one());
        }
        let spec = InclusionSpec::into_factor(&[2], &[2]).unwrap();
        assert_eq!(jones_index_projector(&spec).unwrap().index, Rational64::from_integer(4));
        assert_eq!(jones_index_incidence(&spec).index, 4);
    }

    #[test]
    fn paper_incidence_example() {
        let small = MultiMatrixAlgebra::new(vec![(2, 1), (1, 1)]).unwrap();
        let big = MultiMatrixAlgebra::new(vec![(2, 1), (3, 1)]).unwrap();
        let spec = InclusionSpec::new(small, big, vec![vec![1, 0], vec![1, 1]]).unwrap();
        let r = jones_index_incidence(&spec);
        assert_eq!(r.index, 3);
        let golden = (3.0 + 5f64.sqrt()) / 2.0;
        assert!((r.opnorm_sq - golden).abs() < 1e-12);
    }

    #[test]
    fn unitality_enforced() {
        let small = MultiMatrixAlgebra::new(vec![(2, 1)]).unwrap();
        let big = MultiMatrixAlgebra::new(vec![(3, 1)]).unwrap();
        assert!(matches!(InclusionSpec::new(small, big, vec![vec![1]]), Err(InclusionError::Unitality { .. })));
    }

    #[test]
    fn bratteli() {
        let f = vec![vec![1, 1], vec![1, 0]];
        assert_eq!(bratteli_compose(&f, &[vec![1], vec![1]]).unwrap(), vec![vec![2], vec![1]]);
        let id = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(bratteli_compose(&f, &id).unwrap(), f);
        assert!(bratteli_compose(&f, &[vec![1]]).is_err());
    }

    #[test]
    fn gns_two_by_two() {
        let g = gns_realize(2).unwrap();
        assert_eq!(g.j_permutation(), vec![0, 2, 1, 3]);
        let a = CMatrix::from_row_slice(2, 2, &[c(1.0, 2.0), c(0.5, 0.0), c(-1.0, 1.0), c(3.0, -0.5)]);
        let lhs = g.conjugate_by_j(&g.left_action(&a));
        assert!(max_abs_diff(&lhs, &g.right_action(&a.adjoint())) < 1e-15);
        // the paper's layout: blockdiag(a, a)
        let l = g.left_action(&a);
        assert_eq!(l[(0, 1)], a[(0, 1)]);
        assert_eq!(l[(2, 3)], a[(0, 1)]);
        assert_eq!(l[(0, 2)], Complex64::zero());
        assert!(gns_realize(13).is_err());
    }

    #[test]
    fn gns_one_is_conjugation() {
        let g = gns_realize(1).unwrap();
        assert_eq!(g.apply_j(&[c(1.0, 2.0)]), vec![c(1.0, -2.0)]);
    }
}
