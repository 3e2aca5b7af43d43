//! Pauli monomials on an infinite spin chain, with states given by a finite
//! window of spins and two constant tails.

use std::collections::BTreeMap;

use num_complex::Complex64;
use thiserror::Error;

use crate::linalg::{op_norm, CMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("Pauli index {0} is not 1, 2 or 3")]
    BadPauliIndex(u8),
    #[error("site {site} lies outside the window [-{n}, {n}]")]
    SupportOutsideWindow { site: i64, n: i64 },
    #[error("states live on different windows")]
    WindowMismatch,
    #[error("spins must be +1 or -1")]
    BadSpin,
}

/// `σ_{k_1}(x_1)…σ_{k_j}(x_j)` with `x_1 < … < x_j`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PauliMonomial {
    factors: BTreeMap<i64, u8>,
}

impl PauliMonomial {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(factors: impl IntoIterator<Item = (i64, u8)>) -> Result<Self, ChainError> {
        let mut m = BTreeMap::new();
        for (x, k) in factors {
            if !(1..=3).contains(&k) {
                return Err(ChainError::BadPauliIndex(k));
            }
            m.insert(x, k);
        }
        Ok(Self { factors: m })
    }

    pub fn single(site: i64, k: u8) -> Result<Self, ChainError> {
        Self::new([(site, k)])
    }

    pub fn factors(&self) -> &BTreeMap<i64, u8> {
        &self.factors
    }

    pub fn support(&self) -> Vec<i64> {
        self.factors.keys().copied().collect()
    }

    /// All `4^|sites|` monomials supported in `sites` (identity factors allowed).
    pub fn all_on(sites: &[i64]) -> Vec<Self> {
        let mut out = vec![Self::identity()];
        for &x in sites {
            let mut next = Vec::with_capacity(out.len() * 4);
            for m in &out {
                next.push(m.clone());
                for k in 1..=3 {
                    let mut f = m.factors.clone();
                    f.insert(x, k);
                    next.push(Self { factors: f });
                }
            }
            out = next;
        }
        out
    }
}

/// Basis vector `|s⟩` with `s` free on `[-n, n]` and constant outside.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TailState {
    n: i64,
    bits: Vec<i8>,
    pub left_tail: i8,
    pub right_tail: i8,
}

impl TailState {
    pub fn new(n: i64, bits: Vec<i8>, left_tail: i8, right_tail: i8) -> Result<Self, ChainError> {
        if n < 0 || bits.len() as i64 != 2 * n + 1 {
            return Err(ChainError::WindowMismatch);
        }
        if bits.iter().chain([&left_tail, &right_tail]).any(|b| b.abs() != 1) {
            return Err(ChainError::BadSpin);
        }
        Ok(Self { n, bits, left_tail, right_tail })
    }

    /// Every spin equal to `spin`.
    pub fn constant(n: i64, spin: i8) -> Self {
        Self::new(n, vec![spin; (2 * n + 1) as usize], spin, spin).expect("valid constant state")
    }

    pub fn window(&self) -> i64 {
        self.n
    }

    pub fn spin(&self, x: i64) -> i8 {
        if x < -self.n {
            self.left_tail
        } else if x > self.n {
            self.right_tail
        } else {
            self.bits[(x + self.n) as usize]
        }
    }

    pub fn same_tails(&self, other: &Self) -> bool {
        self.left_tail == other.left_tail && self.right_tail == other.right_tail
    }

    fn flip(&mut self, x: i64) {
        let i = (x + self.n) as usize;
        self.bits[i] = -self.bits[i];
    }
}

/// `A|s⟩ = c|s'⟩`, with `σ₃|s⟩ = s(x)|s⟩`, `σ₁` flipping and `σ₂ = i s(x)·flip`.
pub fn apply_pauli(a: &PauliMonomial, s: &TailState) -> Result<(Complex64, TailState), ChainError> {
    let mut out = s.clone();
    let mut coeff = Complex64::new(1.0, 0.0);
    // rightmost factor acts first; factors on distinct sites commute anyway
    for (&x, &k) in a.factors.iter().rev() {
        if x.abs() > s.n {
            return Err(ChainError::SupportOutsideWindow { site: x, n: s.n });
        }
        let sx = f64::from(out.spin(x));
        match k {
            1 => out.flip(x),
            2 => {
                coeff *= Complex64::new(0.0, sx);
                out.flip(x);
            }
            _ => coeff *= sx,
        }
    }
    Ok((coeff, out))
}

fn pauli_matrix(k: u8) -> CMatrix {
    let z = Complex64::new(0.0, 0.0);
    let o = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    match k {
        1 => CMatrix::from_row_slice(2, 2, &[z, o, o, z]),
        2 => CMatrix::from_row_slice(2, 2, &[z, -i, i, z]),
        3 => CMatrix::from_row_slice(2, 2, &[o, z, z, -o]),
        _ => CMatrix::identity(2, 2),
    }
}

/// `‖[M_n, A]‖` with `M_n = (2n+1)⁻¹ Σ_{|x|≤n} σ₃(x)`, computed on the tensor factor of `supp A`.
pub fn magnetization_commutator_norm(a: &PauliMonomial, n: u32) -> f64 {
    let sites: Vec<(i64, u8)> = a.factors.iter().map(|(x, k)| (*x, *k)).collect();
    if sites.is_empty() {
        return 0.0;
    }
    let kron = |pick: &dyn Fn(usize) -> CMatrix| {
        (0..sites.len()).fold(CMatrix::identity(1, 1), |acc, j| acc.kronecker(&pick(j)))
    };
    let op_a = kron(&|j| pauli_matrix(sites[j].1));
    let dim = op_a.nrows();
    let mut m = CMatrix::zeros(dim, dim);
    for (j, (x, _)) in sites.iter().enumerate() {
        if x.unsigned_abs() <= u64::from(n) {
            m += kron(&|l| if l == j { pauli_matrix(3) } else { pauli_matrix(0) });
        }
    }
    let comm = (&m * &op_a - &op_a * &m) / Complex64::new(f64::from(2 * n + 1), 0.0);
    op_norm(&comm)
}

/// `⟨bra|A|ket⟩`; exactly zero when the tails differ, since no monomial touches them.
pub fn sector_overlap(bra: &TailState, a: &PauliMonomial, ket: &TailState) -> Result<Complex64, ChainError> {
    if bra.n != ket.n {
        return Err(ChainError::WindowMismatch);
    }
    if !bra.same_tails(ket) {
        if let Some(&x) = a.factors.keys().find(|x| x.abs() > ket.n) {
            return Err(ChainError::SupportOutsideWindow { site: x, n: ket.n });
        }
        return Ok(Complex64::new(0.0, 0.0));
    }
    let (c, out) = apply_pauli(a, ket)?;
    Ok(if out.bits == bra.bits { c } else { Complex64::new(0.0, 0.0) })
}
