use std::collections::BTreeMap;

use num_complex::Complex64;

use super::{RapidityGrid, SMatrixModel, WedgeError};

/// Vector in the truncated Fock space over a rapidity grid.
///
/// A key `[k_1 ≤ … ≤ k_n]` of grid indices stands for the ordered product
/// `a*(θ_{k_n})…a*(θ_{k_1})Ω`, largest rapidity first. The discretized
/// commutator is `[a_k, a*_l] = δ_kl / w_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedFockState {
    pub n_max: usize,
    pub amplitudes: BTreeMap<Vec<usize>, Complex64>,
}

impl TruncatedFockState {
    pub fn vacuum(n_max: usize) -> Self {
        Self::basis(n_max, Vec::new())
    }

    pub fn zero(n_max: usize) -> Self {
        Self { n_max, amplitudes: BTreeMap::new() }
    }

    pub fn basis(n_max: usize, mut key: Vec<usize>) -> Self {
        key.sort_unstable();
        let mut s = Self::zero(n_max);
        s.amplitudes.insert(key, Complex64::new(1.0, 0.0));
        s
    }

    pub fn amplitude(&self, key: &[usize]) -> Complex64 {
        let mut k = key.to_vec();
        k.sort_unstable();
        self.amplitudes.get(&k).copied().unwrap_or_default()
    }

    fn add_term(&mut self, key: Vec<usize>, c: Complex64) {
        *self.amplitudes.entry(key).or_default() += c;
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.amplitudes {
            out.add_term(k.clone(), *v);
        }
        out
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self { n_max: self.n_max, amplitudes: self.amplitudes.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn max_abs(&self) -> f64 {
        self.amplitudes.values().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn max_particles(&self) -> usize {
        self.amplitudes.iter().filter(|(_, v)| v.norm() > 0.0).map(|(k, _)| k.len()).max().unwrap_or(0)
    }

    /// `⟨self, other⟩` with the Gram weights of the ordered basis.
    pub fn inner(&self, other: &Self, grid: &RapidityGrid, model: &SMatrixModel) -> Complex64 {
        let bosonic = model.at_zero_sign() > 0.0;
        self.amplitudes
            .iter()
            .filter_map(|(k, a)| other.amplitudes.get(k).map(|b| a.conj() * b * gram(k, grid, bosonic)))
            .sum()
    }

    pub fn norm(&self, grid: &RapidityGrid, model: &SMatrixModel) -> f64 {
        self.inner(self, grid, model).re.max(0.0).sqrt()
    }
}

fn gram(key: &[usize], grid: &RapidityGrid, bosonic: bool) -> f64 {
    let mut g = 1.0;
    let mut run = 0usize;
    for (i, &k) in key.iter().enumerate() {
        g /= grid.weight(k);
        run = if i > 0 && key[i - 1] == k { run + 1 } else { 1 };
        if bosonic {
            g *= run as f64;
        }
    }
    g
}

/// `Z*(θ_k)`: inserts `k` behind every larger rapidity, collecting `S(θ_k - θ_j)` for each one passed.
pub fn zf_create(
    k: usize,
    state: &TruncatedFockState,
    model: &SMatrixModel,
    grid: &RapidityGrid,
) -> Result<TruncatedFockState, WedgeError> {
    let bosonic = model.at_zero_sign() > 0.0;
    let mut out = TruncatedFockState::zero(state.n_max);
    for (key, c) in &state.amplitudes {
        if key.len() >= state.n_max {
            return Err(WedgeError::FockCapExceeded { n_max: state.n_max });
        }
        if !bosonic && key.contains(&k) {
            continue;
        }
        let th = grid.theta(k);
        let phase: Complex64 = key.iter().filter(|&&j| j > k).map(|&j| model.at(th - grid.theta(j))).product();
        let mut nk = key.clone();
        let pos = nk.partition_point(|&j| j <= k);
        nk.insert(pos, k);
        out.add_term(nk, c * phase);
    }
    Ok(out)
}

/// `Z(θ_k)`, the adjoint of `zf_create` in the Gram inner product.
pub fn zf_annihilate(
    k: usize,
    state: &TruncatedFockState,
    model: &SMatrixModel,
    grid: &RapidityGrid,
) -> TruncatedFockState {
    let bosonic = model.at_zero_sign() > 0.0;
    let mut out = TruncatedFockState::zero(state.n_max);
    let th = grid.theta(k);
    for (key, c) in &state.amplitudes {
        let Some(pos) = key.iter().position(|&j| j == k) else { continue };
        let mut nk = key.clone();
        nk.remove(pos);
        let phase: Complex64 = nk.iter().filter(|&&j| j > k).map(|&j| model.at(th - grid.theta(j))).product();
        let mult = if bosonic { key.iter().filter(|&&j| j == k).count() as f64 } else { 1.0 };
        out.add_term(nk, c * phase.conj() * (mult / grid.weight(k)));
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZfReport {
    pub exchange: f64,
    pub annihilation: f64,
    pub states_checked: usize,
}

impl ZfReport {
    pub fn max(&self) -> f64 {
        self.exchange.max(self.annihilation)
    }
}

/// All keys of at most `n` particles drawn from `pool`.
pub fn basis_keys(pool: &[usize], n: usize, bosonic: bool) -> Vec<Vec<usize>> {
    let mut pool = pool.to_vec();
    pool.sort_unstable();
    pool.dedup();
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::<usize>::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for key in &frontier {
            let last = key.last().copied();
            for &p in &pool {
                let ok = match last {
                    None => true,
                    Some(l) => if bosonic { p >= l } else { p > l },
                };
                if ok {
                    let mut k = key.clone();
                    k.push(p);
                    next.push(k);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Checks `Z*_k Z*_l = S(θ_k-θ_l) Z*_l Z*_k` and `Z_k Z*_l = S(θ_l-θ_k) Z*_l Z_k + δ_kl/w_k`
/// on every basis state of at most three particles built from `pool` and the pair.
pub fn zf_relations_check(
    model: &SMatrixModel,
    grid: &RapidityGrid,
    pairs: &[(usize, usize)],
    pool: &[usize],
) -> ZfReport {
    let bosonic = model.at_zero_sign() > 0.0;
    let mut rep = ZfReport { exchange: 0.0, annihilation: 0.0, states_checked: 0 };
    let n_max = 5;
    for &(k, l) in pairs {
        let mut p = pool.to_vec();
        p.extend([k, l]);
        let (tk, tl) = (grid.theta(k), grid.theta(l));
        for key in basis_keys(&p, 3, bosonic) {
            let psi = TruncatedFockState::basis(n_max, key);
            let create = |i: usize, s: &TruncatedFockState| zf_create(i, s, model, grid).expect("cap is large enough");
            let lhs = create(k, &create(l, &psi));
            let rhs = create(l, &create(k, &psi)).scale(model.at(tk - tl));
            rep.exchange = rep.exchange.max(lhs.sub(&rhs).max_abs());

            let lhs = zf_annihilate(k, &create(l, &psi), model, grid);
            let mut rhs = create(l, &zf_annihilate(k, &psi, model, grid)).scale(model.at(tl - tk));
            if k == l {
                rhs = rhs.add(&psi.scale(Complex64::new(1.0 / grid.weight(k), 0.0)));
            }
            // compare in units of the δ term
            rep.annihilation = rep.annihilation.max(lhs.sub(&rhs).max_abs() * grid.weight(k));
            rep.states_checked += 1;
        }
    }
    rep
}

/// `‖N^{-1/2} Σ_k w_k f_k Z*_k ψ‖ / ((f,f)^{1/2}‖ψ‖)`, which must not exceed one.
pub fn norm_bound_ratio(
    model: &SMatrixModel,
    grid: &RapidityGrid,
    f: &[Complex64],
    psi: &TruncatedFockState,
) -> Result<f64, WedgeError> {
    let mut out = TruncatedFockState::zero(psi.n_max);
    for (k, fk) in f.iter().enumerate() {
        if fk.norm() == 0.0 {
            continue;
        }
        out = out.add(&zf_create(k, psi, model, grid)?.scale(fk * grid.weight(k)));
    }
    for (key, v) in out.amplitudes.iter_mut() {
        *v /= (key.len() as f64).sqrt();
    }
    let ff: f64 = f.iter().enumerate().map(|(k, v)| grid.weight(k) * v.norm_sqr()).sum();
    let denom = ff.sqrt() * psi.norm(grid, model);
    Ok(if denom == 0.0 { 0.0 } else { out.norm(grid, model) / denom })
}

/// Phase of the scattering operator on an ordered basis vector, `Π_{i>j} S(θ_i - θ_j)`
/// with `θ_1 ≥ θ_2 ≥ …`.
pub fn scattering_phase(key: &[usize], model: &SMatrixModel, grid: &RapidityGrid) -> Complex64 {
    let th: Vec<f64> = key.iter().rev().map(|&k| grid.theta(k)).collect();
    let mut p = Complex64::new(1.0, 0.0);
    for i in 0..th.len() {
        for j in 0..i {
            p *= model.at(th[i] - th[j]);
        }
    }
    p
}

/// Free modular conjugation: complex conjugation of ordered-basis amplitudes.
pub fn j0(state: &TruncatedFockState) -> TruncatedFockState {
    TruncatedFockState {
        n_max: state.n_max,
        amplitudes: state.amplitudes.iter().map(|(k, v)| (k.clone(), v.conj())).collect(),
    }
}

/// `J = S·J₀`.
pub fn interacting_j(state: &TruncatedFockState, model: &SMatrixModel, grid: &RapidityGrid) -> TruncatedFockState {
    let mut out = j0(state);
    for (k, v) in out.amplitudes.iter_mut() {
        *v *= scattering_phase(k, model, grid);
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConjugationReport {
    /// `max |J²ψ - ψ|` over basis states.
    pub involution: f64,
    /// `max |⟨Jφ, Jψ⟩ - conj⟨φ, ψ⟩|` over normalized basis pairs.
    pub antiunitarity: f64,
    /// `max |Jψ - J₀ψ|`; zero exactly when the model is free.
    pub distance_from_free: f64,
}

impl ConjugationReport {
    pub fn max(&self) -> f64 {
        self.involution.max(self.antiunitarity)
    }
}

pub fn scattering_conjugation_check(
    model: &SMatrixModel,
    grid: &RapidityGrid,
    pool: &[usize],
    n_max: usize,
) -> ConjugationReport {
    let bosonic = model.at_zero_sign() > 0.0;
    let keys = basis_keys(pool, n_max, bosonic);
    let mut rep = ConjugationReport { involution: 0.0, antiunitarity: 0.0, distance_from_free: 0.0 };
    let phase = Complex64::from_polar(1.0, 0.7);
    let states: Vec<TruncatedFockState> = keys
        .iter()
        .map(|k| {
            let s = TruncatedFockState::basis(n_max, k.clone()).scale(phase);
            let n = s.norm(grid, model);
            s.scale(Complex64::new(1.0 / n, 0.0))
        })
        .collect();
    let js: Vec<TruncatedFockState> = states.iter().map(|s| interacting_j(s, model, grid)).collect();
    for (s, js_) in states.iter().zip(&js) {
        rep.involution = rep.involution.max(interacting_j(js_, model, grid).sub(s).max_abs() / s.max_abs());
        rep.distance_from_free = rep.distance_from_free.max(js_.sub(&j0(s)).max_abs() / s.max_abs());
    }
    // mixed pairs exercise antilinearity beyond the diagonal
    for i in 0..states.len() {
        let a = states[i].add(&states[(i + 1) % states.len()].scale(Complex64::new(0.3, -0.4)));
        let b = states[(i + 2) % states.len()].add(&states[i].scale(Complex64::new(-0.2, 0.9)));
        let lhs = interacting_j(&a, model, grid).inner(&interacting_j(&b, model, grid), grid, model);
        let rhs = a.inner(&b, grid, model).conj();
        rep.antiunitarity = rep.antiunitarity.max((lhs - rhs).norm());
    }
    rep
}
