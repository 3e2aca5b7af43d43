use nalgebra::DMatrix;

use super::diagram::{all_diagrams, markov_trace, TLElement};
use super::params::{wenzl_coefficient, HeckeParams};
use super::BraidError;

const CUTOFF_TOL: f64 = 1e-12;

/// `E^{(n+1)}` on `n+1` strands from the Wenzl recursion
///
/// ```text
/// E^{(1)} = 1,   E^{(m+1)} = ρ(E^{(m)}) - c_m ρ(E^{(m)}) E_1 ρ(E^{(m)})
/// ```
///
/// with `c_m = 2cosα sin mα / sin(m+1)α`. When `sin(m+1)α` vanishes the
/// recursion degenerates to `E^{(m+1)} = ρ(E^{(m)})`; that element is returned
/// inside [`BraidError::CutoffReached`].
pub fn jones_wenzl(n: usize, params: &HeckeParams) -> Result<TLElement, BraidError> {
    let delta = params.delta();
    let mut p = TLElement::identity(1, delta);
    for m in 1..=n {
        let shifted = p.shift();
        if params.alpha != 0.0 && ((m as f64 + 1.0) * params.alpha).sin().abs() < CUTOFF_TOL {
            return Err(BraidError::CutoffReached { level: m + 1, degenerate: Box::new(shifted) });
        }
        let c = wenzl_coefficient(params.alpha, m);
        let e1 = TLElement::e(m + 1, 1, delta)?;
        let sandwich = shifted.mul(&e1)?.mul(&shifted)?;
        p = shifted.sub(&sandwich.scale(c.into()))?;
    }
    Ok(p)
}

/// Markov traces `tr(E^{(m)})` for `m = 1..=strands`, from the scalar
/// recursion `tr E^{(m+1)} = tr E^{(m)} (1 - c_m τ)`.
pub fn jw_trace_sequence(params: &HeckeParams, strands: usize) -> Vec<f64> {
    let tau = params.tau();
    let mut out = Vec::with_capacity(strands);
    let mut tr = 1.0;
    for m in 1..=strands {
        out.push(tr);
        tr *= 1.0 - wenzl_coefficient(params.alpha, m) * tau;
    }
    out
}

/// `G[D, D'] = tr(D* D')` over the diagram basis at `n` strands.
pub fn gram_matrix(n: usize, delta: f64) -> DMatrix<f64> {
    let basis = all_diagrams(n);
    let k = basis.len();
    let mut g = DMatrix::zeros(k, k);
    for a in 0..k {
        let adj = basis[a].adjoint();
        for b in a..k {
            let (d, loops) = adj.compose(&basis[b]);
            let x = TLElement::from_diagram(d, delta, (delta.powi(loops as i32)).into());
            let v = markov_trace(&x).re;
            g[(a, b)] = v;
            g[(b, a)] = v;
        }
    }
    g
}

pub fn min_eigenvalue(g: &DMatrix<f64>) -> f64 {
    g.clone().symmetric_eigenvalues().iter().copied().fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn first_step_is_complement() {
        let p = HeckeParams::from_q(Some(5), 1.0);
        let jw = jones_wenzl(1, &p).unwrap();
        let expected = TLElement::identity(2, p.delta()).sub(&TLElement::e(2, 1, p.delta()).unwrap()).unwrap();
        assert!(jw.distance(&expected).unwrap() < 1e-15);
    }

    #[test]
    fn annihilated_and_idempotent() {
        let p = HeckeParams::from_q(Some(5), 1.0);
        for n in 2..=3 {
            let jw = jones_wenzl(n, &p).unwrap();
            for i in 1..=n {
                let e = TLElement::e(n + 1, i, p.delta()).unwrap();
                assert!(e.mul(&jw).unwrap().max_abs() < 1e-12);
                assert!(jw.mul(&e).unwrap().max_abs() < 1e-12);
            }
            assert!(jw.mul(&jw).unwrap().distance(&jw).unwrap() < 1e-12);
        }
    }

    #[test]
    fn cutoff_at_q_four() {
        let p = HeckeParams::from_q(Some(4), 1.0);
        assert!((p.delta() - 2f64.sqrt()).abs() < 1e-15);
        let e3 = jones_wenzl(2, &p).unwrap();
        assert!(markov_trace(&e3).norm() < 1e-12);
        match jones_wenzl(3, &p) {
            Err(BraidError::CutoffReached { level, degenerate }) => {
                assert_eq!(level, 4);
                assert!(degenerate.distance(&e3.shift()).unwrap() < 1e-15);
            }
            other => panic!("expected cutoff, got {other:?}"),
        }
    }

    #[test]
    fn scalar_and_diagrammatic_traces_agree() {
        let p = HeckeParams::from_delta(1.9);
        let seq = jw_trace_sequence(&p, 6);
        for n in 0..6 {
            let tr = markov_trace(&jones_wenzl(n, &p).unwrap());
            assert!((tr.re - seq[n]).abs() < 1e-10, "n={n}");
        }
    }

    #[test]
    fn gram_is_psd_at_roots_of_unity() {
        for q in 4..=6 {
            let g = gram_matrix(4, 2.0 * (PI / q as f64).cos());
            assert!(min_eigenvalue(&g) > -1e-9);
        }
        // away from the discrete series positivity fails
        assert!(min_eigenvalue(&gram_matrix(4, 1.2)) < -1e-3);
    }
}
