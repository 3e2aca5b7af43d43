use std::f64::consts::PI;

use proptest::prelude::*;
use sector_kit::braid::{
    all_diagrams, braid_markov_trace, gram_matrix, jones_wenzl, markov_trace, min_eigenvalue, positivity_scan,
    BraidError, HeckeParams, ScanConfig, TLElement,
};
use sector_kit::Complex64;

fn catalan(n: usize) -> usize {
    (0..n).fold(1usize, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

/// Normalized trace of the Jones-Wenzl projector on `m` strands from the
/// unnormalized closure recursion `T_{m+1} = δ T_m - T_{m-1}`.
fn chebyshev_trace(delta: f64, m: usize) -> f64 {
    let (mut prev, mut cur) = (1.0, delta);
    for _ in 1..m {
        let next = delta * cur - prev;
        prev = cur;
        cur = next;
    }
    cur / delta.powi(m as i32)
}

#[test]
fn diagram_counts_are_catalan() {
    for n in 0..=10 {
        assert_eq!(all_diagrams(n).len(), catalan(n), "n = {n}");
    }
}

#[test]
fn gram_matrices_are_positive_at_roots_of_unity() {
    for q in 4..=7 {
        let delta = 2.0 * (PI / q as f64).cos();
        for n in 1..=6 {
            assert!(min_eigenvalue(&gram_matrix(n, delta)) >= -1e-9, "q={q} n={n}");
        }
    }
}

#[test]
fn jones_wenzl_hits_the_cutoff() {
    // at q = 5 the projector on 4 strands has zero trace and the next step divides by [5] = 0
    let p = HeckeParams::from_q(Some(5), 1.0);
    assert!(markov_trace(&jones_wenzl(3, &p).unwrap()).norm() < 1e-12);
    match jones_wenzl(4, &p) {
        Err(BraidError::CutoffReached { level, .. }) => assert_eq!(level, 5),
        other => panic!("expected cutoff, got {other:?}"),
    }
}

#[test]
fn small_scan_finds_only_quantized_points() {
    let alphas: Vec<f64> = (0..=20).map(|i| i as f64 * 0.035).collect();
    let etas: Vec<f64> = (0..=100).map(|i| i as f64 * 0.01).collect();
    for s in positivity_scan(&alphas, &etas, &ScanConfig::default(), 12) {
        assert!(s.nearest.alpha_distance < 0.035 && s.nearest.eta_distance <= 0.01 + 1e-12, "{s:?}");
    }
}

fn word(n: usize) -> impl Strategy<Value = Vec<i32>> {
    let g = (1..n as i32).prop_flat_map(|k| prop_oneof![Just(k), Just(-k)]);
    prop::collection::vec(g, 0..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn jones_wenzl_trace_matches_chebyshev(alpha in 0.05f64..1.45, n in 0usize..=6) {
        let p = HeckeParams::from_alpha(alpha);
        let jw = match jones_wenzl(n, &p) {
            Ok(x) => x,
            Err(BraidError::CutoffReached { .. }) => return Ok(()),
            Err(e) => panic!("{e}"),
        };
        let want = chebyshev_trace(p.delta(), n + 1);
        prop_assert!((markov_trace(&jw).re - want).abs() < 1e-9 * want.abs().max(1.0));
        // annihilated by every E_i, and idempotent
        for i in 1..=n {
            let e = TLElement::e(n + 1, i, p.delta()).unwrap();
            prop_assert!(e.mul(&jw).unwrap().max_abs() < 1e-9 * jw.max_abs().max(1.0) * 1e3);
        }
        prop_assert!(jw.mul(&jw).unwrap().distance(&jw).unwrap() < 1e-8 * jw.max_abs().max(1.0) * 1e3);
    }

    #[test]
    fn markov_moves(q in 4u32..=8, w in word(3), v in word(3)) {
        let p = HeckeParams::from_q(Some(q), 1.0);
        let n = 3;
        // conjugation: tr(v w v⁻¹) = tr(w)
        let mut conj = v.clone();
        conj.extend(&w);
        conj.extend(v.iter().rev().map(|k| -k));
        let a = braid_markov_trace(&w, n, &p).unwrap();
        let b = braid_markov_trace(&conj, n, &p).unwrap();
        prop_assert!((a - b).norm() < 1e-9 * a.norm().max(1.0));
        // stabilization: tr(w g_n^{±1}) = tr(g^{±1}) tr(w)
        for s in [1i32, -1] {
            let mut st = w.clone();
            st.push(s * n as i32);
            let lhs = braid_markov_trace(&st, n + 1, &p).unwrap();
            let factor: Complex64 = braid_markov_trace(&[s], 2, &p).unwrap();
            prop_assert!((lhs - factor * a).norm() < 1e-9 * a.norm().max(1.0));
        }
        prop_assert!((braid_markov_trace(&[1], 2, &p).unwrap() - p.statistics_parameter()).norm() < 1e-12);
    }
}
