use proptest::prelude::*;
use sector_kit::wedge::{
    basis_keys, crossing_check, default_bumps, kms_fourpoint_check, norm_bound_ratio, wedge_wave, zf_create,
    AnalyticWave, GaussianBump, OneParticleWave, PremodularOp, RapidityGrid, SMatrixModel, SpacetimeQuadrature,
    TruncatedFockState, Wedge,
};
use sector_kit::Complex64;

#[test]
fn decreasing_application_gives_the_ordered_basis() {
    let g = RapidityGrid::new(3.0, 13, 1.0);
    for m in [SMatrixModel::Free, SMatrixModel::Ising, SMatrixModel::SinhGordon { b: 0.7 }] {
        let bosonic = m.at_zero_sign() > 0.0;
        for key in basis_keys(&[1, 4, 9, 12], 4, bosonic) {
            // smallest rapidity first, so the largest one ends up in front
            let mut s = TruncatedFockState::vacuum(4);
            for &k in &key {
                s = zf_create(k, &s, &m, &g).unwrap();
            }
            assert_eq!(s.amplitude(&key), Complex64::new(1.0, 0.0), "{m:?} {key:?}");
            assert_eq!(s.amplitudes.len(), 1);
        }
    }
}

#[test]
fn crossing_and_kms_agree() {
    let g = RapidityGrid::new(6.0, 241, 1.0);
    let quad = SpacetimeQuadrature::default();
    let models = [
        SMatrixModel::Free,
        SMatrixModel::Ising,
        SMatrixModel::SinhGordon { b: 0.4 },
        SMatrixModel::SinhGordon { b: 1.3 },
        SMatrixModel::Deformed { base: Box::new(SMatrixModel::Free), epsilon: 0.1 },
        SMatrixModel::Deformed { base: Box::new(SMatrixModel::SinhGordon { b: 0.4 }), epsilon: -0.2 },
    ];
    for m in models {
        let crossing = crossing_check(&m, &g).unwrap() < 1e-12;
        let kms = kms_fourpoint_check(&m, &default_bumps(), &g, &g, &quad).unwrap().residual < 1e-6;
        assert_eq!(crossing, kms, "{m:?}");
    }
}

#[test]
fn reflected_bump_is_in_the_symplectic_complement() {
    let g = RapidityGrid::default();
    let quad = SpacetimeQuadrature::default();
    let right = [GaussianBump::new(2.5, 0.0, 0.3), GaussianBump::new(2.8, 0.4, 0.3), GaussianBump::new(3.2, -0.6, 0.35)];
    let left = AnalyticWave::from_bump(&right[0].reflected(), Wedge::Left, g.mass, &quad).unwrap().on_grid(&g);
    for f in &right {
        let (_, phi) = wedge_wave(f, &g, &quad).unwrap();
        let ip = left.inner(&phi, &g);
        assert!(ip.im.abs() < 1e-6 * left.norm(&g) * phi.norm(&g), "{ip}");
    }
    let zero = wedge_wave(&GaussianBump::zero(), &g, &quad).unwrap().1;
    assert_eq!(zero.max_abs(), 0.0);
}

fn bump() -> impl Strategy<Value = GaussianBump> {
    (2.4f64..3.5, -0.5f64..0.5, 0.25f64..0.35).prop_map(|(x, t, w)| GaussianBump::new(x, t, w))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn s_is_an_involution_fixing_real_waves(f in bump()) {
        let g = RapidityGrid::new(6.0, 61, 1.0);
        let quad = SpacetimeQuadrature::default();
        let (w, v) = wedge_wave(&f, &g, &quad).unwrap();
        let s = w.apply(PremodularOp::S);
        prop_assert!(s.on_grid(&g).max_abs_diff(&v) < 1e-8 * v.max_abs());
        prop_assert!(s.apply(PremodularOp::S).on_grid(&g).max_abs_diff(&v) < 1e-8 * v.max_abs());
        let jj = w.apply(PremodularOp::J).apply(PremodularOp::J).on_grid(&g);
        prop_assert!(jj.max_abs_diff(&v) < 1e-12 * v.max_abs());
    }

    #[test]
    fn j_is_an_involution_on_grid_waves(vals in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 31)) {
        let g = RapidityGrid::new(3.0, 31, 1.0);
        let v = OneParticleWave::new(vals.into_iter().map(|(a, b)| Complex64::new(a, b)).collect());
        let j = sector_kit::wedge::premodular_apply(PremodularOp::J, &v, &g).unwrap();
        let jj = sector_kit::wedge::premodular_apply(PremodularOp::J, &j, &g).unwrap();
        prop_assert!(jj.max_abs_diff(&v) < 1e-12);
        prop_assert!((j.inner(&j, &g) - v.inner(&v, &g)).norm() < 1e-12);
    }

    #[test]
    fn creation_obeys_the_norm_bound(
        b in 0.0f64..2.0,
        key in prop::collection::btree_set(0usize..21, 0..=3),
        phases in prop::collection::vec(-3.0f64..3.0, 21),
    ) {
        let g = RapidityGrid::new(2.0, 21, 1.0);
        let f: Vec<Complex64> = g.thetas().iter().zip(&phases).map(|(t, p)| Complex64::from_polar((-t * t).exp(), *p)).collect();
        for m in [SMatrixModel::Free, SMatrixModel::SinhGordon { b }] {
            let psi = TruncatedFockState::basis(4, key.iter().copied().collect());
            let r = norm_bound_ratio(&m, &g, &f, &psi).unwrap();
            prop_assert!(r <= 1.0 + 1e-12, "{:?} ratio {}", m, r);
        }
    }
}
