use proptest::prelude::*;
use sector_kit::group::{
    character_table, class_fusion, conjugacy_classes, enumerate_group, library, rep_fusion, verify_s_relations,
    FiniteGroupData,
};
use sector_kit::linalg::{max_abs_diff, unitarity_residual};
use sector_kit::Complex64;

/// Class fusion by brute-force convolution over all element pairs.
fn convolution_oracle(g: &FiniteGroupData) -> Vec<Vec<Vec<u64>>> {
    let cl = conjugacy_classes(g);
    let r = cl.class_count();
    let mut count = vec![vec![vec![0u64; r]; r]; r];
    for a in 0..g.order() {
        for b in 0..g.order() {
            count[cl.class_of[a]][cl.class_of[b]][cl.class_of[g.mul(a, b)]] += 1;
        }
    }
    for i in 0..r {
        for j in 0..r {
            for l in 0..r {
                count[i][j][l] /= cl.sizes[l] as u64;
            }
        }
    }
    count
}

fn check_group(g: &FiniteGroupData) {
    let cl = conjugacy_classes(g);
    let f = class_fusion(g, &cl).unwrap();
    assert!(f.matrices_commute());
    let oracle = convolution_oracle(g);
    let r = cl.class_count();
    for i in 0..r {
        for j in 0..r {
            for l in 0..r {
                assert_eq!(f.get(i, j, l), oracle[i][j][l], "N_{i}{j}^{l}");
            }
        }
    }
    let t = character_table(g, &cl, &f).unwrap();
    for k in 0..r {
        for l in 0..r {
            let s: Complex64 = (0..r).map(|j| t.chi[(k, j)] * t.chi[(l, j)].conj() * cl.sizes[j] as f64).sum();
            let want = if k == l { 1.0 } else { 0.0 };
            assert!((s / g.order() as f64 - want).norm() < 1e-9);
        }
    }
    assert!(unitarity_residual(&t.s_matrix) < 1e-9);
    if g.is_abelian() {
        assert!(max_abs_diff(&t.s_matrix, &t.s_matrix.transpose()) < 1e-9);
    }
    let rf = rep_fusion(&t).unwrap();
    assert!(verify_s_relations(&t, &f, &rf).max() < 1e-9);
    assert_eq!(t.dims.iter().map(|d| d * d).sum::<usize>(), g.order());
}

#[test]
fn library_groups() {
    for name in ["trivial", "z2", "z3", "z4", "s3", "s4", "d4", "q8", "a4"] {
        check_group(&library::by_name(name).unwrap());
    }
}

#[test]
fn s3_example() {
    let g = enumerate_group(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
    let cl = conjugacy_classes(&g);
    assert_eq!(g.order(), 6);
    assert_eq!(cl.sizes, vec![1, 3, 2]);
    let t = character_table(&g, &cl, &class_fusion(&g, &cl).unwrap()).unwrap();
    assert_eq!(t.dims, vec![1, 1, 2]);
}

fn permutation(degree: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..degree).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_permutation_groups(gens in (2usize..=5).prop_flat_map(|d| prop::collection::vec(permutation(d), 1..=2))) {
        let degree = gens[0].len();
        let g = enumerate_group(degree, &gens).unwrap();
        check_group(&g);
    }
}
