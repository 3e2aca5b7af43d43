use proptest::prelude::*;
use sector_kit::chain::{apply_pauli, magnetization_commutator_norm, sector_overlap, PauliMonomial, TailState};
use sector_kit::Complex64;

#[test]
fn differing_tails_never_overlap() {
    let window = [-2, -1, 0, 1, 2];
    let tails = [(1, 1), (1, -1), (-1, 1), (-1, -1)];
    let monomials = PauliMonomial::all_on(&window);
    for &(l1, r1) in &tails {
        for &(l2, r2) in &tails {
            if (l1, r1) == (l2, r2) {
                continue;
            }
            let bra = TailState::new(2, vec![1, -1, 1, 1, -1], l1, r1).unwrap();
            let ket = TailState::new(2, vec![1, -1, 1, 1, -1], l2, r2).unwrap();
            for a in &monomials {
                assert_eq!(sector_overlap(&bra, a, &ket).unwrap(), Complex64::new(0.0, 0.0));
            }
        }
    }
}

fn monomial() -> impl Strategy<Value = PauliMonomial> {
    prop::collection::btree_map(-3i64..=3, 1u8..=3, 1..=3).prop_map(|m| PauliMonomial::new(m).unwrap())
}

proptest! {
    #[test]
    fn commutator_norm_bound(a in monomial(), n in 3u32..=50) {
        let got = magnetization_commutator_norm(&a, n);
        let support = a.support().len() as f64;
        prop_assert!(got <= 2.0 * support / f64::from(2 * n + 1) + 1e-14);
        // σ₃ factors commute with M_n; σ₁, σ₂ factors contribute 2 each
        let flips = a.factors().values().filter(|&&k| k != 3).count() as f64;
        prop_assert!((got - 2.0 * flips / f64::from(2 * n + 1)).abs() < 1e-13);
    }

    #[test]
    fn pauli_squares_are_identity(a in monomial(), bits in prop::collection::vec(prop::bool::ANY, 7)) {
        let s = TailState::new(3, bits.iter().map(|&b| if b { 1 } else { -1 }).collect(), 1, -1).unwrap();
        let (c1, s1) = apply_pauli(&a, &s).unwrap();
        let (c2, s2) = apply_pauli(&a, &s1).unwrap();
        prop_assert_eq!(s2, s.clone());
        prop_assert!((c1 * c2 - 1.0).norm() < 1e-15);
        prop_assert_eq!(sector_overlap(&s, &PauliMonomial::identity(), &s).unwrap(), Complex64::new(1.0, 0.0));
    }
}
