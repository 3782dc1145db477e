mod common;

use unitform::oracle::{brute_force_equivalent, enumerate_standard_forms};
use unitform::{is_standard_form, standardize, Certificate, OracleBudget, OrderSpec, T0Matrix};

use common::*;

#[test]
fn oracle_relation_is_an_equivalence_on_two_by_two() {
    let budget = OracleBudget::default();
    let family = all_matrices(2, 2, 2);
    // symmetry and transitivity on a deterministic sample of pairs
    for (i, a) in family.iter().enumerate().step_by(4) {
        for b in family.iter().skip(i % 7).step_by(9) {
            let ab = brute_force_equivalent(a, b, &budget).unwrap();
            let ba = brute_force_equivalent(b, a, &budget).unwrap();
            assert_eq!(ab.is_some(), ba.is_some());
            let Some(ab) = ab else { continue };
            assert!(ab.inverse().verify(b, a).unwrap());
            for c in family.iter().step_by(11) {
                if let Some(bc) = brute_force_equivalent(b, c, &budget).unwrap() {
                    let ac = Certificate {
                        left: bc.left.compose(&ab.left).unwrap(),
                        right: ab.right.compose(&bc.right).unwrap(),
                    };
                    assert!(ac.verify(a, c).unwrap());
                }
            }
        }
    }
}

#[test]
fn standard_forms_cover_every_class() {
    let budget = OracleBudget::default();
    for (k, m, n) in [(2, 2, 2), (3, 2, 2), (1, 3, 3), (2, 1, 3)] {
        let order = OrderSpec::default_for(k).unwrap();
        let forms: Vec<T0Matrix> = enumerate_standard_forms(m, n, &order, &budget).unwrap().collect();
        for a in all_matrices(k, m, n) {
            let (s, cert) = standardize(&a, &order).unwrap();
            assert!(cert.verify(&a, &s).unwrap());
            assert!(forms.contains(&s));
            assert!(brute_force_equivalent(&a, &s, &budget).unwrap().is_some());
        }
    }
}

#[test]
fn identity_standardizes_within_its_class() {
    let budget = OracleBudget::default();
    for k in [1, 2, 4] {
        let order = OrderSpec::default_for(k).unwrap();
        assert_eq!(standardize(&T0Matrix::identity(k, 1).unwrap(), &order).unwrap().0, T0Matrix::identity(k, 1).unwrap());
        for n in [2, 3] {
            let id = T0Matrix::identity(k, n).unwrap();
            let (s, _) = standardize(&id, &order).unwrap();
            assert!(is_standard_form(&order, &s).0);
            assert!(brute_force_equivalent(&id, &s, &budget).unwrap().is_some());
        }
    }
}

#[test]
fn example_order_on_four_by_four_sample() {
    let order = example_order();
    let budget = OracleBudget {
        max_dim: 3,
        ..OracleBudget::default()
    };
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(11);
    for _ in 0..20 {
        let a = random_matrix(&mut rng, 4, 3, 3, 0.3);
        let (s, _) = standardize(&a, &order).unwrap();
        let found = brute_force_equivalent(&a, &s, &budget).unwrap().expect("equivalent");
        assert!(found.verify(&a, &s).unwrap());
    }
}
