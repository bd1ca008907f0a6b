//! Hook Schur polynomials: agreement of the three computation routes.

use proptest::prelude::*;
use superschur::characters::{
    hook_schur, hook_schur_coefficients, hook_schur_lr, hook_schur_tableaux,
    primitive_multiplicity, schur, skew_schur,
};
use superschur::lr::lr_coefficient;
use superschur::shapes::{conjugate, hook_partitions, hook_split, Partition, SkewShape};

#[test]
fn three_routes_agree_at_two_two() {
    for size in 0..=5 {
        for lambda in hook_partitions(size, 2, 2) {
            let split = hook_split(&lambda, 2, 2).unwrap();
            let by_tableaux = hook_schur_tableaux(&lambda, 2, 2).unwrap();
            assert_eq!(hook_schur(&split).unwrap(), by_tableaux, "{lambda}");
            assert_eq!(hook_schur_lr(&split), by_tableaux, "{lambda}");
            assert!(by_tableaux.is_block_symmetric());
        }
    }
}

#[test]
fn schur_expansion_matches_multiplicities() {
    for (m, n) in [(2, 2), (1, 2), (2, 1)] {
        for size in 1..=4 {
            for lambda in hook_partitions(size, m, n) {
                let split = hook_split(&lambda, m, n).unwrap();
                let expansion = hook_schur_tableaux(&lambda, m, n)
                    .unwrap()
                    .schur_expansion();
                let coeffs = hook_schur_coefficients(&split);
                assert_eq!(expansion.len(), coeffs.len(), "{lambda}");
                for (mu, nu, c) in coeffs {
                    assert_eq!(expansion[&(mu, nu)], c as i64);
                }
            }
        }
    }
}

#[test]
fn multiplicity_of_the_top_weight_is_one() {
    for lambda in hook_partitions(5, 2, 2) {
        let split = hook_split(&lambda, 2, 2).unwrap();
        let mu = split.lambda_plus.clone();
        let nu = split.lambda_minus.clone();
        assert_eq!(primitive_multiplicity(&split, &mu, &nu), 1, "{lambda}");
    }
}

#[test]
fn typical_multiplicity_counts_lr_tableaux() {
    let split = hook_split(&Partition::from_slice(&[3, 2, 1]), 2, 1).unwrap();
    assert!(split.is_typical());
    let lambda_c = conjugate(&split.lambda());
    for mu in split.lambda_plus.subpartitions() {
        let rest = split.lambda().size() - mu.size();
        for nu in Partition::all_of_size(rest, 1, usize::MAX) {
            assert_eq!(
                primitive_multiplicity(&split, &mu, &nu),
                lr_coefficient(&lambda_c, &conjugate(&mu), &nu)
            );
        }
    }
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..4, 0..4).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn specializations(lambda in partition(), k in 1usize..4) {
        if let Ok(h) = hook_schur_tableaux(&lambda, k, 0) {
            prop_assert_eq!(h, schur(&lambda, k));
        } else {
            prop_assert!(schur(&lambda, k).is_zero());
        }
        if let Ok(h) = hook_schur_tableaux(&lambda, 0, k) {
            prop_assert_eq!(h, schur(&conjugate(&lambda), k).into_y());
        } else {
            prop_assert!(schur(&conjugate(&lambda), k).is_zero());
        }
    }

    #[test]
    fn skew_schur_follows_the_lr_rule(alpha in partition(), k in 1usize..4) {
        for beta in alpha.subpartitions() {
            let shape = SkewShape::new(alpha.clone(), beta.clone()).unwrap();
            let direct = skew_schur(&shape, k);
            let mut via_lr = superschur::characters::SymPoly::zero(k, 0);
            for nu in Partition::all_of_size(alpha.size() - beta.size(), k, usize::MAX) {
                let c = lr_coefficient(&alpha, &beta, &nu) as i64;
                via_lr = via_lr.add(&schur(&nu, k).scale(c));
            }
            prop_assert_eq!(direct, via_lr);
        }
    }
}
