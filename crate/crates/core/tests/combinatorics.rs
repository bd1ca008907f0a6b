//! Cross-module properties of the tableau and Littlewood-Richardson layer.

use superschur::lr::{
    assemble, enumerate_marked, enumerate_pictures, is_lr_tableau, is_picture, lr_sum_identity,
    marked_to_picture, picture_to_marked, plus_shape,
};
use superschur::shapes::SkewShape;
use superschur::sweep::instances;

#[test]
fn marked_pairs_and_pictures_correspond() {
    for (m, n) in [(2, 2), (2, 3)] {
        for inst in instances(m, n, 5) {
            let omega = &inst.lambda.lambda_minus;
            let marked = enumerate_marked(&inst.lambda, &inst.mu, &inst.nu).unwrap();
            let domain = plus_shape(&inst.lambda, &inst.mu).unwrap();
            let image = SkewShape::new(inst.nu.clone(), omega.clone()).unwrap();
            let pictures = enumerate_pictures(&domain, &image);
            assert_eq!(marked.len(), pictures.len(), "{inst}");
            for pair in &marked {
                let f = marked_to_picture(pair, omega, m).unwrap();
                assert!(is_picture(&f));
                assert_eq!(picture_to_marked(&f, m).unwrap().t_plus, pair.t_plus);
            }
            let (_, rhs) = lr_sum_identity(&inst.lambda, &inst.mu, &inst.nu);
            assert_eq!(marked.len() as u64, rhs, "{inst}");
        }
    }
}

#[test]
fn typical_marked_tableaux_are_lr_tableaux() {
    for (m, n) in [(2, 2), (2, 3), (3, 2)] {
        for inst in instances(m, n, 6) {
            if !inst.lambda.is_typical() {
                continue;
            }
            let omega = &inst.lambda.lambda_minus;
            let marked = enumerate_marked(&inst.lambda, &inst.mu, &inst.nu).unwrap();
            for pair in &marked {
                let full = assemble(&pair.t_plus, omega, m).unwrap();
                assert!(is_lr_tableau(&full, m), "{inst} {}", pair.t_plus);
            }
            let (lr, _) = lr_sum_identity(&inst.lambda, &inst.mu, &inst.nu);
            assert_eq!(marked.len() as u64, lr, "{inst}");
        }
    }
}
