//! Integration tests for the primitive-vector construction.

use superschur::lr::{enumerate_marked, CellBijection};
use superschur::par::Parallelism;
use superschur::primitive::*;
use superschur::shapes::{Cell, HookSplit, Partition, SkewShape};
use superschur::sweep::{instances, run_sweep};
use superschur::tableaux::SkewTableau;

fn p(parts: &[usize]) -> Partition {
    Partition::from_slice(parts)
}

fn hook(m: usize, n: usize, plus: &[usize], minus: &[usize]) -> HookSplit {
    HookSplit::new(m, n, p(plus), p(minus)).unwrap()
}

/// `((row, col), (row, col))` from a `T⁺` cell to a `𝒟⁻` cell.
type CellPair = ((usize, usize), (usize, usize));

fn bijection(domain: &SkewShape, image: SkewShape, pairs: &[CellPair]) -> CellBijection {
    CellBijection::new(
        domain.clone(),
        image,
        pairs
            .iter()
            .map(|&((a, b), (c, d))| (Cell::new(a, b), Cell::new(c, d))),
    )
    .unwrap()
}

#[test]
fn worked_tableau_gives_nonzero_weight_homogeneous_vector() {
    let lambda = hook(2, 3, &[2, 2], &[1, 1]);
    let t = SkewTableau::parse(". 4 / 3 5").unwrap();
    let image = SkewShape::new(p(&[2, 2, 1]), p(&[1, 1])).unwrap();
    let rpos = bijection(
        t.shape(),
        image,
        &[((1, 2), (2, 2)), ((2, 1), (1, 2)), ((2, 2), (3, 1))],
    );
    let v = build_primitive(&lambda, &t, &rpos).unwrap();
    assert!(!v.expression.is_zero());
    assert_eq!(v.multiindex.len(), 3);
    assert_eq!(v.weight, vec![1, 0, 2, 2, 1]);
    assert_eq!(v.expression.degree(), Some(3));
    for w in v.expression.term_weights().unwrap() {
        assert_eq!(w, v.weight);
    }
}

#[test]
fn every_swept_vector_is_weight_homogeneous() {
    for inst in instances(2, 2, 4) {
        for pair in enumerate_marked(&inst.lambda, &inst.mu, &inst.nu).unwrap() {
            let v = build_primitive(&inst.lambda, &pair.t_plus, &pair.rpos).unwrap();
            for w in v.expression.term_weights().unwrap() {
                assert_eq!(w, v.weight, "{inst} {}", pair.t_plus);
            }
        }
    }
}

#[test]
fn sigma_route_matches_tau_route() {
    for (m, n, s) in [(2, 2, 4), (2, 3, 4), (3, 2, 4)] {
        for inst in instances(m, n, s) {
            for pair in enumerate_marked(&inst.lambda, &inst.mu, &inst.nu).unwrap() {
                if pair.t_plus.shape().cells().len() > 3 {
                    continue;
                }
                let mi = q_plus(&pair.t_plus, m);
                let shape = pair.t_plus.shape().clone();
                let p_plus = shape.cells_column_major();
                let p_minus = p_plus.iter().map(|&c| pair.rpos.apply(c)).collect();
                let pos = Positioning {
                    plus_shape: shape,
                    minus_shape: pair.rpos.image().clone(),
                    p_plus,
                    p_minus,
                };
                let sigma = sigma_tensor(&mi, &pos).unwrap().to_wedge();
                let via_tau = rho_bar_of_sum(&tau(&pair.t_plus, &pair.rpos, m).unwrap(), m);
                let mut negated = RhoSum::new();
                for (k, c) in via_tau.terms() {
                    negated.add(k, -c);
                }
                assert!(
                    sigma == via_tau || sigma == negated,
                    "{inst} {}",
                    pair.t_plus
                );
            }
        }
    }
}

#[test]
fn sigma_route_clears_denominators_for_admissible_multiindices() {
    let lambda = hook(2, 2, &[3, 2], &[2, 1]);
    let mut checked = 0;
    for k in 1..=3usize {
        let choices: Vec<(usize, usize)> =
            (1..=2).flat_map(|i| (1..=2).map(move |j| (i, j))).collect();
        let mut stack = vec![Vec::new()];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == k {
                let mi = MultiIndex::new(prefix, 2, 2).unwrap();
                if is_left_admissible(&mi, &lambda) && is_right_admissible(&mi, &lambda) {
                    for pos in [
                        default_positioning(&lambda, &mi),
                        reversed_positioning(&lambda, &mi),
                    ] {
                        assert!(check_p1_division(&lambda, &mi, &pos.unwrap()).unwrap());
                        checked += 1;
                    }
                }
                continue;
            }
            for &c in &choices {
                let mut next = prefix.clone();
                next.push(c);
                stack.push(next);
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn insignificant_pair_vanishes() {
    let t = SkewTableau::parse("3 4").unwrap();
    let image = SkewShape::straight(p(&[1, 1]));
    let rpos = bijection(t.shape(), image, &[((1, 1), (1, 1)), ((1, 2), (2, 1))]);
    assert!(is_insignificant(&rpos));
    assert!(rho_bar_of_sum(&tau(&t, &rpos, 2).unwrap(), 2).is_zero());
    let unsigned = tau_plus(&tau_minus_unsigned(&t, &rpos, 2).unwrap());
    assert!(!rho_bar_of_sum(&unsigned, 2).is_zero());
}

#[test]
fn marked_pairs_satisfy_leading_term_and_closure() {
    for (m, n) in [(2, 2), (2, 3), (3, 2)] {
        for inst in instances(m, n, 4) {
            for pair in enumerate_marked(&inst.lambda, &inst.mu, &inst.nu).unwrap() {
                assert!(!is_insignificant(&pair.rpos));
                assert!(leading_term_holds(&pair.t_plus, &pair.rpos, m, n).unwrap());
                assert!(disjoint_holds(&pair.t_plus, &pair.rpos, m).unwrap());
            }
        }
    }
}

#[test]
fn perturbation_breaks_primitivity() {
    for inst in instances(2, 2, 4) {
        for pair in enumerate_marked(&inst.lambda, &inst.mu, &inst.nu).unwrap() {
            let v = build_primitive(&inst.lambda, &pair.t_plus, &pair.rpos).unwrap();
            assert!(verify_even_primitive(&v.expression).unwrap().all_zero());
            let bad = perturb(&v.expression);
            assert!(!verify_even_primitive(&bad).unwrap().all_zero(), "{inst}");
        }
    }
}

#[test]
fn sweep_at_two_two_is_primitive_and_independent() {
    let outcomes = run_sweep(2, 2, 4, true, Parallelism::Sequential);
    assert!(!outcomes.is_empty());
    for o in &outcomes {
        assert!(o.passes(), "{}", o.instance);
        assert_eq!(o.zero_vectors, 0);
    }
}
