use super::*;
use crate::decomposition::{enumerate_labels, PartitionLabel};
use crate::embeddings::{build_l_q, Dressing};
use crate::fock::{FockVector, Grid, OccState};
use crate::presentations::Family;
use crate::scalars::Scalar;

fn grid(n: usize, m: usize) -> Grid {
    Grid::new(n, m).unwrap()
}

fn label(parts: &[usize]) -> PartitionLabel {
    PartitionLabel::new(parts.to_vec())
}

#[test]
fn vacuum_and_full_weights() {
    let g = grid(2, 2);
    assert_eq!(weight_of_state(&g, OccState(0)), WeightVec::from_ints(&[-1, -1]));
    let full = OccState((1 << g.sites()) - 1);
    for (n, m) in [(2, 2), (3, 1), (2, 3)] {
        let g = grid(n, m);
        let full = OccState((1 << g.sites()) - 1);
        assert_eq!(weight_of_state(&g, full), WeightVec::from_halves(&vec![m as i64; n]));
    }
    let lq = build_l_q(&g, Dressing::Undressed).unwrap();
    assert_eq!(weight_of_state_checked(&lq, full).unwrap(), WeightVec::from_ints(&[1, 1]));
}

#[test]
fn row_counts_give_weight() {
    let g = grid(2, 2);
    let s = OccState::from_sites([g.site(1, 1), g.site(1, 2), g.site(2, 1)]);
    assert_eq!(weight_of_state(&g, s), WeightVec::from_ints(&[1, 0]));
}

#[test]
fn every_state_weight_matches_cartan_eigenvalues() {
    for (n, m) in [(2, 1), (2, 2), (3, 2), (2, 3)] {
        let g = grid(n, m);
        let lq = build_l_q(&g, Dressing::Undressed).unwrap();
        for s in g.states() {
            let w = weight_of_state_checked(&lq, s).unwrap();
            let ks = k_exponents(&lq, &FockVector::basis(s)).unwrap();
            assert_eq!(weight_from_k_exponents(Family::D, &ks), w);
        }
    }
}

#[test]
fn weight_recovery_round_trips_for_b() {
    let w = WeightVec::from_halves(&[3, 1, -1]);
    let ks = predicted_k_halves(Family::B, &w);
    assert_eq!(weight_from_k_exponents(Family::B, &ks), w);
}

#[test]
fn xi_state_weight_on_three_by_four() {
    let g = grid(3, 4);
    let lq = build_l_q(&g, Dressing::Undressed).unwrap();
    let s = xi_state(&g, &[2, 1]).unwrap();
    assert_eq!(weight_of_state_checked(&lq, s).unwrap(), WeightVec::from_ints(&[2, 1, 0]));
}

#[test]
fn superposition_of_length_three() {
    let g = grid(2, 2);
    let ctx = DualityContext::new(&g, Dressing::Undressed).unwrap();
    let p = PrimeWeight::new(&g, vec![2], None).unwrap();
    let v = big_xi(&ctx.rho, &p).unwrap();
    // One summand per b in {0, 1, 2}, told apart by column occupancies.
    let profiles: std::collections::BTreeSet<Vec<usize>> = v
        .support()
        .map(|s| (1..=2).map(|j| (1..=2).filter(|&i| s.0 >> (g.site(i, j) - 1) & 1 == 1).count()).collect())
        .collect();
    assert_eq!(profiles.len(), 3);
    let two = &Scalar::q_pow(1) + &Scalar::q_pow(-1);
    assert_eq!(ctx.b(1).apply(&v), v.scale(&two));
    let p1 = PrimeWeight::new(&g, vec![1], None).unwrap();
    let v1 = big_xi(&ctx.rho, &p1).unwrap();
    assert_eq!(ctx.b(1).apply(&v1), v1);
}

type BatteryCase = ((usize, usize), &'static [usize], &'static [i64], WeightVec);

#[test]
fn battery_examples() {
    let cases: [BatteryCase; 3] = [
        ((2, 2), &[], &[2], WeightVec::from_ints(&[0, 0])),
        ((2, 2), &[1], &[1], WeightVec::from_ints(&[1, 0])),
        ((3, 4), &[2, 1], &[2, 1], WeightVec::from_ints(&[2, 1, 0])),
    ];
    for ((n, m), mu, p, w) in cases {
        let ctx = DualityContext::new(&grid(n, m), Dressing::Undressed).unwrap();
        let out = verify_joint_hwv(&ctx, &label(mu)).unwrap();
        assert_eq!(out.len(), 1);
        assert!(out[0].passed(), "{}", out[0].report);
        assert_eq!(out[0].p, p);
        assert_eq!(out[0].d_weight, w);
    }
}

#[test]
fn every_label_passes_on_small_grids() {
    for (n, m) in [(2, 2), (3, 2), (2, 3), (2, 4)] {
        for dressing in [Dressing::Undressed, Dressing::Dressed] {
            let ctx = DualityContext::new(&grid(n, m), dressing).unwrap();
            for mu in enumerate_labels(n, m).unwrap() {
                for out in verify_joint_hwv(&ctx, &mu).unwrap() {
                    assert!(out.passed(), "{dressing:?} {}", out.report);
                }
            }
        }
    }
}

#[test]
fn partner_labels_have_opposite_t_signs() {
    let ctx = DualityContext::new(&grid(2, 2), Dressing::Undressed).unwrap();
    let sign = |mu: &[usize]| verify_joint_hwv(&ctx, &label(mu)).unwrap()[0].t_sign;
    for (a, b) in [(&[][..], &[1, 1, 1, 1][..]), (&[1], &[1, 1, 1])] {
        let (sa, sb) = (sign(a).unwrap(), sign(b).unwrap());
        assert_eq!(sa, -sb);
    }
    assert_eq!(sign(&[1, 1]), None);
}

#[test]
fn odd_columns_fillers_are_highest() {
    let ctx = DualityContext::new(&grid(2, 3), Dressing::Undressed).unwrap();
    for mu in enumerate_labels(2, 3).unwrap() {
        let outs = verify_joint_hwv(&ctx, &mu).unwrap();
        assert_eq!(outs.len(), 2);
        for o in outs {
            assert!(o.passed(), "{}", o.report);
        }
    }
}

#[test]
fn inadmissible_labels_are_rejected() {
    let ctx = DualityContext::new(&grid(2, 2), Dressing::Undressed).unwrap();
    assert!(verify_joint_hwv(&ctx, &label(&[2])).is_err());
    assert!(verify_joint_hwv(&ctx, &label(&[1, 1, 1, 1, 1])).is_err());
    assert!(DualityContext::new(&grid(2, 1), Dressing::Undressed).is_err());
}

#[test]
fn spin_modules_on_one_column() {
    for n in 2..=4 {
        let hw = spin_highest_weights(Family::D, n, Dressing::Undressed).unwrap();
        assert_eq!(hw.len(), 2);
        let mut weights: Vec<WeightVec> = hw.iter().map(|(_, w)| w.clone()).collect();
        weights.sort();
        let plus = WeightVec::from_halves(&vec![1; n]);
        assert_eq!(weights, vec![plus.with_last_negated(), plus]);
        let g = grid(n, 1);
        let full = OccState((1 << n) - 1);
        let states: Vec<OccState> = hw.iter().flat_map(|(v, _)| v.support().collect::<Vec<_>>()).collect();
        assert!(states.contains(&full));
        assert!(states.contains(&OccState(full.0 ^ g.bottom_row_mask())));
    }
    for n in 1..=4 {
        let hw = spin_highest_weights(Family::B, n, Dressing::Undressed).unwrap();
        assert_eq!(hw.len(), 1);
        assert_eq!(hw[0].1, WeightVec::from_halves(&vec![1; n]));
    }
}
