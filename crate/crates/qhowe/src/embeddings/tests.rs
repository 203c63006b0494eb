use super::*;
use crate::fock::{FockVector, OccState};
use crate::presentations::{check_classical, check_drinfeld_jimbo, check_q_serre, check_uqprime};

fn grid(n: usize, m: usize) -> Grid {
    Grid::new(n, m).unwrap()
}

fn st(g: &Grid, s: &str) -> OccState {
    OccState::parse(g, s).unwrap()
}

fn basis(g: &Grid, s: &str) -> FockVector {
    FockVector::basis(st(g, s))
}

#[test]
fn d_column_raising_on_vacuum() {
    let g = grid(2, 1);
    let im = single_column_images(ColumnKind::D, 2, Dressing::Undressed).unwrap().materialize(&g).unwrap();
    assert_eq!(im.e(2).apply(&basis(&g, "00")), basis(&g, "11"));
}

#[test]
fn b1_column_relation_in_half_base() {
    let g = grid(1, 1);
    let im = single_column_images(ColumnKind::B, 1, Dressing::Undressed).unwrap().materialize(&g).unwrap();
    let lhs = im.e(1).commutator(im.f(1));
    let denom = (&Scalar::x_pow(1) - &Scalar::x_pow(-1)).inv().unwrap();
    assert_eq!(lhs, (im.k(1) - im.k_inv(1)).scale(&denom));
}

#[test]
fn gl_cartan_eigenvalue() {
    let g = grid(2, 1);
    let im = single_column_images(ColumnKind::Gl, 2, Dressing::Undressed).unwrap().materialize(&g).unwrap();
    assert_eq!(im.k(1).apply(&basis(&g, "10")), basis(&g, "10").scale(&Scalar::q_pow(1)));
}

#[test]
fn rank_errors() {
    assert!(single_column_images(ColumnKind::D, 1, Dressing::Undressed).is_err());
    assert!(single_column_images(ColumnKind::Gl, 1, Dressing::Undressed).is_err());
    assert!(single_column_images(ColumnKind::B, 1, Dressing::Undressed).is_ok());
    assert!(build_rho_q(&grid(2, 1), Dressing::Undressed).is_err());
}

#[test]
fn single_copy_is_unchanged() {
    for kind in [ColumnKind::Gl, ColumnKind::D, ColumnKind::B] {
        let col = single_column_images(kind, 3, Dressing::Dressed).unwrap();
        for conv in [Convention::Forward, Convention::Backward] {
            let ext = coproduct_extend(&col, 1, Direction::Column, conv);
            let g = grid(3, 1);
            let a = col.materialize(&g).unwrap();
            let b = ext.materialize(&g).unwrap();
            assert_eq!(a.e, b.e);
            assert_eq!(a.f, b.f);
            assert_eq!(a.k, b.k);
        }
    }
}

#[test]
fn two_column_raising_on_vacuum() {
    let g = grid(2, 2);
    let im = build_l_q(&g, Dressing::Undressed).unwrap();
    let expect = basis(&g, "11|00").add(&basis(&g, "00|11").scale(&Scalar::q_pow(-1)));
    assert_eq!(im.e(2).apply(&basis(&g, "00|00")), expect);
    let vac = basis(&g, "00|00");
    assert_eq!(im.k(2).apply(&vac), vac.scale(&Scalar::q_pow(-2)));
}

#[test]
fn multi_column_terms_match_hand_normal_form() {
    // E_n = Σ_j ψ†_{n−1+jn} ψ†_{n+jn} κ_{<j} and F_n = Σ_j κ_{>j}^{-1} ψ_{n+jn} ψ_{n−1+jn}
    // with κ_{<j} = ∏_{p<j} (q ω_{n−1+pn} ω_{n+pn})^{-1}, columns counted from 0.
    let (n, m) = (3, 3);
    let g = grid(n, m);
    let im = build_l_q(&g, Dressing::Undressed).unwrap();
    let kappa = |range: std::ops::Range<usize>, sign: i32| -> Vec<Factor> {
        range.flat_map(|p| [omega(n - 1 + p * n, -sign), omega(n + p * n, -sign)]).collect()
    };
    let mut e_hand = WordSum::zero();
    let mut f_hand = WordSum::zero();
    for j in 0..m {
        let mut fe = vec![psid(n - 1 + j * n), psid(n + j * n)];
        fe.extend(kappa(0..j, 1));
        e_hand = e_hand.sum(&word(Scalar::q_pow(-(j as i32)), fe));
        let mut ff = kappa(j + 1..m, -1);
        ff.extend([psi(n + j * n), psi(n - 1 + j * n)]);
        f_hand = f_hand.sum(&word(Scalar::q_pow((m - 1 - j) as i32), ff));
    }
    assert_eq!(im.e(n), &e_hand.to_operator(&g));
    assert_eq!(im.f(n), &f_hand.to_operator(&g));
}

#[test]
fn row_action_matches_hand_normal_form() {
    // E_j = Σ_b κ_{>b,j} ψ†_{b+(j−1)n} ψ_{b+jn} with κ_{>b,j} = ∏_{b'>b} ω^{-1}_{b'+(j−1)n} ω_{b'+jn}
    let (n, m) = (3, 3);
    let g = grid(n, m);
    let rho = build_rho_q(&g, Dressing::Undressed).unwrap();
    for j in 1..m {
        let mut e_hand = WordSum::zero();
        let mut f_hand = WordSum::zero();
        let mut kinv_hand = Vec::new();
        for b in 1..=n {
            let mut fe = vec![psid(b + (j - 1) * n), psi(b + j * n)];
            for bb in b + 1..=n {
                fe.extend([omega(bb + (j - 1) * n, -1), omega(bb + j * n, 1)]);
            }
            e_hand = e_hand.sum(&word(Scalar::one(), fe));
            let mut ff: Vec<Factor> =
                (1..b).flat_map(|bb| [omega(bb + (j - 1) * n, 1), omega(bb + j * n, -1)]).collect();
            ff.extend([psid(b + j * n), psi(b + (j - 1) * n)]);
            f_hand = f_hand.sum(&word(Scalar::one(), ff));
            kinv_hand.extend([omega(b + (j - 1) * n, 1), omega(b + j * n, -1)]);
        }
        assert_eq!(rho.e(j), &e_hand.to_operator(&g));
        assert_eq!(rho.f(j), &f_hand.to_operator(&g));
        assert_eq!(rho.k_inv(j), &word(Scalar::one(), kinv_hand).to_operator(&g));
    }
}

#[test]
fn row_cartan_eigenvalue() {
    let g = grid(2, 2);
    let rho = build_rho_q(&g, Dressing::Undressed).unwrap();
    let v = basis(&g, "10|00");
    assert_eq!(rho.k(1).apply(&v), v.scale(&Scalar::q_pow(1)));
}

#[test]
fn single_row_action_relations() {
    let g = grid(1, 2);
    let rho = build_rho_q(&g, Dressing::Undressed).unwrap();
    assert!(check_drinfeld_jimbo(&rho).unwrap().passed());
    assert_eq!(rho.e(1).apply(&basis(&g, "0|1")), basis(&g, "1|0"));
}

#[test]
fn row_action_commutes_with_sl_part() {
    for dressing in [Dressing::Undressed, Dressing::Dressed] {
        let g = grid(2, 2);
        let rho = build_rho_q(&g, dressing).unwrap();
        let lq = build_l_q(&g, dressing).unwrap();
        for x in [rho.e(1), rho.f(1), rho.k(1)] {
            assert!(x.commutator(lq.e(1)).is_zero());
            assert!(x.commutator(lq.f(1)).is_zero());
            assert!(x.commutator(lq.k(1)).is_zero());
        }
    }
}

#[test]
fn coideal_generator_commutes_with_l_q() {
    let g = grid(2, 2);
    let lq = build_l_q(&g, Dressing::Undressed).unwrap();
    let b = build_b_generators(&g, Dressing::Undressed).unwrap();
    assert!(lq.k(2).commutator(&b[0]).is_zero());
    assert!(lq.e(2).commutator(&b[0]).is_zero());
}

#[test]
fn coideal_generator_kills_empty_and_full_rows() {
    let g = grid(1, 2);
    let b = build_b_generators(&g, Dressing::Undressed).unwrap();
    assert!(b[0].apply(&basis(&g, "0|0")).is_zero());
    assert!(b[0].apply(&basis(&g, "1|1")).is_zero());
    assert!(check_uqprime(&g, &b).passed());
}

#[test]
fn classical_images() {
    let c = build_classical(ClassicalKind::LFull, 2, 2).unwrap();
    let g = c.grid;
    let hand = word(Scalar::one(), vec![psid(1), psid(2)]).sum(&word(Scalar::one(), vec![psid(3), psid(4)]));
    assert_eq!(c.e[1], hand.to_operator(&g));
    let vac = basis(&g, "00|00");
    assert_eq!(c.h[1].apply(&vac), vac.scale(&Scalar::from_int(-2)));
    assert!(check_classical(&c).unwrap().passed());
    let phi = build_classical(ClassicalKind::PhiDColumn, 2, 5).unwrap();
    assert_eq!(phi.grid.m(), 1);
    assert!(check_classical(&phi).unwrap().passed());
}

#[test]
fn q_to_one_limit_of_l_q() {
    let g = grid(2, 2);
    let lq = build_l_q(&g, Dressing::Undressed).unwrap();
    let c = build_classical(ClassicalKind::LFull, 2, 2).unwrap();
    for i in 1..=2 {
        assert_eq!(q_to_one_limit(lq.e(i)).unwrap(), c.e[i - 1]);
        assert_eq!(q_to_one_limit(lq.f(i)).unwrap(), c.f[i - 1]);
    }
}

#[test]
fn d3_single_column_suites() {
    let g = grid(3, 1);
    let im = single_column_images(ColumnKind::D, 3, Dressing::Undressed).unwrap().materialize(&g).unwrap();
    assert!(check_drinfeld_jimbo(&im).unwrap().passed());
    let serre = check_q_serre(&im).unwrap();
    assert!(serre.passed());
    assert!(serre.results.iter().any(|r| r.indices == vec![3, 1]));
}

#[test]
fn b2_single_column_suites() {
    let g = grid(2, 1);
    let im = single_column_images(ColumnKind::B, 2, Dressing::Undressed).unwrap().materialize(&g).unwrap();
    assert!(check_drinfeld_jimbo(&im).unwrap().passed());
    assert!(check_q_serre(&im).unwrap().passed());
}

#[test]
fn named_images_cover_every_kind() {
    let kinds = [
        (EmbeddingKind::GlColumn, 3, 1),
        (EmbeddingKind::DColumn, 3, 1),
        (EmbeddingKind::BColumn, 3, 1),
        (EmbeddingKind::LambdaQ, 2, 2),
        (EmbeddingKind::LQ, 2, 2),
        (EmbeddingKind::RhoQ, 2, 2),
        (EmbeddingKind::BPrime, 2, 3),
        (EmbeddingKind::TGlobal, 2, 2),
        (EmbeddingKind::ClassicalPhiD, 2, 1),
        (EmbeddingKind::ClassicalL, 2, 2),
    ];
    for (kind, n, m) in kinds {
        let spec = EmbeddingSpec { kind, grid: grid(n, m), dressing: Dressing::Undressed };
        let named = named_images(&spec).unwrap();
        assert!(!named.is_empty(), "{kind:?}");
    }
    let bad = EmbeddingSpec { kind: EmbeddingKind::DColumn, grid: grid(2, 2), dressing: Dressing::Undressed };
    assert!(named_images(&bad).is_err());
}
