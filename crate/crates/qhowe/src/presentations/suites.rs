use rayon::prelude::*;
use serde_json::Value;

use super::report::params;
use super::{CheckReport, ClassicalImages, Family, GeneratorImages, PresentationError, RelationResult};
use crate::fock::{FockOperator, Grid};
use crate::scalars::{q_binomial, Scalar};

pub(super) type Task<'a> = Box<dyn Fn() -> RelationResult + Send + Sync + 'a>;

pub(super) fn run(tasks: Vec<Task<'_>>) -> Vec<RelationResult> {
    tasks.par_iter().map(|t| t()).collect()
}

fn idx(v: &[usize]) -> Vec<i64> {
    v.iter().map(|&i| i as i64).collect()
}

fn base_params(suite_family: Family, rank: usize, grid: &Grid) -> std::collections::BTreeMap<String, Value> {
    params([
        ("family", Value::from(format!("{suite_family:?}"))),
        ("rank", Value::from(rank)),
        ("n", Value::from(grid.n())),
        ("m", Value::from(grid.m())),
    ])
}

/// `K`-commutativity, `K_iK_i^{-1} = 1`, `K_iX_jK_i^{-1} = q_i^{±a_ij}X_j`,
/// and `[E_i, F_j] = δ_ij (K_i − K_i^{-1}) / (q_i − q_i^{-1})`.
pub fn check_drinfeld_jimbo(images: &GeneratorImages) -> Result<CheckReport, PresentationError> {
    images.validate()?;
    let r = images.rank();
    let c = &images.cartan;
    let g = &images.grid;
    let id = FockOperator::identity(g.sites());
    let zero = FockOperator::zero(g.sites());
    let mut tasks: Vec<Task> = Vec::new();
    for i in 1..=r {
        let (id, g) = (&id, g);
        tasks.push(Box::new(move || {
            RelationResult::compare("K_Kinv", idx(&[i]), g, &(images.k(i) * images.k_inv(i)), id)
        }));
        tasks.push(Box::new(move || {
            RelationResult::compare("Kinv_K", idx(&[i]), g, &(images.k_inv(i) * images.k(i)), id)
        }));
    }
    for i in 1..=r {
        for j in i + 1..=r {
            tasks.push(Box::new(move || {
                let lhs = images.k(i) * images.k(j);
                let rhs = images.k(j) * images.k(i);
                RelationResult::compare("K_commute", idx(&[i, j]), g, &lhs, &rhs)
            }));
        }
    }
    for i in 1..=r {
        for j in 1..=r {
            tasks.push(Box::new(move || {
                let lhs = &(images.k(i) * images.e(j)) * images.k_inv(i);
                let rhs = images.e(j).scale(&c.q_i_pow(i, c.a(i, j)));
                RelationResult::compare("KEK", idx(&[i, j]), g, &lhs, &rhs)
            }));
            tasks.push(Box::new(move || {
                let lhs = &(images.k(i) * images.f(j)) * images.k_inv(i);
                let rhs = images.f(j).scale(&c.q_i_pow(i, -c.a(i, j)));
                RelationResult::compare("KFK", idx(&[i, j]), g, &lhs, &rhs)
            }));
        }
    }
    for i in 1..=r {
        for j in 1..=r {
            let zero = &zero;
            tasks.push(Box::new(move || {
                let lhs = images.e(i).commutator(images.f(j));
                let rhs = if i == j {
                    let denom = &c.q_i_pow(i, 1) - &c.q_i_pow(i, -1);
                    let inv = denom.inv().expect("q_i - q_i^-1 is nonzero");
                    (images.k(i) - images.k_inv(i)).scale(&inv)
                } else {
                    zero.clone()
                };
                RelationResult::compare("EF", idx(&[i, j]), g, &lhs, &rhs)
            }));
        }
    }
    let report = CheckReport::new("drinfeld_jimbo", base_params(c.family, r, g));
    Ok(report.with_results(run(tasks)))
}

/// `Σ_k (−1)^k [1−a_ij choose k]_{q_i} X_i^k X_j X_i^{1−a_ij−k} = 0` for
/// `X ∈ {E, F}` and `i ≠ j`; pairs with `a_ij = −1` are also checked in the
/// nested form `[X_i, [X_i, X_j]_{q_i}]_{q_i^{-1}} = 0`.
pub fn check_q_serre(images: &GeneratorImages) -> Result<CheckReport, PresentationError> {
    images.validate()?;
    let r = images.rank();
    let c = &images.cartan;
    let g = &images.grid;
    let zero = FockOperator::zero(g.sites());
    let mut tasks: Vec<Task> = Vec::new();
    for (name, ops) in [("E", &images.e), ("F", &images.f)] {
        for i in 1..=r {
            for j in 1..=r {
                if i == j {
                    continue;
                }
                let zero = &zero;
                tasks.push(Box::new(move || {
                    let lhs = serre_sum(&ops[i - 1], &ops[j - 1], c.a(i, j), c.base_halves(i));
                    RelationResult::compare(format!("serre_{name}"), idx(&[i, j]), g, &lhs, zero)
                }));
                if c.a(i, j) == -1 {
                    tasks.push(Box::new(move || {
                        let (xi, xj) = (&ops[i - 1], &ops[j - 1]);
                        let inner = xi.q_commutator(xj, &c.q_i_pow(i, 1));
                        let outer = xi.q_commutator(&inner, &c.q_i_pow(i, -1));
                        RelationResult::compare(format!("serre_{name}_nested"), idx(&[i, j]), g, &outer, zero)
                    }));
                }
            }
        }
    }
    let report = CheckReport::new("q_serre", base_params(c.family, r, g));
    Ok(report.with_results(run(tasks)))
}

fn serre_sum(xi: &FockOperator, xj: &FockOperator, a_ij: i32, base_halves: i32) -> FockOperator {
    let n = (1 - a_ij) as u32;
    let powers: Vec<FockOperator> = (0..=n).map(|k| xi.pow(k)).collect();
    let mut acc = FockOperator::zero(xi.sites());
    for k in 0..=n {
        let b = q_binomial(n as i64, k as i64, base_halves).expect("0 <= k <= n");
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let coeff = Scalar::from_laurent(b).scale(&crate::scalars::GaussRat::from_int(sign));
        let term = &(&powers[k as usize] * xj) * &powers[(n - k) as usize];
        acc = acc.add_scaled(&term, &coeff);
    }
    acc
}

/// Relations of the non-standard deformation generated by `B_1, …, B_{m−1}`:
/// `B_iB_j = B_jB_i` for `|i−j| > 1` and
/// `B_j²B_k − [2]B_jB_kB_j + B_kB_j² = B_k` for `|j−k| = 1`.
pub fn check_uqprime(grid: &Grid, bs: &[FockOperator]) -> CheckReport {
    let s = bs.len();
    let q2 = Scalar::from_laurent(crate::scalars::q_int(2, 2));
    let mut tasks: Vec<Task> = Vec::new();
    for i in 1..=s {
        for j in i + 1..=s {
            if j - i > 1 {
                tasks.push(Box::new(move || {
                    let lhs = &bs[i - 1] * &bs[j - 1];
                    let rhs = &bs[j - 1] * &bs[i - 1];
                    RelationResult::compare("B_commute", idx(&[i, j]), grid, &lhs, &rhs)
                }));
            }
        }
    }
    for j in 1..=s {
        for k in [j.checked_sub(1), Some(j + 1)].into_iter().flatten() {
            if k == 0 || k > s {
                continue;
            }
            let q2 = &q2;
            tasks.push(Box::new(move || {
                let (bj, bk) = (&bs[j - 1], &bs[k - 1]);
                let bj2 = bj * bj;
                let lhs = (&bj2 * bk).add_scaled(&(&(bj * bk) * bj), &-q2).add(&(bk * &bj2));
                RelationResult::compare("B_serre", idx(&[j, k]), grid, &lhs, bk)
            }));
        }
    }
    let report = CheckReport::new(
        "uqprime",
        params([("generators", Value::from(s)), ("n", Value::from(grid.n())), ("m", Value::from(grid.m()))]),
    );
    report.with_results(run(tasks))
}

/// `t² = 1`, `t` swaps the last two nodes of `D_r` and fixes the others.
pub fn check_o_extension(images: &GeneratorImages) -> Result<CheckReport, PresentationError> {
    images.validate()?;
    let c = &images.cartan;
    let r = images.rank();
    if c.family != Family::D || r < 2 {
        return Err(PresentationError::Unsupported(format!(
            "the t-extension needs type D of rank >= 2, got {:?}{}",
            c.family, r
        )));
    }
    let t = images.t.as_ref().ok_or_else(|| PresentationError::MissingGenerator("t".into()))?;
    let g = &images.grid;
    let id = FockOperator::identity(g.sites());
    let mut tasks: Vec<Task> = Vec::new();
    {
        let id = &id;
        tasks.push(Box::new(move || RelationResult::compare("t_squared", vec![], g, &(t * t), id)));
    }
    let families: [(&str, &Vec<FockOperator>); 4] =
        [("E", &images.e), ("F", &images.f), ("K", &images.k), ("Kinv", &images.k_inv)];
    for (name, ops) in families {
        for i in 1..=r {
            let partner = match i {
                _ if i == r - 1 => r,
                _ if i == r => r - 1,
                _ => i,
            };
            tasks.push(Box::new(move || {
                let lhs = &(t * &ops[i - 1]) * t;
                RelationResult::compare(format!("t{name}t"), idx(&[i, partner]), g, &lhs, &ops[partner - 1])
            }));
        }
    }
    let report = CheckReport::new("o_extension", base_params(c.family, r, g));
    Ok(report.with_results(run(tasks)))
}

/// Chevalley relations `[H_i,H_j] = 0`, `[H_i,E_j] = a_ij E_j`,
/// `[H_i,F_j] = −a_ij F_j`, `[E_i,F_j] = δ_ij H_i`, and the classical Serre
/// relations `(ad X_i)^{1−a_ij} X_j = 0`.
pub fn check_classical(images: &ClassicalImages) -> Result<CheckReport, PresentationError> {
    images.validate()?;
    let r = images.rank();
    let c = &images.cartan;
    let g = &images.grid;
    let zero = FockOperator::zero(g.sites());
    let (e, f, h) = (&images.e, &images.f, &images.h);
    let mut tasks: Vec<Task> = Vec::new();
    for i in 1..=r {
        for j in 1..=r {
            let zero = &zero;
            if i < j {
                tasks.push(Box::new(move || {
                    RelationResult::compare("HH", idx(&[i, j]), g, &h[i - 1].commutator(&h[j - 1]), zero)
                }));
            }
            tasks.push(Box::new(move || {
                let rhs = e[j - 1].scale(&Scalar::from_int(c.a(i, j) as i64));
                RelationResult::compare("HE", idx(&[i, j]), g, &h[i - 1].commutator(&e[j - 1]), &rhs)
            }));
            tasks.push(Box::new(move || {
                let rhs = f[j - 1].scale(&Scalar::from_int(-c.a(i, j) as i64));
                RelationResult::compare("HF", idx(&[i, j]), g, &h[i - 1].commutator(&f[j - 1]), &rhs)
            }));
            tasks.push(Box::new(move || {
                let rhs = if i == j { h[i - 1].clone() } else { zero.clone() };
                RelationResult::compare("EF", idx(&[i, j]), g, &e[i - 1].commutator(&f[j - 1]), &rhs)
            }));
        }
    }
    for (name, ops) in [("E", e), ("F", f)] {
        for i in 1..=r {
            for j in 1..=r {
                if i == j {
                    continue;
                }
                let zero = &zero;
                tasks.push(Box::new(move || {
                    let mut acc = ops[j - 1].clone();
                    for _ in 0..(1 - c.a(i, j)) {
                        acc = ops[i - 1].commutator(&acc);
                    }
                    RelationResult::compare(format!("serre_{name}"), idx(&[i, j]), g, &acc, zero)
                }));
            }
        }
    }
    let report = CheckReport::new("classical", base_params(c.family, r, g));
    Ok(report.with_results(run(tasks)))
}

/// `[X, Y] = 0` for every `X` in `left` and `Y` in `right`.
pub fn check_commutation(
    grid: &Grid,
    left: &[(String, FockOperator)],
    right: &[(String, FockOperator)],
) -> CheckReport {
    let zero = FockOperator::zero(grid.sites());
    let mut tasks: Vec<Task> = Vec::new();
    for (x_name, x) in left {
        for (y_name, y) in right {
            let zero = &zero;
            tasks.push(Box::new(move || {
                RelationResult::compare(format!("[{x_name},{y_name}]"), vec![], grid, &x.commutator(y), zero)
            }));
        }
    }
    let report = CheckReport::new(
        "commutation",
        params([
            ("n", Value::from(grid.n())),
            ("m", Value::from(grid.m())),
            ("left", Value::from(left.len())),
            ("right", Value::from(right.len())),
        ]),
    );
    report.with_results(run(tasks))
}
