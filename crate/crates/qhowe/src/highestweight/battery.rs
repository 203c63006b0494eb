use serde::Serialize;
use serde_json::Value;

use super::xi::{big_xi, xi_state, Filler, PrimeWeight};
use super::{k_exponents, predicted_k_halves, weight_from_k_exponents, HwError, WeightVec};
use crate::decomposition::{enumerate_labels, mu_bar, mu_dagger, PartitionLabel};
use crate::embeddings::{build_b_generators, build_l_q, build_rho_q, single_column_images, ColumnKind, Dressing};
use crate::fock::{FockOperator, FockVector, Grid, OccState};
use crate::linalg::{joint_kernel, rank_exact};
use crate::presentations::{params, CheckReport, Family, GeneratorImages, RelationResult, Witness};
use crate::scalars::{q_int, Scalar};

/// Operator images shared by every label of one grid.
#[derive(Debug, Clone)]
pub struct DualityContext {
    pub grid: Grid,
    pub dressing: Dressing,
    /// `U_q(so_{2n})` images with the flip `t` attached.
    pub lq: GeneratorImages,
    pub rho: GeneratorImages,
    /// `B_1, …, B_{m−1}`.
    pub b: Vec<FockOperator>,
}

impl DualityContext {
    pub fn new(grid: &Grid, dressing: Dressing) -> Result<Self, HwError> {
        if grid.n() < 2 || grid.m() < 2 {
            return Err(HwError::Bounds(format!(
                "joint action needs n >= 2 and m >= 2, got {}x{}",
                grid.n(),
                grid.m()
            )));
        }
        Ok(DualityContext {
            grid: *grid,
            dressing,
            lq: build_l_q(grid, dressing)?,
            rho: build_rho_q(grid, dressing)?,
            b: build_b_generators(grid, dressing)?,
        })
    }

    pub fn r(&self) -> usize {
        self.grid.m() / 2
    }

    pub fn t(&self) -> &FockOperator {
        self.lq.t.as_ref().expect("context always carries t")
    }

    /// `B_j`, 1-based.
    pub fn b(&self, j: usize) -> &FockOperator {
        &self.b[j - 1]
    }

    /// Every generator image of both actions, for orbit closures.
    pub fn all_generators(&self) -> Vec<FockOperator> {
        let mut out: Vec<FockOperator> = self.lq.symbols().into_iter().map(|(_, op)| op.clone()).collect();
        out.extend(self.b.iter().cloned());
        out
    }
}

/// The result of the battery on one label and filler.
#[derive(Debug, Clone, Serialize)]
pub struct HwvOutcome {
    pub mu: PartitionLabel,
    pub p: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub filler: Option<Filler>,
    /// The `D`-weight the battery asserted.
    pub d_weight: WeightVec,
    /// Observed eigenvalue of `B_{2j−1}` on `Ξ`, when `Ξ` is an eigenvector.
    #[serde(serialize_with = "ser_opt_scalars")]
    pub b_eigenvalues: Vec<Option<Scalar>>,
    /// Sign of `t` on `Ξ` when `Ξ` is a `t`-eigenvector.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_sign: Option<i32>,
    #[serde(skip)]
    pub vector: FockVector,
    pub report: CheckReport,
}

fn ser_opt_scalars<S: serde::Serializer>(v: &[Option<Scalar>], s: S) -> Result<S::Ok, S::Error> {
    let strs: Vec<Option<String>> = v.iter().map(|c| c.as_ref().map(Scalar::to_string)).collect();
    strs.serialize(s)
}

impl HwvOutcome {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// The `D_n` highest weight carried by `Ξ_{μ̄}`: `μ` itself, or its partner
/// when `μ'_1 > n`, padded to `n` entries, plus the filler shift for odd `m`.
pub fn expected_d_weight(n: usize, mu: &PartitionLabel, filler: Option<Filler>) -> Result<WeightVec, HwError> {
    let base = if mu.height() > n { mu_dagger(mu, 2 * n)? } else { mu.clone() };
    let w = WeightVec::padded(base.parts(), n);
    Ok(match filler {
        Some(f) => w.shifted_by_halves(&f.weight_shift_halves(n)),
        None => w,
    })
}

fn scalar_witness(label: &str, lhs: String, rhs: String) -> Witness {
    Witness { state: label.to_string(), lhs, rhs }
}

/// Runs the joint highest-weight battery on `Ξ_{μ̄}`, once per filler when
/// `m` is odd.
///
/// Checks, all exact: `Ξ ≠ 0`; each `L_q(K_i)` acts by `q^{⟨λ, α_i⟩}` for the
/// expected `D`-weight `λ`; every `L_q(E_i)` kills `Ξ`; for even `m`,
/// `B_{2j−1}Ξ = [μ̄_j]Ξ`; on `ξ`, `ρ_q(F_{2j−1})^{|μ̄_j|+1}ξ = 0`, the lower
/// powers are independent, and `E F^b ξ = [b][|μ̄_j|−b+1] F^{b−1} ξ`; and
/// for even `m`, `t` acts on `Ξ` by `±1` when `μ'_1 ≠ n`, while for
/// `μ'_1 = n` the image `tΞ` is a highest weight vector of weight `λ` with
/// its last entry negated.
pub fn verify_joint_hwv(ctx: &DualityContext, mu: &PartitionLabel) -> Result<Vec<HwvOutcome>, HwError> {
    let g = &ctx.grid;
    let (n, m, r) = (g.n(), g.m(), ctx.r());
    if !enumerate_labels(n, m)?.contains(mu) {
        return Err(HwError::Label(format!("{mu} is not an admissible label for n = {n}, m = {m}")));
    }
    let p = mu_bar(mu, 2 * n, r)?;
    let fillers: Vec<Option<Filler>> =
        if m % 2 == 1 { Filler::both().into_iter().map(Some).collect() } else { vec![None] };
    fillers.into_iter().map(|f| run_battery(ctx, mu, &p, f)).collect()
}

fn run_battery(
    ctx: &DualityContext,
    mu: &PartitionLabel,
    p: &[i64],
    filler: Option<Filler>,
) -> Result<HwvOutcome, HwError> {
    let g = &ctx.grid;
    let (n, r) = (g.n(), ctx.r());
    let pw = PrimeWeight::new(g, p.to_vec(), filler)?;
    let xi_vec = big_xi(&ctx.rho, &pw)?;
    let lambda = expected_d_weight(n, mu, filler)?;
    let mut results = Vec::new();

    results.push(RelationResult::from_check("nonzero", vec![], !xi_vec.is_zero(), || {
        scalar_witness("Xi", "0".into(), "nonzero".into())
    }));
    let k_pred = predicted_k_halves(Family::D, &lambda);
    for i in 1..=n {
        let rhs = xi_vec.scale(&Scalar::x_pow(k_pred[i - 1]));
        results.push(RelationResult::compare_vectors("weight", vec![i as i64], g, &ctx.lq.k(i).apply(&xi_vec), &rhs));
    }
    for i in 1..=n {
        let lhs = ctx.lq.e(i).apply(&xi_vec);
        results.push(RelationResult::compare_vectors("E_kill", vec![i as i64], g, &lhs, &FockVector::zero()));
    }

    let mut b_eigenvalues = Vec::with_capacity(r);
    for j in 1..=r {
        let image = ctx.b(2 * j - 1).apply(&xi_vec);
        b_eigenvalues.push(image.ratio_to(&xi_vec));
        let rhs = xi_vec.scale(&Scalar::from_laurent(q_int(p[j - 1], 2)));
        results.push(RelationResult::compare_vectors("B_eigen", vec![j as i64], g, &image, &rhs));
    }

    let abs = pw.abs();
    let mut seed = FockVector::basis(xi_state(g, &abs)?);
    if let Some(f) = filler {
        seed = seed.iter().map(|(s, c)| (OccState(s.0 | f.mask(g)), c.clone())).collect();
    }
    for (j, &pj) in abs.iter().enumerate() {
        let idx = (j + 1) as i64;
        let (fj, ej) = (ctx.rho.f(2 * j + 1), ctx.rho.e(2 * j + 1));
        let mut plain = vec![seed.clone()];
        for _ in 0..=pj {
            let next = fj.apply(plain.last().expect("nonempty"));
            plain.push(next);
        }
        let top = plain.pop().expect("p_j + 2 entries");
        results.push(RelationResult::compare_vectors("string_top", vec![idx], g, &top, &FockVector::zero()));
        let rank = rank_exact(&plain);
        results.push(RelationResult::from_check("string_rank", vec![idx], rank == pj + 1, || {
            scalar_witness("F^b xi", rank.to_string(), (pj + 1).to_string())
        }));
        for b in 1..=pj {
            let lhs = ej.apply(&plain[b]);
            let c = &q_int(b as i64, 2) * &q_int((pj - b + 1) as i64, 2);
            let rhs = plain[b - 1].scale(&Scalar::from_laurent(c));
            results.push(RelationResult::compare_vectors("ladder", vec![idx, b as i64], g, &lhs, &rhs));
        }
    }

    let mut t_sign = None;
    if filler.is_none() {
        let t_xi = ctx.t().apply(&xi_vec);
        if p[r - 1] != 0 {
            let ratio = t_xi.ratio_to(&xi_vec);
            let sign = ratio.as_ref().and_then(|c| {
                if c.is_one() {
                    Some(1)
                } else if (-c).is_one() {
                    Some(-1)
                } else {
                    None
                }
            });
            t_sign = sign;
            results.push(RelationResult::from_check("t_eigen", vec![], sign.is_some(), || {
                scalar_witness("t Xi / Xi", ratio.map_or("none".into(), |c| c.to_string()), "+1 or -1".into())
            }));
        } else {
            let flipped = lambda.with_last_negated();
            let pred = predicted_k_halves(Family::D, &flipped);
            for i in 1..=n {
                let rhs = t_xi.scale(&Scalar::x_pow(pred[i - 1]));
                results.push(RelationResult::compare_vectors(
                    "t_partner_weight",
                    vec![i as i64],
                    g,
                    &ctx.lq.k(i).apply(&t_xi),
                    &rhs,
                ));
                results.push(RelationResult::compare_vectors(
                    "t_partner_E_kill",
                    vec![i as i64],
                    g,
                    &ctx.lq.e(i).apply(&t_xi),
                    &FockVector::zero(),
                ));
            }
        }
    }

    let mut report = CheckReport::new(
        "joint_hwv",
        params([
            ("n", Value::from(n)),
            ("m", Value::from(g.m())),
            ("mu", Value::from(mu.parts().to_vec())),
            ("p", Value::from(p.to_vec())),
        ]),
    );
    if let Some(f) = filler {
        report.params.insert("filler".into(), serde_json::to_value(f).expect("filler serializes"));
    }
    Ok(HwvOutcome {
        mu: mu.clone(),
        p: p.to_vec(),
        filler,
        d_weight: lambda,
        b_eigenvalues,
        t_sign,
        vector: xi_vec,
        report: report.with_results(results),
    })
}

/// Highest weight vectors of the spin module on a single column: the joint
/// kernel of the raising images of `D_n` (`n ≥ 2`) or `B_n`, each with the
/// weight read off from the `K_i` eigenvalues.
pub fn spin_highest_weights(
    family: Family,
    n: usize,
    dressing: Dressing,
) -> Result<Vec<(FockVector, WeightVec)>, HwError> {
    let kind = match family {
        Family::D => ColumnKind::D,
        Family::B => ColumnKind::B,
        Family::A => return Err(HwError::Bounds("spin modules exist for types B and D only".into())),
    };
    let grid = Grid::new(n, 1)?;
    let images = single_column_images(kind, n, dressing)?.materialize(&grid)?;
    let kernel = joint_kernel(&images.e);
    kernel
        .into_iter()
        .map(|v| {
            let ks = k_exponents(&images, &v).ok_or_else(|| {
                HwError::Weight(format!("kernel vector {:?} is not a weight vector", v.format(&grid)))
            })?;
            let w = weight_from_k_exponents(family, &ks);
            Ok((v, w))
        })
        .collect()
}
