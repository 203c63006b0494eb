//! Generator images of every quantum-group embedding on the Fock space.
//!
//! Images are first built symbolically as sums of Clifford words, then
//! materialized as sparse operators. Multi-factor images are never written by
//! hand: they come from [`coproduct_extend`] applied to single-column (or
//! single-row) images. Columns and rows are 1-based throughout.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fock::{t_operator, Factor, FockError, FockOperator, Grid, Word, WordSum};
use crate::presentations::{CartanData, ClassicalImages, Family, GeneratorImages, PresentationError};
use crate::scalars::{GaussRat, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("{kind} needs {need}, got {got}")]
    Rank { kind: &'static str, need: &'static str, got: String },
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Which normal form is used for the `gl` raising and lowering images.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dressing {
    /// `E_i = ψ_i†ψ_{i+1}`, `F_i = ψ_{i+1}†ψ_i`.
    #[default]
    Undressed,
    /// `E_i = q^{-1}ω_i^{-1}ψ_i†ψ_{i+1}`, `F_i = qψ_{i+1}†ψ_iω_i`.
    Dressed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ColumnKind {
    Gl,
    D,
    B,
}

/// Where the factors of a tensor power sit on the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    /// Factor `j` is column `j`: site `s ↦ s + (j−1)·n`.
    Column,
    /// Factor `b` is row `b`: site `s ↦ b + (s−1)·copies`.
    Row,
}

/// Coproduct used to extend images to several factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Convention {
    /// `E ↦ E ⊗ K + 1 ⊗ E`, `F ↦ F ⊗ 1 + K^{-1} ⊗ F`.
    Forward,
    /// `E ↦ E ⊗ 1 + K ⊗ E`, `F ↦ F ⊗ K^{-1} + 1 ⊗ F`.
    Backward,
}

/// Every embedding the crate can build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EmbeddingKind {
    GlColumn,
    DColumn,
    BColumn,
    LambdaQ,
    LQ,
    RhoQ,
    BPrime,
    TGlobal,
    ClassicalPhiD,
    ClassicalL,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EmbeddingSpec {
    pub kind: EmbeddingKind,
    pub grid: Grid,
    pub dressing: Dressing,
}

/// Generator images as sums of words, before materialization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicImages {
    pub cartan: CartanData,
    /// Number of sites the images act on.
    pub sites: usize,
    pub e: Vec<WordSum>,
    pub f: Vec<WordSum>,
    pub k: Vec<WordSum>,
    pub k_inv: Vec<WordSum>,
}

impl SymbolicImages {
    pub fn materialize(&self, grid: &Grid) -> Result<GeneratorImages, EmbeddingError> {
        let mat = |v: &Vec<WordSum>| -> Result<Vec<FockOperator>, FockError> {
            v.iter()
                .map(|w| {
                    w.check(grid)?;
                    Ok(w.to_operator(grid))
                })
                .collect()
        };
        Ok(GeneratorImages {
            grid: *grid,
            cartan: self.cartan.clone(),
            e: mat(&self.e)?,
            f: mat(&self.f)?,
            k: mat(&self.k)?,
            k_inv: mat(&self.k_inv)?,
            t: None,
        })
    }

    fn relabel(&self, f: impl Fn(usize) -> usize + Copy) -> [Vec<WordSum>; 4] {
        let r = |v: &Vec<WordSum>| v.iter().map(|w| w.relabel(f)).collect();
        [r(&self.e), r(&self.f), r(&self.k), r(&self.k_inv)]
    }
}

fn word(coeff: Scalar, factors: Vec<Factor>) -> WordSum {
    WordSum::single(Word::new(coeff, factors))
}

fn psi(a: usize) -> Factor {
    Factor::psi(a)
}

fn psid(a: usize) -> Factor {
    Factor::psi_dagger(a)
}

fn omega(a: usize, e: i32) -> Factor {
    Factor::omega(a, e)
}

fn gl_generators(n: usize, dressing: Dressing) -> [Vec<WordSum>; 4] {
    let mut out: [Vec<WordSum>; 4] = Default::default();
    for i in 1..n {
        let (e, f) = match dressing {
            Dressing::Undressed => {
                (word(Scalar::one(), vec![psid(i), psi(i + 1)]), word(Scalar::one(), vec![psid(i + 1), psi(i)]))
            }
            Dressing::Dressed => (
                word(Scalar::q_pow(-1), vec![omega(i, -1), psid(i), psi(i + 1)]),
                word(Scalar::q_pow(1), vec![psid(i + 1), psi(i), omega(i, 1)]),
            ),
        };
        out[0].push(e);
        out[1].push(f);
        out[2].push(word(Scalar::one(), vec![omega(i, -1), omega(i + 1, 1)]));
        out[3].push(word(Scalar::one(), vec![omega(i, 1), omega(i + 1, -1)]));
    }
    out
}

/// Images on a single column of `n` sites.
///
/// `Gl`: `E_i = ψ_i†ψ_{i+1}`, `F_i = ψ_{i+1}†ψ_i`, `K_i = ω_i^{-1}ω_{i+1}`
/// (type `A_{n−1}`). `D` adds `E_n = ψ_{n−1}†ψ_n†`, `F_n = ψ_nψ_{n−1}`,
/// `K_n = (qω_{n−1}ω_n)^{-1}`. `B` adds `E_n = ψ_n†`, `F_n = ψ_n`,
/// `K_n = (q^{1/2}ω_n)^{-1}` with relations in base `q^{1/2}`.
pub fn single_column_images(kind: ColumnKind, n: usize, dressing: Dressing) -> Result<SymbolicImages, EmbeddingError> {
    let [mut e, mut f, mut k, mut k_inv] = gl_generators(n, dressing);
    let cartan = match kind {
        ColumnKind::Gl => {
            if n < 2 {
                return Err(EmbeddingError::Rank { kind: "gl column", need: "n >= 2", got: format!("n = {n}") });
            }
            CartanData::type_a(n - 1)?
        }
        ColumnKind::D => {
            if n < 2 {
                return Err(EmbeddingError::Rank { kind: "D column", need: "n >= 2", got: format!("n = {n}") });
            }
            e.push(word(Scalar::one(), vec![psid(n - 1), psid(n)]));
            f.push(word(Scalar::one(), vec![psi(n), psi(n - 1)]));
            k.push(word(Scalar::q_pow(-1), vec![omega(n - 1, -1), omega(n, -1)]));
            k_inv.push(word(Scalar::q_pow(1), vec![omega(n - 1, 1), omega(n, 1)]));
            CartanData::type_d(n)?
        }
        ColumnKind::B => {
            if n < 1 {
                return Err(EmbeddingError::Rank { kind: "B column", need: "n >= 1", got: format!("n = {n}") });
            }
            e.push(word(Scalar::one(), vec![psid(n)]));
            f.push(word(Scalar::one(), vec![psi(n)]));
            k.push(word(Scalar::x_pow(-1), vec![omega(n, -1)]));
            k_inv.push(word(Scalar::x_pow(1), vec![omega(n, 1)]));
            CartanData::type_b(n)?
        }
    };
    Ok(SymbolicImages { cartan, sites: n, e, f, k, k_inv })
}

fn product_over(range: impl Iterator<Item = usize>, factors: &[[Vec<WordSum>; 4]], slot: usize, i: usize) -> WordSum {
    range.fold(WordSum::identity(), |acc, p| acc.product(&factors[p - 1][slot][i]))
}

/// Extends single-factor images to `copies` tensor factors laid out along
/// `direction`, using the given coproduct convention.
///
/// Backward: `E ↦ Σ_j (K on factors < j)(E on j)`, `F ↦ Σ_j (F on j)(K^{-1} on factors > j)`.
/// Forward: `E ↦ Σ_j (E on j)(K on factors > j)`, `F ↦ Σ_j (K^{-1} on factors < j)(F on j)`.
/// In both, `K ↦ ∏_j (K on j)`.
pub fn coproduct_extend(
    images: &SymbolicImages,
    copies: usize,
    direction: Direction,
    convention: Convention,
) -> SymbolicImages {
    let width = images.sites;
    let factors: Vec<[Vec<WordSum>; 4]> = (1..=copies)
        .map(|j| match direction {
            Direction::Column => images.relabel(move |s| s + (j - 1) * width),
            Direction::Row => images.relabel(move |s| j + (s - 1) * copies),
        })
        .collect();
    let r = images.cartan.rank;
    let mut out: [Vec<WordSum>; 4] = Default::default();
    for i in 0..r {
        let mut e = WordSum::zero();
        let mut f = WordSum::zero();
        for j in 1..=copies {
            let (e_term, f_term) = match convention {
                Convention::Backward => (
                    product_over(1..j, &factors, 2, i).product(&factors[j - 1][0][i]),
                    factors[j - 1][1][i].product(&product_over(j + 1..=copies, &factors, 3, i)),
                ),
                Convention::Forward => (
                    factors[j - 1][0][i].product(&product_over(j + 1..=copies, &factors, 2, i)),
                    product_over(1..j, &factors, 3, i).product(&factors[j - 1][1][i]),
                ),
            };
            e = e.sum(&e_term);
            f = f.sum(&f_term);
        }
        out[0].push(e);
        out[1].push(f);
        out[2].push(product_over(1..=copies, &factors, 2, i));
        out[3].push(product_over(1..=copies, &factors, 3, i));
    }
    let [e, f, k, k_inv] = out;
    SymbolicImages { cartan: images.cartan.clone(), sites: width * copies, e, f, k, k_inv }
}

/// Symbolic `U_q(so_{2n})` images on the `n × m` grid.
pub fn l_q_symbolic(n: usize, m: usize, dressing: Dressing) -> Result<SymbolicImages, EmbeddingError> {
    let col = single_column_images(ColumnKind::D, n, dressing)?;
    Ok(coproduct_extend(&col, m, Direction::Column, Convention::Backward))
}

/// `U_q(so_{2n})` acting on the `n × m` grid, together with the flip `t`.
pub fn build_l_q(grid: &Grid, dressing: Dressing) -> Result<GeneratorImages, EmbeddingError> {
    let mut images = l_q_symbolic(grid.n(), grid.m(), dressing)?.materialize(grid)?;
    images.t = Some(t_operator(grid));
    Ok(images)
}

/// The `U_q(sl_n)` part acting along columns.
pub fn build_lambda_q(grid: &Grid, dressing: Dressing) -> Result<GeneratorImages, EmbeddingError> {
    let col = single_column_images(ColumnKind::Gl, grid.n(), dressing)?;
    coproduct_extend(&col, grid.m(), Direction::Column, Convention::Backward).materialize(grid)
}

/// Symbolic `U_q(gl_m)` images acting along the rows of the `n × m` grid.
pub fn rho_q_symbolic(n: usize, m: usize, dressing: Dressing) -> Result<SymbolicImages, EmbeddingError> {
    if m < 2 {
        return Err(EmbeddingError::Rank { kind: "row action", need: "m >= 2", got: format!("m = {m}") });
    }
    let row = single_column_images(ColumnKind::Gl, m, dressing)?;
    Ok(coproduct_extend(&row, n, Direction::Row, Convention::Forward))
}

/// `U_q(gl_m)` along rows: factor `b` is row `b`, forward coproduct.
pub fn build_rho_q(grid: &Grid, dressing: Dressing) -> Result<GeneratorImages, EmbeddingError> {
    rho_q_symbolic(grid.n(), grid.m(), dressing)?.materialize(grid)
}

/// Symbolic `B_j = i·(F_j − q·K_j^{-1}E_j)` built from the row action.
pub fn b_symbolic(n: usize, m: usize, dressing: Dressing) -> Result<Vec<WordSum>, EmbeddingError> {
    let rho = rho_q_symbolic(n, m, dressing)?;
    let i = Scalar::i();
    let minus_q = Scalar::q_pow(1).scale(&GaussRat::from_int(-1));
    Ok((0..m - 1)
        .map(|j| {
            let ke = rho.k_inv[j].product(&rho.e[j]).scale(&minus_q);
            rho.f[j].sum(&ke).scale(&i)
        })
        .collect())
}

/// The coideal generators `B_1, …, B_{m−1}`.
pub fn build_b_generators(grid: &Grid, dressing: Dressing) -> Result<Vec<FockOperator>, EmbeddingError> {
    Ok(b_symbolic(grid.n(), grid.m(), dressing)?.iter().map(|w| w.to_operator(grid)).collect())
}

/// Which classical (`q = 1`) embedding to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassicalKind {
    /// `so_{2n}` on a single column.
    PhiDColumn,
    /// `so_{2n}` on all `m` columns.
    LFull,
}

/// Classical images with `H_i` given by number operators:
/// `H_i = Σ_j (n_{i,j} − n_{i+1,j})` and `H_n = −m + Σ_j (n_{n−1,j} + n_{n,j})`.
pub fn build_classical(kind: ClassicalKind, n: usize, m: usize) -> Result<ClassicalImages, EmbeddingError> {
    if n < 2 {
        return Err(EmbeddingError::Rank { kind: "classical D", need: "n >= 2", got: format!("n = {n}") });
    }
    let m = match kind {
        ClassicalKind::PhiDColumn => 1,
        ClassicalKind::LFull => m,
    };
    let grid = Grid::new(n, m)?;
    let col = |j: usize| move |s: usize| s + (j - 1) * n;
    let sum_cols = |w: &WordSum| (1..=m).fold(WordSum::zero(), |acc, j| acc.sum(&w.relabel(col(j))));
    let mut e = Vec::with_capacity(n);
    let mut f = Vec::with_capacity(n);
    let mut h = Vec::with_capacity(n);
    let count =
        |s: crate::fock::OccState, row: usize| (1..=m).filter(|&j| s.occupied(grid.site(row, j))).count() as i64;
    for i in 1..n {
        e.push(sum_cols(&word(Scalar::one(), vec![psid(i), psi(i + 1)])).to_operator(&grid));
        f.push(sum_cols(&word(Scalar::one(), vec![psid(i + 1), psi(i)])).to_operator(&grid));
        h.push(FockOperator::diagonal(grid.sites(), |s| Scalar::from_int(count(s, i) - count(s, i + 1))));
    }
    e.push(sum_cols(&word(Scalar::one(), vec![psid(n - 1), psid(n)])).to_operator(&grid));
    f.push(sum_cols(&word(Scalar::one(), vec![psi(n), psi(n - 1)])).to_operator(&grid));
    h.push(FockOperator::diagonal(grid.sites(), |s| Scalar::from_int(count(s, n - 1) + count(s, n) - m as i64)));
    Ok(ClassicalImages { grid, cartan: CartanData::type_d(n)?, e, f, h })
}

/// Entrywise `q^{1/2} → 1` limit of an operator with polynomial entries.
pub fn q_to_one_limit(op: &FockOperator) -> Result<FockOperator, EmbeddingError> {
    Ok(op.try_map(|s| s.eval_at_one().map(Scalar::from_gauss))?)
}

/// All named images of an embedding, materialized, in a fixed order.
pub fn named_images(spec: &EmbeddingSpec) -> Result<Vec<(String, FockOperator)>, EmbeddingError> {
    let g = &spec.grid;
    let d = spec.dressing;
    let from_images = |im: GeneratorImages| -> Vec<(String, FockOperator)> {
        im.symbols().into_iter().map(|(s, op)| (s.to_string(), op.clone())).collect()
    };
    let single = |kind: ColumnKind| -> Result<Vec<(String, FockOperator)>, EmbeddingError> {
        if g.m() != 1 {
            return Err(EmbeddingError::Rank { kind: "single column", need: "m = 1", got: format!("m = {}", g.m()) });
        }
        Ok(from_images(single_column_images(kind, g.n(), d)?.materialize(g)?))
    };
    match spec.kind {
        EmbeddingKind::GlColumn => single(ColumnKind::Gl),
        EmbeddingKind::DColumn => single(ColumnKind::D),
        EmbeddingKind::BColumn => single(ColumnKind::B),
        EmbeddingKind::LambdaQ => Ok(from_images(build_lambda_q(g, d)?)),
        EmbeddingKind::LQ => Ok(from_images(build_l_q(g, d)?)),
        EmbeddingKind::RhoQ => Ok(from_images(build_rho_q(g, d)?)),
        EmbeddingKind::BPrime => {
            Ok(build_b_generators(g, d)?.into_iter().enumerate().map(|(j, op)| (format!("B_{}", j + 1), op)).collect())
        }
        EmbeddingKind::TGlobal => Ok(vec![("t".to_string(), t_operator(g))]),
        EmbeddingKind::ClassicalPhiD | EmbeddingKind::ClassicalL => {
            let kind = if spec.kind == EmbeddingKind::ClassicalPhiD {
                ClassicalKind::PhiDColumn
            } else {
                ClassicalKind::LFull
            };
            let c = build_classical(kind, g.n(), g.m())?;
            let r = c.rank();
            let mut out = Vec::with_capacity(3 * r);
            out.extend(c.e.into_iter().enumerate().map(|(i, op)| (format!("E_{}", i + 1), op)));
            out.extend(c.f.into_iter().enumerate().map(|(i, op)| (format!("F_{}", i + 1), op)));
            out.extend(c.h.into_iter().enumerate().map(|(i, op)| (format!("H_{}", i + 1), op)));
            Ok(out)
        }
    }
}

/// The family a column kind realizes.
pub fn family_of(kind: ColumnKind) -> Family {
    match kind {
        ColumnKind::Gl => Family::A,
        ColumnKind::D => Family::D,
        ColumnKind::B => Family::B,
    }
}

/// A grid checked against an explicit site bound, or the default one.
pub fn grid_with_bound(n: usize, m: usize, bound: Option<usize>) -> Result<Grid, EmbeddingError> {
    Ok(match bound {
        Some(b) => Grid::with_bound(n, m, b)?,
        None => Grid::new(n, m)?,
    })
}

#[cfg(test)]
mod tests;
