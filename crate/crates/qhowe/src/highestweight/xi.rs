use serde::Serialize;

use super::HwError;
use crate::fock::{FockOperator, FockVector, Grid, OccState};
use crate::presentations::GeneratorImages;
use crate::scalars::{q_factorial, GaussRat, Scalar};

/// Which last-column filling is used when `m` is odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Filler {
    /// All `n` sites of the last column occupied: shift `+1/2`.
    Plus,
    /// Rows `1..n−1` of the last column occupied: shift `−1/2` in the last entry.
    Minus,
}

impl Filler {
    pub fn both() -> [Filler; 2] {
        [Filler::Plus, Filler::Minus]
    }

    /// Occupancy mask of the filled last column.
    pub fn mask(self, g: &Grid) -> u32 {
        let rows = match self {
            Filler::Plus => g.n(),
            Filler::Minus => g.n() - 1,
        };
        (1..=rows).fold(0, |acc, i| acc | (1 << (g.site(i, g.m()) - 1)))
    }

    /// Shift of the `D`-weight, in half-units per row.
    pub fn weight_shift_halves(self, n: usize) -> Vec<i64> {
        let mut v = vec![1; n];
        if self == Filler::Minus {
            v[n - 1] = -1;
        }
        v
    }
}

/// A `U_q'(so_m)` weight label `p` with `−n ≤ p_j ≤ n`, `r = ⌊m/2⌋` entries,
/// and a filler exactly when `m` is odd.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeWeight {
    p: Vec<i64>,
    filler: Option<Filler>,
}

impl PrimeWeight {
    pub fn new(g: &Grid, p: Vec<i64>, filler: Option<Filler>) -> Result<PrimeWeight, HwError> {
        let r = g.m() / 2;
        if p.len() != r {
            return Err(HwError::Bounds(format!("expected {r} entries for m = {}, got {:?}", g.m(), p)));
        }
        if let Some(bad) = p.iter().find(|x| x.unsigned_abs() as usize > g.n()) {
            return Err(HwError::Bounds(format!("entry {bad} outside [-{}, {}]", g.n(), g.n())));
        }
        if filler.is_some() != (g.m() % 2 == 1) {
            return Err(HwError::Bounds(format!(
                "a last-column filler is required exactly when m is odd (m = {})",
                g.m()
            )));
        }
        Ok(PrimeWeight { p, filler })
    }

    pub fn p(&self) -> &[i64] {
        &self.p
    }

    pub fn filler(&self) -> Option<Filler> {
        self.filler
    }

    pub fn abs(&self) -> Vec<usize> {
        self.p.iter().map(|x| x.unsigned_abs() as usize).collect()
    }
}

/// The basis state `ξ_p` for `0 ≤ p_j ≤ n`.
///
/// Row `i` occupies its rightmost `2·(r − #{j : p_j ≥ n−i+1})` cells among
/// columns `1..2r`, and column `2j−1` additionally occupies its bottom `p_j`
/// cells.
pub fn xi_state(g: &Grid, p: &[usize]) -> Result<OccState, HwError> {
    let (n, r) = (g.n(), g.m() / 2);
    if p.len() != r {
        return Err(HwError::Bounds(format!("expected {r} entries, got {p:?}")));
    }
    if let Some(bad) = p.iter().find(|&&x| x > n) {
        return Err(HwError::Bounds(format!("entry {bad} exceeds n = {n}")));
    }
    let mut sites = Vec::new();
    for i in 1..=n {
        let pc = r - p.iter().filter(|&&pj| pj > n - i).count();
        sites.extend((2 * r - 2 * pc + 1..=2 * r).map(|j| g.site(i, j)));
    }
    for (j, &pj) in p.iter().enumerate() {
        sites.extend((n - pj + 1..=n).map(|i| g.site(i, 2 * j + 1)));
    }
    let s = OccState::from_sites(sites.iter().copied());
    debug_assert_eq!(s.count() as usize, sites.len(), "row and column parts overlap");
    Ok(s)
}

/// `X^b v / [b]!` for `b = 0..=top`.
pub fn divided_powers(x: &FockOperator, v: &FockVector, top: usize) -> Vec<FockVector> {
    let mut out = Vec::with_capacity(top + 1);
    let mut cur = v.clone();
    for b in 0..=top {
        if b > 0 {
            cur = x.apply(&cur);
        }
        let fact = Scalar::from_laurent(q_factorial(b as u32, 2));
        out.push(cur.scale(&fact.inv().expect("[b]! is nonzero")));
    }
    out
}

/// `θ_j(b) = −½(|p_j| − b)(|p_j| − b − 1)`, always an integer.
fn theta(abs_p: usize, b: usize) -> i32 {
    let d = abs_p as i32 - b as i32;
    -(d * (d - 1)) / 2
}

/// `Ξ_p = Σ_{a ∈ I^p} i^{s·a} q^{θ(a)} (F^a / [a]!) ξ_{abs(p)}`, with
/// `F^a = ∏_j ρ_q(F_{2j−1})^{a_j}`, followed by the last-column filler when
/// `m` is odd.
///
/// The sum factorizes over `j` because the `F_{2j−1}` commute and `θ`,
/// `s·a`, `[a]!` are additive or multiplicative in the `a_j`.
pub fn big_xi(rho: &GeneratorImages, p: &PrimeWeight) -> Result<FockVector, HwError> {
    let g = &rho.grid;
    let abs = p.abs();
    let mut v = FockVector::basis(xi_state(g, &abs)?);
    for (j, (&pj, &aj)) in p.p().iter().zip(&abs).enumerate() {
        let s = if pj < 0 { -1 } else { 1 };
        let powers = divided_powers(rho.f(2 * j + 1), &v, aj);
        let mut acc = FockVector::zero();
        for (b, w) in powers.iter().enumerate() {
            let c = Scalar::q_pow(theta(aj, b)).scale(&GaussRat::i_pow(s * b as i64));
            acc = acc.add(&w.scale(&c));
        }
        v = acc;
    }
    if let Some(f) = p.filler() {
        let mask = f.mask(g);
        v = v
            .iter()
            .map(|(s, c)| {
                debug_assert_eq!(s.0 & mask, 0, "last column must be empty before filling");
                (OccState(s.0 | mask), c.clone())
            })
            .collect();
    }
    Ok(v)
}
