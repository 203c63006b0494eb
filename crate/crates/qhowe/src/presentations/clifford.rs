use std::fmt;

use serde_json::Value;

use super::report::params;
use super::{CheckReport, RelationResult};
use crate::fock::{op_from_word, Factor, FockOperator, Grid};
use crate::scalars::Scalar;

/// Names an elementary Clifford image.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CliffordSymbol {
    Psi(usize),
    PsiDagger(usize),
    Omega(usize),
    OmegaInv(usize),
}

impl fmt::Display for CliffordSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliffordSymbol::Psi(a) => write!(f, "psi_{a}"),
            CliffordSymbol::PsiDagger(a) => write!(f, "psi_{a}^+"),
            CliffordSymbol::Omega(a) => write!(f, "omega_{a}"),
            CliffordSymbol::OmegaInv(a) => write!(f, "omega_{a}^-1"),
        }
    }
}

/// The operators `ψ_a, ψ_a†, ω_a^{±1}` of one grid, indexed from 1.
#[derive(Debug, Clone)]
pub struct CliffordImages {
    pub grid: Grid,
    pub psi: Vec<FockOperator>,
    pub psi_dagger: Vec<FockOperator>,
    pub omega: Vec<FockOperator>,
    pub omega_inv: Vec<FockOperator>,
}

impl CliffordImages {
    pub fn new(grid: &Grid) -> CliffordImages {
        let build = |f: fn(usize) -> Factor| -> Vec<FockOperator> {
            (1..=grid.sites()).map(|a| op_from_word(grid, &[f(a)], Scalar::one()).expect("site in range")).collect()
        };
        CliffordImages {
            grid: *grid,
            psi: build(Factor::psi),
            psi_dagger: build(Factor::psi_dagger),
            omega: build(|a| Factor::omega(a, 1)),
            omega_inv: build(|a| Factor::omega(a, -1)),
        }
    }

    /// A copy with one image replaced by `image + identity`.
    pub fn perturbed(&self, s: CliffordSymbol) -> CliffordImages {
        let mut out = self.clone();
        let slot = match s {
            CliffordSymbol::Psi(a) => out.psi.get_mut(a - 1),
            CliffordSymbol::PsiDagger(a) => out.psi_dagger.get_mut(a - 1),
            CliffordSymbol::Omega(a) => out.omega.get_mut(a - 1),
            CliffordSymbol::OmegaInv(a) => out.omega_inv.get_mut(a - 1),
        };
        if let Some(op) = slot {
            *op = &*op + &FockOperator::identity(self.grid.sites());
        }
        out
    }
}

/// Canonical anticommutation, `ψ_a² = (ψ_a†)² = 0`, `{ψ_a, ψ_a†} = 1`,
/// `ω_aω_a^{-1} = 1`, commuting `ω`'s, and the conjugations
/// `ω_aψ_b†ω_a^{-1} = q^{−δ_ab}ψ_b†`, `ω_aψ_bω_a^{-1} = q^{δ_ab}ψ_b`,
/// exhaustively over all site pairs.
pub fn check_clifford_kernel(images: &CliffordImages) -> CheckReport {
    let g = &images.grid;
    let n = g.sites();
    let id = FockOperator::identity(n);
    let zero = FockOperator::zero(n);
    let (psi, dag, om, omi) = (&images.psi, &images.psi_dagger, &images.omega, &images.omega_inv);
    let mut tasks: Vec<super::suites::Task> = Vec::new();
    let idx = |v: &[usize]| v.iter().map(|&i| i as i64).collect::<Vec<i64>>();
    for a in 0..n {
        let (id, zero) = (&id, &zero);
        tasks.push(Box::new(move || {
            RelationResult::compare("psi_squared", idx(&[a + 1]), g, &(&psi[a] * &psi[a]), zero)
        }));
        tasks.push(Box::new(move || {
            RelationResult::compare("psi_dagger_squared", idx(&[a + 1]), g, &(&dag[a] * &dag[a]), zero)
        }));
        tasks.push(Box::new(move || {
            RelationResult::compare("omega_inverse", idx(&[a + 1]), g, &(&om[a] * &omi[a]), id)
        }));
        for b in 0..n {
            if a < b {
                tasks.push(Box::new(move || {
                    RelationResult::compare("psi_psi", idx(&[a + 1, b + 1]), g, &psi[a].anticommutator(&psi[b]), zero)
                }));
                tasks.push(Box::new(move || {
                    RelationResult::compare(
                        "psi_dagger_psi_dagger",
                        idx(&[a + 1, b + 1]),
                        g,
                        &dag[a].anticommutator(&dag[b]),
                        zero,
                    )
                }));
                tasks.push(Box::new(move || {
                    RelationResult::compare("omega_omega", idx(&[a + 1, b + 1]), g, &om[a].commutator(&om[b]), zero)
                }));
            }
            tasks.push(Box::new(move || {
                let rhs = if a == b { id } else { zero };
                RelationResult::compare("psi_psi_dagger", idx(&[a + 1, b + 1]), g, &psi[a].anticommutator(&dag[b]), rhs)
            }));
            tasks.push(Box::new(move || {
                let lhs = &(&om[a] * &dag[b]) * &omi[a];
                let rhs = if a == b { dag[b].scale(&Scalar::q_pow(-1)) } else { dag[b].clone() };
                RelationResult::compare("omega_psi_dagger", idx(&[a + 1, b + 1]), g, &lhs, &rhs)
            }));
            tasks.push(Box::new(move || {
                let lhs = &(&om[a] * &psi[b]) * &omi[a];
                let rhs = if a == b { psi[b].scale(&Scalar::q_pow(1)) } else { psi[b].clone() };
                RelationResult::compare("omega_psi", idx(&[a + 1, b + 1]), g, &lhs, &rhs)
            }));
        }
    }
    let report = CheckReport::new(
        "clifford_kernel",
        params([("n", Value::from(g.n())), ("m", Value::from(g.m())), ("sites", Value::from(n))]),
    );
    report.with_results(super::suites::run(tasks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_suite_passes_small_grids() {
        for (n, m) in [(1, 1), (2, 1), (2, 2), (1, 3)] {
            let g = Grid::new(n, m).unwrap();
            let r = check_clifford_kernel(&CliffordImages::new(&g));
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn perturbed_psi_is_caught() {
        let g = Grid::new(2, 1).unwrap();
        let r = check_clifford_kernel(&CliffordImages::new(&g).perturbed(CliffordSymbol::Psi(1)));
        let bad = r.failures().next().unwrap();
        assert!(bad.witness.is_some());
    }
}
