//! Cartan data and exact relation suites.
//!
//! Every suite compares full sparse matrices over the scalar field, so a pass
//! is an operator identity rather than a sampled check. Relation instances are
//! independent and run in parallel; results keep a fixed generation order.

mod cartan;
mod clifford;
mod report;
mod suites;

pub use cartan::{CartanData, Family};
pub use clifford::{check_clifford_kernel, CliffordImages, CliffordSymbol};
pub use report::{params, witness_from, CheckReport, RelationResult, Status, Witness};
pub use suites::{
    check_classical, check_commutation, check_drinfeld_jimbo, check_o_extension, check_q_serre, check_uqprime,
};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::fock::{FockOperator, Grid};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("type {family:?} is not defined in rank {rank}")]
    Rank { family: Family, rank: usize },
    #[error("missing generator image {0}")]
    MissingGenerator(String),
    #[error("{0}")]
    Unsupported(String),
}

/// Names a generator image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Symbol {
    E(usize),
    F(usize),
    K(usize),
    KInv(usize),
    H(usize),
    T,
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::E(i) => write!(f, "E_{i}"),
            Symbol::F(i) => write!(f, "F_{i}"),
            Symbol::K(i) => write!(f, "K_{i}"),
            Symbol::KInv(i) => write!(f, "K_{i}^-1"),
            Symbol::H(i) => write!(f, "H_{i}"),
            Symbol::T => write!(f, "t"),
        }
    }
}

/// Operators `E_i, F_i, K_i^{±1}` (and optionally `t`) claimed to satisfy the
/// relations of `cartan`. Index `i` is 1-based in every accessor.
#[derive(Debug, Clone)]
pub struct GeneratorImages {
    pub grid: Grid,
    pub cartan: CartanData,
    pub e: Vec<FockOperator>,
    pub f: Vec<FockOperator>,
    pub k: Vec<FockOperator>,
    pub k_inv: Vec<FockOperator>,
    pub t: Option<FockOperator>,
}

impl GeneratorImages {
    pub fn rank(&self) -> usize {
        self.cartan.rank
    }

    pub fn e(&self, i: usize) -> &FockOperator {
        &self.e[i - 1]
    }

    pub fn f(&self, i: usize) -> &FockOperator {
        &self.f[i - 1]
    }

    pub fn k(&self, i: usize) -> &FockOperator {
        &self.k[i - 1]
    }

    pub fn k_inv(&self, i: usize) -> &FockOperator {
        &self.k_inv[i - 1]
    }

    pub fn validate(&self) -> Result<(), PresentationError> {
        let r = self.rank();
        for (name, v) in [("E", &self.e), ("F", &self.f), ("K", &self.k), ("K^-1", &self.k_inv)] {
            if v.len() < r {
                return Err(PresentationError::MissingGenerator(format!("{name}_{}", v.len() + 1)));
            }
        }
        Ok(())
    }

    /// Every image with its symbol, in a fixed order.
    pub fn symbols(&self) -> Vec<(Symbol, &FockOperator)> {
        let r = self.rank();
        let mut out = Vec::with_capacity(4 * r + 1);
        out.extend((1..=r).map(|i| (Symbol::E(i), self.e(i))));
        out.extend((1..=r).map(|i| (Symbol::F(i), self.f(i))));
        out.extend((1..=r).map(|i| (Symbol::K(i), self.k(i))));
        out.extend((1..=r).map(|i| (Symbol::KInv(i), self.k_inv(i))));
        if let Some(t) = &self.t {
            out.push((Symbol::T, t));
        }
        out
    }

    pub fn get_mut(&mut self, s: Symbol) -> Option<&mut FockOperator> {
        match s {
            Symbol::E(i) => self.e.get_mut(i - 1),
            Symbol::F(i) => self.f.get_mut(i - 1),
            Symbol::K(i) => self.k.get_mut(i - 1),
            Symbol::KInv(i) => self.k_inv.get_mut(i - 1),
            Symbol::T => self.t.as_mut(),
            Symbol::H(_) => None,
        }
    }

    /// A copy with one image replaced by `image + identity`.
    pub fn perturbed(&self, s: Symbol) -> GeneratorImages {
        let mut out = self.clone();
        let id = FockOperator::identity(self.grid.sites());
        if let Some(op) = out.get_mut(s) {
            *op = &*op + &id;
        }
        out
    }
}

/// Classical (`q = 1`) images with the Cartan elements `H_i` given directly.
#[derive(Debug, Clone)]
pub struct ClassicalImages {
    pub grid: Grid,
    pub cartan: CartanData,
    pub e: Vec<FockOperator>,
    pub f: Vec<FockOperator>,
    pub h: Vec<FockOperator>,
}

impl ClassicalImages {
    pub fn rank(&self) -> usize {
        self.cartan.rank
    }

    pub fn validate(&self) -> Result<(), PresentationError> {
        let r = self.rank();
        for (name, v) in [("E", &self.e), ("F", &self.f), ("H", &self.h)] {
            if v.len() < r {
                return Err(PresentationError::MissingGenerator(format!("{name}_{}", v.len() + 1)));
            }
        }
        Ok(())
    }

    /// A copy with one image replaced by `image + identity`.
    pub fn perturbed(&self, s: Symbol) -> ClassicalImages {
        let mut out = self.clone();
        let id = FockOperator::identity(self.grid.sites());
        let slot = match s {
            Symbol::E(i) => out.e.get_mut(i - 1),
            Symbol::F(i) => out.f.get_mut(i - 1),
            Symbol::H(i) => out.h.get_mut(i - 1),
            _ => None,
        };
        if let Some(op) = slot {
            *op = &*op + &id;
        }
        out
    }
}
