//! Weights of basis states, the vectors `ξ_p` and `Ξ_p`, and the joint
//! highest-weight battery.
//!
//! `ξ_p` is a single basis state. `Ξ_p` is its `q`-superposition along the
//! `U_q(sl_2)` strings of the row action, which makes it an eigenvector of
//! the coideal generators `B_{2j−1}` while staying highest for `U_q(so_{2n})`.

mod battery;
mod weight;
mod xi;

pub use battery::{expected_d_weight, spin_highest_weights, verify_joint_hwv, DualityContext, HwvOutcome};
pub use weight::{
    k_exponents, predicted_k_halves, simple_roots, weight_from_k_exponents, weight_of_state, weight_of_state_checked,
    WeightVec,
};
pub use xi::{big_xi, divided_powers, xi_state, Filler, PrimeWeight};

use thiserror::Error;

use crate::decomposition::DecompError;
use crate::embeddings::EmbeddingError;
use crate::fock::FockError;
use crate::scalars::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HwError {
    #[error("{0}")]
    Bounds(String),
    #[error("{0}")]
    Label(String),
    #[error("{0}")]
    Weight(String),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

impl From<DecompError> for HwError {
    fn from(e: DecompError) -> Self {
        HwError::Label(e.to_string())
    }
}

#[cfg(test)]
mod tests;
