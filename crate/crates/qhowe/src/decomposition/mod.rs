//! Label combinatorics, Weyl dimensions, and the duality certificates.
//!
//! Labels are partitions `μ` in a `2n × ⌊m/2⌋` box with `μ'_1 + μ'_2 ≤ 2n`.
//! Each pairs an `O(2n)`-module with the `so_m`-module of highest weight
//! `μ̄_i = n − μ'_{r+1−i}`.

mod labels;
mod report;
mod weyl;

pub use labels::{enumerate_labels, is_admissible, mu_bar, mu_dagger, PartitionLabel};
pub use report::{duality_report, sxs_report, Certificate, Component, DualityReport, ReportOptions};
pub use weyl::{o_dim, so_even_dim, weyl_dim, RootSystemData};

use thiserror::Error;

use crate::fock::FockError;
use crate::highestweight::HwError;
use crate::presentations::PresentationError;
use crate::scalars::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error("{0}")]
    Label(String),
    #[error("{0}")]
    Dominance(String),
    #[error("{0}")]
    NonIntegral(String),
    #[error(transparent)]
    Hw(#[from] HwError),
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

impl From<PresentationError> for DecompError {
    fn from(e: PresentationError) -> Self {
        DecompError::Label(e.to_string())
    }
}

#[cfg(test)]
mod tests;
