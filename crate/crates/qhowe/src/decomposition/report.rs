use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use super::labels::{enumerate_labels, mu_bar, mu_dagger};
use super::weyl::{binomial, o_dim, so_even_dim};
use super::{DecompError, PartitionLabel};
use crate::embeddings::Dressing;
use crate::fock::{FockVector, Grid};
use crate::highestweight::{verify_joint_hwv, DualityContext, HwvOutcome};
use crate::linalg::{closure_rank, specialize_vector, Echelon};
use crate::presentations::Status;

/// Settings shared by the duality reports.
#[derive(Debug, Clone)]
pub struct ReportOptions {
    pub dressing: Dressing,
    /// Specialization `q^{1/2} = x0` for rank computations.
    pub x0: BigRational,
    /// A second specialization at which the odd-`m` closure rank is recomputed.
    pub spot_x0: Option<BigRational>,
    /// Site bound passed to the grid.
    pub max_sites: Option<usize>,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            dressing: Dressing::Undressed,
            x0: BigRational::from_integer(BigInt::from(2)),
            spot_x0: Some(BigRational::from_integer(BigInt::from(3))),
            max_sites: None,
        }
    }
}

/// One summand `V_μ ⊗ W_μ̄`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub mu: PartitionLabel,
    pub mu_bar: Vec<i64>,
    pub dim_o: u64,
    /// `so_m`-dimension of `μ̄`; `None` for odd `m`.
    pub dim_w: Option<u64>,
}

/// One certified fact behind the verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Certificate {
    fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Certificate { name: name.into(), status: if ok { Status::Pass } else { Status::Fail }, detail: detail.into() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DualityReport {
    pub n: usize,
    pub m: usize,
    pub components: Vec<Component>,
    /// `Σ dim_O · dim_W` for even `m`; the orbit-closure rank for odd `m`.
    pub total: u64,
    pub expected: u64,
    pub verdict: Status,
    pub checks: Vec<Certificate>,
    #[serde(skip)]
    pub hwv: Vec<HwvOutcome>,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.verdict == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for DualityReport {
    /// An aligned table, then one line per certificate.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<[String; 4]> = self
            .components
            .iter()
            .map(|c| {
                let bar: Vec<String> = c.mu_bar.iter().map(i64::to_string).collect();
                [
                    c.mu.to_string(),
                    format!("({})", bar.join(",")),
                    c.dim_o.to_string(),
                    c.dim_w.map_or_else(|| "-".to_string(), |d| d.to_string()),
                ]
            })
            .collect();
        let head = ["mu", "mu_bar", "dim_O", "dim_W"];
        let widths: Vec<usize> = (0..4)
            .map(|k| rows.iter().map(|r| r[k].chars().count()).chain([head[k].len()]).max().unwrap_or(0))
            .collect();
        writeln!(f, "n = {}, m = {}", self.n, self.m)?;
        let line = |cells: [&str; 4]| -> String {
            cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}", w = *w)).collect::<Vec<_>>().join("  ")
        };
        writeln!(f, "{}", line(head))?;
        for r in &rows {
            writeln!(f, "{}", line([&r[0], &r[1], &r[2], &r[3]]))?;
        }
        writeln!(f, "total = {}, expected = {}", self.total, self.expected)?;
        for c in &self.checks {
            let s = if c.status == Status::Pass { "pass" } else { "FAIL" };
            writeln!(f, "  {s:<4} {}: {}", c.name, c.detail)?;
        }
        write!(f, "verdict: {}", if self.passed() { "pass" } else { "fail" })
    }
}

/// The joint decomposition of the `n × m` Fock space.
///
/// Even `m`: dimensions `dim_O(μ)·dim_{so_m}(μ̄)` must sum to `2^{nm}`, every
/// label passes the joint highest-weight battery, the pairs
/// (`D`-weight, `B`-eigenvalues) are distinct, partner labels `μ ≠ μ†` carry
/// opposite `t`-signs, and the `Ξ`'s are independent.
///
/// Odd `m`: every label passes the battery for both fillers, and the
/// invariant closure of all `Ξ`'s under both actions (rank at `q^{1/2} = x0`)
/// is the whole space.
pub fn duality_report(n: usize, m: usize, opts: &ReportOptions) -> Result<DualityReport, DecompError> {
    let grid = match opts.max_sites {
        Some(b) => Grid::with_bound(n, m, b)?,
        None => Grid::new(n, m)?,
    };
    let labels = enumerate_labels(n, m)?;
    let r = m / 2;
    let components = labels
        .iter()
        .map(|mu| {
            let bar = mu_bar(mu, 2 * n, r)?;
            let dim_w = if m.is_multiple_of(2) { Some(so_even_dim(&bar)?) } else { None };
            Ok(Component { mu: mu.clone(), mu_bar: bar, dim_o: o_dim(mu, n)?, dim_w })
        })
        .collect::<Result<Vec<_>, DecompError>>()?;
    let expected = 1u64 << grid.sites();
    let ctx = DualityContext::new(&grid, opts.dressing)?;
    let hwv: Vec<HwvOutcome> = labels
        .par_iter()
        .map(|mu| verify_joint_hwv(&ctx, mu))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();

    let mut checks = Vec::new();
    let failed: Vec<String> =
        hwv.iter().filter(|o| !o.passed()).map(|o| format!("{}{}", o.mu, filler_tag(o))).collect();
    checks.push(Certificate::new(
        "joint_hwv",
        failed.is_empty(),
        if failed.is_empty() {
            format!("{} highest weight vectors verified", hwv.len())
        } else {
            format!("failed for {}", failed.join(", "))
        },
    ));

    let total;
    if m.is_multiple_of(2) {
        total = components.iter().map(|c| c.dim_o * c.dim_w.unwrap_or(0)).sum();
        checks.push(Certificate::new("dimension_sum", total == expected, format!("{total} = 2^{}", grid.sites())));
        checks.push(multiplicity_free(&hwv));
        checks.push(partner_signs(&hwv, n)?);
        checks.push(independence(&hwv, &opts.x0)?);
    } else {
        let seeds: Vec<FockVector> = hwv.iter().map(|o| o.vector.clone()).collect();
        let gens = ctx.all_generators();
        let rank = closure_rank(&seeds, &gens, &opts.x0)?;
        total = rank as u64;
        checks.push(Certificate::new(
            "orbit_closure",
            total == expected,
            format!("rank {rank} at q^(1/2) = {} of {expected}", opts.x0),
        ));
        if let Some(x1) = &opts.spot_x0 {
            let again = closure_rank(&seeds, &gens, x1)?;
            checks.push(Certificate::new(
                "orbit_closure_spot",
                again == rank,
                format!("rank {again} at q^(1/2) = {x1}"),
            ));
        }
    }
    let ok = total == expected && checks.iter().all(|c| c.status == Status::Pass);
    Ok(DualityReport {
        n,
        m,
        components,
        total,
        expected,
        verdict: if ok { Status::Pass } else { Status::Fail },
        checks,
        hwv,
    })
}

fn filler_tag(o: &HwvOutcome) -> String {
    o.filler.map_or_else(String::new, |f| format!("[{f:?}]"))
}

fn multiplicity_free(hwv: &[HwvOutcome]) -> Certificate {
    let mut seen = BTreeSet::new();
    let mut clash = None;
    for o in hwv {
        let key = (o.d_weight.clone(), o.p.clone());
        if !seen.insert(key) {
            clash = Some(o.mu.to_string());
        }
    }
    // B-eigenvalues [p_j] determine p, so distinct p means distinct eigenvalue tuples.
    let eigen_ok = hwv.iter().all(|o| o.b_eigenvalues.iter().all(Option::is_some));
    Certificate::new(
        "multiplicity_free",
        clash.is_none() && eigen_ok,
        match clash {
            Some(mu) => format!("repeated (weight, eigenvalues) at {mu}"),
            None if eigen_ok => format!("{} distinct (D-weight, B-eigenvalue) pairs", hwv.len()),
            None => "some Xi is not a B-eigenvector".to_string(),
        },
    )
}

fn partner_signs(hwv: &[HwvOutcome], n: usize) -> Result<Certificate, DecompError> {
    let by_label: BTreeMap<&PartitionLabel, &HwvOutcome> = hwv.iter().map(|o| (&o.mu, o)).collect();
    let mut pairs = 0;
    let mut bad = Vec::new();
    for o in hwv {
        let partner = mu_dagger(&o.mu, 2 * n)?;
        if o.mu.height() >= n || partner == o.mu {
            continue;
        }
        let Some(other) = by_label.get(&partner) else { continue };
        pairs += 1;
        let opposite = matches!((o.t_sign, other.t_sign), (Some(a), Some(b)) if a == -b);
        if !opposite || o.d_weight != other.d_weight || o.p == other.p {
            bad.push(format!("{} / {}", o.mu, partner));
        }
    }
    Ok(Certificate::new(
        "partner_labels",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{pairs} partner pairs share a D-weight and carry opposite t-signs")
        } else {
            format!("mismatch for {}", bad.join(", "))
        },
    ))
}

fn independence(hwv: &[HwvOutcome], x0: &BigRational) -> Result<Certificate, DecompError> {
    let mut ech = Echelon::new();
    for o in hwv {
        ech.insert(specialize_vector(&o.vector, x0)?);
    }
    Ok(Certificate::new(
        "independent",
        ech.rank() == hwv.len(),
        format!("rank {} of {} vectors at q^(1/2) = {x0}", ech.rank(), hwv.len()),
    ))
}

/// `S ⊗ S` for `U_q(so_{2n})`: the `m = 2` report, which must have exactly
/// `2n + 1` components, single columns of heights `0..2n` with dimensions
/// `C(2n, j)`.
pub fn sxs_report(n: usize, opts: &ReportOptions) -> Result<DualityReport, DecompError> {
    let mut report = duality_report(n, 2, opts)?;
    let count_ok = report.components.len() == 2 * n + 1;
    let columns_ok = report.components.iter().enumerate().all(|(j, c)| c.mu == PartitionLabel::column(j));
    let dims_ok = report
        .components
        .iter()
        .enumerate()
        .all(|(j, c)| c.dim_o * c.dim_w.unwrap_or(0) == binomial(2 * n as u64, j as u64));
    report.checks.push(Certificate::new(
        "spin_square",
        count_ok && columns_ok && dims_ok,
        format!("{} components, single columns with binomial dimensions", report.components.len()),
    ));
    if !(count_ok && columns_ok && dims_ok) {
        report.verdict = Status::Fail;
    }
    Ok(report)
}
