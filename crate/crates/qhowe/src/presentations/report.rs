use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::fock::{FockOperator, FockVector, Grid, Mismatch};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A basis state where the two sides of a relation disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub state: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationResult {
    pub relation: String,
    pub indices: Vec<i64>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

impl RelationResult {
    pub fn pass(relation: impl Into<String>, indices: Vec<i64>) -> Self {
        RelationResult { relation: relation.into(), indices, status: Status::Pass, witness: None }
    }

    pub fn fail(relation: impl Into<String>, indices: Vec<i64>, witness: Witness) -> Self {
        RelationResult { relation: relation.into(), indices, status: Status::Fail, witness: Some(witness) }
    }

    /// Compares two operators entrywise.
    pub fn compare(
        relation: impl Into<String>,
        indices: Vec<i64>,
        grid: &Grid,
        lhs: &FockOperator,
        rhs: &FockOperator,
    ) -> Self {
        match lhs.first_mismatch(rhs) {
            None => RelationResult::pass(relation, indices),
            Some(mm) => RelationResult::fail(relation, indices, witness_from(grid, &mm)),
        }
    }

    /// Compares two vectors entrywise.
    pub fn compare_vectors(
        relation: impl Into<String>,
        indices: Vec<i64>,
        grid: &Grid,
        lhs: &FockVector,
        rhs: &FockVector,
    ) -> Self {
        if lhs == rhs {
            return RelationResult::pass(relation, indices);
        }
        let state = lhs
            .support()
            .chain(rhs.support())
            .find(|s| lhs.get(*s) != rhs.get(*s))
            .expect("unequal vectors differ somewhere");
        let show = |v: &FockVector| v.get(state).map_or_else(|| "0".to_string(), |c| c.to_string());
        let witness = Witness { state: state.format(grid), lhs: show(lhs), rhs: show(rhs) };
        RelationResult::fail(relation, indices, witness)
    }

    /// A boolean check whose failure is described by a witness built by the caller.
    pub fn from_check(
        relation: impl Into<String>,
        indices: Vec<i64>,
        ok: bool,
        witness: impl FnOnce() -> Witness,
    ) -> Self {
        if ok {
            RelationResult::pass(relation, indices)
        } else {
            RelationResult::fail(relation, indices, witness())
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub fn witness_from(grid: &Grid, mm: &Mismatch) -> Witness {
    Witness {
        state: format!("{} -> {}", mm.input.format(grid), mm.output.format(grid)),
        lhs: mm.lhs.to_string(),
        rhs: mm.rhs.to_string(),
    }
}

/// The outcome of one relation suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    pub params: BTreeMap<String, Value>,
    pub results: Vec<RelationResult>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>, params: BTreeMap<String, Value>) -> Self {
        CheckReport { suite: suite.into(), params, results: Vec::new() }
    }

    pub fn with_results(mut self, results: Vec<RelationResult>) -> Self {
        self.results = results;
        self
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(RelationResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationResult> {
        self.results.iter().filter(|r| !r.passed())
    }

    pub fn count(&self) -> usize {
        self.results.len()
    }

    /// One JSON document per report.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for CheckReport {
    /// One line per relation instance, then a summary line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(f, "suite {} [{}]", self.suite, params.join(", "))?;
        for r in &self.results {
            let idx: Vec<String> = r.indices.iter().map(i64::to_string).collect();
            let status = if r.passed() { "pass" } else { "FAIL" };
            write!(f, "  {:<4} {}({})", status, r.relation, idx.join(","))?;
            if let Some(w) = &r.witness {
                write!(f, "  at {}: lhs = {}, rhs = {}", w.state, w.lhs, w.rhs)?;
            }
            writeln!(f)?;
        }
        let failed = self.failures().count();
        write!(f, "  {} relations, {} failed", self.results.len(), failed)
    }
}

/// Builds a `params` map from `(key, value)` pairs.
pub fn params<I, K, V>(items: I) -> BTreeMap<String, Value>
where
    I: IntoIterator<Item = (K, V)>,
    K: Into<String>,
    V: Into<Value>,
{
    items.into_iter().map(|(k, v)| (k.into(), v.into())).collect()
}
