use std::ops::{Add, Mul, Neg, Sub};

use rayon::prelude::*;

use super::{FockVector, OccState};
use crate::scalars::Scalar;

type Column = Vec<(OccState, Scalar)>;

/// A sparse exact operator on the `2^sites`-dimensional Fock space.
///
/// Column `c` lists the nonzero entries of the image of `v(c)`, sorted by
/// output state. Equality is entrywise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockOperator {
    sites: usize,
    cols: Vec<Column>,
}

/// First entry where two operators differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub input: OccState,
    pub output: OccState,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

/// Sorts, merges repeated output states, and drops zeros.
fn normalize_column(mut entries: Column) -> Column {
    if entries.len() <= 1 {
        entries.retain(|e| !e.1.is_zero());
        return entries;
    }
    entries.sort_by_key(|e| e.0);
    let mut out: Column = Vec::with_capacity(entries.len());
    for (s, c) in entries {
        match out.last_mut() {
            Some((ls, lc)) if *ls == s => *lc = &*lc + &c,
            _ => out.push((s, c)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

fn merge_columns(a: &Column, b: &Column, scale_b: Option<&Scalar>) -> Column {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let scaled = |c: &Scalar| match scale_b {
        Some(k) => c * k,
        None => c.clone(),
    };
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let c = scaled(&b[j].1);
            if !c.is_zero() {
                out.push((b[j].0, c));
            }
            j += 1;
        } else {
            let c = &a[i].1 + &scaled(&b[j].1);
            if !c.is_zero() {
                out.push((a[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

const PAR_MIN: usize = 32;

impl FockOperator {
    pub fn zero(sites: usize) -> Self {
        FockOperator { sites, cols: vec![Vec::new(); 1 << sites] }
    }

    pub fn identity(sites: usize) -> Self {
        FockOperator::from_basis_map(sites, |s| Some((s, Scalar::one())))
    }

    /// An operator sending each basis state to at most one basis state.
    pub fn from_basis_map<F>(sites: usize, f: F) -> Self
    where
        F: Fn(OccState) -> Option<(OccState, Scalar)> + Sync,
    {
        let cols = (0..1u32 << sites)
            .into_par_iter()
            .with_min_len(PAR_MIN)
            .map(|c| match f(OccState(c)) {
                Some((s, k)) if !k.is_zero() => vec![(s, k)],
                _ => Vec::new(),
            })
            .collect();
        FockOperator { sites, cols }
    }

    /// An operator from arbitrary column images; repeats are summed.
    pub fn from_columns<F>(sites: usize, f: F) -> Self
    where
        F: Fn(OccState) -> Vec<(OccState, Scalar)> + Sync,
    {
        let cols = (0..1u32 << sites)
            .into_par_iter()
            .with_min_len(PAR_MIN)
            .map(|c| normalize_column(f(OccState(c))))
            .collect();
        FockOperator { sites, cols }
    }

    /// A diagonal operator.
    pub fn diagonal<F>(sites: usize, f: F) -> Self
    where
        F: Fn(OccState) -> Scalar + Sync,
    {
        FockOperator::from_basis_map(sites, |s| Some((s, f(s))))
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    /// Nonzero entries of the image of `v(s)`.
    pub fn column(&self, s: OccState) -> &[(OccState, Scalar)] {
        &self.cols[s.0 as usize]
    }

    pub fn entry(&self, input: OccState, output: OccState) -> Scalar {
        let col = self.column(input);
        match col.binary_search_by_key(&output, |e| e.0) {
            Ok(p) => col[p].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    /// All entries as `(input, output, scalar)`, in input-major order.
    pub fn entries(&self) -> impl Iterator<Item = (OccState, OccState, &Scalar)> {
        self.cols.iter().enumerate().flat_map(|(c, col)| col.iter().map(move |(s, k)| (OccState(c as u32), *s, k)))
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries().all(|(i, o, _)| i == o)
    }

    fn assert_compatible(&self, other: &FockOperator) {
        assert_eq!(self.sites, other.sites, "operators act on different Fock spaces");
    }

    /// The product `self · rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &FockOperator) -> FockOperator {
        self.assert_compatible(rhs);
        let cols = rhs
            .cols
            .par_iter()
            .with_min_len(PAR_MIN)
            .map(|col| {
                let mut acc: Column = Vec::new();
                for (mid, k) in col {
                    for (out, c) in &self.cols[mid.0 as usize] {
                        acc.push((*out, c * k));
                    }
                }
                normalize_column(acc)
            })
            .collect();
        FockOperator { sites: self.sites, cols }
    }

    pub fn add(&self, other: &FockOperator) -> FockOperator {
        self.combine(other, None)
    }

    pub fn sub(&self, other: &FockOperator) -> FockOperator {
        self.combine(other, Some(&Scalar::from_int(-1)))
    }

    /// `self + c·other`.
    pub fn add_scaled(&self, other: &FockOperator, c: &Scalar) -> FockOperator {
        self.combine(other, Some(c))
    }

    fn combine(&self, other: &FockOperator, scale: Option<&Scalar>) -> FockOperator {
        self.assert_compatible(other);
        let cols = self
            .cols
            .par_iter()
            .with_min_len(PAR_MIN)
            .zip(other.cols.par_iter())
            .map(|(a, b)| merge_columns(a, b, scale))
            .collect();
        FockOperator { sites: self.sites, cols }
    }

    pub fn scale(&self, c: &Scalar) -> FockOperator {
        if c.is_zero() {
            return FockOperator::zero(self.sites);
        }
        let cols = self
            .cols
            .par_iter()
            .with_min_len(PAR_MIN)
            .map(|col| col.iter().map(|(s, k)| (*s, k * c)).collect())
            .collect();
        FockOperator { sites: self.sites, cols }
    }

    /// `AB − BA`.
    pub fn commutator(&self, other: &FockOperator) -> FockOperator {
        self.compose(other).sub(&other.compose(self))
    }

    /// `AB + BA`.
    pub fn anticommutator(&self, other: &FockOperator) -> FockOperator {
        self.compose(other).add(&other.compose(self))
    }

    /// `AB − c·BA`.
    pub fn q_commutator(&self, other: &FockOperator, c: &Scalar) -> FockOperator {
        self.compose(other).add_scaled(&other.compose(self), &-c)
    }

    pub fn pow(&self, e: u32) -> FockOperator {
        let mut acc = FockOperator::identity(self.sites);
        for _ in 0..e {
            acc = self.compose(&acc);
        }
        acc
    }

    pub fn apply(&self, v: &FockVector) -> FockVector {
        let mut out = FockVector::zero();
        for (s, c) in v.iter() {
            for (t, k) in self.column(*s) {
                out.add_term(*t, &(k * c));
            }
        }
        out
    }

    /// The first differing entry, scanning inputs then outputs in order.
    pub fn first_mismatch(&self, other: &FockOperator) -> Option<Mismatch> {
        self.assert_compatible(other);
        for (c, (a, b)) in self.cols.iter().zip(&other.cols).enumerate() {
            if a == b {
                continue;
            }
            let input = OccState(c as u32);
            let mut outs: Vec<OccState> = a.iter().chain(b.iter()).map(|e| e.0).collect();
            outs.sort();
            outs.dedup();
            for output in outs {
                let (l, r) = (self.entry(input, output), other.entry(input, output));
                if l != r {
                    return Some(Mismatch { input, output, lhs: l, rhs: r });
                }
            }
        }
        None
    }

    /// Applies `f` to every entry.
    pub fn try_map<E, F>(&self, f: F) -> Result<FockOperator, E>
    where
        F: Fn(&Scalar) -> Result<Scalar, E> + Sync,
        E: Send,
    {
        let cols = self
            .cols
            .par_iter()
            .map(|col| -> Result<Column, E> {
                let mapped = col.iter().map(|(s, k)| Ok((*s, f(k)?))).collect::<Result<Column, E>>()?;
                Ok(normalize_column(mapped))
            })
            .collect::<Result<Vec<Column>, E>>()?;
        Ok(FockOperator { sites: self.sites, cols })
    }
}

impl<'a> Mul<&'a FockOperator> for &'a FockOperator {
    type Output = FockOperator;
    fn mul(self, rhs: &FockOperator) -> FockOperator {
        self.compose(rhs)
    }
}

impl<'a> Add<&'a FockOperator> for &'a FockOperator {
    type Output = FockOperator;
    fn add(self, rhs: &FockOperator) -> FockOperator {
        FockOperator::add(self, rhs)
    }
}

impl<'a> Sub<&'a FockOperator> for &'a FockOperator {
    type Output = FockOperator;
    fn sub(self, rhs: &FockOperator) -> FockOperator {
        FockOperator::sub(self, rhs)
    }
}

impl Neg for &FockOperator {
    type Output = FockOperator;
    fn neg(self) -> FockOperator {
        self.scale(&Scalar::from_int(-1))
    }
}
