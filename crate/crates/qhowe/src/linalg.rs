//! Exact linear algebra on Fock vectors.
//!
//! Elimination is generic over the two coefficient fields in use: the
//! rational-function field [`Scalar`] for exact kernels and independence, and
//! [`GaussRat`] for ranks after specializing `q^{1/2}` to a rational point.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_rational::BigRational;
use rayon::prelude::*;

use crate::fock::{FockOperator, FockVector, OccState};
use crate::scalars::{GaussRat, Scalar, ScalarError};

/// A field element usable in elimination.
pub trait FieldElem: Clone + PartialEq + Send + Sync
where
    for<'a> &'a Self: Add<&'a Self, Output = Self> + Sub<&'a Self, Output = Self> + Mul<&'a Self, Output = Self>,
{
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    /// Panics on zero; callers only invert pivots.
    fn inverse(&self) -> Self;
    /// Cost proxy used to prefer cheap pivots.
    fn weight(&self) -> usize;
}

impl FieldElem for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }

    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }

    fn inverse(&self) -> Self {
        self.inv().expect("pivot is nonzero")
    }

    fn weight(&self) -> usize {
        self.numer().terms().len() + self.denom().terms().len()
    }
}

impl FieldElem for GaussRat {
    fn zero() -> Self {
        GaussRat::zero()
    }

    fn is_zero(&self) -> bool {
        GaussRat::is_zero(self)
    }

    fn inverse(&self) -> Self {
        self.inv().expect("pivot is nonzero")
    }

    fn weight(&self) -> usize {
        let bits = |r: &BigRational| (r.numer().bits() + r.denom().bits()) as usize;
        bits(self.re()) + bits(self.im())
    }
}

/// A sparse vector keyed by basis state.
pub type SparseVec<T> = BTreeMap<OccState, T>;

fn axpy<T>(target: &mut SparseVec<T>, c: &T, src: &SparseVec<T>)
where
    T: FieldElem,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    for (s, x) in src {
        let term = c * x;
        match target.get_mut(s) {
            Some(y) => {
                let sum = &*y + &term;
                if sum.is_zero() {
                    target.remove(s);
                } else {
                    *y = sum;
                }
            }
            None => {
                if !term.is_zero() {
                    target.insert(*s, term);
                }
            }
        }
    }
}

/// An incrementally built echelon basis of a subspace.
///
/// Each stored row has a distinct pivot state with coefficient one, and every
/// other row is zero at that pivot.
#[derive(Debug, Clone)]
pub struct Echelon<T> {
    rows: Vec<(OccState, SparseVec<T>)>,
}

impl<T> Default for Echelon<T> {
    fn default() -> Self {
        Echelon { rows: Vec::new() }
    }
}

impl<T> Echelon<T>
where
    T: FieldElem,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    pub fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; zero iff `v` lies in the span.
    pub fn reduce(&self, mut v: SparseVec<T>) -> SparseVec<T> {
        for (p, row) in &self.rows {
            if let Some(c) = v.get(p).cloned() {
                axpy(&mut v, &(&T::zero() - &c), row);
            }
        }
        v
    }

    /// Adds `v` to the basis; returns whether it enlarged the span.
    pub fn insert(&mut self, v: SparseVec<T>) -> bool {
        let r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let (pivot, _) =
            r.iter().min_by_key(|(s, c)| (c.weight(), **s)).map(|(s, c)| (*s, c.clone())).expect("nonempty");
        let inv = r[&pivot].inverse();
        let row: SparseVec<T> = r.into_iter().map(|(s, c)| (s, &c * &inv)).collect();
        for (_, other) in self.rows.iter_mut() {
            if let Some(c) = other.get(&pivot).cloned() {
                axpy(other, &(&T::zero() - &c), &row);
            }
        }
        self.rows.push((pivot, row));
        true
    }

    pub fn contains(&self, v: SparseVec<T>) -> bool {
        self.reduce(v).is_empty()
    }
}

fn as_sparse(v: &FockVector) -> SparseVec<Scalar> {
    v.iter().map(|(s, c)| (*s, c.clone())).collect()
}

/// Exact rank of a family of vectors over the rational-function field.
pub fn rank_exact(vectors: &[FockVector]) -> usize {
    let mut ech = Echelon::new();
    for v in vectors {
        ech.insert(as_sparse(v));
    }
    ech.rank()
}

/// Specializes `q^{1/2} ↦ x0` entrywise.
pub fn specialize_vector(v: &FockVector, x0: &BigRational) -> Result<SparseVec<GaussRat>, ScalarError> {
    let mut out = SparseVec::new();
    for (s, c) in v.iter() {
        let g = c.specialize(x0)?;
        if !g.is_zero() {
            out.insert(*s, g);
        }
    }
    Ok(out)
}

/// A sparse operator over [`GaussRat`], stored by column.
#[derive(Debug, Clone)]
pub struct SpecializedOperator {
    cols: Vec<Vec<(OccState, GaussRat)>>,
}

impl SpecializedOperator {
    pub fn new(op: &FockOperator, x0: &BigRational) -> Result<Self, ScalarError> {
        let cols = (0..op.dim())
            .into_par_iter()
            .map(|c| {
                let mut col = Vec::new();
                for (s, k) in op.column(OccState(c as u32)) {
                    let g = k.specialize(x0)?;
                    if !g.is_zero() {
                        col.push((*s, g));
                    }
                }
                Ok(col)
            })
            .collect::<Result<Vec<_>, ScalarError>>()?;
        Ok(SpecializedOperator { cols })
    }

    pub fn apply(&self, v: &SparseVec<GaussRat>) -> SparseVec<GaussRat> {
        let mut out = SparseVec::new();
        for (s, c) in v {
            for (t, k) in &self.cols[s.0 as usize] {
                let term = k * c;
                let entry = out.entry(*t).or_insert_with(GaussRat::zero);
                *entry = &*entry + &term;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

/// Dimension of the smallest subspace containing `seeds` and stable under
/// every operator, computed at the specialization `q^{1/2} = x0`.
///
/// Breadth-first closure: each new basis direction is pushed through all
/// operators until nothing new appears.
pub fn closure_rank(seeds: &[FockVector], ops: &[FockOperator], x0: &BigRational) -> Result<usize, ScalarError> {
    let specialized = ops.iter().map(|op| SpecializedOperator::new(op, x0)).collect::<Result<Vec<_>, _>>()?;
    let mut ech = Echelon::new();
    let mut queue = Vec::new();
    for s in seeds {
        let v = specialize_vector(s, x0)?;
        if ech.insert(v.clone()) {
            queue.push(v);
        }
    }
    while let Some(v) = queue.pop() {
        let images: Vec<SparseVec<GaussRat>> = specialized.par_iter().map(|op| op.apply(&v)).collect();
        for w in images {
            if ech.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    Ok(ech.rank())
}

/// A basis of the joint kernel `⋂ ker A_k`, computed exactly.
///
/// Rows of the stacked matrix are reduced to echelon form over the
/// rational-function field; each free column yields one kernel vector.
pub fn joint_kernel(ops: &[FockOperator]) -> Vec<FockVector> {
    let Some(first) = ops.first() else {
        return Vec::new();
    };
    let dim = first.dim();
    let mut rows: Vec<BTreeMap<OccState, SparseVec<Scalar>>> = vec![BTreeMap::new(); ops.len()];
    for (k, op) in ops.iter().enumerate() {
        for (input, output, c) in op.entries() {
            rows[k].entry(output).or_default().insert(input, c.clone());
        }
    }
    let mut ech: Echelon<Scalar> = Echelon::new();
    for per_op in rows {
        for (_, row) in per_op {
            ech.insert(row);
        }
    }
    let pivots: std::collections::BTreeSet<OccState> = ech.rows.iter().map(|(p, _)| *p).collect();
    let mut basis = Vec::new();
    for free in (0..dim as u32).map(OccState).filter(|s| !pivots.contains(s)) {
        // Fully reduced rows: x_pivot = −Σ_free row[free]·x_free.
        let mut v = FockVector::basis(free);
        for (p, row) in &ech.rows {
            if let Some(c) = row.get(&free) {
                v.add_term(*p, &-c);
            }
        }
        basis.push(v);
    }
    basis
}
