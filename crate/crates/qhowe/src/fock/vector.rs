use std::collections::btree_map::{self, BTreeMap};

use super::{Grid, OccState};
use crate::scalars::Scalar;

/// A sparse vector in the Fock space.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FockVector {
    coeffs: BTreeMap<OccState, Scalar>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    pub fn basis(s: OccState) -> Self {
        FockVector::from_terms([(s, Scalar::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (OccState, Scalar)>>(terms: I) -> Self {
        let mut v = FockVector::zero();
        for (s, c) in terms {
            v.add_term(s, &c);
        }
        v
    }

    /// Adds `c·v(s)`, dropping the entry if it cancels.
    pub fn add_term(&mut self, s: OccState, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(s) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn get(&self, s: OccState) -> Option<&Scalar> {
        self.coeffs.get(&s)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&OccState, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = OccState> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return FockVector::zero();
        }
        FockVector { coeffs: self.coeffs.iter().map(|(s, a)| (*s, a * c)).collect() }
    }

    pub fn add(&self, other: &FockVector) -> Self {
        let mut out = self.clone();
        for (s, c) in other.iter() {
            out.add_term(*s, c);
        }
        out
    }

    pub fn sub(&self, other: &FockVector) -> Self {
        let mut out = self.clone();
        for (s, c) in other.iter() {
            out.add_term(*s, &-c);
        }
        out
    }

    /// `Some(c)` when `self = c·other`; `other` must be nonzero.
    pub fn ratio_to(&self, other: &FockVector) -> Option<Scalar> {
        let (s0, c0) = other.iter().next()?;
        let c = match self.get(*s0) {
            Some(x) => x.checked_div(c0).ok()?,
            None => Scalar::zero(),
        };
        (self == &other.scale(&c)).then_some(c)
    }

    /// Lines `coefficient  state` in state order.
    pub fn format(&self, grid: &Grid) -> Vec<(String, String)> {
        self.coeffs.iter().map(|(s, c)| (s.format(grid), c.to_string())).collect()
    }
}

impl FromIterator<(OccState, Scalar)> for FockVector {
    fn from_iter<I: IntoIterator<Item = (OccState, Scalar)>>(iter: I) -> Self {
        FockVector::from_terms(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_entries() {
        let mut v = FockVector::basis(OccState(3));
        v.add_term(OccState(3), &Scalar::from_int(-1));
        assert!(v.is_zero());
    }

    #[test]
    fn ratio_detects_proportionality() {
        let a = FockVector::from_terms([(OccState(1), Scalar::one()), (OccState(2), Scalar::q_pow(1))]);
        let b = a.scale(&Scalar::i());
        assert_eq!(b.ratio_to(&a), Some(Scalar::i()));
        let c = b.add(&FockVector::basis(OccState(4)));
        assert_eq!(c.ratio_to(&a), None);
    }
}
