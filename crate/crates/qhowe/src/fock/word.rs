use std::fmt;

use serde::Serialize;

use super::{psi_dagger_on_state, psi_on_state, FockError, FockOperator, Grid, OccState};
use crate::scalars::{GaussRat, LaurentHalf, Scalar};

/// One generator of the quantized Clifford algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Elementary {
    Psi,
    PsiDagger,
    /// `ω^e`.
    Omega(i32),
}

/// A generator placed on a site.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Factor {
    pub gen: Elementary,
    pub site: usize,
}

impl Factor {
    pub fn psi(site: usize) -> Factor {
        Factor { gen: Elementary::Psi, site }
    }

    pub fn psi_dagger(site: usize) -> Factor {
        Factor { gen: Elementary::PsiDagger, site }
    }

    pub fn omega(site: usize, exponent: i32) -> Factor {
        Factor { gen: Elementary::Omega(exponent), site }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.gen {
            Elementary::Psi => write!(f, "psi({})", self.site),
            Elementary::PsiDagger => write!(f, "psi+({})", self.site),
            Elementary::Omega(e) => write!(f, "omega({})^{}", self.site, e),
        }
    }
}

/// `coeff · f_1 f_2 ⋯ f_k`, with `f_k` applied first.
///
/// A word maps every basis state to at most one basis state, so it can be
/// applied state by state without materializing a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    pub coeff: Scalar,
    pub factors: Vec<Factor>,
}

impl Word {
    pub fn new(coeff: Scalar, factors: Vec<Factor>) -> Word {
        Word { coeff, factors }
    }

    pub fn identity() -> Word {
        Word::new(Scalar::one(), Vec::new())
    }

    pub fn check(&self, grid: &Grid) -> Result<(), FockError> {
        self.factors.iter().try_for_each(|f| grid.check_site(f.site))
    }

    /// The image of `v(s)` as `(state, coefficient)`, or `None` if it vanishes.
    pub fn apply_state(&self, s: OccState) -> Option<(OccState, Scalar)> {
        let mut cur = s;
        let mut odd = false;
        let mut q_exp = 0i32;
        for f in self.factors.iter().rev() {
            match f.gen {
                Elementary::Psi => {
                    let (t, o) = psi_on_state(f.site, cur)?;
                    cur = t;
                    odd ^= o;
                }
                Elementary::PsiDagger => {
                    let (t, o) = psi_dagger_on_state(f.site, cur)?;
                    cur = t;
                    odd ^= o;
                }
                Elementary::Omega(e) => {
                    if cur.occupied(f.site) {
                        q_exp -= e;
                    }
                }
            }
        }
        let unit = LaurentHalf::monomial(GaussRat::from_int(if odd { -1 } else { 1 }), 2 * q_exp);
        Some((cur, &self.coeff * &Scalar::from_laurent(unit)))
    }

    /// The product `self · other`.
    pub fn then(&self, other: &Word) -> Word {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Word::new(&self.coeff * &other.coeff, factors)
    }

    pub fn scale(&self, c: &Scalar) -> Word {
        Word::new(&self.coeff * c, self.factors.clone())
    }

    /// Moves every factor to the site `f(site)`.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Word {
        let factors = self.factors.iter().map(|x| Factor { gen: x.gen, site: f(x.site) }).collect();
        Word::new(self.coeff.clone(), factors)
    }

    pub fn is_diagonal(&self) -> bool {
        self.factors.iter().all(|f| matches!(f.gen, Elementary::Omega(_)))
    }

    /// Inverse of a diagonal word; `None` if the word is not diagonal or is zero.
    pub fn inverse_diagonal(&self) -> Option<Word> {
        if !self.is_diagonal() {
            return None;
        }
        let coeff = self.coeff.inv().ok()?;
        let factors = self
            .factors
            .iter()
            .rev()
            .map(|f| match f.gen {
                Elementary::Omega(e) => Factor::omega(f.site, -e),
                _ => unreachable!(),
            })
            .collect();
        Some(Word::new(coeff, factors))
    }

    pub fn to_operator(&self, grid: &Grid) -> FockOperator {
        FockOperator::from_basis_map(grid.sites(), |s| self.apply_state(s))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coeff)?;
        for x in &self.factors {
            write!(f, " {x}")?;
        }
        Ok(())
    }
}

/// A finite sum of words; every generator image is one of these.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WordSum {
    pub words: Vec<Word>,
}

impl WordSum {
    pub fn zero() -> WordSum {
        WordSum::default()
    }

    pub fn single(w: Word) -> WordSum {
        WordSum { words: vec![w] }
    }

    pub fn identity() -> WordSum {
        WordSum::single(Word::identity())
    }

    pub fn product(&self, other: &WordSum) -> WordSum {
        let words = self.words.iter().flat_map(|a| other.words.iter().map(move |b| a.then(b))).collect();
        WordSum { words }
    }

    pub fn sum(&self, other: &WordSum) -> WordSum {
        let mut words = self.words.clone();
        words.extend_from_slice(&other.words);
        WordSum { words }
    }

    pub fn scale(&self, c: &Scalar) -> WordSum {
        WordSum { words: self.words.iter().map(|w| w.scale(c)).collect() }
    }

    pub fn relabel(&self, f: impl Fn(usize) -> usize + Copy) -> WordSum {
        WordSum { words: self.words.iter().map(|w| w.relabel(f)).collect() }
    }

    /// Inverse of a single diagonal word.
    pub fn inverse_diagonal(&self) -> Option<WordSum> {
        match self.words.as_slice() {
            [w] => w.inverse_diagonal().map(WordSum::single),
            _ => None,
        }
    }

    pub fn check(&self, grid: &Grid) -> Result<(), FockError> {
        self.words.iter().try_for_each(|w| w.check(grid))
    }

    /// Image of one basis state, unsorted and possibly with repeats.
    pub fn apply_state(&self, s: OccState) -> Vec<(OccState, Scalar)> {
        self.words.iter().filter_map(|w| w.apply_state(s)).collect()
    }

    pub fn to_operator(&self, grid: &Grid) -> FockOperator {
        FockOperator::from_columns(grid.sites(), |s| self.apply_state(s))
    }
}

impl fmt::Display for WordSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.words.is_empty() {
            return write!(f, "0");
        }
        for (k, w) in self.words.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_applies_right_to_left() {
        let g = Grid::new(2, 1).unwrap();
        let w = Word::new(Scalar::one(), vec![Factor::psi_dagger(1), Factor::psi(2)]);
        assert_eq!(w.apply_state(OccState::from_sites([2])), Some((OccState::from_sites([1]), Scalar::one())));
        assert_eq!(w.apply_state(OccState::from_sites([1])), None);
        let op = w.to_operator(&g);
        assert_eq!(op.nnz(), 1);
    }

    #[test]
    fn psi_squared_is_zero() {
        let g = Grid::new(2, 1).unwrap();
        let w = Word::new(Scalar::one(), vec![Factor::psi(1), Factor::psi(1)]);
        assert!(w.to_operator(&g).is_zero());
    }

    #[test]
    fn diagonal_inverse() {
        let g = Grid::new(2, 1).unwrap();
        let k = Word::new(Scalar::q_pow(-1), vec![Factor::omega(1, -1), Factor::omega(2, -1)]);
        let kinv = k.inverse_diagonal().unwrap();
        assert_eq!(k.then(&kinv).to_operator(&g), FockOperator::identity(2));
        assert!(Word::new(Scalar::one(), vec![Factor::psi(1)]).inverse_diagonal().is_none());
    }
}
