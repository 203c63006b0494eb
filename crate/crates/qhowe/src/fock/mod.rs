//! The fermionic Fock space of an `n × m` grid.
//!
//! Sites are numbered column-major, `a = i + (j−1)·n` for row `i` and column
//! `j`, and bit `a−1` of an [`OccState`] records whether site `a` is occupied.
//! The quantized Clifford algebra is realized directly on this space:
//! `ψ_a`, `ψ_a†` act with the fermionic sign `(−1)^{ℓ_1+⋯+ℓ_{a−1}}`, and
//! `ω_a^e` is diagonal with eigenvalue `q^{−e·ℓ_a}`.

mod operator;
mod vector;
mod word;

pub use operator::{FockOperator, Mismatch};
pub use vector::FockVector;
pub use word::{Elementary, Factor, Word, WordSum};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::scalars::{GaussRat, Scalar};

/// Largest number of sites whose state space is enumerated unless overridden.
pub const DEFAULT_SITE_BOUND: usize = 24;

/// Hard ceiling imposed by the `u32` state encoding.
const MAX_SITES: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FockError {
    #[error("site {site} out of range 1..={sites}")]
    SiteOutOfRange { site: usize, sites: usize },
    #[error("grid needs n >= 1 and m >= 1, got n = {n}, m = {m}")]
    EmptyGrid { n: usize, m: usize },
    #[error("{sites} sites exceed the configured bound of {bound}")]
    TooManySites { sites: usize, bound: usize },
    #[error("cannot parse occupation state {0:?}")]
    Parse(String),
}

/// An `n × m` array of fermionic sites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Grid {
    n: usize,
    m: usize,
}

impl Grid {
    pub fn new(n: usize, m: usize) -> Result<Grid, FockError> {
        Grid::with_bound(n, m, DEFAULT_SITE_BOUND)
    }

    pub fn with_bound(n: usize, m: usize, bound: usize) -> Result<Grid, FockError> {
        if n == 0 || m == 0 {
            return Err(FockError::EmptyGrid { n, m });
        }
        let sites = n * m;
        let bound = bound.min(MAX_SITES);
        if sites > bound {
            return Err(FockError::TooManySites { sites, bound });
        }
        Ok(Grid { n, m })
    }

    /// Number of rows.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of columns.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn sites(&self) -> usize {
        self.n * self.m
    }

    /// Dimension `2^{nm}` of the Fock space.
    pub fn dim(&self) -> usize {
        1usize << self.sites()
    }

    /// Site index of (row, column), both 1-based.
    pub fn site(&self, row: usize, col: usize) -> usize {
        debug_assert!((1..=self.n).contains(&row) && (1..=self.m).contains(&col));
        row + (col - 1) * self.n
    }

    /// Inverse of [`Grid::site`].
    pub fn row_col(&self, site: usize) -> (usize, usize) {
        ((site - 1) % self.n + 1, (site - 1) / self.n + 1)
    }

    pub fn check_site(&self, site: usize) -> Result<(), FockError> {
        if (1..=self.sites()).contains(&site) {
            Ok(())
        } else {
            Err(FockError::SiteOutOfRange { site, sites: self.sites() })
        }
    }

    /// Bits of the bottom row across all columns.
    pub fn bottom_row_mask(&self) -> u32 {
        (1..=self.m).fold(0, |acc, j| acc | 1 << (self.site(self.n, j) - 1))
    }

    /// Bits of one column.
    pub fn column_mask(&self, col: usize) -> u32 {
        ((1u32 << self.n) - 1) << ((col - 1) * self.n)
    }

    /// Bits of one row.
    pub fn row_mask(&self, row: usize) -> u32 {
        (1..=self.m).fold(0, |acc, j| acc | 1 << (self.site(row, j) - 1))
    }

    pub fn states(&self) -> impl Iterator<Item = OccState> {
        (0..self.dim() as u32).map(OccState)
    }
}

/// A basis vector `v(ℓ)`; bit `a−1` is the occupation of site `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct OccState(pub u32);

impl OccState {
    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn occupied(self, site: usize) -> bool {
        self.0 >> (site - 1) & 1 == 1
    }

    pub fn count(self) -> u32 {
        self.0.count_ones()
    }

    /// Parity of the occupied sites strictly before `site`.
    pub fn prefix_odd(self, site: usize) -> bool {
        let below = self.0 & ((1u32 << (site - 1)) - 1);
        below.count_ones() % 2 == 1
    }

    pub fn toggled(self, site: usize) -> OccState {
        OccState(self.0 ^ 1 << (site - 1))
    }

    /// Builds a state from its occupied sites.
    pub fn from_sites<I: IntoIterator<Item = usize>>(sites: I) -> OccState {
        OccState(sites.into_iter().fold(0, |acc, a| acc | 1 << (a - 1)))
    }

    /// Column-grouped bit string, e.g. `11|10` for `n = m = 2`.
    pub fn format(self, grid: &Grid) -> String {
        let mut s = String::with_capacity(grid.sites() + grid.m());
        for j in 1..=grid.m() {
            if j > 1 {
                s.push('|');
            }
            for i in 1..=grid.n() {
                s.push(if self.occupied(grid.site(i, j)) { '1' } else { '0' });
            }
        }
        s
    }

    /// Parses the column-grouped form; the separators are optional.
    pub fn parse(grid: &Grid, text: &str) -> Result<OccState, FockError> {
        let bits: Vec<char> = text.chars().filter(|c| *c != '|').collect();
        if bits.len() != grid.sites() {
            return Err(FockError::Parse(text.to_string()));
        }
        let mut v = 0u32;
        for (k, c) in bits.iter().enumerate() {
            match c {
                '1' => v |= 1 << k,
                '0' => {}
                _ => return Err(FockError::Parse(text.to_string())),
            }
        }
        Ok(OccState(v))
    }
}

impl fmt::Display for OccState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#b}", self.0)
    }
}

/// `ψ_a v(ℓ)` on a single basis state.
pub fn psi_on_state(site: usize, s: OccState) -> Option<(OccState, bool)> {
    s.occupied(site).then(|| (s.toggled(site), s.prefix_odd(site)))
}

/// `ψ_a† v(ℓ)` on a single basis state.
pub fn psi_dagger_on_state(site: usize, s: OccState) -> Option<(OccState, bool)> {
    (!s.occupied(site)).then(|| (s.toggled(site), s.prefix_odd(site)))
}

fn apply_basis_map<F>(v: &FockVector, f: F) -> FockVector
where
    F: Fn(OccState) -> Option<(OccState, Scalar)>,
{
    let mut out = FockVector::zero();
    for (s, c) in v.iter() {
        if let Some((t, k)) = f(*s) {
            out.add_term(t, &(c * &k));
        }
    }
    out
}

fn sign_scalar(odd: bool) -> Scalar {
    Scalar::from_int(if odd { -1 } else { 1 })
}

pub fn apply_psi(grid: &Grid, site: usize, v: &FockVector) -> Result<FockVector, FockError> {
    grid.check_site(site)?;
    Ok(apply_basis_map(v, |s| psi_on_state(site, s).map(|(t, odd)| (t, sign_scalar(odd)))))
}

pub fn apply_psi_dagger(grid: &Grid, site: usize, v: &FockVector) -> Result<FockVector, FockError> {
    grid.check_site(site)?;
    Ok(apply_basis_map(v, |s| psi_dagger_on_state(site, s).map(|(t, odd)| (t, sign_scalar(odd)))))
}

/// `ω_a^e`, diagonal with eigenvalue `q^{−e·ℓ_a}`.
pub fn apply_omega(grid: &Grid, site: usize, exponent: i32, v: &FockVector) -> Result<FockVector, FockError> {
    grid.check_site(site)?;
    Ok(apply_basis_map(v, |s| {
        let k = if s.occupied(site) { -exponent } else { 0 };
        Some((s, Scalar::q_pow(k)))
    }))
}

/// The orthogonal flip `t` on one basis state.
///
/// It toggles the bottom row of every column. The coefficient is the sign of
/// the graded tensor product of single-column flips,
/// `(−1)^{Σ_k (m−k)·|column k|}`, times `i` when `m(m−1)/2` is odd, which makes
/// `t² = 1` and lets `t` commute with the row-direction coideal generators.
/// For `m = 1` this is the plain flip.
pub fn t_on_state(grid: &Grid, s: OccState) -> (OccState, GaussRat) {
    let m = grid.m();
    let odd =
        (1..=m).fold(0u32, |acc, k| acc + ((m - k) as u32 % 2) * (s.0 & grid.column_mask(k)).count_ones()) % 2 == 1;
    let phase = if (m * (m - 1) / 2) % 2 == 1 { GaussRat::i() } else { GaussRat::one() };
    let c = if odd { -phase } else { phase };
    (OccState(s.0 ^ grid.bottom_row_mask()), c)
}

pub fn apply_t_column_flip(grid: &Grid, v: &FockVector) -> FockVector {
    apply_basis_map(v, |s| {
        let (t, c) = t_on_state(grid, s);
        Some((t, Scalar::from_gauss(c)))
    })
}

/// The flip `t` as an operator.
pub fn t_operator(grid: &Grid) -> FockOperator {
    FockOperator::from_basis_map(grid.sites(), |s| {
        let (t, c) = t_on_state(grid, s);
        Some((t, Scalar::from_gauss(c)))
    })
}

/// Materializes `coeff · word` (rightmost factor applied first).
pub fn op_from_word(grid: &Grid, word: &[Factor], coeff: Scalar) -> Result<FockOperator, FockError> {
    let w = Word::new(coeff, word.to_vec());
    w.check(grid)?;
    Ok(w.to_operator(grid))
}

pub fn op_commutator(a: &FockOperator, b: &FockOperator) -> FockOperator {
    a.commutator(b)
}

pub fn op_q_commutator(a: &FockOperator, b: &FockOperator, c: &Scalar) -> FockOperator {
    a.q_commutator(b, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(n: usize, m: usize) -> Grid {
        Grid::new(n, m).unwrap()
    }

    fn st(g: &Grid, s: &str) -> OccState {
        OccState::parse(g, s).unwrap()
    }

    #[test]
    fn site_layout_is_column_major() {
        let g = grid(3, 4);
        assert_eq!(g.site(1, 1), 1);
        assert_eq!(g.site(3, 1), 3);
        assert_eq!(g.site(1, 2), 4);
        assert_eq!(g.site(2, 4), 11);
        for a in 1..=12 {
            let (i, j) = g.row_col(a);
            assert_eq!(g.site(i, j), a);
        }
        assert_eq!(g.bottom_row_mask(), 0b100100100100);
    }

    #[test]
    fn state_text_groups_columns() {
        let g = grid(2, 2);
        let s = OccState::from_sites([1, 2, 3]);
        assert_eq!(s.format(&g), "11|10");
        assert_eq!(st(&g, "11|10"), s);
        assert!(OccState::parse(&g, "1x|10").is_err());
        assert!(OccState::parse(&g, "11|1").is_err());
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(Grid::new(5, 5), Err(FockError::TooManySites { .. })));
        assert!(Grid::with_bound(5, 5, 25).is_ok());
        assert!(Grid::new(0, 3).is_err());
    }

    #[test]
    fn elementary_sign_rule() {
        let g = grid(2, 1);
        let v = |s: &str| FockVector::basis(st(&g, s));
        assert_eq!(apply_psi_dagger(&g, 1, &v("00")).unwrap(), v("10"));
        assert_eq!(apply_psi_dagger(&g, 2, &v("10")).unwrap(), v("11").scale(&Scalar::from_int(-1)));
        assert!(apply_psi(&g, 1, &v("01")).unwrap().is_zero());
        assert!(apply_psi(&g, 3, &v("01")).is_err());
    }

    #[test]
    fn omega_eigenvalues() {
        let g = grid(2, 1);
        let v = |s: &str| FockVector::basis(st(&g, s));
        assert_eq!(apply_omega(&g, 1, 1, &v("01")).unwrap(), v("01"));
        assert_eq!(apply_omega(&g, 2, 1, &v("11")).unwrap(), v("11").scale(&Scalar::q_pow(-1)));
    }

    #[test]
    fn t_flips_the_bottom_row() {
        let g = grid(3, 2);
        let v = apply_t_column_flip(&g, &FockVector::basis(OccState(0)));
        let (s, c) = v.iter().next().map(|(s, c)| (*s, c.clone())).unwrap();
        assert_eq!(s.format(&g), "001|001");
        assert_eq!(c.as_monomial().map(|(c, _)| c.clone()), Some(GaussRat::i()));
        let t = t_operator(&g);
        assert_eq!(&t * &t, FockOperator::identity(g.sites()));
    }
}
