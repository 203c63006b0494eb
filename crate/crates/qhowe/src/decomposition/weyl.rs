use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::labels::{is_admissible, mu_dagger};
use super::{DecompError, PartitionLabel};
use crate::highestweight::WeightVec;
use crate::presentations::Family;

/// Positive roots and the Weyl vector of `B_r` or `D_r` in `ε`-coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystemData {
    pub family: Family,
    pub rank: usize,
    pub positive_roots: Vec<Vec<i64>>,
    pub rho: WeightVec,
}

impl RootSystemData {
    /// `D_1` is the abelian `so_2`, with no roots.
    pub fn new(family: Family, rank: usize) -> Result<Self, DecompError> {
        if rank == 0 || family == Family::A {
            return Err(DecompError::Label(format!("no orthogonal root system {family:?}{rank}")));
        }
        let unit = |i: usize, s: i64| {
            let mut v = vec![0; rank];
            v[i] += s;
            v
        };
        let mut roots = Vec::new();
        for i in 0..rank {
            for j in i + 1..rank {
                let mut minus = unit(i, 1);
                minus[j] = -1;
                let mut plus = unit(i, 1);
                plus[j] = 1;
                roots.push(minus);
                roots.push(plus);
            }
            if family == Family::B {
                roots.push(unit(i, 1));
            }
        }
        // ρ_i = r − i for D, r − i + 1/2 for B.
        let rho_halves: Vec<i64> = (1..=rank)
            .map(|i| {
                let base = 2 * (rank - i) as i64;
                if family == Family::B {
                    base + 1
                } else {
                    base
                }
            })
            .collect();
        Ok(RootSystemData { family, rank, positive_roots: roots, rho: WeightVec::from_halves(&rho_halves) })
    }

    /// `λ_1 ≥ … ≥ λ_{r−1} ≥ |λ_r|` for `D`, `λ_1 ≥ … ≥ λ_r ≥ 0` for `B`.
    pub fn is_dominant(&self, lambda: &WeightVec) -> bool {
        let e = lambda.entries();
        if e.len() != self.rank || !lambda.uniform_parity() {
            return false;
        }
        let decreasing = e.windows(2).all(|w| w[0] >= w[1]);
        match self.family {
            Family::D if self.rank >= 2 => {
                e.windows(2).take(self.rank - 2).all(|w| w[0] >= w[1]) && e[self.rank - 2] >= e[self.rank - 1].abs()
            }
            Family::D => true,
            _ => decreasing && !e[self.rank - 1].is_negative(),
        }
    }
}

/// `∏_{α>0} ⟨λ+ρ, α⟩ / ⟨ρ, α⟩` in exact arithmetic.
pub fn weyl_dim(rs: &RootSystemData, lambda: &WeightVec) -> Result<u64, DecompError> {
    if !rs.is_dominant(lambda) {
        return Err(DecompError::Dominance(format!("{lambda} is not dominant for {:?}{}", rs.family, rs.rank)));
    }
    let shifted = WeightVec::new(lambda.entries().iter().zip(rs.rho.entries()).map(|(a, b)| a + b).collect());
    let mut acc = BigRational::one();
    for alpha in &rs.positive_roots {
        acc = acc * shifted.dot(alpha) / rs.rho.dot(alpha);
    }
    if !acc.is_integer() || acc <= BigRational::zero() {
        return Err(DecompError::NonIntegral(format!("Weyl product {acc} for {lambda}")));
    }
    acc.to_integer()
        .to_u64()
        .ok_or_else(|| DecompError::NonIntegral(format!("dimension {} overflows", acc.to_integer())))
}

/// Dimension of the `O(2n)`-module labelled by `μ`.
///
/// Labels with `μ'_1 > n` are replaced by their partner; then the `D_n`
/// dimension of `μ` (padded to `n` parts) is doubled when `μ_n ≠ 0`, since
/// the restriction splits into the two modules with last entry `±μ_n`.
pub fn o_dim(mu: &PartitionLabel, n: usize) -> Result<u64, DecompError> {
    if !is_admissible(mu, 2 * n) {
        return Err(DecompError::Label(format!("{mu} is not admissible for O({})", 2 * n)));
    }
    let base = if mu.height() > n { mu_dagger(mu, 2 * n)? } else { mu.clone() };
    let lambda = WeightVec::padded(base.parts(), n);
    let rs = RootSystemData::new(Family::D, n)?;
    let d = weyl_dim(&rs, &lambda)?;
    Ok(if base.height() == n { 2 * d } else { d })
}

/// `dim` of the `so_m` module with highest weight `μ̄`, for even `m`.
pub fn so_even_dim(mu_bar: &[i64]) -> Result<u64, DecompError> {
    let rs = RootSystemData::new(Family::D, mu_bar.len())?;
    weyl_dim(&rs, &WeightVec::from_ints(mu_bar))
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc.to_u64().expect("small binomial")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(rank: usize) -> RootSystemData {
        RootSystemData::new(Family::D, rank).unwrap()
    }

    #[test]
    fn root_counts_and_rho() {
        for r in 1..=5 {
            let b = RootSystemData::new(Family::B, r).unwrap();
            assert_eq!(b.positive_roots.len(), r * r);
            assert_eq!(d(r).positive_roots.len(), r * (r - 1));
        }
        // ⟨ρ, α_i^∨⟩ = 1 on simple roots.
        let b3 = RootSystemData::new(Family::B, 3).unwrap();
        for a in [vec![1, -1, 0], vec![0, 1, -1], vec![0, 0, 1]] {
            let norm: i64 = a.iter().map(|x| x * x).sum();
            let two = BigRational::from_integer(2.into());
            assert_eq!(b3.rho.dot(&a) * two / BigRational::from_integer(norm.into()), BigRational::one());
        }
        let d3 = d(3);
        for a in [vec![1, -1, 0], vec![0, 1, -1], vec![0, 1, 1]] {
            assert_eq!(d3.rho.dot(&a), BigRational::one());
        }
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(weyl_dim(&d(2), &WeightVec::from_ints(&[1, 0])).unwrap(), 4);
        assert_eq!(weyl_dim(&d(2), &WeightVec::from_ints(&[2, 0])).unwrap(), 9);
        let b1 = RootSystemData::new(Family::B, 1).unwrap();
        assert_eq!(weyl_dim(&b1, &WeightVec::from_halves(&[1])).unwrap(), 2);
        assert_eq!(weyl_dim(&d(1), &WeightVec::from_ints(&[-3])).unwrap(), 1);
        assert_eq!(weyl_dim(&d(2), &WeightVec::from_ints(&[2, -2])).unwrap(), 5);
    }

    #[test]
    fn dominance_is_enforced() {
        assert!(weyl_dim(&d(2), &WeightVec::from_ints(&[0, 1])).is_err());
        assert!(weyl_dim(&d(3), &WeightVec::from_ints(&[1, 2, 0])).is_err());
        assert!(weyl_dim(&d(2), &WeightVec::from_halves(&[2, 1])).is_err());
    }

    #[test]
    fn orthogonal_group_dimensions() {
        let p = |parts: &[usize]| PartitionLabel::new(parts.to_vec());
        assert_eq!(o_dim(&p(&[1, 1]), 2).unwrap(), 6);
        assert_eq!(o_dim(&p(&[1, 1, 1]), 2).unwrap(), 4);
        assert_eq!(o_dim(&p(&[]), 4).unwrap(), 1);
        for n in 2..=5u64 {
            for h in 0..=2 * n {
                assert_eq!(o_dim(&PartitionLabel::column(h as usize), n as usize).unwrap(), binomial(2 * n, h));
            }
        }
    }
}
