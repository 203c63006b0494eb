use serde::{Deserialize, Serialize};

use super::PresentationError;
use crate::scalars::{q_int, LaurentHalf, Scalar};

/// Lie type of a Cartan matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
}

/// Cartan matrix, root-length vector and the base of the deformation.
///
/// `q_i = q^{d_i · deformation_halves / 2}`: with `deformation_halves = 2`
/// the simply-laced convention `q_i = q^{d_i}` is used, with `1` the
/// relations hold in base `q^{1/2}` (type B spin convention, `q_n = q^{1/2}`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartanData {
    pub family: Family,
    pub rank: usize,
    pub matrix: Vec<Vec<i32>>,
    pub d: Vec<i32>,
    pub deformation_halves: i32,
}

fn a_block(rank: usize) -> Vec<Vec<i32>> {
    let mut a = vec![vec![0; rank]; rank];
    for i in 0..rank {
        a[i][i] = 2;
        if i + 1 < rank {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    a
}

impl CartanData {
    pub fn type_a(rank: usize) -> Result<CartanData, PresentationError> {
        if rank == 0 {
            return Err(PresentationError::Rank { family: Family::A, rank });
        }
        Ok(CartanData { family: Family::A, rank, matrix: a_block(rank), d: vec![1; rank], deformation_halves: 2 })
    }

    /// `B_r` with `a_{r−1,r} = −1`, `a_{r,r−1} = −2`, `d = (2,…,2,1)`, base `q^{1/2}`.
    pub fn type_b(rank: usize) -> Result<CartanData, PresentationError> {
        if rank == 0 {
            return Err(PresentationError::Rank { family: Family::B, rank });
        }
        let mut matrix = a_block(rank);
        let mut d = vec![2; rank];
        d[rank - 1] = 1;
        if rank >= 2 {
            matrix[rank - 1][rank - 2] = -2;
        }
        Ok(CartanData { family: Family::B, rank, matrix, d, deformation_halves: 1 })
    }

    /// `D_r`: the `A_{r−1}` chain plus node `r` attached to node `r−2`.
    /// `D_2` is `A_1 × A_1`.
    pub fn type_d(rank: usize) -> Result<CartanData, PresentationError> {
        if rank < 2 {
            return Err(PresentationError::Rank { family: Family::D, rank });
        }
        let mut matrix = a_block(rank);
        matrix[rank - 2][rank - 1] = 0;
        matrix[rank - 1][rank - 2] = 0;
        if rank >= 3 {
            matrix[rank - 3][rank - 1] = -1;
            matrix[rank - 1][rank - 3] = -1;
        }
        Ok(CartanData { family: Family::D, rank, matrix, d: vec![1; rank], deformation_halves: 2 })
    }

    pub fn new(family: Family, rank: usize) -> Result<CartanData, PresentationError> {
        match family {
            Family::A => CartanData::type_a(rank),
            Family::B => CartanData::type_b(rank),
            Family::D => CartanData::type_d(rank),
        }
    }

    /// `a_{ij}` for 1-based indices.
    pub fn a(&self, i: usize, j: usize) -> i32 {
        self.matrix[i - 1][j - 1]
    }

    /// Exponent of `q^{1/2}` in `q_i`.
    pub fn base_halves(&self, i: usize) -> i32 {
        self.d[i - 1] * self.deformation_halves
    }

    /// `q_i^k`.
    pub fn q_i_pow(&self, i: usize, k: i32) -> Scalar {
        Scalar::x_pow(self.base_halves(i) * k)
    }

    /// `[n]_{q_i}`.
    pub fn q_i_int(&self, i: usize, n: i64) -> LaurentHalf {
        q_int(n, self.base_halves(i))
    }

    /// `D·A` is symmetric.
    pub fn is_symmetrizable(&self) -> bool {
        (1..=self.rank).all(|i| (1..=self.rank).all(|j| self.d[i - 1] * self.a(i, j) == self.d[j - 1] * self.a(j, i)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d4_is_the_fork() {
        let c = CartanData::type_d(4).unwrap();
        assert_eq!(c.matrix, vec![vec![2, -1, 0, 0], vec![-1, 2, -1, -1], vec![0, -1, 2, 0], vec![0, -1, 0, 2]]);
    }

    #[test]
    fn d2_splits() {
        let c = CartanData::type_d(2).unwrap();
        assert_eq!(c.matrix, vec![vec![2, 0], vec![0, 2]]);
        assert!(CartanData::type_d(1).is_err());
    }

    #[test]
    fn b3_entries_and_bases() {
        let c = CartanData::type_b(3).unwrap();
        assert_eq!(c.matrix, vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]);
        assert_eq!(c.d, vec![2, 2, 1]);
        assert_eq!(c.base_halves(1), 2);
        assert_eq!(c.base_halves(3), 1);
    }

    #[test]
    fn all_families_symmetrizable() {
        for r in 1..7 {
            assert!(CartanData::type_a(r).unwrap().is_symmetrizable());
            assert!(CartanData::type_b(r).unwrap().is_symmetrizable());
            if r >= 2 {
                assert!(CartanData::type_d(r).unwrap().is_symmetrizable());
            }
        }
    }
}
