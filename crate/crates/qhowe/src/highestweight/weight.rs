use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::HwError;
use crate::fock::{FockVector, Grid, OccState};
use crate::presentations::{Family, GeneratorImages};

/// A weight in the orthonormal `ε`-coordinates; entries may be half-integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVec(Vec<BigRational>);

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl WeightVec {
    pub fn new(entries: Vec<BigRational>) -> Self {
        WeightVec(entries)
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        WeightVec(entries.iter().map(|&e| rat(e, 1)).collect())
    }

    /// Entries given in half-units, so `[1, -1]` is `(1/2, −1/2)`.
    pub fn from_halves(entries: &[i64]) -> Self {
        WeightVec(entries.iter().map(|&e| rat(e, 2)).collect())
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// A partition padded with zeros to `n` entries.
    pub fn padded(parts: &[usize], n: usize) -> Self {
        let mut v: Vec<i64> = parts.iter().map(|&p| p as i64).collect();
        v.resize(n.max(v.len()), 0);
        WeightVec::from_ints(&v)
    }

    pub fn with_last_negated(&self) -> Self {
        let mut v = self.0.clone();
        if let Some(last) = v.last_mut() {
            *last = -last.clone();
        }
        WeightVec(v)
    }

    /// Adds `halves[i] / 2` to entry `i`.
    pub fn shifted_by_halves(&self, halves: &[i64]) -> Self {
        WeightVec(self.0.iter().zip(halves).map(|(a, &h)| a + rat(h, 2)).collect())
    }

    /// `⟨self, root⟩` for an integer root vector.
    pub fn dot(&self, root: &[i64]) -> BigRational {
        self.0.iter().zip(root).fold(BigRational::zero(), |acc, (a, &r)| acc + a * rat(r, 1))
    }

    /// True when every entry is an integer, or every entry is a half-odd integer.
    pub fn uniform_parity(&self) -> bool {
        let two = rat(2, 1);
        let doubled: Vec<BigRational> = self.0.iter().map(|a| a * &two).collect();
        if doubled.iter().any(|d| !d.is_integer()) {
            return false;
        }
        let ints = self.0.iter().filter(|a| a.is_integer()).count();
        ints == 0 || ints == self.0.len()
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for WeightVec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        parts.serialize(s)
    }
}

/// Entry `i` is the number of occupied sites in row `i` minus `m/2`.
pub fn weight_of_state(g: &Grid, s: OccState) -> WeightVec {
    let halves: Vec<i64> = (1..=g.n()).map(|i| 2 * (s.0 & g.row_mask(i)).count_ones() as i64 - g.m() as i64).collect();
    WeightVec::from_halves(&halves)
}

/// Simple roots of `D_n` (`α_n = ε_{n−1} + ε_n`) or `B_n` (`α_n = ε_n`).
pub fn simple_roots(family: Family, n: usize) -> Vec<Vec<i64>> {
    let mut roots: Vec<Vec<i64>> = (1..n)
        .map(|i| {
            let mut a = vec![0; n];
            a[i - 1] = 1;
            a[i] = -1;
            a
        })
        .collect();
    let mut last = vec![0; n];
    match family {
        Family::D if n >= 2 => {
            last[n - 2] = 1;
            last[n - 1] = 1;
            roots.push(last);
        }
        Family::B => {
            last[n - 1] = 1;
            roots.push(last);
        }
        _ => {}
    }
    roots
}

/// `q`-exponents of the `K_i` eigenvalues on `v`, in half-steps, or `None`
/// when `v` is zero or not a joint eigenvector with unit-coefficient
/// monomial eigenvalues.
pub fn k_exponents(images: &GeneratorImages, v: &FockVector) -> Option<Vec<i32>> {
    if v.is_zero() {
        return None;
    }
    (1..=images.rank())
        .map(|i| {
            let c = images.k(i).apply(v).ratio_to(v)?;
            let (coeff, halves) = c.as_monomial()?;
            coeff.is_one().then_some(halves)
        })
        .collect()
}

/// Recovers `μ` from the exponents `⟨μ, α_i⟩` (given in half-steps).
pub fn weight_from_k_exponents(family: Family, halves: &[i32]) -> WeightVec {
    let n = halves.len();
    let c: Vec<BigRational> = halves.iter().map(|&h| rat(h as i64, 2)).collect();
    let mut mu = vec![BigRational::zero(); n];
    match family {
        Family::D if n >= 2 => {
            let half = rat(1, 2);
            mu[n - 1] = (&c[n - 1] - &c[n - 2]) * &half;
            mu[n - 2] = (&c[n - 1] + &c[n - 2]) * &half;
            for i in (0..n - 2).rev() {
                mu[i] = &mu[i + 1] + &c[i];
            }
        }
        _ => {
            if n > 0 {
                mu[n - 1] = c[n - 1].clone();
                for i in (0..n - 1).rev() {
                    mu[i] = &mu[i + 1] + &c[i];
                }
            }
        }
    }
    WeightVec(mu)
}

/// [`weight_of_state`], asserting that every `K_i` of `images` acts on
/// `v(s)` by `q^{⟨μ, α_i⟩}`.
pub fn weight_of_state_checked(images: &GeneratorImages, s: OccState) -> Result<WeightVec, HwError> {
    let mu = weight_of_state(&images.grid, s);
    let observed = k_exponents(images, &FockVector::basis(s));
    let expected = predicted_k_halves(images.cartan.family, &mu);
    if observed.as_deref() != Some(expected.as_slice()) {
        return Err(HwError::Weight(format!(
            "K eigenvalues on {} are {:?} (half-steps), weight {} predicts {:?}",
            s.format(&images.grid),
            observed,
            mu,
            expected
        )));
    }
    Ok(mu)
}

/// `q^{⟨μ, α_i⟩}` exponents, in half-steps, predicted for a weight.
pub fn predicted_k_halves(family: Family, mu: &WeightVec) -> Vec<i32> {
    simple_roots(family, mu.len())
        .iter()
        .map(|a| {
            let two = mu.dot(a) * rat(2, 1);
            i32::try_from(two.to_integer()).expect("small exponent")
        })
        .collect()
}
