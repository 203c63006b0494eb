use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{GaussRat, ScalarError};

/// A Laurent polynomial in `x = q^{1/2}` with Gaussian rational coefficients.
///
/// Terms are stored sorted by exponent with no zero coefficients, so derived
/// equality is structural equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentHalf {
    terms: Vec<(i32, GaussRat)>,
}

impl LaurentHalf {
    pub fn zero() -> Self {
        LaurentHalf { terms: Vec::new() }
    }

    pub fn one() -> Self {
        LaurentHalf::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        LaurentHalf::monomial(c, 0)
    }

    /// `c·x^k`, i.e. `c·q^{k/2}`.
    pub fn monomial(c: GaussRat, k: i32) -> Self {
        if c.is_zero() {
            LaurentHalf::zero()
        } else {
            LaurentHalf { terms: vec![(k, c)] }
        }
    }

    /// `q^{k/2}`.
    pub fn x_pow(k: i32) -> Self {
        LaurentHalf::monomial(GaussRat::one(), k)
    }

    /// `q^k`.
    pub fn q_pow(k: i32) -> Self {
        LaurentHalf::x_pow(2 * k)
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (i32, GaussRat)>>(it: I) -> Self {
        let mut v: Vec<(i32, GaussRat)> = it.into_iter().collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(i32, GaussRat)> = Vec::with_capacity(v.len());
        for (k, c) in v {
            match out.last_mut() {
                Some((lk, lc)) if *lk == k => *lc += &c,
                _ => out.push((k, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        LaurentHalf { terms: out }
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> &[(i32, GaussRat)] {
        &self.terms
    }

    pub fn coeff(&self, k: i32) -> GaussRat {
        match self.terms.binary_search_by_key(&k, |t| t.0) {
            Ok(p) => self.terms[p].1.clone(),
            Err(_) => GaussRat::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// `Some((c, k))` when the polynomial is the single term `c·x^k`.
    pub fn as_monomial(&self) -> Option<(&GaussRat, i32)> {
        match self.terms.as_slice() {
            [(k, c)] => Some((c, *k)),
            _ => None,
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    /// Coefficient of the highest power of `x`.
    pub fn leading_coeff(&self) -> Option<&GaussRat> {
        self.terms.last().map(|t| &t.1)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentHalf { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return LaurentHalf::zero();
        }
        LaurentHalf { terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect() }
    }

    /// Substitutes `x ↦ 1/x`, i.e. `q ↦ q^{-1}`.
    pub fn bar(&self) -> Self {
        let mut terms: Vec<_> = self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        terms.reverse();
        LaurentHalf { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = LaurentHalf::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at `x = x0`; `x0` must be nonzero when negative exponents occur.
    pub fn eval(&self, x0: &BigRational) -> GaussRat {
        let mut acc = GaussRat::zero();
        for (k, c) in &self.terms {
            let p = if *k >= 0 {
                num_traits::pow(x0.clone(), *k as usize)
            } else {
                num_traits::pow(x0.recip(), (-*k) as usize)
            };
            acc += &c.scale(&p);
        }
        acc
    }

    /// Evaluates at `x = 1`.
    pub fn eval_at_one(&self) -> GaussRat {
        let mut acc = GaussRat::zero();
        for (_, c) in &self.terms {
            acc += c;
        }
        acc
    }

    /// Exact division in the Laurent ring. `Ok(None)` signals a nonzero
    /// remainder.
    pub fn exact_div(&self, b: &LaurentHalf) -> Result<Option<LaurentHalf>, ScalarError> {
        if b.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(LaurentHalf::zero()));
        }
        if let Some((c, k)) = b.as_monomial() {
            let inv = c.inv().expect("nonzero coefficient");
            return Ok(Some(self.scale(&inv).shift(-k)));
        }
        let (la, pa) = self.to_poly();
        let (lb, pb) = b.to_poly();
        let (quot, rem) = poly_divrem(&pa, &pb);
        if !rem.is_empty() {
            return Ok(None);
        }
        Ok(Some(LaurentHalf::from_poly(&quot, la - lb)))
    }

    /// Splits into `x^lo · P(x)` with `P(0) ≠ 0`; returns `(lo, coefficients of P ascending)`.
    pub(crate) fn to_poly(&self) -> (i32, Vec<GaussRat>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut p = vec![GaussRat::zero(); (hi - lo + 1) as usize];
        for (k, c) in &self.terms {
            p[(k - lo) as usize] = c.clone();
        }
        (lo, p)
    }

    pub(crate) fn from_poly(p: &[GaussRat], lo: i32) -> Self {
        LaurentHalf {
            terms: p
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i32, c.clone()))
                .collect(),
        }
    }
}

/// Trims trailing zeros so the last entry is the leading coefficient.
fn trim(p: &mut Vec<GaussRat>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Polynomial long division over `Q(i)`; coefficient vectors are ascending.
pub(crate) fn poly_divrem(a: &[GaussRat], b: &[GaussRat]) -> (Vec<GaussRat>, Vec<GaussRat>) {
    let mut rem: Vec<GaussRat> = a.to_vec();
    trim(&mut rem);
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = b.last().unwrap().inv().unwrap();
    let mut quot = vec![GaussRat::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() * &lead_inv;
        for (i, bc) in b.iter().enumerate() {
            let t = bc * &c;
            rem[shift + i] -= &t;
        }
        quot[shift] = c;
        rem.pop();
        trim(&mut rem);
    }
    (quot, rem)
}

/// Monic gcd of two polynomials over `Q(i)`.
pub(crate) fn poly_gcd(a: &[GaussRat], b: &[GaussRat]) -> Vec<GaussRat> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(l) = x.last() {
        let inv = l.inv().unwrap();
        for c in x.iter_mut() {
            *c = &*c * &inv;
        }
    }
    x
}

fn merge(a: &[(i32, GaussRat)], b: &[(i32, GaussRat)], negate_b: bool) -> LaurentHalf {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
            out.push((b[j].0, c));
            j += 1;
        } else {
            let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
            if !c.is_zero() {
                out.push((a[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    LaurentHalf { terms: out }
}

impl<'a> Add<&'a LaurentHalf> for &'a LaurentHalf {
    type Output = LaurentHalf;
    fn add(self, rhs: &LaurentHalf) -> LaurentHalf {
        merge(&self.terms, &rhs.terms, false)
    }
}

impl<'a> Sub<&'a LaurentHalf> for &'a LaurentHalf {
    type Output = LaurentHalf;
    fn sub(self, rhs: &LaurentHalf) -> LaurentHalf {
        merge(&self.terms, &rhs.terms, true)
    }
}

impl<'a> Mul<&'a LaurentHalf> for &'a LaurentHalf {
    type Output = LaurentHalf;
    fn mul(self, rhs: &LaurentHalf) -> LaurentHalf {
        if self.is_zero() || rhs.is_zero() {
            return LaurentHalf::zero();
        }
        if let Some((c, k)) = rhs.as_monomial() {
            return self.scale(c).shift(k);
        }
        if let Some((c, k)) = self.as_monomial() {
            return rhs.scale(c).shift(k);
        }
        let lo = self.min_exp().unwrap() + rhs.min_exp().unwrap();
        let hi = self.max_exp().unwrap() + rhs.max_exp().unwrap();
        let mut acc = vec![GaussRat::zero(); (hi - lo + 1) as usize];
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                acc[(ka + kb - lo) as usize] += &(ca * cb);
            }
        }
        LaurentHalf::from_poly(&acc, lo)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentHalf> for LaurentHalf {
            type Output = LaurentHalf;
            fn $m(self, rhs: LaurentHalf) -> LaurentHalf {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentHalf> for LaurentHalf {
            type Output = LaurentHalf;
            fn $m(self, rhs: &LaurentHalf) -> LaurentHalf {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentHalf {
    type Output = LaurentHalf;
    fn neg(self) -> LaurentHalf {
        LaurentHalf { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl Neg for &LaurentHalf {
    type Output = LaurentHalf;
    fn neg(self) -> LaurentHalf {
        self.clone().neg()
    }
}

impl From<GaussRat> for LaurentHalf {
    fn from(c: GaussRat) -> Self {
        LaurentHalf::constant(c)
    }
}

impl fmt::Display for LaurentHalf {
    /// Terms `c*q^(k/2)` by decreasing `k`, joined by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*q^({}/2)", c, k)?;
        }
        Ok(())
    }
}

impl Zero for LaurentHalf {
    fn zero() -> Self {
        LaurentHalf::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentHalf {
    fn one() -> Self {
        LaurentHalf::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i32) -> LaurentHalf {
        LaurentHalf::q_pow(k)
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let a = &q(1) + &q(-1);
        let b = &a - &q(1);
        assert_eq!(b, q(-1));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn product_of_binomials() {
        let a = &q(1) + &q(-1);
        let sq = &a * &a;
        let expect = LaurentHalf::from_terms([(4, GaussRat::one()), (0, GaussRat::from_int(2)), (-4, GaussRat::one())]);
        assert_eq!(sq, expect);
    }

    #[test]
    fn long_division_matches_hand_quotient() {
        let num = &q(2) - &q(-2);
        let den = &q(1) - &q(-1);
        assert_eq!(num.exact_div(&den).unwrap().unwrap(), &q(1) + &q(-1));
        let qq = q(1);
        let q_plus_one = &q(1) + &LaurentHalf::one();
        assert_eq!(qq.exact_div(&q_plus_one).unwrap(), None);
        assert!(matches!(qq.exact_div(&LaurentHalf::zero()), Err(ScalarError::DivisionByZero)));
    }

    #[test]
    fn eval_at_two() {
        let x0 = BigRational::from_integer(2.into());
        let p = &(&q(2) + &LaurentHalf::one()) + &q(-2);
        assert_eq!(p.eval(&x0), GaussRat::from_ratio(273, 16));
    }

    #[test]
    fn gcd_is_monic() {
        // (x+1)(x+2) and (x+1)(x-3)
        let a = [2, 3, 1].map(GaussRat::from_int);
        let b = [-3, -2, 1].map(GaussRat::from_int);
        assert_eq!(poly_gcd(&a, &b), vec![GaussRat::one(), GaussRat::one()]);
    }

    #[test]
    fn display_orders_by_decreasing_exponent() {
        let p = &(&q(1) + &LaurentHalf::x_pow(-1)).scale(&GaussRat::i()) - &LaurentHalf::one();
        assert_eq!(p.to_string(), "1*I*q^(2/2) + -1*q^(0/2) + 1*I*q^(-1/2)");
    }
}
