use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::laurent::{poly_divrem, poly_gcd};
use super::{GaussRat, LaurentHalf, ScalarError};

/// An element of `Q(i)(q^{1/2})`, stored as `num / den` in canonical form.
///
/// The denominator is a polynomial with nonzero constant term and leading
/// coefficient 1, coprime to the numerator. A denominator equal to 1 is the
/// common case and skips all gcd work.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: LaurentHalf,
    den: LaurentHalf,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { num: LaurentHalf::zero(), den: LaurentHalf::one() }
    }

    pub fn one() -> Self {
        Scalar::from_laurent(LaurentHalf::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_laurent(LaurentHalf::constant(GaussRat::from_int(n)))
    }

    pub fn from_gauss(c: GaussRat) -> Self {
        Scalar::from_laurent(LaurentHalf::constant(c))
    }

    pub fn from_laurent(num: LaurentHalf) -> Self {
        Scalar { num, den: LaurentHalf::one() }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::from_gauss(GaussRat::i())
    }

    /// `q^{k/2}`.
    pub fn x_pow(k: i32) -> Self {
        Scalar::from_laurent(LaurentHalf::x_pow(k))
    }

    /// `q^k`.
    pub fn q_pow(k: i32) -> Self {
        Scalar::from_laurent(LaurentHalf::q_pow(k))
    }

    /// Builds `num / den` and normalizes.
    pub fn fraction(num: LaurentHalf, den: LaurentHalf) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::normalize(num, den))
    }

    fn normalize(num: LaurentHalf, den: LaurentHalf) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        if let Some((c, k)) = den.as_monomial() {
            let inv = c.inv().expect("nonzero denominator");
            return Scalar::from_laurent(num.scale(&inv).shift(-k));
        }
        let (nlo, np) = num.to_poly();
        let (dlo, dp) = den.to_poly();
        let g = poly_gcd(&np, &dp);
        let (np, dp) = if g.len() > 1 { (poly_divrem(&np, &g).0, poly_divrem(&dp, &g).0) } else { (np, dp) };
        let lead_inv = dp.last().unwrap().inv().unwrap();
        let num = LaurentHalf::from_poly(&np, nlo - dlo).scale(&lead_inv);
        let den = LaurentHalf::from_poly(&dp, 0).scale(&lead_inv);
        if den.is_one() {
            Scalar::from_laurent(num)
        } else {
            Scalar { num, den }
        }
    }

    pub fn numer(&self) -> &LaurentHalf {
        &self.num
    }

    pub fn denom(&self) -> &LaurentHalf {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial this scalar equals, if its denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentHalf> {
        self.den.is_one().then_some(&self.num)
    }

    /// `Some((c, k))` when the scalar is the monomial `c·q^{k/2}`.
    pub fn as_monomial(&self) -> Option<(&GaussRat, i32)> {
        self.as_laurent().and_then(|p| p.as_monomial())
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<Scalar, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &GaussRat) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Evaluates at `q^{1/2} = x0`, with `x0 > 0` and `x0 ≠ 1`.
    pub fn specialize(&self, x0: &BigRational) -> Result<GaussRat, ScalarError> {
        if !x0.is_positive() || x0.is_one() {
            return Err(ScalarError::Domain(format!(
                "specialization point must be positive and different from 1, got {x0}"
            )));
        }
        let d = self.den.eval(x0);
        if d.is_zero() {
            return Err(ScalarError::Pole(x0.to_string()));
        }
        Ok(&self.num.eval(x0) / &d)
    }

    /// Evaluates a polynomial entry at `q^{1/2} = 1`.
    pub fn eval_at_one(&self) -> Result<GaussRat, ScalarError> {
        match self.as_laurent() {
            Some(p) => Ok(p.eval_at_one()),
            None => Err(ScalarError::NotPolynomial(self.to_string())),
        }
    }
}

impl From<LaurentHalf> for Scalar {
    fn from(p: LaurentHalf) -> Self {
        Scalar::from_laurent(p)
    }
}

impl From<GaussRat> for Scalar {
    fn from(c: GaussRat) -> Self {
        Scalar::from_gauss(c)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

fn add_sub(a: &Scalar, b: &Scalar, sub: bool) -> Scalar {
    let combine = |x: &LaurentHalf, y: &LaurentHalf| if sub { x - y } else { x + y };
    if a.den.is_one() && b.den.is_one() {
        return Scalar::from_laurent(combine(&a.num, &b.num));
    }
    if a.den == b.den {
        return Scalar::normalize(combine(&a.num, &b.num), a.den.clone());
    }
    let num = combine(&(&a.num * &b.den), &(&b.num * &a.den));
    Scalar::normalize(num, &a.den * &b.den)
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        add_sub(self, rhs, false)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        if rhs.is_zero() {
            return self.clone();
        }
        add_sub(self, rhs, true)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_laurent(&self.num * &rhs.num);
        }
        Scalar::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: -self.num, den: self.den }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.clone().neg()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &LaurentHalf| {
            if p.terms().len() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{} / {}", wrap(&self.num), wrap(&self.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i32) -> Scalar {
        Scalar::q_pow(k)
    }

    #[test]
    fn fraction_reduces_common_factor() {
        // (q^2 - q^-2) / (q - q^-1) = q + q^-1
        let num = LaurentHalf::q_pow(2) - LaurentHalf::q_pow(-2);
        let den = LaurentHalf::q_pow(1) - LaurentHalf::q_pow(-1);
        let s = Scalar::fraction(num, den).unwrap();
        assert_eq!(s, &q(1) + &q(-1));
        assert!(s.as_laurent().is_some());
    }

    #[test]
    fn inverse_of_q_integer_is_a_true_fraction() {
        let two = &q(1) + &q(-1);
        let inv = two.inv().unwrap();
        assert!(inv.as_laurent().is_none());
        assert!((&inv * &two).is_one());
        assert_eq!(inv.denom().min_exp(), Some(0));
        assert!(inv.denom().leading_coeff().unwrap().is_one());
    }

    #[test]
    fn specialize_checks_domain_and_poles() {
        let x0 = BigRational::from_integer(2.into());
        assert_eq!(q(1).specialize(&x0).unwrap(), GaussRat::from_int(4));
        let one = BigRational::one();
        assert!(matches!(q(1).specialize(&one), Err(ScalarError::Domain(_))));
        let neg = BigRational::from_integer((-2).into());
        assert!(matches!(q(1).specialize(&neg), Err(ScalarError::Domain(_))));
        // 1 / (q - 4) has a pole at q^{1/2} = 2.
        let s =
            Scalar::fraction(LaurentHalf::one(), LaurentHalf::q_pow(1) - LaurentHalf::constant(GaussRat::from_int(4)))
                .unwrap();
        assert!(matches!(s.specialize(&x0), Err(ScalarError::Pole(_))));
    }

    #[test]
    fn display_of_fraction() {
        let s = (&q(1) + &q(-1)).inv().unwrap();
        assert_eq!(s.to_string(), "1*q^(2/2) / (1*q^(4/2) + 1*q^(0/2))");
    }

    #[test]
    fn eval_at_one_rejects_fractions() {
        assert_eq!((&q(1) + &q(-1)).eval_at_one().unwrap(), GaussRat::from_int(2));
        assert!((&q(1) + &q(-1)).inv().unwrap().eval_at_one().is_err());
    }
}
