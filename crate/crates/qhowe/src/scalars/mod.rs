//! Exact coefficient arithmetic.
//!
//! Every coefficient lives in `Q(i)(x)` where `x = q^{1/2}`. Exponents are
//! stored in half-steps, so `q^k` is `x^{2k}` and `q^{1/2}` is `x`.

mod fraction;
mod gauss;
mod laurent;

pub use fraction::Scalar;
pub use gauss::GaussRat;
pub use laurent::LaurentHalf;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("denominator vanishes at q^(1/2) = {0}")]
    Pole(String),
    #[error("entry is not a Laurent polynomial: {0}")]
    NotPolynomial(String),
}

/// The balanced q-integer `(b^n − b^{−n}) / (b − b^{−1})` with `b = x^{base_halves}`.
///
/// `base_halves = 2` is the usual `[n]_q`; `base_halves = 1` is `[n]_{q^{1/2}}`.
pub fn q_int(n: i64, base_halves: i32) -> LaurentHalf {
    assert!(base_halves >= 1, "base_halves must be positive");
    let a = n.unsigned_abs() as i32;
    let terms = (0..a).map(|k| (base_halves * (a - 1 - 2 * k), GaussRat::one()));
    let p = LaurentHalf::from_terms(terms);
    if n < 0 {
        -p
    } else {
        p
    }
}

/// `[n]! = [n]·[n−1]⋯[1]`.
pub fn q_factorial(n: u32, base_halves: i32) -> LaurentHalf {
    (1..=n as i64).fold(LaurentHalf::one(), |acc, k| &acc * &q_int(k, base_halves))
}

/// The balanced q-binomial, via the Pascal recurrence
/// `C(n,k) = b^k C(n−1,k) + b^{−(n−k)} C(n−1,k−1)`.
pub fn q_binomial(n: i64, k: i64, base_halves: i32) -> Result<LaurentHalf, ScalarError> {
    if k < 0 || n < 0 || k > n {
        return Err(ScalarError::Domain(format!("q_binomial({n}, {k})")));
    }
    let mut row = vec![LaurentHalf::one()];
    for nn in 1..=n {
        let mut next = Vec::with_capacity(row.len() + 1);
        for kk in 0..=nn {
            let keep = if kk < nn { row[kk as usize].shift(base_halves * kk as i32) } else { LaurentHalf::zero() };
            let step =
                if kk > 0 { row[kk as usize - 1].shift(-base_halves * (nn - kk) as i32) } else { LaurentHalf::zero() };
            next.push(&keep + &step);
        }
        row = next;
    }
    Ok(row.swap_remove(k as usize))
}

/// Exact quotient `a / b` in the Laurent ring, `Ok(None)` if inexact.
pub fn exact_div(a: &LaurentHalf, b: &LaurentHalf) -> Result<Option<LaurentHalf>, ScalarError> {
    a.exact_div(b)
}

/// Evaluates `s` at `q^{1/2} = x0`.
pub fn specialize(s: &Scalar, x0: &num_rational::BigRational) -> Result<GaussRat, ScalarError> {
    s.specialize(x0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(k: i32) -> LaurentHalf {
        LaurentHalf::q_pow(k)
    }

    #[test]
    fn small_q_integers() {
        assert!(q_int(1, 2).is_one());
        assert_eq!(q_int(2, 2), &q(1) + &q(-1));
        assert_eq!(q_int(3, 2), &(&q(2) + &LaurentHalf::one()) + &q(-2));
        assert_eq!(q_int(-3, 2), -q_int(3, 2));
        assert!(q_int(0, 2).is_zero());
        assert_eq!(q_int(2, 1), &LaurentHalf::x_pow(1) + &LaurentHalf::x_pow(-1));
    }

    #[test]
    fn q_integer_matches_defining_quotient() {
        // Oracle: divide b^n − b^{−n} by b − b^{−1} directly.
        for base in 1..=3 {
            let b = |k: i32| LaurentHalf::x_pow(base * k);
            for n in 0..9 {
                let num = &b(n) - &b(-n);
                let den = &b(1) - &b(-1);
                assert_eq!(num.exact_div(&den).unwrap().unwrap(), q_int(n as i64, base));
            }
        }
    }

    #[test]
    fn binomial_4_2() {
        let expect = LaurentHalf::from_terms([
            (8, GaussRat::one()),
            (4, GaussRat::one()),
            (0, GaussRat::from_int(2)),
            (-4, GaussRat::one()),
            (-8, GaussRat::one()),
        ]);
        let b = q_binomial(4, 2, 2).unwrap();
        assert_eq!(b, expect);
        assert_eq!(b.eval_at_one(), GaussRat::from_int(6));
        assert_eq!(q_binomial(2, 1, 2).unwrap(), q_int(2, 2));
        assert!(q_binomial(5, 0, 2).unwrap().is_one());
        assert!(q_binomial(3, 4, 2).is_err());
        assert!(q_binomial(3, -1, 2).is_err());
    }

    #[test]
    fn binomial_times_factorials_is_factorial() {
        for base in [1, 2] {
            for n in 0..8u32 {
                for k in 0..=n {
                    let b = q_binomial(n as i64, k as i64, base).unwrap();
                    let lhs = &(&b * &q_factorial(k, base)) * &q_factorial(n - k, base);
                    assert_eq!(lhs, q_factorial(n, base));
                }
            }
        }
    }

    #[test]
    fn specialize_three() {
        let x0 = BigRational::from_integer(2.into());
        let s = Scalar::from_laurent(q_int(3, 2));
        assert_eq!(specialize(&s, &x0).unwrap(), GaussRat::from_ratio(273, 16));
        assert_eq!(specialize(&Scalar::q_pow(1), &x0).unwrap(), GaussRat::from_int(4));
        let bad = BigRational::from_integer(1.into());
        assert!(specialize(&Scalar::from_laurent(q_int(2, 2)), &bad).is_err());
    }

    #[test]
    fn exact_div_examples() {
        let x = &q(3) + &LaurentHalf::x_pow(-1);
        let two = q_int(2, 2);
        assert_eq!(exact_div(&(&two * &x), &two).unwrap().unwrap(), x);
        assert_eq!(exact_div(&q(1), &(&q(1) + &LaurentHalf::one())).unwrap(), None);
    }
}
