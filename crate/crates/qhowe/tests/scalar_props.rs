use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qhowe::scalars::{q_binomial, q_int, GaussRat, LaurentHalf, Scalar};

fn gauss() -> impl Strategy<Value = GaussRat> {
    (-4i64..=4, -4i64..=4, 1i64..=3).prop_map(|(re, im, d)| {
        GaussRat::new(BigRational::new(re.into(), d.into()), BigRational::new(im.into(), d.into()))
    })
}

fn laurent() -> impl Strategy<Value = LaurentHalf> {
    prop::collection::vec((-6i32..=6, gauss()), 0..4).prop_map(LaurentHalf::from_terms)
}

fn poly() -> impl Strategy<Value = Scalar> {
    laurent().prop_map(Scalar::from_laurent)
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (laurent(), laurent()).prop_map(|(a, b)| {
        if b.is_zero() {
            Scalar::from_laurent(a)
        } else {
            Scalar::fraction(a, b).expect("nonzero denominator")
        }
    })
}

proptest! {
    #[test]
    fn inverse_multiplies_to_one(a in scalar()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn field_operations_are_consistent(a in scalar(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&(&a - &b) + &b - a.clone()).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a);
        }
    }

    #[test]
    fn specialization_is_a_ring_map(a in scalar(), b in scalar(), x in 2i64..=5) {
        let x0 = BigRational::from_integer(BigInt::from(x));
        if let (Ok(sa), Ok(sb), Ok(sab)) = (a.specialize(&x0), b.specialize(&x0), (&a * &b).specialize(&x0)) {
            prop_assert_eq!(sab, &sa * &sb);
        }
    }

    #[test]
    fn binomial_symmetry(n in 0i64..=9, k in 0i64..=9, base in 1i32..=2) {
        prop_assume!(k <= n);
        prop_assert_eq!(q_binomial(n, k, base).unwrap(), q_binomial(n, n - k, base).unwrap());
    }

    #[test]
    fn q_integer_addition(n in -8i64..=8, m in -8i64..=8) {
        let lhs = &q_int(m, 2).shift(2 * n as i32) + &q_int(n, 2).shift(-2 * m as i32);
        prop_assert_eq!(lhs, q_int(n + m, 2));
    }

    #[test]
    fn q_integers_tend_to_integers(n in -10i64..=10, base in 1i32..=3) {
        prop_assert_eq!(q_int(n, base).eval_at_one(), GaussRat::from_int(n));
        prop_assert_eq!(q_int(n, base).bar(), q_int(n, base));
    }
}
