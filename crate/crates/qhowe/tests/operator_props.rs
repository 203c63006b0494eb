use proptest::prelude::*;
use qhowe::fock::{FockOperator, FockVector, OccState};
use qhowe::scalars::{GaussRat, LaurentHalf, Scalar};

const SITES: usize = 3;

fn coeff() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, -3i64..=3, -4i32..=4).prop_map(|(re, im, k)| {
        let c = &GaussRat::from_int(re) + &(&GaussRat::i() * &GaussRat::from_int(im));
        Scalar::from_laurent(LaurentHalf::monomial(c, k))
    })
}

fn operator() -> impl Strategy<Value = FockOperator> {
    let dim = 1u32 << SITES;
    prop::collection::vec((0..dim, 0..dim, coeff()), 0..12).prop_map(|entries| {
        FockOperator::from_columns(SITES, |s| {
            entries.iter().filter(|(c, _, _)| *c == s.0).map(|(_, r, k)| (OccState(*r), k.clone())).collect()
        })
    })
}

fn vector() -> impl Strategy<Value = FockVector> {
    prop::collection::vec((0..1u32 << SITES, coeff()), 0..6)
        .prop_map(|terms| FockVector::from_terms(terms.into_iter().map(|(s, c)| (OccState(s), c))))
}

proptest! {
    #[test]
    fn composition_is_associative(a in operator(), b in operator(), c in operator()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn composition_distributes(a in operator(), b in operator(), c in operator()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn application_matches_composition(a in operator(), b in operator(), v in vector()) {
        prop_assert_eq!((&a * &b).apply(&v), a.apply(&b.apply(&v)));
    }

    #[test]
    fn identity_and_zero(a in operator()) {
        let id = FockOperator::identity(SITES);
        prop_assert_eq!(&a * &id, a.clone());
        prop_assert_eq!(&id * &a, a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert!(a.commutator(&id).is_zero());
    }
}
