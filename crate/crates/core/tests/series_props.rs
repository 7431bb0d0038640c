use hecke_poincare::rational::{frac, int};
use hecke_poincare::series::{
    count_real_roots_by_sign, duality_check, is_reciprocal, is_skew_reciprocal, pade_reconstruct,
    roots_all_negative, roots_all_positive, Poly, RationalFunction, TruncatedSeries,
};
use hecke_poincare::Q;
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = i64> {
    -10i64..=10
}

/// `P/Q` with `P(0) = Q(0) = 1`, degrees at most 3, heights at most 10.
fn rational_function() -> impl Strategy<Value = RationalFunction> {
    (
        proptest::collection::vec(coeff(), 0..=3),
        proptest::collection::vec(coeff(), 0..=3),
    )
        .prop_map(|(p, q)| {
            let with_one = |v: Vec<i64>| Poly::from_ints(&std::iter::once(1).chain(v).collect::<Vec<_>>());
            RationalFunction::new(with_one(p), with_one(q)).unwrap()
        })
}

fn series(max_len: usize) -> impl Strategy<Value = TruncatedSeries> {
    proptest::collection::vec((-9i64..=9, 1i64..=5), 1..=max_len)
        .prop_map(|v| TruncatedSeries::new(v.into_iter().map(|(a, b)| frac(a, b)).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pade_round_trip(r in rational_function()) {
        let s = r.expand(12);
        let back = pade_reconstruct(&s, 3, 3).unwrap();
        prop_assert_eq!(&back, &r);
        prop_assert_eq!(back.expand(12), s);
    }
}

proptest! {
    #[test]
    fn series_mul_commutes(a in series(8), b in series(8)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn series_inverse(a in series(8)) {
        prop_assume!(*a.coeff(0) != int(0));
        let inv = a.invert().unwrap();
        prop_assert!(a.mul(&inv).is_one());
    }

    #[test]
    fn negating_variable_twice(a in series(8)) {
        prop_assert_eq!(a.negate_variable().negate_variable(), a);
    }

    #[test]
    fn expansion_is_multiplicative(r in rational_function(), s in rational_function()) {
        let prod = RationalFunction::new(&r.numerator * &s.numerator, &r.denominator * &s.denominator).unwrap();
        prop_assert_eq!(prod.expand(10), r.expand(10).mul(&s.expand(10)));
    }

    #[test]
    fn sturm_counts_constructed_roots(
        neg in proptest::collection::vec((1i64..9, 1i64..9), 0..4),
        pos in proptest::collection::vec((1i64..9, 1i64..9), 0..4),
    ) {
        // ∏(1 + r t) has roots −1/r; ∏(1 − r t) has roots 1/r.
        let neg: Vec<Q> = neg.into_iter().map(|(a, b)| frac(a, b)).collect();
        let pos: Vec<Q> = pos.into_iter().map(|(a, b)| frac(a, b)).collect();
        let r = RationalFunction::from_roots(&neg, &pos).unwrap();
        prop_assert!(roots_all_negative(&r.numerator));
        prop_assert!(roots_all_positive(&r.denominator));
        let mut distinct_neg = neg.clone();
        distinct_neg.sort();
        distinct_neg.dedup();
        let mut distinct_pos = pos.clone();
        distinct_pos.sort();
        distinct_pos.dedup();
        let num = RationalFunction::from_roots(&neg, &[]).unwrap().numerator;
        prop_assert_eq!(count_real_roots_by_sign(&num), (distinct_neg.len(), 0));
        let product = &num * &RationalFunction::from_roots(&[], &pos).unwrap().denominator;
        prop_assert_eq!(count_real_roots_by_sign(&product), (distinct_neg.len(), distinct_pos.len()));
    }

    #[test]
    fn roots_closed_under_inversion_give_reciprocity(
        pairs in proptest::collection::vec((1i64..9, 1i64..9), 0..3),
        middle in any::<bool>(),
    ) {
        let mut roots: Vec<Q> = pairs.iter().flat_map(|&(a, b)| [frac(a, b), frac(b, a)]).collect();
        if middle {
            roots.push(int(1));
        }
        let r = RationalFunction::from_roots(&roots, &roots).unwrap();
        prop_assert!(is_reciprocal(&r.numerator));
        prop_assert!(is_skew_reciprocal(&r.denominator));
    }
}

#[test]
fn series_examples() {
    let one_plus_t = TruncatedSeries::from_poly(&Poly::from_ints(&[1, 1]), 4);
    let geometric = RationalFunction::new(Poly::one(), Poly::from_ints(&[1, -1])).unwrap().expand(4);
    assert_eq!(one_plus_t.mul(&geometric), TruncatedSeries::from_ints(&[1, 2, 2, 2, 2]));
    assert!(is_reciprocal(&Poly::from_ints(&[1, 3, 3, 1])));
    assert!(!is_reciprocal(&Poly::from_ints(&[1, 2, 3])));
    assert!(is_skew_reciprocal(&Poly::from_ints(&[1, -5, 1])));
    assert!(!roots_all_negative(&Poly::from_ints(&[1, 1, 1])));
}

#[test]
fn duality_examples() {
    let rf = |p: &[i64], q: &[i64]| RationalFunction::new(Poly::from_ints(p), Poly::from_ints(q)).unwrap();
    assert!(duality_check(&rf(&[1, 2, 1], &[1]), &rf(&[1], &[1, -2, 1]), 10));
    assert!(duality_check(&rf(&[1, 1], &[1, -1]), &rf(&[1, 1], &[1, -1]), 10));
    assert!(duality_check(&rf(&[1], &[1]), &rf(&[1], &[1]), 10));
    assert!(!duality_check(&rf(&[1, 1], &[1]), &rf(&[1, 1], &[1]), 10));
}
