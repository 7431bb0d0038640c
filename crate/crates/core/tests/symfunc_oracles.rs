mod common;

use hecke_poincare::partitions::{in_gamma, Birank, Partition};
use hecke_poincare::rational::{frac, int};
use hecke_poincare::symfunc::{
    dim_simple, elementary_values, hook_schur_identity_check, lr_coeff, schur_eval,
    schur_to_elementary, tensor_decompose,
};
use hecke_poincare::Q;
use num_bigint::BigInt;
use proptest::prelude::*;

use common::{hook_tableaux, kostka, lr_oracle, schur_oracle};

#[test]
fn kostka_oracle_sanity() {
    assert_eq!(kostka(&[2, 1, 0], &[1, 1, 1]), 2);
    assert_eq!(kostka(&[2, 1], &[2, 1]), 1);
    assert_eq!(kostka(&[2, 1], &[1, 2]), 1);
    assert_eq!(kostka(&[3], &[1, 1, 1]), 1);
    assert_eq!(kostka(&[1, 1, 1], &[2, 1, 0]), 0);
}

#[test]
fn lr_matches_monomial_oracle_up_to_weight_four() {
    let shapes = Partition::up_to(4);
    assert_eq!(shapes.len(), 12);
    for lambda in &shapes {
        for mu in &shapes {
            let expected = lr_oracle(lambda, mu);
            let size = lambda.weight() + mu.weight();
            for gamma in Partition::all(size) {
                let want = expected.get(&gamma).copied().unwrap_or(0);
                assert_eq!(lr_coeff(lambda, mu, &gamma), want, "c^{gamma}_{{{lambda},{mu}}}");
            }
            let got = tensor_decompose(lambda, mu, None);
            let listed: Vec<(Partition, u64)> = got.terms().map(|(p, c)| (p.clone(), c)).collect();
            let mut want: Vec<(Partition, u64)> = expected.into_iter().collect();
            want.reverse();
            assert_eq!(listed, want);
        }
    }
}

#[test]
fn lr_is_zero_for_wrong_weight() {
    let p = |s: &str| s.parse::<Partition>().unwrap();
    assert_eq!(lr_coeff(&p("2,1"), &p("1"), &p("2,1")), 0);
    assert_eq!(lr_coeff(&p("2"), &p("2"), &p("3,2")), 0);
}

#[test]
fn schur_eval_matches_tableau_sum() {
    let values = [int(2), frac(1, 3), int(5), frac(7, 2)];
    for lambda in Partition::up_to(5) {
        for r in 0..=4 {
            assert_eq!(schur_eval(&lambda, &values[..r]), schur_oracle(&lambda, &values[..r]), "{lambda} r={r}");
        }
    }
}

#[test]
fn elementary_expansion_agrees_with_evaluation() {
    // Dual Jacobi-Trudi in e against Jacobi-Trudi in h, at integer points.
    let values = [int(1), int(2), int(3), int(5)];
    let e: Vec<BigInt> = elementary_values(&values)
        .into_iter()
        .map(|x| x.to_integer())
        .chain(std::iter::repeat(BigInt::from(0)).take(8))
        .collect();
    for lambda in Partition::up_to(6) {
        let via_e = schur_to_elementary(&lambda).eval(&e);
        assert_eq!(Q::from_integer(via_e), schur_eval(&lambda, &values), "{lambda}");
    }
}

#[test]
fn dim_simple_counts_hook_tableaux() {
    // Dimensions of the exterior powers for super dimension (m|n):
    // coefficients of (1+t)^m / (1-t)^n.
    for (m, n) in [(1, 0), (2, 0), (3, 0), (1, 1), (2, 1), (1, 2), (0, 2), (2, 2)] {
        let f = hecke_poincare::RationalFunction::from_roots(&vec![int(1); m], &vec![int(1); n]).unwrap();
        let dims: Vec<BigInt> = f.expand(10).coeffs().iter().map(|x| x.to_integer()).collect();
        for lambda in Partition::up_to(6) {
            let got = dim_simple(&lambda, &dims).unwrap();
            assert_eq!(got, BigInt::from(hook_tableaux(&lambda, m, n)), "{lambda} ({m}|{n})");
            assert_eq!(got > BigInt::from(0), in_gamma(&lambda, Birank::new(m, n)), "{lambda} ({m}|{n})");
        }
    }
}

#[test]
fn hook_identity_over_small_grid() {
    let pool = [int(2), frac(1, 2), int(3), frac(5, 7)];
    for n in 1..=4 {
        for k in 0..=4 {
            assert!(hook_schur_identity_check(k, n, &pool[..n]), "k={k} n={n}");
        }
    }
}

fn partition_strategy(max_weight: usize) -> impl Strategy<Value = Partition> {
    let all = Partition::up_to(max_weight);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn positive_rational() -> impl Strategy<Value = Q> {
    (1i64..12, 1i64..12).prop_map(|(a, b)| frac(a, b))
}

proptest! {
    #[test]
    fn lr_is_symmetric(l in partition_strategy(5), m in partition_strategy(4)) {
        let a = tensor_decompose(&l, &m, None);
        let b = tensor_decompose(&m, &l, None);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn lr_respects_conjugation(l in partition_strategy(4), m in partition_strategy(4)) {
        let a = tensor_decompose(&l, &m, None);
        let b = tensor_decompose(&l.conjugate(), &m.conjugate(), None);
        for (g, c) in a.terms() {
            prop_assert_eq!(b.get(&g.conjugate()), c);
        }
        prop_assert_eq!(a.len(), b.len());
    }

    #[test]
    fn lr_dimension_count(l in partition_strategy(4), m in partition_strategy(4)) {
        // s_λ s_μ at (1,1,1) equals Σ c^γ s_γ(1,1,1).
        let ones = [int(1), int(1), int(1)];
        let lhs = schur_eval(&l, &ones) * schur_eval(&m, &ones);
        let rhs: Q = tensor_decompose(&l, &m, None)
            .terms()
            .map(|(g, c)| schur_eval(g, &ones) * Q::from_integer(c.into()))
            .sum();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn schur_eval_is_symmetric(
        l in partition_strategy(5),
        mut v in proptest::collection::vec(positive_rational(), 0..4),
    ) {
        let a = schur_eval(&l, &v);
        v.reverse();
        prop_assert_eq!(a, schur_eval(&l, &v));
    }
}
