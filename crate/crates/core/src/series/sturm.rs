//! Exact real-root sign tests via Sturm sequences.

use num_traits::{Signed, Zero};

use super::poly::Poly;
use crate::rational::Q;

fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone(), p.derivative()];
    while let Some(last) = seq.last().filter(|q| !q.is_zero()) {
        let prev = &seq[seq.len() - 2];
        let r = prev.div_rem(last).1;
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    seq.retain(|q| !q.is_zero());
    seq
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sign(x: &Q) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn changes_at(seq: &[Poly], x: &Q) -> usize {
    sign_changes(seq.iter().map(|p| sign(&p.eval(x))))
}

fn changes_at_infinity(seq: &[Poly], positive: bool) -> usize {
    sign_changes(seq.iter().map(|p| {
        let s = sign(&p.leading());
        let odd = p.degree().unwrap_or(0) % 2 == 1;
        if !positive && odd {
            -s
        } else {
            s
        }
    }))
}

/// Distinct real roots of `p` in `(−∞, 0)` and `(0, ∞)`.
pub fn count_real_roots_by_sign(p: &Poly) -> (usize, usize) {
    if p.degree().unwrap_or(0) == 0 {
        return (0, 0);
    }
    let seq = sturm_sequence(p);
    let at_zero = changes_at(&seq, &Q::zero());
    let neg_inf = changes_at_infinity(&seq, false);
    let pos_inf = changes_at_infinity(&seq, true);
    // A root at zero is counted in neither interval: Sturm counts roots in (a, b].
    let zero_root = p.coeff(0).is_zero();
    let negative = neg_inf - at_zero - usize::from(zero_root);
    let positive = at_zero - pos_inf;
    (negative, positive)
}

/// Every complex root of `p` is real and negative. Constant polynomials pass.
pub fn roots_all_negative(p: &Poly) -> bool {
    all_roots_on_side(p, true)
}

/// Every complex root of `p` is real and positive. Constant polynomials pass.
pub fn roots_all_positive(p: &Poly) -> bool {
    all_roots_on_side(p, false)
}

fn all_roots_on_side(p: &Poly, negative: bool) -> bool {
    assert!(!p.is_zero(), "root test on the zero polynomial");
    if p.coeff(0).is_zero() {
        return false;
    }
    let sq = p.squarefree_part();
    let deg = sq.degree().unwrap_or(0);
    let (neg, pos) = count_real_roots_by_sign(&sq);
    if negative {
        neg == deg
    } else {
        pos == deg
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_count_examples() {
        assert!(roots_all_negative(&Poly::from_ints(&[1, 2, 1])));
        assert!(!roots_all_negative(&Poly::from_ints(&[1, 1, 1])));
        assert!(roots_all_positive(&Poly::from_ints(&[1, -3, 1])));
        assert!(!roots_all_positive(&Poly::from_ints(&[1, 3, 1])));
    }

    #[test]
    fn counts() {
        // (t+1)(t-2)(t-3)
        let p = &(&Poly::from_ints(&[1, 1]) * &Poly::from_ints(&[-2, 1])) * &Poly::from_ints(&[-3, 1]);
        assert_eq!(count_real_roots_by_sign(&p), (1, 2));
        assert_eq!(count_real_roots_by_sign(&Poly::from_ints(&[0, 1])), (0, 0));
        assert_eq!(count_real_roots_by_sign(&Poly::from_ints(&[0, -1, 1])), (0, 1));
        assert!(!roots_all_negative(&Poly::from_ints(&[0, 1])));
        assert!(roots_all_negative(&Poly::one()));
        assert!(roots_all_positive(&Poly::one()));
    }
}
