//! Truncated power series, rational functions, Padé reconstruction and the
//! polynomial predicates used on Poincaré series.

mod poly;
mod sturm;

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::partitions::Birank;
use crate::rational::{self, Q};

pub use poly::Poly;
pub use sturm::{count_real_roots_by_sign, roots_all_negative, roots_all_positive};

/// Default truncation order of expanded series.
pub const DEFAULT_ORDER: usize = 12;

/// Coefficients `c_0 … c_N` of a power series known modulo `t^{N+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TruncatedSeries {
    #[serde(with = "rational::serde_q_vec")]
    coeffs: Vec<Q>,
}

impl TruncatedSeries {
    /// Panics on an empty coefficient list: the order must be at least 0.
    pub fn new(coeffs: Vec<Q>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least one coefficient");
        TruncatedSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        Self::new((0..=order).map(|i| p.coeff(i)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Q {
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new((0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![Q::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = c0.recip();
        let mut out: Vec<Q> = vec![inv0.clone()];
        for k in 1..=self.order() {
            let s: Q = (1..=k).map(|j| &self.coeffs[j] * &out[k - j]).sum();
            out.push(-s * &inv0);
        }
        Ok(Self::new(out))
    }

    /// The series of `f(−t)`.
    pub fn negate_variable(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }
}

/// `P(t)/Q(t)` in lowest terms with `Q(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalFunction {
    pub numerator: Poly,
    pub denominator: Poly,
}

impl RationalFunction {
    /// Reduces to lowest terms and scales so the denominator has constant
    /// term 1.
    pub fn new(numerator: Poly, denominator: Poly) -> Result<Self> {
        let c0 = denominator.coeff(0);
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let g = numerator.gcd(&denominator);
        let (mut num, mut den) = if g.degree().unwrap_or(0) > 0 {
            (numerator.div_rem(&g).0, denominator.div_rem(&g).0)
        } else {
            (numerator, denominator)
        };
        let s = den.coeff(0).recip();
        num = num.scale(&s);
        den = den.scale(&s);
        Ok(RationalFunction {
            numerator: num,
            denominator: den,
        })
    }

    pub fn polynomial(p: Poly) -> Self {
        RationalFunction {
            numerator: p,
            denominator: Poly::one(),
        }
    }

    /// `∏(1 + x_i t) / ∏(1 − y_j t)`.
    pub fn from_roots(x: &[Q], y: &[Q]) -> Result<Self> {
        let num = x
            .iter()
            .fold(Poly::one(), |acc, xi| &acc * &Poly::linear(Q::one(), xi.clone()));
        let den = y
            .iter()
            .fold(Poly::one(), |acc, yj| &acc * &Poly::linear(Q::one(), -yj));
        Self::new(num, den)
    }

    /// Taylor coefficients of `P/Q` modulo `t^{order+1}`.
    pub fn expand(&self, order: usize) -> TruncatedSeries {
        let inv = TruncatedSeries::from_poly(&self.denominator, order)
            .invert()
            .expect("denominator has constant term 1");
        TruncatedSeries::from_poly(&self.numerator, order).mul(&inv)
    }

    /// `f(−t)`.
    pub fn negate_variable(&self) -> Self {
        RationalFunction {
            numerator: self.numerator.negate_variable(),
            denominator: self.denominator.negate_variable(),
        }
    }

    pub fn birank(&self) -> Birank {
        Birank::new(
            self.numerator.degree().unwrap_or(0),
            self.denominator.degree().unwrap_or(0),
        )
    }

    pub fn is_integral(&self) -> bool {
        self.numerator.is_integral() && self.denominator.is_integral()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.numerator, self.denominator)
    }
}

pub fn expand(r: &RationalFunction, order: usize) -> TruncatedSeries {
    r.expand(order)
}

pub fn birank(r: &RationalFunction) -> Birank {
    r.birank()
}

/// Recovers `P/Q` with `deg P ≤ m_max`, `deg Q ≤ n_max` from a truncated
/// series with constant term 1.
///
/// Candidates are tried by increasing `m + n`, then increasing `n`. A
/// candidate is accepted only if `Q·s ≡ P` holds on the whole coefficient
/// window, not just on the equations used to solve for `Q`.
pub fn pade_reconstruct(s: &TruncatedSeries, m_max: usize, n_max: usize) -> Result<RationalFunction> {
    let order = s.order();
    if order < 2 {
        return Err(Error::OrderTooSmall { order, m_max, n_max });
    }
    // Keep two coefficients beyond every solving window for the check.
    let max_total = (m_max + n_max).min(order - 2);
    if !s.coeff(0).is_one() {
        return Err(Error::ConstantTermNotOne(rational::format(s.coeff(0))));
    }
    let c = |k: isize| -> Q {
        if k < 0 {
            Q::zero()
        } else {
            s.coeff(k as usize).clone()
        }
    };
    for total in 0..=max_total {
        for n in 0..=total.min(n_max) {
            let m = total - n;
            if m > m_max {
                continue;
            }
            // Σ_{j=1..n} q_j c_{k−j} = −c_k for k = m+1 … m+n.
            let rows: Vec<Vec<Q>> = (m + 1..=m + n)
                .map(|k| (1..=n).map(|j| c(k as isize - j as isize)).collect())
                .collect();
            let rhs: Vec<Q> = (m + 1..=m + n).map(|k| -c(k as isize)).collect();
            let tail = if n == 0 {
                Vec::new()
            } else {
                match linalg::solve(&Matrix::from_rows(rows), &rhs) {
                    Some(x) => x,
                    None => continue,
                }
            };
            let mut qc = vec![Q::one()];
            qc.extend(tail);
            let den = Poly::new(qc);
            let prod = TruncatedSeries::from_poly(&den, order).mul(s);
            if prod.coeffs()[m + 1..].iter().any(|x| !x.is_zero()) {
                continue;
            }
            let num = Poly::new(prod.coeffs()[..=m].to_vec());
            return RationalFunction::new(num, den);
        }
    }
    Err(Error::NoRationalFunction { m_max, n_max })
}

/// `a_i = a_{m−i}` for every `i`.
pub fn is_reciprocal(p: &Poly) -> bool {
    let c = p.coeffs();
    c.iter().eq(c.iter().rev())
}

/// Writing `q(t) = 1 − b_1 t + b_2 t² − … + b_n (−t)^n`, `b_i = b_{n−i}`.
pub fn is_skew_reciprocal(q: &Poly) -> bool {
    let b = q.alternating_coeffs();
    b.iter().eq(b.iter().rev())
}

/// `P_Λ(t) · P_S(−t) = 1` modulo `t^{order+1}`.
pub fn duality_check(p_lambda: &RationalFunction, p_s: &RationalFunction, order: usize) -> bool {
    p_lambda
        .expand(order)
        .mul(&p_s.negate_variable().expand(order))
        .is_one()
}
