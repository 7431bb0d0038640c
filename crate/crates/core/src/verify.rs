//! Exact checks of the decomposition and dimension identities behind the
//! reciprocity theorem, plus the low-birank classification.

use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::partitions::{dual_splitting_partitions, Birank, Partition};
use crate::rational::{self, Q};
use crate::series::{
    self, is_reciprocal, is_skew_reciprocal, roots_all_negative, roots_all_positive, Poly,
    RationalFunction, TruncatedSeries,
};
use crate::symfunc::{complete_values, dim_splitting, elementary_values, tensor_decompose};
use crate::symmetry::{self, HeckeSymmetry};

/// Default seed for sampled suites.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// One checked identity: `pass` holds exactly when `lhs == rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub params: String,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    pub pass: bool,
}

impl IdentityReport {
    fn new(identity: &str, params: String, lhs: Vec<String>, rhs: Vec<String>) -> Self {
        let pass = lhs == rhs;
        IdentityReport {
            identity: identity.to_string(),
            params,
            lhs,
            rhs,
            pass,
        }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} {}: lhs={} rhs={}",
            if self.pass { "pass" } else { "FAIL" },
            self.identity,
            self.params,
            self.lhs.join(" "),
            self.rhs.join(" ")
        )
    }
}

/// A report together with the outcome it is supposed to have. Negative
/// controls expect `pass == false`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckedReport {
    #[serde(flatten)]
    pub report: IdentityReport,
    pub expected: bool,
}

impl CheckedReport {
    pub fn positive(report: IdentityReport) -> Self {
        CheckedReport { report, expected: true }
    }

    pub fn negative(report: IdentityReport) -> Self {
        CheckedReport { report, expected: false }
    }

    pub fn ok(&self) -> bool {
        self.report.pass == self.expected
    }
}

impl fmt::Display for CheckedReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.expected {
            write!(f, "{}", self.report)
        } else {
            let verdict = if self.ok() { "ok" } else { "UNEXPECTED" };
            write!(f, "{} (negative control: {verdict})", self.report)
        }
    }
}

fn q_strings<'a>(items: impl IntoIterator<Item = &'a Q>) -> Vec<String> {
    items.into_iter().map(rational::format).collect()
}

fn list(xs: &[Q]) -> String {
    format!("({})", q_strings(xs).join(","))
}

/// `((n+1)^m, n^{k+1}) ⊗ (1^k)` restricted to `Γ_{m,n}` is the multiplicity-free
/// sum over `l = 0 … min(k,m)` of `((n+2)^l, (n+1)^{m−l}, n^{k+1}, 1^{k−l})`.
pub fn verify_tensor_lr(b: Birank, k: usize) -> IdentityReport {
    let (m, n) = (b.m, b.n);
    let lambda = Partition::from_blocks(&[(n + 1, m), (n, k + 1)]);
    let mu = Partition::rectangle(1, k);
    let got = tensor_decompose(&lambda, &mu, Some(b));
    let mut lhs: Vec<String> = got.terms().map(|(p, c)| format!("{p}:{c}")).collect();
    let mut expected: Vec<Partition> = (0..=k.min(m))
        .map(|l| Partition::from_blocks(&[(n + 2, l), (n + 1, m - l), (n, k + 1), (1, k - l)]))
        .collect();
    expected.sort_by(|a, b| b.cmp(a));
    let mut rhs: Vec<String> = expected.iter().map(|p| format!("{p}:1")).collect();
    lhs.push(format!("count={}", got.len()));
    rhs.push(format!("count={}", k.min(m) + 1));
    IdentityReport::new("tensor-lr", format!("m={m} n={n} k={k} lambda={lambda} mu={mu}"), lhs, rhs)
}

/// `λ_k`: coefficient of `t^k` in `∏(1 + x_i t) / ∏(1 − y_j t)`.
pub fn lambda_dim(k: usize, x: &[Q], y: &[Q]) -> Q {
    let e = elementary_values(x);
    let h = complete_values(y, k);
    (0..=k.min(x.len())).map(|i| &e[i] * &h[k - i]).sum()
}

fn splitting_sum(b: Birank, k: usize, x: &[Q], y: &[Q]) -> Result<Q> {
    dual_splitting_partitions(b, k)
        .iter()
        .map(|p| dim_splitting(p, x, y))
        .sum()
}

fn cross_product(x: &[Q], y: &[Q]) -> Q {
    x.iter().flat_map(|xi| y.iter().map(move |yj| xi + yj)).product()
}

/// `C · λ_k · a_m · b_n^{k+1} = Σ_l dim I_{λ^{(l)}}` over the splitting
/// partitions `λ^{(l)} = ((n+1)^{m−l}, n^{2l+1}, (n−1)^{k−l})`.
///
/// Holds when `x` and `y` are each closed under inversion, which is the case
/// for the roots of a reciprocal numerator and skew-reciprocal denominator;
/// see [`verify_dual_dims_bracket`] for the form valid for any roots.
pub fn verify_dual_dims(b: Birank, k: usize, x: &[Q], y: &[Q]) -> Result<IdentityReport> {
    assert_eq!((x.len(), y.len()), (b.m, b.n), "root counts must match the birank");
    let a_m: Q = x.iter().product();
    let b_n: Q = y.iter().product();
    let lhs = cross_product(x, y) * lambda_dim(k, x, y) * a_m * rational::pow(&b_n, k + 1);
    let rhs = splitting_sum(b, k, x, y)?;
    Ok(IdentityReport::new(
        "dual-dims",
        format!("m={} n={} k={k} x={} y={}", b.m, b.n, list(x), list(y)),
        q_strings([&lhs]),
        q_strings([&rhs]),
    ))
}

/// `Σ_l dim I_{λ^{(l)}} = C · b_n^{k+1} · Σ_i a_{m−i} h_{k−i}(y^{-1})`, for
/// arbitrary positive `x`, `y`.
pub fn verify_dual_dims_bracket(b: Birank, k: usize, x: &[Q], y: &[Q]) -> Result<IdentityReport> {
    assert_eq!((x.len(), y.len()), (b.m, b.n), "root counts must match the birank");
    let a = elementary_values(x);
    let inv: Vec<Q> = y.iter().map(Q::recip).collect();
    let h = complete_values(&inv, k);
    let b_n: Q = y.iter().product();
    let bracket: Q = (0..=k.min(b.m)).map(|i| &a[b.m - i] * &h[k - i]).sum();
    let lhs = splitting_sum(b, k, x, y)?;
    let rhs = cross_product(x, y) * rational::pow(&b_n, k + 1) * bracket;
    Ok(IdentityReport::new(
        "dual-dims-bracket",
        format!("m={} n={} k={k} x={} y={}", b.m, b.n, list(x), list(y)),
        q_strings([&lhs]),
        q_strings([&rhs]),
    ))
}

/// `b_n A^∨(t) / (a_m B^∨(t))` against `A(t)/B(t)` to order `order`, where
/// `A = Σ a_i t^i`, `B = Σ b_j (−t)^j`, and `A^∨`, `B^∨` come from clearing
/// the negative powers in `A(t^{-1})`, `B(t^{-1})`.
pub fn verify_reflection(a: &[Q], b: &[Q], order: usize) -> IdentityReport {
    assert!(a.first().is_some_and(One::is_one) && b.first().is_some_and(One::is_one));
    let (m, n) = (a.len() - 1, b.len() - 1);
    let (a_m, b_n) = (&a[m], &b[n]);
    assert!(!a_m.is_zero() && !b_n.is_zero(), "leading coefficients must be nonzero");
    let sign = |j: usize| if j % 2 == 0 { Q::one() } else { -Q::one() };
    let a_rev = Poly::new((0..=m).map(|j| &a[m - j] * b_n).collect());
    let b_rev = Poly::new((0..=n).map(|j| &b[n - j] * sign(j) * a_m).collect());
    let lhs = TruncatedSeries::from_poly(&a_rev, order)
        .mul(&TruncatedSeries::from_poly(&b_rev, order).invert().expect("b_n a_m ≠ 0"));
    let num = Poly::new(a.to_vec());
    let den = Poly::new((0..=n).map(|j| &b[j] * sign(j)).collect());
    let rhs = TruncatedSeries::from_poly(&num, order)
        .mul(&TruncatedSeries::from_poly(&den, order).invert().expect("b_0 = 1"));
    IdentityReport::new(
        "reflection",
        format!("a={} b={} order={order}", list(a), list(b)),
        q_strings(lhs.coeffs()),
        q_strings(rhs.coeffs()),
    )
}

/// Reciprocity, integrality and root signs of the reconstructed `P_Λ`.
pub fn verify_reciprocity(sym: &HeckeSymmetry, order: usize, bounds: (usize, usize), cap: usize) -> Result<IdentityReport> {
    let dims = symmetry::dims_lambda(sym, order, cap)?;
    let r = series::pade_reconstruct(&symmetry::dims_to_series(&dims), bounds.0, bounds.1)?;
    let checks = [
        ("numerator-reciprocal", is_reciprocal(&r.numerator)),
        ("denominator-skew-reciprocal", is_skew_reciprocal(&r.denominator)),
        ("integral", r.is_integral()),
        ("numerator-roots-negative", roots_all_negative(&r.numerator)),
        ("denominator-roots-positive", roots_all_positive(&r.denominator)),
    ];
    Ok(IdentityReport::new(
        "reciprocity",
        format!("d={} q={} P={} Q={} birank={}", sym.d(), rational::format(sym.q()), r.numerator, r.denominator, r.birank()),
        checks.iter().map(|(name, ok)| format!("{name}={ok}")).collect(),
        checks.iter().map(|(name, _)| format!("{name}=true")).collect(),
    ))
}

/// `P_Λ(t) · P_S(−t) = 1` to order `order`, each side reconstructed from ranks.
pub fn verify_duality(sym: &HeckeSymmetry, order: usize, bounds: (usize, usize), cap: usize) -> Result<IdentityReport> {
    let p_lambda = symmetry::poincare_lambda(sym, order, bounds, cap)?;
    let p_s = symmetry::poincare_s(sym, order, bounds, cap)?;
    let product = p_lambda.expand(order).mul(&p_s.negate_variable().expand(order));
    let mut one = vec![Q::zero(); order + 1];
    one[0] = Q::one();
    Ok(IdentityReport::new(
        "duality",
        format!("d={} q={} P_L={p_lambda} P_S={p_s} order={order}", sym.d(), rational::format(sym.q())),
        q_strings(product.coeffs()),
        q_strings(&one),
    ))
}

/// The built-in fixtures used by the suites, with their names.
pub fn fixtures() -> Vec<(String, HeckeSymmetry)> {
    let mut out = Vec::new();
    for d in [2, 3] {
        for q0 in [1, 2] {
            let sym = symmetry::fixture_standard(d, &rational::int(q0)).expect("valid fixture");
            out.push((format!("standard:{d}:{q0}"), sym));
        }
    }
    let sym = symmetry::fixture_standard(2, &rational::frac(3, 2)).expect("valid fixture");
    out.push(("standard:2:3/2".to_string(), sym));
    for (m, n) in [(0, 1), (1, 1), (2, 1), (1, 2)] {
        out.push((format!("super:{m}:{n}"), symmetry::fixture_super(m, n).expect("valid fixture")));
    }
    out
}

/// `count` positive rationals closed under `r ↦ 1/r`: pairs `r, 1/r` plus a
/// `1` when `count` is odd.
pub fn sample_inversion_closed<R: Rng>(rng: &mut R, count: usize) -> Vec<Q> {
    let mut out = Vec::with_capacity(count);
    for _ in 0..count / 2 {
        let r = sample_positive(rng);
        out.push(r.recip());
        out.push(r);
    }
    if count % 2 == 1 {
        out.push(Q::one());
    }
    out
}

/// A positive rational with numerator and denominator in `1..=9`.
pub fn sample_positive<R: Rng>(rng: &mut R) -> Q {
    rational::frac(rng.gen_range(1..=9), rng.gen_range(1..=9))
}

pub fn sample_positives<R: Rng>(rng: &mut R, count: usize) -> Vec<Q> {
    (0..count).map(|_| sample_positive(rng)).collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `verify_tensor_lr` over `1 ≤ m ≤ m_max`, `1 ≤ n ≤ n_max`, `0 ≤ k ≤ k_max`.
pub fn suite_tensor_lr(m_max: usize, n_max: usize, k_max: usize) -> Vec<CheckedReport> {
    let mut out = Vec::new();
    for m in 1..=m_max {
        for n in 1..=n_max {
            for k in 0..=k_max {
                out.push(CheckedReport::positive(verify_tensor_lr(Birank::new(m, n), k)));
            }
        }
    }
    out
}

/// Dual-side dimension identities over the same grid, `samples` seeded root
/// sets per point: the direct form on inversion-closed roots and the bracket
/// form on unrestricted roots.
pub fn suite_dual_dims(m_max: usize, n_max: usize, k_max: usize, samples: usize, seed: u64) -> Result<Vec<CheckedReport>> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    for m in 1..=m_max {
        for n in 1..=n_max {
            let b = Birank::new(m, n);
            for k in 0..=k_max {
                for _ in 0..samples {
                    let x = sample_inversion_closed(&mut rng, m);
                    let y = sample_inversion_closed(&mut rng, n);
                    out.push(CheckedReport::positive(verify_dual_dims(b, k, &x, &y)?));
                    let x = sample_positives(&mut rng, m);
                    let y = sample_positives(&mut rng, n);
                    out.push(CheckedReport::positive(verify_dual_dims_bracket(b, k, &x, &y)?));
                }
            }
        }
    }
    Ok(out)
}

/// Both tensor-side and dual-side checks.
pub fn suite_decomposition(m_max: usize, n_max: usize, k_max: usize, samples: usize, seed: u64) -> Result<Vec<CheckedReport>> {
    let mut out = suite_tensor_lr(m_max, n_max, k_max);
    out.extend(suite_dual_dims(m_max, n_max, k_max, samples, seed)?);
    Ok(out)
}

/// `verify_reflection` for `0 ≤ m ≤ m_max`, `0 ≤ n ≤ n_max`: coefficients from
/// inversion-closed roots must pass; perturbations breaking `a_i = a_{m−i}`
/// or `b_j = b_{n−j}` must fail.
pub fn suite_reflection(m_max: usize, n_max: usize, samples: usize, order: usize, seed: u64) -> Vec<CheckedReport> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    for m in 0..=m_max {
        for n in 0..=n_max {
            for _ in 0..samples {
                let a = elementary_values(&sample_inversion_closed(&mut rng, m));
                let b = elementary_values(&sample_inversion_closed(&mut rng, n));
                out.push(CheckedReport::positive(verify_reflection(&a, &b, order)));
                for (pa, pb) in perturbations(&mut rng, &a, &b) {
                    out.push(CheckedReport::negative(verify_reflection(&pa, &pb, order)));
                }
            }
        }
    }
    out
}

/// Single-coefficient changes that break reciprocity of `a` or skew
/// reciprocity of `b`, keeping `a_0 = b_0 = 1` and nonzero leading terms.
fn perturbations<R: Rng>(rng: &mut R, a: &[Q], b: &[Q]) -> Vec<(Vec<Q>, Vec<Q>)> {
    let mut out = Vec::new();
    let bump = |v: &[Q], i: usize, by: Q| {
        let mut v = v.to_vec();
        v[i] += by;
        v
    };
    let (m, n) = (a.len() - 1, b.len() - 1);
    if m >= 1 {
        out.push((bump(a, m, Q::one()), b.to_vec()));
        let i = rng.gen_range(1..=m);
        if 2 * i != m {
            out.push((bump(a, i, sample_positive(rng)), b.to_vec()));
        }
    }
    if n >= 1 {
        out.push((a.to_vec(), bump(b, n, Q::one())));
        let j = rng.gen_range(1..=n);
        if 2 * j != n {
            out.push((a.to_vec(), bump(b, j, sample_positive(rng))));
        }
    }
    out
}

/// `verify_reciprocity` and `verify_duality` on every built-in fixture.
pub fn suite_reciprocity(order: usize, bounds: (usize, usize), cap: usize) -> Result<Vec<CheckedReport>> {
    let mut out = Vec::new();
    for (name, sym) in fixtures() {
        for mut r in [
            verify_reciprocity(&sym, order, bounds, cap)?,
            verify_duality(&sym, order, bounds, cap)?,
        ] {
            r.params = format!("fixture={name} {}", r.params);
            out.push(CheckedReport::positive(r));
        }
    }
    Ok(out)
}

/// One candidate `(1+t)^{ε₁}(1+at+t²)^{ε₂} / ((1−t)^{δ₁}(1−bt+t²)^{δ₂})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub eps1: bool,
    pub eps2: bool,
    pub delta1: bool,
    pub delta2: bool,
    pub a: Option<u64>,
    pub b: Option<u64>,
    pub function: RationalFunction,
    pub numerator_reciprocal: bool,
    pub denominator_skew_reciprocal: bool,
    pub numerator_roots_negative: bool,
    pub denominator_roots_positive: bool,
}

impl Candidate {
    pub fn new(eps1: bool, eps2: Option<u64>, delta1: bool, delta2: Option<u64>) -> Self {
        let int = |v: u64| rational::int(v as i64);
        let mut num = Poly::one();
        if eps1 {
            num = &num * &Poly::from_ints(&[1, 1]);
        }
        if let Some(a) = eps2 {
            num = &num * &Poly::new(vec![Q::one(), int(a), Q::one()]);
        }
        let mut den = Poly::one();
        if delta1 {
            den = &den * &Poly::from_ints(&[1, -1]);
        }
        if let Some(b) = delta2 {
            den = &den * &Poly::new(vec![Q::one(), -int(b), Q::one()]);
        }
        // Built from a product, not reduced: the factors are kept as listed.
        let function = RationalFunction {
            numerator: num,
            denominator: den,
        };
        Candidate {
            eps1,
            eps2: eps2.is_some(),
            delta1,
            delta2: delta2.is_some(),
            a: eps2,
            b: delta2,
            numerator_reciprocal: is_reciprocal(&function.numerator),
            denominator_skew_reciprocal: is_skew_reciprocal(&function.denominator),
            numerator_roots_negative: roots_all_negative(&function.numerator),
            denominator_roots_positive: roots_all_positive(&function.denominator),
            function,
        }
    }

    pub fn passes(&self) -> bool {
        self.numerator_reciprocal
            && self.denominator_skew_reciprocal
            && self.numerator_roots_negative
            && self.denominator_roots_positive
    }

    /// Factored form, e.g. `(1+t)^1(1+2t+t^2)^1 / 1`.
    pub fn label(&self) -> String {
        let mut num = String::new();
        if self.eps1 {
            num.push_str("(1+t)^1");
        }
        if let Some(a) = self.a {
            num.push_str(&format!("(1+{a}t+t^2)^1"));
        }
        let mut den = String::new();
        if self.delta1 {
            den.push_str("(1-t)^1");
        }
        if let Some(b) = self.b {
            den.push_str(&format!("(1-{b}t+t^2)^1"));
        }
        let or_one = |s: String| if s.is_empty() { "1".to_string() } else { s };
        format!("{} / {}", or_one(num), or_one(den))
    }
}

/// Every candidate with exponents in `{0,1}` and `2 ≤ a ≤ max_a`,
/// `2 ≤ b ≤ max_b` (a parameter only when its factor is present).
pub fn classify_low_birank(max_a: u64, max_b: u64) -> Vec<Candidate> {
    let options = |max: u64| std::iter::once(None).chain((2..=max).map(Some)).collect::<Vec<_>>();
    let mut out = Vec::new();
    for eps1 in [false, true] {
        for &a in &options(max_a) {
            for delta1 in [false, true] {
                for &b in &options(max_b) {
                    out.push(Candidate::new(eps1, a, delta1, b));
                }
            }
        }
    }
    out
}

/// Size of the grid enumerated by [`classify_low_birank`]: `ε₁, δ₁` free and
/// `(ε₂, a)` taking `1 + (max_a − 1)` values, likewise `(δ₂, b)`.
pub fn classification_count(max_a: u64, max_b: u64) -> usize {
    (2 * max_a as usize) * (2 * max_b as usize)
}
