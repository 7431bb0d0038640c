//! Schur functions: Littlewood–Richardson coefficients, evaluation at
//! rational points, expansion in elementary symmetric functions, and the two
//! dimension formulas for simple comodules.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::partitions::{in_gamma, split_decompose, Birank, Partition};
use crate::rational::{self, Q};

/// A decomposition `⊕ I_γ^{⊕ c_γ}` with every multiplicity positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, u64>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, p: Partition, mult: u64) {
        if mult > 0 {
            *self.terms.entry(p).or_insert(0) += mult;
        }
    }

    pub fn get(&self, p: &Partition) -> u64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.terms.iter().rev().map(|(p, &c)| (p, c))
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.terms.values().sum()
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms().map(|(p, c)| format!("{p}:{c}")).collect();
        f.write_str(&parts.join("  "))
    }
}

/// Integer polynomial in `e_1, e_2, …`. A monomial is keyed by the
/// descending list of its indices, so `e_2·e_1²` is `[2, 1, 1]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ElementaryPolynomial {
    terms: BTreeMap<Vec<usize>, BigInt>,
}

impl ElementaryPolynomial {
    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), BigInt::one());
        ElementaryPolynomial { terms }
    }

    /// Builds from `(coefficient, indices)` pairs; indices may be unsorted.
    pub fn from_terms(terms: &[(i64, &[usize])]) -> Self {
        let mut out = ElementaryPolynomial::default();
        for (c, idx) in terms {
            let mut key = idx.to_vec();
            key.sort_unstable_by(|a, b| b.cmp(a));
            out.add_term(key, BigInt::from(*c));
        }
        out
    }

    fn add_term(&mut self, key: Vec<usize>, c: BigInt) {
        let e = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn add_scaled(&mut self, other: &Self, index: usize, sign: i8) {
        for (key, c) in &other.terms {
            let mut key = key.clone();
            if index > 0 {
                let pos = key.partition_point(|&k| k >= index);
                key.insert(pos, index);
            }
            let c = if sign < 0 { -c } else { c.clone() };
            self.add_term(key, c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &BigInt)> {
        self.terms.iter().map(|(k, c)| (k.as_slice(), c))
    }

    pub fn max_index(&self) -> usize {
        self.terms.keys().filter_map(|k| k.first().copied()).max().unwrap_or(0)
    }

    /// Substitutes `e_i := values[i]`.
    pub fn eval(&self, values: &[BigInt]) -> BigInt {
        self.terms
            .iter()
            .map(|(key, c)| key.iter().fold(c.clone(), |acc, &i| acc * &values[i]))
            .sum()
    }
}

impl fmt::Display for ElementaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(key, c)| {
                let mono: Vec<String> = key.iter().map(|i| format!("e{i}")).collect();
                if mono.is_empty() {
                    c.to_string()
                } else if c.is_one() {
                    mono.join("*")
                } else {
                    format!("{c}*{}", mono.join("*"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Number of Littlewood–Richardson tableaux of shape `γ/λ` and content `μ`.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, gamma: &Partition) -> u64 {
    if !gamma.contains(lambda) || gamma.weight() != lambda.weight() + mu.weight() {
        return 0;
    }
    if mu.is_empty() {
        return 1;
    }
    // Skew cells in reverse reading order: rows top to bottom, right to left.
    let cells: Vec<(usize, usize)> = (0..gamma.len())
        .flat_map(|r| {
            let lo = lambda.part(r + 1);
            (lo..gamma.part(r + 1)).rev().map(move |c| (r, c))
        })
        .collect();
    let mut filling: Vec<Vec<usize>> = (0..gamma.len()).map(|r| vec![0; gamma.part(r + 1)]).collect();
    let mut counts = vec![0usize; mu.len()];
    let mut search = LrSearch {
        lambda,
        mu,
        cells: &cells,
        filling: &mut filling,
        counts: &mut counts,
    };
    search.count(0)
}

struct LrSearch<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    cells: &'a [(usize, usize)],
    filling: &'a mut Vec<Vec<usize>>,
    counts: &'a mut Vec<usize>,
}

impl LrSearch<'_> {
    fn count(&mut self, idx: usize) -> u64 {
        let Some(&(r, c)) = self.cells.get(idx) else {
            return 1;
        };
        // Weakly increasing along the row: bounded by the cell to the right.
        let hi = match self.filling[r].get(c + 1) {
            Some(&v) if v > 0 => v,
            _ => self.mu.len(),
        };
        // Strictly increasing down the column, unless the cell above is in λ.
        let lo = if r > 0 && c >= self.lambda.part(r) {
            self.filling[r - 1][c] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in lo..=hi {
            if self.counts[v - 1] >= self.mu.part(v) {
                continue;
            }
            if v > 1 && self.counts[v - 1] + 1 > self.counts[v - 2] {
                continue;
            }
            self.counts[v - 1] += 1;
            self.filling[r][c] = v;
            total += self.count(idx + 1);
            self.filling[r][c] = 0;
            self.counts[v - 1] -= 1;
        }
        total
    }
}

/// Partitions `γ ⊇ λ` of the given weight with `γ_i ≤ λ_i + extra` and at
/// most `max_len` rows.
fn shapes_over(lambda: &Partition, weight: usize, extra: usize, max_len: usize) -> Vec<Partition> {
    fn rec(
        lambda: &Partition,
        row: usize,
        rest: usize,
        prev: usize,
        extra: usize,
        max_len: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        let lo = lambda.part(row + 1);
        if rest == 0 {
            if lo == 0 {
                out.push(Partition::new(cur.clone()).expect("weakly decreasing by construction"));
            }
            return;
        }
        if row >= max_len {
            return;
        }
        let hi = prev.min(lo + extra).min(rest);
        for v in (lo.max(1)..=hi).rev() {
            cur.push(v);
            rec(lambda, row + 1, rest - v, v, extra, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if weight < lambda.weight() {
        return out;
    }
    rec(lambda, 0, weight, usize::MAX, extra, max_len, &mut Vec::new(), &mut out);
    out
}

/// `I_λ ⊗ I_μ ≅ ⊕_γ I_γ^{⊕ c^γ_{λμ}}`, dropping `γ ∉ Γ_{m,n}` when a birank
/// is given.
pub fn tensor_decompose(lambda: &Partition, mu: &Partition, b: Option<Birank>) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    let weight = lambda.weight() + mu.weight();
    for gamma in shapes_over(lambda, weight, mu.part(1), lambda.len() + mu.len()) {
        if b.is_some_and(|b| !in_gamma(&gamma, b)) {
            continue;
        }
        let c = lr_coeff(lambda, mu, &gamma);
        out.add(gamma, c);
    }
    out
}

/// Dual Jacobi–Trudi: `s_λ = det(e_{λ'_i − i + j})`.
pub fn schur_to_elementary(lambda: &Partition) -> ElementaryPolynomial {
    let conj = lambda.conjugate();
    let size = conj.len();
    let entry = |i: usize, j: usize| -> Option<usize> {
        let idx = conj.part(i + 1) as isize - i as isize + j as isize;
        (idx >= 0).then_some(idx as usize)
    };
    // Row-by-row Laplace expansion memoized on the set of used columns.
    let mut layer: HashMap<u32, ElementaryPolynomial> = HashMap::new();
    layer.insert(0, ElementaryPolynomial::one());
    for i in 0..size {
        let mut next: HashMap<u32, ElementaryPolynomial> = HashMap::new();
        for (mask, poly) in &layer {
            for j in 0..size {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let Some(idx) = entry(i, j) else { continue };
                let inversions = (mask >> (j + 1)).count_ones();
                let sign = if inversions % 2 == 0 { 1 } else { -1 };
                next.entry(mask | (1 << j))
                    .or_default()
                    .add_scaled(poly, idx, sign);
            }
        }
        layer = next;
    }
    layer.remove(&((1u32 << size) - 1)).unwrap_or_default()
}

/// `dim I_λ = s_λ^R`, where `e_k ↦ dim Λ_k` (`lambda_dims[k]`).
pub fn dim_simple(lambda: &Partition, lambda_dims: &[BigInt]) -> Result<BigInt> {
    let needed = lambda.len();
    if lambda_dims.len() <= needed {
        return Err(Error::InsufficientDims {
            needed,
            available: lambda_dims.len(),
        });
    }
    Ok(schur_to_elementary(lambda).eval(lambda_dims))
}

/// `e_0 … e_r` of the given values.
pub fn elementary_values(values: &[Q]) -> Vec<Q> {
    let mut e = vec![Q::one()];
    for v in values {
        e.push(Q::zero());
        for k in (1..e.len()).rev() {
            let prev = &e[k - 1] * v;
            e[k] += prev;
        }
    }
    e
}

/// `h_0 … h_max` of the given values.
pub fn complete_values(values: &[Q], max: usize) -> Vec<Q> {
    let mut h = vec![Q::zero(); max + 1];
    h[0] = Q::one();
    for v in values {
        // Multiply by 1/(1 − v t).
        for k in 1..=max {
            let prev = &h[k - 1] * v;
            h[k] += prev;
        }
    }
    h
}

/// `s_λ(v_1, …, v_r)` through `det(h_{λ_i − i + j})`.
pub fn schur_eval(lambda: &Partition, values: &[Q]) -> Q {
    let len = lambda.len();
    if len > values.len() {
        return Q::zero();
    }
    if len == 0 {
        return Q::one();
    }
    let h = complete_values(values, lambda.part(1) + len);
    let rows = (0..len)
        .map(|i| {
            (0..len)
                .map(|j| {
                    let idx = lambda.part(i + 1) as isize - i as isize + j as isize;
                    if idx < 0 {
                        Q::zero()
                    } else {
                        h[idx as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    Matrix::from_rows(rows).determinant()
}

/// `∏_{i,j} (x_i + y_j) · s_α(x) · s_{β'}(y)` for splitting `λ` with birank
/// `(|x|, |y|)`.
pub fn dim_splitting(lambda: &Partition, x: &[Q], y: &[Q]) -> Result<Q> {
    let b = Birank::new(x.len(), y.len());
    let split = split_decompose(lambda, b)?;
    let c: Q = x
        .iter()
        .flat_map(|xi| y.iter().map(move |yj| xi + yj))
        .product();
    Ok(c * schur_eval(&split.alpha, x) * schur_eval(&split.beta.conjugate(), y))
}

/// Complementation in the `k × n` box: the Schur factor for the block of
/// `k` rows of length `n − 1`, read through its conjugate `(k^{n−1})` as in
/// the splitting formula, equals `s_{(k)}(y^{-1}) · (∏ y_j)^k`.
pub fn hook_schur_identity_check(k: usize, n: usize, y: &[Q]) -> bool {
    assert_eq!(y.len(), n, "need exactly n values");
    let block = Partition::rectangle(n.saturating_sub(1), k);
    let lhs = schur_eval(&block.conjugate(), y);
    let inv: Vec<Q> = y.iter().map(|v| v.recip()).collect();
    let bn: Q = y.iter().product();
    let rhs = schur_eval(&Partition::rectangle(k, 1), &inv) * rational::pow(&bn, k);
    lhs == rhs
}
