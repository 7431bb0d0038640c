//! The Hecke algebra `H_{q,n}` in the `T_w` basis and its representation
//! `T_i ↦ R_i` on tensor powers of `V`.
//!
//! Generators are 1-based in the public API (`T_1 … T_{n−1}`) and act on
//! tensor factors `i, i+1`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, Matrix, SparseVec};
use crate::rational::{self, Q};
use crate::symmetry::HeckeSymmetry;

/// Largest tensor power `d^n` materialized as a dense matrix.
pub const MAX_DENSE_DIM: usize = 4096;

/// A permutation in one-line notation on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Self {
        let mut seen = vec![false; images.len()];
        for &v in &images {
            assert!(!std::mem::replace(&mut seen[v as usize], true), "not a permutation");
        }
        Perm(images)
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    fn position(&self, value: u8) -> usize {
        self.0.iter().position(|&v| v == value).expect("value in range")
    }

    /// `s_g ∘ w` for the 0-based generator `g`: swaps the values `g` and `g+1`.
    fn left_mul_simple(&self, g: usize) -> Perm {
        let g = g as u8;
        Perm(
            self.0
                .iter()
                .map(|&v| match v {
                    v if v == g => g + 1,
                    v if v == g + 1 => g,
                    v => v,
                })
                .collect(),
        )
    }

    /// Whether `ℓ(s_g w) > ℓ(w)`.
    fn left_ascent(&self, g: usize) -> bool {
        self.position(g as u8) < self.position(g as u8 + 1)
    }

    /// A reduced word `w = s_{i_1} ⋯ s_{i_l}` with 1-based indices, always
    /// peeling off the smallest available left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut w = self.clone();
        'outer: loop {
            for g in 0..w.size().saturating_sub(1) {
                if !w.left_ascent(g) {
                    word.push(g + 1);
                    w = w.left_mul_simple(g);
                    continue 'outer;
                }
            }
            return word;
        }
    }

    /// The product `s_{i_1} ⋯ s_{i_l}` of 1-based simple transpositions.
    pub fn from_word(n: usize, word: &[usize]) -> Perm {
        word.iter()
            .rev()
            .fold(Perm::identity(n), |w, &i| w.left_mul_simple(i - 1))
    }

    /// Extends by a fixed point at the end.
    pub fn extend(&self) -> Perm {
        let mut v = self.0.clone();
        v.push(v.len() as u8);
        Perm(v)
    }

    /// All permutations of `0..n`, ordered lexicographically.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Perm>) {
            if cur.len() == n {
                out.push(Perm(cur.clone()));
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v as u8);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "[{}]", s.join(" "))
    }
}

/// The Hecke parameter; `q ∉ {0, −1}` so every `[n]_q` is invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QContext {
    q: Q,
}

impl QContext {
    pub fn new(q: Q) -> Result<Self> {
        if q.is_zero() || q == -Q::one() {
            return Err(Error::InvalidParameter(rational::format(&q)));
        }
        Ok(QContext { q })
    }

    pub fn q(&self) -> &Q {
        &self.q
    }
}

/// `[n]_q = 1 + q + ⋯ + q^{n−1}`.
pub fn q_int(n: usize, ctx: &QContext) -> Q {
    q_int_at(n, &ctx.q)
}

fn q_int_at(n: usize, q: &Q) -> Q {
    let mut acc = Q::zero();
    let mut p = Q::one();
    for _ in 0..n {
        acc += &p;
        p *= q;
    }
    acc
}

/// `[n]_q! = [1]_q ⋯ [n]_q`.
pub fn q_factorial(n: usize, ctx: &QContext) -> Q {
    (1..=n).map(|k| q_int(k, ctx)).product()
}

/// A finite combination `Σ c_w T_w` in `H_{q,n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Perm, Q>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(w: Perm) -> Self {
        let n = w.size();
        let mut terms = BTreeMap::new();
        terms.insert(w, Q::one());
        HeckeElement { n, terms }
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(Perm::identity(n))
    }

    /// `T_i` for `1 ≤ i < n`.
    pub fn generator(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "generator index out of range");
        Self::basis(Perm::from_word(n, &[i]))
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, w: &Perm) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Perm, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Q) -> Self {
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * s);
        }
        out
    }

    /// `T_g · self` for a 0-based generator.
    fn left_mul_generator(&self, g: usize, ctx: &QContext) -> Self {
        let mut out = Self::zero(self.n);
        let qm1 = &ctx.q - Q::one();
        for (w, c) in &self.terms {
            let sw = w.left_mul_simple(g);
            if w.left_ascent(g) {
                out.add_term(sw, c.clone());
            } else {
                out.add_term(w.clone(), c * &qm1);
                out.add_term(sw, c * &ctx.q);
            }
        }
        out
    }

    pub fn mul(&self, other: &Self, ctx: &QContext) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let mut out = Self::zero(self.n);
        for (v, c) in &self.terms {
            let prod = v
                .reduced_word()
                .iter()
                .rev()
                .fold(other.clone(), |acc, &i| acc.left_mul_generator(i - 1, ctx));
            for (w, x) in prod.terms {
                out.add_term(w, x * c);
            }
        }
        Ok(out)
    }

    /// The image under `H_{q,n} ⊂ H_{q,n+1}`.
    pub fn extend(&self) -> Self {
        let mut out = Self::zero(self.n + 1);
        for (w, c) in &self.terms {
            out.add_term(w.extend(), c.clone());
        }
        out
    }
}

pub fn hecke_mul(a: &HeckeElement, b: &HeckeElement, ctx: &QContext) -> Result<HeckeElement> {
    a.mul(b, ctx)
}

/// `Σ_w u^{ℓ(w)} T_w`.
fn length_weighted_sum(n: usize, u: &Q) -> HeckeElement {
    let mut out = HeckeElement::zero(n);
    for w in Perm::all(n) {
        let c = rational::pow(u, w.length());
        out.add_term(w, c);
    }
    out
}

/// `x_n = ([n]_q!)^{-1} Σ_w T_w`, the idempotent with `x_n T_i = q x_n`.
pub fn symmetrizer_x(n: usize, ctx: &QContext) -> HeckeElement {
    assert!(n >= 1, "n ≥ 1");
    length_weighted_sum(n, &Q::one()).scale(&q_factorial(n, ctx).recip())
}

/// `y_n = ([n]_{1/q}!)^{-1} Σ_w (−q)^{−ℓ(w)} T_w`, the idempotent with
/// `y_n T_i = −y_n`.
pub fn antisymmetrizer_y(n: usize, ctx: &QContext) -> HeckeElement {
    assert!(n >= 1, "n ≥ 1");
    let inv = QContext::new(ctx.q.recip()).expect("1/q is admissible when q is");
    let u = -ctx.q.recip();
    length_weighted_sum(n, &u).scale(&q_factorial(n, &inv).recip())
}

/// Sum over minimal left coset representatives of `S_n / S_{n−1}`:
/// `Σ_{j=1..n} u^{n−j} T_j T_{j+1} ⋯ T_{n−1}`. With `v = u` this satisfies
/// `Σ_{S_n} u^ℓ T_w = coset_sum(n, u) · (Σ_{S_{n−1}} u^ℓ T_w)`.
pub fn coset_sum(n: usize, u: &Q) -> HeckeElement {
    let mut out = HeckeElement::zero(n);
    for j in 1..=n {
        let word: Vec<usize> = (j..n).collect();
        out.add_term(Perm::from_word(n, &word), rational::pow(u, n - j));
    }
    out
}

/// Apply `R_g` (0-based position `g`) to sparse tensors in `V^{⊗n}`.
#[derive(Clone, Debug)]
pub struct TensorAction {
    d: usize,
    /// For each input pair `(i, j)` (index `i·d + j`): the outputs `((k, l), R^{kl}_{ij})`.
    columns: Vec<Vec<(usize, Q)>>,
}

impl TensorAction {
    pub fn new(sym: &HeckeSymmetry) -> Self {
        Self::from_matrix(sym.r(), sym.d())
    }

    pub fn from_matrix(r: &Matrix, d: usize) -> Self {
        let columns = (0..d * d)
            .map(|col| {
                (0..d * d)
                    .filter(|&row| !r.get(row, col).is_zero())
                    .map(|row| (row, r.get(row, col).clone()))
                    .collect()
            })
            .collect();
        TensorAction { d, columns }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `R_{g+1}` on `V^{⊗n}`; position 0 is the most significant digit.
    pub fn apply(&self, g: usize, n: usize, v: &SparseVec) -> SparseVec {
        assert!(g + 1 < n, "generator out of range");
        let d = self.d;
        let stride = d.pow((n - 2 - g) as u32);
        let mut out = SparseVec::new();
        for (&idx, x) in v {
            let pair = (idx / stride) % (d * d);
            let base = idx - pair * stride;
            for (kl, r) in &self.columns[pair] {
                let e = out.entry(base + kl * stride).or_insert_with(Q::zero);
                *e += x * r;
            }
        }
        out.retain(|_, x| !x.is_zero());
        out
    }

    /// `R_{i_1} ⋯ R_{i_l} v` for a 1-based word.
    pub fn apply_word(&self, word: &[usize], n: usize, v: &SparseVec) -> SparseVec {
        word.iter()
            .rev()
            .fold(v.clone(), |acc, &i| self.apply(i - 1, n, &acc))
    }
}

/// Matrix of `h` acting on `V^{⊗n}` through `T_w ↦ R_{i_1} ⋯ R_{i_l}`.
pub fn act_on_tensor(h: &HeckeElement, sym: &HeckeSymmetry, ctx: &QContext) -> Result<Matrix> {
    let size = tensor_size(h, sym, ctx)?;
    let n = h.strands();
    let action = TensorAction::new(sym);
    let words = words(h);
    let mut m = Matrix::zeros(size, size);
    for col in 0..size {
        for (row, x) in apply_words(&words, &action, n, col) {
            m.set(row, col, x);
        }
    }
    Ok(m)
}

/// Rank of `h` on `V^{⊗n}`, reducing the images of basis tensors one at a
/// time instead of forming the dense matrix.
pub fn action_rank(h: &HeckeElement, sym: &HeckeSymmetry, ctx: &QContext) -> Result<usize> {
    let size = tensor_size(h, sym, ctx)?;
    let n = h.strands();
    let action = TensorAction::new(sym);
    let words = words(h);
    let mut basis = EchelonBasis::new();
    for col in 0..size {
        basis.insert(apply_words(&words, &action, n, col));
    }
    Ok(basis.len())
}

fn tensor_size(h: &HeckeElement, sym: &HeckeSymmetry, ctx: &QContext) -> Result<usize> {
    if ctx.q() != sym.q() {
        return Err(Error::ParameterMismatch {
            element: rational::format(ctx.q()),
            symmetry: rational::format(sym.q()),
        });
    }
    let n = h.strands();
    sym.d()
        .checked_pow(n as u32)
        .filter(|&s| s <= MAX_DENSE_DIM)
        .ok_or(Error::TooLarge(sym.d().saturating_pow(n as u32)))
}

fn words(h: &HeckeElement) -> Vec<(Vec<usize>, Q)> {
    h.terms().map(|(w, c)| (w.reduced_word(), c.clone())).collect()
}

fn apply_words(words: &[(Vec<usize>, Q)], action: &TensorAction, n: usize, col: usize) -> SparseVec {
    let e: SparseVec = [(col, Q::one())].into_iter().collect();
    let mut acc = SparseVec::new();
    for (word, c) in words {
        for (idx, x) in action.apply_word(word, n, &e) {
            *acc.entry(idx).or_insert_with(Q::zero) += x * c;
        }
    }
    acc.retain(|_, x| !x.is_zero());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn ctx(q: Q) -> QContext {
        QContext::new(q).unwrap()
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_int(3, &ctx(int(2))), int(7));
        for n in 0..6 {
            assert_eq!(q_int(n, &ctx(int(1))), int(n as i64));
        }
        assert_eq!(q_factorial(3, &ctx(int(2))), int(21));
        assert_eq!(q_factorial(0, &ctx(int(2))), int(1));
        assert!(QContext::new(int(0)).is_err());
        assert!(QContext::new(int(-1)).is_err());
    }

    #[test]
    fn permutation_basics() {
        for n in 1..=5 {
            for w in Perm::all(n) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                assert_eq!(Perm::from_word(n, &word), w);
            }
        }
        assert_eq!(Perm::all(4).len(), 24);
    }

    #[test]
    fn quadratic_relation() {
        let c = ctx(int(3));
        let t = HeckeElement::generator(2, 1);
        let sq = t.mul(&t, &c).unwrap();
        let expected = t.scale(&int(2)).add(&HeckeElement::identity(2).scale(&int(3))).unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn identity_and_braid() {
        let c = ctx(frac(3, 2));
        for w in Perm::all(3) {
            let tw = HeckeElement::basis(w);
            assert_eq!(HeckeElement::identity(3).mul(&tw, &c).unwrap(), tw);
            assert_eq!(tw.mul(&HeckeElement::identity(3), &c).unwrap(), tw);
        }
        let t1 = HeckeElement::generator(3, 1);
        let t2 = HeckeElement::generator(3, 2);
        let a = t1.mul(&t2, &c).unwrap().mul(&t1, &c).unwrap();
        let b = t2.mul(&t1, &c).unwrap().mul(&t2, &c).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, HeckeElement::basis(Perm::from_images(vec![2, 1, 0])));
    }

    #[test]
    fn strand_mismatch() {
        let c = ctx(int(2));
        let e = HeckeElement::identity(2).mul(&HeckeElement::identity(3), &c);
        assert_eq!(e, Err(Error::StrandMismatch(2, 3)));
    }

    #[test]
    fn small_idempotents() {
        let c = ctx(int(2));
        let y2 = antisymmetrizer_y(2, &c);
        let expected = HeckeElement::identity(2)
            .scale(&int(2))
            .add(&HeckeElement::generator(2, 1).scale(&int(-1)))
            .unwrap()
            .scale(&frac(1, 3));
        assert_eq!(y2, expected);
        assert_eq!(y2.mul(&y2, &c).unwrap(), y2);
        let x2 = symmetrizer_x(2, &c);
        let expected = HeckeElement::identity(2)
            .add(&HeckeElement::generator(2, 1))
            .unwrap()
            .scale(&frac(1, 3));
        assert_eq!(x2, expected);
        assert_eq!(symmetrizer_x(1, &c), HeckeElement::identity(1));
        assert_eq!(antisymmetrizer_y(1, &c), HeckeElement::identity(1));
    }

    #[test]
    fn coset_factorization() {
        for q in [int(1), int(2), frac(3, 2)] {
            let c = ctx(q.clone());
            for u in [Q::one(), -q.recip()] {
                for n in 2..=4 {
                    let full = length_weighted_sum(n, &u);
                    let smaller = length_weighted_sum(n - 1, &u).extend();
                    let prod = coset_sum(n, &u).mul(&smaller, &c).unwrap();
                    assert_eq!(prod, full, "n={n} q={q} u={u}");
                }
            }
        }
    }
}
