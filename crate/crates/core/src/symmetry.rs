//! Hecke symmetries `R : V⊗V → V⊗V`, their three axioms, the built-in
//! fixtures, and the Poincaré series of the algebras `Λ` and `S`.
//!
//! `R` is stored as a `d² × d²` matrix with `r[(k,l),(i,j)] = R^{kl}_{ij}`,
//! i.e. `R(x_i ⊗ x_j) = Σ R^{kl}_{ij} x_k ⊗ x_l`; pair `(i, j)` has index
//! `i·d + j` (0-based).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hecke::{QContext, TensorAction};
use crate::linalg::{make_primitive, IntEchelonBasis, IntSparseVec, Matrix, SparseVec};
use crate::rational::{self, Q};
use crate::series::{self, RationalFunction, TruncatedSeries};

/// Default bound on tensor powers used for dimension counts.
pub const DEFAULT_STRAND_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeSymmetry {
    d: usize,
    q: Q,
    r: Matrix,
}

/// Outcome of the three axiom checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub braid: bool,
    pub hecke: bool,
    pub half_adjoint: bool,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.braid && self.hecke && self.half_adjoint
    }

    /// Name of the first failing axiom, if any.
    pub fn first_failure(&self) -> Option<&'static str> {
        if !self.braid {
            Some("braid relation R1R2R1 = R2R1R2")
        } else if !self.hecke {
            Some("Hecke relation (R+1)(R-q) = 0")
        } else if !self.half_adjoint {
            Some("half-adjoint invertibility")
        } else {
            None
        }
    }
}

impl HeckeSymmetry {
    /// Validates shape, parameter, and all three axioms.
    pub fn new(d: usize, q: Q, r: Matrix) -> Result<Self> {
        let sym = Self::new_unchecked(d, q, r)?;
        QContext::new(sym.q.clone())?;
        if let Some(axiom) = sym.axioms().first_failure() {
            return Err(Error::AxiomFailed(axiom.to_string()));
        }
        Ok(sym)
    }

    /// Validates only the shape; used for negative tests and for reporting
    /// on arbitrary input.
    pub fn new_unchecked(d: usize, q: Q, r: Matrix) -> Result<Self> {
        let expected = d * d;
        if r.rows() != expected || r.cols() != expected || d == 0 {
            return Err(Error::BadShape {
                rows: r.rows(),
                cols: r.cols(),
                expected,
            });
        }
        Ok(HeckeSymmetry { d, q, r })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn q(&self) -> &Q {
        &self.q
    }

    pub fn r(&self) -> &Matrix {
        &self.r
    }

    /// `R^{kl}_{ij}` with 0-based indices.
    pub fn entry(&self, k: usize, l: usize, i: usize, j: usize) -> &Q {
        self.r.get(k * self.d + l, i * self.d + j)
    }

    pub fn axioms(&self) -> AxiomReport {
        AxiomReport {
            braid: check_braid(&self.r, self.d),
            hecke: check_hecke(&self.r, &self.q, self.d),
            half_adjoint: check_half_adjoint(&self.r, self.d),
        }
    }

    pub fn context(&self) -> QContext {
        QContext::new(self.q.clone()).expect("validated at construction")
    }
}

/// `R_1 R_2 R_1 = R_2 R_1 R_2` on `V^{⊗3}`.
pub fn check_braid(r: &Matrix, d: usize) -> bool {
    let action = TensorAction::from_matrix(r, d);
    (0..d * d * d).all(|idx| {
        let e: SparseVec = [(idx, Q::one())].into_iter().collect();
        action.apply_word(&[1, 2, 1], 3, &e) == action.apply_word(&[2, 1, 2], 3, &e)
    })
}

/// `(R + 1)(R − q) = 0` on `V⊗V`.
pub fn check_hecke(r: &Matrix, q: &Q, d: usize) -> bool {
    let id = Matrix::identity(d * d);
    let a = r + &id;
    let b = r - &id.scale(q);
    (&a * &b).is_zero()
}

/// The matrix of `R^♯ : V*⊗V → V⊗V*`.
///
/// From `⟨R^♯(x^i ⊗ x_j), x_m⟩ = ⟨x^i, R(x_j ⊗ x_m)⟩`, the coefficient of
/// `x_k ⊗ x^m` in `R^♯(x^i ⊗ x_j)` is `R^{ik}_{jm}`. Rows are indexed by
/// `(k, m)`, columns by `(i, j)`.
pub fn half_adjoint(r: &Matrix, d: usize) -> Matrix {
    let mut out = Matrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for m in 0..d {
                    out.set(k * d + m, i * d + j, r.get(i * d + k, j * d + m).clone());
                }
            }
        }
    }
    out
}

pub fn check_half_adjoint(r: &Matrix, d: usize) -> bool {
    !half_adjoint(r, d).determinant().is_zero()
}

/// The classical flip `x_i ⊗ x_j ↦ x_j ⊗ x_i`.
pub fn flip(d: usize) -> Matrix {
    let mut r = Matrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            r.set(j * d + i, i * d + j, Q::one());
        }
    }
    r
}

/// The standard one-parameter deformation of the flip, with Hecke parameter
/// `q0²`:
///
/// - `R(x_i⊗x_i) = q0² x_i⊗x_i`
/// - `R(x_i⊗x_j) = q0 x_j⊗x_i` for `i < j`
/// - `R(x_i⊗x_j) = q0 x_j⊗x_i + (q0² − 1) x_i⊗x_j` for `i > j`
///
/// At `q0 = 1` this is the flip.
pub fn fixture_standard(d: usize, q0: &Q) -> Result<HeckeSymmetry> {
    if !rational::is_positive(q0) || d == 0 {
        return Err(Error::InvalidParameter(rational::format(q0)));
    }
    let q = q0 * q0;
    let mut r = Matrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            let col = i * d + j;
            if i == j {
                r.set(col, col, q.clone());
            } else {
                r.set(j * d + i, col, q0.clone());
                if i > j {
                    r.set(col, col, &q - Q::one());
                }
            }
        }
    }
    HeckeSymmetry::new(d, q, r)
}

/// The super flip on `V = V_0 ⊕ V_1` with `dim V_0 = m`, `dim V_1 = n`:
/// `x_i⊗x_j ↦ (−1)^{p(i)p(j)} x_j⊗x_i`, Hecke parameter 1.
pub fn fixture_super(m: usize, n: usize) -> Result<HeckeSymmetry> {
    let d = m + n;
    if d == 0 {
        return Err(Error::InvalidParameter("super dimension (0,0)".into()));
    }
    let odd = |i: usize| i >= m;
    let mut r = Matrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            let s = if odd(i) && odd(j) { -Q::one() } else { Q::one() };
            r.set(j * d + i, i * d + j, s);
        }
    }
    HeckeSymmetry::new(d, Q::one(), r)
}

/// Named fixtures: `standard:d:q0` or `super:m:n`.
pub fn fixture_from_spec(spec: &str) -> Result<HeckeSymmetry> {
    let bad = || Error::Parse(format!("bad fixture {spec:?}, expected standard:d:q0 or super:m:n"));
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["standard", d, q0] => {
            let d: usize = d.parse().map_err(|_| bad())?;
            fixture_standard(d, &rational::parse(q0)?)
        }
        ["super", m, n] => fixture_super(m.parse().map_err(|_| bad())?, n.parse().map_err(|_| bad())?),
        _ => Err(bad()),
    }
}

/// JSON layout of an R-matrix file: `d`, `q` as `"p/r"`, and the `d² × d²`
/// entries row-major with row `(k−1)·d + l`, column `(i−1)·d + j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RMatrixFile {
    pub d: usize,
    #[serde(with = "rational::serde_q")]
    pub q: Q,
    pub entries: Vec<Vec<String>>,
}

impl RMatrixFile {
    pub fn from_symmetry(sym: &HeckeSymmetry) -> Self {
        RMatrixFile {
            d: sym.d,
            q: sym.q.clone(),
            entries: sym
                .r
                .to_rows()
                .iter()
                .map(|row| row.iter().map(rational::format).collect())
                .collect(),
        }
    }

    pub fn matrix(&self) -> Result<Matrix> {
        let rows = self
            .entries
            .iter()
            .map(|row| row.iter().map(|s| rational::parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let expected = self.d * self.d;
        let cols = rows.first().map_or(0, Vec::len);
        if rows.len() != expected || rows.iter().any(|r| r.len() != expected) {
            return Err(Error::BadShape {
                rows: rows.len(),
                cols,
                expected,
            });
        }
        Ok(Matrix::from_rows(rows))
    }

    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Shape-checked only; callers decide whether to enforce the axioms.
    pub fn symmetry_unchecked(&self) -> Result<HeckeSymmetry> {
        HeckeSymmetry::new_unchecked(self.d, self.q.clone(), self.matrix()?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Idempotent {
    /// `x_n`, image `S_n`.
    Symmetric,
    /// `y_n`, image `Λ_n`.
    Antisymmetric,
}

/// `L·R` with `L` the lcm of the denominators, stored column-wise like
/// [`TensorAction`].
struct IntAction {
    d: usize,
    columns: Vec<Vec<(usize, BigInt)>>,
    scale: BigInt,
}

impl IntAction {
    fn new(sym: &HeckeSymmetry) -> Self {
        let d = sym.d;
        let scale = (0..d * d)
            .flat_map(|i| sym.r.row(i).iter())
            .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let columns = (0..d * d)
            .map(|col| {
                (0..d * d)
                    .filter(|&row| !sym.r.get(row, col).is_zero())
                    .map(|row| {
                        let x = sym.r.get(row, col);
                        (row, x.numer() * (&scale / x.denom()))
                    })
                    .collect()
            })
            .collect();
        IntAction { d, columns, scale }
    }

    /// `factor·L·R_{g+1}` on `V^{⊗n}`, `g` 0-based, position 0 most significant.
    fn apply(&self, g: usize, n: usize, v: &IntSparseVec, factor: &BigInt) -> IntSparseVec {
        let d = self.d;
        let stride = d.pow((n - 2 - g) as u32);
        let mut out = IntSparseVec::new();
        for (&idx, x) in v {
            let pair = (idx / stride) % (d * d);
            let base = idx - pair * stride;
            let x = x * factor;
            for (kl, r) in &self.columns[pair] {
                *out.entry(base + kl * stride).or_insert_with(BigInt::zero) += &x * r;
            }
        }
        out.retain(|_, x| !x.is_zero());
        out
    }
}

/// Ranks of the images of `x_n` or `y_n` on `V^{⊗n}` for `n = 0..=order`.
///
/// Up to scalars, `Σ_{S_n} u^ℓ T_w = C_n · (Σ_{S_{n−1}} u^ℓ T_w ⊗ 1)` with
/// `C_n` the coset sum, so `im(y_n) = C_n(im(y_{n−1}) ⊗ V)`. Each level
/// therefore only pushes `dim(previous image) · d` vectors through `C_n`.
/// Only ranks matter, so vectors are kept integral and rescaled freely.
fn image_dims(sym: &HeckeSymmetry, kind: Idempotent, order: usize, cap: usize) -> Result<Vec<usize>> {
    if order > cap {
        return Err(Error::StrandCapExceeded { requested: order, cap });
    }
    let u = match kind {
        Idempotent::Symmetric => Q::one(),
        Idempotent::Antisymmetric => -sym.q.recip(),
    };
    let d = sym.d;
    let action = IntAction::new(sym);
    let graded = preserves_content(&sym.r, d);
    let mut dims = vec![1];
    // Image in V^{⊗0}: the scalar line.
    let mut basis: Vec<IntSparseVec> = vec![[(0usize, BigInt::one())].into_iter().collect()];
    for n in 1..=order {
        // With a content-preserving R every vector here is homogeneous, so the
        // image splits by content and each class is reduced on its own.
        let mut classes: BTreeMap<Vec<usize>, IntEchelonBasis> = BTreeMap::new();
        for b in &basis {
            for a in 0..d {
                let v: IntSparseVec = b.iter().map(|(&idx, x)| (idx * d + a, x.clone())).collect();
                let v = coset_apply(&action, &u, n, v);
                let Some((&lead, _)) = v.iter().next() else { continue };
                let key = if graded { content(lead, d, n) } else { Vec::new() };
                classes.entry(key).or_default().insert(v);
            }
        }
        dims.push(classes.values().map(IntEchelonBasis::len).sum());
        basis = classes.values().flat_map(|c| c.vectors().cloned()).collect();
    }
    Ok(dims)
}

/// A nonzero integer multiple of `Σ_{j=1..n} u^{n−j} R_j R_{j+1} ⋯ R_{n−1} v`.
///
/// With `u = a/b` and `R = R'/L`, the term with `k` factors of `R` is scaled
/// by `(bL)^{n−1}`, giving `a^k (bL)^{n−1−k} R'^k v`.
fn coset_apply(action: &IntAction, u: &Q, n: usize, v: IntSparseVec) -> IntSparseVec {
    let (a, b) = (u.numer(), u.denom());
    let bl = b * &action.scale;
    let steps = n.saturating_sub(1);
    let f = num_traits::pow(bl.clone(), steps);
    let mut acc: IntSparseVec = v.iter().map(|(&i, x)| (i, x * &f)).collect();
    let mut w = v;
    for (k, g) in (0..steps).rev().enumerate() {
        w = action.apply(g, n, &w, a);
        let f = num_traits::pow(bl.clone(), steps - 1 - k);
        for (idx, x) in &w {
            *acc.entry(*idx).or_insert_with(BigInt::zero) += x * &f;
        }
    }
    acc.retain(|_, x| !x.is_zero());
    make_primitive(&mut acc);
    acc
}

/// `R^{kl}_{ij} ≠ 0` only when `{k, l} = {i, j}` as multisets.
fn preserves_content(r: &Matrix, d: usize) -> bool {
    (0..d * d).all(|col| {
        let (i, j) = (col / d, col % d);
        (0..d * d).all(|row| r.get(row, col).is_zero() || row == col || row == j * d + i)
    })
}

/// Multiplicity of each letter in the base-`d` digits of a tensor index.
fn content(mut idx: usize, d: usize, n: usize) -> Vec<usize> {
    let mut counts = vec![0; d];
    for _ in 0..n {
        counts[idx % d] += 1;
        idx /= d;
    }
    counts
}

/// `dim Λ_n = rank y_n` on `V^{⊗n}` for `n = 0..=order`.
pub fn dims_lambda(sym: &HeckeSymmetry, order: usize, cap: usize) -> Result<Vec<usize>> {
    image_dims(sym, Idempotent::Antisymmetric, order, cap)
}

/// `dim S_n = rank x_n` on `V^{⊗n}` for `n = 0..=order`.
pub fn dims_s(sym: &HeckeSymmetry, order: usize, cap: usize) -> Result<Vec<usize>> {
    image_dims(sym, Idempotent::Symmetric, order, cap)
}

pub fn dims_to_series(dims: &[usize]) -> TruncatedSeries {
    TruncatedSeries::new(dims.iter().map(|&x| rational::int(x as i64)).collect())
}

/// Padé reconstruction of `P_Λ`, required to have a numerator with only
/// negative roots and a denominator with only positive roots.
pub fn poincare_lambda(sym: &HeckeSymmetry, order: usize, bounds: (usize, usize), cap: usize) -> Result<RationalFunction> {
    let dims = dims_lambda(sym, order, cap)?;
    let r = series::pade_reconstruct(&dims_to_series(&dims), bounds.0, bounds.1)?;
    check_root_signs(&r)?;
    Ok(r)
}

/// Padé reconstruction of `P_S` from `dim S_n`.
pub fn poincare_s(sym: &HeckeSymmetry, order: usize, bounds: (usize, usize), cap: usize) -> Result<RationalFunction> {
    let dims = dims_s(sym, order, cap)?;
    series::pade_reconstruct(&dims_to_series(&dims), bounds.0, bounds.1)
}

pub fn check_root_signs(r: &RationalFunction) -> Result<()> {
    if !series::roots_all_negative(&r.numerator) {
        return Err(Error::RootSign(format!("numerator {} has a non-negative or complex root", r.numerator)));
    }
    if !series::roots_all_positive(&r.denominator) {
        return Err(Error::RootSign(format!("denominator {} has a non-positive or complex root", r.denominator)));
    }
    Ok(())
}
