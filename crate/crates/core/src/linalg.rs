//! Exact dense and sparse linear algebra over ℚ.
//!
//! Rank and determinant go through fraction-free (Bareiss) elimination on
//! integer rows obtained by clearing denominators row by row.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn scale(&self, s: &Q) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn rank(&self) -> usize {
        bareiss(integer_rows(self), self.cols).0
    }

    /// Exact determinant of a square matrix.
    pub fn determinant(&self) -> Q {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        if self.rows == 0 {
            return Q::one();
        }
        let mut scale = BigInt::one();
        let rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let (row, l) = clear_denominators(self.row(i));
                scale *= l;
                row
            })
            .collect();
        let (rank, det) = bareiss(rows, self.cols);
        if rank < self.rows {
            Q::zero()
        } else {
            Q::new(det, scale)
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

fn clear_denominators(row: &[Q]) -> (Vec<BigInt>, BigInt) {
    let l = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints = row.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    (ints, l)
}

fn integer_rows(m: &Matrix) -> Vec<Vec<BigInt>> {
    (0..m.rows).map(|i| clear_denominators(m.row(i)).0).collect()
}

/// Fraction-free elimination. Returns the rank and, for a full-rank square
/// input, the signed determinant.
fn bareiss(mut a: Vec<Vec<BigInt>>, cols: usize) -> (usize, BigInt) {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut sign = 1i8;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            sign = -sign;
        }
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            for j in c + 1..cols {
                let v = &pivot_row[c] * &row[j] - &row[c] * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    let det = if sign < 0 { -prev } else { prev };
    (r, det)
}

/// Solves `a·x = b` exactly. Free variables are set to zero; `None` when the
/// system is inconsistent.
pub fn solve(a: &Matrix, b: &[Q]) -> Option<Vec<Q>> {
    assert_eq!(a.rows, b.len(), "right-hand side length");
    let n = a.cols;
    let rows: Vec<Vec<BigInt>> = (0..a.rows)
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.push(b[i].clone());
            clear_denominators(&row).0
        })
        .collect();
    let (ech, pivots) = bareiss_echelon(rows, n);
    if ech[pivots.len()..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![Q::zero(); n];
    for (r, &c) in pivots.iter().enumerate().rev() {
        let mut acc = Q::from_integer(ech[r][n].clone());
        for j in c + 1..n {
            if !ech[r][j].is_zero() {
                acc -= Q::from_integer(ech[r][j].clone()) * &x[j];
            }
        }
        x[c] = acc / Q::from_integer(ech[r][c].clone());
    }
    Some(x)
}

/// Bareiss forward elimination choosing pivots among the first `pivot_cols`
/// columns and updating every column. Returns the echelon rows and the pivot
/// column of each leading row.
fn bareiss_echelon(mut a: Vec<Vec<BigInt>>, pivot_cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let rows = a.len();
    let width = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    for c in 0..pivot_cols {
        let r = pivots.len();
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            for j in c + 1..width {
                let v = &pivot_row[c] * &row[j] - &row[c] * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
    }
    (a, pivots)
}

/// Sparse vector keyed by coordinate index.
pub type SparseVec = BTreeMap<usize, Q>;

/// Incrementally maintained row-echelon basis of a subspace of ℚ^N.
///
/// Each stored vector has a distinct leading index and is scaled to 1 there.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    pivots: BTreeMap<usize, SparseVec>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pivots.is_empty()
    }

    /// Reduces `v` against the basis; if a nonzero remainder is left it is
    /// added. Returns whether the dimension grew.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        v.retain(|_, x| !x.is_zero());
        loop {
            let Some((&lead, coef)) = v.iter().next() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(b) => {
                    let coef = coef.clone();
                    for (k, x) in b {
                        let e = v.entry(*k).or_insert_with(Q::zero);
                        *e -= &coef * x;
                        if e.is_zero() {
                            v.remove(k);
                        }
                    }
                }
                None => {
                    let inv = coef.recip();
                    for x in v.values_mut() {
                        *x *= &inv;
                    }
                    self.pivots.insert(lead, v);
                    return true;
                }
            }
        }
    }

    pub fn vectors(&self) -> impl Iterator<Item = &SparseVec> {
        self.pivots.values()
    }
}

/// Sparse integer vector keyed by coordinate index.
pub type IntSparseVec = BTreeMap<usize, BigInt>;

/// Fraction-free variant of [`EchelonBasis`] over ℤ: stored vectors are
/// primitive, and reduction cross-multiplies instead of dividing.
#[derive(Clone, Debug, Default)]
pub struct IntEchelonBasis {
    pivots: BTreeMap<usize, IntSparseVec>,
}

impl IntEchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn insert(&mut self, mut v: IntSparseVec) -> bool {
        v.retain(|_, x| !x.is_zero());
        loop {
            let Some((&lead, coef)) = v.iter().next() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(b) => {
                    // v ← p·v − c·b with p, c divided by their gcd.
                    let p = &b[&lead];
                    let g = p.gcd(coef);
                    let (p, c) = (p / &g, coef / &g);
                    for x in v.values_mut() {
                        *x *= &p;
                    }
                    for (k, x) in b {
                        let e = v.entry(*k).or_insert_with(BigInt::zero);
                        *e -= &c * x;
                        if e.is_zero() {
                            v.remove(k);
                        }
                    }
                    make_primitive(&mut v);
                }
                None => {
                    make_primitive(&mut v);
                    self.pivots.insert(lead, v);
                    return true;
                }
            }
        }
    }

    pub fn vectors(&self) -> impl Iterator<Item = &IntSparseVec> {
        self.pivots.values()
    }
}

/// Divides out the gcd of the entries.
pub fn make_primitive(v: &mut IntSparseVec) {
    let g = v.values().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.values_mut() {
            *x /= &g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn determinant_small() {
        assert_eq!(m(&[&[1, 2], &[3, 4]]).determinant(), int(-2));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant(), int(-1));
        assert_eq!(m(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 4]]).determinant(), int(24));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant(), int(0));
        let h = Matrix::from_rows(vec![
            vec![int(1), frac(1, 2)],
            vec![frac(1, 2), frac(1, 3)],
        ]);
        assert_eq!(h.determinant(), frac(1, 12));
    }

    #[test]
    fn rank_with_skipped_columns() {
        assert_eq!(m(&[&[0, 1, 2], &[0, 2, 4], &[0, 0, 1]]).rank(), 2);
        assert_eq!(m(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(Matrix::identity(5).rank(), 5);
        assert_eq!(m(&[&[1, 1, 1, 1]]).rank(), 1);
    }

    #[test]
    fn echelon_matches_dense_rank() {
        let rows = [[1, 2, 0, 3], [2, 4, 0, 6], [0, 1, 1, 0], [1, 3, 1, 3]];
        let mut basis = EchelonBasis::new();
        for r in rows {
            basis.insert(r.iter().enumerate().map(|(i, &x)| (i, int(x))).collect());
        }
        let dense = m(&[&rows[0], &rows[1], &rows[2], &rows[3]]);
        assert_eq!(basis.len(), dense.rank());
        assert_eq!(basis.len(), 2);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[2, 1], &[1, 3]]);
        assert_eq!(solve(&a, &[int(3), int(5)]).unwrap(), vec![frac(4, 5), frac(7, 5)]);
        let s = m(&[&[1, 2], &[2, 4]]);
        assert!(solve(&s, &[int(1), int(3)]).is_none());
        let x = solve(&s, &[int(1), int(2)]).unwrap();
        assert_eq!(x, vec![int(1), int(0)]);
        let wide = m(&[&[0, 1, 1]]);
        assert_eq!(solve(&wide, &[int(2)]).unwrap(), vec![int(0), int(2), int(0)]);
    }
}
