//! Slow, independent oracles used to cross-check the library.
#![allow(dead_code)]

use std::collections::BTreeMap;

use hecke_poincare::{Partition, Q};
use num_traits::{One, Zero};

/// Kostka number: semistandard tableaux of shape `shape` and content
/// `content` (any composition), counted by peeling horizontal strips off
/// for the largest letter.
pub fn kostka(shape: &[usize], content: &[usize]) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(shape.iter().all(|&p| p == 0));
    };
    let mut total = 0;
    let mut inner = shape.to_vec();
    strips(shape, 0, last, &mut inner, &mut |mu| total += kostka(mu, rest));
    total
}

/// Calls `f` on every `μ ⊆ λ` with `λ/μ` a horizontal strip of size `left`.
fn strips(lambda: &[usize], row: usize, left: usize, mu: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if row == lambda.len() {
        if left == 0 {
            f(mu);
        }
        return;
    }
    let floor = lambda.get(row + 1).copied().unwrap_or(0);
    let max_take = (lambda[row] - floor).min(left);
    for take in 0..=max_take {
        mu[row] = lambda[row] - take;
        strips(lambda, row + 1, left - take, mu, f);
    }
    mu[row] = lambda[row];
}

/// All compositions of `total` into `parts` nonnegative parts.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn padded(p: &Partition, len: usize) -> Vec<usize> {
    (1..=len).map(|i| p.part(i)).collect()
}

/// `c^γ_{λμ}` for every `γ`, from monomial coefficients of `s_λ s_μ` in
/// `|λ| + |μ|` variables and the unitriangular Kostka matrix.
pub fn lr_oracle(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    let size = lambda.weight() + mu.weight();
    let vars = size.max(1);
    // Coefficient of x^γ in s_λ s_μ: Σ_{α+β=γ} K(λ,α) K(μ,β).
    let product = |gamma: &[usize]| -> i64 {
        let mut sum = 0;
        for alpha in compositions(lambda.weight(), vars) {
            if alpha.iter().zip(gamma).any(|(a, g)| a > g) {
                continue;
            }
            let beta: Vec<usize> = gamma.iter().zip(&alpha).map(|(g, a)| g - a).collect();
            sum += (kostka(&padded(lambda, vars), &alpha) * kostka(&padded(mu, vars), &beta)) as i64;
        }
        sum
    };
    let mut coeffs: Vec<(Partition, i64)> = Vec::new();
    for gamma in Partition::all(size) {
        let g = padded(&gamma, vars);
        let mut c = product(&g);
        for (prev, cp) in &coeffs {
            c -= cp * kostka(&padded(prev, vars), &g) as i64;
        }
        assert!(c >= 0, "negative coefficient for {gamma}");
        coeffs.push((gamma, c));
    }
    coeffs.into_iter().filter(|(_, c)| *c > 0).map(|(p, c)| (p, c as u64)).collect()
}

/// `s_λ(v)` as `Σ_α K(λ, α) v^α`.
pub fn schur_oracle(lambda: &Partition, values: &[Q]) -> Q {
    let r = values.len();
    if lambda.len() > r {
        return Q::zero();
    }
    let shape = padded(lambda, r.max(lambda.len()));
    let mut total = Q::zero();
    for alpha in compositions(lambda.weight(), r) {
        let k = kostka(&shape, &alpha);
        if k == 0 {
            continue;
        }
        let mono: Q = alpha
            .iter()
            .zip(values)
            .map(|(&e, v)| (0..e).fold(Q::one(), |acc, _| acc * v))
            .product();
        total += Q::from_integer(k.into()) * mono;
    }
    total
}

/// Number of `(m|n)`-semistandard tableaux of shape `λ`: letters `1..=m`
/// strictly increase down columns, letters `m+1..=m+n` strictly increase
/// along rows, and all entries weakly increase along rows and columns.
pub fn hook_tableaux(lambda: &Partition, m: usize, n: usize) -> u64 {
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = lambda.parts().iter().map(|&len| vec![0; len]).collect();
    fn fill(i: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, m: usize, d: usize) -> u64 {
        let Some(&(r, c)) = cells.get(i) else { return 1 };
        let mut count = 0;
        for v in 1..=d {
            let odd = v > m;
            if c > 0 {
                let left = grid[r][c - 1];
                if v < left || (odd && v == left) {
                    continue;
                }
            }
            if r > 0 {
                let up = grid[r - 1][c];
                if v < up || (!odd && v == up) {
                    continue;
                }
            }
            grid[r][c] = v;
            count += fill(i + 1, cells, grid, m, d);
        }
        grid[r][c] = 0;
        count
    }
    fill(0, &cells, &mut grid, m, m + n)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
