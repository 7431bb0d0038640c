//! Integer partitions and the birank predicates on them.
//!
//! Parts beyond the length of a partition read as zero, so `λ.part(i)` is
//! defined for every `i ≥ 1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is lexicographic on the parts; listings sort it descending.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros. An increase between
    /// adjacent parts is an error rather than something to sort away.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?}: part {} precedes larger part {}",
                w[0], w[1]
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}: interior zero")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle `(a^b)`: `b` rows of length `a`.
    pub fn rectangle(a: usize, b: usize) -> Self {
        if a == 0 {
            return Self::empty();
        }
        Partition { parts: vec![a; b] }
    }

    /// Concatenates blocks `(value, multiplicity)` in order, dropping zero
    /// values. Panics if the blocks are not weakly decreasing.
    pub fn from_blocks(blocks: &[(usize, usize)]) -> Self {
        let parts = blocks
            .iter()
            .flat_map(|&(v, k)| std::iter::repeat(v).take(k))
            .collect();
        Self::new(parts).expect("blocks must be weakly decreasing")
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` with 1-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "parts are 1-indexed");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Whether the Young diagram of `other` fits inside that of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// `λ'_i = #{j : λ_j ≥ i}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// All partitions of `n`, in descending lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions of weight at most `n`, grouped by weight.
    pub fn up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all).collect()
    }
}

fn fill(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,2,2"`; `"-"` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                match t.parse::<usize>() {
                    Ok(0) | Err(_) => Err(Error::InvalidPartition(format!("bad part {t:?} in {s:?}"))),
                    Ok(v) => Ok(v),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Degrees `(m, n)` of the numerator and denominator of the exterior
/// Poincaré series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Birank {
    pub m: usize,
    pub n: usize,
}

impl Birank {
    pub fn new(m: usize, n: usize) -> Self {
        Birank { m, n }
    }
}

impl fmt::Display for Birank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.m, self.n)
    }
}

impl FromStr for Birank {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad birank {s:?}, expected m,n"));
        let (m, n) = s.split_once(',').ok_or_else(bad)?;
        Ok(Birank {
            m: m.trim().parse().map_err(|_| bad())?,
            n: n.trim().parse().map_err(|_| bad())?,
        })
    }
}

/// `λ_{m+1} ≤ n`: the partitions indexing nonzero simple comodules.
pub fn in_gamma(lambda: &Partition, b: Birank) -> bool {
    lambda.part(b.m + 1) <= b.n
}

/// `λ_m ≥ n`, for `λ ∈ Γ_{m,n}`.
pub fn is_splitting(lambda: &Partition, b: Birank) -> Result<bool> {
    if !in_gamma(lambda, b) {
        return Err(Error::NotInGamma {
            partition: lambda.to_string(),
            m: b.m,
            n: b.n,
        });
    }
    // λ_0 is taken as +∞ so that every partition is splitting when m = 0.
    Ok(b.m == 0 || lambda.part(b.m) >= b.n)
}

/// The pieces of `λ = ((n^m) + α) ∪ β` for a splitting `λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitDecomposition {
    pub alpha: Partition,
    pub beta: Partition,
}

impl SplitDecomposition {
    pub fn recompose(&self, b: Birank) -> Partition {
        let mut parts: Vec<usize> = (1..=b.m).map(|i| b.n + self.alpha.part(i)).collect();
        parts.extend_from_slice(self.beta.parts());
        Partition::new(parts).expect("recomposition of a valid decomposition")
    }
}

pub fn split_decompose(lambda: &Partition, b: Birank) -> Result<SplitDecomposition> {
    if !is_splitting(lambda, b)? {
        return Err(Error::NotSplitting {
            partition: lambda.to_string(),
            m: b.m,
            n: b.n,
        });
    }
    let alpha = (1..=b.m).map(|i| lambda.part(i) - b.n).collect();
    let beta = lambda.parts().iter().skip(b.m).copied().collect();
    Ok(SplitDecomposition {
        alpha: Partition::new(alpha)?,
        beta: Partition::new(beta)?,
    })
}

/// The `min(k, m) + 1` summands `((n+1)^{m−l}, n^{2l+1}, (n−1)^{k−l})` of
/// `I_{((n+1)^m, n^{k+1})} ⊗ I_{(1^k)}^*`, for `l = 0..=min(k, m)`.
pub fn dual_splitting_partitions(b: Birank, k: usize) -> Vec<Partition> {
    let (m, n) = (b.m, b.n);
    (0..=k.min(m))
        .map(|l| {
            Partition::from_blocks(&[
                (n + 1, m - l),
                (n, 2 * l + 1),
                (n.saturating_sub(1), k - l),
            ])
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn construction_normalizes_and_rejects() {
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap(), p("3,1"));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert!("2,,1".parse::<Partition>().is_err());
        assert!("0".parse::<Partition>().is_err());
        assert_eq!(p("-"), Partition::empty());
        assert_eq!(p("3,2,2").to_string(), "3,2,2");
        assert_eq!(Partition::empty().to_string(), "-");
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("3,2,2").conjugate(), p("3,3,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("1,1,1").conjugate(), p("3"));
    }

    #[test]
    fn conjugation_is_an_involution_up_to_20() {
        for n in 0..=20 {
            for lam in Partition::all(n) {
                let c = lam.conjugate();
                assert_eq!(c.weight(), n);
                assert_eq!(c.conjugate(), lam);
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let four = Partition::all(4);
        assert_eq!(four.first().unwrap(), &p("4"));
        assert_eq!(four.last().unwrap(), &p("1,1,1,1"));
    }

    #[test]
    fn gamma_examples() {
        let b = Birank::new(1, 2);
        assert!(in_gamma(&p("3,2,2"), b));
        assert!(!in_gamma(&p("3,3"), b));
        assert!(in_gamma(&Partition::empty(), b));
        assert!(in_gamma(&Partition::empty(), Birank::new(0, 0)));
    }

    #[test]
    fn splitting_examples() {
        let b = Birank::new(1, 2);
        assert!(is_splitting(&p("3,2,2"), b).unwrap());
        assert!(!is_splitting(&p("1"), b).unwrap());
        assert!(is_splitting(&p("3,3"), b).is_err());
        for m in 1..4 {
            for n in 0..4 {
                let b = Birank::new(m, n);
                assert!(is_splitting(&Partition::rectangle(n, m), b).unwrap());
            }
        }
    }

    #[test]
    fn split_examples() {
        let b = Birank::new(1, 2);
        let d = split_decompose(&p("3,2,2"), b).unwrap();
        assert_eq!((d.alpha.clone(), d.beta.clone()), (p("1"), p("2,2")));
        assert_eq!(d.recompose(b), p("3,2,2"));
        let d = split_decompose(&p("3,2,2,2"), b).unwrap();
        assert_eq!((d.alpha, d.beta), (p("1"), p("2,2,2")));
        let b = Birank::new(2, 3);
        let d = split_decompose(&Partition::rectangle(3, 2), b).unwrap();
        assert!(d.alpha.is_empty() && d.beta.is_empty());
        assert!(matches!(
            split_decompose(&p("1"), Birank::new(1, 2)),
            Err(Error::NotSplitting { .. })
        ));
    }

    #[test]
    fn split_roundtrip_exhaustive() {
        for m in 0..=4 {
            for n in 0..=4 {
                let b = Birank::new(m, n);
                for lam in Partition::up_to(20) {
                    if in_gamma(&lam, b) && is_splitting(&lam, b).unwrap() {
                        let d = split_decompose(&lam, b).unwrap();
                        assert!(d.alpha.len() <= m);
                        assert!(d.beta.part(1) <= n);
                        assert_eq!(d.recompose(b), lam);
                    }
                }
            }
        }
    }

    #[test]
    fn dual_splitting_examples() {
        let b = Birank::new(1, 2);
        assert_eq!(dual_splitting_partitions(b, 1), vec![p("3,2,1"), p("2,2,2")]);
        assert_eq!(dual_splitting_partitions(b, 2), vec![p("3,2,1,1"), p("2,2,2,1")]);
        for (m, n) in [(1, 1), (2, 3), (3, 1)] {
            let b = Birank::new(m, n);
            let expected = Partition::from_blocks(&[(n + 1, m), (n, 1)]);
            assert_eq!(dual_splitting_partitions(b, 0), vec![expected]);
        }
    }

    #[test]
    fn dual_splitting_members_are_splitting_with_expected_weight() {
        for m in 1..=4 {
            for n in 1..=4 {
                let b = Birank::new(m, n);
                for k in 0..=5 {
                    let list = dual_splitting_partitions(b, k);
                    assert_eq!(list.len(), k.min(m) + 1);
                    for lam in list {
                        assert!(in_gamma(&lam, b));
                        assert!(is_splitting(&lam, b).unwrap());
                        assert_eq!(lam.weight() + k, m * (n + 1) + n * (k + 1));
                    }
                }
            }
        }
    }

    #[test]
    fn json_encoding() {
        let lam = p("3,2,2");
        assert_eq!(serde_json::to_string(&lam).unwrap(), "[3,2,2]");
        assert_eq!(serde_json::from_str::<Partition>("[3,2,2]").unwrap(), lam);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
