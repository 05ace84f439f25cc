//! Integer partitions and the `m`-restricted / `m`-trivial combinatorics
//! that label simple Harish-Chandra bimodules at `c = r/m`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers, stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in weakly decreasing order. Zero parts are
    /// only allowed at the tail and are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part inside {parts:?}")));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty when `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Consecutive differences `λ_i − λ_{i+1}`, including the last part minus zero.
    pub fn differences(&self) -> Vec<usize> {
        (0..self.parts.len()).map(|i| self.part(i) - self.part(i + 1)).collect()
    }

    /// Inverse of [`Partition::differences`].
    fn from_differences(diffs: &[usize]) -> Self {
        let mut parts = vec![0; diffs.len()];
        let mut acc = 0;
        for i in (0..diffs.len()).rev() {
            acc += diffs[i];
            parts[i] = acc;
        }
        Partition::new(parts).expect("partial sums of non-negative differences decrease")
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (0..cols).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect();
        Partition { parts }
    }

    /// Whether the Young diagram of `other` fits inside that of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Componentwise `self + k * other`.
    pub fn add_scaled(&self, other: &Partition, k: usize) -> Partition {
        let len = self.len().max(other.len());
        let parts = (0..len).map(|i| self.part(i) + k * other.part(i)).collect();
        Partition::new(parts).expect("sum of partitions is a partition")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "{}", text.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad partition part {p:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::Parse(format!("partition {s:?} has a zero part")));
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The unique pair `(μ, ν)` with `μ` `m`-restricted and `λ = μ + mν`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedDecomposition {
    pub mu: Partition,
    pub nu: Partition,
    pub m: usize,
}

/// Splits every consecutive difference of `lambda` by the division algorithm
/// modulo `m`: remainders give `μ`, quotients give `ν`.
pub fn decompose(lambda: &Partition, m: usize) -> Result<RestrictedDecomposition> {
    if m < 2 {
        return Err(Error::Parameter(format!("decompose needs m >= 2, got {m}")));
    }
    let diffs = lambda.differences();
    let rem: Vec<usize> = diffs.iter().map(|d| d % m).collect();
    let quot: Vec<usize> = diffs.iter().map(|d| d / m).collect();
    Ok(RestrictedDecomposition { mu: Partition::from_differences(&rem), nu: Partition::from_differences(&quot), m })
}

pub fn is_m_restricted(lambda: &Partition, m: usize) -> bool {
    lambda.differences().iter().all(|&d| d < m)
}

/// `(m−1, …, m−1, b)` with `0 ≤ b < m−1`.
pub fn is_m_trivial(lambda: &Partition, m: usize) -> Result<bool> {
    if m < 2 {
        return Err(Error::Parameter(format!("m-trivial needs m >= 2, got {m}")));
    }
    let parts = lambda.parts();
    let full = parts.iter().take_while(|&&p| p == m - 1).count();
    Ok(match &parts[full..] {
        [] => true,
        [b] => *b < m - 1,
        _ => false,
    })
}

/// The unique `m`-trivial partition of size `k`.
pub fn triv_partition(k: usize, m: usize) -> Result<Partition> {
    if m < 2 {
        return Err(Error::Parameter(format!("Triv needs m >= 2, got {m}")));
    }
    let mut parts = vec![m - 1; k / (m - 1)];
    let rem = k % (m - 1);
    if rem > 0 {
        parts.push(rem);
    }
    Partition::new(parts)
}

/// Partitions of `n` whose `m`-restricted part is `m`-trivial, in canonical order.
pub fn phi_image_labels(n: usize, m: usize) -> Result<Vec<Partition>> {
    if m < 2 || m > n {
        return Err(Error::Parameter(format!("phi image labels need 2 <= m <= n, got m={m}, n={n}")));
    }
    let mut out = Vec::new();
    for lambda in enumerate_partitions(n) {
        if is_m_trivial(&decompose(&lambda, m)?.mu, m)? {
            out.push(lambda);
        }
    }
    Ok(out)
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first and `(1^n)` last.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

/// Number of partitions of `n`, counted by largest part.
pub fn partition_count(n: usize) -> usize {
    let mut table = vec![0usize; n + 1];
    table[0] = 1;
    for k in 1..=n {
        for total in k..=n {
            table[total] += table[total - k];
        }
    }
    table[n]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_decomposition() {
        let d = decompose(&p("7,5,1,1"), 3).unwrap();
        assert_eq!(d.mu, p("4,2,1,1"));
        assert_eq!(d.nu, p("1,1"));
    }

    #[test]
    fn decompose_edge_cases() {
        let d = decompose(&Partition::empty(), 4).unwrap();
        assert!(d.mu.is_empty() && d.nu.is_empty());
        let d = decompose(&p("3,1"), 2).unwrap();
        assert_eq!((d.mu, d.nu), (p("1,1"), p("1")));
        assert!(matches!(decompose(&p("3"), 1), Err(Error::Parameter(_))));
    }

    #[test]
    fn restricted_and_trivial() {
        assert!(is_m_restricted(&p("4,2,1,1"), 3));
        assert!(!is_m_restricted(&p("3"), 3));
        assert!(is_m_restricted(&Partition::empty(), 5));
        assert!(is_m_trivial(&p("2,2,1"), 3).unwrap());
        assert!(is_m_trivial(&p("2,2,2"), 3).unwrap());
        assert!(!is_m_trivial(&p("2,1,1"), 3).unwrap());
        assert!(is_m_trivial(&p("1,1,1,1,1"), 2).unwrap());
        assert!(is_m_trivial(&Partition::empty(), 2).unwrap());
    }

    #[test]
    fn triv_values() {
        assert_eq!(triv_partition(7, 3).unwrap(), p("2,2,2,1"));
        assert_eq!(triv_partition(0, 3).unwrap(), Partition::empty());
        assert_eq!(triv_partition(5, 2).unwrap(), p("1,1,1,1,1"));
    }

    #[test]
    fn image_labels_small() {
        assert_eq!(phi_image_labels(2, 2).unwrap(), vec![p("2"), p("1,1")]);
        assert_eq!(phi_image_labels(3, 2).unwrap(), vec![p("3"), p("1,1,1")]);
        assert_eq!(phi_image_labels(4, 2).unwrap(), vec![p("4"), p("3,1"), p("2,2"), p("1,1,1,1")]);
        assert!(phi_image_labels(3, 4).is_err());
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(3), vec![p("3"), p("2,1"), p("1,1,1")]);
        assert_eq!(enumerate_partitions(10).len(), 42);
        assert_eq!(partition_count(10), 42);
    }

    #[test]
    fn text_form() {
        assert_eq!(p("7,5,1,1").to_string(), "7,5,1,1");
        assert_eq!(p("").to_string(), "");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0,1".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p("3,2").conjugate(), p("2,2,1"));
    }
}
